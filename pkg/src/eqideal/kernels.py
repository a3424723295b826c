"""Kernel selection: the compiled extension when available, else pure Python.

Set ``EQIDEAL_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by tests that compare both backends).
"""

import os

from . import _pykernels

NAMES = (
    "ONE",
    "mono_mul",
    "mono_divides",
    "mono_div",
    "mono_lcm",
    "mono_degree",
    "terms_add",
    "terms_scale",
    "terms_addmul",
    "terms_mul",
    "terms_rename",
)


def _load():
    if os.environ.get("EQIDEAL_PURE_PYTHON"):
        return _pykernels, "python"
    try:
        from . import _kernels
    except ImportError:
        return _pykernels, "python"
    return _kernels, "cython"


_impl, BACKEND = _load()

ONE = _impl.ONE
mono_mul = _impl.mono_mul
mono_divides = _impl.mono_divides
mono_div = _impl.mono_div
mono_lcm = _impl.mono_lcm
mono_degree = _impl.mono_degree
terms_add = _impl.terms_add
terms_scale = _impl.terms_scale
terms_addmul = _impl.terms_addmul
terms_mul = _impl.terms_mul
terms_rename = _impl.terms_rename
