"""Builds the optional compiled kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("EQIDEAL_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            "src/eqideal/_kernels.pyx",
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
        for ext in ext_modules:
            ext.optional = True

setup(ext_modules=ext_modules)
