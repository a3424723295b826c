"""Compare the compiled kernels with the pure-Python fallback.

Each workload runs in a fresh interpreter per backend (the backend is fixed
at import time) and reports the best of ``--repeat`` timings.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "poly-mul": """
from fractions import Fraction
from eqideal import Polynomial, Ordinal, monomial
xs = [Polynomial.monomial(monomial([(Ordinal.finite(1, i), 1)])) for i in range(8)]
f = sum(xs[1:], xs[0]) + Polynomial.constant(Fraction(1, 3))
def run():
    g = f
    for _ in range(3):
        g = g * f
    return g
""",
    "reduce": """
from eqideal import Basis, Ord, reduce
from eqideal.textio import parse_polynomial
D = Ord(1)
B = Basis(D, [parse_polynomial("x{0}*x{1} - x{1}^2", D), parse_polynomial("x{0}^2 - 1", D)])
f = parse_polynomial("x{0}*x{3}^4*x{7}^3 - x{2}*x{5}^2*x{6}^4 + x{1}^7*x{4}^2", D)
def run():
    return reduce(B, f)
""",
    "buchberger-omega2": """
from eqideal import Basis, Ord, buchberger
from eqideal.textio import parse_polynomial
D = Ord(2)
B = Basis(D, [parse_polynomial("x{<0,1>}^2 - x{<0,0>}*x{<0,2>}", D)])
def run():
    return buchberger(B)
""",
    "member-fin": """
import random
from fractions import Fraction
from eqideal import Basis, Fin, Polynomial, member, monomial
rng = random.Random(1)
D = Fin(4)
def rp():
    return Polynomial((monomial((rng.randrange(4), 1) for _ in range(rng.randint(0, 3))),
                       Fraction(rng.choice([-2, -1, 1, 2]))) for _ in range(3))
cases = [([rp() for _ in range(3)], rp()) for _ in range(30)]
cases = [([g for g in gs if g], f) for gs, f in cases]
def run():
    return [member(Basis(D, gs), f)[0] for gs, f in cases]
""",
}

DRIVER = """
import json, sys, timeit
ns = {}
exec(sys.argv[1], ns)
import eqideal.kernels as k
times = timeit.repeat(ns["run"], number=1, repeat=int(sys.argv[2]))
print(json.dumps({"backend": k.BACKEND, "best": min(times)}))
"""


def measure(code, pure, repeat):
    env = dict(os.environ)
    env.pop("EQIDEAL_PURE_PYTHON", None)
    if pure:
        env["EQIDEAL_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", DRIVER, code, str(repeat)],
                         capture_output=True, text=True, env=env, check=True)
    return json.loads(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--only", choices=sorted(WORKLOADS))
    args = ap.parse_args(argv)
    names = [args.only] if args.only else list(WORKLOADS)
    print(f"{'workload':<20}{'compiled':>12}{'python':>12}{'speedup':>10}")
    for name in names:
        fast = measure(WORKLOADS[name], False, args.repeat)
        slow = measure(WORKLOADS[name], True, args.repeat)
        if fast["backend"] != "cython":
            print(f"{name:<20}{'(not built)':>12}{slow['best']:>11.4f}s{'':>10}")
            continue
        print(f"{name:<20}{fast['best']:>11.4f}s{slow['best']:>11.4f}s{slow['best'] / fast['best']:>9.2f}x")


if __name__ == "__main__":
    main()
