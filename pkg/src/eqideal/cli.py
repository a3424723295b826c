"""Command-line interface: ``eqideal <command> ...``.

Exit codes: 0 for a positive answer or success, 1 for a negative answer,
2 for any error (reported as one line ``error: <kind>: <message>``).
"""

import argparse
import json
import sys
import time

from . import textio as io
from .domain import ca1_extends, ca2_presentation, tuple_orbit_reps
from .errors import EqIdealError, ValidationError
from .field import QQ, field_from_name
from .frontends import (
    PetriNet,
    VectorFamily,
    linsolve,
    member_any,
    petri_reach,
    petri_validate,
    validate_family,
)
from .gb import (
    DEFAULT_FUEL_PASSES,
    DEFAULT_FUEL_STEPS,
    Basis,
    Certificate,
    Stats,
    autoreduce,
    buchberger,
    reduce,
    verify_certificate,
)


class UsageError(EqIdealError):
    kind = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Report:
    """What a command produced: output lines, an answer and exact counters."""

    def __init__(self, answer, lines=(), code=0, stats=None):
        self.answer = answer
        self.lines = list(lines)
        self.code = code
        self.stats = stats or Stats()


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _field(args):
    return field_from_name(args.field)


def _engine_kw(args, stats):
    return dict(
        fuel_steps=args.fuel_steps,
        fuel_passes=args.fuel_passes,
        coprime_filter=args.coprime_filter,
        stats=stats,
    )


def _load_ideal(args):
    return io.parse_ideal(_read(args.ideal), field=_field(args) if args.field != "q" else None)


def _certificate_file(basis, f, cert, field, comments=()):
    head = "".join(f"# {c}\n" for c in comments)
    return head + io.format_certificate(basis.domain, basis.gens, f, cert, field)


# -- commands -------------------------------------------------------------------


def cmd_gb(args):
    ideal = _load_ideal(args)
    stats = Stats()
    G = buchberger(Basis(ideal.domain, ideal.gens), args.fuel_steps, args.fuel_passes,
                   args.coprime_filter, stats=stats)
    history = G.history
    if args.autoreduce:
        G = autoreduce(G)
    text = io.format_ideal(G.domain, G.gens, history, ideal.field)
    return Report("basis", text.splitlines(), 0, stats)


def cmd_member(args):
    ideal = _load_ideal(args)
    f = io.parse_polynomial(args.poly, ideal.domain, ideal.field)
    stats = Stats()
    ans, cert, red = member_any(ideal.domain, ideal.gens, f, **_engine_kw(args, stats))
    if args.certificate:
        notes = []
        if red is not None:
            notes.append(f"instance over {ideal.domain} reduced to {red.basis.domain}")
        _write(args.certificate, _certificate_file(
            cert.basis, red.poly if red else f, cert, ideal.field, notes))
    lines = ["member" if ans else "not-member", "remainder " + io.format_polynomial(
        cert.basis.domain, cert.remainder)]
    return Report(lines[0], lines, 0 if ans else 1, stats)


def cmd_reduce(args):
    ideal = _load_ideal(args)
    if ideal.domain.contains_atoms():
        raise ValidationError(f"reduce works on atom-free domains only, not {ideal.domain}")
    f = io.parse_polynomial(args.poly, ideal.domain, ideal.field)
    stats = Stats()
    B = Basis(ideal.domain, ideal.gens)
    cert = reduce(B, f, args.fuel_steps, stats)
    if args.certificate:
        _write(args.certificate, _certificate_file(B, f, cert, ideal.field))
    return Report("remainder", [io.format_polynomial(B.domain, cert.remainder)], 0, stats)


def cmd_emb_check(args):
    D = io.parse_domain(args.domain)
    p = io.parse_map(args.map, D)
    ok = ca1_extends(D, p)
    return Report("extends" if ok else "no-extension", ["extends" if ok else "no-extension"],
                  0 if ok else 1)


def cmd_emb_pairs(args):
    D = io.parse_domain(args.domain)
    left = io.parse_set(args.left, D)
    right = io.parse_set(args.right, D)
    pairs = ca2_presentation(D, left, right)
    lines = [f"{io.format_map(D, p)} {io.format_map(D, q)}" for p, q in pairs]
    return Report(len(pairs), lines, 0)


def cmd_petri_reach(args):
    pf = io.parse_petri(_read(args.net))
    net = PetriNet(pf.data_domain, pf.places, pf.rules)
    V = net.variable_domain
    s = io.parse_monomial(args.source, V)
    t = io.parse_monomial(args.target, V)
    if args.symmetrize:
        net = petri_validate(net, symmetrize=True)
    stats = Stats()
    res = petri_reach(net, s, t, approximate=args.approximate, **_engine_kw(args, stats))
    if res.answer:
        word = "reachable" if res.exact else "not-excluded"
    else:
        word = "unreachable"
    if args.certificate:
        notes = [] if res.exact else ["net is not reversible; a positive answer is only an upper approximation"]
        _write(args.certificate, _certificate_file(res.certificate.basis, res.poly, res.certificate, QQ, notes))
    return Report(word, [word], 0 if res.answer else 1, stats)


def cmd_linsolve(args):
    field = _field(args)
    ff = io.parse_family(_read(args.family), field)
    fam = VectorFamily(ff.domain, ff.dim, ff.arity, ff.rows)
    D = fam.domain
    b = io.parse_vector(args.target, D, field)
    if args.check_family:
        have = {t for t, _ in fam.rows}
        missing = [t for t in tuple_orbit_reps(D, fam.arity) if t not in have]
        if missing:
            raise ValidationError(
                f"family misses {len(missing)} orbit(s), first {io.format_tuple(D, missing[0])}")
    if not validate_family(fam):
        raise ValidationError("family is not equivariant-consistent")
    stats = Stats()
    res = linsolve(fam, b, check=False, **_engine_kw(args, stats))
    lines = ["solvable" if res.answer else "unsolvable"]
    for c, t, vec in res.combination:
        lines.append(f"combination {io.format_coeff(c)} M{io.format_tuple(D, t)} = {io.format_vector(D, vec)}")
    if args.certificate:
        notes = [line for line in lines[1:]]
        _write(args.certificate, _certificate_file(res.certificate.basis, res.poly, res.certificate, field, notes))
    return Report(lines[0], lines, 0 if res.answer else 1, stats)


def cmd_verify(args):
    cf = io.parse_certificate(_read(args.certificate))
    B = Basis(cf.domain, cf.gens)
    ok = verify_certificate(B, cf.poly, Certificate(cf.steps, cf.remainder))
    word = "valid" if ok else "invalid"
    lines = [word]
    if ok:
        lines.append("member" if cf.remainder.is_zero() else "reduced")
    return Report(word, lines, 0 if ok else 1)


# -- argument handling ------------------------------------------------------------


def _common(p, engine=True):
    p.add_argument("--json", action="store_true", help="emit a machine-readable report")
    p.add_argument("--seedless", action="store_true",
                   help="make every output byte-identical across runs (zero wall time)")
    if engine:
        p.add_argument("--fuel-steps", type=int, default=DEFAULT_FUEL_STEPS)
        p.add_argument("--fuel-passes", type=int, default=DEFAULT_FUEL_PASSES)
        p.add_argument("--coprime-filter", action="store_true",
                       help="skip S-polynomials of variable-disjoint leading monomials")
        p.add_argument("--field", default="q", help="coefficient field: q or gf:<p>")


def build_parser():
    ap = _Parser(prog="eqideal", description="Equivariant ideal membership and its applications.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gb", help="equivariant Groebner basis of an ideal file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--autoreduce", action="store_true")
    _common(p)
    p.set_defaults(run=cmd_gb)

    p = sub.add_parser("member", help="decide ideal membership")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--certificate")
    _common(p)
    p.set_defaults(run=cmd_member)

    p = sub.add_parser("reduce", help="reduce a polynomial by the given generators")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--certificate")
    _common(p)
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser("emb-check", help="does a finite map extend to an embedding")
    p.add_argument("--domain", required=True)
    p.add_argument("--map", required=True)
    _common(p, engine=False)
    p.set_defaults(run=cmd_emb_check)

    p = sub.add_parser("emb-pairs", help="finite presentation of pairs of local embeddings")
    p.add_argument("--domain", required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    _common(p, engine=False)
    p.set_defaults(run=cmd_emb_pairs)

    p = sub.add_parser("petri-reach", help="reachability in a reversible Petri net with data")
    p.add_argument("--net", required=True)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--symmetrize", action="store_true", help="add missing inverse rules")
    p.add_argument("--approximate", action="store_true",
                   help="accept non-reversible nets; positive answers become upper approximations")
    p.add_argument("--certificate")
    _common(p)
    p.set_defaults(run=cmd_petri_reach)

    p = sub.add_parser("linsolve", help="solvability of an orbit-finite linear system")
    p.add_argument("--family", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--check-family", action="store_true",
                   help="require one row per orbit of index tuples")
    p.add_argument("--certificate")
    _common(p)
    p.set_defaults(run=cmd_linsolve)

    p = sub.add_parser("verify", help="replay a certificate file")
    p.add_argument("--certificate", required=True)
    _common(p, engine=False)
    p.set_defaults(run=cmd_verify)
    return ap


def _one_line(text):
    return " ".join(str(text).split())


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        start = time.perf_counter()
        report = args.run(args)
        millis = 0 if args.seedless else round((time.perf_counter() - start) * 1000)
    except EqIdealError as exc:
        print(f"error: {exc.kind}: {_one_line(exc)}", file=err)
        return 2
    except OSError as exc:
        print(f"error: io: {_one_line(exc.strerror or exc)}: {exc.filename}", file=err)
        return 2
    except RecursionError:
        print("error: resource: recursion limit exceeded", file=err)
        return 2
    if args.json:
        s = report.stats
        doc = {
            "answer": report.answer,
            "steps": s.steps,
            "passes": s.passes,
            "added": s.added,
            "millis": millis,
            "output": report.lines,
        }
        if getattr(args, "certificate", None) and args.command != "verify":
            doc["certificate"] = args.certificate
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        for line in report.lines:
            print(line, file=out)
    return report.code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
