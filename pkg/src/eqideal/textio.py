"""Parsers and printers for domains, elements, polynomials and the file formats.

Every parser reports failures as :class:`ParseError` with a 1-based line
and column.  Printers emit the canonical form, so ``parse(print(x)) == x``.
"""

from dataclasses import dataclass
from fractions import Fraction

from .domain import Eq, Fin, Lex, LocalEmbedding, Ord, Rat
from .errors import DomainError, EqIdealError, ParseError
from .field import GF, QQ, field_from_name
from .ordinal import Ordinal
from .poly import ONE, Polynomial, monomial


class ElementError(ParseError):
    kind = "domain"


class Reader:
    """Cursor over one line of text with error positions."""

    def __init__(self, text, line=1, col=1):
        self.text = text
        self.pos = 0
        self.line = line
        self.col = col

    def error(self, message, cls=ParseError, at=None):
        at = self.pos if at is None else at
        return cls(message, self.line, self.col + at)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s):
        self.ws()
        return self.text.startswith(s, self.pos)

    def accept(self, s):
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s):
        if not self.accept(s):
            found = self.text[self.pos:self.pos + 8] or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")

    def at_end(self):
        self.ws()
        return self.pos >= len(self.text)

    def end(self):
        if not self.at_end():
            raise self.error(f"unexpected trailing text {self.text[self.pos:]!r}")

    def nat(self):
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[start:start + 8] or "end of input"
            raise self.error(f"expected a number, found {found!r}")
        return int(self.text[start:self.pos])

    def word(self):
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] in "_:"):
            self.pos += 1
        return self.text[start:self.pos]


# -- domains and elements -------------------------------------------------------


def read_domain(r):
    r.ws()
    start = r.pos
    name = r.word()
    if name == "ord":
        r.expect("[")
        k = r.nat()
        r.expect("]")
        if k < 1:
            raise r.error("ord[k] needs k >= 1", at=start)
        return Ord(k)
    if name == "fin":
        r.expect("[")
        d = r.nat()
        r.expect("]")
        if d < 1:
            raise r.error("fin[d] needs d >= 1", at=start)
        return Fin(d)
    if name == "lex":
        r.expect("(")
        left = read_domain(r)
        r.expect(",")
        right = read_domain(r)
        r.expect(")")
        return Lex(left, right)
    if name == "q":
        return Rat()
    if name == "eq":
        return Eq()
    raise r.error(f"unknown domain {name!r}", at=start)


def read_element(r, D):
    r.ws()
    start = r.pos
    if isinstance(D, Ord):
        if r.accept("<"):
            coeffs = [r.nat()]
            while r.accept(","):
                coeffs.append(r.nat())
            r.expect(">")
            if len(coeffs) != D.k:
                raise r.error(f"{D} elements need {D.k} coefficients", ElementError, start)
            return Ordinal(coeffs)
        return Ordinal.finite(D.k, r.nat())
    if isinstance(D, Fin):
        n = r.nat()
        if n >= D.d:
            raise r.error(f"element {n} out of range for {D}", ElementError, start)
        return n
    if isinstance(D, Lex):
        r.expect("(")
        a = read_element(r, D.left)
        r.expect("|")
        b = read_element(r, D.right)
        r.expect(")")
        return (a, b)
    neg = r.accept("-")
    num = r.nat()
    den = 1
    if r.accept("/"):
        den = r.nat()
        if den == 0:
            raise r.error("zero denominator", ElementError, start)
    return Fraction(-num if neg else num, den)


def format_element(D, e):
    if isinstance(D, Ord):
        if D.k == 1:
            return str(e[0])
        return "<" + ",".join(map(str, e)) + ">"
    if isinstance(D, Fin):
        return str(e)
    if isinstance(D, Lex):
        return f"({format_element(D.left, e[0])}|{format_element(D.right, e[1])})"
    return str(Fraction(e))


# -- coefficients, monomials, polynomials --------------------------------------


def read_coeff(r, field):
    neg = r.accept("-")
    num = r.nat()
    den = 1
    if r.accept("/"):
        at = r.pos
        den = r.nat()
        if den == 0:
            raise r.error("zero denominator", at=at)
    try:
        return field.from_ratio(-num if neg else num, den)
    except DomainError as exc:
        raise r.error(str(exc)) from None


def format_coeff(c):
    return str(c)


def _read_factor(r, D):
    r.expect("x{")
    e = read_element(r, D)
    r.expect("}")
    deg = 1
    if r.accept("^"):
        deg = r.nat()
    return e, deg


def _read_term(r, D, field):
    """One product of coefficients and variable factors."""
    coeff = field.coerce(1)
    factors = []
    while True:
        if r.peek("x{"):
            factors.append(_read_factor(r, D))
        elif r.peek("-") or (r.pos < len(r.text) and r.text[r.pos].isdigit()):
            coeff = coeff * read_coeff(r, field)
        else:
            found = r.text[r.pos:r.pos + 8] or "end of input"
            raise r.error(f"expected a coefficient or x{{...}}, found {found!r}")
        if not r.accept("*"):
            return coeff, monomial(factors)


def read_polynomial(r, D, field=QQ):
    terms = []
    sign = -1 if r.accept("-") else 1
    while True:
        c, m = _read_term(r, D, field)
        terms.append((m, c if sign > 0 else -c))
        if r.accept("+"):
            sign = 1
        elif r.accept("-"):
            sign = -1
        else:
            break
    return Polynomial(terms)


def read_monomial(r, D):
    if r.accept("1"):
        return ONE
    factors = [_read_factor(r, D)]
    while r.accept("*"):
        factors.append(_read_factor(r, D))
    return monomial(factors)


def format_monomial(D, m):
    if not m:
        return "1"
    parts = []
    for v, d in reversed(m):
        s = "x{" + format_element(D, v) + "}"
        parts.append(s if d == 1 else f"{s}^{d}")
    return "*".join(parts)


def _negative(c):
    return isinstance(c, Fraction) and c < 0


def format_polynomial(D, f):
    if f.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(f.terms):
        neg = _negative(c)
        mag = -c if neg else c
        if not m:
            body = format_coeff(mag)
        elif mag == 1:
            body = format_monomial(D, m)
        else:
            body = f"{format_coeff(mag)}*{format_monomial(D, m)}"
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- maps, sets, tuples, vectors ---------------------------------------------------


def read_map_body(r, D, close=None):
    pairs = []
    if close is not None and r.peek(close):
        return LocalEmbedding()
    while True:
        a = read_element(r, D)
        r.expect("->")
        b = read_element(r, D)
        pairs.append((a, b))
        if not r.accept(","):
            break
    try:
        return LocalEmbedding(pairs)
    except DomainError as exc:
        raise r.error(str(exc), ElementError) from None


def read_map(r, D):
    r.expect("{")
    m = read_map_body(r, D, "}")
    r.expect("}")
    return m


def read_set(r, D):
    r.expect("{")
    out = []
    if not r.peek("}"):
        out.append(read_element(r, D))
        while r.accept(","):
            out.append(read_element(r, D))
    r.expect("}")
    return out


def format_map(D, p, braces=True):
    body = ",".join(f"{format_element(D, a)}->{format_element(D, b)}" for a, b in p.graph)
    return "{" + body + "}" if braces else body


def read_tuple(r, D):
    r.expect("(")
    out = [read_element(r, D)]
    while r.accept(","):
        out.append(read_element(r, D))
    r.expect(")")
    return tuple(out)


def format_tuple(D, t):
    return "(" + ",".join(format_element(D, e) for e in t) + ")"


def read_vector(r, D, field=QQ):
    """A formal sum ``c*u[(t1,...,td)] + ...``; ``0`` is the zero vector."""
    acc = {}
    sign = -1 if r.accept("-") else 1
    while True:
        coeff = field.coerce(1)
        if not r.peek("u["):
            coeff = read_coeff(r, field)
            if not r.accept("*"):
                if coeff != 0:
                    raise r.error("a vector term needs u[...]")
                coeff = None
        if coeff is not None:
            r.expect("u[")
            t = read_tuple(r, D) if r.peek("(") else (read_element(r, D),)
            r.expect("]")
            acc[t] = acc.get(t, 0) + (coeff if sign > 0 else -coeff)
        if r.accept("+"):
            sign = 1
        elif r.accept("-"):
            sign = -1
        else:
            break
    return {t: c for t, c in sorted(acc.items()) if c}


def format_vector(D, v):
    if not v:
        return "0"
    out = []
    for i, (t, c) in enumerate(sorted(v.items())):
        neg = _negative(c)
        mag = -c if neg else c
        body = f"{format_coeff(mag)}*u[{format_tuple(D, t)}]"
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- whole-string helpers -----------------------------------------------------


def _whole(reader_fn, text, *args):
    r = Reader(text)
    value = reader_fn(r, *args)
    r.end()
    return value


def parse_domain(text):
    return _whole(read_domain, text)


def parse_element(text, D):
    return _whole(read_element, text, D)


def parse_polynomial(text, D, field=QQ):
    return _whole(read_polynomial, text, D, field)


def parse_monomial(text, D):
    return _whole(read_monomial, text, D)


def parse_map(text, D):
    return _whole(read_map, text, D)


def parse_set(text, D):
    return _whole(read_set, text, D)


def parse_vector(text, D, field=QQ):
    return _whole(read_vector, text, D, field)


# -- file formats ---------------------------------------------------------------


def _lines(text):
    """Yield (line_no, keyword, Reader over the rest) for meaningful lines."""
    for no, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lead = len(raw) - len(raw.lstrip())
        word_end = lead
        while word_end < len(raw) and not raw[word_end].isspace():
            word_end += 1
        yield no, raw[lead:word_end], Reader(raw[word_end:], no, word_end + 1), lead + 1


@dataclass(frozen=True)
class IdealFile:
    domain: object
    gens: tuple
    field: object = QQ


def _need_domain(D, no, col):
    if D is None:
        raise ParseError("'domain' must come first", no, col)


def parse_ideal(text, field=None):
    """Parse an ideal file; an explicit ``field`` wins over a ``field`` line."""
    explicit = field is not None
    D = None
    gens = []
    for no, key, r, col in _lines(text):
        if key == "domain":
            if D is not None:
                raise ParseError("duplicate 'domain' line", no, col)
            D = read_domain(r)
            r.end()
        elif key == "field":
            name = r.word()
            r.end()
            try:
                named = field_from_name(name)
            except DomainError as exc:
                raise ParseError(str(exc), no, col) from None
            if gens:
                raise ParseError("'field' must precede the generators", no, col)
            if not explicit:
                field = named
        elif key == "gen":
            _need_domain(D, no, col)
            g = read_polynomial(r, D, field or QQ)
            r.end()
            if g.is_zero():
                continue
            gens.append(g)
        else:
            raise ParseError(f"unknown keyword {key!r}", no, col)
    if D is None:
        raise ParseError("missing 'domain' line", 1, 1)
    return IdealFile(D, tuple(gens), field or QQ)


def format_ideal(D, gens, history=(), field=QQ):
    lines = [f"domain {D}"]
    if field != QQ:
        lines.append(f"field {field.name}")
    for n, k in history:
        lines.append(f"# pass {n} added {k}")
    lines.extend(f"gen {format_polynomial(D, g)}" for g in gens)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PetriFile:
    data_domain: object  # None for a plain net over fin[places]
    places: int
    rules: tuple


def petri_variable_domain(data_domain, places):
    if data_domain is None:
        return Fin(places)
    return Lex(data_domain, Fin(places))


def parse_petri(text):
    data = None
    places = None
    raw_rules = []
    for no, key, r, col in _lines(text):
        if key == "domain":
            data = read_domain(r)
            r.end()
        elif key == "places":
            places = r.nat()
            r.end()
            if places < 1:
                raise ParseError("a net needs at least one place", no, col)
        elif key == "rule":
            raw_rules.append((no, r))
        else:
            raise ParseError(f"unknown keyword {key!r}", no, col)
    if places is None:
        raise ParseError("missing 'places' line", 1, 1)
    V = petri_variable_domain(data, places)
    rules = []
    for no, r in raw_rules:
        lhs = read_monomial(r, V)
        r.expect("->")
        rhs = read_monomial(r, V)
        r.end()
        rules.append((lhs, rhs))
    return PetriFile(data, places, tuple(rules))


def format_petri(net):
    lines = []
    if net.data_domain is not None:
        lines.append(f"domain {net.data_domain}")
    lines.append(f"places {net.places}")
    V = petri_variable_domain(net.data_domain, net.places)
    for lhs, rhs in net.rules:
        lines.append(f"rule {format_monomial(V, lhs)} -> {format_monomial(V, rhs)}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class FamilyFile:
    domain: object
    dim: int
    arity: int
    rows: tuple  # (index tuple, vector dict)


def parse_family(text, field=QQ):
    D = None
    dim = arity = None
    raw_rows = []
    for no, key, r, col in _lines(text):
        if key == "domain":
            D = read_domain(r)
            r.end()
        elif key == "dim":
            dim = r.nat()
            r.end()
        elif key == "arity":
            arity = r.nat()
            r.end()
        elif key == "row":
            raw_rows.append((no, col, r))
        else:
            raise ParseError(f"unknown keyword {key!r}", no, col)
    for name, val in (("domain", D), ("dim", dim), ("arity", arity)):
        if val is None:
            raise ParseError(f"missing {name!r} line", 1, 1)
    if dim < 1:
        raise ParseError("dim must be positive", 1, 1)
    rows = []
    for no, col, r in raw_rows:
        t = read_tuple(r, D) if r.peek("(") else (read_element(r, D),)
        if len(t) != arity:
            raise ParseError(f"index has length {len(t)}, expected {arity}", no, col)
        r.expect("=")
        v = read_vector(r, D, field)
        r.end()
        for u in v:
            if len(u) != dim:
                raise ParseError(f"vector entry {u!r} does not have length {dim}", no, col)
        rows.append((t, v))
    return FamilyFile(D, dim, arity, tuple(rows))


def format_family(fam):
    D = fam.domain
    lines = [f"dim {fam.dim}", f"arity {fam.arity}", f"domain {D}"]
    for t, v in fam.rows:
        lines.append(f"row {format_tuple(D, t)} = {format_vector(D, v)}")
    return "\n".join(lines) + "\n"


# -- certificates ---------------------------------------------------------------


def format_step(D, s):
    return (
        f"step g={s.gen_index} r={format_coeff(s.r)} h={format_monomial(D, s.h)} "
        f"map={format_map(D, s.renaming, braces=False)} head={format_monomial(D, s.head)}"
    )


def format_certificate(D, gens, f, cert, field=QQ):
    """A self-contained, replayable certificate file."""
    lines = [f"domain {D}"]
    if field != QQ:
        lines.append(f"field {field.name}")
    lines.extend(f"gen {format_polynomial(D, g)}" for g in gens)
    lines.append(f"poly {format_polynomial(D, f)}")
    lines.extend(format_step(D, s) for s in cert.steps)
    lines.append(f"remainder {format_polynomial(D, cert.remainder)}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CertificateFile:
    domain: object
    gens: tuple
    poly: object
    steps: tuple
    remainder: object
    field: object = QQ


def _read_step(r, D, field):
    from .gb import DivisionStep

    fields = {}
    for name in ("g", "r", "h", "map", "head"):
        r.expect(name + "=")
        if name == "g":
            fields[name] = r.nat()
        elif name == "r":
            fields[name] = read_coeff(r, field)
        elif name in ("h", "head"):
            fields[name] = read_monomial(r, D)
        else:
            fields[name] = read_map_body(r, D, close="head=")
    r.end()
    return DivisionStep(fields["g"], fields["r"], fields["h"], fields["map"], fields["head"])


def parse_certificate(text):
    D = None
    field = QQ
    gens, steps = [], []
    poly = remainder = None
    for no, key, r, col in _lines(text):
        if key == "domain":
            D = read_domain(r)
            r.end()
            continue
        if key == "field":
            name = r.word()
            r.end()
            field = field_from_name(name)
            continue
        _need_domain(D, no, col)
        if key == "gen":
            gens.append(read_polynomial(r, D, field))
        elif key == "poly":
            poly = read_polynomial(r, D, field)
        elif key == "step":
            steps.append(_read_step(r, D, field))
            continue
        elif key == "remainder":
            remainder = read_polynomial(r, D, field)
        else:
            raise ParseError(f"unknown keyword {key!r}", no, col)
        r.end()
    if D is None or poly is None or remainder is None:
        raise ParseError("certificate needs domain, poly and remainder lines", 1, 1)
    return CertificateFile(D, tuple(gens), poly, tuple(steps), remainder, field)


__all__ = [
    "EqIdealError",
    "GF",
    "parse_domain",
    "parse_element",
    "parse_polynomial",
    "parse_monomial",
    "parse_map",
    "parse_set",
    "parse_vector",
    "parse_ideal",
    "parse_petri",
    "parse_family",
    "parse_certificate",
    "format_element",
    "format_polynomial",
    "format_monomial",
    "format_map",
    "format_ideal",
    "format_petri",
    "format_family",
    "format_certificate",
]
