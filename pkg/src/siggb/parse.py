"""Expression and system-file parsing.

Expression grammar (sums of monomials only, no parentheses):

    poly   := [sign] term { sign term }
    term   := factor { ["*"] factor }
    factor := rational | var ["^" int]
    rational := int ["/" int]

"*" is optional between factors; "/" is only legal inside a rational
constant.  Variable names are matched longest-first against the ring's
declared names.

System files are line oriented:

    field: QQ            (or: field: Fp 32003)
    order: grevlex       (grevlex | grlex | lex)
    vars: x y z t        (declaration order = precedence, first largest)
    gens:
    y*z^3 - x^2*t^2
    ...

Blank lines and "#" comments are ignored.
"""

from __future__ import annotations

from fractions import Fraction

from .ring import ORDERS, Polynomial, PrimeField, QQ, Ring


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.pos = pos
        self.line = line
        where = ""
        if line is not None:
            where += f"line {line}: "
        if pos is not None:
            where += f"col {pos + 1}: "
        super().__init__(where + message)


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse an expression into an exact polynomial of the given ring."""
    names = sorted(ring.names, key=len, reverse=True)
    n = len(text)
    i = 0
    terms: dict = {}

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int() -> int:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected an integer", start)
        return int(text[start:i])

    def read_factor(coeff, mono):
        nonlocal i
        if text[i].isdigit():
            start = i
            num = read_int()
            skip_ws()
            if i < n and text[i] == "/":
                i += 1
                skip_ws()
                if i >= n or not text[i].isdigit():
                    raise ParseError("expected a denominator", i)
                den = read_int()
                if den == 0:
                    raise ParseError("zero denominator", start)
                return coeff * Fraction(num, den), mono
            return coeff * num, mono
        for name in names:
            if text.startswith(name, i):
                i += len(name)
                var_idx = ring.names.index(name)
                exp = 1
                skip_ws()
                if i < n and text[i] == "^":
                    i += 1
                    skip_ws()
                    if i >= n or not text[i].isdigit():
                        raise ParseError("malformed exponent", i)
                    exp = read_int()
                mono = list(mono)
                mono[var_idx] += exp
                return coeff, tuple(mono)
        raise ParseError(f"unknown variable or symbol {text[i]!r}", i)

    skip_ws()
    if i >= n:
        raise ParseError("empty expression", i)
    first = True
    while i < n:
        sign = 1
        skip_ws()
        if i < n and text[i] in "+-":
            if text[i] == "-":
                sign = -1
            i += 1
            skip_ws()
        elif not first:
            raise ParseError(f"expected '+' or '-', got {text[i]!r}", i)
        first = False
        if i >= n:
            raise ParseError("dangling sign", i - 1)
        coeff = Fraction(sign)
        mono = (0,) * ring.nvars
        saw_factor = False
        while i < n:
            ch = text[i]
            if ch.isspace():
                # whitespace splits terms only at +/-; peek past it
                j = i
                while j < n and text[j].isspace():
                    j += 1
                if j >= n or text[j] in "+-":
                    i = j
                    break
                i = j
                ch = text[i]
            if ch in "+-":
                break
            if ch == "*":
                i += 1
                skip_ws()
                if i >= n:
                    raise ParseError("dangling '*'", i - 1)
                coeff, mono = read_factor(coeff, mono)
                saw_factor = True
                continue
            if ch == "/":
                raise ParseError("division is only allowed inside a rational "
                                 "constant", i)
            if ch == "(" or ch == ")":
                raise ParseError("parentheses are not supported", i)
            coeff, mono = read_factor(coeff, mono)
            saw_factor = True
        if not saw_factor:
            raise ParseError("empty term", i)
        prev = terms.get(mono, Fraction(0))
        terms[mono] = prev + coeff
    return ring.poly(terms)


# ---------------------------------------------------------------------------
# system files


def parse_system(text: str) -> tuple[Ring, list[Polynomial]]:
    field = None
    order = None
    names = None
    gen_lines: list[tuple[int, str]] = []
    in_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if in_gens:
            gen_lines.append((lineno, line))
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError("expected 'key: value' before the gens section",
                             line=lineno)
        key = key.strip().lower()
        value = value.strip()
        if key == "field":
            parts = value.split()
            if parts and parts[0] == "QQ" and len(parts) == 1:
                field = QQ
            elif len(parts) == 2 and parts[0] == "Fp" and parts[1].isdigit():
                field = PrimeField(int(parts[1]))
            else:
                raise ParseError(f"bad field {value!r} (use 'QQ' or "
                                 "'Fp <prime>')", line=lineno)
        elif key == "order":
            if value not in ORDERS:
                raise ParseError(f"unknown order {value!r}", line=lineno)
            order = value
        elif key == "vars":
            names = tuple(value.split())
            if not names:
                raise ParseError("no variables declared", line=lineno)
        elif key == "gens":
            if value:
                raise ParseError("generators go on the following lines",
                                 line=lineno)
            in_gens = True
        else:
            raise ParseError(f"unknown key {key!r}", line=lineno)
    if field is None or order is None or names is None or not in_gens:
        raise ParseError("system file needs field:, order:, vars: and gens:")
    if not gen_lines:
        raise ParseError("no generators given")
    ring = Ring(names, order, field)
    gens = []
    for lineno, line in gen_lines:
        try:
            f = parse_poly(line, ring)
        except ParseError as e:
            raise ParseError(f"in generator: {e}", line=lineno) from e
        if not f:
            raise ParseError("zero generator", line=lineno)
        gens.append(f)
    return ring, gens


def render_system(ring: Ring, gens) -> str:
    lines = [f"field: {ring.field.name}",
             f"order: {ring.order}",
             f"vars: {' '.join(ring.names)}",
             "gens:"]
    lines.extend(str(f) for f in gens)
    return "\n".join(lines) + "\n"
