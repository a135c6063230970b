"""Exact sparse multivariate polynomial arithmetic.

Polynomials live in K[x1..xn] for K the rationals or a prime field, with a
selectable term order (lex, grlex, grevlex).  Module vectors in R^m carry
the position-over-term extension of the ring order, with e_1 the largest
position.  All values are immutable once built; arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

ORDERS = ("lex", "grlex", "grevlex")


class ContextError(ValueError):
    """Mismatched ring contexts or malformed construction data."""


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """The field of rationals; elements are `fractions.Fraction`."""

    name = "QQ"

    def __call__(self, value):
        if isinstance(value, float):
            raise ContextError("floating point coefficients are not supported")
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


class ModInt:
    """Residue in F_p, stored in [0, p)."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _coerce(self, other) -> "ModInt":
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise ContextError("mixed moduli")
            return other
        if isinstance(other, int):
            return ModInt(other, self.p)
        raise ContextError(f"cannot coerce {other!r} into F_{self.p}")

    def __add__(self, other):
        other = self._coerce(other)
        return ModInt(self.val + other.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return ModInt(self.val - other.val, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return ModInt(self.val * other.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.val == 0:
            raise ZeroDivisionError("division by zero residue")
        return self * ModInt(pow(other.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return ModInt(-self.val, self.p)

    def __abs__(self):
        return self

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __repr__(self):
        return f"ModInt({self.val}, {self.p})"

    def __str__(self):
        return str(self.val)


class PrimeField:
    """F_p for an odd prime p."""

    def __init__(self, p: int):
        if not _is_prime(p) or p <= 2:
            raise ContextError(f"modulus must be a prime > 2, got {p}")
        self.p = p

    @property
    def name(self):
        return f"Fp {self.p}"

    def __call__(self, value):
        if isinstance(value, ModInt):
            if value.p != self.p:
                raise ContextError("mixed moduli")
            return value
        if isinstance(value, int):
            return ModInt(value, self.p)
        if isinstance(value, Fraction):
            return ModInt(value.numerator, self.p) / ModInt(value.denominator, self.p)
        raise ContextError(f"cannot coerce {value!r} into F_{self.p}")

    @property
    def zero(self):
        return ModInt(0, self.p)

    @property
    def one(self):
        return ModInt(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# power products (exponent tuples)


def mono_mul(a: tuple, b: tuple) -> tuple:
    if len(a) != len(b):
        raise ContextError("exponent vectors of different lengths")
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    """True iff a | b componentwise."""
    if len(a) != len(b):
        raise ContextError("exponent vectors of different lengths")
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: tuple, a: tuple) -> tuple:
    """b / a; raises unless a divides b."""
    if len(a) != len(b):
        raise ContextError("exponent vectors of different lengths")
    q = tuple(y - x for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ContextError(f"{a} does not divide {b}")
    return q


def mono_lcm(a: tuple, b: tuple) -> tuple:
    if len(a) != len(b):
        raise ContextError("exponent vectors of different lengths")
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: tuple) -> int:
    return sum(a)


class ModuleMonomial:
    """A term x^a * e_j of R^m; index is 1-based, e_1 the largest position."""

    __slots__ = ("mono", "index")

    def __init__(self, mono: tuple, index: int):
        if index < 1:
            raise ContextError("module index must be >= 1")
        self.mono = mono
        self.index = index

    def mul(self, t: tuple) -> "ModuleMonomial":
        return ModuleMonomial(mono_mul(t, self.mono), self.index)

    def divides(self, other: "ModuleMonomial") -> bool:
        return self.index == other.index and mono_divides(self.mono, other.mono)

    def __eq__(self, other):
        return (isinstance(other, ModuleMonomial)
                and self.index == other.index and self.mono == other.mono)

    def __hash__(self):
        return hash((self.mono, self.index))

    def __repr__(self):
        return f"ModuleMonomial({self.mono}, e{self.index})"


# ---------------------------------------------------------------------------
# the ring context


class Ring:
    """Variable names, term order tag, and coefficient field.

    Variable declaration order is the precedence order: the first name is
    the largest variable under every supported term order.
    """

    __slots__ = ("names", "nvars", "order", "field")

    def __init__(self, names, order: str = "grevlex", field=QQ):
        names = tuple(names)
        if not names:
            raise ContextError("need at least one variable")
        if len(set(names)) != len(names):
            raise ContextError("variable names must be distinct")
        if order not in ORDERS:
            raise ContextError(f"unknown term order {order!r}")
        self.names = names
        self.nvars = len(names)
        self.order = order
        self.field = field

    # -- term order -------------------------------------------------------

    def mono_key(self, m):
        """Ascending sort key; None (the lead of 0) sorts below everything."""
        if m is None:
            return (-1,)
        if self.order == "lex":
            return (0,) + m
        if self.order == "grlex":
            return (sum(m),) + m
        return (sum(m),) + tuple(-e for e in reversed(m))

    def mono_cmp(self, a, b) -> int:
        ka, kb = self.mono_key(a), self.mono_key(b)
        return (ka > kb) - (ka < kb)

    def module_key(self, mm):
        """Position-over-term key: smaller index wins, then the ring order."""
        if mm is None:
            return (0,)
        return (1, -mm.index, self.mono_key(mm.mono))

    def module_cmp(self, a, b) -> int:
        ka, kb = self.module_key(a), self.module_key(b)
        return (ka > kb) - (ka < kb)

    # -- constructors -----------------------------------------------------

    def coeff(self, value):
        return self.field(value)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one_mono(self) -> tuple:
        return (0,) * self.nvars

    def term(self, coeff, mono) -> "Polynomial":
        c = self.field(coeff)
        if len(mono) != self.nvars:
            raise ContextError("exponent vector has wrong length")
        if not c:
            return self.zero()
        return Polynomial(self, ((tuple(mono), c),))

    def poly(self, terms) -> "Polynomial":
        """Build a polynomial from {mono: coeff} or an iterable of pairs."""
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != self.nvars:
                raise ContextError("exponent vector has wrong length")
            c = self.field(c)
            prev = acc.get(mono)
            acc[mono] = c if prev is None else prev + c
        return _from_dict(self, acc)

    def var(self, name: str) -> "Polynomial":
        i = self.names.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return self.term(1, mono)

    def vector(self, components) -> "ModuleVector":
        comps = tuple(components)
        for p in comps:
            if p.ring != self:
                raise ContextError("component from a different ring")
        return ModuleVector(self, comps)

    def zero_vector(self, m: int) -> "ModuleVector":
        return ModuleVector(self, tuple(self.zero() for _ in range(m)))

    def unit_vector(self, j: int, m: int) -> "ModuleVector":
        """e_j in R^m (1-based)."""
        if not 1 <= j <= m:
            raise ContextError("unit index out of range")
        one = self.term(1, self.one_mono())
        return ModuleVector(
            self, tuple(one if k == j else self.zero() for k in range(1, m + 1)))

    # -- rendering --------------------------------------------------------

    def mono_str(self, mono: tuple) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.order == other.order and self.field == other.field)

    def __hash__(self):
        return hash((self.names, self.order, self.field))

    def __repr__(self):
        return f"Ring({self.names}, {self.order!r}, {self.field!r})"


def _from_dict(ring: Ring, acc: dict) -> "Polynomial":
    terms = tuple(sorted(((m, c) for m, c in acc.items() if c),
                         key=lambda t: ring.mono_key(t[0]), reverse=True))
    return Polynomial(ring, terms)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Sparse polynomial; terms sorted strictly decreasing in the ring order.

    Do not call the constructor with raw term data; use Ring.poly/term.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: tuple):
        self.ring = ring
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def lpp(self):
        """Leading power product, or None for the zero polynomial."""
        return self.terms[0][0] if self.terms else None

    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def lm(self):
        """(coefficient, power product) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        m, c = self.terms[0]
        return c, m

    def tail(self) -> "Polynomial":
        return Polynomial(self.ring, self.terms[1:])

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(mono_deg(m) for m, _ in self.terms)

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ContextError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = {m: c for m, c in self.terms}
        for m, c in other.terms:
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
        return _from_dict(self.ring, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = {m: c for m, c in self.terms}
        for m, c in other.terms:
            prev = acc.get(m)
            acc[m] = -c if prev is None else prev - c
        return _from_dict(self.ring, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def mul_term(self, coeff, mono: tuple) -> "Polynomial":
        """c * x^mono * self, for c a nonzero coefficient."""
        c = self.ring.field(coeff)
        if not c:
            raise ContextError("scaling by a zero coefficient")
        return Polynomial(self.ring,
                          tuple((mono_mul(mono, m), c * k) for m, k in self.terms))

    def scale(self, coeff) -> "Polynomial":
        return self.mul_term(coeff, self.ring.one_mono())

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                prev = acc.get(m)
                p = c1 * c2
                acc[m] = p if prev is None else prev + p
        return _from_dict(self.ring, acc)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        c = self.lc()
        if c == self.ring.field.one:
            return self
        return self.scale(self.ring.field.one / c)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        out = []
        for m, c in self.terms:
            if isinstance(c, Fraction) and c < 0:
                sign, mag = "-", -c
            else:
                sign, mag = "", c
            if mono_deg(m) == 0:
                body = str(mag)
            elif mag == field.one:
                body = self.ring.mono_str(m)
            else:
                body = f"{mag}*{self.ring.mono_str(m)}"
            if not out:
                out.append(f"-{body}" if sign else body)
            else:
                out.append(f" - {body}" if sign else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"<poly {self}>"


# ---------------------------------------------------------------------------
# module vectors


class ModuleVector:
    """Element of R^m: one polynomial per generator slot."""

    __slots__ = ("ring", "components")

    def __init__(self, ring: Ring, components: tuple):
        self.ring = ring
        self.components = components

    def __len__(self):
        return len(self.components)

    def __bool__(self):
        return any(self.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def _check(self, other: "ModuleVector"):
        if self.ring != other.ring or len(self) != len(other):
            raise ContextError("module vectors from different contexts")

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        return ModuleVector(self.ring, tuple(a + b for a, b in
                                             zip(self.components, other.components)))

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        return ModuleVector(self.ring, tuple(a - b for a, b in
                                             zip(self.components, other.components)))

    def __neg__(self) -> "ModuleVector":
        return ModuleVector(self.ring, tuple(-a for a in self.components))

    def mul_term(self, coeff, mono: tuple) -> "ModuleVector":
        return ModuleVector(self.ring,
                            tuple(a.mul_term(coeff, mono) if a else a
                                  for a in self.components))

    def mul_poly(self, p: Polynomial) -> "ModuleVector":
        return ModuleVector(self.ring, tuple(p * a for a in self.components))

    def scale(self, coeff) -> "ModuleVector":
        return self.mul_term(coeff, self.ring.one_mono())

    def dot(self, polys) -> Polynomial:
        polys = tuple(polys)
        if len(polys) != len(self.components):
            raise ContextError("vector/generator dimension mismatch")
        acc = self.ring.zero()
        for a, f in zip(self.components, polys):
            if a and f:
                acc = acc + a * f
        return acc

    def lpp(self):
        """Leading module power product under POT, or None for zero."""
        # POT: the first nonzero slot dominates every later one.
        for j, p in enumerate(self.components, start=1):
            if p:
                return ModuleMonomial(p.lpp(), j)
        return None

    def lm(self):
        """(coefficient, ModuleMonomial) of the leading module term."""
        mm = self.lpp()
        if mm is None:
            raise ValueError("zero vector has no leading monomial")
        return self.components[mm.index - 1].lc(), mm

    def lc(self):
        return self.lm()[0]

    def __eq__(self, other):
        return (isinstance(other, ModuleVector) and self.ring == other.ring
                and self.components == other.components)

    def __hash__(self):
        return hash((self.ring, self.components))

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.components) + ")"

    def __repr__(self):
        return f"<vec {self}>"


# ---------------------------------------------------------------------------
# reduction


def divide(f: Polynomial, G) -> tuple[list[Polynomial], Polynomial]:
    """Full multivariate division of f by the ordered list G.

    Returns (quotients, remainder) with f == sum(q_i * g_i) + r exactly and
    no term of r divisible by any lpp(g_i).  Deterministic: the reducer is
    always the lowest-index g whose lpp divides the current lead.
    """
    ring = f.ring
    G = list(G)
    quots: list[dict] = [{} for _ in G]
    rem: dict = {}
    h = f
    while h:
        lt = h.lpp()
        c = h.lc()
        for i, g in enumerate(G):
            if g and mono_divides(g.lpp(), lt):
                t = mono_div(lt, g.lpp())
                q = c / g.lc()
                h = h - g.mul_term(q, t)
                quots[i][t] = q
                break
        else:
            rem[lt] = c
            h = h.tail()
    return [_from_dict(ring, d) for d in quots], _from_dict(ring, rem)


def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of f under full division by G."""
    return divide(f, G)[1]


def interreduce(G) -> list[Polynomial]:
    """The unique reduced Groebner basis obtained from the Groebner basis G.

    Output is monic, mutually tail-reduced, and sorted by ascending leading
    power product, so it is canonical regardless of the input ordering.
    """
    nonzero = [g for g in G if g]
    if not nonzero:
        return []
    ring = nonzero[0].ring
    by_lead = sorted(nonzero, key=lambda g: ring.mono_key(g.lpp()))
    minimal: list[Polynomial] = []
    for g in by_lead:
        if not any(mono_divides(m.lpp(), g.lpp()) for m in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others).monic())
    return sorted(reduced, key=lambda g: ring.mono_key(g.lpp()))
