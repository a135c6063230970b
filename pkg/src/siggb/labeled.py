"""Labeled polynomials: carrying a cofactor vector, its leading monomial,
or only its leading power product (the signature).

A fully labeled element g^[v] witnesses g = v . F for the ambient generator
list F.  The monomial level keeps only lm(v) = c*t, the signature level only
lpp(v) = t.  Signature-level elements carry an insertion stamp: the rewriting
criterion in the engine needs a strict "added later" order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import (ContextError, ModuleMonomial, ModuleVector, Polynomial,
                   mono_div, mono_divides)


@dataclass(frozen=True)
class FullLabeledPoly:
    poly: Polynomial
    vec: ModuleVector

    def check(self, generators) -> bool:
        """Exact validity of the label: poly == vec . F."""
        return self.vec.dot(generators) == self.poly


@dataclass(frozen=True)
class MonoLabeledPoly:
    poly: Polynomial
    coeff: object            # nonzero field element
    sig: ModuleMonomial

    def __post_init__(self):
        if not self.coeff:
            raise ContextError("monomial label needs a nonzero coefficient")


@dataclass(frozen=True)
class SigLabeledPoly:
    poly: Polynomial
    sig: ModuleMonomial
    stamp: int


@dataclass(frozen=True)
class LabeledBasis:
    """An ordered family of labeled elements over a fixed generator list.

    Element order is creation order; for signature-labeled elements the
    stamps equal the list positions.
    """

    ring: object
    generators: tuple
    elements: tuple

    def __post_init__(self):
        for f in self.generators:
            if not f:
                raise ContextError("generators must be nonzero")

    def __len__(self):
        return len(self.elements)

    def polys(self) -> list[Polynomial]:
        return [el.poly for el in self.elements]

    def nonzero(self):
        return [el for el in self.elements if el.poly]


# ---------------------------------------------------------------------------
# arithmetic on fully labeled elements


def labeled_add(a: FullLabeledPoly, b: FullLabeledPoly) -> FullLabeledPoly:
    """a + b, combining both the polynomial and the cofactor vector."""
    return FullLabeledPoly(a.poly + b.poly, a.vec + b.vec)


def labeled_scale(c, t: tuple, a: FullLabeledPoly) -> FullLabeledPoly:
    """c * x^t * a for a nonzero coefficient c."""
    return FullLabeledPoly(a.poly.mul_term(c, t), a.vec.mul_term(c, t))


def signature(a: FullLabeledPoly) -> ModuleMonomial:
    """lpp of the cofactor vector; undefined (raises) for a zero vector."""
    mm = a.vec.lpp()
    if mm is None:
        raise ValueError("signature of a zero cofactor vector is undefined")
    return mm


# ---------------------------------------------------------------------------
# standard forms


def is_standard_form(g: Polynomial, sig: ModuleMonomial, S: LabeledBasis) -> bool:
    """Whether a labeled element with polynomial part g and signature sig has
    the minimal possible leading power product for that signature.

    True iff g == 0 or no element of S reduces its lead under the signature
    bound: lpp(g_i) | lpp(g) with (lpp(g)/lpp(g_i)) * t_i strictly below sig.
    """
    if not g:
        return True
    ring = g.ring
    skey = ring.module_key(sig)
    lead = g.lpp()
    for el in S.elements:
        if not el.poly:
            continue
        glpp = el.poly.lpp()
        if mono_divides(glpp, lead):
            t = mono_div(lead, glpp)
            if ring.module_key(el.sig.mul(t)) < skey:
                return False
    return True


# ---------------------------------------------------------------------------
# falsifying the full-labeled property


@dataclass(frozen=True)
class CoverageViolation:
    """Witness not covered by any basis element.

    divisor_positions lists the elements whose lpp divides the witness lead
    but whose shifted signature is too large; if empty, no lead even divides.
    """

    witness: FullLabeledPoly
    divisor_positions: tuple

    def __str__(self):
        lead = self.witness.poly.ring.mono_str(self.witness.poly.lpp())
        if not self.divisor_positions:
            return f"no basis lead divides {lead}"
        who = ", ".join(f"#{i}" for i in self.divisor_positions)
        return (f"leads of {who} divide {lead}, but each shifted label "
                f"exceeds the witness signature")


def refute_full_labeled(G: LabeledBasis, witness: FullLabeledPoly):
    """Check one witness against the covering conditions of a fully labeled
    basis; return a CoverageViolation if nothing covers it, else None.

    This is a falsifier, not a verifier: the covering property quantifies
    over the whole module, so only supplied witnesses are examined.
    """
    if not witness.poly:
        raise ValueError("witness polynomial must be nonzero")
    if not witness.check(G.generators):
        raise ValueError("invalid witness: poly != vec . F")
    ring = witness.poly.ring
    lead = witness.poly.lpp()
    wkey = ring.module_key(witness.vec.lpp())
    divisors = []
    for pos, el in enumerate(G.elements):
        if not el.poly:
            continue
        glpp = el.poly.lpp()
        if not mono_divides(glpp, lead):
            continue
        t = mono_div(lead, glpp)
        tv = el.vec.mul_term(ring.field.one, t)
        if ring.module_key(tv.lpp()) <= wkey:
            return None
        divisors.append(pos)
    return CoverageViolation(witness, tuple(divisors))
