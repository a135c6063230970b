"""Upgrading label precision: signature -> monomial -> full cofactor vector.

The signature level only knows lpp(v); the hidden leading coefficient of v
is recovered by comparing two head-reduced forms of the same signature (the
lead monomial divided by the hidden lead coefficient is an invariant of the
signature).  With coefficients known, the full vectors are rebuilt in
ascending signature order: each element is re-expressed over the already
rebuilt prefix plus c*x^a*f_j, and the prefix's vectors are combined.
"""

from __future__ import annotations

from .labeled import (FullLabeledPoly, LabeledBasis, MonoLabeledPoly,
                      SigLabeledPoly)
from .ring import ModuleMonomial, Polynomial, mono_div, mono_divides


class ConversionError(RuntimeError):
    """Input was not a valid labeled Groebner basis of the claimed level."""


def incomplete_standard_form(f: Polynomial, sig: ModuleMonomial,
                             S: LabeledBasis, *, choose=None) -> Polynomial:
    """Head-reduce f under the signature bound until no reducer applies.

    A reducer g_i of S is eligible when lpp(g_i) divides the current lead
    and (lead/lpp(g_i)) * t_i sits strictly below sig.  Each step cancels
    the lead outright, so termination is the well-order on power products.
    The result's lead (up to the hidden coefficient) depends only on sig,
    not on the reducer choices; `choose` picks among eligible reducers and
    defaults to the lowest-stamped one.
    """
    ring = S.ring
    skey = ring.module_key(sig)
    g = f
    while g:
        lead = g.lpp()
        eligible = []
        for el in S.elements:
            if not el.poly:
                continue
            glpp = el.poly.lpp()
            if mono_divides(glpp, lead):
                t = mono_div(lead, glpp)
                if ring.module_key(el.sig.mul(t)) < skey:
                    eligible.append((el, t))
        if not eligible:
            break
        el, t = eligible[0] if choose is None else choose(eligible)
        g = g - el.poly.mul_term(g.lc() / el.poly.lc(), t)
    return g


def sig2mono(S: LabeledBasis, *, choose=None) -> LabeledBasis:
    """Recover the hidden leading coefficients of a signature-labeled basis.

    For each element with signature x^a * e_j, head-reduce both the element
    itself and x^a * f_j under that signature; the ratio of the two leading
    coefficients is the hidden lc (1 when the element reduces to zero).
    Output elements mirror the input order.
    """
    ring = S.ring
    out = []
    for el in S.elements:
        if not isinstance(el, SigLabeledPoly):
            raise ConversionError("expected a signature-labeled basis")
        sig = el.sig
        g = incomplete_standard_form(el.poly, sig, S, choose=choose)
        if g:
            fj = S.generators[sig.index - 1]
            g0 = incomplete_standard_form(fj.mul_term(ring.field.one, sig.mono),
                                          sig, S, choose=choose)
            if not g0:
                raise ConversionError(
                    "element and its signature monomial reduce inconsistently; "
                    "input is not a signature-labeled Groebner basis")
            c = g.lc() / g0.lc()
        else:
            c = ring.field.one
        out.append(MonoLabeledPoly(el.poly, c, sig))
    return LabeledBasis(ring, S.generators, tuple(out))


def representation(c, sig: ModuleMonomial, f: Polynomial,
                   G: LabeledBasis) -> list[tuple[int, Polynomial]]:
    """Express f as c * x^a * f_j plus a combination of elements of G whose
    shifted labels stay strictly below sig.

    Precondition: some (unknown) vector u with lm(u) = c * x^a * e_j and
    f = u . F exists; then the loop drives h = f - c*x^a*f_j to zero, the
    lead strictly decreasing.  Quotient monomials are taken off the current
    lead before h is updated.  Returns sparse (position, quotient) pairs.
    """
    ring = G.ring
    skey = ring.module_key(sig)
    h = f - G.generators[sig.index - 1].mul_term(c, sig.mono)
    quots: dict[int, dict] = {}
    while h:
        lead = h.lpp()
        chosen = None
        for pos, el in enumerate(G.elements):
            if not el.poly:
                continue
            glpp = el.poly.lpp()
            if not mono_divides(glpp, lead):
                continue
            t = mono_div(lead, glpp)
            if ring.module_key(el.vec.lpp().mul(t)) < skey:
                chosen = (pos, el, t)
                break
        if chosen is None:
            raise ConversionError(
                "irreducible nonzero tail; input was not a valid "
                "monomial-labeled element")
        pos, el, t = chosen
        q = h.lc() / el.poly.lc()
        h = h - el.poly.mul_term(q, t)
        quots.setdefault(pos, {})[t] = q
    return [(pos, ring.poly(d)) for pos, d in sorted(quots.items())]


def mono2full(M: LabeledBasis) -> LabeledBasis:
    """Rebuild full cofactor vectors from a monomial-labeled basis.

    Elements are processed in ascending signature order (ties by position);
    each vector is c * x^a * e_j plus the quotient combination of the
    already rebuilt prefix's vectors.  Every output satisfies
    poly == vec . F and lm(vec) == (c, sig) exactly.
    """
    ring = M.ring
    m = len(M.generators)
    order = sorted(range(len(M.elements)),
                   key=lambda i: (ring.module_key(M.elements[i].sig), i))
    done: list[FullLabeledPoly] = []
    prev_key = None
    for i in order:
        el = M.elements[i]
        if not isinstance(el, MonoLabeledPoly):
            raise ConversionError("expected a monomial-labeled basis")
        key = ring.module_key(el.sig)
        assert prev_key is None or key >= prev_key, "signatures must ascend"
        prev_key = key
        prefix = LabeledBasis(ring, M.generators, tuple(done))
        parts = representation(el.coeff, el.sig, el.poly, prefix)
        vec = ring.unit_vector(el.sig.index, m).mul_term(el.coeff, el.sig.mono)
        for pos, q in parts:
            vec = vec + done[pos].vec.mul_poly(q)
        full = FullLabeledPoly(el.poly, vec)
        if vec.lm() != (el.coeff, el.sig):
            raise ConversionError("rebuilt vector lead disagrees with the label")
        done.append(full)
    return LabeledBasis(ring, M.generators, tuple(done))
