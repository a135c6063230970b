"""Deciding ideal membership and producing explicit cofactor certificates.

prepare() runs the engine, upgrades its output to full cofactor vectors,
inter-reduces the polynomial parts, and re-expresses every reduced element
over the original generators.  detach() then divides a query polynomial by
the reduced basis and composes the stored vectors, so every MEMBER verdict
comes with a vector u satisfying u . F == f exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .convert import mono2full, sig2mono
from .engine import f5_run
from .labeled import LabeledBasis
from .ring import ModuleVector, Polynomial, Ring, divide, interreduce


@dataclass(frozen=True)
class DetachResult:
    member: bool
    remainder: Polynomial
    cofactors: ModuleVector | None


@dataclass(frozen=True)
class GBWithReps:
    """Everything needed to answer membership queries: the full-labeled
    basis, the reduced basis, and one cofactor vector per reduced element
    (always over the original generators)."""

    ring: Ring
    generators: tuple
    full_basis: LabeledBasis
    reduced: tuple
    vectors: tuple

    def representation_of(self, k: int) -> ModuleVector:
        return self.vectors[k]


def verify_representation(f: Polynomial, u: ModuleVector, generators) -> bool:
    """Exact certificate check: u . F == f."""
    return u.dot(generators) == f


def prepare(F, ring: Ring) -> GBWithReps:
    """Run the whole pipeline for the generator list F."""
    F = tuple(F)
    eng = f5_run(F, ring)
    full = mono2full(sig2mono(eng.labeled()))
    live = [el for el in full.elements if el.poly]
    polys = [el.poly for el in live]
    reduced = interreduce(polys)
    vectors = []
    for r in reduced:
        quots, rem = divide(r, polys)
        if rem:
            raise AssertionError("reduced element did not divide to zero")
        vec = ring.zero_vector(len(F))
        for q, el in zip(quots, live):
            if q:
                vec = vec + el.vec.mul_poly(q)
        if not verify_representation(r, vec, F):
            raise AssertionError("pipeline produced an invalid representation")
        vectors.append(vec)
    return GBWithReps(ring, F, full, tuple(reduced), tuple(vectors))


def detach(f: Polynomial, prep: GBWithReps) -> DetachResult:
    """Decide f in <F> and, on membership, return cofactors over F."""
    quots, rem = divide(f, prep.reduced)
    if rem:
        return DetachResult(False, rem, None)
    vec = prep.ring.zero_vector(len(prep.generators))
    for q, w in zip(quots, prep.vectors):
        if q:
            vec = vec + w.mul_poly(q)
    assert verify_representation(f, vec, prep.generators)
    return DetachResult(True, rem, vec)
