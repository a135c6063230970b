"""Independent ground truth for the test suite.

A plain Buchberger loop with cofactor tracking (no signature criteria, no
pair elimination) and an S-pair Groebner checker.  Trustworthiness over
speed: every intermediate element is checked against its own cofactor
vector.  Nothing here is used by the main pipeline.
"""

from __future__ import annotations

import random

from .ring import (ContextError, ModuleVector, Polynomial, Ring, divide,
                   mono_div, mono_divides, mono_lcm, normal_form, QQ)


class OracleBasis:
    """Pairs (polynomial, cofactor vector) with poly == vec . F throughout."""

    def __init__(self, ring: Ring, generators: tuple):
        self.ring = ring
        self.generators = generators
        self.polys: list[Polynomial] = []
        self.vectors: list[ModuleVector] = []

    def append(self, p: Polynomial, v: ModuleVector):
        if v.dot(self.generators) != p:
            raise AssertionError("oracle cofactor identity broken")
        self.polys.append(p)
        self.vectors.append(v)


def buchberger_with_cofactors(F, ring: Ring) -> OracleBasis:
    """Classic Buchberger loop, every reduction mirrored on the vectors.

    Pair selection is the normal strategy (minimal lcm degree, then the
    ring order on the lcm, then indices) purely for determinism.
    """
    F = tuple(F)
    if not F:
        raise ContextError("need at least one generator")
    for f in F:
        if not f:
            raise ContextError("zero generators are not allowed")
    m = len(F)
    basis = OracleBasis(ring, F)
    for j, f in enumerate(F, start=1):
        c = f.lc()
        basis.append(f.monic(), ring.unit_vector(j, m).scale(ring.field.one / c))

    pending = {(i, j) for i in range(m) for j in range(i + 1, m)}

    def pair_key(p):
        i, j = p
        lcm = mono_lcm(basis.polys[i].lpp(), basis.polys[j].lpp())
        return (sum(lcm), ring.mono_key(lcm), i, j)

    while pending:
        i, j = min(pending, key=pair_key)
        pending.remove((i, j))
        gi, gj = basis.polys[i], basis.polys[j]
        lcm = mono_lcm(gi.lpp(), gj.lpp())
        one = ring.field.one
        s = gi.mul_term(one, mono_div(lcm, gi.lpp())) \
            - gj.mul_term(one, mono_div(lcm, gj.lpp()))
        svec = basis.vectors[i].mul_term(one, mono_div(lcm, gi.lpp())) \
            - basis.vectors[j].mul_term(one, mono_div(lcm, gj.lpp()))
        quots, rem = divide(s, basis.polys)
        if not rem:
            continue
        rvec = svec
        for q, v in zip(quots, basis.vectors):
            if q:
                rvec = rvec - v.mul_poly(q)
        c = rem.lc()
        k = len(basis.polys)
        basis.append(rem.monic(), rvec.scale(one / c))
        pending.update((t, k) for t in range(k))
    return basis


def is_groebner(G, ring: Ring) -> bool:
    """S-pair test: every S-polynomial reduces to zero by G."""
    G = [g for g in G if g]
    one = ring.field.one
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            gi, gj = G[i], G[j]
            lcm = mono_lcm(gi.lpp(), gj.lpp())
            s = gi.mul_term(one / gi.lc(), mono_div(lcm, gi.lpp())) \
                - gj.mul_term(one / gj.lc(), mono_div(lcm, gj.lpp()))
            if normal_form(s, G):
                return False
    return True


_VAR_POOL = ("x", "y", "z", "t", "u", "v", "w")


def random_system(n_vars: int, n_gens: int, max_deg: int, max_terms: int,
                  seed: int, *, field=QQ, order: str = "grevlex"):
    """Reproducible sparse random generators; returns (ring, polynomials).

    Coefficients are drawn from {-3..3}\\{0} over Q, or uniformly nonzero
    over a prime field.  Every generator is nonzero.
    """
    if min(n_vars, n_gens, max_deg, max_terms) < 1:
        raise ContextError("random system parameters must be positive")
    names = (_VAR_POOL[:n_vars] if n_vars <= len(_VAR_POOL)
             else tuple(f"x{k}" for k in range(1, n_vars + 1)))
    ring = Ring(names, order, field)
    rng = random.Random(seed)

    def random_coeff():
        if field == QQ:
            c = rng.randrange(-3, 3)
            return c if c != 0 else 3
        return rng.randrange(1, field.p)

    def random_mono():
        exps = [0] * n_vars
        for _ in range(rng.randrange(0, max_deg + 1)):
            exps[rng.randrange(n_vars)] += 1
        return tuple(exps)

    gens = []
    while len(gens) < n_gens:
        terms = {}
        for _ in range(rng.randrange(1, max_terms + 1)):
            terms[random_mono()] = random_coeff()
        f = ring.poly(terms)
        if f:
            gens.append(f)
    return ring, gens
