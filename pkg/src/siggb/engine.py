"""Signature-driven Groebner basis engine.

The basis grows one stamped element per surviving critical pair.  A pair is
dropped when either side's signature multiple is disqualified by one of two
tests: a lower-position element's lead divides the multiple's monomial part
(the syzygy test), or a later-stamped element's signature divides it (the
rewriting test).  Surviving pairs are reduced under a fixed signature using
only reducers that themselves pass both tests.  Every critical pair of the
finished basis is disqualified by one of the two tests, which is the exact
correctness condition checked by the self-certification suite.

Instrumented mode keeps a shadow cofactor vector per element and verifies,
after every reduction step, that the polynomial equals shadow . F and that
the shadow's lead is the stored signature.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field

from .labeled import LabeledBasis, SigLabeledPoly
from .ring import (ContextError, ModuleMonomial, Polynomial, Ring,
                   mono_div, mono_divides, mono_lcm, mono_mul)


class EngineError(RuntimeError):
    """Invariant violation or unusable engine input."""


class Regularity(enum.Enum):
    NON_REGULAR = "non-regular"
    SUPER_REGULAR = "super-regular"
    REGULAR = "regular"


@dataclass(frozen=True)
class CriticalPair:
    """Oriented critical pair of two stamped basis elements.

    tf * lpp(f) == tg * lpp(g) == lcm of the two leads.  Orientation puts
    the side with the larger signature multiple first; on a signature tie
    the later-stamped element goes second.  regular is True iff the tie did
    not occur (the full three-way classification needs shadow vectors).
    """

    tf: tuple
    f_idx: int
    tg: tuple
    g_idx: int
    pair_sig: ModuleMonomial
    regular: bool


@dataclass
class EngineBasis:
    """Working basis: stamped elements (zero polynomials included), plus
    shadow cofactor vectors when instrumented."""

    ring: Ring
    generators: tuple
    elements: list = field(default_factory=list)
    shadows: list | None = None
    trace: list = field(default_factory=list)

    def nonzero(self) -> list[SigLabeledPoly]:
        return [el for el in self.elements if el.poly]

    def labeled(self) -> LabeledBasis:
        return LabeledBasis(self.ring, self.generators, tuple(self.elements))

    def trace_lines(self) -> list[str]:
        return [f"{self.ring.mono_str(sig.mono)}*e{sig.index}: {verdict}"
                for sig, verdict in self.trace]


class PairQueue:
    """Pending critical pairs, popped in ascending pair-signature order with
    ties broken by descending f stamp, then descending g stamp.  At most one
    entry per unordered stamp pair."""

    def __init__(self, ring: Ring):
        self._ring = ring
        self._heap: list = []
        self._seen: set = set()

    def push(self, pair: CriticalPair):
        ids = frozenset((pair.f_idx, pair.g_idx))
        if ids in self._seen:
            raise EngineError("duplicate critical pair")
        self._seen.add(ids)
        key = (self._ring.module_key(pair.pair_sig), -pair.f_idx, -pair.g_idx)
        heapq.heappush(self._heap, (key, pair))

    def pop(self) -> CriticalPair:
        return heapq.heappop(self._heap)[1]

    def __len__(self):
        return len(self._heap)

    def __bool__(self):
        return bool(self._heap)


def make_pair(a: SigLabeledPoly, b: SigLabeledPoly, ring: Ring) -> CriticalPair:
    if not a.poly or not b.poly:
        raise EngineError("critical pairs need two nonzero polynomials")
    lcm = mono_lcm(a.poly.lpp(), b.poly.lpp())
    ta = mono_div(lcm, a.poly.lpp())
    tb = mono_div(lcm, b.poly.lpp())
    ka = ring.module_key(a.sig.mul(ta))
    kb = ring.module_key(b.sig.mul(tb))
    if ka > kb:
        f, tf, g, tg, regular = a, ta, b, tb, True
    elif kb > ka:
        f, tf, g, tg, regular = b, tb, a, ta, True
    elif a.stamp < b.stamp:
        f, tf, g, tg, regular = a, ta, b, tb, False
    else:
        f, tf, g, tg, regular = b, tb, a, ta, False
    return CriticalPair(tf, f.stamp, tg, g.stamp, f.sig.mul(tf), regular)


# ---------------------------------------------------------------------------
# the two disqualification tests


def f5_divisible(t: tuple, el: SigLabeledPoly, basis: EngineBasis) -> bool:
    """Syzygy test for the multiple t * el: some nonzero element sitting at a
    strictly larger generator index has a lead dividing t * sig-monomial."""
    m = mono_mul(t, el.sig.mono)
    i = el.sig.index
    for w in basis.elements:
        if w.poly and w.sig.index > i and mono_divides(w.poly.lpp(), m):
            return True
    return False


def f5_rewritable(t: tuple, el: SigLabeledPoly, basis: EngineBasis) -> bool:
    """Rewriting test for the multiple t * el: some later-stamped element at
    the same generator index has a signature monomial dividing it.

    Zero-polynomial elements count; they record signatures of syzygies."""
    m = mono_mul(t, el.sig.mono)
    i = el.sig.index
    for w in basis.elements[el.stamp + 1:]:
        if w.sig.index == i and mono_divides(w.sig.mono, m):
            return True
    return False


def pair_divisible(pair: CriticalPair, basis: EngineBasis) -> bool:
    return (f5_divisible(pair.tf, basis.elements[pair.f_idx], basis)
            or f5_divisible(pair.tg, basis.elements[pair.g_idx], basis))


def pair_rewritable(pair: CriticalPair, basis: EngineBasis) -> bool:
    return (f5_rewritable(pair.tf, basis.elements[pair.f_idx], basis)
            or f5_rewritable(pair.tg, basis.elements[pair.g_idx], basis))


# ---------------------------------------------------------------------------
# signature-safe reduction


def f5_reduce(h: Polynomial, sig: ModuleMonomial, basis: EngineBasis,
              shadow=None):
    """Reduce h, carrying signature sig, as far as the criteria allow.

    One-step reductions use the lowest-stamped nonzero reducer whose lead
    divides lpp(h), whose shifted signature stays strictly below sig, and
    whose multiple passes both disqualification tests.  Terminates because
    the lead strictly decreases.  Returns (reduced polynomial, shadow); in
    instrumented mode the shadow is updated in lockstep and checked after
    every step.
    """
    ring = basis.ring
    skey = ring.module_key(sig)
    while h:
        lead = h.lpp()
        chosen = None
        for w in basis.elements:
            if not w.poly or not mono_divides(w.poly.lpp(), lead):
                continue
            t = mono_div(lead, w.poly.lpp())
            if ring.module_key(w.sig.mul(t)) >= skey:
                continue
            if f5_divisible(t, w, basis) or f5_rewritable(t, w, basis):
                continue
            chosen = (w, t)
            break
        if chosen is None:
            break
        w, t = chosen
        c = h.lc() / w.poly.lc()
        h = h - w.poly.mul_term(c, t)
        if shadow is not None:
            shadow = shadow - basis.shadows[w.stamp].mul_term(c, t)
            _check_shadow(h, sig, shadow, basis)
    return h, shadow


def _check_shadow(poly, sig, shadow, basis):
    if shadow.lpp() != sig:
        raise EngineError("shadow lead drifted from the stored signature")
    if shadow.dot(basis.generators) != poly:
        raise EngineError("shadow vector no longer reproduces the polynomial")


# ---------------------------------------------------------------------------
# the main loop


def f5_run(F, ring: Ring, *, instrumented: bool = False) -> EngineBasis:
    """Compute a signature-labeled Groebner basis of <F>.

    The inputs enter first, stamped in index order with unit signatures.
    Pairs are processed in ascending pair-signature order (ties broken by
    descending stamps); a popped pair is either disqualified by the syzygy
    or rewriting test, or its S-polynomial is reduced under the pair
    signature and appended (zero results included: their signatures feed
    the rewriting test).  Nonzero results are normalized monic.
    """
    F = tuple(F)
    if not F:
        raise ContextError("need at least one generator")
    for f in F:
        if not f:
            raise ContextError("zero generators are not allowed")
        if f.ring != ring:
            raise ContextError("generator from a different ring")
    m = len(F)
    basis = EngineBasis(ring, F, [], [] if instrumented else None, [])
    one = ring.one_mono()
    for j, f in enumerate(F, start=1):
        basis.elements.append(SigLabeledPoly(f, ModuleMonomial(one, j),
                                             len(basis.elements)))
        if instrumented:
            basis.shadows.append(ring.unit_vector(j, m))

    queue = PairQueue(ring)
    for i in range(m):
        for j in range(i + 1, m):
            queue.push(make_pair(basis.elements[i], basis.elements[j], ring))

    while queue:
        pair = queue.pop()
        if pair_divisible(pair, basis):
            basis.trace.append((pair.pair_sig, "syzygy-skip"))
            continue
        if pair_rewritable(pair, basis):
            basis.trace.append((pair.pair_sig, "rewrite-skip"))
            continue
        f_el = basis.elements[pair.f_idx]
        g_el = basis.elements[pair.g_idx]
        c = f_el.poly.lc() / g_el.poly.lc()
        h = f_el.poly.mul_term(ring.field.one, pair.tf) - g_el.poly.mul_term(c, pair.tg)
        shadow = None
        if instrumented:
            shadow = (basis.shadows[pair.f_idx].mul_term(ring.field.one, pair.tf)
                      - basis.shadows[pair.g_idx].mul_term(c, pair.tg))
            _check_shadow(h, pair.pair_sig, shadow, basis)
        h, shadow = f5_reduce(h, pair.pair_sig, basis, shadow)
        if h:
            lc = h.lc()
            h = h.monic()
            if shadow is not None:
                shadow = shadow.scale(ring.field.one / lc)
        el = SigLabeledPoly(h, pair.pair_sig, len(basis.elements))
        basis.elements.append(el)
        if instrumented:
            basis.shadows.append(shadow)
            _check_shadow(h, el.sig, shadow, basis)
        basis.trace.append((pair.pair_sig, "new-element" if h else "reduced-to-zero"))
        if h:
            for other in basis.elements[:-1]:
                if other.poly:
                    queue.push(make_pair(el, other, ring))
    return basis


def classify_pair(pair: CriticalPair, basis: EngineBasis) -> Regularity:
    """Three-way classification of a pair from the shadow vectors.

    Requires an instrumented basis: a signature tie hides whether the shadow
    leads cancel (non-regular) or merely collide (super-regular).
    """
    if basis.shadows is None:
        raise EngineError("classify_pair needs an instrumented basis")
    ring = basis.ring
    f_el = basis.elements[pair.f_idx]
    g_el = basis.elements[pair.g_idx]
    c = f_el.poly.lc() / g_el.poly.lc()
    u = basis.shadows[pair.f_idx].mul_term(ring.field.one, pair.tf)
    v = basis.shadows[pair.g_idx].mul_term(c, pair.tg)
    w = u - v
    if w.lpp() != u.lpp():
        return Regularity.NON_REGULAR
    if pair.regular:
        return Regularity.REGULAR
    return Regularity.SUPER_REGULAR
