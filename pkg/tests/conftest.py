"""Shared fixtures: the two hand-worked systems used throughout the suite."""

import pytest

from siggb import (LabeledBasis, ModuleMonomial, Ring, SigLabeledPoly,
                   parse_poly)


@pytest.fixture(scope="session")
def ring4():
    """Q[x,y,z,t], grevlex, x > y > z > t."""
    return Ring(("x", "y", "z", "t"))


@pytest.fixture(scope="session")
def F4(ring4):
    return tuple(parse_poly(s, ring4) for s in
                 ("y*z^3 - x^2*t^2", "x*z^2 - y^2*t", "x^2*y - z^2*t"))


# One signature-labeled Groebner basis of <F4>, listed element by element as
# (polynomial, signature monomial, generator index).  Stamps follow the
# listing order.
FIXTURE_S = (
    ("y*z^3 - x^2*t^2", "1", 1),
    ("x*z^2 - y^2*t", "1", 2),
    ("x^2*y - z^2*t", "1", 3),
    ("x*y^3*t - z^4*t", "x*y", 2),
    ("z^6*t - y^5*t^2", "x*y*z^2", 2),
    ("y^3*z*t - x^3*t^2", "x", 1),
    ("z^5*t - x^4*t^2", "x^2", 1),
    ("y^5*t^2 - x^4*z*t^2", "x^2*z", 1),
    ("x^5*t^2 - z^2*t^5", "x^3", 1),
    ("y^6*t^2 - x*y^2*z*t^4", "z^3*t", 1),
)

# Hidden leading coefficients of the vectors behind FIXTURE_S, same order.
FIXTURE_COEFFS = (1, 1, 1, -1, 1, 1, 1, 1, -1, 1)

# The full cofactor vectors, same order, as per-generator expressions.
FIXTURE_VECTORS = (
    ("1", "0", "0"),
    ("0", "1", "0"),
    ("0", "0", "1"),
    ("0", "-x*y", "z^2"),
    ("0", "x*y*z^2 + y^3*t", "-z^4"),
    ("x", "-y*z", "0"),
    ("x^2", "0", "-z^3"),
    ("x^2*z", "-x*y*z^2 - y^3*t", "0"),
    ("-x^3 + y*t^2", "z^3*t", "x*z^3 + t^4"),
    ("z^3*t", "-x*y^2*z^2 - y^4*t + x*z*t^3", "y*z^4"),
)

# The reduced Groebner basis of <F4> as canonical strings.
REDUCED_GB4 = (
    "x*z^2 - y^2*t",
    "x^2*y - z^2*t",
    "y*z^3 - x^2*t^2",
    "y^3*z*t - x^3*t^2",
    "x*y^3*t - z^4*t",
    "z^5*t - x^4*t^2",
    "y^5*t^2 - x^4*z*t^2",
    "x^5*t^2 - z^2*t^5",
)


def mono_of(text, ring):
    """Exponent tuple of a single power product given as an expression."""
    return parse_poly(text, ring).lpp()


@pytest.fixture(scope="session")
def fixture_S(ring4, F4):
    els = []
    for stamp, (p, m, j) in enumerate(FIXTURE_S):
        els.append(SigLabeledPoly(parse_poly(p, ring4),
                                  ModuleMonomial(mono_of(m, ring4), j), stamp))
    return LabeledBasis(ring4, F4, tuple(els))


@pytest.fixture(scope="session")
def ring22():
    """Q[x,y,z], grevlex, x > y > z."""
    return Ring(("x", "y", "z"))


@pytest.fixture(scope="session")
def F22(ring22):
    return tuple(parse_poly(s, ring22) for s in
                 ("x*z - y", "y^2 + x*z", "2*x*y + 2*x"))
