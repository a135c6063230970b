"""Groebner bases with signatures and explicit membership certificates."""

from .ring import (ContextError, ModInt, ModuleMonomial, ModuleVector,
                   Polynomial, PrimeField, QQ, Ring, divide, interreduce,
                   mono_div, mono_divides, mono_lcm, mono_mul, normal_form)
from .labeled import (CoverageViolation, FullLabeledPoly, LabeledBasis,
                      MonoLabeledPoly, SigLabeledPoly, is_standard_form,
                      labeled_add, labeled_scale, refute_full_labeled,
                      signature)
from .engine import (CriticalPair, EngineBasis, EngineError, PairQueue, Regularity,
                     classify_pair, f5_divisible, f5_reduce, f5_rewritable,
                     f5_run, make_pair, pair_divisible, pair_rewritable)
from .convert import (ConversionError, incomplete_standard_form, mono2full,
                      representation, sig2mono)
from .detach import DetachResult, GBWithReps, detach, prepare, verify_representation
from .oracle import buchberger_with_cofactors, is_groebner, random_system
from .parse import ParseError, parse_poly, parse_system, render_system

__version__ = "0.1.0"
