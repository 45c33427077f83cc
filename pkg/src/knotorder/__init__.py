"""Decide surjections between knot groups given by Wirtinger presentations.

Existence is shown by verifying explicit maps with replayable certificates;
non-existence by Alexander polynomial divisibility and by twisted Alexander
invariants of SL(2, F_p) representations.
"""

from .alexpoly import alexander_matrix, alexander_polynomial
from .errors import (
    InternalInvariantViolation,
    InvariantViolation,
    KnotFileSyntaxError,
    KnotOrderError,
    MissingImage,
    NonPropagatablePresentation,
    ResourceLimit,
    UnknownPresentation,
)
from .foxcalc import GroupRingElem, fox_derivative
from .homver import (
    Budget,
    HomCandidate,
    bundled_homs,
    check_homomorphism,
    check_surjectivity,
    parse_hom_file,
    verify_table,
)
from .laurent import LaurentPoly, divides
from .pipeline import Config, OrderReport, PairDecision, decide_pair, order
from .replib import Mat2, Representation, enumerate_reps, evaluate, is_irreducible
from .twisted import TwistedAlex, ksw_divides, refute_by_twisted, twisted_alexander
from .words import (
    KnotTable,
    WirtingerPresentation,
    bundled_knots,
    concat,
    free_reduce,
    invert,
    parse_knot_file,
    substitute,
)

__version__ = "0.1.0"
