"""Classical Alexander matrix and polynomial of a Wirtinger presentation."""

from __future__ import annotations

from .errors import InternalInvariantViolation
from .foxcalc import GroupRingElem, fox_jacobian
from .laurent import INTEGERS, LaurentPoly, determinant, divides
from .words import WirtingerPresentation, exponent_sum

__all__ = [
    "abelianize",
    "alexander_matrix",
    "alexander_polynomial",
    "alexander_minor",
    "alexander_refutes",
    "divides",
]


def abelianize(x: GroupRingElem, p: int = INTEGERS) -> LaurentPoly:
    """Send every generator to ``t``: a word becomes ``t^(exponent sum)``."""
    acc: dict[int, int] = {}
    for w, c in x.items():
        e = exponent_sum(w)
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly(acc, p)


def alexander_matrix(P: WirtingerPresentation, p: int = INTEGERS) -> list[list[LaurentPoly]]:
    """``(n-1) x n`` matrix of abelianized Fox derivatives."""
    jac = fox_jacobian(P.relators, P.num_generators)
    rows = [[abelianize(x, p) for x in row] for row in jac]
    t_minus_1 = LaurentPoly({1: 1, 0: -1}, p)
    for i, row in enumerate(rows):
        total = LaurentPoly([], p)
        for f in row:
            total = total + f
        if not (total * t_minus_1).is_zero():
            raise InternalInvariantViolation(f"{P.name}: row {i + 1} of the Alexander matrix does not sum to 0")
    return rows


def alexander_minor(P: WirtingerPresentation, column: int, p: int = INTEGERS) -> LaurentPoly:
    """Determinant after deleting generator column ``column`` (1-indexed); not normalized."""
    rows = alexander_matrix(P, p)
    j = column - 1
    return determinant([r[:j] + r[j + 1 :] for r in rows], p)


def alexander_polynomial(P: WirtingerPresentation, check_columns=(1, None)) -> LaurentPoly:
    """Normalized Alexander polynomial over Z.

    The minor is taken for each column in ``check_columns`` (``None`` means the
    last one) and all results must agree after normalization.
    """
    n = P.num_generators
    if n == 1:
        return LaurentPoly([1])
    rows = alexander_matrix(P)
    results = []
    for col in check_columns:
        j = (n if col is None else col) - 1
        d = determinant([r[:j] + r[j + 1 :] for r in rows])
        if d.is_zero():
            raise InternalInvariantViolation(f"{P.name}: Alexander minor vanished")
        results.append(d.normalized())
    if any(r != results[0] for r in results):
        raise InternalInvariantViolation(f"{P.name}: Alexander minors disagree: {results}")
    return results[0]


def alexander_refutes(source: WirtingerPresentation, target: WirtingerPresentation) -> bool:
    """True when Alexander-polynomial divisibility rules out a surjection source -> target."""
    return not divides(alexander_polynomial(target), alexander_polynomial(source))
