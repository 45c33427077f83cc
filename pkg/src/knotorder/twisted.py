"""Wada's twisted Alexander invariant for SL(2, F_p) representations and the
divisibility obstruction to surjections between knot groups."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import InternalInvariantViolation, ResourceLimit
from .foxcalc import fox_jacobian
from .laurent import LaurentPoly, det_cofactor, det_euclid, divides
from .replib import (
    Representation,
    _inv,
    _mul,
    enumerate_reps,
    is_irreducible,
)
from .words import WirtingerPresentation, exponent_sum


@dataclass(frozen=True)
class TwistedAlex:
    p: int
    numerator: LaurentPoly
    denominator: LaurentPoly

    def __post_init__(self):
        if self.denominator.is_zero():
            raise InternalInvariantViolation("twisted Alexander denominator is zero")
        object.__setattr__(self, "numerator", self.numerator.normalized())
        object.__setattr__(self, "denominator", self.denominator.normalized())

    def __str__(self):
        return f"numerator = {self.numerator}\ndenominator = {self.denominator}"


def _word_matrix(w, rho: Representation):
    p = rho.p
    acc = (1, 0, 0, 1)
    for g in w:
        m = rho.images[abs(g) - 1][:4]
        acc = _mul(acc, m if g > 0 else _inv(m, p), p)
    return acc


def twisted_blocks(P: WirtingerPresentation, rho: Representation) -> list[list[list[list[LaurentPoly]]]]:
    """Fox matrix under ``x_i -> t rho(x_i)``: ``blocks[i][j]`` is a 2x2 polynomial matrix."""
    p = rho.p
    jac = fox_jacobian(P.relators, P.num_generators)
    out = []
    for row in jac:
        brow = []
        for elem in row:
            acc = [[{}, {}], [{}, {}]]
            for w, c in elem.items():
                e = exponent_sum(w)
                m = _word_matrix(w, rho)
                for k, (r, s) in enumerate(((0, 0), (0, 1), (1, 0), (1, 1))):
                    if m[k]:
                        acc[r][s][e] = acc[r][s].get(e, 0) + c * m[k]
            brow.append([[LaurentPoly(acc[r][s], p) for s in range(2)] for r in range(2)])
        out.append(brow)
    return out


def expand_blocks(blocks, drop_column: int | None = None) -> list[list[LaurentPoly]]:
    """Flatten block matrix, skipping block column ``drop_column`` (1-indexed)."""
    rows = []
    for brow in blocks:
        for r in range(2):
            line = []
            for j, block in enumerate(brow, start=1):
                if j == drop_column:
                    continue
                line.extend(block[r])
            rows.append(line)
    return rows


def denominator_for(rho: Representation, j: int) -> LaurentPoly:
    """``det(t rho(x_j) - I)``, which equals ``t^2 - tr(rho(x_j)) t + 1``."""
    p = rho.p
    a, b, c, d = rho.images[j - 1][:4]
    t = LaurentPoly.t(p)
    one = LaurentPoly([1], p)
    m00 = t * a - one
    m11 = t * d - one
    return m00 * m11 - (t * b) * (t * c)


def twisted_pair(P: WirtingerPresentation, rho: Representation, column: int, oracle: bool = False):
    """Unnormalized ``(numerator, denominator)`` using block column ``column``."""
    blocks = twisted_blocks(P, rho)
    mat = expand_blocks(blocks, column)
    num = det_cofactor(mat, rho.p) if oracle else det_euclid(mat, rho.p)
    return num, denominator_for(rho, column)


def _same_ratio(n1, d1, n2, d2) -> bool:
    return (n1 * d2).normalized() == (n2 * d1).normalized()


def twisted_alexander(
    P: WirtingerPresentation, rho: Representation, columns: Sequence[int] | None = None
) -> TwistedAlex:
    """Twisted Alexander invariant of ``P`` at ``rho`` as a normalized pair.

    The pair is computed for every block column in ``columns`` (by default the
    first and the last); all the resulting ratios must agree.
    """
    n = P.num_generators
    if n == 1:
        den = denominator_for(rho, 1)
        return TwistedAlex(rho.p, LaurentPoly([1], rho.p), den)
    if columns is None:
        columns = (1, n)
    blocks = twisted_blocks(P, rho)
    pairs = []
    for j in dict.fromkeys(columns):
        num = det_euclid(expand_blocks(blocks, j), rho.p)
        pairs.append((num, denominator_for(rho, j)))
    n0, d0 = pairs[0]
    for nk, dk in pairs[1:]:
        if not _same_ratio(n0, d0, nk, dk):
            raise InternalInvariantViolation(f"{P.name}: twisted Alexander depends on the deleted column")
    return TwistedAlex(rho.p, n0, d0)


def ksw_divides(source: TwistedAlex, target: TwistedAlex) -> bool:
    """Necessary condition for ``source`` to come from a surjection onto ``target``'s knot:
    equal denominators and the target numerator dividing the source numerator."""
    if source.p != target.p:
        raise ValueError("invariants over different fields")
    if source.denominator != target.denominator:
        return False
    return divides(target.numerator, source.numerator)


# -- refutation ------------------------------------------------------------------


@dataclass
class RefutationReport:
    refuted: bool
    p: int | None = None
    witness_index: int | None = None
    witness: Representation | None = None
    cause: str = ""
    primes_tried: list = field(default_factory=list)

    def __str__(self):
        if self.refuted:
            return f"REFUTED p={self.p} rep={self.witness_index}"
        return "INCONCLUSIVE" + (f" ({self.cause})" if self.cause else "")


def _has_match(target_inv: TwistedAlex, source_invs) -> bool:
    return any(ksw_divides(s, target_inv) for s in source_invs)


def refute_by_twisted(
    P1: WirtingerPresentation,
    P2: WirtingerPresentation,
    primes: Sequence[int] = (2, 3, 5, 7),
    budget: int | None = None,
    include_reducible: bool = False,
    workers: int = 1,
) -> RefutationReport:
    """Look for a representation of ``P2`` whose invariant is matched by no
    representation of ``P1``, which rules out any surjection ``P1 -> P2``.

    Only irreducible representations are used unless ``include_reducible``;
    the pullback of an irreducible representation along a surjection has the
    same image and is again irreducible, so the restriction stays sound.
    Witness order follows the enumeration order of ``P2``'s representations.
    """
    tried = []
    for p in primes:
        tried.append(p)
        try:
            reps2 = enumerate_reps(P2, p, budget=budget)
            reps1 = _source_invariants(P1, p, budget, include_reducible)
        except ResourceLimit as exc:
            return RefutationReport(False, cause=f"resource limit: {exc}", primes_tried=tried)
        # indices refer to the full conjugacy-reduced enumeration of P2
        candidates = [(i, r) for i, r in enumerate(reps2) if include_reducible or is_irreducible(r)]
        inv1: dict = {}
        for _, ta in reps1:
            inv1.setdefault(ta.denominator, []).append(ta)

        def failing(item):
            idx, rho2 = item
            ta2 = twisted_alexander(P2, rho2)
            return not _has_match(ta2, inv1.get(ta2.denominator, ()))

        if workers > 1:
            with ThreadPoolExecutor(workers) as pool:
                flags = list(pool.map(failing, candidates))
        else:
            flags = []
            for item in candidates:
                flags.append(failing(item))
                if flags[-1]:
                    break
        for (idx, rho2), bad in zip(candidates, flags):
            if bad:
                if not verify_witness(P1, P2, rho2, include_reducible=include_reducible):
                    raise InternalInvariantViolation("twisted refutation witness failed re-verification")
                return RefutationReport(True, p=p, witness_index=idx, witness=rho2, primes_tried=tried)
    return RefutationReport(False, cause="no witness found", primes_tried=tried)


@lru_cache(maxsize=256)
def _source_invariants(P1, p, budget, include_reducible):
    reps = enumerate_reps(P1, p, budget=budget)
    if not include_reducible:
        reps = [r for r in reps if is_irreducible(r)]
    return tuple((r, twisted_alexander(P1, r)) for r in reps)


def verify_witness(P1, P2, rho2: Representation, reps1=None, include_reducible: bool = False) -> bool:
    """Independent recheck of a witness: fresh enumeration, every block column
    for the target invariant, and a plain scan over all source invariants."""
    p = rho2.p
    rho2.check(P2)
    if reps1 is None:
        reps1 = enumerate_reps(P1, p)
        if not include_reducible:
            reps1 = [r for r in reps1 if is_irreducible(r)]
    target = twisted_alexander(P2, rho2, columns=range(1, P2.num_generators + 1))
    for r in reps1:
        r.check(P1)
        if ksw_divides(twisted_alexander(P1, r, columns=(P1.num_generators, 1)), target):
            return False
    return True
