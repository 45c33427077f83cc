"""Pair decisions (does G(K1) surject onto G(K2)?) and the batch order driver."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Mapping, Sequence

from .alexpoly import alexander_polynomial
from .errors import KnotOrderError, UnknownPresentation
from .homver import Budget, CandidateResult, HomCandidate, verify_candidate
from .laurent import divides
from .replib import DEFAULT_PRIMES
from .twisted import refute_by_twisted
from .words import KnotTable, WirtingerPresentation

SURJECTION_VERIFIED = "SURJECTION_VERIFIED"
REFUTED_ALEXANDER = "REFUTED_ALEXANDER"
REFUTED_TWISTED = "REFUTED_TWISTED"
INCONCLUSIVE = "INCONCLUSIVE"


class AntisymmetryViolation(KnotOrderError):
    pass


@dataclass(frozen=True)
class Config:
    primes: tuple = DEFAULT_PRIMES
    budget: Budget = Budget()
    workers: int = 1
    rep_budget: int | None = None  # max partial assignments per enumeration
    include_reducible: bool = False

    @classmethod
    def from_text(cls, text: str) -> "Config":
        """Parse ``key = value`` lines; ``#`` starts a comment."""
        cfg = cls()
        budget = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = (s.strip() for s in line.partition("="))
            if not sep:
                raise ValueError(f"config line {lineno}: expected key = value")
            if key == "primes":
                cfg = replace(cfg, primes=tuple(int(x) for x in value.replace(",", " ").split()))
            elif key == "workers":
                cfg = replace(cfg, workers=int(value))
            elif key == "rep_budget":
                cfg = replace(cfg, rep_budget=int(value) if value.lower() != "none" else None)
            elif key == "include_reducible":
                cfg = replace(cfg, include_reducible=value.lower() in ("1", "true", "yes"))
            elif key in ("max_length", "max_depth", "max_nodes", "conjugator_length"):
                budget[key] = int(value)
            else:
                raise ValueError(f"config line {lineno}: unknown key {key!r}")
        if budget:
            cfg = replace(cfg, budget=replace(cfg.budget, **budget))
        return cfg

    @classmethod
    def from_file(cls, path) -> "Config":
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())


@dataclass
class PairDecision:
    source: str
    target: str
    verdict: str
    p: int | None = None
    witness_index: int | None = None
    evidence: object = None
    cause: str = ""
    ms: float = 0.0

    @property
    def evidence_size(self) -> int:
        if self.verdict == SURJECTION_VERIFIED and isinstance(self.evidence, CandidateResult):
            return self.evidence.certificate_size
        if self.verdict == REFUTED_ALEXANDER:
            return 2
        if self.verdict == REFUTED_TWISTED:
            return 1
        return 0

    def line(self) -> str:
        parts = [self.source, self.target, self.verdict]
        if self.verdict == REFUTED_TWISTED:
            parts.append(f"p={self.p} rep={self.witness_index}")
        elif self.verdict == INCONCLUSIVE and self.cause:
            parts.append(f"({self.cause})")
        elif self.verdict == SURJECTION_VERIFIED:
            parts.append(f"evidence={self.evidence_size}")
        return " ".join(parts)

    def as_json(self) -> dict:
        d = {
            "source": self.source,
            "target": self.target,
            "verdict": self.verdict,
            "evidence-size": self.evidence_size,
            "ms": round(self.ms, 3),
        }
        if self.p is not None:
            d["p"] = self.p
        return d


@lru_cache(maxsize=None)
def _alex(P: WirtingerPresentation):
    return alexander_polynomial(P)


def _identity_candidate(name: str, P: WirtingerPresentation) -> HomCandidate:
    return HomCandidate(name, name, {g: (g,) for g in P.generators})


def decide_pair(
    k1: str,
    k2: str,
    knots: Mapping[str, WirtingerPresentation],
    homs: Sequence[HomCandidate] = (),
    config: Config = Config(),
) -> PairDecision:
    """Decide whether G(k1) surjects onto G(k2).

    Supplied candidates are verified first; then Alexander divisibility, then
    the twisted obstruction over ``config.primes``.
    """
    start = time.perf_counter()
    try:
        P1, P2 = knots[k1], knots[k2]
    except KeyError as exc:
        raise UnknownPresentation(str(exc)) from None

    def done(**kw):
        return PairDecision(k1, k2, ms=(time.perf_counter() - start) * 1000, **kw)

    candidates = [c for c in homs if c.source == k1 and c.target == k2]
    if k1 == k2:
        candidates = [_identity_candidate(k1, P1)] + candidates
    failures = []
    for cand in candidates:
        res = verify_candidate(cand, knots, config.budget)
        if res.passed:
            return done(verdict=SURJECTION_VERIFIED, evidence=res)
        failures.append(str(res.failure))

    d1, d2 = _alex(P1), _alex(P2)
    if not divides(d2, d1):
        return done(verdict=REFUTED_ALEXANDER, evidence=(d1, d2))

    report = refute_by_twisted(
        P1, P2, config.primes, budget=config.rep_budget, include_reducible=config.include_reducible
    )
    if report.refuted:
        return done(verdict=REFUTED_TWISTED, p=report.p, witness_index=report.witness_index, evidence=report)
    cause = report.cause
    if failures:
        cause += "; candidate failed: " + ", ".join(failures)
    return done(verdict=INCONCLUSIVE, cause=cause, evidence=report)


@dataclass
class OrderReport:
    decisions: list
    warnings: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        """Target name -> sorted sources with a verified surjection onto it."""
        out: dict[str, list] = {}
        for d in self.decisions:
            if d.verdict == SURJECTION_VERIFIED and d.source != d.target:
                out.setdefault(d.target, []).append(d.source)
        return {t: sorted(s) for t, s in sorted(out.items())}

    def counts(self) -> dict:
        c = {v: 0 for v in (SURJECTION_VERIFIED, REFUTED_ALEXANDER, REFUTED_TWISTED, INCONCLUSIVE)}
        for d in self.decisions:
            c[d.verdict] += 1
        return c

    def text(self) -> str:
        """Deterministic text report (no timings)."""
        lines = [d.line() for d in self.decisions]
        lines.append("")
        for tgt, srcs in self.summary.items():
            lines.append(f"{', '.join(srcs)} >= {tgt}")
        lines.append(" ".join(f"{k}={v}" for k, v in self.counts().items()))
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines) + "\n"

    def json(self, timings: bool = True) -> str:
        rows = [d.as_json() for d in self.decisions]
        if not timings:
            for r in rows:
                r.pop("ms")
        return json.dumps(rows, indent=1)


def _decide_job(args):
    k1, k2, knots, homs, config = args
    return decide_pair(k1, k2, knots, homs, config)


def order(knots: KnotTable, homs: Sequence[HomCandidate] = (), config: Config = Config()) -> OrderReport:
    """Decide every ordered pair of distinct knots in ``knots``.

    Raises :class:`AntisymmetryViolation` if two distinct knots are verified to
    surject onto each other.
    """
    names = sorted(knots)
    pairs = [(a, b) for a in names for b in names if a != b]
    table = dict(knots)
    jobs = [(a, b, table, list(homs), config) for a, b in pairs]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            decisions = list(pool.map(_decide_job, jobs, chunksize=max(1, len(jobs) // (4 * config.workers))))
    else:
        decisions = [_decide_job(j) for j in jobs]
    report = OrderReport(decisions)

    verified = {(d.source, d.target) for d in decisions if d.verdict == SURJECTION_VERIFIED}
    for a, b in sorted(verified):
        if a < b and (b, a) in verified:
            raise AntisymmetryViolation(f"{a} and {b} surject onto each other")
    refuted = {(d.source, d.target) for d in decisions if d.verdict.startswith("REFUTED")}
    for a, b in sorted(verified):
        for b2, c in sorted(verified):
            if b2 == b and a != c and (a, c) in refuted:
                report.warnings.append(f"transitivity: {a} >= {b} >= {c} but {a} -> {c} was refuted")
    return report
