"""Certificate-producing verification of candidate surjections between knot groups.

A relator image is shown trivial in the target group by an explicit list of
relator insertions, each followed by free reduction, ending at the empty word.
Surjectivity is shown by writing every target generator as a product of the
images, again with a triviality certificate for the difference.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, NamedTuple

from .errors import InternalInvariantViolation, KnotFileSyntaxError, UnknownPresentation
from .folding import FoldedGraph
from .words import (
    KnotTable,
    WirtingerPresentation,
    concat,
    exponent_sum,
    format_word,
    free_reduce,
    invert,
    parse_knot_file,
    substitute,
)


@dataclass(frozen=True)
class Budget:
    max_length: int = 64
    max_depth: int = 24
    max_nodes: int = 2_000_000
    conjugator_length: int = 2


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class HomCandidate:
    source: str
    target: str
    images: Mapping[int, tuple]

    def __post_init__(self):
        object.__setattr__(self, "images", {int(g): free_reduce(w) for g, w in dict(self.images).items()})

    def validate(self, src: WirtingerPresentation, tgt: WirtingerPresentation) -> list[str]:
        """Problems with the candidate's shape; empty when well formed."""
        problems = []
        for g in src.generators:
            if g not in self.images:
                problems.append(f"generator {g} has no image")
        for g, w in sorted(self.images.items()):
            if g not in src.generators:
                problems.append(f"image given for nonexistent generator {g}")
            if any(abs(x) > tgt.num_generators for x in w):
                problems.append(f"image of {g} uses a letter outside 1..{tgt.num_generators}")
            if exponent_sum(w) != 1:
                problems.append(f"image of {g} has exponent sum {exponent_sum(w)}, expected 1")
        return problems

    def to_text(self) -> str:
        lines = [f"hom {self.source} -> {self.target}"]
        lines += [f"map {g}: {format_word(w)}".rstrip() for g, w in sorted(self.images.items())]
        return "\n".join(lines) + "\n"


def parse_hom_file(text: str) -> list[HomCandidate]:
    """Parse ``hom <src> -> <dst>`` blocks followed by ``map <g>: <word>`` lines."""
    out = []
    cur = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        if tokens[0] == "hom":
            if len(tokens) != 4 or tokens[2] != "->":
                raise KnotFileSyntaxError("expected 'hom <source> -> <target>'", lineno, 1)
            if cur:
                out.append(HomCandidate(*cur))
            cur = (tokens[1], tokens[3], {})
        elif tokens[0] == "map":
            if cur is None:
                raise KnotFileSyntaxError("'map' before any 'hom' line", lineno, 1)
            head, _, rest = line.partition(":")
            if not _:
                raise KnotFileSyntaxError("expected 'map <g>: <word>'", lineno, len(line.rstrip()) + 1)
            try:
                g = int(head.split()[1])
                word = tuple(int(x) for x in rest.split())
            except (ValueError, IndexError):
                raise KnotFileSyntaxError("malformed map line", lineno, 1) from None
            if 0 in word:
                raise KnotFileSyntaxError("0 is not a generator", lineno, line.index(":") + 1)
            if g in cur[2]:
                raise KnotFileSyntaxError(f"generator {g} mapped twice", lineno, 1)
            cur[2][g] = word
        else:
            raise KnotFileSyntaxError(f"unknown keyword {tokens[0]!r}", lineno, raw.find(tokens[0]) + 1)
    if cur:
        out.append(HomCandidate(*cur))
    return out


# -- triviality certificates ---------------------------------------------------------


class Move(NamedTuple):
    """Insert (or delete) a rotated target relator, possibly inverted, at ``position``."""

    position: int
    relator: int  # 0-based index into the target's relators
    rotation: int
    inverse: bool
    direction: str = "insert"


def relator_variant(P: WirtingerPresentation, relator: int, rotation: int, inverse: bool) -> tuple:
    r = P.relators[relator]
    r = r[rotation:] + r[:rotation]
    return invert(r) if inverse else r


def apply_move(word: tuple, move: Move, P: WirtingerPresentation) -> tuple:
    piece = relator_variant(P, move.relator, move.rotation, move.inverse)
    i = move.position
    if not 0 <= i <= len(word):
        raise ValueError(f"move position {i} outside word of length {len(word)}")
    if move.direction == "insert":
        return free_reduce(word[:i] + piece + word[i:])
    if move.direction == "delete":
        if word[i : i + len(piece)] != piece:
            raise ValueError("delete move does not match the word")
        return free_reduce(word[:i] + word[i + len(piece) :])
    raise ValueError(f"unknown direction {move.direction!r}")


@dataclass(frozen=True)
class TrivialityCertificate:
    word: tuple
    moves: tuple

    def replay(self, P: WirtingerPresentation) -> tuple:
        w = free_reduce(self.word)
        for m in self.moves:
            w = apply_move(w, m, P)
        return w

    def verify(self, P: WirtingerPresentation) -> bool:
        return self.replay(P) == ()

    def __len__(self):
        return len(self.moves)


class SearchExhausted(Exception):
    pass


def _variants(P: WirtingerPresentation):
    seen = {}
    for i in range(len(P.relators)):
        for inv in (False, True):
            for rot in range(4):
                v = relator_variant(P, i, rot, inv)
                seen.setdefault(v, (i, rot, inv))
    return [(v, tag) for v, tag in seen.items()]


def find_triviality_certificate(word, P: WirtingerPresentation, budget: Budget = DEFAULT_BUDGET):
    """Search for insertion moves reducing ``word`` to the empty word.

    Best-first over words ordered by (length, depth): short words are
    expanded first, ties broken by discovery order, so the result is
    deterministic.  Raises :class:`SearchExhausted` when the budget runs out.
    """
    start = free_reduce(word)
    if not start:
        return TrivialityCertificate(start, ())
    variants = _variants(P)
    parent = {start: None}
    heap = [(len(start), 0, 0, start)]
    counter = 1
    while heap:
        _, depth, _, w = heapq.heappop(heap)
        if depth >= budget.max_depth:
            continue
        for pos in range(len(w) + 1):
            left, right = w[:pos], w[pos:]
            for piece, (ri, rot, inv) in variants:
                nw = concat(concat(left, piece), right)
                if len(nw) > budget.max_length or nw in parent:
                    continue
                parent[nw] = (w, Move(pos, ri, rot, inv))
                if not nw:
                    moves = []
                    cur = nw
                    while parent[cur] is not None:
                        cur, mv = parent[cur]
                        moves.append(mv)
                    return TrivialityCertificate(start, tuple(reversed(moves)))
                if len(parent) > budget.max_nodes:
                    raise SearchExhausted(f"node cap {budget.max_nodes} reached")
                heapq.heappush(heap, (len(nw), depth + 1, counter, nw))
                counter += 1
    raise SearchExhausted("search space exhausted within length/depth bounds")


# -- homomorphism and surjectivity checks -----------------------------------------------------


@dataclass
class Failure:
    where: str  # "relator <i>" or "generator <g>" or "candidate"
    cause: str  # exponent-sum | budget-exhausted | malformed

    @property
    def definite(self) -> bool:
        return self.cause in ("exponent-sum", "malformed")

    def __str__(self):
        return f"{self.cause} at {self.where}"


@dataclass(frozen=True)
class SurjectivityWitness:
    generator: int
    expression: tuple  # word over source generators
    certificate: TrivialityCertificate  # for substitute(expression) * g^-1


@dataclass(frozen=True)
class SurjectivityCertificate:
    witnesses: tuple

    def verify(self, cand: HomCandidate, target: WirtingerPresentation) -> bool:
        gens = set()
        for wit in self.witnesses:
            value = substitute(wit.expression, cand.images)
            if free_reduce(concat(value, (-wit.generator,))) != wit.certificate.word:
                return False
            if not wit.certificate.verify(target):
                return False
            gens.add(wit.generator)
        return gens == set(target.generators)


def _resolve(tables: Mapping[str, WirtingerPresentation], name: str) -> WirtingerPresentation:
    try:
        return tables[name]
    except KeyError:
        raise UnknownPresentation(name) from None


def check_homomorphism(cand: HomCandidate, knots: Mapping, budget: Budget = DEFAULT_BUDGET):
    """Certificates for every source relator, or a :class:`Failure`."""
    src = _resolve(knots, cand.source)
    tgt = _resolve(knots, cand.target)
    problems = cand.validate(src, tgt)
    if problems:
        if all("exponent sum" in s for s in problems):
            return Failure("candidate: " + "; ".join(problems), "exponent-sum")
        return Failure("candidate: " + "; ".join(problems), "malformed")
    certs = []
    for i, r in enumerate(src.relators, start=1):
        w = substitute(r, cand.images)
        if exponent_sum(w) != 0:
            return Failure(f"relator {i}", "exponent-sum")
        try:
            cert = find_triviality_certificate(w, tgt, budget)
        except SearchExhausted:
            return Failure(f"relator {i}", "budget-exhausted")
        if not cert.verify(tgt):
            raise InternalInvariantViolation(f"certificate for relator {i} does not replay")
        certs.append(cert)
    return certs


def _conjugators(n: int, length: int):
    letters = [g for g in range(1, n + 1)] + [-g for g in range(1, n + 1)]
    yield ()
    for k in range(1, length + 1):
        for u in product(letters, repeat=k):
            if free_reduce(u) == u:
                yield u


def check_surjectivity(cand: HomCandidate, knots: Mapping, budget: Budget = DEFAULT_BUDGET, fast_only: bool = False):
    """Express every target generator through the images; certificate or :class:`Failure`.

    The fast path is plain membership in the free group (Stallings folding).
    If that fails, conjugates of target relators by words up to
    ``budget.conjugator_length`` are added as extra generators; relator tokens
    are then dropped from the expression and the leftover difference gets a
    triviality certificate from the search.
    """
    src = _resolve(knots, cand.source)
    tgt = _resolve(knots, cand.target)
    images = {g: cand.images[g] for g in src.generators}
    graph = FoldedGraph(images)
    witnesses = []
    wide_graphs = []
    for g in tgt.generators:
        expr = graph.read((g,))
        level = 0
        while expr is None and not fast_only and level <= budget.conjugator_length:
            if len(wide_graphs) <= level:
                gens = dict(images)
                token = src.num_generators
                for u in _conjugators(tgt.num_generators, level):
                    for r in tgt.relators:
                        token += 1
                        gens[token] = free_reduce(u + r + invert(u))
                wide_graphs.append(FoldedGraph(gens))
            expr = wide_graphs[level].read((g,))
            level += 1
        if expr is None:
            return Failure(f"generator {g}", "budget-exhausted")
        expr = free_reduce(x for x in expr if abs(x) <= src.num_generators)
        diff = free_reduce(concat(substitute(expr, images), (-g,)))
        try:
            cert = find_triviality_certificate(diff, tgt, budget)
        except SearchExhausted:
            return Failure(f"generator {g}", "budget-exhausted")
        witnesses.append(SurjectivityWitness(g, expr, cert))
    sc = SurjectivityCertificate(tuple(witnesses))
    if not sc.verify(cand, tgt):
        raise InternalInvariantViolation("surjectivity certificate does not replay")
    return sc


# -- table verification ------------------------------------------------------------------


@dataclass
class CandidateResult:
    source: str
    target: str
    passed: bool
    failure: Failure | None = None
    relator_certificates: list = field(default_factory=list)
    surjectivity: SurjectivityCertificate | None = None

    @property
    def certificate_size(self) -> int:
        n = sum(len(c) for c in self.relator_certificates)
        if self.surjectivity:
            n += sum(len(w.certificate) for w in self.surjectivity.witnesses)
        return n

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.source} {self.target}"
        return f"FAIL {self.source} {self.target} {self.failure.cause}"


def verify_candidate(cand: HomCandidate, knots: Mapping, budget: Budget = DEFAULT_BUDGET) -> CandidateResult:
    try:
        hom = check_homomorphism(cand, knots, budget)
    except UnknownPresentation as exc:
        return CandidateResult(cand.source, cand.target, False, Failure("candidate", f"unknown-presentation {exc}"))
    if isinstance(hom, Failure):
        return CandidateResult(cand.source, cand.target, False, hom)
    surj = check_surjectivity(cand, knots, budget)
    if isinstance(surj, Failure):
        return CandidateResult(cand.source, cand.target, False, surj, hom)
    return CandidateResult(cand.source, cand.target, True, None, hom, surj)


@dataclass
class TableReport:
    results: list

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1

    def machine_lines(self) -> list[str]:
        return [r.line() for r in self.results]

    def human(self) -> str:
        out = []
        for r in self.results:
            if r.passed:
                sizes = [len(c) for c in r.relator_certificates]
                out.append(
                    f"{r.source} -> {r.target}: homomorphism ok (moves per relator {sizes}), "
                    f"surjective ok ({r.certificate_size} moves in total)"
                )
            else:
                out.append(f"{r.source} -> {r.target}: FAILED, {r.failure}")
        npass = sum(r.passed for r in self.results)
        out.append(f"{npass}/{len(self.results)} candidates verified")
        return "\n".join(out)


def _verify_job(args):
    cand, knots, budget = args
    return verify_candidate(cand, knots, budget)


def verify_table(knots: KnotTable | str, homs: list | str, budget: Budget = DEFAULT_BUDGET, workers: int = 1) -> TableReport:
    """Run both checks on every candidate.  Strings are parsed as file contents."""
    if isinstance(knots, str):
        knots = parse_knot_file(knots)
    if isinstance(homs, str):
        homs = parse_hom_file(homs)
    jobs = [(c, dict(knots), budget) for c in homs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_verify_job, jobs))
    else:
        results = [_verify_job(j) for j in jobs]
    return TableReport(results)


def bundled_homs() -> list[HomCandidate]:
    from .words import bundled_data_path

    return parse_hom_file(bundled_data_path("homs.txt").read_text(encoding="utf-8"))
