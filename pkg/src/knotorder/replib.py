"""Representations of Wirtinger presentations into SL(2, F_p).

Matrices are :class:`Mat2` named tuples ``(a, b, c, d, p)`` standing for
``[[a, b], [c, d]]`` over F_p.  Search internals work on bare 4-tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Sequence

from .errors import InvariantViolation, NonPropagatablePresentation, ResourceLimit
from .words import WirtingerPresentation, free_reduce

DEFAULT_PRIMES = (2, 3, 5, 7)
MAX_PRIME = 13


class Mat2(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    p: int

    @classmethod
    def make(cls, rows, p) -> "Mat2":
        (a, b), (c, d) = rows
        m = cls(a % p, b % p, c % p, d % p, p)
        if (m.a * m.d - m.b * m.c) % p != 1:
            raise InvariantViolation("not-unimodular", f"{rows} has determinant != 1 mod {p}")
        return m

    @classmethod
    def identity(cls, p) -> "Mat2":
        return cls(1, 0, 0, 1, p)

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.p

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    if x.p != y.p:
        raise ValueError("matrices over different fields")
    return Mat2(*_mul(x[:4], y[:4], x.p), x.p)


def mat_inv(m: Mat2) -> Mat2:
    return Mat2(*_inv(m[:4], m.p), m.p)


def _mul(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def _inv(x, p):
    a, b, c, d = x
    return (d, (-b) % p, (-c) % p, a)


def _conj(g, x, p):
    return _mul(_mul(g, x, p), _inv(g, p), p)


_ID = (1, 0, 0, 1)


@lru_cache(maxsize=None)
def sl2_elements(p: int) -> tuple:
    """All elements of SL(2, F_p) as 4-tuples, in lexicographic order."""
    return tuple(m for m in product(range(p), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % p == 1)


@lru_cache(maxsize=None)
def elements_by_trace(p: int) -> dict:
    out: dict[int, list] = {t: [] for t in range(p)}
    for m in sl2_elements(p):
        out[(m[0] + m[3]) % p].append(m)
    return {t: tuple(v) for t, v in out.items()}


@lru_cache(maxsize=None)
def conjugacy_classes(p: int) -> tuple:
    """Conjugacy classes of SL(2, F_p), each a sorted tuple; ordered by least element."""
    seen = set()
    classes = []
    group = sl2_elements(p)
    for m in group:
        if m in seen:
            continue
        orbit = sorted({_conj(g, m, p) for g in group})
        seen.update(orbit)
        classes.append(tuple(orbit))
    return tuple(classes)


@lru_cache(maxsize=None)
def class_representatives(p: int) -> dict:
    """``trace -> [least element of each class with that trace]``."""
    reps: dict[int, list] = {t: [] for t in range(p)}
    for cls in conjugacy_classes(p):
        m = cls[0]
        reps[(m[0] + m[3]) % p].append(m)
    return {t: tuple(v) for t, v in reps.items()}


@dataclass(frozen=True)
class Representation:
    """Assignment of an SL(2, F_p) matrix to each generator (index 0 is x_1)."""

    p: int
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(Mat2(*m[:4], self.p) if len(m) == 4 else m for m in self.images))

    def __getitem__(self, g: int) -> Mat2:
        return self.images[g - 1]

    @property
    def trace(self) -> int:
        return self.images[0].trace

    def key(self) -> tuple:
        return tuple(m[:4] for m in self.images)

    def check(self, P: WirtingerPresentation) -> None:
        """Raise :class:`InvariantViolation` unless this is a representation of ``P``."""
        if len(self.images) != P.num_generators:
            raise InvariantViolation("rep-size", f"{len(self.images)} images for {P.num_generators} generators")
        for m in self.images:
            if m.p != self.p or m.det() != 1:
                raise InvariantViolation("not-unimodular", repr(m))
        for i, (a, b, c) in enumerate(P.triples()):
            lhs = _conj(self.images[a - 1][:4], self.images[b - 1][:4], self.p)
            if lhs != self.images[c - 1][:4]:
                raise InvariantViolation("relator", f"relator {i + 1} of {P.name} fails")
        traces = {m.trace for m in self.images}
        if len(traces) != 1:
            raise InvariantViolation("trace", f"images have several traces {sorted(traces)}")

    def is_valid(self, P: WirtingerPresentation) -> bool:
        try:
            self.check(P)
        except InvariantViolation:
            return False
        return True

    def conjugate(self, g) -> "Representation":
        g = g[:4]
        return Representation(self.p, tuple(_conj(g, m[:4], self.p) for m in self.images))

    def format(self) -> str:
        return "\n".join(f"{i}: {m.a} {m.b} {m.c} {m.d}" for i, m in enumerate(self.images, start=1))


def evaluate(w, rho: Representation) -> Mat2:
    """Image of the word ``w`` under ``rho``."""
    p = rho.p
    acc = _ID
    for g in w:
        m = rho.images[abs(g) - 1][:4]
        acc = _mul(acc, m if g > 0 else _inv(m, p), p)
    return Mat2(*acc, p)


def pullback(rho: Representation, images, num_source_generators: int) -> Representation:
    """``rho o phi`` where ``phi`` sends source generator ``g`` to the word ``images[g]``."""
    return Representation(rho.p, tuple(evaluate(images[g], rho) for g in range(1, num_source_generators + 1)))


def fixes_line(m, v, p) -> bool:
    a, b, c, d = m[:4]
    x, y = v
    return (x * (c * x + d * y) - y * (a * x + b * y)) % p == 0


def projective_line(p: int):
    return [(1, 0)] + [(x, 1) for x in range(p)]


def invariant_lines(rho: Representation) -> list:
    return [v for v in projective_line(rho.p) if all(fixes_line(m, v, rho.p) for m in rho.images)]


def is_irreducible(rho: Representation) -> bool:
    """No line of F_p^2 is invariant under every image."""
    return not invariant_lines(rho)


def is_abelian(rho: Representation) -> bool:
    first = rho.images[0]
    return all(m == first for m in rho.images)


def canonical_form(rho: Representation) -> tuple:
    """Lexicographically least entry tuple over the SL(2, F_p) conjugation orbit of ``rho``."""
    p = rho.p
    ims = [m[:4] for m in rho.images]
    group = sl2_elements(p)
    firsts = [(_conj(g, ims[0], p), g) for g in group]
    least = min(f for f, _ in firsts)
    best = None
    for f, g in firsts:
        if f != least:
            continue
        cand = tuple(_conj(g, m, p) for m in ims)
        if best is None or cand < best:
            best = cand
    return best


def conjugacy_reduce(reps: Sequence[Representation]) -> list[Representation]:
    """One representative (the canonical one) per simultaneous-conjugation orbit."""
    seen = {}
    for rho in reps:
        key = canonical_form(rho)
        if key not in seen:
            seen[key] = Representation(rho.p, key)
    return sorted(seen.values(), key=lambda r: (r.trace, r.key()))


# -- enumeration ---------------------------------------------------------------


def _closure(known: set, triples) -> set:
    known = set(known)
    changed = True
    while changed:
        changed = False
        for a, b, c in triples:
            if a in known and b in known and c not in known:
                known.add(c)
                changed = True
            elif a in known and c in known and b not in known:
                known.add(b)
                changed = True
    return known


def propagation_plan(P: WirtingerPresentation):
    """Choose root generators and the derivation steps that follow each of them.

    Returns ``[(root, steps, checks), ...]`` where ``steps`` is a list of
    ``(relator_index, target_generator)`` and ``checks`` lists relators whose
    three generators are all known once this level is done.
    """
    n = P.num_generators
    triples = P.triples()
    used = {g for t in triples for g in t}
    if n > 1 and used != set(P.generators):
        missing = sorted(set(P.generators) - used)
        raise NonPropagatablePresentation(f"{P.name}: generators {missing} appear in no relator")
    known: set = set()
    plan = []
    checked: set = set()
    while len(known) < n:
        best = None
        for g in P.generators:
            if g in known:
                continue
            size = len(_closure(known | {g}, triples))
            if best is None or size > best[0]:
                best = (size, g)
        root = best[1]
        known.add(root)
        steps = []
        changed = True
        while changed:
            changed = False
            for i, (a, b, c) in enumerate(triples):
                if a in known and b in known and c not in known:
                    steps.append((i, c))
                    known.add(c)
                    changed = True
                elif a in known and c in known and b not in known:
                    steps.append((i, b))
                    known.add(b)
                    changed = True
        derived = {i for i, _ in steps}
        checks = []
        for i, (a, b, c) in enumerate(triples):
            if i not in checked and i not in derived and a in known and b in known and c in known:
                checks.append(i)
        checked.update(checks)
        checked.update(derived)
        plan.append((root, steps, checks))
    return plan


def enumerate_reps(
    P: WirtingerPresentation,
    p: int,
    up_to_conjugacy: bool = True,
    irreducible_only: bool = False,
    traces=None,
    budget: int | None = None,
    max_prime: int = MAX_PRIME,
) -> list[Representation]:
    """All representations of ``P`` into SL(2, F_p).

    With ``up_to_conjugacy`` the first root generator is pinned to a class
    representative and the survivors are reduced to one per orbit; otherwise
    every representation is listed (exhaustive mode).  ``budget`` caps the
    number of partial assignments visited and raises :class:`ResourceLimit`.
    """
    if p < 2 or p > max_prime or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"p={p} must be a prime <= {max_prime}")
    plan = propagation_plan(P)
    triples = P.triples()
    n = P.num_generators
    by_trace = elements_by_trace(p)
    class_reps = class_representatives(p)
    found = []
    visited = 0

    def consistent(img, checks):
        for i in checks:
            a, b, c = triples[i]
            if _conj(img[a], img[b], p) != img[c]:
                return False
        return True

    def search(level, img, tau):
        nonlocal visited
        if level == len(plan):
            found.append(tuple(img[g] for g in range(1, n + 1)))
            return
        root, steps, checks = plan[level]
        choices = class_reps[tau] if (level == 0 and up_to_conjugacy) else by_trace[tau]
        for m in choices:
            visited += 1
            if budget is not None and visited > budget:
                raise ResourceLimit(f"enumeration of {P.name} over F_{p} exceeded {budget} nodes")
            img[root] = m
            for i, g in steps:
                a, b, c = triples[i]
                if g == c:
                    img[c] = _conj(img[a], img[b], p)
                else:
                    ai = img[a]
                    img[b] = _mul(_mul(_inv(ai, p), img[c], p), ai, p)
            if consistent(img, checks):
                search(level + 1, img, tau)
        for _, g in steps:
            img.pop(g, None)
        img.pop(root, None)

    for tau in range(p) if traces is None else traces:
        search(0, {}, tau)

    reps = [Representation(p, ims) for ims in found]
    if up_to_conjugacy:
        reps = conjugacy_reduce(reps)
    else:
        reps.sort(key=lambda r: (r.trace, r.key()))
    if irreducible_only:
        reps = [r for r in reps if is_irreducible(r)]
    return reps


def brute_force_reps(P: WirtingerPresentation, p: int) -> list[Representation]:
    """Every n-tuple of SL(2, F_p) satisfying the relators.  Test oracle; tiny cases only."""
    group = sl2_elements(p)
    triples = P.triples()
    out = []
    for ims in product(group, repeat=P.num_generators):
        if all(_conj(ims[a - 1], ims[b - 1], p) == ims[c - 1] for a, b, c in triples):
            out.append(Representation(p, ims))
    return out


def word_is_trivial_in(w, rho: Representation) -> bool:
    return evaluate(free_reduce(w), rho)[:4] == _ID
