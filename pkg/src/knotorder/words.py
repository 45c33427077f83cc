"""Free-group words, Wirtinger presentations and the knot table file format.

A word is a tuple of nonzero ints: ``g`` stands for the generator ``x_g`` and
``-g`` for its inverse.  Generators are 1-indexed.  The relator
``x_1 x_2 x_1^-1 x_10^-1`` is ``(1, 2, -1, -10)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .errors import InvariantViolation, KnotFileSyntaxError, MissingImage

GroupWord = tuple  # tuple[int, ...]

IDENTITY: GroupWord = ()


def free_reduce(letters: Iterable[int]) -> GroupWord:
    """Freely reduce an arbitrary sequence of signed generator indices."""
    out = []
    for g in letters:
        if g == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def is_reduced(w: Sequence[int]) -> bool:
    return all(w[i] != -w[i + 1] for i in range(len(w) - 1)) and 0 not in w


def concat(u: Sequence[int], v: Sequence[int]) -> GroupWord:
    # both sides are assumed reduced, so cancellation only happens at the seam
    u = list(u)
    i = 0
    while u and i < len(v) and u[-1] == -v[i]:
        u.pop()
        i += 1
    return tuple(u) + tuple(v[i:])


def invert(w: Sequence[int]) -> GroupWord:
    return tuple(-g for g in reversed(w))


def exponent_sum(w: Iterable[int]) -> int:
    return sum(1 if g > 0 else -1 for g in w)


def substitute(w: Sequence[int], images: Mapping[int, Sequence[int]]) -> GroupWord:
    """Apply the homomorphism ``x_g -> images[g]`` to ``w`` and reduce."""
    out = []
    for g in w:
        try:
            img = images[abs(g)]
        except KeyError:
            raise MissingImage(f"no image for generator {abs(g)}") from None
        out.extend(img if g > 0 else invert(img))
    return free_reduce(out)


def cyclic_permutations(w: Sequence[int]) -> list[GroupWord]:
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(len(w))]


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(g) for g in w)


@dataclass(frozen=True)
class WirtingerPresentation:
    """Knot group presentation with ``n`` generators and ``n - 1`` relators.

    Each relator has the shape ``(a, b, -a, -c)`` meaning
    ``x_a x_b x_a^-1 = x_c``.  Construction validates every invariant and
    raises :class:`InvariantViolation` on bad data; nothing is repaired.
    """

    name: str
    num_generators: int
    relators: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        n = self.num_generators
        if n < 1:
            raise InvariantViolation("generator-count", f"{self.name}: need n >= 1, got {n}")
        if len(self.relators) != n - 1:
            raise InvariantViolation(
                "relator-count",
                f"{self.name}: {n} generators need {n - 1} relators, got {len(self.relators)}",
            )
        for i, r in enumerate(self.relators):
            for g in r:
                if g == 0 or abs(g) > n:
                    raise InvariantViolation(
                        "index-out-of-range", f"{self.name}: relator {i + 1} uses generator {g}"
                    )
            if free_reduce(r) != r or len(r) != 4:
                raise InvariantViolation(
                    "non-wirtinger-relator",
                    f"{self.name}: relator {i + 1} {list(r)} does not reduce to a length-4 word",
                )
            a, b, a2, c = r
            if not (a > 0 and b > 0 and a2 == -a and c < 0 and b != -c):
                raise InvariantViolation(
                    "non-wirtinger-relator",
                    f"{self.name}: relator {i + 1} {list(r)} is not of the form a b -a -c with b != c",
                )
            if exponent_sum(r) != 0:  # unreachable given the shape check, kept as the stated invariant
                raise InvariantViolation("abelianization", f"{self.name}: relator {i + 1}")

    @property
    def generators(self) -> range:
        return range(1, self.num_generators + 1)

    def triples(self) -> list[tuple[int, int, int]]:
        """Relators as ``(a, b, c)`` with ``x_c = x_a x_b x_a^-1``."""
        return [(r[0], r[1], -r[3]) for r in self.relators]

    def to_text(self) -> str:
        lines = [f"knot {self.name}", f"gens {self.num_generators}"]
        lines += ["rel " + format_word(r) for r in self.relators]
        return "\n".join(lines) + "\n"


class KnotTable(dict):
    """Mapping from knot name to :class:`WirtingerPresentation`."""

    def add(self, pres: WirtingerPresentation):
        if pres.name in self:
            raise InvariantViolation("duplicate-name", pres.name)
        self[pres.name] = pres

    def to_text(self) -> str:
        return "\n".join(p.to_text() for p in self.values())


_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _parse_ints(tokens, lineno, line):
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise KnotFileSyntaxError(f"expected an integer, got {tok!r}", lineno, line.find(tok) + 1) from None
    return out


def parse_knot_file(text: str) -> KnotTable:
    """Parse the ``knot``/``gens``/``rel`` text format into a :class:`KnotTable`."""
    table = KnotTable()
    current = None  # [name, n, relators, lineno]

    def flush():
        if current is None:
            return
        name, n, rels, lineno = current
        if n is None:
            raise KnotFileSyntaxError(f"knot {name} has no 'gens' line", lineno)
        table.add(WirtingerPresentation(name, n, tuple(tuple(r) for r in rels)))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        tokens = line.split()
        if not tokens:
            continue
        key, args = tokens[0], tokens[1:]
        if key == "knot":
            flush()
            if len(args) != 1 or not _NAME_RE.match(args[0]):
                raise KnotFileSyntaxError("expected 'knot <name>'", lineno, 1)
            current = [args[0], None, [], lineno]
        elif current is None:
            raise KnotFileSyntaxError(f"{key!r} before any 'knot' line", lineno, 1)
        elif key == "gens":
            if current[1] is not None or len(args) != 1:
                raise KnotFileSyntaxError("expected exactly one 'gens <n>' per knot", lineno, 1)
            current[1] = _parse_ints(args, lineno, line)[0]
        elif key == "rel":
            if current[1] is None:
                raise KnotFileSyntaxError("'rel' before 'gens'", lineno, 1)
            current[2].append(_parse_ints(args, lineno, line))
        else:
            raise KnotFileSyntaxError(f"unknown keyword {key!r}", lineno, raw.find(key) + 1)
    flush()
    return table


def read_knot_file(path) -> KnotTable:
    with open(path, encoding="utf-8") as fh:
        return parse_knot_file(fh.read())


def bundled_data_path(filename: str):
    return resources.files("knotorder") / "data" / filename


def bundled_knots() -> KnotTable:
    """All presentations shipped with the package (targets and table sources)."""
    return parse_knot_file(bundled_data_path("knots.txt").read_text(encoding="utf-8"))


TARGET_NAMES = ("3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3")
