"""Integral group ring of a free group and Fox free derivatives."""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .words import GroupWord, concat, free_reduce


class GroupRingElem:
    """Finite Z-linear combination of reduced words.

    ``terms`` maps each word to a nonzero int; the zero element has no terms.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | Iterable[tuple[tuple, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, int] = {}
        for w, c in items:
            w = free_reduce(w)
            acc[w] = acc.get(w, 0) + c
        self._terms = {w: c for w, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def word(cls, w, coeff: int = 1) -> "GroupRingElem":
        return cls({tuple(w): coeff})

    @classmethod
    def one(cls) -> "GroupRingElem":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "GroupRingElem":
        return cls()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElem({(): other})
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElem({(): other})
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return GroupRingElem(acc)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElem({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElem({(): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElem({w: c * other for w, c in self._terms.items()})
        acc: dict[tuple, int] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = concat(u, v)
                acc[w] = acc.get(w, 0) + a * b
        return GroupRingElem(acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def map(self, word_map: Callable[[tuple], object], zero, scale=None):
        """Apply a ring map determined by its value on words.

        ``scale(c, x)`` multiplies an image by an int; defaults to ``c * x``.
        """
        total = zero
        for w, c in sorted(self._terms.items()):
            img = word_map(w)
            total = total + (scale(c, img) if scale else c * img)
        return total

    def substitute(self, images) -> "GroupRingElem":
        from .words import substitute

        return GroupRingElem([(substitute(w, images), c) for w, c in self._terms.items()])

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            parts.append(f"{c}*[{','.join(map(str, w))}]")
        return " + ".join(parts)


def fox_derivative(w, g: int) -> GroupRingElem:
    """Fox derivative of the word ``w`` with respect to generator ``g``.

    One left-to-right pass: a letter ``g`` at prefix ``u`` contributes ``+u``,
    a letter ``g^-1`` contributes ``-u g^-1``.
    """
    if g <= 0:
        raise ValueError("generator index must be positive")
    acc: dict[tuple, int] = {}
    prefix: GroupWord = ()
    for x in w:
        if x == g:
            acc[prefix] = acc.get(prefix, 0) + 1
        elif x == -g:
            key = concat(prefix, (-g,))
            acc[key] = acc.get(key, 0) - 1
        prefix = concat(prefix, (x,))
    return GroupRingElem(acc)


def fox_derivative_recursive(w, g: int) -> GroupRingElem:
    """Reference implementation straight from the product rule; used by tests."""
    w = tuple(w)
    if not w:
        return GroupRingElem.zero()
    if len(w) == 1:
        x = w[0]
        if x == g:
            return GroupRingElem.one()
        if x == -g:
            return GroupRingElem.word((-g,), -1)
        return GroupRingElem.zero()
    mid = len(w) // 2
    u, v = w[:mid], w[mid:]
    return fox_derivative_recursive(u, g) + GroupRingElem.word(u) * fox_derivative_recursive(v, g)


def fox_jacobian(relators, num_generators: int) -> list[list[GroupRingElem]]:
    """Matrix of Fox derivatives, rows indexed by relators, columns by generators."""
    return [[fox_derivative(r, j) for j in range(1, num_generators + 1)] for r in relators]


def fundamental_identity_rhs(w) -> GroupRingElem:
    return GroupRingElem.word(free_reduce(w)) - 1


def fundamental_identity_lhs(w, num_generators: int) -> GroupRingElem:
    total = GroupRingElem.zero()
    for i in range(1, num_generators + 1):
        total = total + fox_derivative(w, i) * (GroupRingElem.word((i,)) - 1)
    return total


__all__ = [
    "GroupRingElem",
    "fox_derivative",
    "fox_derivative_recursive",
    "fox_jacobian",
    "fundamental_identity_lhs",
    "fundamental_identity_rhs",
]
