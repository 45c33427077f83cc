"""Stallings folding with path labels, for subgroup membership in a free group.

Each generating word is attached as a loop at the base vertex; its first edge
carries a label (a word over "token" indices) recording which generator was
used.  Folding keeps labels consistent through a union-find whose offsets are
free-group elements, so reading a word through the folded graph yields an
expression for it in terms of the generators.
"""

from __future__ import annotations

from .words import concat, invert


class FoldedGraph:
    def __init__(self, generators: dict):
        """``generators`` maps a token (positive int) to a reduced word."""
        self.parent: dict[int, int] = {0: 0}
        self.rel: dict[int, tuple] = {0: ()}
        self.edges: list[tuple[int, int, int, tuple]] = []
        nxt = 1
        for token, word in generators.items():
            if not word:
                continue
            prev = 0
            for k, x in enumerate(word):
                last = k == len(word) - 1
                v = 0 if last else nxt
                if not last:
                    self.parent[v] = v
                    self.rel[v] = ()
                    nxt += 1
                label = (token,) if k == 0 else ()
                if x > 0:
                    self.edges.append((prev, x, v, label))
                else:
                    self.edges.append((v, -x, prev, invert(label)))
                prev = v
        self._fold()

    def find(self, v):
        """Root of ``v`` and the offset carrying arrivals at ``v`` to the root."""
        path = []
        while self.parent[v] != v:
            path.append(v)
            v = self.parent[v]
        root = v
        acc = ()
        for u in reversed(path):
            acc = concat(self.rel[u], acc)
            self.rel[u] = acc
            self.parent[u] = root
        return root, (self.rel[path[0]] if path else ())

    def _effective(self, edge):
        u, x, v, label = edge
        ru, ou = self.find(u)
        rv, ov = self.find(v)
        return ru, x, rv, concat(concat(invert(ou), label), ov)

    def _outgoing(self):
        """Signed-letter adjacency between roots: ``(root, letter) -> [(index, target, label)]``."""
        out: dict = {}
        for idx, e in enumerate(self.edges):
            ru, x, rv, lab = self._effective(e)
            out.setdefault((ru, x), []).append((idx, rv, lab))
            out.setdefault((rv, -x), []).append((idx, ru, invert(lab)))
        return out

    def _fold(self):
        while True:
            out = self._outgoing()
            clash = next((v for v in out.values() if len({i for i, _, _ in v}) > 1), None)
            if clash is None:
                return
            (i1, a, l1), (i2, b, l2) = sorted(clash)[:2]
            if a != b:
                # merge so that edge i2 becomes a copy of edge i1; the base stays a root
                if b == self.find(0)[0]:
                    self.parent[a] = b
                    self.rel[a] = concat(invert(l1), l2)
                else:
                    self.parent[b] = a
                    self.rel[b] = concat(invert(l2), l1)
            del self.edges[i2]

    def read(self, word):
        """Expression (token word) for ``word`` if it lies in the subgroup, else None."""
        out = self._outgoing()
        here, _ = self.find(0)
        base = here
        expr: tuple = ()
        for x in word:
            options = out.get((here, x))
            if not options:
                return None
            _, here, lab = options[0]
            expr = concat(expr, lab)
        if here != base:
            return None
        return expr

    @property
    def num_vertices(self):
        return len({self.find(v)[0] for v in self.parent})
