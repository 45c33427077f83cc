"""Exact Laurent polynomials in one variable ``t`` over Z or a prime field.

The representation is dense: a lowest exponent ``low`` plus a tuple of
coefficients with nonzero first and last entries.  ``p == 0`` means the
integers, otherwise coefficients live in ``0..p-1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Mapping, Sequence

INTEGERS = 0


def _trim(coeffs, low):
    i, j = 0, len(coeffs)
    while i < j and coeffs[i] == 0:
        i += 1
    while j > i and coeffs[j - 1] == 0:
        j -= 1
    if i == j:
        return (), 0
    return tuple(coeffs[i:j]), low + i


class LaurentPoly:
    __slots__ = ("p", "low", "c")

    def __init__(self, coeffs: Mapping[int, int] | Sequence[int] = (), p: int = INTEGERS, low: int = 0):
        """Build from ``{exponent: coeff}`` or from a low-first coefficient list."""
        if isinstance(coeffs, Mapping):
            if coeffs:
                lo = min(coeffs)
                dense = [0] * (max(coeffs) - lo + 1)
                for e, v in coeffs.items():
                    dense[e - lo] += v
                low = lo
            else:
                dense = []
        else:
            dense = list(coeffs)
        if p:
            dense = [v % p for v in dense]
        self.p = p
        self.c, self.low = _trim(dense, low)

    @classmethod
    def _raw(cls, c, low, p):
        obj = cls.__new__(cls)
        obj.p = p
        obj.c, obj.low = _trim(c, low)
        return obj

    @classmethod
    def t(cls, p=INTEGERS, power=1):
        return cls._raw((1,), power, p)

    @classmethod
    def const(cls, value, p=INTEGERS):
        return cls([value], p)

    # -- basic properties ---------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return {self.low + i: v for i, v in enumerate(self.c) if v}

    @property
    def high(self) -> int:
        return self.low + len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def span(self) -> int:
        """Difference between highest and lowest exponent (-1 for zero)."""
        return len(self.c) - 1

    def leading(self) -> int:
        return self.c[-1]

    def _check(self, other):
        if isinstance(other, int):
            return LaurentPoly([other], self.p)
        if other.p != self.p:
            raise ValueError(f"coefficient rings differ: {self.p} vs {other.p}")
        return other

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        if not other.c:
            return self
        if not self.c:
            return other
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for i, v in enumerate(self.c):
            out[self.low - low + i] += v
        for i, v in enumerate(other.c):
            out[other.low - low + i] += v
        if self.p:
            out = [v % self.p for v in out]
        return LaurentPoly._raw(out, low, self.p)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw([(-v) % self.p if self.p else -v for v in self.c], self.low, self.p)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        out = _mul(self.c, other.c, self.p)
        return LaurentPoly._raw(out, self.low + other.low, self.p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.c) == 1 and (self.p or abs(self.c[0]) == 1):
                inv = pow(self.c[0], -1, self.p) if self.p else self.c[0]
                return LaurentPoly._raw((inv,), -self.low, self.p) ** (-k)
            raise ValueError("only units can be raised to negative powers")
        result = LaurentPoly([1], self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly._raw(self.c, self.low + k, self.p)

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly([other], self.p)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.p == other.p and self.low == other.low and self.c == other.c

    def __hash__(self):
        return hash((self.p, self.low, self.c))

    # -- normalization and evaluation ----------------------------------------

    def normalized(self) -> "LaurentPoly":
        """Canonical representative of the class up to units ``±t^k`` (``ε t^k`` over F_p)."""
        if not self.c:
            return self
        lead = self.c[-1]
        if self.p:
            inv = pow(lead, -1, self.p)
            c = [(v * inv) % self.p for v in self.c]
        else:
            c = list(self.c) if lead > 0 else [-v for v in self.c]
        return LaurentPoly._raw(c, 0, self.p)

    def reflect(self) -> "LaurentPoly":
        """Substitute ``t -> t^-1``."""
        return LaurentPoly._raw(tuple(reversed(self.c)), -self.high if self.c else 0, self.p)

    def __call__(self, x):
        """Evaluate at ``x`` (an int, Fraction or anything closed under * and +)."""
        if not self.c:
            return 0
        acc = 0
        for v in reversed(self.c):
            acc = acc * x + v
        if self.low:
            acc = acc * (Fraction(x) ** self.low if not self.p else pow(x, self.low, self.p))
        return acc % self.p if self.p else acc

    def content(self) -> int:
        if self.p:
            raise ValueError("content is defined only over the integers")
        return reduce(gcd, self.c, 0)

    def reduce_mod(self, p: int) -> "LaurentPoly":
        return LaurentPoly(self.c, p, self.low)

    def __repr__(self):
        ring = "Z" if not self.p else f"F_{self.p}"
        return f"LaurentPoly({self}, {ring})"

    def __str__(self):
        return format_poly(self)


def format_poly(f: LaurentPoly) -> str:
    """Render as ``1 - t + 2*t^2`` (ascending exponents)."""
    if not f.c:
        return "0"
    parts = []
    for i, v in enumerate(f.c):
        if v == 0:
            continue
        e = f.low + i
        if f.p and v > f.p // 2 and f.p > 2:
            v = v - f.p  # print symmetric residues for readability
        mag = abs(v)
        if e == 0:
            mono = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            mono = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(("-" if v < 0 else "") + mono)
        else:
            parts.append(("- " if v < 0 else "+ ") + mono)
    return " ".join(parts)


# -- dense coefficient-list kernels (low-first, no shift) ---------------------


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    if p:
        out = [v % p for v in out]
    return out


def _strip_high(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_field(a, b, p):
    """Polynomial division in F_p[t] on low-first lists."""
    a = _strip_high(a)
    b = _strip_high(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [0] * (len(a) - db)
    r = list(a)
    for k in range(len(a) - 1, db - 1, -1):
        coef = (r[k] * inv) % p
        if coef:
            q[k - db] = coef
            off = k - db
            for j in range(db + 1):
                r[off + j] = (r[off + j] - coef * b[j]) % p
    return q, _strip_high(r[:db])


def _divmod_rational(a, b):
    a = [Fraction(v) for v in _strip_high(a)]
    b = _strip_high(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    r = list(a)
    for k in range(len(a) - 1, db - 1, -1):
        coef = r[k] / b[-1]
        if coef:
            q[k - db] = coef
            off = k - db
            for j in range(db + 1):
                r[off + j] -= coef * b[j]
    return q, _strip_high(r[:db])


def poly_divmod(a: LaurentPoly, b: LaurentPoly):
    """Division with remainder in the Laurent ring.

    Both operands are shifted to honest polynomials with nonzero constant
    term; the remainder is reported at ``a``'s shift.  Over the integers the
    division is carried out over Q and must come out integral, otherwise
    :class:`ArithmeticError` is raised.
    """
    if a.p != b.p:
        raise ValueError("coefficient rings differ")
    if not b.c:
        raise ZeroDivisionError("polynomial division by zero")
    if not a.c:
        return a, a
    if a.p:
        q, r = _divmod_field(list(a.c), list(b.c), a.p)
    else:
        q, r = _divmod_rational(list(a.c), list(b.c))
        if any(v.denominator != 1 for v in list(q) + list(r)):
            raise ArithmeticError("division is not exact over the integers")
        q = [int(v) for v in q]
        r = [int(v) for v in r]
    return LaurentPoly._raw(q, a.low - b.low, a.p), LaurentPoly._raw(r, a.low, a.p)


def divides(d: LaurentPoly, m: LaurentPoly) -> bool:
    """True iff ``m = d * q`` for a Laurent polynomial ``q`` over the same ring."""
    if d.p != m.p:
        raise ValueError("coefficient rings differ")
    if not d.c:
        return not m.c
    if not m.c:
        return True
    if d.p:
        q, r = poly_divmod(m, d)
        return not r.c and d * q == m
    # Gauss: content and primitive part must divide separately
    cd, cm = d.content(), m.content()
    if cm % cd:
        return False
    pd = [v // cd for v in d.c]
    pm = [v // cm for v in m.c]
    q, r = _divmod_rational(pm, pd)
    if r:
        return False
    if any(v.denominator != 1 for v in q):
        return False  # cannot happen for primitive divisor, kept as a guard
    quotient = LaurentPoly._raw([int(v) * (cm // cd) for v in q], m.low - d.low, 0)
    return d * quotient == m


# -- determinants --------------------------------------------------------------


def _poly_matrix(rows, p):
    """Convert a LaurentPoly matrix to plain polynomials, returning the total shift."""
    out = []
    shift = 0
    for row in rows:
        nonzero = [f for f in row if f.c]
        lo = min((f.low for f in nonzero), default=0)
        shift += lo
        line = []
        for f in row:
            if not f.c:
                line.append([])
            else:
                line.append([0] * (f.low - lo) + list(f.c))
        out.append(line)
    return out, shift


def _sub_mul(a, b, c, p):
    """a - b*c on low-first lists."""
    prod = _mul(b, c, p)
    n = max(len(a), len(prod))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(prod):
        out[i] -= v
    if p:
        out = [v % p for v in out]
    return _strip_high(out)


def _exact_div_int(a, b):
    q, r = _divmod_rational(a, b)
    if r or any(v.denominator != 1 for v in q):
        raise ArithmeticError("Bareiss step was not exact")
    return _strip_high([int(v) for v in q])


def det_bareiss(rows: Sequence[Sequence[LaurentPoly]], p: int = INTEGERS) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant of a square Laurent-polynomial matrix."""
    n = len(rows)
    if n == 0:
        return LaurentPoly([1], p)
    m, shift = _poly_matrix(rows, p)
    sign = 1
    prev = [1]
    for k in range(n - 1):
        piv = None
        best = None
        for i in range(k, n):
            if m[i][k]:
                size = (len(m[i][k]), sum(abs(v) for v in m[i][k]) if not p else 0)
                if best is None or size < best:
                    piv, best = i, size
        if piv is None:
            return LaurentPoly([], p)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        akk = m[k][k]
        for i in range(k + 1, n):
            aik = m[i][k]
            for j in range(k + 1, n):
                num = _sub_mul(_mul(akk, m[i][j], p), aik, m[k][j], p)
                if p:
                    m[i][j] = _divmod_field(num, prev, p)[0] if num else []
                else:
                    m[i][j] = _exact_div_int(num, prev) if num else []
            m[i][k] = []
        prev = akk
    d = m[n - 1][n - 1]
    if sign < 0:
        d = [(-v) % p if p else -v for v in d]
    return LaurentPoly._raw(d, shift, p)


def det_euclid(rows: Sequence[Sequence[LaurentPoly]], p: int) -> LaurentPoly:
    """Determinant over F_p[t] by unimodular row reduction.

    Each column is cleared with repeated polynomial division, always pivoting
    on the lowest-degree entry, so only exact operations appear.
    """
    if not p:
        raise ValueError("det_euclid needs a prime field")
    n = len(rows)
    if n == 0:
        return LaurentPoly([1], p)
    m, shift = _poly_matrix(rows, p)
    det = [1]
    for k in range(n):
        while True:
            live = [i for i in range(k, n) if m[i][k]]
            if not live:
                return LaurentPoly([], p)
            piv = min(live, key=lambda i: (len(m[i][k]), i))
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                det = [(-v) % p for v in det]
            if len(live) == 1:
                break
            pivot = m[k][k]
            for i in range(k + 1, n):
                if not m[i][k]:
                    continue
                q, r = _divmod_field(m[i][k], pivot, p)
                row_i, row_k = m[i], m[k]
                for j in range(k + 1, n):
                    if row_k[j]:
                        row_i[j] = _sub_mul(row_i[j], q, row_k[j], p)
                row_i[k] = r
        det = _mul(det, m[k][k], p)
    return LaurentPoly._raw(det, shift, p)


def det_cofactor(rows: Sequence[Sequence[LaurentPoly]], p: int = INTEGERS) -> LaurentPoly:
    """Laplace expansion along the first row.  Exponential; test oracle only."""
    n = len(rows)
    if n == 0:
        return LaurentPoly([1], p)
    if n == 1:
        return rows[0][0]
    total = LaurentPoly([], p)
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(minor, p)
        total = total + term if j % 2 == 0 else total - term
    return total


def determinant(rows, p: int = INTEGERS) -> LaurentPoly:
    rows = [list(r) for r in rows]
    return det_euclid(rows, p) if p else det_bareiss(rows, p)
