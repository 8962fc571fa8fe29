"""Exact scalars and small dense linear algebra.

Two scalar kinds cover every datum downstream:

* plain rationals (`fractions.Fraction`), whenever all Coxeter edge labels
  lie in {2, 3} or the datum is crystallographic (integer coordinates), and
* elements of the real cyclotomic field Q(2cos(pi/K)) for the remaining
  labels (dihedral I2(k), H3, H4).

Field elements are coefficient tuples modulo the minimal polynomial of
y = 2cos(pi/K).  The minimal polynomial is obtained from the cyclotomic
polynomial Phi_{2K} by the palindrome substitution z^m * g(z + 1/z); signs
of nonzero elements are decided by interval Horner evaluation against an
isolating interval for the largest real root, refined by exact bisection
until zero is excluded.  Floats appear only as the seed for root isolation;
every returned quantity is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction as Q
from functools import lru_cache
from typing import Sequence

IntPoly = tuple[int, ...]  # low-degree-first, no trailing zeros


def poly_trim(p: Sequence[int]) -> IntPoly:
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return tuple(p[:i])


def poly_mul(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod_int(p: Sequence[int], q: Sequence[int]) -> tuple[IntPoly, IntPoly]:
    """Divide integer polynomials; requires each eliminated coefficient divisible."""
    q = poly_trim(q)
    assert q, "division by zero polynomial"
    rem = list(p)
    quot = [0] * max(len(rem) - len(q) + 1, 0)
    lead = q[-1]
    for k in range(len(rem) - len(q), -1, -1):
        c = rem[k + len(q) - 1]
        if c == 0:
            continue
        assert c % lead == 0, "inexact integer polynomial division"
        f = c // lead
        quot[k] = f
        for j, b in enumerate(q):
            rem[k + j] -= f * b
    return poly_trim(quot), poly_trim(rem)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """Coefficients of the n-th cyclotomic polynomial.

    >>> cyclotomic(1), cyclotomic(2)
    ((-1, 1), (1, 1))
    >>> cyclotomic(10)
    (1, -1, 1, -1, 1)
    """
    assert n >= 1
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    out = poly_trim(num)
    for d in range(1, n):
        if n % d == 0:
            out, rem = poly_divmod_int(out, cyclotomic(d))
            assert rem == ()
    return out


@lru_cache(maxsize=None)
def _chebyshev_like(j: int) -> IntPoly:
    """p_j with p_j(2cos t) = 2cos(jt): p_0=2, p_1=y, p_j = y*p_{j-1} - p_{j-2}."""
    if j == 0:
        return (2,)
    if j == 1:
        return (0, 1)
    out = list(poly_mul((0, 1), _chebyshev_like(j - 1)))
    for i, c in enumerate(_chebyshev_like(j - 2)):
        out[i] -= c
    return poly_trim(out)


@lru_cache(maxsize=None)
def min_poly_2cos(K: int) -> IntPoly:
    """Minimal polynomial of 2cos(pi/K) over Q, monic with integer coefficients.

    >>> min_poly_2cos(5)
    (-1, -1, 1)
    >>> min_poly_2cos(7)
    (1, -2, -1, 1)
    """
    assert K >= 1
    if K == 1:
        return (2, 1)  # y = -2
    if K == 2:
        return (0, 1)  # y = 0
    if K == 3:
        return (-1, 1)  # y = 1
    phi = cyclotomic(2 * K)
    d = len(phi) - 1
    assert d % 2 == 0 and phi[-1] == 1
    m = d // 2
    g = [0] * (m + 1)
    g[0] = phi[m]
    for j in range(1, m + 1):
        pj = _chebyshev_like(j)
        for t, coef in enumerate(pj):
            g[t] += phi[m + j] * coef
    out = poly_trim(g)
    assert out[-1] == 1
    return out


def _interval_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _interval_mul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def _interval_horner(coeffs: Sequence[Q], lo: Q, hi: Q) -> tuple[Q, Q]:
    acc = (coeffs[-1], coeffs[-1])
    box = (lo, hi)
    for c in reversed(coeffs[:-1]):
        acc = _interval_add(_interval_mul(acc, box), (c, c))
    return acc


def _eval_int_poly(p: Sequence[int], x: Q) -> Q:
    acc = Q(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


class NumberField:
    """The real field Q(2cos(pi/K)), elements reduced mod the minimal polynomial."""

    def __init__(self, K: int):
        assert K >= 4, "K in {1,2,3} is rational; use plain Fractions"
        self.K = K
        self.minpoly = min_poly_2cos(K)
        self.degree = len(self.minpoly) - 1
        self._lo, self._hi = self._isolate()

    def _isolate(self) -> tuple[Q, Q]:
        # y = 2cos(pi/K) is the largest real root of the minimal polynomial;
        # seed a rational lower bound from floats, then certify exactly.
        y0 = 2.0 * math.cos(math.pi / self.K)
        others = [
            2.0 * math.cos(math.pi * a / self.K)
            for a in range(2, self.K)
            if math.gcd(a, 2 * self.K) == 1
        ]
        gap = min((y0 - v for v in others), default=1.0)
        lo = Q(math.floor((y0 - gap / 2) * 2**24), 2**24)
        hi = Q(2)
        plo = _eval_int_poly(self.minpoly, lo)
        phi = _eval_int_poly(self.minpoly, hi)
        assert plo < 0 < phi, "root isolation seed failed"
        return lo, hi

    def refine(self) -> None:
        mid = (self._lo + self._hi) / 2
        if _eval_int_poly(self.minpoly, mid) > 0:
            self._hi = mid
        else:
            self._lo = mid

    @property
    def interval(self) -> tuple[Q, Q]:
        return self._lo, self._hi

    def element(self, coeffs: Sequence[Q | int]) -> "FieldElement":
        cs = [Q(c) for c in coeffs]
        assert len(cs) <= self.degree or all(c == 0 for c in cs[self.degree :])
        cs = cs[: self.degree] + [Q(0)] * max(0, self.degree - len(cs))
        return FieldElement(self, tuple(cs))

    @property
    def zero(self) -> "FieldElement":
        return self.element([])

    @property
    def one(self) -> "FieldElement":
        return self.element([1])

    @property
    def generator(self) -> "FieldElement":
        return self.element([0, 1])

    def from_int(self, k: int) -> "FieldElement":
        return self.element([k])

    def two_cos(self, m: int) -> "FieldElement":
        """2cos(pi/m) as an element; requires m | K."""
        assert self.K % m == 0
        coeffs = [Q(c) for c in _chebyshev_like(self.K // m)]
        return self.element(self._reduce(coeffs))

    def _reduce(self, coeffs: list[Q]) -> tuple[Q, ...]:
        d = self.degree
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if c:
                for j in range(d):
                    coeffs[i - d + j] -= c * self.minpoly[j]
            coeffs[i] = Q(0)
        return tuple(coeffs[:d])

    def __repr__(self) -> str:
        return f"NumberField(2cos(pi/{self.K}))"


@lru_cache(maxsize=None)
def number_field(K: int) -> NumberField:
    return NumberField(K)


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple[Q, ...]):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            assert other.field.K == self.field.K, "mixed number fields"
            return other
        if isinstance(other, (int, Q)):
            return self.field.element([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        out = [Q(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] += a * b
        return FieldElement(self.field, self.field._reduce(out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        assert self, "inverse of zero"

        def trim(p: list[Q]) -> list[Q]:
            while p and p[-1] == 0:
                p.pop()
            return p

        def divmod_q(a: list[Q], b: list[Q]) -> tuple[list[Q], list[Q]]:
            rem = list(a)
            quot = [Q(0)] * max(len(rem) - len(b) + 1, 1)
            for k in range(len(rem) - len(b), -1, -1):
                c = rem[k + len(b) - 1]
                if c:
                    f = c / b[-1]
                    quot[k] = f
                    for j, x in enumerate(b):
                        rem[k + j] -= f * x
            return trim(quot), trim(rem)

        def mul_q(a: list[Q], b: list[Q]) -> list[Q]:
            out = [Q(0)] * (len(a) + len(b) - 1) if a and b else []
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return trim(out)

        def sub_q(a: list[Q], b: list[Q]) -> list[Q]:
            out = list(a) + [Q(0)] * max(0, len(b) - len(a))
            for i, y in enumerate(b):
                out[i] -= y
            return trim(out)

        # extended Euclid in Q[x]: the minimal polynomial is irreducible, so
        # gcd(self, minpoly) is a nonzero constant and s1*self = gcd mod minpoly
        r0, s0 = [Q(c) for c in self.field.minpoly], [Q(0)]
        r1, s1 = trim(list(self.coeffs)), [Q(1)]
        while len(r1) > 1:
            q, r = divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, sub_q(s0, mul_q(q, s1))
        assert len(r1) == 1 and r1[0] != 0
        c = r1[0]
        return self.field.element([x / c for x in s1])

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash((self.field.K, self.coeffs))

    def sign(self) -> int:
        if not any(self.coeffs):
            return 0
        if all(c == 0 for c in self.coeffs[1:]):
            return 1 if self.coeffs[0] > 0 else -1
        f = self.field
        while True:
            lo, hi = f.interval
            a, b = _interval_horner(self.coeffs, lo, hi)
            if a > 0:
                return 1
            if b < 0:
                return -1
            f.refine()

    def __lt__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __repr__(self) -> str:
        return f"FieldElement(K={self.field.K}, {list(self.coeffs)})"


class RationalRing:
    """Adapter so rational and number-field scalars share one code path."""

    zero = Q(0)
    one = Q(1)
    degree = 1

    @staticmethod
    def from_int(k: int) -> Q:
        return Q(k)

    def __repr__(self) -> str:
        return "Q"


RATIONALS = RationalRing()


# --- small dense exact linear algebra (duck-typed over Q or FieldElement) ---


def rref(rows: list[list]) -> list[int]:
    """Reduce `rows` in place to reduced row echelon form; returns pivot columns.

    Zero rows are removed.  Scalars need +,-,*,/ and truthiness.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    del rows[r:]
    return pivots


def residual(rref_rows: Sequence[Sequence], pivots: Sequence[int], v: Sequence) -> list:
    """Reduce v against an RREF basis; zero residual means v is in the row span."""
    out = list(v)
    for row, p in zip(rref_rows, pivots):
        if out[p]:
            f = out[p]
            out = [x - f * y for x, y in zip(out, row)]
    return out


def kernel_basis(rows: Sequence[Sequence], ncols: int, ring) -> list[tuple]:
    """Basis of {v : M v = 0} for the matrix with the given rows."""
    work = [list(r) for r in rows]
    pivots = rref(work)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ring.zero] * ncols
        v[free] = ring.one
        for row, p in zip(work, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return basis


def mat_vec(rows: Sequence[Sequence], v: Sequence):
    return [sum(a * b for a, b in zip(row, v)) for row in rows]


def scalar_sign(x) -> int:
    """Sign of an exact scalar (int, Fraction, or FieldElement)."""
    if isinstance(x, FieldElement):
        return x.sign()
    return (x > 0) - (x < 0)


def scalar_key(x):
    """Deterministic sort key usable across one scalar kind."""
    if isinstance(x, FieldElement):
        return x.coeffs
    return x
