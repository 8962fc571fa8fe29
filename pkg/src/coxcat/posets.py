"""Finite posets as bitmask up-sets, with Mobius/zeta machinery.

Elements are 0..n-1.  `up[x]` is an int bitmask of {y : x <= y} including x
itself; this keeps comparability queries and interval scans cheap for the
poset sizes that occur here (a few hundred elements, occasionally ~1500).
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Callable, Iterable, Iterator, Sequence

from .errors import NotAnAutomorphism, NotComparable, NotRanked


def bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class FinitePoset:
    def __init__(self, up: Sequence[int]):
        self.n = len(up)
        self.up = list(up)
        self.down = [0] * self.n
        for x in range(self.n):
            for y in bits(self.up[x]):
                self.down[y] |= 1 << x
        self._covers: list[int] | None = None
        self._ranks: list[int] | None = None
        self._mobius: dict[tuple[int, int], int] = {}

    @staticmethod
    def from_leq(n: int, leq: Callable[[int, int], bool]) -> "FinitePoset":
        up = [0] * n
        for x in range(n):
            m = 0
            for y in range(n):
                if leq(x, y):
                    m |= 1 << y
            up[x] = m
        return FinitePoset(up)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def covers(self) -> list[int]:
        """covers()[x] = bitmask of elements covering x."""
        if self._covers is None:
            out = []
            for x in range(self.n):
                strict = self.up[x] & ~(1 << x)
                cov = 0
                for y in bits(strict):
                    between = strict & (self.down[y] & ~(1 << y))
                    if between == 0:
                        cov |= 1 << y
                out.append(cov)
            self._covers = out
        return self._covers

    def minimals(self) -> list[int]:
        return [x for x in range(self.n) if self.down[x] == 1 << x]

    def maximals(self) -> list[int]:
        return [x for x in range(self.n) if self.up[x] == 1 << x]

    def ranks(self) -> list[int]:
        """Longest-chain rank from the minimals; NotRanked unless every cover steps by one."""
        if self._ranks is None:
            order = self.linear_extension()
            rk = [0] * self.n
            cov = self.covers()
            for x in order:
                for y in bits(cov[x]):
                    rk[y] = max(rk[y], rk[x] + 1)
            for x in range(self.n):
                for y in bits(cov[x]):
                    if rk[y] != rk[x] + 1:
                        raise NotRanked(f"cover {x} -> {y} jumps rank {rk[x]} -> {rk[y]}")
            self._ranks = rk
        return self._ranks

    def linear_extension(self) -> list[int]:
        """Elements sorted by (size of down-set, id); a linear extension."""
        return sorted(range(self.n), key=lambda x: (bin(self.down[x]).count("1"), x))

    def mobius(self, x: int, y: int) -> int:
        """Mobius function; 0 when x is not below y."""
        if x == y:
            return 1
        if not self.leq(x, y):
            return 0
        key = (x, y)
        if key not in self._mobius:
            total = 0
            interval = self.up[x] & self.down[y] & ~(1 << y)
            for z in bits(interval):
                total += self.mobius(x, z)
            self._mobius[key] = -total
        return self._mobius[key]

    def subposet(self, ids: Sequence[int]) -> "FinitePoset":
        pos = {e: i for i, e in enumerate(ids)}
        up = [0] * len(ids)
        for i, e in enumerate(ids):
            m = 0
            for f in bits(self.up[e]):
                if f in pos:
                    m |= 1 << pos[f]
            up[i] = m
        return FinitePoset(up)

    def open_interval(self, x: int, y: int) -> list[int]:
        if not self.leq(x, y):
            raise NotComparable(f"{x} not below {y}")
        return list(bits(self.up[x] & self.down[y] & ~(1 << x) & ~(1 << y)))

    def with_bounds(self) -> tuple["FinitePoset", int, int]:
        """Adjoin a bottom/top when missing; returns (poset, bottom id, top id)."""
        mins, maxs = self.minimals(), self.maximals()
        up = [self.up[x] for x in range(self.n)]
        n = self.n
        if len(mins) == 1:
            bot = mins[0]
        else:
            bot = n
            up.append((1 << n) - 1 | 1 << n)
            n += 1
        if len(maxs) == 1:
            top = maxs[0]
        else:
            top = n
            for x in range(n):
                up[x] |= 1 << top
            up.append(1 << top)
            n += 1
        return FinitePoset(up), bot, top

    def multichain_count(self, m: int, g: Sequence[int] | None = None) -> int:
        """Number of multichains x_1 <= ... <= x_m, optionally g-fixed pointwise.

        g must be an order automorphism given as an image list.
        """
        if g is not None:
            if sorted(g) != list(range(self.n)):
                raise NotAnAutomorphism("not a bijection on the ground set")
            for x in range(self.n):
                img = 0
                for y in bits(self.up[x]):
                    img |= 1 << g[y]
                if img != self.up[g[x]]:
                    raise NotAnAutomorphism(f"order not preserved at {x}")
            ids = [x for x in range(self.n) if g[x] == x]
        else:
            ids = list(range(self.n))
        if m == 0:
            return 1
        sub = self.subposet(ids)
        vec = [1] * sub.n
        for _ in range(m - 1):
            vec = [sum(vec[y] for y in bits(sub.up[x])) for x in range(sub.n)]
        return sum(vec)

    def zeta_value(self, t: int) -> int:
        """Zeta polynomial of a bounded poset evaluated at the integer t.

        Z(t) counts chains bottom = x_0 <= ... <= x_t = top; negative t by
        Lagrange interpolation (the value is known to be an integer).
        """
        assert len(self.minimals()) == 1 and len(self.maximals()) == 1, "needs bounds"
        if t >= 1:
            return self.multichain_count(t - 1)
        longest = max(self.ranks()) if self.n > 1 else 0
        pts = list(range(1, longest + 3))
        vals = [self.multichain_count(k - 1) for k in pts]
        total = Q(0)
        for i, xi in enumerate(pts):
            term = Q(vals[i])
            for j, xj in enumerate(pts):
                if i != j:
                    term *= Q(t - xj, xi - xj)
            total += term
        assert total.denominator == 1
        return int(total)

    def chains(self, ids: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
        """All nonempty strict chains, as increasing id tuples, within `ids`."""
        if ids is None:
            ids = list(range(self.n))
        keep = 0
        for e in ids:
            keep |= 1 << e

        def extend(chain: list[int], allowed: int) -> Iterator[tuple[int, ...]]:
            yield tuple(chain)
            for e in bits(allowed):
                chain.append(e)
                yield from extend(chain, allowed & self.up[e] & ~(1 << e))
                chain.pop()

        for e in bits(keep):
            yield from extend([e], self.up[e] & ~(1 << e) & keep)
