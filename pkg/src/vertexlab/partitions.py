"""Two- and three-dimensional partitions.

Boxes of a 2D partition are pairs ``(b1, b2)`` with ``b2 < parts[b1]``: ``b1``
indexes rows and ``b2`` columns.  A 3D partition is stored as its three
asymptotic legs plus a finite set of extra boxes outside every leg.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"not a partition: {self.parts}")
        object.__setattr__(self, "parts", p)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __getitem__(self, i: int) -> int:
        """Part ``i`` (0-based), zero beyond the length."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def conj(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    @property
    def norm2(self) -> int:
        """Sum of squared parts."""
        return sum(p * p for p in self.parts)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for b1, p in enumerate(self.parts):
            for b2 in range(p):
                yield b1, b2

    def __contains__(self, box) -> bool:
        b1, b2 = box
        return b1 >= 0 and b2 >= 0 and b2 < self[b1]

    def arm_leg(self, box) -> tuple[int, int]:
        if box not in self:
            raise ValueError(f"box {box} not in {self}")
        b1, b2 = box
        return self[b1] - b2 - 1, self.conj[b2] - b1 - 1

    def arm_legs(self) -> Iterator[tuple[tuple[int, int], int, int]]:
        lt = self.conj
        for b1, b2 in self.boxes():
            yield (b1, b2), self.parts[b1] - b2 - 1, lt[b2] - b1 - 1

    def contains_partition(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a <= self[i] for i, a in enumerate(other.parts))

    def addable(self) -> list["Partition"]:
        out = []
        for i in range(len(self.parts) + 1):
            if i == 0 or self[i - 1] > self[i]:
                p = list(self.parts) + [0]
                p[i] += 1
                out.append(Partition(tuple(x for x in p if x)))
        return out


EMPTY = Partition()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    def gen(n, cap):
        if n == 0:
            yield ()
            return
        for k in range(min(n, cap), 0, -1):
            for rest in gen(n - k, k):
                yield (k,) + rest
    return tuple(Partition(p) for p in gen(n, n))


def partitions_upto(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return EMPTY
    return Partition(tuple(int(x) for x in text.split(",") if x.strip()))


@dataclass(frozen=True)
class Corners:
    inner: tuple[int, ...]
    outer: tuple[int, ...]


def corners(nu: Partition) -> Corners:
    """Contents ``b2 - b1`` of the addable (inner) and removable (outer) cells.

    With distinct part sizes ``n_1 > ... > n_d`` of multiplicities ``m_i``:
    inner ``c_i = n_{i+1} - (m_1 + ... + m_i)`` for ``i = 0..d`` (``n_{d+1} = 0``)
    and outer ``c_i = n_i - (m_1 + ... + m_i)`` for ``i = 1..d``.
    """
    sizes: list[int] = []
    mults: list[int] = []
    for p in nu.parts:
        if sizes and sizes[-1] == p:
            mults[-1] += 1
        else:
            sizes.append(p)
            mults.append(1)
    d = len(sizes)
    acc = [0]
    for m in mults:
        acc.append(acc[-1] + m)
    n = sizes + [0]
    inner = tuple(n[i] - acc[i] for i in range(d + 1))
    outer = tuple(n[i - 1] - acc[i] for i in range(1, d + 1))
    return Corners(inner, outer)


Box = tuple[int, int, int]


def in_leg(legs: tuple[Partition, Partition, Partition], k: int, box: Box) -> bool:
    """Leg ``k`` (1, 2 or 3) of the configuration with the given asymptotics.

    Leg 1 holds ``(b, b1, b2)``, leg 2 ``(b2, b, b1)`` and leg 3 ``(b1, b2, b)``
    for ``(b1, b2)`` in the corresponding partition.
    """
    x, y, z = box
    if k == 1:
        return (y, z) in legs[0]
    if k == 2:
        return (z, x) in legs[1]
    return (x, y) in legs[2]


@dataclass(frozen=True)
class Partition3D:
    legs: tuple[Partition, Partition, Partition]
    extra: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        legs = tuple(self.legs)
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "extra", frozenset(self.extra))
        for b in self.extra:
            if self.leg_membership(b):
                raise ValueError(f"extra box {b} lies in a leg")
        if not self._closed():
            raise ValueError("box configuration is not downward closed")

    @classmethod
    def finite(cls, boxes) -> "Partition3D":
        return cls((EMPTY, EMPTY, EMPTY), frozenset(map(tuple, boxes)))

    def leg_membership(self, box: Box) -> frozenset:
        return frozenset(k for k in (1, 2, 3) if in_leg(self.legs, k, box))

    def __contains__(self, box: Box) -> bool:
        if min(box) < 0:
            return False
        return box in self.extra or any(in_leg(self.legs, k, box) for k in (1, 2, 3))

    def _closed(self) -> bool:
        for b in self.extra:
            for i in range(3):
                if b[i] > 0:
                    p = list(b)
                    p[i] -= 1
                    if tuple(p) not in self:
                        return False
        return True

    @property
    def extent(self) -> int:
        """A bound ``L`` with all leg data inside ``[0, L)``."""
        L = 1
        for lam in self.legs:
            if lam:
                L = max(L, len(lam) + 1, lam[0] + 1)
        return L

    def multi_leg_boxes(self) -> list[tuple[Box, int]]:
        """Boxes lying in at least two legs, with the number of legs."""
        L = self.extent
        out = []
        for x in range(L):
            for y in range(L):
                for z in range(L):
                    k = len(self.leg_membership((x, y, z)))
                    if k >= 2:
                        out.append(((x, y, z), k))
        return out

    def renorm_volume(self) -> int:
        return len(self.extra) - sum(k - 1 for _, k in self.multi_leg_boxes())

    @property
    def size(self) -> int:
        if any(self.legs):
            raise ValueError("infinite partition")
        return len(self.extra)

    def asymptotics(self) -> tuple[Partition, Partition, Partition]:
        """Recompute the legs from membership far out along each axis."""
        far = self.extent + max((max(b) for b in self.extra), default=0) + 1
        L = far

        def read(fn):
            rows = []
            for b1 in range(L):
                row = 0
                while row < L and fn(b1, row) in self:
                    row += 1
                if not row:
                    break
                rows.append(row)
            return Partition(tuple(rows))

        lam = read(lambda b1, b2: (far, b1, b2))
        mu = read(lambda b1, b2: (b2, far, b1))
        nu = read(lambda b1, b2: (b1, b2, far))
        return lam, mu, nu

    def boxes_in_region(self, N: int) -> list[Box]:
        """All boxes with ``|b2 - b1| <= N`` in the first two coordinates, bounded along legs."""
        L = self.extent + max((max(b) for b in self.extra), default=0) + 1
        bound = L + N + 1
        out = []
        for x in range(bound):
            for y in range(max(0, x - N), x + N + 1):
                z = 0
                while z < bound and (x, y, z) in self:
                    out.append((x, y, z))
                    z += 1
        return out

    def addable_boxes(self) -> list[Box]:
        L = self.extent
        cand = set()
        for x in range(L + 1):
            for y in range(L + 1):
                for z in range(L + 1):
                    cand.add((x, y, z))
        for b in self.extra:
            for i in range(3):
                p = list(b)
                p[i] += 1
                cand.add(tuple(p))
        out = []
        for b in cand:
            if b in self:
                continue
            ok = True
            for i in range(3):
                if b[i] > 0:
                    p = list(b)
                    p[i] -= 1
                    if tuple(p) not in self:
                        ok = False
                        break
            if ok:
                out.append(b)
        return sorted(out)

    def add(self, box: Box) -> "Partition3D":
        return Partition3D(self.legs, self.extra | {box})

    def sort_key(self):
        return (self.renorm_volume(), tuple(sorted(self.extra)))


def minimal_3d(lam: Partition, mu: Partition, nu: Partition) -> Partition3D:
    return Partition3D((lam, mu, nu), frozenset())


def enumerate_3d(lam: Partition, mu: Partition, nu: Partition,
                 max_volume: int) -> list[Partition3D]:
    """All 3D partitions with the given legs and renormalized volume at most ``max_volume``."""
    start = minimal_3d(lam, mu, nu)
    base = start.renorm_volume()
    if max_volume < base:
        return []
    levels = [[start]]
    for _ in range(max_volume - base):
        seen = set()
        nxt = []
        for p in levels[-1]:
            for b in p.addable_boxes():
                key = p.extra | {b}
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(Partition3D(p.legs, key))
        nxt.sort(key=lambda p: tuple(sorted(p.extra)))
        levels.append(nxt)
    return [p for level in levels for p in level]


def count_plane_partitions_bruteforce(n: int) -> int:
    """Number of plane partitions of ``n``, stacking rows bounded by the row above."""
    def rows_bounded(cap, left):
        # weakly decreasing rows with row[i] <= cap[i] and sum <= left
        def gen(i, prev, rem):
            yield ()
            if i >= len(cap):
                return
            for v in range(min(prev, cap[i], rem), 0, -1):
                for rest in gen(i + 1, v, rem - v):
                    yield (v,) + rest
        for r in gen(0, left, left):
            if r:
                yield r

    @lru_cache(maxsize=None)
    def count(cap, left):
        if left == 0:
            return 1
        return sum(count(r, left - sum(r)) for r in rows_bounded(cap, left))

    return count(tuple([n] * n), n) if n else 1
