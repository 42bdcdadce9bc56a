"""Integer partitions, Frobenius coordinates and half-integer particle configurations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_ENUMERATION_CAP = 30


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves like a plain tuple (hashable, comparable, JSON-friendly via ``list``).
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part accessor with lambda_i = 0 past the length."""
        return self[i - 1] if i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(lam, mu) -> bool:
    """True when the diagram of ``mu`` sits inside the diagram of ``lam``."""
    lam, mu = as_partition(lam), as_partition(mu)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


@dataclass(frozen=True)
class FrobeniusCoord:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have equal length")
        for seq in (self.arms, self.legs):
            if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"Frobenius coordinates must be strictly decreasing nonnegatives: {seq}")

    @property
    def rank(self) -> int:
        return len(self.arms)

    def to_partition(self) -> Partition:
        d = self.rank
        if d == 0:
            return Partition()
        # row i <= d has length arms[i] + i; rows below the diagonal come from the legs
        length = self.legs[0] + 1
        rows = []
        for i in range(1, length + 1):
            if i <= d:
                rows.append(self.arms[i - 1] + i)
            else:
                rows.append(sum(1 for j in range(d) if self.legs[j] + j + 1 >= i))
        return Partition(rows)

    def to_json(self) -> dict:
        return {"arms": list(self.arms), "legs": list(self.legs)}

    @classmethod
    def from_json(cls, data: dict) -> "FrobeniusCoord":
        return cls(tuple(data["arms"]), tuple(data["legs"]))


def frobenius(lam) -> FrobeniusCoord:
    lam = as_partition(lam)
    lamc = conjugate(lam)
    d = sum(1 for i, p in enumerate(lam, start=1) if p >= i)
    return FrobeniusCoord(
        tuple(lam[i] - i - 1 for i in range(d)),
        tuple(lamc[i] - i - 1 for i in range(d)),
    )


def in_class(lam, cls: str) -> bool:
    """Membership in the almost-symmetric classes.

    Class ``"A"`` has Frobenius form (a_1, a_2, ... | a_1+1, a_2+1, ...),
    class ``"B"`` has (b_1+1, b_2+1, ... | b_1, b_2, ...).
    """
    fr = frobenius(lam)
    if cls == "A":
        return all(b == a + 1 for a, b in zip(fr.arms, fr.legs))
    if cls == "B":
        return all(a == b + 1 for a, b in zip(fr.arms, fr.legs))
    raise ValueError(f"unknown class {cls!r}")


def dim_syt(lam) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula, exact)."""
    lam = as_partition(lam)
    lamc = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (lamc[j] - i - 1) + 1
    return math.factorial(lam.size) // hooks


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """A point of Z + 1/2, stored as the odd integer ``doubled`` = 2h."""

    doubled: int

    def __post_init__(self):
        if self.doubled % 2 == 0:
            raise ValueError(f"doubled value must be odd, got {self.doubled}")

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        d = 2 * Fraction(value)
        if d.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(d))

    @property
    def shift(self) -> int:
        """The integer h + 1/2 (exponent bookkeeping for generating series)."""
        return (self.doubled + 1) // 2

    def __float__(self) -> float:
        return self.doubled / 2

    def __lt__(self, other: "HalfInt") -> bool:
        return self.doubled < other.doubled

    def __add__(self, k: int) -> "HalfInt":
        return HalfInt(self.doubled + 2 * int(k))

    def __sub__(self, k: int) -> "HalfInt":
        return HalfInt(self.doubled - 2 * int(k))

    def __repr__(self) -> str:
        return f"{self.doubled}/2"


def points(lam, depth: int) -> tuple[HalfInt, ...]:
    """First ``depth`` points lambda_i - i + 1/2 of the configuration S(lambda)."""
    lam = as_partition(lam)
    if depth < len(lam):
        raise ValueError(f"depth {depth} smaller than the length {len(lam)}")
    return tuple(HalfInt(2 * (lam.part(i) - i) + 1) for i in range(1, depth + 1))


def point_set(lam) -> frozenset:
    """Doubled coordinates of S(lambda) down to -2*len(lam)-1, enough for membership queries
    above that level (everything lower is occupied)."""
    lam = as_partition(lam)
    return frozenset(h.doubled for h in points(lam, len(lam) + 1))


def occupied(lam, h: HalfInt) -> bool:
    lam = as_partition(lam)
    if h.doubled < -2 * len(lam):
        return True
    return h.doubled in point_set(lam)


def charge_defect(lam) -> tuple[tuple[HalfInt, ...], tuple[HalfInt, ...]]:
    """Particles above zero and holes below zero relative to the vacuum {-1/2, -3/2, ...}."""
    lam = as_partition(lam)
    pts = points(lam, len(lam) + 1)
    particles = tuple(h for h in pts if h.doubled > 0)
    occ = {h.doubled for h in pts}
    floor = pts[-1].doubled
    holes = tuple(HalfInt(d) for d in range(-1, floor, -2) if d not in occ)
    return particles, holes


def _partitions_of(n: int, max_part: int, max_length: Optional[int]) -> Iterator[tuple[int, ...]]:
    # reverse-lexicographic within a fixed weight
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_length is None else max_length - 1
        for rest in _partitions_of(n - first, first, rest_len):
            yield (first,) + rest


def enumerate_partitions(
    max_weight: int,
    constraint: Optional[tuple[str, object]] = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    min_weight: int = 0,
) -> Iterator[Partition]:
    """Yield every partition with ``min_weight <= |lam| <= max_weight`` obeying ``constraint``.

    ``constraint`` is one of ``("max_part", m)``, ``("max_length", n)``, ``("class", "A"|"B")``
    or ``None``. Order: by weight, then reverse-lexicographic.
    """
    if max_weight > cap:
        raise ValueError(f"max_weight {max_weight} exceeds enumeration cap {cap}")
    kind, value = constraint if constraint is not None else (None, None)
    if kind not in (None, "max_part", "max_length", "class"):
        raise ValueError(f"unknown constraint {kind!r}")
    for n in range(min_weight, max_weight + 1):
        max_part = value if kind == "max_part" else n
        max_length = value if kind == "max_length" else None
        for parts in _partitions_of(n, max_part, max_length):
            lam = Partition(parts)
            if kind == "class" and not in_class(lam, value):
                continue
            yield lam


def partition_to_json(lam) -> list:
    return list(as_partition(lam))


def partition_from_json(data: Sequence[int]) -> Partition:
    return Partition(data)
