"""Partitions, cycle types, and conjugacy classes of symmetric groups."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import SizeLimitError

# p(40) = 37338, enough for every table this package builds.
MAX_PARTITION_N = 40

# 8! = 40320 permutations is the default explicit-enumeration budget.
MAX_ENUMERATION_N = 8


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers; the empty tuple is the
    unique partition of 0."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "0"

    def to_cycle_type(self) -> "CycleType":
        counts: dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return CycleType(tuple(sorted(counts.items())))


@dataclass(frozen=True)
class CycleType:
    """Finitely supported map from cycle length to multiplicity.

    Stored as sorted (length, multiplicity) pairs with zero multiplicities
    absent, so equal multisets of cycles always compare equal.
    """

    counts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        counts = tuple(sorted((int(k), int(m)) for k, m in self.counts))
        if any(k < 1 for k, _ in counts):
            raise ValueError(f"cycle lengths must be positive: {counts}")
        if any(m < 1 for _, m in counts):
            raise ValueError(f"zero multiplicities must be absent: {counts}")
        if len({k for k, _ in counts}) != len(counts):
            raise ValueError(f"repeated cycle length: {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_dict(cls, multiplicities: dict[int, int]) -> "CycleType":
        return cls(tuple(sorted((k, m) for k, m in multiplicities.items() if m)))

    @property
    def n(self) -> int:
        return sum(k * m for k, m in self.counts)

    def multiplicity(self, k: int) -> int:
        for length, m in self.counts:
            if length == k:
                return m
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def to_partition(self) -> Partition:
        parts: list[int] = []
        for k, m in reversed(self.counts):
            parts.extend([k] * m)
        return Partition(tuple(parts))

    def union(self, other: "CycleType") -> "CycleType":
        merged = self.as_dict()
        for k, m in other.counts:
            merged[k] = merged.get(k, 0) + m
        return CycleType.from_dict(merged)

    def __str__(self) -> str:
        return str(self.to_partition())


@cache
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lexicographically: (n) first, (1,...,1) last.

    This order is the canonical class and irrep order used by every table
    and output format in the package.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_PARTITION_N:
        raise SizeLimitError(f"partitions(n) capped at n <= {MAX_PARTITION_N}, got {n}")
    return tuple(Partition(p) for p in _partition_tuples(n, n))


def conjugacy_classes(n: int) -> tuple[CycleType, ...]:
    """Cycle types of S_n in the canonical partition order."""
    return tuple(p.to_cycle_type() for p in partitions(n))


def class_size(mu: CycleType) -> int:
    """Number of permutations of cycle type mu: n! / prod_k (l_k! * k^l_k)."""
    n = mu.n
    return factorial(n) // prod(factorial(m) * k**m for k, m in mu.counts)


def centralizer_order(mu: CycleType) -> int:
    """Order of the centralizer of an element of cycle type mu."""
    return prod(factorial(m) * k**m for k, m in mu.counts)


def cycle_type(perm: Sequence[int]) -> CycleType:
    """Cycle type of a permutation given as a 0-based image array."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {tuple(perm)}")
    counts: dict[int, int] = {}
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        counts[length] = counts.get(length, 0) + 1
    return CycleType.from_dict(counts)


def permutations_of_type(mu: CycleType, max_n: int = MAX_ENUMERATION_N) -> Iterator[tuple[int, ...]]:
    """Yield every permutation of {0..n-1} with cycle type mu, in lexicographic
    order of the image tuples.

    Plain filtered enumeration: slow but obviously correct, which is the point,
    since this feeds the brute-force trace oracle. Raise max_n to go past the
    default budget of 8.
    """
    n = mu.n
    if n > max_n:
        raise SizeLimitError(f"permutation enumeration capped at n <= {max_n}, got {n}")
    for perm in itertools.permutations(range(n)):
        if cycle_type(perm) == mu:
            yield perm
