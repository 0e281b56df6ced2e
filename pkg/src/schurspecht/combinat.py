"""Partitions, exchange vectors and the counting oracles used everywhere else."""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves like a plain tuple (hashable, comparable); the empty partition
    is allowed so that conjugation is total.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
        for p, q in zip(parts, parts[1:]):
            if q > p:
                raise ValueError(f"partition {parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def first(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self):
        return f"Partition({tuple(self)})"


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def parse_parts(text: str) -> Partition:
    """Parse ``"2,2,1"`` into ``Partition((2, 2, 1))``."""
    text = text.strip()
    if not text:
        return Partition(())
    return Partition(int(s) for s in text.split(","))


def conjugate(p: Sequence[int]) -> Partition:
    p = as_partition(p)
    if not p:
        return Partition(())
    return Partition(sum(1 for part in p if part >= c) for c in range(1, p[0] + 1))


def hook_lengths(p: Sequence[int]) -> list[int]:
    p = as_partition(p)
    pc = conjugate(p)
    return [p[i] - j + pc[j] - i - 1 for i in range(len(p)) for j in range(p[i])]


def hook_dim(p: Sequence[int]) -> int:
    """Dimension of the Specht module: ``r! / prod(hooks)``."""
    p = as_partition(p)
    return factorial(p.size) // prod(hook_lengths(p))


def tabloid_count(p: Sequence[int]) -> int:
    """Number of column tabloids of shape ``p``: ``r! / prod(mu_c!)`` with mu = p'."""
    p = as_partition(p)
    return factorial(p.size) // prod(factorial(m) for m in conjugate(p))


def partitions_of(r: int) -> list[Partition]:
    """Partitions of ``r`` in reverse-lexicographic order, ``(r)`` first."""
    if r == 0:
        return [Partition(())]
    return [Partition(p) for p in _partitions(r, r)]


@lru_cache(maxsize=None)
def _partitions(r: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if r == 0:
        return ((),)
    out = []
    for first in range(min(r, largest), 0, -1):
        for rest in _partitions(r - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(r_max: int) -> list[Partition]:
    return [p for r in range(1, r_max + 1) for p in partitions_of(r)]


def validate_exchange_vector(lam: Sequence[int], k: Sequence[int]) -> tuple[int, ...]:
    """Check ``1 <= k_c <= mu_{c+1}`` for every column pair; return k as a tuple."""
    mu = conjugate(lam)
    k = tuple(int(x) for x in k)
    if len(k) != max(len(mu) - 1, 0):
        raise ValueError(f"exchange vector {k} needs {max(len(mu) - 1, 0)} entries for lambda={tuple(lam)}")
    for c, kc in enumerate(k):
        if not 1 <= kc <= mu[c + 1]:
            raise ValueError(f"k_{c + 1}={kc} outside [1, {mu[c + 1]}]")
    return k


def exchange_vectors(lam: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All admissible exchange vectors for ``lam`` in lexicographic order."""
    mu = conjugate(lam)
    yield from product(*(range(1, m + 1) for m in mu[1:]))


def min_exchange_vector(lam: Sequence[int]) -> tuple[int, ...]:
    return (1,) * max(len(conjugate(lam)) - 1, 0)


def max_exchange_vector(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(conjugate(lam)[1:])


def binom(n: int, r: int) -> int:
    """Binomial coefficient, zero outside ``0 <= r <= n`` (including negative n)."""
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)
