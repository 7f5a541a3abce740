"""Integer partitions.

A partition is stored as a weakly decreasing tuple of positive integers.
Parts are read 1-based through :meth:`Partition.at`, and reads past the
last part return 0, which is what the extension algorithm relies on when
it walks two partitions of different lengths side by side.

Following the Young-diagram convention used throughout this package, the
parts of a partition are the *columns* of its diagram.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator


class IncomparableError(ValueError):
    """Raised when ordering partitions of different sizes."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    ``Partition((3, 1))`` validates its input; use :meth:`from_parts` to
    sort and drop zeros from an arbitrary multiset of parts.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    def at(self, i: int) -> int:
        """The ``i``-th part (1-based), or 0 past the end."""
        if i < 1:
            raise IndexError("parts are indexed from 1")
        return self[i - 1] if i <= len(self) else 0

    @property
    def num_parts(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return format_partition(self)


def length(p: Partition) -> int:
    """Sum of the parts (the size of the Young diagram)."""
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for q in p if q >= i) for i in range(1, p[0] + 1))


def add(p: Partition, q: Partition) -> Partition:
    """Componentwise sum, padding the shorter partition with zeros."""
    n = max(len(p), len(q))
    return Partition.from_parts(p.at(i) + q.at(i) for i in range(1, n + 1))


def union(p: Partition, q: Partition) -> Partition:
    """Partition whose multiset of parts is the union of both multisets."""
    return Partition.from_parts((*p, *q))


def n_stat(p: Partition) -> int:
    """``sum_i p_i * (i - 1)`` with 1-based ``i``."""
    return sum(part * i for i, part in enumerate(p))


def prefix_sums(p: Partition, k: int) -> int:
    return sum(p[:k]) if k > 0 else 0


def nat_leq(p: Partition, q: Partition) -> bool:
    """Natural order: every prefix sum of ``p`` is at least that of ``q``.

    Note the direction: ``(2, 2) <= (2, 1, 1)`` holds, so the single-row
    partition ``(n,)`` is the minimum.
    """
    if length(p) != length(q):
        raise IncomparableError(
            f"incomparable totals: |{format_partition(p)}|={length(p)} "
            f"vs |{format_partition(q)}|={length(q)}"
        )
    return first_nat_violation(p, q) is None


def first_nat_violation(p: Partition, q: Partition) -> int | None:
    """Smallest ``k`` with ``prefix_sums(p, k) < prefix_sums(q, k)``, if any."""
    n = max(len(p), len(q))
    ps = accumulate(p.at(i) for i in range(1, n + 1))
    qs = accumulate(q.at(i) for i in range(1, n + 1))
    for k, (a, b) in enumerate(zip(ps, qs), start=1):
        if a < b:
            return k
    return None


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    yield from (Partition(p) for p in _partitions(n, n if max_part is None else max_part))


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first, *rest))
    return tuple(out)


def format_partition(p: Iterable[int]) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def parse_partition(text: str) -> Partition:
    """Parse ``[7,6,4,1,1,1]``; ``[]`` is the empty partition."""
    s = "".join(text.split())
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected a bracketed list like [3,1], got {text!r}")
    body = s[1:-1]
    if not body:
        return Partition()
    try:
        return Partition(int(tok) for tok in body.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None
