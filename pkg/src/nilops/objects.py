"""Isomorphism classes of semisimple invariant subspaces.

An object is a pair of partitions ``gamma <= beta`` such that ``beta``
minus ``gamma`` is a horizontal strip: ``gamma_i <= beta_i <= gamma_i + 1``.
``beta`` is the Jordan type of the operator, ``gamma`` the Jordan type of
the cokernel, and ``a = |beta| - |gamma|`` is the dimension of the
(semisimple) subspace.  Each object splits uniquely into pickets
``P_eps^m``: ``P_0^m`` is a single Jordan block of size ``m`` and
``P_1^m`` is the same block with its socle marked as the subspace.

Text forms::

    P0^4+P1^4+P1^3        picket sum
    [4,4,3]/[4,3,2]       (beta)/(gamma) pair
    ""  or  "0"           the zero object
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .partitions import (
    Partition,
    format_partition,
    length,
    parse_partition,
    partitions_of,
    union,
)


class StripError(ValueError):
    """``beta / gamma`` is not a horizontal strip."""


class ObjectSyntaxError(ValueError):
    """Text could not be parsed as an object."""


GRAMMAR_HINT = (
    "objects are written as a picket sum like 'P0^4+P1^4+P1^3', "
    "a pair like '[4,4,3]/[4,3,2]', or '' / '0' for the zero object"
)


class Picket(NamedTuple):
    epsilon: int
    m: int

    def __str__(self) -> str:
        return f"P{self.epsilon}^{self.m}"

    def as_object(self) -> "S1Object":
        return S1Object(Partition((self.m,)), Partition.from_parts((self.m - self.epsilon,)))


def _check_strip(beta: Partition, gamma: Partition) -> None:
    n = max(len(beta), len(gamma))
    for i in range(1, n + 1):
        b, g = beta.at(i), gamma.at(i)
        if g > b:
            raise StripError(
                f"not a horizontal strip at index {i}: gamma_{i}={g} > beta_{i}={b}"
            )
        if b > g + 1:
            raise StripError(
                f"not a horizontal strip at index {i}: beta_{i}={b} > gamma_{i}+1={g + 1}"
            )


@dataclass(frozen=True, order=True)
class S1Object:
    beta: Partition
    gamma: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", Partition(self.beta))
        object.__setattr__(self, "gamma", Partition(self.gamma))
        _check_strip(self.beta, self.gamma)

    @property
    def b(self) -> int:
        return length(self.beta)

    @property
    def a(self) -> int:
        return length(self.beta) - length(self.gamma)

    @property
    def num_summands(self) -> int:
        return len(self.beta)

    def is_zero(self) -> bool:
        return not self.beta

    def pickets(self) -> tuple[Picket, ...]:
        return to_pickets(self)

    def __add__(self, other: "S1Object") -> "S1Object":
        """Direct sum."""
        return direct_sum(self, other)

    def __str__(self) -> str:
        return format_object(self)


ZERO = S1Object(Partition(), Partition())


def make_object(beta: Iterable[int], gamma: Iterable[int]) -> S1Object:
    return S1Object(Partition(beta), Partition(gamma))


def picket(epsilon: int, m: int) -> S1Object:
    if epsilon not in (0, 1) or m < 1:
        raise ValueError(f"no picket P{epsilon}^{m}")
    return Picket(epsilon, m).as_object()


def to_pickets(x: S1Object) -> tuple[Picket, ...]:
    """Picket decomposition, ``m`` descending, ``P_0`` before ``P_1`` on ties."""
    return tuple(
        Picket(x.beta.at(i) - x.gamma.at(i), x.beta.at(i)) for i in range(1, len(x.beta) + 1)
    )


def from_pickets(ps: Iterable[Picket | tuple[int, int]]) -> S1Object:
    ps = [Picket(*p) for p in ps]
    for p in ps:
        if p.epsilon not in (0, 1) or p.m < 1:
            raise ValueError(f"no picket P{p.epsilon}^{p.m}")
    return S1Object(
        Partition.from_parts(p.m for p in ps),
        Partition.from_parts(p.m - p.epsilon for p in ps),
    )


def direct_sum(*xs: S1Object) -> S1Object:
    beta, gamma = Partition(), Partition()
    for x in xs:
        beta, gamma = union(beta, x.beta), union(gamma, x.gamma)
    return S1Object(beta, gamma)


def enumerate_s1(a: int, b: int) -> list[S1Object]:
    """All objects with ``|beta| = b`` and subspace dimension ``a``.

    Ordered lexicographically descending on ``(beta, gamma)``.
    """
    if a < 0 or b < 0 or a > b:
        return []
    out = []
    for beta in partitions_of(b):
        for marks in product((0, 1), repeat=len(beta)):
            if sum(marks) != a:
                continue
            gamma = [p - e for p, e in zip(beta, marks)]
            if any(gamma[i] < gamma[i + 1] for i in range(len(gamma) - 1)):
                continue
            out.append(S1Object(beta, Partition.from_parts(gamma)))
    out.sort(key=lambda x: (tuple(x.beta), tuple(x.gamma)), reverse=True)
    return out


def enumerate_up_to(max_b: int, max_a: int | None = None) -> list[S1Object]:
    """Every object with ``b <= max_b`` (and ``a <= max_a``), zero object first."""
    out = []
    for b in range(max_b + 1):
        for a in range(b + 1 if max_a is None else min(b, max_a) + 1):
            out.extend(enumerate_s1(a, b))
    return out


# -- text forms ---------------------------------------------------------------

_PICKET_RE = re.compile(r"P([01])\^(\d+)")
_PAIR_RE = re.compile(r"(\[[\d,]*\])/(\[[\d,]*\])")


def format_object(x: S1Object) -> str:
    return f"{format_partition(x.beta)}/{format_partition(x.gamma)}"


def format_pickets(x: S1Object) -> str:
    if x.is_zero():
        return "0"
    return "+".join(str(p) for p in to_pickets(x))


def parse_object(text: str) -> S1Object:
    """Parse either text form.  Strip violations raise :class:`StripError`."""
    s = "".join(text.split())
    if s in ("", "0"):
        return ZERO
    if s.startswith("["):
        m = _PAIR_RE.fullmatch(s)
        if not m:
            raise ObjectSyntaxError(f"cannot parse {text!r}; {GRAMMAR_HINT}")
        try:
            beta, gamma = parse_partition(m.group(1)), parse_partition(m.group(2))
        except ValueError as exc:
            raise ObjectSyntaxError(f"{exc}; {GRAMMAR_HINT}") from None
        return S1Object(beta, gamma)
    ps = []
    for term in s.split("+"):
        m = _PICKET_RE.fullmatch(term)
        if not m or int(m.group(2)) < 1:
            raise ObjectSyntaxError(f"cannot parse term {term!r} of {text!r}; {GRAMMAR_HINT}")
        ps.append(Picket(int(m.group(1)), int(m.group(2))))
    return from_pickets(ps)


def to_json(x: S1Object) -> dict:
    return {"beta": list(x.beta), "gamma": list(x.gamma)}


def from_json(d: dict) -> S1Object:
    return S1Object(Partition(d["beta"]), Partition(d["gamma"]))


# -- rendering ----------------------------------------------------------------

def tableau_cells(x: S1Object) -> list[list[bool]]:
    """Rows of the LR-tableau; ``True`` marks a cell carrying the entry 1.

    Parts of ``beta`` are columns, so row ``r`` has one cell for every part
    ``beta_i >= r``.  The marked cell of a column ``i`` with
    ``beta_i > gamma_i`` is its bottom cell, in row ``beta_i``.
    """
    rows = []
    for r in range(1, (x.beta[0] if x.beta else 0) + 1):
        rows.append([
            r == x.beta.at(i) and x.beta.at(i) > x.gamma.at(i)
            for i in range(1, len(x.beta) + 1)
            if x.beta.at(i) >= r
        ])
    return rows


def render_tableau(x: S1Object, format: str = "ascii") -> str:
    rows = tableau_cells(x)
    if format == "ascii":
        return "\n".join("".join("[1]" if c else "[ ]" for c in row) for row in rows)
    if format == "latex":
        entries = ",".join("".join("1" if c else r"\none" for c in row) for row in rows)
        profile = ",".join(str(len(row)) for row in rows)
        return rf"\ytableaushort{{{entries}}} * {{{profile}}}"
    raise ValueError(f"unknown tableau format {format!r}")


def row_profile(x: S1Object) -> Sequence[int]:
    return tuple(len(row) for row in tableau_cells(x))
