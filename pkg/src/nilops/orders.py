"""Dominance, hom and degeneration orders on a fixed ``S_a^b``.

``x <= y`` in these orders means ``y`` is a degeneration of ``x``: ``x``
is the more generic object (larger orbit, smaller endomorphism ring).
"""

from __future__ import annotations

from dataclasses import dataclass

from .homs import hom_dim
from .objects import Picket, S1Object, enumerate_s1, format_object
from .partitions import first_nat_violation, format_partition, prefix_sums


class AmbientMismatch(ValueError):
    """Objects live in different ``S_a^b``."""


@dataclass(frozen=True)
class OrderVerdict:
    leq: bool
    witness: str | None = None

    def __post_init__(self) -> None:
        if not self.leq and not self.witness:
            raise ValueError("a negative verdict needs a witness")

    def __bool__(self) -> bool:
        return self.leq


def _same_ambient(x: S1Object, y: S1Object) -> None:
    if (x.a, x.b) != (y.a, y.b):
        raise AmbientMismatch(
            f"different ambient variety: {format_object(x)} in S_{x.a}^{x.b}, "
            f"{format_object(y)} in S_{y.a}^{y.b}"
        )


def dom_leq(x: S1Object, y: S1Object) -> OrderVerdict:
    _same_ambient(x, y)
    for name in ("beta", "gamma"):
        p, q = getattr(x, name), getattr(y, name)
        k = first_nat_violation(p, q)
        if k is not None:
            return OrderVerdict(False, (
                f"{name}: prefix sum at k={k} is {prefix_sums(p, k)} for "
                f"{format_partition(p)} < {prefix_sums(q, k)} for {format_partition(q)}"
            ))
    return OrderVerdict(True)


def _hom_from(z: Picket, x: S1Object) -> int:
    return hom_dim(z.as_object(), x)


def hom_leq(x: S1Object, y: S1Object) -> OrderVerdict:
    """``[Z, x] <= [Z, y]`` for every picket ``Z = P_e^m`` with ``m <= b + 1``.

    Larger test pickets give nothing new: ``[P_e^m, x]`` is constant for
    ``m > b``.
    """
    _same_ambient(x, y)
    b = x.b
    for eps in (0, 1):
        for m in range(1, b + 2):
            z = Picket(eps, m)
            hx, hy = _hom_from(z, x), _hom_from(z, y)
            if hx > hy:
                return OrderVerdict(False, f"[{z},x]={hx} > [{z},y]={hy}")
        assert all(
            _hom_from(Picket(eps, b + 1), o) == _hom_from(Picket(eps, b + 2), o) for o in (x, y)
        ), "hom dimensions did not stabilise at m = b + 1"
    return OrderVerdict(True)


def deg_leq(x: S1Object, y: S1Object) -> OrderVerdict:
    """Degeneration order; coincides with the dominance order on ``S_a^b``."""
    return dom_leq(x, y)


ORDERS = {"dom": dom_leq, "hom": hom_leq, "deg": deg_leq}


def leq_matrix(objs: list[S1Object], via: str = "dom") -> list[list[bool]]:
    leq = ORDERS[via]
    return [[leq(x, y).leq for y in objs] for x in objs]


def covers(a: int, b: int) -> list[tuple[S1Object, S1Object]]:
    """Cover relations of the dominance order on ``S_a^b``, in enumeration order."""
    objs = enumerate_s1(a, b)
    return [(objs[i], objs[j]) for i, j in _cover_indices(objs)]


def _cover_indices(objs: list[S1Object]) -> list[tuple[int, int]]:
    le = leq_matrix(objs)
    n = len(objs)
    lt = [[le[i][j] and i != j for j in range(n)] for i in range(n)]
    return [
        (i, j)
        for i in range(n)
        for j in range(n)
        if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n))
    ]


def export_hasse(a: int, b: int, format: str = "dot") -> str:
    """Hasse diagram of ``S_a^b`` as a DOT digraph.

    Edges run from the more generic object to its degenerations.
    """
    if format != "dot":
        raise ValueError(f"unsupported Hasse format {format!r}")
    objs = enumerate_s1(a, b)
    lines = [f"digraph S_{a}_{b} {{"]
    for i, x in enumerate(objs):
        lines.append(f'  n{i} [label="{format_object(x)}"];')
    for i, j in _cover_indices(objs):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
