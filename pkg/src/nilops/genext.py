"""Generic extensions of semisimple invariant subspaces.

``star(Y, X)`` is the generic extension ``Y * X`` of the quotient ``Y`` by
the subobject ``X``: the unique extension ``0 -> X -> Z -> Y -> 0`` whose
endomorphism ring has minimal dimension.  It is computed directly on the
``(beta, gamma)`` pairs.

``star`` is associative with the zero object as identity, so the
isomorphism classes form a monoid, generated by ``P_1^1`` and the
semisimple objects ``(P_0^1)^n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .objects import ZERO, Picket, S1Object, direct_sum, from_pickets, picket, to_pickets
from .partitions import Partition, add, nat_leq, union


def star(y: S1Object, x: S1Object) -> S1Object:
    """Generic extension ``y * x`` (``y`` the quotient, ``x`` the subobject)."""
    bx, gx, by, gy = x.beta, x.gamma, y.beta, y.gamma
    gz = add(gx, gy)
    common = min(len(bx), len(by))
    n = 0
    bz = []
    for i in range(1, common + 1):
        bz.append(bx.at(i) + gy.at(i))
        if by.at(i) != gy.at(i):
            n += 1
    if len(bx) > common:
        for i in range(common + 1, len(bx) + 1):
            bz.append(bx.at(i))
    else:
        for i in range(common + 1, len(by) + 1):
            bump = int(gy.at(i) == by.at(i) and n > 0)
            bz.append(by.at(i) + bump)
            n -= bump
    bz.extend([1] * n)
    assert all(bz[i] >= bz[i + 1] for i in range(len(bz) - 1)), f"unsorted beta {bz}"
    return S1Object(Partition.from_parts(bz), gz)


def star_all(objs: Sequence[S1Object]) -> S1Object:
    """``w1 * w2 * ... * wt``, folded from the left."""
    return reduce(star, objs, ZERO)


def star_power(x: S1Object, k: int) -> S1Object:
    if k < 0:
        raise ValueError("power must be non-negative")
    return star_all([x] * k)


# -- extension witnesses ------------------------------------------------------

@dataclass(frozen=True)
class WitnessRow:
    """One short exact sequence ``0 -> sub -> middle -> quotient -> 0``.

    ``kind`` is one of

    * ``"concat"``: ``P_e^l -> P_e^(l+m) -> P_0^m``;
    * ``"E1"`` / ``"E2"`` with ``params = (m, r, k)``:
      ``P_e^m -> P_e^(m+r-1) + P_1^(k+1) -> P_1^r + P_0^k`` with ``e = 0`` for
      E1 and ``e = 1`` for E2;
    * ``"split-sub"``: ``X_i -> X_i -> 0``;
    * ``"split-quot"``: ``0 -> Y_j -> Y_j``.
    """

    kind: str
    sub: S1Object
    middle: S1Object
    quotient: S1Object
    params: tuple[int, int, int] | None = None

    def __post_init__(self) -> None:
        if self.kind in ("E1", "E2"):
            m, r, k = self.params
            if not (m >= 1 and r > k >= 0):
                raise ValueError(f"{self.kind}{self.params} needs m >= 1 and r > k >= 0")
        if (self.middle.a, self.middle.b) != (
            self.sub.a + self.quotient.a, self.sub.b + self.quotient.b
        ):
            raise ValueError(f"dimension mismatch in witness row {self}")

    @property
    def label(self) -> str:
        return f"{self.kind}{self.params}" if self.params else self.kind


@dataclass(frozen=True)
class ExtensionWitness:
    rows: tuple[WitnessRow, ...]

    def subs(self) -> S1Object:
        return direct_sum(*(r.sub for r in self.rows))

    def middles(self) -> S1Object:
        return direct_sum(*(r.middle for r in self.rows))

    def quotients(self) -> S1Object:
        return direct_sum(*(r.quotient for r in self.rows))


def e1(m: int, r: int, k: int) -> WitnessRow:
    return _e_row("E1", 0, m, r, k)


def e2(m: int, r: int, k: int) -> WitnessRow:
    return _e_row("E2", 1, m, r, k)


def _e_row(kind: str, eps: int, m: int, r: int, k: int) -> WitnessRow:
    quot = [Picket(1, r)] + ([Picket(0, k)] if k else [])
    return WitnessRow(
        kind,
        picket(eps, m),
        from_pickets([Picket(eps, m + r - 1), Picket(1, k + 1)]),
        from_pickets(quot),
        (m, r, k),
    )


def extension_witness(y: S1Object, x: S1Object) -> ExtensionWitness:
    """Split ``y * x`` into middle terms of explicit short exact sequences.

    Parts of ``x`` and ``y`` are paired by index.  When ``y`` has more
    summands than ``x``, each marked part ``i`` of ``y`` within the range
    of ``x`` is additionally paired with the next unmarked part ``j`` of
    ``y`` beyond that range, giving ``E(beta^X_i, beta^Y_i, beta^Y_j)``.
    """
    bx, gx, by, gy = x.beta, x.gamma, y.beta, y.gamma
    nx, ny = len(bx), len(by)
    common = min(nx, ny)
    marked = [i for i in range(1, common + 1) if by.at(i) > gy.at(i)]
    spare = [j for j in range(common + 1, ny + 1) if by.at(j) == gy.at(j)]
    partner = dict(zip(marked, spare))
    used = set(partner.values())

    rows = []
    for i in range(1, common + 1):
        ex = bx.at(i) - gx.at(i)
        if by.at(i) == gy.at(i):
            rows.append(WitnessRow(
                "concat",
                picket(ex, bx.at(i)),
                picket(ex, bx.at(i) + by.at(i)),
                picket(0, by.at(i)),
            ))
        else:
            k = by.at(partner[i]) if i in partner else 0
            rows.append((e2 if ex else e1)(bx.at(i), by.at(i), k))
    for i in range(common + 1, nx + 1):
        p = picket(bx.at(i) - gx.at(i), bx.at(i))
        rows.append(WitnessRow("split-sub", p, p, ZERO))
    for j in range(common + 1, ny + 1):
        if j in used:
            continue
        p = picket(by.at(j) - gy.at(j), by.at(j))
        rows.append(WitnessRow("split-quot", ZERO, p, p))
    return ExtensionWitness(tuple(rows))


# -- necessary conditions on extensions ---------------------------------------

def candidate_filter(y: S1Object, x: S1Object, z: S1Object) -> bool:
    """Necessary condition for ``z`` to be an extension of ``y`` by ``x``.

    Every prefix sum of ``gamma^z`` is bounded by that of
    ``gamma^X + gamma^Y``, and every prefix sum of ``beta^z`` by those of
    ``beta^X + beta^Y`` and ``(beta^X u 1^(a_Y)) + gamma^Y``.
    Passing the filter does not make ``z`` an extension.
    """
    if (z.a, z.b) != (x.a + y.a, x.b + y.b):
        raise ValueError(
            f"size mismatch: z in S_{z.a}^{z.b}, expected S_{x.a + y.a}^{x.b + y.b}"
        )
    ones = Partition((1,) * y.a)
    return (
        nat_leq(add(x.gamma, y.gamma), z.gamma)
        and nat_leq(add(x.beta, y.beta), z.beta)
        and nat_leq(add(union(x.beta, ones), y.gamma), z.beta)
    )


# -- monoid generators --------------------------------------------------------

def generator_word(x: S1Object) -> list[S1Object]:
    """Word over ``{P_1^1, (P_0^1)^n}`` whose left-folded product is ``x``.

    Each step peels the bottom row: ``x = H * R`` where ``H`` is
    ``(P_0^1)^s`` plus the height-one summands of ``x`` (``s`` = number of
    taller summands) and ``R`` shortens every taller summand by one.  A
    height-one object ``(P_0^1)^n + (P_1^1)^m`` is ``P_1^1 ^ m * (P_0^1)^n``.
    """
    ps = to_pickets(x)
    if not ps:
        return []
    if ps[0].m == 1:
        n0 = sum(1 for p in ps if p.epsilon == 0)
        n1 = len(ps) - n0
        word = [picket(1, 1)] * n1
        if n0:
            word.append(from_pickets([Picket(0, 1)] * n0))
        return word
    tall = [p for p in ps if p.m >= 2]
    short = [p for p in ps if p.m == 1]
    head = from_pickets([Picket(0, 1)] * len(tall) + short)
    rest = from_pickets(Picket(p.epsilon, p.m - 1) for p in tall)
    return generator_word(head) + generator_word(rest)
