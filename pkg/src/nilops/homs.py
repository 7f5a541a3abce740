"""Hom-space dimensions and orbit dimensions.

Homomorphism dimensions come from the picket table and are extended
bilinearly over picket decompositions.  The orbit dimension is available
two ways: the closed form in the partition statistics and
``a^2 + b^2 - dim End(X)``.  They must agree.
"""

from __future__ import annotations

from .objects import Picket, S1Object, to_pickets
from .partitions import Partition, n_stat


def picket_hom(x: Picket, y: Picket) -> int:
    """``dim Hom(P_e^l, P_f^m)``."""
    if x.epsilon == 1 and y.epsilon == 0:
        return min(x.m - 1, y.m)
    return min(x.m, y.m)


def hom_dim(x: S1Object, y: S1Object) -> int:
    ys = to_pickets(y)
    return sum(picket_hom(p, q) for p in to_pickets(x) for q in ys)


def end_dim(x: S1Object) -> int:
    return hom_dim(x, x)


def alpha(x: S1Object) -> Partition:
    """Jordan type of the subspace; always ``(1, ..., 1)`` with ``a`` ones."""
    return Partition((1,) * x.a)


def orbit_dim_formula(x: S1Object) -> int:
    a, b = x.a, x.b
    return b * b + a * a - n_stat(alpha(x)) - n_stat(x.beta) - n_stat(x.gamma) - b


def orbit_dim_via_end(x: S1Object) -> int:
    return x.a ** 2 + x.b ** 2 - end_dim(x)


orbit_dim = orbit_dim_formula
