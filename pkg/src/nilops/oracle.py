"""Brute-force extension oracle over a small prime field.

Objects are realised as matrix pairs ``(f, phi)`` with ``phi`` nilpotent,
``phi f = 0`` and ``f`` injective.  Extensions of ``Y = (f, phi_Y)`` by
``X = (g, phi_X)`` are the block-triangular pairs::

    F = [[g, h],        Phi = [[phi_X, nu   ],
         [0, f]]               [0,     phi_Y]]

and the only condition left on ``(h, nu)`` is ``phi_X h + nu f = 0``.  Its
solution space is enumerated through a kernel basis and every middle term
is classified by the Jordan types of ``Phi`` and of the operator ``Phi``
induces on the cokernel of ``F``.

Nothing here uses the extension algorithm; it is independent ground truth.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from . import gfp
from .genext import candidate_filter, star
from .homs import end_dim
from .objects import ZERO, S1Object, format_object, to_json, to_pickets
from .orders import dom_leq
from .partitions import Partition, conjugate

DEFAULT_MAX_BITS = 22
_CHUNK = 1 << 15


class NotNilpotentError(ValueError):
    pass


class OracleSizeError(RuntimeError):
    """The extension space is too large to enumerate."""


def max_oracle_bits() -> int:
    return int(os.environ.get("NILOPS_MAX_ORACLE_BITS", DEFAULT_MAX_BITS))


@dataclass(eq=False)
class ModuleRep:
    """Matrix pair ``(f, phi)``: ``f`` is ``b x a``, ``phi`` is ``b x b``."""

    f: np.ndarray
    phi: np.ndarray
    p: int = 2

    def __post_init__(self) -> None:
        gfp.check_field(self.p)
        self.phi = np.asarray(self.phi, dtype=np.int64) % self.p
        b = self.phi.shape[0] if self.phi.ndim == 2 else 0
        self.phi = self.phi.reshape(b, b)
        self.f = (np.asarray(self.f, dtype=np.int64) % self.p).reshape(b, -1) if b else \
            np.zeros((0, 0), dtype=np.int64)
        if gfp.matmul(self.phi, self.f, self.p).any():
            raise ValueError("phi * f != 0: the subspace is not semisimple")
        if gfp.rank(self.f, self.p) != self.a:
            raise ValueError("f is not injective")
        if gfp.matpow(self.phi, self.b, self.p).any():
            raise NotNilpotentError("not nilpotent")

    @property
    def a(self) -> int:
        return self.f.shape[1]

    @property
    def b(self) -> int:
        return self.phi.shape[0]


def canonical_rep(x: S1Object, p: int = 2) -> ModuleRep:
    """Block-diagonal realisation, one Jordan block per picket.

    Block ``P_e^m`` acts on ``1, T, ..., T^(m-1)`` by ``T``; for ``e = 1`` a
    column of ``f`` picks out the socle vector ``T^(m-1)``.
    """
    phi = np.zeros((x.b, x.b), dtype=np.int64)
    f = np.zeros((x.b, x.a), dtype=np.int64)
    off = col = 0
    for pk in to_pickets(x):
        for j in range(pk.m - 1):
            phi[off + j + 1, off + j] = 1
        if pk.epsilon:
            f[off + pk.m - 1, col] = 1
            col += 1
        off += pk.m
    return ModuleRep(f, phi, p)


def _type_from_ranks(dim: int, ranks) -> Partition:
    """Jordan type from ``rank(phi^i)``, ``i = 1, 2, ...``."""
    prev, cols = dim, []
    for r in ranks:
        if prev - r:
            cols.append(prev - r)
        prev = r
    return conjugate(Partition(cols))


def jordan_type(phi: np.ndarray, p: int = 2) -> Partition:
    phi = np.asarray(phi, dtype=np.int64)
    n = phi.shape[0]
    ranks, power = [], np.eye(n, dtype=np.int64)
    for _ in range(n):
        power = gfp.matmul(power, phi, p)
        ranks.append(gfp.rank(power, p))
    if n and ranks[-1]:
        raise NotNilpotentError("not nilpotent")
    return _type_from_ranks(n, ranks)


def cokernel_operator(rep: ModuleRep) -> np.ndarray:
    """Matrix of the map ``phi`` induces on ``K^b / im f``.

    The column space of ``f`` is extended to a basis by standard vectors,
    taken greedily in index order; the induced map is written in the
    coordinates of those complement vectors.
    """
    b, a, p = rep.b, rep.a, rep.p
    _, pivots = gfp.rref(np.concatenate([rep.f, np.eye(b, dtype=np.int64)], axis=1), p)
    comp = [c - a for c in pivots if c >= a]
    basis = np.concatenate([rep.f, np.eye(b, dtype=np.int64)[:, comp]], axis=1)
    images = gfp.matmul(rep.phi, basis[:, a:], p)
    coords = gfp.solve(basis, images, p).reshape(b, len(comp))
    return coords[a:, :]


def classify(rep: ModuleRep) -> S1Object:
    if rep.b == 0:
        return ZERO
    beta = jordan_type(rep.phi, rep.p)
    gamma = jordan_type(cokernel_operator(rep), rep.p)
    return S1Object(beta, gamma)


# -- extension enumeration ----------------------------------------------------

def _constraint_matrix(phi_x: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    """Matrix of ``(h, nu) -> phi_x h + nu f`` on ``vec(h) ++ vec(nu)``."""
    d, a = phi_x.shape[0], f.shape[1]
    b = f.shape[0]
    nh, nv = d * a, d * b
    cols = []
    for k in range(nh + nv):
        e = np.zeros(nh + nv, dtype=np.int64)
        e[k] = 1
        h, nu = e[:nh].reshape(d, a), e[nh:].reshape(d, b)
        cols.append(((phi_x @ h + nu @ f) % p).reshape(-1))
    if not cols:
        return np.zeros((d * a, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


@dataclass
class ExtensionSpace:
    """Solution space of the extension condition for a fixed ``(Y, X)``."""

    quotient: S1Object
    sub: S1Object
    p: int
    basis: np.ndarray  # kernel basis, one solution per row

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def bits(self) -> float:
        return self.dim * math.log2(self.p)

    @property
    def size(self) -> int:
        return self.p ** self.dim


def extension_space(y: S1Object, x: S1Object, p: int = 2) -> ExtensionSpace:
    gfp.check_field(p)
    rx, ry = canonical_rep(x, p), canonical_rep(y, p)
    basis = gfp.nullspace(_constraint_matrix(rx.phi, ry.f, p), p)
    return ExtensionSpace(y, x, p, basis)


def _block_pairs(space: ExtensionSpace, sols: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = space.p
    rx, ry = canonical_rep(space.sub, p), canonical_rep(space.quotient, p)
    c, d, a, b = rx.a, rx.b, ry.a, ry.b
    n = len(sols)
    F = np.zeros((n, d + b, c + a), dtype=np.int64)
    Phi = np.zeros((n, d + b, d + b), dtype=np.int64)
    F[:, :d, :c] = rx.f
    F[:, d:, c:] = ry.f
    F[:, :d, c:] = sols[:, : d * a].reshape(n, d, a)
    Phi[:, :d, :d] = rx.phi
    Phi[:, d:, d:] = ry.phi
    Phi[:, :d, d:] = sols[:, d * a:].reshape(n, d, b)
    return F, Phi


def _signatures(F: np.ndarray, Phi: np.ndarray, p: int) -> np.ndarray:
    """Per sample: ranks of ``Phi^i`` then of ``[Phi^i | F]``, ``i = 1..n``."""
    n = Phi.shape[1]
    out = np.zeros((len(Phi), 2 * n), dtype=np.int64)
    power = Phi.copy()
    for i in range(n):
        out[:, i] = gfp.batch_rank(power, p)
        out[:, n + i] = gfp.batch_rank(np.concatenate([power, F], axis=2), p)
        power = np.einsum("nij,njk->nik", power, Phi) % p
    return out


def _decode(sig: np.ndarray, n: int, a: int) -> S1Object:
    beta = _type_from_ranks(n, sig[:n])
    gamma = _type_from_ranks(n - a, [r - a for r in sig[n:]])
    return S1Object(beta, gamma)


def iter_solutions(space: ExtensionSpace, chunk: int = _CHUNK):
    """All ``(h, nu)`` solutions, flattened, in chunks."""
    k, p = space.dim, space.p
    weights = p ** np.arange(k, dtype=np.int64)
    for start in range(0, space.size, chunk):
        idx = np.arange(start, min(start + chunk, space.size), dtype=np.int64)
        coeffs = (idx[:, None] // weights[None, :]) % p
        yield (coeffs @ space.basis) % p


def enumerate_extensions(
    y: S1Object, x: S1Object, p: int = 2, max_bits: int | None = None
) -> list[S1Object]:
    """Isomorphism types of all extensions ``0 -> x -> Z -> y -> 0`` in S_1.

    Returned sorted and without duplicates.
    """
    space = extension_space(y, x, p)
    limit = max_oracle_bits() if max_bits is None else max_bits
    if space.bits > limit:
        raise OracleSizeError(
            f"extension space has {space.bits:.1f} bits (p={p}, dim={space.dim}); "
            f"limit is {limit} (set NILOPS_MAX_ORACLE_BITS to raise it)"
        )
    n, a = x.b + y.b, x.a + y.a
    if n == 0:
        return [ZERO]
    seen: set[tuple[int, ...]] = set()
    for sols in iter_solutions(space):
        F, Phi = _block_pairs(space, sols)
        sigs = np.unique(_signatures(F, Phi, p), axis=0)
        seen.update(tuple(int(v) for v in s) for s in sigs)
    return sorted({_decode(np.array(s), n, a) for s in seen})


# -- verification of the generic extension ------------------------------------

@dataclass
class GenericReport:
    quotient: S1Object
    sub: S1Object
    p: int
    generic: S1Object
    extensions: list[S1Object]
    assertions: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.assertions.values())

    def to_json(self) -> dict:
        return {
            "quotient": to_json(self.quotient),
            "sub": to_json(self.sub),
            "p": self.p,
            "extensions": [to_json(z) for z in self.extensions],
            "generic": to_json(self.generic),
            "assertions": dict(self.assertions),
            "failures": list(self.failures),
        }

    def __str__(self) -> str:
        lines = [
            f"Y = {format_object(self.quotient)}, X = {format_object(self.sub)}, p = {self.p}",
            f"Y*X = {format_object(self.generic)}",
            f"extension types ({len(self.extensions)}):",
        ]
        lines += [f"  {format_object(z)}  dim End = {end_dim(z)}" for z in self.extensions]
        lines += [f"{'PASS' if v else 'FAIL'} {k}" for k, v in self.assertions.items()]
        lines += [f"  counterexample: {msg}" for msg in self.failures]
        return "\n".join(lines)


def verify_generic(
    y: S1Object, x: S1Object, p: int = 2, max_bits: int | None = None
) -> GenericReport:
    """Check ``y * x`` against the enumerated extension types.

    ``y * x`` must be one of them, lie below all of them in the dominance
    order, be the unique minimiser of ``dim End``, and every type must pass
    :func:`candidate_filter`.
    """
    exts = enumerate_extensions(y, x, p, max_bits)
    z0 = star(y, x)
    rep = GenericReport(y, x, p, z0, exts)
    failures = rep.failures

    rep.assertions["member"] = z0 in exts
    if not rep.assertions["member"]:
        failures.append(f"{format_object(z0)} is not among the extensions")

    bad = [z for z in exts if not dom_leq(z0, z)]
    rep.assertions["dom_minimal"] = not bad
    failures += [f"Y*X is not dominance-below {format_object(z)}" for z in bad]

    e0 = end_dim(z0)
    bad = [z for z in exts if z != z0 and end_dim(z) <= e0]
    rep.assertions["end_unique_min"] = not bad
    failures += [
        f"{format_object(z)} has dim End {end_dim(z)} <= {e0} of Y*X" for z in bad
    ]

    bad = [z for z in exts if not candidate_filter(y, x, z)]
    rep.assertions["filter_all"] = not bad
    failures += [f"{format_object(z)} fails the candidate filter" for z in bad]
    return rep


def hom_space_dim(x: S1Object, y: S1Object, p: int = 2) -> int:
    """``dim Hom(x, y)`` by solving the intertwining equations over F_p.

    Unknowns are ``psi1`` (``a_y x a_x``) and ``psi2`` (``b_y x b_x``) with
    ``psi2 phi_x = phi_y psi2`` and ``f_y psi1 = psi2 f_x``.
    """
    rx, ry = canonical_rep(x, p), canonical_rep(y, p)
    n1, n2 = ry.a * rx.a, ry.b * rx.b
    cols = []
    for k in range(n1 + n2):
        e = np.zeros(n1 + n2, dtype=np.int64)
        e[k] = 1
        psi1, psi2 = e[:n1].reshape(ry.a, rx.a), e[n1:].reshape(ry.b, rx.b)
        cols.append(np.concatenate([
            (psi2 @ rx.phi - ry.phi @ psi2).reshape(-1),
            (ry.f @ psi1 - psi2 @ rx.f).reshape(-1),
        ]) % p)
    if not cols:
        return 0
    return n1 + n2 - gfp.rank(np.stack(cols, axis=1), p)
