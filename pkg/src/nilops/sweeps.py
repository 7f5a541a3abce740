"""Exhaustive property sweeps over all small objects.

Each sweep returns a :class:`SweepResult` counting the cases it checked and
describing every failure.  Cases are visited in enumeration order, so
counts and failure lists are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from .genext import candidate_filter, extension_witness, generator_word, star, star_all
from .homs import end_dim, orbit_dim_formula, orbit_dim_via_end
from .objects import S1Object, enumerate_s1, enumerate_up_to, format_object as fmt
from .orders import dom_leq, hom_leq
from .partitions import add, prefix_sums


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    unit: str = "cases"

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status}: {self.checked} {self.unit}"
        if self.failures:
            text += f", {len(self.failures)} failures"
        return text


def pairs_with_total(max_b: int, max_a: int | None = None) -> Iterator[tuple[S1Object, S1Object]]:
    """All ``(y, x)`` with ``b_x + b_y <= max_b`` (and ``a_x + a_y <= max_a``)."""
    objs = enumerate_up_to(max_b)
    for y in objs:
        for x in objs:
            if y.b + x.b > max_b:
                continue
            if max_a is not None and y.a + x.a > max_a:
                continue
            yield y, x


def sweep_assoc(max_b: int = 3) -> SweepResult:
    res = SweepResult("assoc", unit="triples")
    objs = enumerate_up_to(max_b)
    for x, y, z in product(objs, repeat=3):
        res.checked += 1
        left, right = star(star(x, y), z), star(x, star(y, z))
        if left != right:
            res.failures.append(
                f"({fmt(x)}*{fmt(y)})*{fmt(z)} = {fmt(left)} != {fmt(right)}"
            )
    return res


def sweep_mono(max_b: int = 4, max_a: int = 2, max_b_x: int = 3) -> SweepResult:
    """``Y <= Y'`` implies ``Y*X <= Y'*X`` and ``X*Y <= X*Y'``."""
    res = SweepResult("mono", unit="comparisons")
    xs = enumerate_up_to(max_b_x)
    for b in range(max_b + 1):
        for a in range(min(max_a, b) + 1):
            objs = enumerate_s1(a, b)
            for y, y2 in product(objs, repeat=2):
                if not dom_leq(y, y2):
                    continue
                for x in xs:
                    res.checked += 1
                    v1 = dom_leq(star(y, x), star(y2, x))
                    v2 = dom_leq(star(x, y), star(x, y2))
                    if not v1:
                        res.failures.append(f"Y={fmt(y)} Y'={fmt(y2)} X={fmt(x)}: Y*X: {v1.witness}")
                    if not v2:
                        res.failures.append(f"Y={fmt(y)} Y'={fmt(y2)} X={fmt(x)}: X*Y: {v2.witness}")
    return res


def sweep_orders(max_b: int = 6, max_a: int = 3) -> SweepResult:
    """Dominance and hom orders agree on every ``S_a^b``."""
    res = SweepResult("orders", unit="pairs")
    for b in range(max_b + 1):
        for a in range(min(max_a, b) + 1):
            objs = enumerate_s1(a, b)
            for x, y in product(objs, repeat=2):
                res.checked += 1
                d, h = dom_leq(x, y), hom_leq(x, y)
                if d.leq != h.leq:
                    res.failures.append(
                        f"{fmt(x)} vs {fmt(y)}: dom={d.leq} hom={h.leq} ({d.witness or h.witness})"
                    )
    return res


def sweep_thm12(max_b: int = 8, max_a: int = 4) -> SweepResult:
    """Closed-form orbit dimension equals ``a^2 + b^2 - dim End``."""
    res = SweepResult("thm12", unit="objects")
    for x in enumerate_up_to(max_b, max_a):
        res.checked += 1
        f, e = orbit_dim_formula(x), orbit_dim_via_end(x)
        if f != e:
            res.failures.append(f"{fmt(x)}: formula {f} != via End {e}")
    return res


def sweep_witness(max_b: int = 7) -> SweepResult:
    res = SweepResult("witness", unit="pairs")
    for y, x in pairs_with_total(max_b):
        res.checked += 1
        w = extension_witness(y, x)
        got = (w.subs(), w.middles(), w.quotients())
        want = (x, star(y, x), y)
        if got != want:
            res.failures.append(
                f"Y={fmt(y)} X={fmt(x)}: witness sums {[fmt(o) for o in got]} "
                f"!= {[fmt(o) for o in want]}"
            )
    return res


def partial_sum_violation(y: S1Object, x: S1Object) -> str | None:
    """Check the partial sums of ``beta^(Y*X)`` against the closed formulas."""
    z = star(y, x)
    nx = len(x.beta)
    for i in range(1, nx + 1):
        if z.beta.at(i) != x.beta.at(i) + y.gamma.at(i):
            return f"beta_{i} = {z.beta.at(i)} != beta^X_i + gamma^Y_i"
    base = add(y.gamma, x.beta)
    for k in range(nx + 1, len(z.beta) + 1):
        want = prefix_sums(base, k) + min(
            k - nx, prefix_sums(y.beta, k) - prefix_sums(y.gamma, k)
        )
        if prefix_sums(z.beta, k) != want:
            return f"prefix sum at k={k} is {prefix_sums(z.beta, k)}, formula gives {want}"
    return None


def sweep_partial_sums(max_b: int = 7) -> SweepResult:
    res = SweepResult("sums", unit="pairs")
    for y, x in pairs_with_total(max_b):
        res.checked += 1
        msg = partial_sum_violation(y, x)
        if msg:
            res.failures.append(f"Y={fmt(y)} X={fmt(x)}: {msg}")
    return res


def sweep_strip(max_b: int = 7) -> SweepResult:
    """``Y*X`` is a valid object of the right size with ``gamma = gamma^X + gamma^Y``."""
    res = SweepResult("strip", unit="pairs")
    for y, x in pairs_with_total(max_b):
        res.checked += 1
        try:
            z = star(y, x)
        except ValueError as exc:
            res.failures.append(f"Y={fmt(y)} X={fmt(x)}: {exc}")
            continue
        if z.gamma != add(x.gamma, y.gamma) or (z.a, z.b) != (x.a + y.a, x.b + y.b):
            res.failures.append(f"Y={fmt(y)} X={fmt(x)}: bad shape {fmt(z)}")
        elif not candidate_filter(y, x, z):
            res.failures.append(f"Y={fmt(y)} X={fmt(x)}: Y*X fails the candidate filter")
    return res


def sweep_generators(max_b: int = 6) -> SweepResult:
    res = SweepResult("gens", unit="objects")
    for x in enumerate_up_to(max_b):
        res.checked += 1
        word = generator_word(x)
        bad = [w for w in word if not _is_generator(w)]
        if bad:
            res.failures.append(f"{fmt(x)}: non-generator letters {[fmt(w) for w in bad]}")
        elif star_all(word) != x:
            res.failures.append(f"{fmt(x)}: word folds to {fmt(star_all(word))}")
    return res


def _is_generator(w: S1Object) -> bool:
    if w.beta == (1,) and w.gamma == ():
        return True
    return bool(w.beta) and set(w.beta) == {1} and w.gamma == w.beta


def sweep_order_dims(max_b: int = 6, max_a: int = 3) -> SweepResult:
    """Orbit dimension drops strictly, and ``dim End`` grows, along every cover."""
    from .orders import covers

    res = SweepResult("covers", unit="cover edges")
    for b in range(max_b + 1):
        for a in range(min(max_a, b) + 1):
            for x, y in covers(a, b):
                res.checked += 1
                if not orbit_dim_formula(x) > orbit_dim_formula(y):
                    res.failures.append(f"{fmt(x)} -> {fmt(y)}: orbit dimension does not drop")
                if not end_dim(x) < end_dim(y):
                    res.failures.append(f"{fmt(x)} -> {fmt(y)}: dim End does not grow")
    return res


def sweep_oracle(max_b: int = 5, max_a: int = 2, p: int = 2) -> SweepResult:
    from .oracle import verify_generic

    res = SweepResult(f"oracle(p={p})", unit="pairs")
    for y, x in pairs_with_total(max_b, max_a):
        res.checked += 1
        rep = verify_generic(y, x, p)
        if not rep.ok:
            res.failures.append(f"Y={fmt(y)} X={fmt(x)}: " + "; ".join(rep.failures))
    return res


SUITES: dict[str, Callable[[int], SweepResult]] = {
    "assoc": lambda n: sweep_assoc(n),
    "mono": lambda n: sweep_mono(n, 2, max(n - 1, 0)),
    "orders": lambda n: sweep_orders(n),
    "thm12": lambda n: sweep_thm12(n),
    "witness": lambda n: sweep_witness(n),
    "sums": lambda n: sweep_partial_sums(n),
    "strip": lambda n: sweep_strip(n),
    "gens": lambda n: sweep_generators(n),
    "covers": lambda n: sweep_order_dims(n),
    "oracle": lambda n: sweep_oracle(n),
}
