"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or as a script with
``python3 tests/test_acceptance.py``.
"""

import time
import timeit
from itertools import product

import pytest

from nilops.genext import star
from nilops.objects import enumerate_s1, make_object, parse_object, to_pickets
from nilops.oracle import canonical_rep, classify
from nilops.partitions import conjugate, nat_leq, partitions_of
from nilops.sweeps import (
    SweepResult,
    sweep_assoc,
    sweep_generators,
    sweep_mono,
    sweep_oracle,
    sweep_orders,
    sweep_partial_sums,
    sweep_strip,
    sweep_thm12,
    sweep_witness,
)

REPORT: list[str] = []


def _record(num, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {title} ({detail})"
    REPORT.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module", autouse=True)
def _summary(request):
    yield
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    if tr is not None and REPORT:
        tr.write_line("")
        for line in REPORT:
            tr.write_line(line)


def _timed(fn, *args):
    t0 = time.perf_counter()
    res = fn(*args)
    return res, time.perf_counter() - t0


def _check_sweep(num, title, res: SweepResult, seconds, limit=None):
    ok = res.ok and res.checked > 0 and (limit is None or seconds < limit)
    detail = f"{res.checked} {res.unit}, {len(res.failures)} failures, {seconds:.2f} s"
    if limit is not None:
        detail += f" < {limit} s"
    _record(num, title, ok, detail)
    assert res.ok, res.failures[:5]
    assert res.checked > 0
    if limit is not None:
        assert seconds < limit


BIG_Y = "P1^4+P0^3+P0^2+P1^2+P0^1+P0^1"
BIG_X = "P0^4+P1^4+P1^3"
SMALL = ("P1^2", "P0^1+P0^1+P1^1")
REPEATED = ("P1^2", "P1^2+P0^1+P0^1+P1^1")

# (quotient, sub, beta, gamma, picket form)
PRODUCTS = [
    (BIG_Y, BIG_X, (7, 7, 5, 2, 2, 1), (7, 6, 4, 1, 1, 1), "P0^7+P1^7+P1^5+P1^2+P1^2+P0^1"),
    (BIG_X, BIG_Y, (8, 6, 4, 2, 1, 1, 1, 1), (7, 6, 4, 1, 1, 1),
     "P1^8+P0^6+P0^4+P1^2+P0^1+P0^1+P1^1+P1^1"),
    (*SMALL, (2, 1, 1, 1), (2, 1), "P0^2+P0^1+P1^1+P1^1"),
    (*SMALL[::-1], (3, 1, 1), (2, 1), "P1^3+P0^1+P1^1"),
    (*REPEATED, (3, 1, 1, 1, 1), (2, 1, 1), "P1^3+P0^1+P0^1+P1^1+P1^1"),
    (*REPEATED[::-1], (3, 2, 1, 1), (2, 1, 1), "P1^3+P1^2+P0^1+P1^1"),
]


def test_criterion_01_worked_products():
    worst, ok = 0.0, True
    for q, s, beta, gamma, pickets in PRODUCTS:
        y, x = parse_object(q), parse_object(s)
        z = star(y, x)
        ok &= z == make_object(beta, gamma)
        ok &= to_pickets(z) == to_pickets(parse_object(pickets))
        worst = max(worst, min(timeit.repeat(lambda: star(y, x), number=20, repeat=5)) / 20)
    ok &= worst < 1e-3
    _record(1, "worked products exact", ok, f"{len(PRODUCTS)} products, slowest {worst * 1e6:.0f} us < 1 ms")
    assert ok


def test_criterion_02_orbit_dimension_identity():
    res, dt = _timed(sweep_thm12, 8, 4)
    _check_sweep(2, "orbit dimension = a^2+b^2-[X,X], a<=4, b<=8", res, dt, 5)


def test_criterion_03_order_equivalence():
    res, dt = _timed(sweep_orders, 6, 3)
    _check_sweep(3, "dom_leq == hom_leq, a<=3, b<=6", res, dt, 10)


def test_criterion_04_associativity():
    res, dt = _timed(sweep_assoc, 3)
    _check_sweep(4, "associativity, b<=3", res, dt, 10)


def test_criterion_05_monotonicity():
    res, dt = _timed(sweep_mono, 4, 2, 3)
    _check_sweep(5, "monotonicity, a<=2, b<=4, b_X<=3", res, dt)


def test_criterion_06_partial_sums():
    res, dt = _timed(sweep_partial_sums, 7)
    _check_sweep(6, "partial-sum formulas, b_X+b_Y<=7", res, dt)


def test_criterion_07_witness_consistency():
    res, dt = _timed(sweep_witness, 7)
    _check_sweep(7, "witness sums, b_X+b_Y<=7", res, dt)


def test_criterion_08_oracle():
    t0 = time.perf_counter()
    r2 = sweep_oracle(5, 2, 2)
    r3 = sweep_oracle(5, 2, 3)
    dt = time.perf_counter() - t0
    res = SweepResult("oracle", r2.checked + r3.checked, r2.failures + r3.failures, "pairs (F_2 and F_3)")
    _check_sweep(8, "oracle: member, dom-minimal, unique End minimum, filter", res, dt, 60)


def test_criterion_09_generators():
    res, dt = _timed(sweep_generators, 6)
    _check_sweep(9, "generator words fold back, b<=6", res, dt)


def test_criterion_10_structural():
    t0 = time.perf_counter()
    failures, checked = [], 0

    strip = sweep_strip(7)
    checked += strip.checked
    failures += strip.failures

    for n in range(13):
        for p in partitions_of(n):
            checked += 1
            if conjugate(conjugate(p)) != p:
                failures.append(f"conjugate not an involution at {p}")

    for n in range(9):
        ps = list(partitions_of(n))
        for p, q in product(ps, repeat=2):
            checked += 1
            if p == q and not nat_leq(p, q):
                failures.append(f"nat_leq not reflexive at {p}")
            if p != q and nat_leq(p, q) and nat_leq(q, p):
                failures.append(f"nat_leq not antisymmetric at {p}, {q}")
        for p, q, r in product(ps, repeat=3):
            if nat_leq(p, q) and nat_leq(q, r) and not nat_leq(p, r):
                failures.append(f"nat_leq not transitive at {p}, {q}, {r}")

    for prime in (2, 3):
        for b in range(6):
            for a in range(min(b, 2) + 1):
                for x in enumerate_s1(a, b):
                    checked += 1
                    if classify(canonical_rep(x, prime)) != x:
                        failures.append(f"classify(canonical_rep) moved {x} over F_{prime}")

    res = SweepResult("structural", checked, failures, "checks")
    _check_sweep(
        10, "strip closure, conjugation, nat_leq axioms, classify round trip",
        res, time.perf_counter() - t0,
    )


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
