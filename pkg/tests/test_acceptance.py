"""Acceptance gate: one test (one pass/fail line under ``pytest -v``) per
criterion.

1. Exhaustive functional correctness for every variant, all n <= 8.
2. Toffoli-count exactness on the width grid, with spot values.
3. CNOT/NOT-count exactness against the per-variant closed forms.
4. Depth at or below the published bound, with equality at powers of two
   for the out-of-place adder, in-place adder, and in-place mod-2^n adder.
5. Ancilla-count exactness.
6. Randomized functional checks at large widths.
7. Property suites: reversibility, comparator constant propagation,
   status-algebra associativity, the popcount identity, and the carry
   values at the G/C boundary of the carry network.
"""

import secrets
from itertools import product

import numpy as np
import pytest

from conftest import GRID, gc_boundary_ok
from qcla import (
    CircuitError,
    Wire,
    build_variant,
    constant_propagate,
    exhaustive_check,
    invert,
    popcount_identity_check,
    random_check,
    resource_report,
    verify_family,
)
from qcla.adders import VARIANTS, request_for
from qcla.carry import ceil_log2, floor_log2
from qcla.formulas import popcount
from qcla.sim import (
    STATUSES,
    compose,
    run_columns,
    stride_column,
    zero_columns,
)


def valid_small_widths(vid: str, top: int = 8) -> list[int]:
    out = []
    for n in range(1, top + 1):
        if vid == "carry-network":
            out.append(n)
            continue
        try:
            request_for(vid, n)
        except CircuitError:
            continue
        out.append(n)
    return out


@pytest.fixture(scope="module")
def measured():
    """verify_family results for every variant over the width grid,
    indexed by (variant, n, field)."""
    index = {}
    for vid in VARIANTS:
        for r in verify_family(vid, GRID):
            index[(vid, r.n, r.field)] = r
    return index


def test_criterion_1_exhaustive_functional_correctness():
    for vid in VARIANTS:
        for n in valid_small_widths(vid):
            cex = exhaustive_check(vid, n)
            assert cex is None, f"{vid} n={n}: {cex}"
    print("CRITERION 1 (exhaustive functional correctness, n <= 8): PASS")


def test_criterion_2_toffoli_count_exactness(measured):
    for vid in VARIANTS:
        for n in GRID:
            r = measured[(vid, n, "toffoli")]
            assert r.ok, str(r)
    spot = [("add-oop", 10, 34), ("add-ip", 10, 63), ("compare", 8, 34),
            ("mersenne-oop-ones", 7, 29), ("mersenne-ip-ones", 7, 59),
            ("mersenne-ip-zeros", 7, 59), ("carry-network", 10, 24)]
    for vid, n, count in spot:
        assert measured[(vid, n, "toffoli")].measured == count
    print("CRITERION 2 (Toffoli counts exact on the width grid): PASS")


def test_criterion_3_cnot_not_count_exactness(measured):
    forms = {
        "add-oop": (lambda n: 3 * n - 1, lambda n: 0),
        "add-ip": (lambda n: 4 * n - 5, lambda n: 2 * n - 2),
        "compare": (lambda n: 2 * n - 2, lambda n: 2 * n + 1),
        "mersenne-ip-ones": (lambda n: 4 * n, lambda n: 2 * n),
        "mersenne-ip-zeros": (lambda n: 4 * n, lambda n: 2 * n),
    }
    for vid, (cnot_f, not_f) in forms.items():
        for n in GRID:
            assert measured[(vid, n, "cnot")].measured == cnot_f(n)
            assert measured[(vid, n, "not")].measured == not_f(n)
    # the harness also holds every other variant to its closed forms
    for vid in VARIANTS:
        for n in GRID:
            for field in ("cnot", "not"):
                r = measured[(vid, n, field)]
                assert r.ok, str(r)
    print("CRITERION 3 (CNOT/NOT counts exact): PASS")


def test_criterion_4_depth_bounds_and_power_of_two_equality(measured):
    for vid in VARIANTS:
        for n in GRID:
            r = measured[(vid, n, "depth")]
            assert r.ok, str(r)
    equality_rows = {
        "add-oop": lambda k: 2 * k + 2,
        "add-ip": lambda k: 4 * k + 3,
        "add-mod2n-ip": lambda k: 4 * k + 2,
    }
    for vid, depth in equality_rows.items():
        for k in range(3, 11):
            r = measured[(vid, 1 << k, "depth")]
            assert r.measured == depth(k), \
                f"{vid} n=2^{k}: depth {r.measured}, expected {depth(k)}"
    # the comparator has two published depth expressions; log measurements
    # that beat the larger one without failing
    for vid in ("compare", "compare-ic"):
        m = vid == "compare"
        for n in GRID:
            r = measured[(vid, n, "depth")]
            lo = 2 * floor_log2(n - 1 if m else n) + 5
            hi = 2 * ceil_log2(n) + 5
            assert r.measured <= max(lo, hi)
            if r.measured > min(lo, hi):
                print(f"note: {vid} n={n} depth {r.measured} "
                      f"(candidates {lo}, {hi})")
    print("CRITERION 4 (depth bounds, equality at powers of two): PASS")


def test_criterion_5_ancilla_count_exactness(measured):
    forms = {
        "add-oop": lambda n: n - popcount(n) - floor_log2(n),
        "add-ip": lambda n: 2 * n - popcount(n) - floor_log2(n) - 1,
        "compare": lambda n: 2 * n - floor_log2(n - 1) - 3,
        "mersenne-oop-ones": lambda n: n - 2,
        "mersenne-oop-zeros": lambda n: n - 2,
        "mersenne-ip-ones": lambda n: 2 * n - 2,
        "mersenne-ip-zeros": lambda n: 2 * n - 2,
    }
    for vid, f in forms.items():
        for n in GRID:
            assert measured[(vid, n, "ancilla")].measured == f(n)
    for vid in VARIANTS:
        for n in GRID:
            r = measured[(vid, n, "ancilla")]
            assert r.ok, str(r)
    print("CRITERION 5 (ancilla counts exact): PASS")


def test_criterion_6_randomized_scale_check():
    for vid in VARIANTS:
        for n in (16, 64, 256, 1024):
            cex = random_check(vid, n, samples=1000)
            assert cex is None, f"{vid} n={n}: {cex}"
    print("CRITERION 6 (randomized checks at n = 16..1024): PASS")


def _reversibility_ok(vid: str, n: int, samples: int = 1000) -> bool:
    circuit = build_variant(vid, n)
    mask = (1 << samples) - 1
    cols = {w: secrets.randbits(samples) for w in circuit.layout.all_wires()}
    start = dict(cols)
    run_columns(circuit, cols, mask)
    run_columns(invert(circuit), cols, mask)
    return cols == start


def _compare_constant_propagation_ok(n: int) -> bool:
    """The width-n comparator's padded form, simplified by constant
    propagation of the zero padding bits, must agree with the unsimplified
    padded circuit on every live wire, for every operand pair."""
    m = 1 << ceil_log2(n)
    padded = build_variant("compare", m)
    constants = {}
    for i in range(n, m):
        constants[Wire("A", i)] = 0
        constants[Wire("B", i)] = 0
    simplified = constant_propagate(padded, constants)
    nsamples = 1 << (2 * n)
    mask = (1 << nsamples) - 1

    def run(circuit):
        cols = zero_columns(padded)
        for t in range(n):
            cols[Wire("A", t)] = stride_column(t, nsamples)
            cols[Wire("B", t)] = stride_column(n + t, nsamples)
        return run_columns(circuit, cols, mask)

    full, simp = run(padded), run(simplified)
    if any(full[w] != simp[w] for w in padded.layout.all_wires()
           if w not in constants):
        return False
    z_expected = 0
    for s in range(nsamples):
        a, b = s & ((1 << n) - 1), s >> n
        z_expected |= int(a >= b) << s
    return simp[Wire("Z", 0)] == z_expected


def test_criterion_7_property_suites():
    for vid in VARIANTS:
        assert _reversibility_ok(vid, 16), f"reversibility failed: {vid}"
    for n in range(2, 7):
        assert _compare_constant_propagation_ok(n), \
            f"comparator constant propagation failed at n={n}"
    for x, y, z in product(STATUSES, repeat=3):
        assert compose(compose(x, y), z) == compose(x, compose(y, z))
    assert popcount_identity_check(10**6)
    for n in range(1, 11):
        assert gc_boundary_ok(n), f"G/C boundary invariant failed at n={n}"
    print("CRITERION 7 (property suites): PASS")
