"""Adder, subtractor, and comparator generators: contracts and structure."""

import pytest

from qcla import (
    AdderRequest,
    CircuitError,
    GateKind,
    Wire,
    build_variant,
    gen_compare,
    request_for,
    resource_report,
)
from qcla.adders import VARIANTS
from qcla.sim import run_operands


# ---------------------------------------------------------------------------
# Request validation


def test_unknown_function_rejected():
    with pytest.raises(CircuitError):
        AdderRequest(4, "multiply")


@pytest.mark.parametrize("kwargs", [
    dict(n=1, function="compare"),
    dict(n=1, function="add-mersenne", zero_rep="ones"),
    dict(n=4, function="add-mersenne"),  # missing zero_rep
    dict(n=4, function="add-mersenne", zero_rep="ones", incoming_carry=True),
    dict(n=4, function="add", zero_rep="ones"),
    dict(n=4, function="compare", in_place=True),
    dict(n=4, function="subtract", incoming_carry=True),
])
def test_invalid_requests_rejected(kwargs):
    with pytest.raises(CircuitError):
        AdderRequest(**kwargs)


def test_variant_ids_round_trip():
    for vid in VARIANTS:
        if vid == "carry-network":
            continue
        assert request_for(vid, 8).variant_id == vid
    with pytest.raises(CircuitError):
        request_for("no-such-variant", 8)


# ---------------------------------------------------------------------------
# Worked examples


def test_out_of_place_add_example():
    out = run_operands(build_variant("add-oop", 4), "add-oop", 5, 7)
    assert out["Z"] == 12 and out["A"] == 5 and out["B"] == 7 and out["X"] == 0


def test_in_place_add_example():
    out = run_operands(build_variant("add-ip", 4), "add-ip", 9, 9)
    assert out["B"] == 2 and out["Z"] == 1 and out["A"] == 9 and out["X"] == 0


def test_subtractor_sign_convention():
    # 3 - 5 encoded out-of-place: low bits 14 (= -2 mod 16), high bit 0
    out = run_operands(build_variant("sub-oop", 4), "sub-oop", 3, 5)
    assert out["Z"] == 0b01110
    out = run_operands(build_variant("sub-oop", 4), "sub-oop", 5, 5)
    assert out["Z"] == 0b10000  # a = b: low bits zero, sign bit set


def test_compare_examples():
    c = build_variant("compare", 5)
    assert run_operands(c, "compare", 3, 3)["Z"] == 1
    assert run_operands(c, "compare", 2, 5)["Z"] == 0
    assert run_operands(c, "compare", 17, 17)["Z"] == 1


def test_mersenne_examples():
    ones = build_variant("mersenne-oop-ones", 3)
    zeros = build_variant("mersenne-oop-zeros", 3)
    assert run_operands(ones, "mersenne-oop-ones", 5, 4)["Z"] == 2  # 9 - 7
    # complementary operands: one representation of zero per convention
    assert run_operands(ones, "mersenne-oop-ones", 3, 4)["Z"] == 0b111
    assert run_operands(zeros, "mersenne-oop-zeros", 3, 4)["Z"] == 0b000


# ---------------------------------------------------------------------------
# Structure


def test_incoming_carry_saves_one_toffoli():
    for n in (4, 7, 10, 16, 33):
        with_y = resource_report(build_variant("add-oop-ic", n))
        plain = resource_report(build_variant("add-oop", n + 1))
        assert with_y.toffoli == plain.toffoli - 1
        assert with_y.cnot == 3 * n + 1  # one below the (n+1)-bit adder


@pytest.mark.parametrize("n", list(range(1, 17)) + [33, 64])
def test_subtractor_toffoli_count_matches_adder(n):
    assert (resource_report(build_variant("sub-oop", n)).toffoli
            == resource_report(build_variant("add-oop", n)).toffoli)


def test_compare_g_round_structure_width_seven():
    # the kept G-round cone has n - 1 Toffolis; undoing the non-output ones
    # takes n - w(n-1) - 1 more (the rest feed the output carry chain)
    c = gen_compare(7)
    g_ccx = [g for g in c.gates
             if g.phase == "G" and g.kind is GateKind.TOFFOLI]
    assert len(g_ccx) == 6
    assert sum(g.target == Wire("Z", 0) for g in g_ccx) == 2
    undo = [g for g in c.gates
            if g.phase == "fixup" and g.kind is GateKind.TOFFOLI]
    assert len(undo) == 6 + 4  # step-6 undo plus the init-erase Toffolis


def test_compare_reference_counts():
    r = resource_report(build_variant("compare", 8))
    assert r.toffoli == 34
    assert r.cnot == 2 * 8 - 2 and r.nots == 2 * 8 + 1
    assert r.ancilla_count == 2 * 8 - 2 - 3  # 2n - floor(log(n-1)) - 3


def test_mersenne_reference_counts():
    r = resource_report(build_variant("mersenne-oop-ones", 7))
    assert (r.toffoli, r.cnot, r.ancilla_count) == (29, 21, 5)
    r = resource_report(build_variant("mersenne-ip-ones", 7))
    assert (r.toffoli, r.cnot, r.nots, r.ancilla_count) == (59, 28, 14, 12)


def test_canonical_register_order():
    c = build_variant("add-oop-ic", 6)
    assert [r.name for r in c.layout.registers] == ["A", "B", "Z", "X", "Y"]
