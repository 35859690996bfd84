"""Standalone carry-computation network: counts, depth, semantics."""

import pytest

from conftest import gc_boundary_ok
from qcla import CircuitError, build_variant, resource_report
from qcla.carry import CarryNetworkSpec, ceil_log2, floor_log2, interval_slot_count
from qcla.formulas import log_third, popcount
from qcla.sim import exhaustive_check


def test_width_must_be_positive():
    with pytest.raises(CircuitError):
        CarryNetworkSpec(0)


def test_inverse_direction_is_gate_reversal():
    from qcla import invert
    from qcla.carry import build_carry_network

    fwd = build_carry_network(CarryNetworkSpec(10))
    inv = build_carry_network(CarryNetworkSpec(10, "inverse"))
    assert list(inv.gates) == list(invert(fwd).gates)
    with pytest.raises(CircuitError):
        CarryNetworkSpec(5, "sideways")


def test_log_helpers():
    assert [floor_log2(n) for n in (1, 2, 3, 4, 7, 8)] == [0, 1, 1, 2, 2, 3]
    assert [ceil_log2(n) for n in (1, 2, 3, 4, 7, 8)] == [0, 1, 2, 2, 3, 3]
    assert log_third(10) == 1  # floor(log2(10/3))


def test_reference_width_ten():
    r = resource_report(build_variant("carry-network", 10))
    assert r.toffoli == 24
    assert r.cnot == 0 and r.nots == 0
    assert r.total_slices == 7 and r.toffoli_slices == 7
    assert r.ancilla_count == 5


@pytest.mark.parametrize("n", range(1, 40))
def test_counts_and_depth_bound(n):
    k, w = floor_log2(n), popcount(n)
    r = resource_report(build_variant("carry-network", n))
    assert r.toffoli == max(4 * n - 3 * w - 3 * k - 1, 0)
    assert r.ancilla_count == n - w - k == interval_slot_count(n)
    if n >= 3:
        assert r.toffoli_slices <= k + log_third(n) + 3


def test_depth_equality_widths():
    # the bound is met with equality at these widths (recorded, not assumed)
    for n, depth in [(8, 7), (10, 7), (16, 9), (32, 11), (64, 13)]:
        assert resource_report(build_variant("carry-network", n)).toffoli_slices == depth


def test_barriers_mark_every_round_family_once():
    c = build_variant("carry-network", 10)
    labels = [b.label for b in c.barriers]
    assert labels == ["P", "G", "C", "Pinv"]
    # each barrier sits at the first gate of its family
    for b in c.barriers:
        assert c.gates[b.position].phase == b.label
        assert all(g.phase != b.label for g in c.gates[: b.position])


@pytest.mark.parametrize("n", range(1, 9))
def test_exhaustive_carries(n):
    assert exhaustive_check("carry-network", n) is None


@pytest.mark.parametrize("n", range(1, 9))
def test_gc_boundary_small(n):
    assert gc_boundary_ok(n)
