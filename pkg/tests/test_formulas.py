"""Closed-form resource formulas and the measurement harness."""

import pytest

from qcla import CircuitError, formula_eval, popcount_identity_check, verify_family
from qcla.formulas import FORMULAS, _POWER_OF_TWO_FORMS, popcount


def test_popcount_identity_examples():
    assert 10 - popcount(10) == 5 + 2 + 1
    assert 1 - popcount(1) == 0
    assert popcount_identity_check(10_000)


def test_formula_spot_values():
    e = formula_eval("add-oop", 10)
    assert e["toffoli"] == 34 and e["ancilla"] == 5 and e["exact"]
    e = formula_eval("add-ip-ic", 8)
    assert e["toffoli"] == 54 and e["depth"] == 16  # 4k + 4 with k = 3
    assert formula_eval("compare", 16)["toffoli"] == 79


def test_formulas_not_guaranteed_below_validity():
    assert formula_eval("add-oop", 6)["exact"] is False


def test_unknown_variant_rejected():
    with pytest.raises(CircuitError):
        formula_eval("no-such-variant", 8)


@pytest.mark.parametrize("vid", sorted(_POWER_OF_TWO_FORMS))
def test_power_of_two_forms_consistent(vid):
    # formula_eval raises if the general and specialized forms disagree
    for k in range(3, 11):
        formula_eval(vid, 1 << k)


def test_verify_family_matches_measurements():
    results = verify_family("add-oop", range(7, 17))
    assert results and all(r.ok for r in results)


def test_verify_family_skips_below_validity():
    assert verify_family("add-oop", [4, 5]) == []


def test_every_variant_has_formulas():
    from qcla.adders import VARIANTS

    assert set(FORMULAS) == set(VARIANTS)
