import pytest

from apwen.recgen import override_psi
from apwen.selftest import (
    PROPERTIES,
    check_product_formula,
    check_recurrence_fixtures,
    check_type_decomposition,
    run_selftest,
)


# ============================================================================
# PER-TYPE BRUTE FORCE
# ============================================================================

def test_product_formula_for_f3_and_f5():
    check_product_formula(quick=False)


def test_type_counts_sum_to_aggregate_parity():
    check_type_decomposition(quick=False)


# ============================================================================
# RUNNER
# ============================================================================

def test_runner_records_failures():
    with override_psi('G', (0, 0, 1), 'Ym'):
        results = run_selftest(quick=True, properties=[('recurrence-fixtures', check_recurrence_fixtures)])
    assert [r.passed for r in results] == [False]
    assert 'missing' in results[0].detail


def test_property_names_are_unique():
    names = [name for name, _ in PROPERTIES]
    assert len(names) == len(set(names)) == 10
    assert 'type-decomposition' in names


@pytest.mark.slow
def test_full_selftest():
    assert all(r.passed for r in run_selftest(quick=False))
