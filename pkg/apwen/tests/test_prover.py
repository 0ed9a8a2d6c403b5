import logging
from dataclasses import replace

import pytest

from apwen.oracle import state_parity
from apwen.patterns import parse_pattern
from apwen.polynomials import Gf2Poly
from apwen.prover import (
    APWENIAN,
    INCONCLUSIVE,
    NOT_APWENIAN,
    Stepper,
    StateEvaluator,
    closure_prove,
    compute_closure,
    confirm_witness,
    eval_state,
    prove,
    seed_states,
    seed_window,
    validate_recurrences,
)
from apwen.recgen import generate_system


@pytest.fixture(scope='module')
def f3_proof():
    system = generate_system(parse_pattern('F3'))
    seeds = seed_states(system.pattern, seed_window(system.pattern))
    return system, seeds


# ============================================================================
# SEEDS AND VALIDATION
# ============================================================================

def test_seed_window(f3, f5):
    assert seed_window(f3) == 16
    assert seed_window(f5) == 20
    assert seed_window(parse_pattern('F11')) == 44
    assert seed_window(f3, n_valid=6) == 21


def test_validation_passes_from_one(f3_proof):
    system, seeds = f3_proof
    report = validate_recurrences(system, seeds, 3)
    assert report.passed
    assert report.n_valid == 1
    assert report.failures == {}
    assert system.n_valid == 1


def test_validation_needs_enough_seeds(f3_proof):
    system, seeds = f3_proof
    with pytest.raises(ValueError):
        validate_recurrences(system, seeds[:10], 3)


def test_broken_entry_never_validates(f3_proof):
    system, seeds = f3_proof
    broken = replace(system, entries={**system.entries, ('Z', 2): Gf2Poly.zero()})
    report = validate_recurrences(broken, seeds, 3)
    assert not report.passed
    assert report.failures[1] == ['Z(3n+2)']
    cert = closure_prove(broken, seeds, report)
    assert cert.verdict == INCONCLUSIVE
    assert cert.exit_code == 2


# ============================================================================
# EVALUATION AND CLOSURE
# ============================================================================

@pytest.mark.parametrize('name', ['F3', 'F5'])
def test_eval_state_matches_oracle(name):
    p = parse_pattern(name)
    system = generate_system(p)
    seeds = seed_states(p, seed_window(p))
    validate_recurrences(system, seeds, 3)
    evaluator = StateEvaluator(system, seeds)
    for m in range(1, 250):
        assert evaluator.state(m) == state_parity(p, m), m
    assert eval_state(system, seeds, 500).z == 1


def test_stepper_block_length(f3_proof):
    system, seeds = f3_proof
    block = Stepper(system).step(seeds[0].bits, seeds[1].bits)
    assert len(block) == 3
    assert block == tuple(seeds[n - 1].bits for n in (3, 4, 5))


def test_closure_triples_are_realized(f3_proof):
    system, seeds = f3_proof
    validate_recurrences(system, seeds, 3)
    closure = compute_closure(system, seeds, 1)
    evaluator = StateEvaluator(system, seeds)
    assert len(closure) > 0
    for triple, index in closure.triples.items():
        assert triple == tuple(evaluator.bits(index + j) for j in range(3))
    assert closure.offending() is None


# ============================================================================
# VERDICTS
# ============================================================================

@pytest.mark.parametrize('name', ['F2', 'F3', 'F5'])
def test_known_patterns_are_apwenian(name):
    cert = prove(parse_pattern(name))
    assert cert.verdict == APWENIAN
    assert cert.exit_code == 0
    assert cert.n_valid >= 1
    assert cert.witness is None
    assert cert.stats['closure_size'] == len(cert.closure)


def test_f11_is_apwenian_on_the_fast_path():
    cert = prove(parse_pattern('F11'), fast=True)
    assert cert.verdict == APWENIAN
    assert cert.witness is None
    assert cert.stats['listed_types'] == {'XYZ': 2274558, 'UVW': 2350964}


def test_fast_and_naive_prove_alike(f5):
    assert prove(f5, fast=True).stats == prove(f5).stats


def test_constant_pattern_is_refuted_at_two():
    cert = prove(parse_pattern('++'))
    assert cert.verdict == NOT_APWENIAN
    assert cert.witness == 2
    assert cert.witness_confirmed is True
    assert cert.exit_code == 1


def test_w_bits_recorded_for_negative_last_sign(f3):
    cert = prove(f3)
    assert cert.stats['w_all_ones'] is True


def test_confirm_witness_bounds(f3):
    assert confirm_witness(f3, None) is None
    assert confirm_witness(f3, 5) is False
    assert confirm_witness(f3, 5000) is None


def test_timings_are_logged_not_certified(f3, caplog, monkeypatch):
    monkeypatch.setattr(logging.getLogger('apwen'), 'propagate', True)
    with caplog.at_level(logging.INFO, logger='apwen.prover'):
        cert = prove(f3)
    messages = [record.getMessage() for record in caplog.records if record.name == 'apwen.prover']
    assert any('recurrences generated in' in message for message in messages)
    assert any('iterations in' in message for message in messages)
    assert not any('time' in key or 'elapsed' in key for key in cert.stats)
