import pytest

from apwen.exceptions import PatternError
from apwen.patterns import (
    KNOWN_PATTERNS,
    SignSeq,
    all_patterns,
    delta,
    in_J_by_delta,
    in_J_by_digits,
    in_K,
    index_class,
    j_prefix,
    k_prefix,
    negated_argument,
    parse_pattern,
    sign_at,
)


# ============================================================================
# PARSING
# ============================================================================

def test_parse_sign_word(f3):
    assert f3.coeffs == (1, -1, -1)
    assert f3.d == 3
    assert f3.last_sign == -1
    assert f3.P == {1}
    assert f3.Q == {2}


def test_parse_list_and_name_agree():
    assert parse_pattern('1,-1,-1') == parse_pattern('+--')
    assert parse_pattern('1, -1, -1, -1, 1') == parse_pattern('F5')
    assert parse_pattern('F5').word == '+---+'


def test_p_and_q_of_f5(f5):
    assert f5.P == {1, 4}
    assert f5.Q == {2, 3}


def test_every_known_pattern_parses():
    for name, word in KNOWN_PATTERNS.items():
        assert parse_pattern(name).word == word


@pytest.mark.parametrize('text', ['-+', '+', '', '+x-', '1,0,-1', '1,-1,'])
def test_parse_rejects(text):
    with pytest.raises(PatternError):
        parse_pattern(text)


def test_pattern_error_is_value_error():
    with pytest.raises(ValueError):
        parse_pattern('--')


def test_monotone_pattern_is_accepted():
    p = parse_pattern('+++')
    assert p.P == frozenset()
    assert p.Q == {1, 2}
    assert j_prefix(p, 50) == []
    assert k_prefix(p, 5) == [0, 1, 2, 3, 4]


# ============================================================================
# SIGN SEQUENCE
# ============================================================================

def test_sign_sequence_of_f3(f3):
    assert [sign_at(f3, k) for k in range(9)] == [1, -1, -1, -1, 1, 1, -1, 1, 1]
    assert SignSeq(f3).prefix(9) == [1, -1, -1, -1, 1, 1, -1, 1, 1]


def test_sign_sequence_rejects_negative_index(f3):
    with pytest.raises(IndexError):
        SignSeq(f3)[-1]


def test_self_similarity(f5):
    for n in range(40):
        for i in range(5):
            assert sign_at(f5, 5 * n + i) == f5.coeffs[i] * sign_at(f5, n)


def test_delta(f3):
    assert delta(f3, 0) == 1
    assert delta(f3, 1) == 0


# ============================================================================
# J / K
# ============================================================================

def test_j_prefix_of_f3(f3):
    assert j_prefix(f3, 19) == [0, 3, 5, 6, 8, 9, 12, 14, 15, 18]
    assert k_prefix(f3, 14) == [1, 2, 4, 7, 10, 11, 13]


def test_j_and_k_prefix_of_f5(f5):
    assert j_prefix(f5, 21) == [0, 3, 4, 5, 8, 10, 13, 15, 18, 19, 20]
    assert k_prefix(f5, 18) == [1, 2, 6, 7, 9, 11, 12, 14, 16, 17]


@pytest.mark.parametrize('name', ['F2', 'F3', 'F5', 'F11', 'F13', '++', '+-+', '++--'])
def test_membership_rules_agree(name):
    p = parse_pattern(name)
    for t in range(3000):
        assert in_J_by_delta(p, t) == in_J_by_digits(p, t), t


def test_k_is_the_complement(f3):
    for t in range(100):
        assert in_K(f3, t) != in_J_by_digits(f3, t)


# ============================================================================
# DERIVED PATTERNS
# ============================================================================

def test_all_patterns_order():
    assert [p.word for p in all_patterns(3)] == ['+++', '++-', '+-+', '+--']
    assert len(list(all_patterns(6))) == 32


def test_negated_argument(f3):
    partner = negated_argument(f3)
    assert partner.word == '++-'
    assert negated_argument(partner) == f3


def test_index_class(f5):
    cls = index_class(f5, 23)
    assert (cls.block, cls.residue) == (4, 3)
