"""
Invariant suite behind the selftest command.

Every property cross-checks two independent computations at desk scale. A
property fails by raising AssertionError or ApwenError; the runner records
the message and carries on with the next one.
"""
import logging
import random
from dataclasses import dataclass
from itertools import permutations

from .exceptions import ApwenError
from .fastgen import fast_generate_system
from .linalg import bit_rows, gf2_det
from .oracle import (
    FAMILY_J,
    FAMILY_K,
    apwenian_bit,
    assignment_of,
    count_exact,
    count_parity,
    count_type_exact,
    hankel_exact_sequence,
    hankel_mod,
)
from .patterns import in_J_by_delta, in_J_by_digits, parse_pattern
from .prover import APWENIAN, NOT_APWENIAN, prove, seed_states
from .recgen import KINDS, enumerate_types, eval_type, generate_system

logger = logging.getLogger(__name__)

PATTERNS = ('F2', 'F3', 'F5', 'F11', '++')

# Lines taken from published systems
FIXTURE_LINES = {
    'F3': [
        'X(3n+0) = Un',
        'X(3n+1) = Un Wm + Vn Wm',
        'Z(3n+1) = Un Vn Wm + Un Wm + Vn Wm',
        'Z(3n+2) = Wm',
        'W(3n+2) = Zm',
        'U(3n+0) = Xn',
    ],
    'F5': [
        'Z(5n+3) = Zm',
        'Y(5n+1) = Xn Zm + Yn Zm',
        'X(5n+4) = Ym Zm',
    ],
}


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: str = ''


def check_membership_rules(quick):
    limit = 500 if quick else 5000
    for name in PATTERNS:
        p = parse_pattern(name)
        for t in range(limit):
            assert in_J_by_delta(p, t) == in_J_by_digits(p, t), f"{name}: rules differ at t={t}"


def check_permanent_parity(quick):
    rng = random.Random(2024)
    for _ in range(40 if quick else 200):
        size = rng.randint(1, 6 if quick else 8)
        matrix = [[rng.randint(0, 1) for _ in range(size)] for _ in range(size)]
        permanent = sum(
            all(matrix[i][sigma[i]] for i in range(size))
            for sigma in permutations(range(size))
        )
        assert permanent % 2 == gf2_det(bit_rows(matrix), size), f"permanent parity differs for {matrix}"


def check_bridge(quick):
    limit = 40 if quick else 200
    for name in PATTERNS:
        p = parse_pattern(name)
        for m in range(1, limit + 1):
            assert apwenian_bit(p, m) == count_parity(p, FAMILY_J, m, m - 1), f"{name}: m={m}"


def check_exact_counts(quick):
    limit = 7 if quick else 10
    for name in ('F3', 'F5', 'F11'):
        p = parse_pattern(name)
        for family in (FAMILY_J, FAMILY_K):
            for m in range(1, limit + 1):
                for ell in range(m + 1):
                    exact = count_exact(p, family, m, ell, bound=limit)
                    assert exact % 2 == count_parity(p, family, m, ell), f"{name} {family} m={m} l={ell}"


def check_hankel_consistency(quick):
    limit = 24 if quick else 64
    p = parse_pattern('F3')
    exact = hankel_exact_sequence(p, limit)
    for q in (2, 3, 5):
        for n in range(1, limit + 1, 1 if not quick else 3):
            assert exact[n - 1] % q == hankel_mod(p, n, q), f"H_{n} mod {q}"


def check_product_formula(quick):
    cases = [('F3', 2)] if quick else [('F3', 2), ('F3', 3), ('F5', 2)]
    for name, n in cases:
        p = parse_pattern(name)
        d = p.d
        states = seed_states(p, n + 1)
        assignment = _assignment(states[n - 1], states[n])
        for swapped in ((False, True) if p.last_sign < 0 else (False,)):
            for kind in KINDS:
                for h in range(d):
                    if d * n + h > 12:
                        continue
                    for k in (range(d) if kind == 'PX' else (0,)):
                        for word in enumerate_types(p, kind, h, k, swapped):
                            predicted = eval_type(p, kind, h, k, word, swapped).evaluate(assignment)
                            actual = count_type_exact(p, kind, h, k, word, n, swapped, bound=12)
                            assert predicted == actual, f"{name} {kind} h={h} k={k} {word.text} n={n}"


def check_type_decomposition(quick):
    """Per-type counts summed over every listed type give the aggregate parity."""
    cases = [('F3', 2)] if quick else [('F3', 2), ('F3', 3), ('F5', 2)]
    for name, n in cases:
        p = parse_pattern(name)
        d = p.d
        for swapped in ((False, True) if p.last_sign < 0 else (False,)):
            family = FAMILY_K if swapped else FAMILY_J
            for h in range(d):
                m = d * n + h
                if m > 12:
                    continue
                expected = {
                    'PY': count_parity(p, family, m, m),
                    'PZ': count_parity(p, family, m, m - 1),
                    'PX': 0,
                }
                for ell in range(m):
                    expected['PX'] ^= count_parity(p, family, m, ell)
                for kind in KINDS:
                    total = 0
                    for k in (range(d) if kind == 'PX' else (0,)):
                        for word in enumerate_types(p, kind, h, k, swapped):
                            total += count_type_exact(p, kind, h, k, word, n, swapped, bound=12)
                    assert total % 2 == expected[kind], f"{name} {kind} h={h} n={n} swapped={swapped}"


def check_recurrence_fixtures(quick):
    for name, expected in FIXTURE_LINES.items():
        p = parse_pattern(name)
        lines = set(generate_system(p).lines())
        for line in expected:
            assert line in lines, f"{name}: missing {line!r}"


def check_fast_path(quick):
    names = ('F2', 'F3', 'F5') if quick else ('F2', 'F3', 'F5', '+-+', '++-+')
    for name in names:
        p = parse_pattern(name)
        naive = generate_system(p)
        fast = fast_generate_system(p)
        assert naive.same_recurrences(fast), f"{name}: fast path differs"
        assert naive.stats == fast.stats, f"{name}: type counts differ"


def check_verdicts(quick):
    expected = {'F2': APWENIAN, 'F3': APWENIAN, '++': NOT_APWENIAN}
    if not quick:
        expected['F5'] = APWENIAN
    for name, verdict in expected.items():
        cert = prove(parse_pattern(name))
        assert cert.verdict == verdict, f"{name}: {cert.verdict}"
        if verdict == NOT_APWENIAN:
            assert cert.witness_confirmed, f"{name}: witness {cert.witness} not confirmed"


PROPERTIES = (
    ('membership-rules', check_membership_rules),
    ('permanent-parity', check_permanent_parity),
    ('determinant-bridge', check_bridge),
    ('exact-vs-parity', check_exact_counts),
    ('hankel-consistency', check_hankel_consistency),
    ('product-formula', check_product_formula),
    ('type-decomposition', check_type_decomposition),
    ('recurrence-fixtures', check_recurrence_fixtures),
    ('fast-path', check_fast_path),
    ('verdicts', check_verdicts),
)


def _assignment(state_n, state_next):
    return assignment_of(state_n.bits, 0) | assignment_of(state_next.bits, 1)


def run_selftest(quick=False, properties=PROPERTIES):
    results = []
    for name, check in properties:
        try:
            check(quick)
        except (AssertionError, ApwenError) as exc:
            logger.error(f"Property {name} failed: {exc}")
            results.append(PropertyResult(name, False, str(exc)))
            continue
        results.append(PropertyResult(name, True))
    return results
