"""
From recurrences and oracle seeds to a verdict for every index.

The recurrences express the state at dn+h through the states at n and n+1,
so the set of consecutive state triples reachable from the seed triples is
closed under one recurrence step. That closure is the exact set of triples
that occur from index d * n_valid on, and the Z-bits of its members decide
the verdict.
"""
import logging
import time
from collections import deque
from dataclasses import dataclass, field

from .conf import apwen_setting
from .oracle import StateVec, apwenian_bit, assignment_of, state_parity

logger = logging.getLogger(__name__)

APWENIAN = 'APWENIAN'
NOT_APWENIAN = 'NOT_APWENIAN'
INCONCLUSIVE = 'INCONCLUSIVE'

EXIT_CODES = {APWENIAN: 0, NOT_APWENIAN: 1, INCONCLUSIVE: 2}

Z_BIT = 1 << 2
W_BIT = 1 << 5


# ============================================================================
# SEEDS AND VALIDATION
# ============================================================================

def seed_window(p, n_valid=1, check_depth=None):
    """Number of oracle seeds: enough for the closure start and for validation."""
    if check_depth is None:
        check_depth = apwen_setting('CHECK_DEPTH')
    d = p.d
    return max(apwen_setting('SEED_MIN'), 2 * d + 2, d * n_valid + 3, d * check_depth + d)


def seed_states(p, n0):
    """StateVec for n = 1..n0; seeds[n - 1] is the state at n."""
    return [state_parity(p, n) for n in range(1, n0 + 1)]


@dataclass
class ValidationReport:
    n_max: int
    failures: dict = field(default_factory=dict)
    n_valid: int = None

    @property
    def passed(self):
        return self.n_valid is not None

    def as_dict(self):
        return {
            'n_max': self.n_max,
            'n_valid': self.n_valid,
            'failures': {str(n): labels for n, labels in sorted(self.failures.items())},
        }


class Stepper:
    """Evaluates one recurrence step on packed state bits, with a cache."""

    def __init__(self, system):
        self.system = system
        self.d = system.d
        families = system.families
        self.has_uvw = len(families) == 6
        self.table = [
            [system.entries[(family, h)] for family in families]
            for h in range(self.d)
        ]
        self._cache = {}

    def step(self, bits_n, bits_next):
        """Packed states at dn .. dn+d-1 from the states at n and n+1."""
        key = (bits_n, bits_next)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        assignment = assignment_of(bits_n, 0) | assignment_of(bits_next, 1)
        block = []
        for polys in self.table:
            value = 0
            for index, poly in enumerate(polys):
                value |= poly.evaluate(assignment) << index
            block.append(value)
        block = tuple(block)
        self._cache[key] = block
        return block


def validate_recurrences(system, seeds, n_max):
    """Compare every entry with the oracle for n = 1..n_max."""
    d = system.d
    needed = d * n_max + d
    if len(seeds) < needed:
        raise ValueError(f"validation up to n={n_max} needs {needed} seeds, got {len(seeds)}")
    stepper = Stepper(system)
    families = system.families
    report = ValidationReport(n_max=n_max)
    for n in range(1, n_max + 1):
        block = stepper.step(seeds[n - 1].bits, seeds[n].bits)
        labels = []
        for h, predicted in enumerate(block):
            actual = seeds[d * n + h - 1].bits
            for index, family in enumerate(families):
                if (predicted ^ actual) >> index & 1:
                    labels.append(f"{family}({d}n+{h})")
        if labels:
            logger.warning(f"Recurrences of {system.pattern.word} fail at n={n}: {', '.join(labels)}")
            report.failures[n] = labels

    failing = [n for n in report.failures]
    if not failing:
        report.n_valid = 1
    elif max(failing) < n_max:
        report.n_valid = max(failing) + 1
    system.n_valid = report.n_valid
    return report


# ============================================================================
# STATE EVALUATION
# ============================================================================

class StateEvaluator:
    """Memoized top-down evaluation of the state at any index."""

    def __init__(self, system, seeds):
        self.system = system
        self.seeds = seeds
        self.stepper = Stepper(system)
        self.memo = {}

    def bits(self, m):
        if m <= len(self.seeds):
            return self.seeds[m - 1].bits
        cached = self.memo.get(m)
        if cached is not None:
            return cached
        n, h = divmod(m, self.system.d)
        value = self.stepper.step(self.bits(n), self.bits(n + 1))[h]
        self.memo[m] = value
        return value

    def state(self, m):
        return StateVec.from_bits(m, self.bits(m), self.stepper.has_uvw)


def eval_state(system, seeds, m):
    return StateEvaluator(system, seeds).state(m)


# ============================================================================
# CLOSURE
# ============================================================================

@dataclass
class Closure:
    """Reachable triples mapped to an index at which each one occurs."""
    triples: dict
    iterations: int

    def __len__(self):
        return len(self.triples)

    def offending(self, bit=Z_BIT):
        """First triple (in discovery order) with a zero bit in some component."""
        for triple, index in self.triples.items():
            if any(not component & bit for component in triple):
                return triple, index
        return None


def compute_closure(system, seeds, n_valid):
    stepper = Stepper(system)
    d = system.d
    triples = {}
    frontier = deque()
    for n in range(n_valid, len(seeds) - 1):
        triple = (seeds[n - 1].bits, seeds[n].bits, seeds[n + 1].bits)
        if triple not in triples:
            triples[triple] = n
            frontier.append(triple)

    iterations = 0
    while frontier:
        iterations += 1
        next_frontier = deque()
        for triple in frontier:
            a, b, c = triple
            values = stepper.step(a, b) + stepper.step(b, c)
            base = d * triples[triple]
            for offset in range(2 * d - 2):
                child = values[offset:offset + 3]
                if child not in triples:
                    triples[child] = base + offset
                    next_frontier.append(child)
        frontier = next_frontier
        logger.debug(f"Closure iteration {iterations}: {len(triples)} triples")
    return Closure(triples, iterations)


def find_witness(system, seeds, bound):
    """Smallest m <= bound with an even normalized Hankel determinant, or None."""
    evaluator = StateEvaluator(system, seeds)
    for m in range(1, bound + 1):
        if not evaluator.bits(m) & Z_BIT:
            return m
    return None


def confirm_witness(p, m):
    """True/False from the δ-matrix oracle, None when m is too large to check."""
    if m is None or m > apwen_setting('WITNESS_CONFIRM_BOUND'):
        return None
    return apwenian_bit(p, m) == 0


# ============================================================================
# CERTIFICATE
# ============================================================================

@dataclass
class ProofCertificate:
    pattern: object
    system: object
    seeds: list
    validation: ValidationReport
    verdict: str
    closure: Closure = None
    witness: int = None
    witness_confirmed: bool = None
    stats: dict = field(default_factory=dict)

    @property
    def n_valid(self):
        return self.validation.n_valid

    @property
    def exit_code(self):
        return EXIT_CODES[self.verdict]


def closure_prove(system, seeds, validation, witness_bound=None):
    p = system.pattern
    if witness_bound is None:
        witness_bound = apwen_setting('WITNESS_BOUND')
    stats = {
        'seed_window': len(seeds),
        'listed_types': dict(system.stats.get('listed_types', {})),
    }

    def certificate(verdict, **extra):
        return ProofCertificate(
            pattern=p, system=system, seeds=seeds, validation=validation,
            verdict=verdict, stats=stats, **extra,
        )

    bad_seed = next((s.n for s in seeds if not s.z), None)
    if bad_seed is not None:
        logger.info(f"{p.word}: seed {bad_seed} has an even normalized Hankel determinant")
        return certificate(
            NOT_APWENIAN, witness=bad_seed, witness_confirmed=confirm_witness(p, bad_seed),
        )

    if not validation.passed:
        logger.error(f"{p.word}: recurrences never validated up to n={validation.n_max}")
        return certificate(INCONCLUSIVE)

    started = time.perf_counter()
    closure = compute_closure(system, seeds, validation.n_valid)
    elapsed = time.perf_counter() - started
    stats['closure_size'] = len(closure)
    stats['closure_iterations'] = closure.iterations
    if seeds[0].has_uvw:
        stats['w_all_ones'] = closure.offending(W_BIT) is None and all(s.w for s in seeds)
    logger.info(
        f"{p.word}: closure of {len(closure)} triples after {closure.iterations} iterations in {elapsed:.2f}s"
    )

    offending = closure.offending()
    if offending is None:
        return certificate(APWENIAN, closure=closure)

    triple, index = offending
    stats['offending_triple'] = list(triple)
    stats['offending_index'] = index
    witness = find_witness(system, seeds, witness_bound)
    return certificate(
        NOT_APWENIAN, closure=closure, witness=witness,
        witness_confirmed=confirm_witness(p, witness),
    )


def prove(p, jobs=1, fast=False, check_depth=None, checkpoint=None):
    """Generate, validate and close: the whole pipeline for one pattern."""
    from .fastgen import fast_generate_system
    from .recgen import generate_system

    if check_depth is None:
        check_depth = apwen_setting('CHECK_DEPTH')
    started = time.perf_counter()
    if fast:
        system = fast_generate_system(p)
    else:
        system = generate_system(p, jobs=jobs, checkpoint=checkpoint)
    logger.info(f"{p.word}: recurrences generated in {time.perf_counter() - started:.2f}s")

    seeds = seed_states(p, seed_window(p, 1, check_depth))
    validation = validate_recurrences(system, seeds, check_depth)
    if validation.passed and validation.n_valid > 1:
        window = seed_window(p, validation.n_valid, check_depth)
        if window > len(seeds):
            logger.info(f"{p.word}: widening seed window to {window} for n_valid={validation.n_valid}")
            seeds = seed_states(p, window)
    return closure_prove(system, seeds, validation)
