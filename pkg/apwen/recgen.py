"""
Recurrence generation by type enumeration.

For every kind (PX, PY, PZ), residue h and, for PX, residue k, the
permutations counted by X, Y, Z at index dn+h are grouped by their type
s_0 ... s_{d-1} [s_d]. Each type contributes a product of one barred symbol
per position, read from the Ψ tables, and the recurrence for the target
family is the GF(2) sum of those products.

When the pattern ends with -1 a second run swaps the roles of P/Q and J/K and
produces the U, V, W recurrences.
"""
import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache

from .polynomials import FAMILIES, Gf2Poly
from .patterns import parse_pattern

logger = logging.getLogger(__name__)

KINDS = ('PX', 'PY', 'PZ')
KIND_FAMILY = {'PX': 0, 'PY': 1, 'PZ': 2}
BAR_FAMILIES = ('X', 'Y', 'Z')


def letter(value):
    return chr(ord('a') + value)


# ============================================================================
# GENERATION RUNS
# ============================================================================

@dataclass(frozen=True)
class GenerationRun:
    """
    One direction of generation. The direct run uses P and J and targets
    X, Y, Z; the swapped run uses Q and K and targets U, V, W.
    """
    pattern: object
    swapped: bool = False

    @property
    def name(self):
        return 'UVW' if self.swapped else 'XYZ'

    @property
    def p_set(self):
        return self.pattern.Q if self.swapped else self.pattern.P

    @property
    def target_offset(self):
        return 3 if self.swapped else 0

    @property
    def bar_offset(self):
        """Family offset that barred symbols resolve to."""
        if self.pattern.last_sign > 0:
            return self.target_offset
        return 0 if self.swapped else 3

    def target_family(self, kind):
        return self.target_offset + KIND_FAMILY[kind]

    def target_name(self, kind):
        return FAMILIES[self.target_family(kind)]

    @property
    def bar_label(self):
        return ''.join(FAMILIES[self.bar_offset:self.bar_offset + 3])


def generation_runs(p):
    runs = [GenerationRun(p)]
    if p.last_sign < 0:
        runs.append(GenerationRun(p, swapped=True))
    return runs


# ============================================================================
# TYPE WORDS
# ============================================================================

@dataclass(frozen=True)
class TypeWord:
    kind: str
    h: int
    k: int
    letters: tuple
    tail: int = None

    @property
    def text(self):
        word = ''.join(letter(s) for s in self.letters)
        if self.tail is not None:
            word += letter(self.tail)
        return word

    def __str__(self):
        return self.text


def type_word(kind, h, k, text):
    """Build a TypeWord from its letter form ('adbca', or with tail for PZ/PX)."""
    values = tuple(ord(ch) - ord('a') for ch in text)
    if kind == 'PY':
        return TypeWord(kind, h, k, values)
    return TypeWord(kind, h, k, values[:-1], values[-1])


def balance_targets(d, kind, h, k):
    """
    Required (added - removed) occurrences per letter.

    A letter j is added by every non-friendly occurrence of j (the tail
    included) and removed when the position d-1-j, whose friendly letter it
    is, is non-friendly.
    """
    if kind == 'PZ':
        relaxed = (h - 1) % d
    elif kind == 'PX':
        relaxed = k
    else:
        relaxed = None
    return tuple(
        int(j < h) - int(d - 1 - j < h) + int(d - 1 - j == relaxed)
        for j in range(d)
    )


# ============================================================================
# Ψ TABLES
# ============================================================================

@dataclass(frozen=True)
class BarSymbol:
    family: str
    shift: int

    @property
    def local_index(self):
        return 2 * BAR_FAMILIES.index(self.family) + self.shift


def _bar(token):
    return BarSymbol(token[0], 1 if token[1] == 'm' else 0)


DEFAULT_PSI = {
    'G': {
        (0, 0, 0): _bar('Xn'), (0, 0, 1): _bar('Yn'), (0, 1, 0): None, (0, 1, 1): _bar('Zm'),
        (1, 0, 0): _bar('Zm'), (1, 0, 1): None, (1, 1, 0): _bar('Xm'), (1, 1, 1): _bar('Ym'),
    },
    'Z': {
        (0, 0, 1, 0): _bar('Zn'), (1, 0, 0, 0): _bar('Xn'),
        (1, 0, 1, 0): _bar('Yn'), (1, 1, 1, 0): _bar('Zm'),
        (0, 0, 1, 1): _bar('Zn'), (1, 0, 0, 1): _bar('Xn'), (1, 1, 1, 1): _bar('Zm'),
    },
    'X': {
        (0, 0, 1, 0): _bar('Xn'), (1, 0, 1, 0): _bar('Zm'), (1, 1, 1, 0): _bar('Xm'),
        (0, 0, 1, 1): _bar('Xn'), (1, 1, 1, 1): _bar('Xm'),
    },
}

_psi_tables = DEFAULT_PSI


@contextmanager
def override_psi(nu, eta, value):
    """Temporarily replace one Ψ entry. Used for fault injection only."""
    global _psi_tables
    saved = _psi_tables
    patched = {name: dict(table) for name, table in saved.items()}
    patched[nu][tuple(eta)] = _bar(value) if value else None
    _psi_tables = patched
    _context.cache_clear()
    try:
        yield
    finally:
        _psi_tables = saved
        _context.cache_clear()


@dataclass(frozen=True)
class EtaCase:
    nu: str
    eta: tuple

    @property
    def code(self):
        return self.nu + ''.join(str(b) for b in self.eta)


def psi(nu, eta):
    """Barred symbol of one position, or None for a vanishing atom."""
    return _psi_tables[nu].get(tuple(eta))


def trigger_position(d, kind, h, k):
    """Position whose atom uses Ψ_Z (PZ) or Ψ_X (PX)."""
    if kind == 'PZ':
        return (h + d - 1) % d
    if kind == 'PX':
        return k
    return None


def _eta_bits(d, kind, h, k, i, friendly, tail_is_mirror):
    nu = 'G'
    trigger = trigger_position(d, kind, h, k)
    if i == trigger:
        nu = 'Z' if kind == 'PZ' else 'X'
    eta = (int(i + 1 <= h), int(d - i <= h), int(friendly))
    if nu != 'G':
        eta += (int(kind != 'PY' and tail_is_mirror),)
    return EtaCase(nu, eta)


def eta_case(p, kind, h, k, word, i):
    d = p.d
    mirror = d - 1 - i
    return _eta_bits(d, kind, h, k, i, word.letters[i] == mirror, word.tail == mirror)


# ============================================================================
# TYPE CONTEXT
# ============================================================================

class TypeContext:
    """
    Everything about one (run, kind, h, k) that does not depend on the type:
    allowed letters per position, balance targets, and the atom of each
    position for every (friendly, tail-is-mirror) combination.
    """

    def __init__(self, run, kind, h, k):
        p = run.pattern
        d = p.d
        self.run = run
        self.kind = kind
        self.h = h
        self.k = k if kind == 'PX' else 0
        self.d = d
        self.has_tail = kind != 'PY'
        allowed_sums = set(run.p_set) | {0}
        self.allowed = tuple(
            tuple(s for s in range(d) if (i + s + 1) % d in allowed_sums)
            for i in range(d)
        )
        self.balance = balance_targets(d, kind, h, self.k)
        self.feasible = all(-1 <= b <= 1 for b in self.balance)
        self.trigger = trigger_position(d, kind, h, self.k)
        # atoms[i][friendly][tail_is_mirror] -> (EtaCase, BarSymbol or None)
        self.atoms = tuple(
            tuple(
                tuple(
                    self._atom(i, friendly, tail_is_mirror)
                    for tail_is_mirror in (False, True)
                )
                for friendly in (False, True)
            )
            for i in range(d)
        )
        self.bar_shift = 2 * run.bar_offset

    def _atom(self, i, friendly, tail_is_mirror):
        case = _eta_bits(self.d, self.kind, self.h, self.k, i, friendly, tail_is_mirror)
        return case, psi(case.nu, case.eta)

    @property
    def target_family(self):
        return self.run.target_family(self.kind)

    def types(self, tail=None, first=None):
        """
        Type words in lexicographic order, optionally restricted to a tail
        letter and a first letter. Yields (letters, tail) tuples.
        """
        if not self.feasible:
            return
        d = self.d
        balance = self.balance
        letters = [0] * d
        added = [0] * d

        def place(i):
            if i == d:
                if not self.has_tail:
                    if self._balanced(letters, added):
                        yield tuple(letters), None
                    return
                tails = range(d) if tail is None else (tail,)
                for s in tails:
                    if added[s] or balance[s] < 0:
                        continue
                    added[s] = 1
                    if self._balanced(letters, added):
                        yield tuple(letters), s
                    added[s] = 0
                return
            mirror = d - 1 - i
            choices = self.allowed[i] if i or first is None else (first,)
            for s in choices:
                if s not in self.allowed[i]:
                    continue
                if s == mirror:
                    if balance[mirror] < 0:
                        continue
                    letters[i] = s
                    yield from place(i + 1)
                    continue
                if balance[mirror] > 0 or added[s] or balance[s] < 0:
                    continue
                letters[i] = s
                added[s] = 1
                yield from place(i + 1)
                added[s] = 0

        yield from place(0)

    def _balanced(self, letters, added):
        d = self.d
        for j in range(d):
            removed = int(letters[d - 1 - j] != j)
            if added[j] - removed != self.balance[j]:
                return False
        return True

    def atoms_of(self, letters, tail):
        d = self.d
        return [
            self.atoms[i][letters[i] == d - 1 - i][tail == d - 1 - i]
            for i in range(d)
        ]

    def local_monomial(self, letters, tail):
        """Local 6-bit monomial of the Ψ product, or None when it vanishes."""
        mask = 0
        d = self.d
        atoms = self.atoms
        for i in range(d):
            mirror = d - 1 - i
            symbol = atoms[i][letters[i] == mirror][tail == mirror][1]
            if symbol is None:
                return None
            mask |= 1 << symbol.local_index
        return mask

    def monomial(self, letters, tail):
        """Global 12-bit monomial, or None."""
        local = self.local_monomial(letters, tail)
        if local is None:
            return None
        return local << self.bar_shift


@lru_cache(maxsize=4096)
def _context(pattern, swapped, kind, h, k):
    return TypeContext(GenerationRun(pattern, swapped), kind, h, k)


def type_context(p, kind, h, k=0, swapped=False):
    return _context(p, swapped, kind, h, k if kind == 'PX' else 0)


# ============================================================================
# PUBLIC OPERATIONS
# ============================================================================

def enumerate_types(p, kind, h, k=0, swapped=False, tail=None, first=None):
    ctx = type_context(p, kind, h, k, swapped)
    for letters, t in ctx.types(tail=tail, first=first):
        yield TypeWord(kind, h, ctx.k, letters, t)


def eval_type(p, kind, h, k, word, swapped=False):
    """The Ψ product of a type as a Gf2Poly (a single monomial or zero)."""
    ctx = type_context(p, kind, h, k, swapped)
    mono = ctx.monomial(word.letters, word.tail)
    if mono is None:
        return Gf2Poly.zero()
    return Gf2Poly((mono,))


def atom_labels(p, kind, h, k, word, swapped=False):
    """Labels such as '[Zm:G100]' for every position of a type."""
    ctx = type_context(p, kind, h, k, swapped)
    labels = []
    for case, symbol in ctx.atoms_of(word.letters, word.tail):
        if symbol is None:
            labels.append(f"[0:{case.code}]")
            continue
        family = FAMILIES[ctx.run.bar_offset + BAR_FAMILIES.index(symbol.family)]
        labels.append(f"[{family}{'m' if symbol.shift else 'n'}:{case.code}]")
    return labels


# ============================================================================
# RECURRENCE SYSTEM
# ============================================================================

@dataclass
class RecurrenceSystem:
    """Recurrences family_{dn+h} = entries[(family, h)](state(n), state(n+1))."""
    pattern: object
    entries: dict
    n_valid: int = None
    stats: dict = field(default_factory=dict)

    @property
    def d(self):
        return self.pattern.d

    @property
    def families(self):
        count = 6 if self.pattern.last_sign < 0 else 3
        return FAMILIES[:count]

    def entry(self, family, h):
        return self.entries[(family, h)]

    def line(self, family, h):
        return f"{family}({self.d}n+{h}) = {self.entries[(family, h)]}"

    def lines(self, run_name=None):
        families = self.families
        if run_name == 'XYZ':
            families = families[:3]
        elif run_name == 'UVW':
            families = families[3:]
        return [self.line(f, h) for f in families for h in range(self.d)]

    def same_recurrences(self, other):
        return self.pattern == other.pattern and self.entries == other.entries


def empty_entries(p):
    families = FAMILIES[:6] if p.last_sign < 0 else FAMILIES[:3]
    return {(f, h): set() for f in families for h in range(p.d)}


def finish_system(p, accumulators, listed, entry_counts):
    """Freeze XOR accumulators into a RecurrenceSystem with its stats."""
    entries = {key: Gf2Poly(masks) for key, masks in accumulators.items()}
    stats = {
        'listed_types': dict(listed),
        'entry_types': {
            f"{family}({p.d}n+{h})": entry_counts.get((family, h), 0)
            for family, h in accumulators
        },
    }
    return RecurrenceSystem(p, entries, stats=stats)


# ============================================================================
# NAIVE PATH WORK UNITS
# ============================================================================

def unit_id(payload):
    def show(value):
        return '-' if value is None else str(value)
    run = 'UVW' if payload['swapped'] else 'XYZ'
    partition = f"{show(payload['tail'])}:{show(payload['first'])}"
    return f"{run} {payload['kind']} {payload['h']} {payload['k']} {partition}"


def work_unit_payloads(p):
    """Independent units split by (run, kind, h, k, tail, first letter)."""
    payloads = []
    d = p.d
    for run in generation_runs(p):
        for kind in KINDS:
            for h in range(d):
                ks = range(d) if kind == 'PX' else (0,)
                for k in ks:
                    ctx = type_context(p, kind, h, k, run.swapped)
                    if not ctx.feasible:
                        continue
                    tails = range(d) if ctx.has_tail else (None,)
                    for tail in tails:
                        for first in ctx.allowed[0]:
                            payloads.append({
                                'pattern': p.word,
                                'swapped': run.swapped,
                                'kind': kind,
                                'h': h,
                                'k': k,
                                'tail': tail,
                                'first': first,
                            })
    return payloads


def evaluate_work_unit(payload):
    """XOR of the Ψ products of every type in one unit."""
    p = parse_pattern(payload['pattern'])
    ctx = type_context(p, payload['kind'], payload['h'], payload['k'], payload['swapped'])
    acc = set()
    listed = 0
    for letters, tail in ctx.types(tail=payload['tail'], first=payload['first']):
        mono = ctx.monomial(letters, tail)
        if mono is None:
            continue
        listed += 1
        acc ^= {mono}
    return {'monomials': sorted(acc), 'listed': listed}


def unit_entry_key(payload):
    run = GenerationRun(None, payload['swapped'])
    family = FAMILIES[run.target_offset + KIND_FAMILY[payload['kind']]]
    return family, payload['h']


def merge_unit_results(p, payloads, results):
    accumulators = empty_entries(p)
    listed = {run.name: 0 for run in generation_runs(p)}
    entry_counts = {}
    for payload, result in zip(payloads, results):
        key = unit_entry_key(payload)
        accumulators[key] ^= set(result['monomials'])
        listed['UVW' if payload['swapped'] else 'XYZ'] += result['listed']
        entry_counts[key] = entry_counts.get(key, 0) + result['listed']
    return finish_system(p, accumulators, listed, entry_counts)


def generate_system(p, jobs=1, checkpoint=None):
    """Naive path: enumerate every type and XOR its Ψ product into its entry."""
    from .dispatch import run_work_units

    payloads = work_unit_payloads(p)
    logger.info(f"Generating recurrences for {p.word}: {len(payloads)} work units, jobs={jobs}")
    results = run_work_units(payloads, jobs=jobs, checkpoint=checkpoint)
    system = merge_unit_results(p, payloads, results)
    logger.info(f"Listed types for {p.word}: {system.stats['listed_types']}")
    return system


# ============================================================================
# VERBOSE LISTING
# ============================================================================

@dataclass(frozen=True)
class Contribution:
    index: int
    word: TypeWord
    labels: tuple


def list_contributions(p, run):
    """
    Every type with a nonzero Ψ product, numbered in generation order, grouped
    as (kind, h, k, contributions).
    """
    groups = []
    index = 0
    for kind in KINDS:
        for h in range(p.d):
            ks = range(p.d) if kind == 'PX' else (0,)
            for k in ks:
                items = []
                for word in enumerate_types(p, kind, h, k, run.swapped):
                    if not eval_type(p, kind, h, k, word, run.swapped):
                        continue
                    index += 1
                    labels = tuple(atom_labels(p, kind, h, k, word, run.swapped))
                    items.append(Contribution(index, word, labels))
                groups.append((kind, h, k, items))
    return groups
