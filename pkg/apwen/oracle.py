"""
Independent ground truth for the prover.

Hankel determinants (exact and modular), the δ-matrix Apwenian bit, parities
and exact counts of constrained permutations, and brute-force counts per
permutation type. Everything here works directly from the definitions and
never looks at generated recurrences.

Counting parities use the fact that a permanent and a determinant agree
modulo 2, so the sign of each permutation never has to be tracked.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass

from .conf import apwen_setting
from .exceptions import BruteForceBoundError, OracleConsistencyError
from .linalg import (
    bareiss_det,
    bareiss_leading_minors,
    det_mod,
    gf2_det,
    leading_minors_mod,
)
from .patterns import in_J, sign_at

logger = logging.getLogger(__name__)

FAMILY_J = 'J'
FAMILY_K = 'K'


# ============================================================================
# STATE VECTORS
# ============================================================================

@dataclass(frozen=True)
class StateVec:
    """Parities X, Y, Z (and U, V, W when the pattern ends with -1) at index n."""
    n: int
    x: int
    y: int
    z: int
    u: int = None
    v: int = None
    w: int = None

    @property
    def has_uvw(self):
        return self.u is not None

    @property
    def t(self):
        return self.x ^ (self.x & self.y) ^ self.y

    @property
    def r(self):
        if not self.has_uvw:
            return None
        return self.u ^ (self.u & self.v) ^ self.v

    @property
    def bits(self):
        """Family bits packed in X, Y, Z, U, V, W order."""
        value = self.x | self.y << 1 | self.z << 2
        if self.has_uvw:
            value |= self.u << 3 | self.v << 4 | self.w << 5
        return value

    @classmethod
    def from_bits(cls, n, bits, has_uvw):
        if has_uvw:
            return cls(n, bits & 1, bits >> 1 & 1, bits >> 2 & 1,
                       bits >> 3 & 1, bits >> 4 & 1, bits >> 5 & 1)
        return cls(n, bits & 1, bits >> 1 & 1, bits >> 2 & 1)

    def as_dict(self):
        data = {'n': self.n, 'X': self.x, 'Y': self.y, 'Z': self.z}
        if self.has_uvw:
            data.update({'U': self.u, 'V': self.v, 'W': self.w})
        return data


def assignment_of(bits, shift):
    """Spread packed family bits onto the 12-bit symbol mask at the given shift."""
    mask = 0
    family = 0
    while bits:
        if bits & 1:
            mask |= 1 << (2 * family + shift)
        bits >>= 1
        family += 1
    return mask


# ============================================================================
# HANKEL DETERMINANTS
# ============================================================================

def hankel_matrix(p, n):
    coeffs = [sign_at(p, k) for k in range(2 * n - 1)]
    return [coeffs[i:i + n] for i in range(n)]


def hankel_exact(p, n):
    return bareiss_det(hankel_matrix(p, n))


def hankel_mod(p, n, q):
    return det_mod(hankel_matrix(p, n), q)


def hankel_exact_sequence(p, n_max):
    """H_1 .. H_{n_max} from one elimination, pivoting per order only after a zero minor."""
    values = bareiss_leading_minors(hankel_matrix(p, n_max))
    for n in range(len(values) + 1, n_max + 1):
        values.append(hankel_exact(p, n))
    return values


def hankel_mod_sequence(p, n_max, q):
    values = leading_minors_mod(hankel_matrix(p, n_max), q)
    for n in range(len(values) + 1, n_max + 1):
        values.append(hankel_mod(p, n, q))
    return values


def normalized_hankel(value, n):
    """H_n / 2^(n-1), which must be an integer."""
    divisor = 1 << (n - 1)
    if value % divisor:
        raise OracleConsistencyError(f"2^{n - 1} does not divide H_{n} = {value}")
    return value // divisor


def mod_three_law(n):
    """Expected H_n(F3) mod 3."""
    return 1 if n % 4 in (1, 2) else 2


def mod_six_law(n):
    """Expected (H_n(F3) / 2^(n-1)) mod 6."""
    return 1 if n % 4 in (0, 1) else 5


# ============================================================================
# PARITY ORACLES
# ============================================================================

def membership_mask(p, family, limit):
    """Bit t set iff t < limit lies in the family."""
    want = family == FAMILY_J
    mask = 0
    for t in range(limit):
        if in_J(p, t) == want:
            mask |= 1 << t
    return mask


def _constraint_rows(p, family, m, ell, members=None):
    if members is None:
        members = membership_mask(p, family, 2 * m)
    full = (1 << m) - 1
    return [full if i == ell else (members >> i) & full for i in range(m)]


def apwenian_bit(p, m):
    """(H_m / 2^(m-1)) mod 2 through the δ-matrix with an all-ones last column."""
    members = membership_mask(p, FAMILY_J, 2 * m)
    low = (1 << (m - 1)) - 1
    last = 1 << (m - 1)
    rows = [((members >> i) & low) | last for i in range(m)]
    return gf2_det(rows, m)


def count_parity(p, family, m, ell):
    """Parity of #{σ in S_m : i + σ_i in family for every i != ell}."""
    return gf2_det(_constraint_rows(p, family, m, ell), m)


def _family_parities(p, family, m):
    """(X, Y, Z)-style parities of one family at size m."""
    members = membership_mask(p, family, 2 * m)
    full = (1 << m) - 1
    rows = [(members >> i) & full for i in range(m)]
    y = gf2_det(rows, m)
    z = gf2_det(rows[:m - 1] + [full], m)
    # Summing the all-ones row over every position equals det(A + ones) - det(A)
    x = gf2_det([row ^ full for row in rows], m) ^ y
    return x, y, z


def state_parity(p, n):
    x, y, z = _family_parities(p, FAMILY_J, n)
    if p.last_sign > 0:
        return StateVec(n, x, y, z)
    u, v, w = _family_parities(p, FAMILY_K, n)
    return StateVec(n, x, y, z, u, v, w)


def state_parity_by_definition(p, n):
    """Same as state_parity, summing count_parity over every relaxed position."""
    def family_bits(family):
        x = 0
        for ell in range(n):
            x ^= count_parity(p, family, n, ell)
        return x, count_parity(p, family, n, n), count_parity(p, family, n, n - 1)

    x, y, z = family_bits(FAMILY_J)
    if p.last_sign > 0:
        return StateVec(n, x, y, z)
    return StateVec(n, x, y, z, *family_bits(FAMILY_K))


# ============================================================================
# EXACT COUNTS
# ============================================================================

def _check_bound(m, bound):
    if bound is None:
        bound = apwen_setting('MAX_BRUTE')
    if m > bound:
        raise BruteForceBoundError(m, bound)


def _count_matchings(rows, m):
    """Number of permutations picking one allowed column per row."""
    layer = {0: 1}
    for row in rows:
        nxt = defaultdict(int)
        for used, ways in layer.items():
            free = row & ~used
            while free:
                bit = free & -free
                free ^= bit
                nxt[used | bit] += ways
        layer = nxt
    return layer.get((1 << m) - 1, 0)


def count_exact(p, family, m, ell, bound=None):
    """Exact #{σ in S_m : i + σ_i in family for every i != ell}."""
    _check_bound(m, bound)
    return _count_matchings(_constraint_rows(p, family, m, ell), m)


@dataclass(frozen=True)
class ExactState:
    m: int
    x: int
    y: int
    z: int
    u: int = None
    v: int = None
    w: int = None

    @property
    def t(self):
        return self.x + self.x * self.y + self.y

    @property
    def r(self):
        if self.u is None:
            return None
        return self.u + self.u * self.v + self.v


def exact_state(p, m, bound=None):
    """Exact X..W counts at size m, plus the derived T and R."""
    _check_bound(m, bound)

    def family_counts(family):
        members = membership_mask(p, family, 2 * m)
        x = sum(
            _count_matchings(_constraint_rows(p, family, m, ell, members), m)
            for ell in range(m)
        )
        y = _count_matchings(_constraint_rows(p, family, m, m, members), m)
        z = _count_matchings(_constraint_rows(p, family, m, m - 1, members), m)
        return x, y, z

    x, y, z = family_counts(FAMILY_J)
    if p.last_sign > 0:
        return ExactState(m, x, y, z)
    return ExactState(m, x, y, z, *family_counts(FAMILY_K))


# ============================================================================
# PER-TYPE BRUTE FORCE
# ============================================================================

def relaxed_positions(kind, m, d, k):
    """Positions ell whose constraint is lifted for a kind at size m."""
    if kind == 'PY':
        return [m]
    if kind == 'PZ':
        return [m - 1]
    return [ell for ell in range(m) if ell % d == k]


def count_type_exact(p, kind, h, k, word, n, swapped=False, bound=None):
    """
    Parity of the permutations whose shape is the given type word.

    Each top position in residue class c either takes a friendly bottom letter
    (class d-1-c) or, when the word's letter s_c is not friendly, exactly one
    top position of the class takes a bottom letter of class s_c. The relaxed
    position takes a bottom letter of class s_d. Permutations with two
    unsociable biletters in one class are excluded; they cancel in pairs.
    """
    d = p.d
    m = d * n + h
    _check_bound(m, bound)
    family = FAMILY_K if swapped else FAMILY_J
    members = membership_mask(p, family, 2 * m)
    full = (1 << m) - 1
    by_class = [sum(1 << y for y in range(c, m, d)) for c in range(d)]
    letters = word.letters
    required = sum(1 << c for c in range(d) if letters[c] != d - 1 - c)

    total = 0
    for ell in relaxed_positions(kind, m, d, k):
        friendly_rows = []
        unsociable_rows = []
        for i in range(m):
            c = i % d
            if i == ell:
                friendly_rows.append(by_class[word.tail])
                unsociable_rows.append(0)
                continue
            allowed = (members >> i) & full
            friendly_rows.append(allowed & by_class[d - 1 - c])
            unsociable_rows.append(allowed & by_class[letters[c]] if required >> c & 1 else 0)

        layer = {(0, 0): 1}
        for i in range(m):
            c = i % d
            nxt = defaultdict(int)
            for (used, unsoc), ways in layer.items():
                free = friendly_rows[i] & ~used
                while free:
                    bit = free & -free
                    free ^= bit
                    nxt[(used | bit, unsoc)] += ways
                if unsoc >> c & 1:
                    continue
                free = unsociable_rows[i] & ~used
                while free:
                    bit = free & -free
                    free ^= bit
                    nxt[(used | bit, unsoc | 1 << c)] += ways
            layer = nxt
        total += layer.get((full, required), 0)
    return total & 1
