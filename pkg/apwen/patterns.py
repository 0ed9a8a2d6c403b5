"""
Sign patterns, the sign sequence they generate, and the J / K index sets.

A pattern v = (v_0, ..., v_{d-1}) with v_0 = +1 defines f by f_0 = 1 and
f_{dn+i} = v_i * f_n. P collects the positions where adjacent signs differ,
Q the remaining positions of [1, d-1].
"""
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .exceptions import PatternError

# ============================================================================
# NAMED PATTERNS
# ============================================================================

KNOWN_PATTERNS = {
    'F2': '+-',
    'F3': '+--',
    'F5': '+---+',
    'F11': '+--+-++++--',
    'F13': '+--+-----+--+',
    'F17a': '+--+-+++++++-+--+',
    'F17b': '+---++-+++-++---+',
    'F19': '+---+-+--++-----+--',
}

_LIST_SEPARATOR = re.compile(r'\s*,\s*')


# ============================================================================
# PATTERN
# ============================================================================

@dataclass(frozen=True)
class Pattern:
    """A finite ±1 word with v_0 = +1 and its derived index classes."""
    coeffs: tuple

    @property
    def d(self):
        return len(self.coeffs)

    @property
    def last_sign(self):
        return self.coeffs[-1]

    @cached_property
    def P(self):
        return frozenset(i for i in range(1, self.d) if self.coeffs[i - 1] != self.coeffs[i])

    @cached_property
    def Q(self):
        return frozenset(range(1, self.d)) - self.P

    @property
    def word(self):
        """Canonical sign-word form, e.g. '+--'."""
        return ''.join('+' if c > 0 else '-' for c in self.coeffs)

    def __str__(self):
        return self.word


def parse_pattern(text):
    """
    Parse a sign word ('+--'), a list of ±1 ('1,-1,-1') or a named pattern ('F3').
    """
    if text is None:
        raise PatternError("Pattern text is required")
    raw = text.strip()
    if raw in KNOWN_PATTERNS:
        raw = KNOWN_PATTERNS[raw]

    if ',' in raw:
        coeffs = []
        for token in _LIST_SEPARATOR.split(raw):
            if token in ('1', '+1', '+'):
                coeffs.append(1)
            elif token in ('-1', '-'):
                coeffs.append(-1)
            else:
                raise PatternError(f"Invalid pattern symbol {token!r} in {text!r}")
    else:
        coeffs = []
        for symbol in raw:
            if symbol == '+':
                coeffs.append(1)
            elif symbol == '-':
                coeffs.append(-1)
            else:
                raise PatternError(f"Invalid pattern symbol {symbol!r} in {text!r}")

    if len(coeffs) < 2:
        raise PatternError(f"Pattern {text!r} must have length at least 2")
    if coeffs[0] != 1:
        raise PatternError(f"Pattern {text!r} must start with +1")
    return Pattern(tuple(coeffs))


def all_patterns(d):
    """Every pattern of length d with leading +1, in sign-word order ('+' < '-')."""
    for tail in product((1, -1), repeat=d - 1):
        yield Pattern((1,) + tail)


def negated_argument(p):
    """The pattern of F(-x): v_i -> (-1)^i v_i."""
    return Pattern(tuple(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)))


# ============================================================================
# SIGN SEQUENCE
# ============================================================================

def sign_at(p, k):
    """f_k as the product of v over the base-d digits of k."""
    d = p.d
    sign = 1
    while k:
        k, digit = divmod(k, d)
        sign *= p.coeffs[digit]
    return sign


class SignSeq:
    """Indexable view of f for one pattern."""

    def __init__(self, pattern):
        self.pattern = pattern

    def __getitem__(self, k):
        if k < 0:
            raise IndexError(k)
        return sign_at(self.pattern, k)

    def prefix(self, length):
        return [sign_at(self.pattern, k) for k in range(length)]


def delta(p, t):
    return abs(sign_at(p, t) - sign_at(p, t + 1)) // 2


# ============================================================================
# J / K MEMBERSHIP
# ============================================================================

def in_J_by_delta(p, t):
    return delta(p, t) == 1


def in_J_by_digits(p, t):
    """Membership read off t+1 = (dn+l) * d^k with l in [1, d-1]."""
    d = p.d
    u = t + 1
    k = 0
    while u % d == 0:
        u //= d
        k += 1
    lead = u % d
    if p.last_sign > 0 or k % 2 == 0:
        return lead in p.P
    return lead in p.Q


in_J = in_J_by_digits


def in_K(p, t):
    return not in_J(p, t)


def j_prefix(p, limit):
    """Members of J below limit."""
    return [t for t in range(limit) if in_J(p, t)]


def k_prefix(p, limit):
    """Members of K below limit."""
    return [t for t in range(limit) if in_K(p, t)]


@dataclass(frozen=True)
class IndexClass:
    t: int
    residue: int
    block: int


def index_class(p, t):
    block, residue = divmod(t, p.d)
    return IndexClass(t=t, residue=residue, block=block)
