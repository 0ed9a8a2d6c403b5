"""
Multilinear polynomials over GF(2) in the twelve state symbols.

A symbol is a family X, Y, Z, U, V, W at index n (shift 0) or n+1 (shift 1).
Symbol (family f, shift s) is bit 2*f + s of a 12-bit monomial mask, so the
XYZ symbols occupy bits 0-5 and the UVW symbols bits 6-11. A polynomial is a
frozenset of monomial masks; x*x = x because every symbol is a parity bit.
"""
import re
from dataclasses import dataclass

FAMILIES = ('X', 'Y', 'Z', 'U', 'V', 'W')
SHIFT_NAMES = ('n', 'm')
SYMBOL_COUNT = 12
LOCAL_SYMBOLS = 6

_TOKEN = re.compile(r'^([XYZUVW])([nm])$')


@dataclass(frozen=True, order=True)
class SymVar:
    family: int
    shift: int

    @classmethod
    def named(cls, family, shift):
        return cls(FAMILIES.index(family), shift)

    @classmethod
    def from_index(cls, index):
        return cls(index >> 1, index & 1)

    @classmethod
    def parse(cls, token):
        match = _TOKEN.match(token)
        if not match:
            raise ValueError(f"Unknown symbol {token!r}")
        return cls.named(match.group(1), SHIFT_NAMES.index(match.group(2)))

    @property
    def index(self):
        return 2 * self.family + self.shift

    @property
    def bit(self):
        return 1 << self.index

    @property
    def name(self):
        return f"{FAMILIES[self.family]}{SHIFT_NAMES[self.shift]}"

    def __str__(self):
        return self.name


def monomial_symbols(mask):
    return [SymVar.from_index(i) for i in range(SYMBOL_COUNT) if mask >> i & 1]


def monomial_text(mask):
    if mask == 0:
        return '1'
    return ' '.join(s.name for s in monomial_symbols(mask))


def _monomial_key(mask):
    return tuple(i for i in range(SYMBOL_COUNT) if mask >> i & 1)


class Gf2Poly:
    """Immutable multilinear GF(2) polynomial; + is symmetric difference."""

    __slots__ = ('monomials',)

    def __init__(self, monomials=()):
        object.__setattr__(self, 'monomials', frozenset(monomials))

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    def __reduce__(self):
        return (Gf2Poly, (tuple(self.monomials),))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((0,))

    @classmethod
    def symbol(cls, sym):
        return cls((sym.bit,))

    @classmethod
    def from_masks(cls, masks):
        """Sum of monomials, cancelling repeated masks in pairs."""
        acc = set()
        for mask in masks:
            acc ^= {mask}
        return cls(acc)

    @classmethod
    def parse(cls, text):
        """Inverse of str(): 'Un Wm + Vn Wm', '1' or '0'."""
        text = text.strip()
        if text == '0':
            return cls.zero()
        masks = []
        for term in text.split('+'):
            term = term.strip()
            if term == '1':
                masks.append(0)
                continue
            mask = 0
            for token in term.split():
                mask |= SymVar.parse(token).bit
            masks.append(mask)
        return cls.from_masks(masks)

    def __add__(self, other):
        return Gf2Poly(self.monomials ^ other.monomials)

    __sub__ = __add__

    def __mul__(self, other):
        acc = set()
        for a in self.monomials:
            for b in other.monomials:
                acc ^= {a | b}
        return Gf2Poly(acc)

    def __eq__(self, other):
        return isinstance(other, Gf2Poly) and self.monomials == other.monomials

    def __hash__(self):
        return hash(self.monomials)

    def __bool__(self):
        return bool(self.monomials)

    def __len__(self):
        return len(self.monomials)

    def evaluate(self, assignment):
        """Value at a 12-bit assignment mask (bit set = symbol is 1)."""
        value = 0
        for mask in self.monomials:
            if mask & ~assignment == 0:
                value ^= 1
        return value

    def sorted_monomials(self):
        return sorted(self.monomials, key=_monomial_key)

    def __str__(self):
        if not self.monomials:
            return '0'
        return ' + '.join(monomial_text(m) for m in self.sorted_monomials())

    def __repr__(self):
        return f"Gf2Poly({str(self)!r})"


# ============================================================================
# TRUTH TABLES OVER THE SIX BARRED SYMBOLS
# ============================================================================
# A function of the six local symbols (bit 2*f + s as above, f in X,Y,Z) is a
# 64-bit int whose bit a is the value at assignment a.

TABLE_SIZE = 1 << LOCAL_SYMBOLS
TABLE_ONES = (1 << TABLE_SIZE) - 1


def _symbol_table(index):
    return sum(1 << a for a in range(TABLE_SIZE) if a >> index & 1)


SYMBOL_TABLES = tuple(_symbol_table(i) for i in range(LOCAL_SYMBOLS))
_LOW_HALVES = tuple(TABLE_ONES ^ t for t in SYMBOL_TABLES)


def anf_masks(table):
    """Monomials (local 6-bit masks) of the algebraic normal form of a truth table."""
    for i in range(LOCAL_SYMBOLS):
        table ^= (table & _LOW_HALVES[i]) << (1 << i)
    return [a for a in range(TABLE_SIZE) if table >> a & 1]
