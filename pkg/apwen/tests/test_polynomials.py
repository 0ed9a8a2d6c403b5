import pickle

import pytest

from apwen.polynomials import (
    SYMBOL_TABLES,
    TABLE_ONES,
    Gf2Poly,
    SymVar,
    anf_masks,
    monomial_text,
)


def sym(token):
    return Gf2Poly.symbol(SymVar.parse(token))


# ============================================================================
# SYMBOLS
# ============================================================================

def test_symbol_layout():
    assert SymVar.parse('Xn').index == 0
    assert SymVar.parse('Zm').index == 5
    assert SymVar.parse('Un').index == 6
    assert SymVar.parse('Wm').index == 11
    assert SymVar.from_index(7).name == 'Um'


def test_unknown_symbol():
    with pytest.raises(ValueError):
        SymVar.parse('Qn')


def test_monomial_text():
    assert monomial_text(0) == '1'
    assert monomial_text(0b100001) == 'Xn Zm'


# ============================================================================
# ARITHMETIC
# ============================================================================

def test_addition_cancels():
    xn = sym('Xn')
    assert xn + xn == Gf2Poly.zero()
    assert not (xn + xn)


def test_multiplication_is_idempotent():
    xn = sym('Xn')
    assert xn * xn == xn
    assert (xn + Gf2Poly.one()) * xn == Gf2Poly.zero()


def test_product_of_sums():
    un, vn, wm = sym('Un'), sym('Vn'), sym('Wm')
    assert str((un + vn) * wm) == 'Un Wm + Vn Wm'


def test_canonical_order():
    poly = Gf2Poly.parse('Vn Wn + Un Wn + Un Vn Wn')
    assert str(poly) == 'Un Vn Wn + Un Wn + Vn Wn'
    assert str(Gf2Poly.parse('Yn Zm + Xn Zm + Xn Yn Zm')) == 'Xn Yn Zm + Xn Zm + Yn Zm'


def test_parse_constants():
    assert Gf2Poly.parse('0') == Gf2Poly.zero()
    assert Gf2Poly.parse('1') == Gf2Poly.one()
    assert Gf2Poly.parse('Xn + Xn') == Gf2Poly.zero()


def test_evaluate():
    poly = Gf2Poly.parse('Un Wm + Vn Wm')
    un, vn, wm = (SymVar.parse(t).bit for t in ('Un', 'Vn', 'Wm'))
    assert poly.evaluate(un | wm) == 1
    assert poly.evaluate(un | vn | wm) == 0
    assert poly.evaluate(un | vn) == 0
    assert Gf2Poly.one().evaluate(0) == 1


def test_immutable_and_picklable():
    poly = Gf2Poly.parse('Xn Ym + Zn')
    with pytest.raises(AttributeError):
        poly.monomials = frozenset()
    assert pickle.loads(pickle.dumps(poly)) == poly
    assert len({poly, Gf2Poly.parse('Zn + Xn Ym')}) == 1


# ============================================================================
# TRUTH TABLES
# ============================================================================

def test_anf_of_symbols_and_constants():
    assert anf_masks(TABLE_ONES) == [0]
    assert anf_masks(0) == []
    for i, table in enumerate(SYMBOL_TABLES):
        assert anf_masks(table) == [1 << i]


def test_anf_of_products_and_sums():
    xn, ym, zm = SYMBOL_TABLES[0], SYMBOL_TABLES[3], SYMBOL_TABLES[5]
    assert anf_masks(xn & zm) == [0b100001]
    assert anf_masks(xn | ym) == sorted([0b000001, 0b001000, 0b001001])
    assert anf_masks((xn ^ ym) & zm) == [0b100001, 0b101000]
