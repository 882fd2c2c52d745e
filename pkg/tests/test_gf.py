"""Field arithmetic: exhaustive axiom checks for every supported order <= 81."""

import pytest

from traceschemes import SUPPORTED_ORDERS, UnsupportedFieldOrder, gf


@pytest.mark.parametrize("q", [6, 10, 12, 100, 121, 1])
def test_unsupported_orders_rejected(q):
    with pytest.raises(UnsupportedFieldOrder):
        gf(q)


def test_supported_orders_cover_constructions():
    for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 97):
        assert q in SUPPORTED_ORDERS
        gf(q)


def _check_axioms(q):
    field = gf(q)
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    r = range(q)
    # identities and inverses
    for a in r:
        assert add[a][0] == a and add[0][a] == a
        assert mul[a][1] == a and mul[1][a] == a
        assert mul[a][0] == 0
        assert add[a][neg[a]] == 0
        if a:
            assert mul[a][inv[a]] == 1
    # commutativity
    for a in r:
        ra_add, ra_mul = add[a], mul[a]
        for b in range(a + 1, q):
            assert ra_add[b] == add[b][a]
            assert ra_mul[b] == mul[b][a]
    # associativity and distributivity, exhaustively over all triples
    for a in r:
        ma, aa = mul[a], add[a]
        for b in r:
            m_ab, a_ab = mul[ma[b]], add[aa[b]]
            mb, ab = mul[b], add[b]
            assert m_ab == [ma[mb[c]] for c in r]          # (a*b)*c == a*(b*c)
            assert a_ab == [aa[ab[c]] for c in r]          # (a+b)+c == a+(b+c)
            a_mab = add[ma[b]]
            assert [ma[x] for x in ab] == [a_mab[ma[c]] for c in r]  # a*(b+c) == a*b+a*c


@pytest.mark.parametrize("q", [q for q in SUPPORTED_ORDERS if q <= 81])
def test_field_axioms_exhaustive(q):
    _check_axioms(q)


def test_pow_and_div():
    field = gf(9)
    for a in range(1, 9):
        assert field.pow(a, 8) == 1  # multiplicative group order divides q-1
        assert field.div(a, a) == 1
        assert field.pow(a, -1) == field.inv[a]
    assert field.pow(0, 5) == 0


def test_subfields():
    assert set(gf(4).subfield(2)) == {0, 1}
    assert len(gf(16).subfield(4)) == 4
    assert len(gf(64).subfield(8)) == 8
    assert len(gf(81).subfield(9)) == 9
    with pytest.raises(UnsupportedFieldOrder):
        gf(16).subfield(8)


def test_modulus_is_irreducible_and_monic():
    for q in (4, 8, 9, 16, 25, 27):
        field = gf(q)
        assert field.modulus[-1] == 1
        # no roots in the prime field for the quadratics/cubics used here
        p = field.p
        for x in range(p):
            val = sum(c * x ** i for i, c in enumerate(field.modulus)) % p
            assert val != 0
