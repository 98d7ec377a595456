import pytest

from maxclass.algebra import check_consistency
from maxclass.constituents import first_constituent_poly, split_constituents
from maxclass.constructions import (DividedPowerElement, Operator, SemidirectElement,
                                    exceptional_basis, exceptional_sequence, exceptional_simulate,
                                    metabelian_sequence, reduce_mod, witt_sequence)
from maxclass.polyclass import PolyModP
from maxclass.scalar import is_power_of_p
from maxclass.transforms import translate

GRID = [(3, 9, 1), (3, 9, 2), (3, 27, 1)] + [(5, 25, m) for m in range(1, 5)]


def vals(seq, lo, hi):
    return tuple(seq.beta(i).value for i in range(lo, hi + 1))


def test_exceptional_closed_form_values():
    s = exceptional_sequence(3, 9, 1, 40)
    assert vals(s, 4, 7) == (0,) * 4
    assert vals(s, 8, 10) == (1, 0, 2)
    assert vals(s, 11, 16) == (0,) * 6
    assert vals(s, 17, 19) == (2, 2, 2)
    e = exceptional_sequence(5, 25, 2, 60)
    assert vals(e, 23, 27) == (0, 2, 0, 4, 4)
    assert e.beta(28) == 0


@pytest.mark.parametrize("p,q,m", GRID)
def test_end_of_first_block_is_minus_one(p, q, m):
    assert exceptional_sequence(p, q, m, 2 * q + p).beta(q + m) == p - 1


def test_exceptional_accepts_witness():
    w = is_power_of_p(9, 3)
    assert exceptional_sequence(3, w, 1, 30) == exceptional_sequence(3, 9, 1, 30)


@pytest.mark.parametrize("args", [(3, 9, 0), (3, 9, 3), (3, 3, 1), (3, 12, 1), (2, 4, 1), (4, 16, 1)])
def test_exceptional_rejects_bad_parameters(args):
    with pytest.raises(ValueError):
        exceptional_sequence(*args, 40)


def test_divided_power_product_and_derivative():
    p, q = 3, 9
    x = lambda i: DividedPowerElement.monomial(p, q, 0, i)
    assert x(2) * x(3) == x(5).scale(10)
    assert x(4) * x(5) == DividedPowerElement(p, q)  # index 9 falls outside [0, q)
    assert x(0).derivative() == DividedPowerElement(p, q)
    assert x(5).derivative() == x(4)
    assert DividedPowerElement(p, q, {(0, -1): 1}) == DividedPowerElement(p, q)


def test_operator_bracket_rule():
    p, q = 5, 25
    h1 = DividedPowerElement.monomial(p, q, 1, 7)
    h2 = DividedPowerElement.monomial(p, q, 0, 3, 2)
    a, b = Operator(2, h1), Operator(3, h2)
    f = DividedPowerElement.monomial(p, q, 0, 5)
    # the commutator acts as a(b(f)) - b(a(f))
    direct = a.apply(b.apply(f)) - b.apply(a.apply(f))
    assert a.bracket(b).apply(f) == direct
    assert a.bracket(b).a == 0


@pytest.mark.parametrize("p,q,m", GRID)
def test_simulation_basis_shape(p, q, m):
    basis = exceptional_basis(p, q, m, 4 * q)
    assert basis[q + m] == SemidirectElement(DividedPowerElement.monomial(p, q, 0, 0),
                                             Operator(0, DividedPowerElement(p, q)))
    for r in range(1, 4):
        for j in range(1, q + 1):
            i = r * q + m + j
            if i > 4 * q:
                break
            assert basis[i].f == DividedPowerElement.monomial(p, q, r, q - j)
            assert not basis[i].op
    # grading: the f-part of e_i sits on the bidegree (r, k) with r*q + m + q - k = i
    for i, e in basis.items():
        for r, k in e.f.bidegrees():
            assert r * q + m + q - k == i


@pytest.mark.parametrize("p,q,m", GRID)
def test_simulation_matches_closed_form(p, q, m):
    d = 3 * q
    assert exceptional_simulate(p, q, m, d) == exceptional_sequence(p, q, m, d)


@pytest.mark.parametrize("p,q,m", GRID)
def test_exceptional_profile(p, q, m):
    s = exceptional_sequence(p, q, m, 6 * q)
    assert check_consistency(s, s.degree).consistent
    lengths = split_constituents(s).lengths
    first = q + m if m % 2 else q + m + 1
    expected = [first] + [q] * (len(lengths) - 1)
    if m % 2 == 0:
        expected[1] = q - 1
    assert lengths == expected and len(lengths) >= 4


@pytest.mark.parametrize("p,q,m", GRID)
def test_exceptional_first_poly(p, q, m):
    one_minus_x = PolyModP(p, [1, -1])
    x = PolyModP.monomial(p, 1)
    g = one_minus_x ** (p - 1 - m) * (x**m - one_minus_x**m)
    if m % 2 == 0:
        g = x * g
    assert first_constituent_poly(exceptional_sequence(p, q, m, 3 * q)) == g


def test_metabelian():
    z = metabelian_sequence(3, "abelian-maximal-ideal", 20, 3)
    o = metabelian_sequence(3, "codim-2-abelian", 20, 3)
    assert not any(z.entries) and all(b == 1 for b in o.entries)
    assert z.degree == o.degree == 20
    assert translate(o, -1) == z and translate(z, 1).entries == o.entries
    for s in (z, o):
        assert check_consistency(s, 20).consistent
    with pytest.raises(ValueError):
        metabelian_sequence(1, "codim-2-abelian", 10)


def test_witt():
    w = witt_sequence(200)
    assert [str(w.beta(i)) for i in (3, 4, 5)] == ["1", "1", "9/10"]
    assert w.characteristic == 0 and w.n == 2 and w.normalized and w.last_index == 198
    with pytest.raises(ValueError):
        witt_sequence(4)


def test_reduce_mod():
    prefix, bad = reduce_mod(witt_sequence(30), 5)
    assert bad[:4] == [5, 6, 10, 11]
    assert [b.value for b in prefix.entries] == [1, 1]
    prefix7, bad7 = reduce_mod(witt_sequence(12), 7)
    assert bad7 == [7, 8]
    # beta_5 = 9/10 = 9 * 10^-1 mod 7 = 2 * 5 = 10 = 3
    assert prefix7.beta(5) == 3
