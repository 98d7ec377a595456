import itertools
import math

import pytest
from hypothesis import given, strategies as st

from maxclass.polyclass import (MINUS_INFINITY, PolyModP, allowed_lemma_pairs, classify_lemma,
                                classify_theorem, coeff_range_zero, in_theorem_k_set,
                                lemma_condition, s_component, theorem_side_conditions)
from maxclass.scalar import Scalar


def expand_oracle(k, g_coeffs, p):
    """Coefficients of (x-1)^k * g from integer binomials, reduced at the end."""
    binom = [math.comb(k, i) * (-1) ** (k - i) for i in range(k + 1)]
    out = [0] * (k + len(g_coeffs))
    for i, b in enumerate(binom):
        for j, g in enumerate(g_coeffs):
            out[i + j] += b * g
    return [c % p for c in out]


def lemma_oracle(p, kmax, lo_fn):
    hits = []
    for a in range(p):
        for k in range(2, kmax + 1):
            cs = expand_oracle(k, [-a, 1], p)
            lo = lo_fn(k)
            if all(cs[j] == 0 for j in range(lo, k + 1)):
                hits.append((k, a))
    return sorted(hits)


def standard_lo(k):
    return math.ceil(k / 2 + 1)


def strict_lo(k):
    return math.ceil((k + 1) / 2)


def test_poly_basics():
    p = 5
    zero = PolyModP(p, [0, 0])
    assert zero.degree == MINUS_INFINITY and not zero
    f = PolyModP(p, [1, 2, 0, 0])
    assert f.coeffs == (1, 2) and f.degree == 1
    assert PolyModP.x_minus(p, 1, 2) == PolyModP(p, [1, -2, 1])
    assert str(PolyModP(3, [2, 0, 1])) == "x^2 + 2"


polys = st.builds(PolyModP, st.just(5), st.lists(st.integers(0, 4), max_size=8))


@given(polys, polys)
def test_divmod_identity(a, b):
    if not b:
        with pytest.raises(ZeroDivisionError):
            divmod(a, b)
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == PolyModP(5)


def test_coeff_range_zero_examples():
    g = PolyModP.x_minus(3, 1, 2)
    assert coeff_range_zero(16, g)
    assert expand_oracle(16, list(g.coeffs), 3) == [1] + [0] * 8 + [1] + [0] * 8 + [1]
    x2 = PolyModP(3, [0, 0, 1])
    assert not coeff_range_zero(6, x2)
    assert expand_oracle(6, [0, 0, 1], 3)[5] == (-2) % 3
    for tail in itertools.product(range(3), repeat=2):
        assert coeff_range_zero(9, PolyModP(3, list(tail) + [1]))


def test_coeff_range_zero_rejects_small_k():
    with pytest.raises(ValueError):
        coeff_range_zero(4, PolyModP.x_minus(3, 1, 2))
    with pytest.raises(ValueError):
        coeff_range_zero(10, PolyModP(3, [1, 1]))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_lemma_examples(p):
    assert lemma_condition(2, Scalar(p, -2))
    for q in (p, p * p):
        assert lemma_condition(q, Scalar(p, 0))
        assert lemma_condition(q - 1, Scalar(p, 1)) or q - 1 < 2


def test_lemma_strict_example():
    assert not lemma_condition(3, Scalar(5, -3), "strict")
    assert expand_oracle(3, [3, 1], 5)[2] == (-6) % 5
    assert lemma_condition(3, Scalar(5, -3), "standard")


def test_classify_lemma_p3_exact():
    result = classify_lemma(3, 30)
    assert result == lemma_oracle(3, 30, standard_lo)
    # frozen from the oracle above
    assert result == [(2, 1), (3, 0), (5, 1), (8, 1), (9, 0), (17, 1), (26, 1), (27, 0)]
    assert set(result) == allowed_lemma_pairs(3, 30)


def test_classify_lemma_p5():
    result = classify_lemma(5, 60)
    assert result == lemma_oracle(5, 60, standard_lo)
    assert set(result) <= allowed_lemma_pairs(5, 60)
    strict = classify_lemma(5, 60, "strict")
    assert strict == lemma_oracle(5, 60, strict_lo)
    assert (3, 2) not in strict
    assert (9, 1) not in strict and (49, 1) not in strict
    assert set(strict) <= allowed_lemma_pairs(5, 60, "strict")


def test_classify_theorem_p3():
    report = classify_theorem(3, 100)
    assert report.ok and report.polynomials_checked == 9
    oracle = sorted({k for t in itertools.product(range(3), repeat=2)
                     for k in range(5, 101)
                     if all(c == 0 for c in expand_oracle(k, list(t) + [1], 3)[-(-(k + 3) // 2):k])})
    assert report.surviving_k() == oracle
    assert oracle == [5, 7, 8, 9, 10, 11, 16, 25, 26, 27, 28, 29, 52, 79, 80, 81, 82, 83]
    assert (16, PolyModP.x_minus(3, 1, 2)) in report.survivors
    for k, g in report.survivors:
        assert in_theorem_k_set(3, k)
        assert not theorem_side_conditions(3, k, g)
        for q in (9, 27, 81):
            for k0 in (1, 2):
                if k == q + k0:
                    assert PolyModP.monomial(3, k0).divides(g)


def test_classify_theorem_p2_and_p5():
    r2 = classify_theorem(2, 60)
    assert r2.ok
    r5 = classify_theorem(5, 80)
    assert r5.ok and r5.polynomials_checked == 5**4


def test_classify_theorem_modes():
    with pytest.raises(ValueError):
        classify_theorem(7, 40)
    r = classify_theorem(7, 60, samples=40, seed=1)
    assert r.mode == "sampling" and r.ok


def test_side_conditions_detect_bad_pairs():
    # k = q + 1 with g not divisible by x
    assert theorem_side_conditions(3, 10, PolyModP(3, [1, 0, 1]))
    assert not theorem_side_conditions(3, 10, PolyModP(3, [0, 1, 1]))


def test_s_component_examples():
    f = PolyModP(3, [1, 1, 0, 1])
    assert s_component(f, 1) == PolyModP(3, [0, 1])
    assert s_component(PolyModP(3), 2) == PolyModP(3)
    with pytest.raises(ValueError):
        s_component(f, 3)


@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 10), max_size=30))
def test_s_component_reassembly(p, cs):
    f = PolyModP(p, cs)
    total = PolyModP(p)
    for i in range(p):
        total = total + s_component(f, i)
    assert total == f


@given(st.sampled_from([3, 5]), st.integers(1, 6), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_s_component_of_frobenius_multiple(p, kp, gs):
    g = PolyModP(p, (gs + [0] * p)[:p - 1] + [1])
    base = (PolyModP.monomial(p, p) - 1) ** kp
    f = base * g
    for i in range(p):
        assert s_component(f, i) == base * PolyModP.monomial(p, i, g.coeff(i))


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("c", [1, 2, 3])
def test_freshmans_dream(p, c):
    q = p**c
    assert PolyModP.x_minus(p, 1, q) == PolyModP.monomial(p, q) - 1
