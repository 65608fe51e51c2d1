from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from foamcalc.poly import LaurentPoly, Poly
from foamcalc.symcore import (
    Partition,
    SymElt,
    evaluate,
    h_difference,
    lr_coeff,
    lr_product,
    partitions_in_box,
    qbinomial,
    schur_difference,
    schur_poly,
    schur_product,
)

from oracles import mono_combo, mono_mul, partitions, poly_to_sympy, qbinomial_oracle, ssyt_monomials

P = Partition


def test_pieri_examples():
    assert lr_coeff(P((1,)), P((1,)), P((2,))) == 1
    assert lr_coeff(P((1,)), P((1,)), P((1, 1))) == 1
    assert lr_coeff(P((1,)), P((1,)), P((3,))) == 0


def test_lr_21_squared_frozen():
    # brute-force expansion of s_(2,1)^2 in 6 variables
    table = lr_product(P((2, 1)), P((2, 1)))
    expected = {(4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1}
    assert {g.parts: c for g, c in table.items()} == expected
    prod_mono = mono_mul(ssyt_monomials((2, 1), 6), ssyt_monomials((2, 1), 6))
    assert prod_mono == mono_combo(expected, 6)


@pytest.mark.parametrize("a", [1, 2, 3])
def test_schur_product_against_tableaux(a):
    for n in range(0, 6):
        for m in range(0, 6 - n):
            for alpha in partitions(n, a):
                for beta in partitions(m, a):
                    got = schur_product(SymElt.schur(alpha, a), SymElt.schur(beta, a))
                    lhs = mono_mul(ssyt_monomials(alpha, a), ssyt_monomials(beta, a))
                    assert lhs == mono_combo({lam.parts: c for lam, c in got.coeffs.items()}, a)


def test_schur_product_units_and_truncation():
    s1 = SymElt.schur((1,), 1)
    assert schur_product(s1, s1).coeffs == {P((2,)): 1}
    s1 = SymElt.schur((1,), 2)
    assert schur_product(s1, s1).coeffs == {P((2,)): 1, P((1, 1)): 1}
    x = SymElt.schur((3, 1), 3)
    assert schur_product(SymElt.one(3), x).coeffs == x.coeffs
    with pytest.raises(ValueError):
        schur_product(SymElt.schur((1,), 2), SymElt.schur((1,), 3))


small_partition = st.integers(0, 4).flatmap(lambda n: st.sampled_from(list(partitions(n, 3)) or [()]))


@settings(max_examples=60, deadline=None)
@given(small_partition, small_partition)
def test_lr_symmetric_and_supported(alpha, beta):
    ab = lr_product(P(alpha), P(beta))
    assert ab == lr_product(P(beta), P(alpha))
    for gamma, c in ab.items():
        assert c > 0 and isinstance(c, int)
        assert gamma.contains(P(alpha)) and gamma.contains(P(beta))
        assert gamma.size == sum(alpha) + sum(beta)


def test_h_difference_explicit_values():
    A1, A2, B1 = sympy.symbols("A1 A2 B1")
    assert poly_to_sympy(h_difference(1, 2, 1)) == A1 + A2 - B1
    expected = sympy.expand(A1**2 + A1 * A2 + A2**2 - (A1 + A2) * B1)
    assert poly_to_sympy(h_difference(2, 2, 1)) == expected
    assert h_difference(0, 3, 2) == Poly.const(1)


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_h_difference_series(a, b):
    x = sympy.Symbol("x")
    A = sympy.symbols(f"A1:{a + 1}")
    B = sympy.symbols(f"B1:{b + 1}")
    f = sympy.prod([1 - v * x for v in B]) / sympy.prod([1 - v * x for v in A])
    series = sympy.series(f, x, 0, 5).removeO()
    for k in range(5):
        assert sympy.expand(series.coeff(x, k) - poly_to_sympy(h_difference(k, a, b))) == 0


def test_schur_difference_examples():
    assert schur_difference(P(()), 2, 1) == Poly.const(1)
    assert schur_difference(P((1,)), 2, 1) == h_difference(1, 2, 1)
    with pytest.raises(ValueError):
        schur_difference(P((1, 1, 1)), 2, 1)


@pytest.mark.parametrize("lam", [lam for n in range(5) for lam in partitions(n, 3)])
def test_schur_difference_reduces_to_classical(lam):
    got = schur_difference(P(lam), 3, 0)
    assert got == schur_poly(P(lam), ("A1", "A2", "A3"))


def test_evaluation_examples():
    assert evaluate(SymElt.schur((1,), 1), [3]) == 3
    assert evaluate(SymElt.schur((1, 1), 2), [2, 5]) == 10
    assert evaluate(h_difference(2, 2, 1), {"A1": 1, "A2": 2, "B1": 3}) == -2
    with pytest.raises(KeyError):
        evaluate(h_difference(2, 2, 1), {"A1": 1})


def test_qbinomial_examples():
    assert qbinomial(2, 1) == LaurentPoly({(-1, 0): 1, (1, 0): 1})
    assert qbinomial(5, 0) == LaurentPoly.one()
    assert qbinomial(4, 2).to_json() == {"q^-4 t^0": 1, "q^-2 t^0": 1, "q^0 t^0": 2, "q^2 t^0": 1, "q^4 t^0": 1}
    with pytest.raises(ValueError):
        qbinomial(3, 4)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 9).flatmap(lambda N: st.tuples(st.just(N), st.integers(0, N))))
def test_qbinomial_matches_subset_count(Na):
    N, a = Na
    q = qbinomial(N, a)
    assert {k[0]: v for k, v in q.coeffs.items()} == qbinomial_oracle(N, a)
    assert q == qbinomial(N, N - a)
    assert q == q.bar()


def test_partition_text_format():
    assert str(P((2, 1))) == "[2,1]"
    assert str(P(())) == "[]"
    assert P.parse("[3,1]") == P((3, 1))
    assert len(partitions_in_box(2, 3)) == 10
    with pytest.raises(ValueError):
        P.parse("3,1")
