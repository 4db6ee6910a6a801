from itertools import combinations
from math import comb, factorial

import pytest

from borelgens import BorelIdeal, DomainError, InternalError, Monomial, SqfBorelIdeal, WTable, parse_ideal
from borelgens.betti import (
    BettiTable,
    betti_ek,
    betti_ie,
    betti_w,
    closed_form_bi,
    golod_series,
    poincare_exterior,
    poincare_ideal,
    poincare_residue_field,
    ppt_numbers,
    ppt_recursion,
)
from borelgens.catalan import catalan_number
from borelgens.ideal import codim_pdim, w_table
from borelgens.series import BiPoly, RationalBiSeries, compose_one_plus_tu
from corpus import corpus

B = parse_ideal


def staircase(n):
    return BorelIdeal(n, (Monomial.from_factorization(range(1, n + 1), n),))


def power(n, d):
    return BorelIdeal(n, (Monomial.var(n, n).times_var(n, d - 1),))


# --- tables ---------------------------------------------------------------


def test_quotient_tables_of_worked_ideals():
    c3 = betti_ek(B("borel{c^3}@3")).quotient()
    assert c3.totals() == [1, 10, 15, 6]
    assert c3.rows() == {0: [1, 0, 0, 0], 2: [0, 10, 15, 6]}
    big = B("borel{a,b^2,c^3}@3")
    for table in (betti_ek(big).quotient(), betti_ie(big).quotient()):
        assert table.totals() == [1, 4, 5, 2]
        assert table.rows() == {0: [1, 1, 0, 0], 1: [0, 1, 1, 0], 2: [0, 2, 4, 2]}
    assert betti_ie(B("borel{a,b^2}@3")).quotient().totals() == [1, 2, 1]
    assert betti_ie(B("borel{a*c^2,b^2*c}@3")).quotient().totals() == [1, 8, 11, 4]


def test_linear_prime_is_koszul():
    for q in range(1, 7):
        totals = betti_ek(BorelIdeal(q, (Monomial.var(q, q),))).totals()
        assert totals == [comb(q, i + 1) for i in range(q)]


def test_betti_w_examples():
    assert betti_w(WTable.from_vector(3, [1, 3, 6])).totals() == [10, 15, 6]
    assert betti_w(WTable.from_vector(3, [1, 2, 3])).totals() == [6, 8, 3]
    assert betti_w(WTable.from_vector(1, [1])).totals() == [1]
    assert betti_w(WTable.from_vector(3, [1, 2, 3])).entries == betti_ek(B("borel{a*c^2}@3")).entries


def test_betti_w_rejects_mixed_degrees():
    with pytest.raises(DomainError):
        betti_w(w_table(B("borel{a,b^2}@2")))


def test_trivial_ideals_rejected():
    for bad in (BorelIdeal.zero(3), BorelIdeal.unit(3)):
        with pytest.raises(DomainError):
            betti_ek(bad)
    with pytest.raises(DomainError):
        betti_ie(B("sfborel{a*b}@3"))


def test_table_shapes():
    table = BettiTable({(0, 2): 3, (1, 3): 2, (2, 4): 0})
    assert table[(2, 4)] == 0 and table.pdim() == 1
    q = table.quotient()
    assert q[(0, 0)] == 1 and q[(1, 2)] == 3 and q.kind == "quotient"
    assert q.quotient() is q
    with pytest.raises(ValueError):
        BettiTable({}, kind="module")


def test_ek_equals_ie_and_w_on_corpus():
    for ideal in corpus():
        ek = betti_ek(ideal)
        assert ek.entries == betti_ie(ideal).entries, ideal
        w = w_table(ideal)
        if len(w.degrees()) == 1:
            assert betti_w(w).entries == ek.entries


def test_pdim_consistency():
    for ideal in corpus():
        assert betti_ek(ideal).quotient().pdim() == codim_pdim(ideal)[1]
    for n in (4, 5):
        for f in combinations(range(1, n + 1), 2):
            sq = SqfBorelIdeal(n, (Monomial.from_factorization(f, n),))
            assert betti_ek(sq).quotient().pdim() == codim_pdim(sq)[1]


def test_principal_recursion():
    # b_{i-1}(Borel(m)) + b_i(Borel(m / x_k)) = C(k, i) w_k(Borel(m)), k = max(m)
    for ideal in corpus():
        if not ideal.is_principal or ideal.maxdeg < 2:
            continue
        m = ideal.bgens[0]
        k = m.max_index
        top = betti_ek(ideal).totals()
        below = betti_ek(BorelIdeal(m.n, (m / Monomial.var(k, m.n),))).totals()
        wk = w_table(ideal).w(m.degree, k)
        for i in range(k + 1):
            lhs = (top[i - 1] if 0 < i <= len(top) else 0) + (below[i] if i < len(below) else 0)
            assert lhs == comb(k, i) * wk, (m, i)


def test_staircase_recursion():
    for n in range(2, 11):
        top, below = betti_ek(staircase(n)).totals(), betti_ek(staircase(n - 1)).totals()
        for i in range(n + 1):
            lhs = (top[i - 1] if 0 < i <= len(top) else 0) + (below[i] if i < len(below) else 0)
            assert lhs == comb(n, i) * catalan_number(n - 1)


def test_maximal_ideal_power_recursion():
    for n in range(1, 7):
        for d in range(2, 7):
            top, below = betti_ek(power(n, d)).totals(), betti_ek(power(n, d - 1)).totals()
            for i in range(1, n + 1):
                lhs = top[i - 1] + (below[i] if i < len(below) else 0)
                trinomial = factorial(d + n - 1) // (factorial(i) * factorial(n - i) * factorial(d - 1))
                assert lhs * (d + n - 1) == n * trinomial


# --- closed form and pseudo-triangulations ---------------------------------


def test_closed_form_examples():
    assert closed_form_bi(5, 0) == 42 and closed_form_bi(5, 4) == 14
    assert closed_form_bi(1, 0) == 1
    assert closed_form_bi(4, 4) == closed_form_bi(4, 9) == 0
    with pytest.raises(DomainError):
        closed_form_bi(0, 0)


def test_closed_form_matches_ek():
    for n in range(1, 10):
        totals = betti_ek(staircase(n)).totals()
        assert totals == [closed_form_bi(n, i) for i in range(n)]


def test_ppt_examples():
    table = ppt_numbers(4)
    assert table[(4, 0)] == 14 and table[(4, 1)] == 70
    assert table[(1, 0)] == 1 and table[(1, 1)] == 2
    assert [table[(4, i)] for i in range(5)] == [14, 70, 135, 120, 42]
    with pytest.raises(DomainError):
        ppt_recursion(0)


def test_ppt_three_way_for_larger_ell():
    table = ppt_numbers(14)
    for l in range(1, 15):
        totals = betti_ek(staircase(l + 1)).totals()
        assert [table[(l, i)] for i in range(l + 1)] == totals[::-1]


def test_internal_error_is_an_assertion():
    assert issubclass(InternalError, AssertionError)


# --- Poincaré series ---------------------------------------------------------


def test_poincare_ideal_examples():
    assert poincare_ideal(B("borel{b^2}@2")) == BiPoly({(0, 2): 3, (1, 3): 2})
    u = BiPoly.monomial(0, 1)
    for q in range(1, 6):
        want = BiPoly()
        for i in range(1, q + 1):
            want = want + u * BiPoly.one_plus_tu() ** (i - 1)
        got = poincare_ideal(BorelIdeal(q, (Monomial.var(q, q),)))
        assert got == want
        assert all(got[(i, i + 1)] == comb(q, i + 1) for i in range(q))
    sq = poincare_ideal(B("sfborel{a*d*e}@5"))
    one_plus = BiPoly.one_plus_tu()
    assert sq == BiPoly.monomial(0, 3) * (BiPoly.const(1) + one_plus * 2 + one_plus**2 * 3)


def test_poincare_ideal_matches_table():
    for ideal in corpus():
        P = poincare_ideal(ideal)
        assert P.coeffs == dict(betti_ek(ideal).entries)


def test_golod_expansion_of_plane_square():
    series = poincare_residue_field(B("borel{b^2}@2"))
    assert series.expand_at_u1(5) == [1, 2, 4, 8, 16, 32]
    assert series == RationalBiSeries(BiPoly.const(1), BiPoly.const(1) - BiPoly.monomial(1, 1, 2))


def test_golod_formula_agrees_with_general_series():
    checked = 0
    for ideal in corpus():
        w = w_table(ideal)
        if len(w.degrees()) != 1 or w.degrees()[0] < 2:
            continue
        series = poincare_residue_field(ideal)
        assert series.denominator.t_coefficient(0) == {0: 1}
        assert series == golod_series(ideal)
        checked += 1
    assert checked > 20


def test_residue_field_scope():
    with pytest.raises(DomainError):
        poincare_residue_field(B("borel{a,b^2}@2"))
    with pytest.raises(DomainError):
        poincare_residue_field(B("borel{b}@2"))


def test_golod_for_maximal_ideal_powers():
    for n in range(1, 5):
        for d in range(2, 5):
            f = [0] + [comb(d + i - 2, d - 1) for i in range(1, n + 1)]
            one_plus = BiPoly.one_plus_tu()
            direct = RationalBiSeries(
                one_plus ** (n + 1), one_plus - BiPoly.monomial(2, d) * compose_one_plus_tu(f)
            )
            assert poincare_residue_field(power(n, d)) == direct


def test_squarefree_golod_agrees_with_general_series():
    for n in (4, 5, 6):
        for f in combinations(range(1, n + 1), 2):
            sq = SqfBorelIdeal(n, (Monomial.from_factorization(f, n),))
            assert poincare_residue_field(sq) == golod_series(sq)


def test_exterior_examples():
    one_minus = BiPoly.one_plus_tu(-1)
    for q in range(1, 5):
        series = poincare_exterior(SqfBorelIdeal(q, (Monomial.var(q, q),)))
        num = BiPoly()
        for i in range(1, q + 1):
            num = num + BiPoly.monomial(0, 1) * one_minus ** (q - i)
        assert series == RationalBiSeries(num, one_minus**q)
    ade = poincare_exterior(B("sfborel{a*d*e}@5"))
    w = [0, 0, 1, 2, 3]
    num = BiPoly()
    for i, wi in enumerate(w, start=1):
        num = num + BiPoly.monomial(0, 3, wi) * one_minus ** (5 - i)
    assert ade == RationalBiSeries(num, one_minus**5)
    for d in range(1, 5):
        top = SqfBorelIdeal(d, (Monomial.from_factorization(range(1, d + 1), d),))
        assert poincare_exterior(top) == RationalBiSeries(BiPoly.monomial(0, d), one_minus**d)
    with pytest.raises(DomainError):
        poincare_exterior(B("borel{a}@2"))
