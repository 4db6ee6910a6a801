from itertools import combinations

import pytest

from borelgens import BorelIdeal, DomainError, Monomial, SqfBorelIdeal, parse_monomial
from borelgens import oracle
from borelgens.catalan import catalan_diagram, catalan_number, w_principal, w_sq_principal
from borelgens.ideal import gens_in_degree, truncate_ideal, w_table
from corpus import corpus

M = parse_monomial


def test_staircase_diagram():
    C = catalan_diagram(M("a*b*c*d*e"))
    assert [list(r) for r in C.rows] == [[1], [1, 1], [1, 2, 2], [1, 3, 5, 5], [1, 4, 9, 14, 14]]
    assert list(C.diagonal()) == [1, 1, 2, 5, 14]
    assert C.row_sums() == [1, 2, 5, 14, 42]


def test_rectangle_diagram():
    C = catalan_diagram(M("x5^3"))
    assert len(C.rows) == 3 and all(len(r) == 5 for r in C.rows)
    assert C.bottom_row == (1, 3, 6, 10, 15)


def test_mixed_shape_bottom_row():
    assert catalan_diagram(M("x1*x2^2*x3*x5")).bottom_row == (1, 4, 7, 7, 7)


def test_unit_has_no_diagram():
    with pytest.raises(DomainError):
        catalan_diagram(Monomial.one(2))


def test_fill_rule_and_monotone_row_sums():
    for ideal in corpus():
        for m in ideal.bgens:
            C = catalan_diagram(m)
            assert all(v == 1 for v in C.rows[0])
            for j in range(1, len(C.rows)):
                prev = C.rows[j - 1]
                for k, v in enumerate(C.rows[j], start=1):
                    assert v == sum(prev[: min(k, len(prev))])
            sums = C.row_sums()
            assert sums == sorted(sums)


def test_w_principal_examples():
    assert w_principal(M("c^3")).vector(3) == [1, 3, 6]
    assert w_principal(M("a*c^2")).vector(3) == [1, 2, 3]
    assert w_principal(M("b^2*c")).vector(3) == [1, 3, 3]
    assert w_principal(M("a*b*c")).vector(3) == [1, 2, 2]
    assert w_principal(M("x4")).vector(1) == [1, 1, 1, 1]


def test_w_principal_matches_enumeration():
    for ideal in corpus():
        for m in ideal.bgens:
            naive = oracle.naive_borel_closure([m.exponents], m.n)
            counts = [0] * m.n
            for g in naive:
                counts[max(k for k, e in enumerate(g) if e)] += 1
            assert w_principal(m).vector(m.degree) == counts
            assert w_principal(m) == w_table(BorelIdeal(m.n, (m,)))


def test_row_sums_count_truncation_generators():
    for ideal in corpus():
        if not ideal.is_principal:
            continue
        m = ideal.bgens[0]
        for j, total in enumerate(catalan_diagram(m).row_sums(), start=1):
            assert total == len(gens_in_degree(truncate_ideal(ideal, j), j))


def test_w_sq_principal_examples():
    w = w_sq_principal(M("x2*x3*x4"))
    assert (w.w(3, 3), w.w(3, 4)) == (1, 3)
    w = w_sq_principal(M("a*b*c*d"))
    assert w.vector(4) == [0, 0, 0, 1]
    assert w_sq_principal(M("a*d*e")).vector(3) == [0, 0, 1, 2, 3]
    with pytest.raises(DomainError):
        w_sq_principal(M("a^2"))


def test_w_sq_principal_matches_enumeration():
    for n in range(1, 8):
        for d in range(1, min(4, n) + 1):
            for f in combinations(range(1, n + 1), d):
                m = Monomial.from_factorization(f, n)
                assert w_sq_principal(m) == w_table(SqfBorelIdeal(n, (m,))), m


def test_catalan_numbers():
    assert [catalan_number(k) for k in range(10)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    assert catalan_number(30) == 3814986502092304
