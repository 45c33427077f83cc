import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotorder.alexpoly import alexander_minor
from knotorder.errors import InternalInvariantViolation
from knotorder.laurent import LaurentPoly
from knotorder.replib import Mat2, Representation, enumerate_reps, sl2_elements
from knotorder.twisted import (
    TwistedAlex,
    ksw_divides,
    refute_by_twisted,
    twisted_alexander,
    twisted_pair,
    verify_witness,
)

U = Mat2.make([[1, 1], [0, 1]], 5)
L = Mat2.make([[1, 0], [-1, 1]], 5)
V = Mat2.make([[2, 1], [-1, 0]], 5)
TREFOIL_F5 = Representation(5, (U, V, L))
TARGETS = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"]


def F5(*coeffs):
    return LaurentPoly(list(coeffs), p=5)


def test_trefoil_denominator(knots):
    ta = twisted_alexander(knots["3_1"], TREFOIL_F5)
    assert ta.denominator == F5(1, -2, 1)


def test_trefoil_columns_agree_and_match_cofactor(knots):
    P = knots["3_1"]
    n1, d1 = twisted_pair(P, TREFOIL_F5, 1)
    n3, d3 = twisted_pair(P, TREFOIL_F5, 3)
    assert (n1 * d3).normalized() == (n3 * d1).normalized()
    for col in (1, 2, 3):
        fast, _ = twisted_pair(P, TREFOIL_F5, col)
        slow, _ = twisted_pair(P, TREFOIL_F5, col, oracle=True)
        assert fast.normalized() == slow.normalized()


def test_identity_rep_squares_classical_minor(knots):
    P = knots["3_1"]
    one = Mat2.identity(5)
    ta = twisted_alexander(P, Representation(5, (one,) * 3))
    assert ta.denominator == F5(1, -2, 1)
    assert ta.numerator == (alexander_minor(P, 1, p=5) ** 2).normalized()


def test_ksw_examples(knots):
    ta = twisted_alexander(knots["3_1"], TREFOIL_F5)
    assert ksw_divides(ta, ta)
    other = TwistedAlex(5, ta.numerator, ta.denominator * F5(1, 1))
    assert not ksw_divides(ta, other)
    assert not ksw_divides(other, ta)


def test_zero_denominator_rejected():
    with pytest.raises(InternalInvariantViolation):
        TwistedAlex(5, F5(1), F5())


@pytest.mark.parametrize("name", TARGETS)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_column_independence_every_rep(knots, name, p):
    P = knots[name]
    for rho in enumerate_reps(P, p):
        twisted_alexander(P, rho, columns=range(1, P.num_generators + 1))


@pytest.mark.parametrize("name", TARGETS)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_conjugation_invariance_every_rep(knots, name, p):
    P = knots[name]
    group = sl2_elements(p)
    g = group[len(group) // 3]
    for rho in enumerate_reps(P, p):
        a = twisted_alexander(P, rho)
        b = twisted_alexander(P, rho.conjugate(g))
        assert (a.numerator, a.denominator) == (b.numerator, b.denominator)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sl2_elements(5)))
def test_conjugation_invariance_random_conjugator(knots, g):
    a = twisted_alexander(knots["3_1"], TREFOIL_F5)
    b = twisted_alexander(knots["3_1"], TREFOIL_F5.conjugate(g))
    assert a == b


def test_refute_examples(knots):
    report = refute_by_twisted(knots["11a_6"], knots["3_1"], primes=[3])
    assert report.refuted and report.p == 3
    assert verify_witness(knots["11a_6"], knots["3_1"], report.witness)
    assert str(report) == f"REFUTED p=3 rep={report.witness_index}"
    # the index points into the full conjugacy-reduced list
    assert enumerate_reps(knots["3_1"], 3)[report.witness_index] == report.witness

    same = refute_by_twisted(knots["3_1"], knots["3_1"], primes=[2, 3, 5])
    assert not same.refuted and str(same).startswith("INCONCLUSIVE")

    r = refute_by_twisted(knots["4_1"], knots["3_1"], primes=[2, 3, 5])
    if r.refuted:
        assert verify_witness(knots["4_1"], knots["3_1"], r.witness)


def test_resource_limit_is_inconclusive(knots):
    report = refute_by_twisted(knots["11a_6"], knots["3_1"], primes=[5], budget=5)
    assert not report.refuted
    assert "resource limit" in report.cause


def test_threaded_refutation_agrees(knots):
    a = refute_by_twisted(knots["11a_6"], knots["3_1"], primes=[3])
    b = refute_by_twisted(knots["11a_6"], knots["3_1"], primes=[3], workers=3)
    assert (a.p, a.witness_index) == (b.p, b.witness_index)
