import random

from hypothesis import given, settings
from hypothesis import strategies as st

from knotorder.foxcalc import (
    GroupRingElem,
    fox_derivative,
    fox_derivative_recursive,
    fundamental_identity_lhs,
    fundamental_identity_rhs,
)
from knotorder.words import free_reduce, substitute

E = GroupRingElem.word
ONE = GroupRingElem.one()

letters = st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g]))
words = st.lists(letters, max_size=10).map(free_reduce)
elems = st.lists(st.tuples(words, st.integers(-3, 3)), max_size=4).map(GroupRingElem)


def test_ring_examples():
    assert ONE + (-ONE) == GroupRingElem.zero()
    assert E((1,)) * E((-1,)) == ONE
    assert (ONE + E((1,))) * E((2,)) == E((2,)) + E((1, 2))
    assert not GroupRingElem({(1,): 0})


@given(elems, elems, elems)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert a - a == GroupRingElem.zero()


def test_fox_examples():
    assert fox_derivative((1,), 1) == ONE
    assert fox_derivative((-1,), 1) == E((-1,), -1)
    # hand product rule: d(x1 x2 x1^-1 x2^-1)/dx1 = 1 - x1 x2 x1^-1
    assert fox_derivative((1, 2, -1, -2), 1) == ONE - E((1, 2, -1))


@given(words, st.integers(1, 3))
def test_scan_matches_product_rule(w, g):
    assert fox_derivative(w, g) == fox_derivative_recursive(w, g)


def test_fundamental_identity_on_bundled_relators(knots):
    for P in knots.values():
        for r in P.relators:
            assert fundamental_identity_lhs(r, P.num_generators) == fundamental_identity_rhs(r)


def test_fundamental_identity_random_words():
    rng = random.Random(20261015)
    for _ in range(1000):
        n = rng.randint(1, 6)
        raw = [rng.choice([1, -1]) * rng.randint(1, n) for _ in range(rng.randint(0, 14))]
        w = free_reduce(raw)
        assert fundamental_identity_lhs(w, n) == fundamental_identity_rhs(w)


@settings(max_examples=60)
@given(words, st.fixed_dictionaries({g: words for g in (1, 2, 3)}), st.integers(1, 3))
def test_chain_rule(w, images, j):
    # d(phi w)/dy_j = sum_i phi(dw/dx_i) * d(phi x_i)/dy_j
    lhs = fox_derivative(substitute(w, images), j)
    rhs = GroupRingElem.zero()
    for i in (1, 2, 3):
        rhs = rhs + fox_derivative(w, i).substitute(images) * fox_derivative(images[i], j)
    assert lhs == rhs
