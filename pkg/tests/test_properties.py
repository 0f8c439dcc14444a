"""Hypothesis-driven algebraic laws."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from actlab.acts import (
    CommutativeSquare,
    generated_subact,
    induced_map_from_pushout,
    pullback,
    pushout,
)
from actlab.fileio import load_catalog
from actlab.independence import IndependenceQuery, is_independent
from actlab.oracles import is_pushout_setwise
from actlab.sampling import random_act, random_mono_from, random_mono_into, random_subset

MONOIDS = load_catalog(max_size=4)


@st.composite
def acts(draw, max_size=6):
    M = draw(st.sampled_from(MONOIDS))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_act(M, random.Random(seed), max_size), random.Random(seed + 1)


@settings(max_examples=150, deadline=None)
@given(acts())
def test_closure_operator(data):
    A, rng = data
    X, Y = random_subset(A, rng), random_subset(A, rng)
    SX = generated_subact(A, X)
    assert X <= SX
    assert generated_subact(A, SX) == SX
    assert generated_subact(A, X & Y) <= SX
    assert (not SX) == (not X)


@settings(max_examples=150, deadline=None)
@given(acts(max_size=4))
def test_pushout_of_mono_is_mono(data):
    A, rng = data
    f = random_mono_from(A, rng, 2)
    g = random_mono_from(A, rng, 2)
    P, q1, q2 = pushout(f, g)
    assert q1.is_injective and q2.is_injective
    assert is_pushout_setwise(f, g, q1, q2)


@settings(max_examples=150, deadline=None)
@given(acts())
def test_effective_unions(data):
    A3, rng = data
    g1, g2 = random_mono_into(A3, rng), random_mono_into(A3, rng)
    _, p1, p2, _ = pullback(g1, g2)
    P, q1, q2 = pushout(p1, p2)
    k = induced_map_from_pushout(CommutativeSquare(p1, p2, g1, g2), P, q1, q2)
    assert k.is_injective
    assert k.image() == g1.image() | g2.image()


@settings(max_examples=200, deadline=None)
@given(acts())
def test_independence_symmetric(data):
    B, rng = data
    A = generated_subact(B, random_subset(B, rng, 0.2))
    X, Y = random_subset(B, rng), random_subset(B, rng)
    assert is_independent(IndependenceQuery(B, A, X, Y)) == is_independent(IndependenceQuery(B, A, Y, X))


@settings(max_examples=100, deadline=None)
@given(acts(max_size=5))
def test_pullback_of_epi_is_epi(data):
    from actlab.acts import enumerate_homs, quotient

    A, rng = data
    if A.size < 2:
        return
    x, y = rng.sample(range(A.size), 2)
    Q, q = quotient(A, [(x, y)])
    others = enumerate_homs(A, Q, limit=4)
    h = rng.choice(others)
    _, _, p2, _ = pullback(q, h)
    assert p2.is_surjective
