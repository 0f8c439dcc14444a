import random

import pytest

from actlab.acts import (
    ActHom,
    CommutativeSquare,
    coproduct,
    empty_act,
    generated_subact,
    identity_hom,
    inclusion,
    pushout,
    regular_act,
    subacts,
)
from actlab.errors import (
    BaseNotContained,
    BaseNotSubact,
    ElementInBase,
    ForkingDetected,
    NotCommutative,
    NotMono,
    RestrictionsDiffer,
)
from actlab.fileio import load_catalog
from actlab.independence import (
    IndependenceQuery,
    dependence_witness,
    is_independent,
    merge_nonforking,
    minimal_base,
    splits_over,
    splitting_witness,
    square_is_independent,
    type_nonforking,
)
from actlab.monoid import generation_degree
from actlab.oracles import bar_independent_search, brute_force_cover
from actlab.sampling import random_act, random_subact, random_subset
from actlab.typecalc import type_rep, types_equal


def test_square_examples(rz3):
    S = regular_act(rz3)
    ident = identity_hom(S)
    assert square_is_independent(CommutativeSquare(ident, ident, ident, ident))
    E = empty_act(rz3)
    C, i1, i2 = coproduct(S, S)
    e1, e2 = ActHom(E, S, ()), ActHom(E, S, ())
    assert square_is_independent(CommutativeSquare(e1, e2, i1, i2))
    assert not square_is_independent(CommutativeSquare(e1, e2, ident, ident))
    with pytest.raises(NotMono):
        bad = ActHom(S, S, (1, 1, 2))
        square_is_independent(CommutativeSquare(ident, ident, bad, bad))
    _, sub = inclusion(S, {1})
    twist = ActHom(sub.source, S, (2,))
    with pytest.raises(NotCommutative):
        square_is_independent(CommutativeSquare(sub, twist, ident, ident, checked=False))


def test_is_independent_examples(rz3):
    S = regular_act(rz3)
    assert is_independent(IndependenceQuery(S, (), (), (0,)))
    C, i1, i2 = coproduct(S, S)
    assert is_independent(IndependenceQuery(C, (), (i1.map[1],), (i2.map[1],)))
    q = IndependenceQuery(S, (), (0,), (1,))
    assert not is_independent(q) and dependence_witness(q) == {1}
    with pytest.raises(BaseNotSubact):
        IndependenceQuery(S, (0,), (), ())


def test_matches_bar_definition():
    for M in load_catalog(max_size=3):
        rng = random.Random(M.size)
        for _ in range(40):
            B = random_act(M, rng, 4)
            A = random_subact(B, rng)
            X, Y = random_subset(B, rng), random_subset(B, rng)
            ind = is_independent(IndependenceQuery(B, A, X, Y))
            assert ind == bar_independent_search(B, A, X, Y)
            if ind:
                L1 = generated_subact(B, X) | A
                L2 = generated_subact(B, Y) | A
                assert L1 & L2 <= A


def test_minimal_base_examples(rz3):
    S = regular_act(rz3)
    assert minimal_base(S, {1}, 0) == (1,)
    assert minimal_base(S, {1, 2}, 0) == (1, 2)
    assert minimal_base(S, {1}, 2) == ()
    with pytest.raises(ElementInBase):
        minimal_base(S, {1}, 1)


def test_minimal_base_is_minimum(catalog):
    for M in catalog[:8]:
        rng = random.Random(3)
        for _ in range(20):
            B = random_act(M, rng, 5, min_size=1)
            A = random_subact(B, rng)
            rest = [x for x in range(B.size) if x not in A]
            if not rest:
                continue
            x = rng.choice(rest)
            Z = minimal_base(B, A, x)
            meet = A & B.orbits[x]
            assert set(Z) <= meet and meet <= generated_subact(B, Z)
            assert Z == brute_force_cover(B.orbits, meet)


def test_nonforking_examples(rz3):
    S = regular_act(rz3)
    p = type_rep(S, (0,), [1, 2])
    rec = type_nonforking(p, {1})
    assert not rec.verdict and rec.witness == {2}
    assert type_nonforking(p, {1, 2}).verdict
    C, i1, i2 = coproduct(S, S)
    q = type_rep(C, (i1.map[0],), [i2.map[1]])
    assert type_nonforking(q, ()).verdict
    with pytest.raises(BaseNotContained):
        type_nonforking(type_rep(S, (0,), [1]), {1, 2})


def test_merge_examples(rz3):
    S = regular_act(rz3)
    r = merge_nonforking(0, 0, (), (), S)
    assert all(k == v for k, v in r.as_dict().items())
    with pytest.raises(ForkingDetected) as info:
        merge_nonforking(0, 0, {1}, {1, 2}, S)
    assert info.value.side == "p" and info.value.element == 2
    with pytest.raises(RestrictionsDiffer):
        merge_nonforking(0, 1, (), (), S)


def test_merge_swaps_glued_copies(rz3):
    S = regular_act(rz3)
    _, incl = inclusion(S, {1, 2})
    D, q1, q2 = pushout(incl, incl)
    B = frozenset(q1.map[x] for x in (1, 2))
    r = merge_nonforking(q1.map[0], q2.map[0], B, B, D)
    g = r.as_dict()
    assert g[q1.map[0]] == q2.map[0]
    assert all(g[c] == c for c in B)
    assert types_equal(type_rep(D, (q1.map[0],), sorted(B)), type_rep(D, (q2.map[0],), sorted(B)))


def test_splitting_examples(rz3):
    S = regular_act(rz3)
    p = type_rep(S, (0,), [1, 2])
    assert splits_over(S, p, ())
    N1, N2, h = splitting_witness(S, p, ())
    assert sorted(h.items()) in ([(1, 2)], [(2, 1)], [(1, 2), (2, 1)])
    assert not splits_over(S, p, {1, 2})
    C, i1, i2 = coproduct(S, S)
    q = type_rep(C, (i1.map[0],), [i2.map[1], i2.map[2]])
    assert not splits_over(C, q, ())


def test_nonforking_implies_nonsplitting_exhaustive(rz3):
    for m in range(1, 4):
        from actlab.acts import enumerate_acts
        for N in enumerate_acts(rz3, m):
            for X in subacts(N):
                for b in range(N.size):
                    p = type_rep(N, (b,), sorted(X))
                    for M in subacts(N):
                        if M <= X and type_nonforking(p, M).verdict:
                            assert not splits_over(N, p, M)
