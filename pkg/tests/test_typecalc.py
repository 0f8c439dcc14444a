import random

import pytest

from actlab.acts import coproduct, enumerate_acts, regular_act
from actlab.errors import IndexOutOfRange, MonoidMismatch, NotASubset, ParamMismatch, TupleLengthMismatch
from actlab.fileio import catalog_monoid, load_catalog
from actlab.oracles import brute_force_types_equal
from actlab.sampling import random_act
from actlab.typecalc import restrict_type, type_equality_witness, type_rep, types_equal


def test_type_rep_examples(rz3):
    S = regular_act(rz3)
    assert type_rep(S, ()).core == frozenset()
    p = type_rep(S, (1,))
    assert p.core == {1} and p.core_act.action == ((0,), (0,), (0,))
    assert type_rep(S, (0,)).core == {0, 1, 2}
    with pytest.raises(IndexOutOfRange):
        type_rep(S, (3,))


def test_types_equal_examples(rz3):
    S = regular_act(rz3)
    C, i1, i2 = coproduct(S, S)
    p = type_rep(C, (i1.map[1],))
    assert types_equal(p, p)
    assert types_equal(p, type_rep(C, (i2.map[1],)))
    w = type_equality_witness(type_rep(S, (0,)), type_rep(S, (1,)))
    assert not w["equal"]
    assert types_equal(type_rep(S, (1,)), type_rep(S, (2,)))
    assert not types_equal(type_rep(S, (1,), [1]), type_rep(S, (2,), [1]))


def test_violation_names_an_equation(rz3):
    S = regular_act(rz3)
    w = type_equality_witness(type_rep(S, (0,)), type_rep(S, (1,)))
    eq = w["equation"]
    s, i = eq["lhs"]
    t, j = eq["rhs"]
    g1, g2 = eq["generators"]["left"], eq["generators"]["right"]
    left = (S.action[s][g1[i]] == S.action[t][g1[j]])
    right = (S.action[s][g2[i]] == S.action[t][g2[j]])
    assert left != right


def test_errors(rz3):
    S = regular_act(rz3)
    z2 = regular_act(catalog_monoid("z2"))
    with pytest.raises(MonoidMismatch):
        types_equal(type_rep(S, (0,)), type_rep(z2, (0,)))
    with pytest.raises(TupleLengthMismatch):
        types_equal(type_rep(S, (0,)), type_rep(S, (0, 1)))
    with pytest.raises(ParamMismatch):
        types_equal(type_rep(S, (0,), [1]), type_rep(S, (0,), [2]))
    with pytest.raises(ParamMismatch):
        type_rep(S, (0,), [1], labels=["x", "y"])


def test_labels_align_across_ambients(rz3):
    S = regular_act(rz3)
    C, i1, i2 = coproduct(S, S)
    p = type_rep(C, (i1.map[0],), [i1.map[1]], labels=["a"])
    q = type_rep(S, (0,), [1], labels=["a"])
    assert types_equal(p, q)


def test_restrict(rz3):
    S = regular_act(rz3)
    p = type_rep(S, (0,), [1, 2])
    assert restrict_type(p, [1, 2]) == p
    assert restrict_type(p, []) == type_rep(S, (0,))
    assert restrict_type(restrict_type(p, [1]), []) == restrict_type(p, [])
    with pytest.raises(NotASubset):
        restrict_type(p, [0])


def test_oracle_agreement_exhaustive():
    for M in load_catalog(max_size=3):
        for m in range(1, 4):
            for N in enumerate_acts(M, m):
                for b1 in range(m):
                    for b2 in range(m):
                        for X in ([], [0], [m - 1]):
                            p, q = type_rep(N, (b1,), X), type_rep(N, (b2,), X)
                            assert types_equal(p, q) == brute_force_types_equal(p, q)


def test_equivalence_relation_and_summand_invariance():
    rng = random.Random(11)
    monoids = load_catalog(max_size=4)
    for _ in range(150):
        M = rng.choice(monoids)
        N = random_act(M, rng, 5, min_size=1)
        X = [x for x in range(N.size) if rng.random() < 0.2]
        reps = [type_rep(N, (rng.randrange(N.size),), X) for _ in range(3)]
        p, q, r = reps
        assert types_equal(p, p)
        assert types_equal(p, q) == types_equal(q, p)
        if types_equal(p, q) and types_equal(q, r):
            assert types_equal(p, r)
        extra = random_act(M, rng, 3)
        big, i1, _ = coproduct(N, extra)
        lifted = type_rep(big, tuple(i1.map[x] for x in p.tuple), [i1.map[x] for x in X], labels=X)
        assert types_equal(p, lifted)
