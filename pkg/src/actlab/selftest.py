"""Randomized invariant suites with size-based shrinking.

Each property draws an instance from a seeded generator at a given size
bound and returns None on success or a JSON-able description of the failure.
On failure the runner retries at every smaller size and reports the smallest
failing instance it finds.

The ``mutate`` hook swaps a library operation for a deliberately broken one,
so the harness itself can be checked: a corrupted pushout must be caught.
"""

import random
from dataclasses import dataclass, field

from . import acts as _acts
from .acts import (
    CommutativeSquare,
    coproduct,
    cyclic_acts,
    enumerate_homs,
    find_hom,
    pullback,
    subacts,
)
from .errors import ActlabError
from .fileio import load_catalog
from .independence import IndependenceQuery, is_independent, square_is_independent
from .injectivity import is_n_injective, is_weakly_injective
from .monoid import all_left_ideals, generation_degree, left_orbit
from .oracles import brute_force_cover, brute_force_types_equal, is_pushout_setwise
from .sampling import (
    pick_monoid,
    random_act,
    random_mono_from,
    random_mono_into,
    random_subact,
    random_subact_between,
    random_subset,
)
from .saturation import cellular_factorize, chain_problems, som_step
from .typecalc import type_rep, types_equal


def _table(A):
    return [list(r) for r in A.action]


def _corrupt_pushout(f1, f2):
    """A pushout that forgets to glue the last element of the apex."""
    C, i1, i2 = coproduct(f1.target, f2.target)
    pairs = [(i1.map[f1.map[x]], i2.map[f2.map[x]]) for x in range(f1.source.size)][:-1]
    P, q = _acts.quotient(C, pairs)
    q1 = _acts.ActHom(f1.target, P, tuple(q.map[i1.map[x]] for x in range(f1.target.size)))
    q2 = _acts.ActHom(f2.target, P, tuple(q.map[i2.map[y]] for y in range(f2.target.size)))
    return P, q1, q2


MUTATIONS = {"pushout": {"pushout": _corrupt_pushout}}


@dataclass
class Ops:
    pushout: object = field(default=_acts.pushout)


# --- properties ------------------------------------------------------------


def prop_ideal_generators(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    orbits = [left_orbit(M, a) for a in range(M.size)]
    for ideal in all_left_ideals(M):
        want = brute_force_cover(orbits, ideal.elements)
        if ideal.min_generators != want:
            return {"monoid": M.name, "ideal": ideal.sorted(),
                    "got": list(ideal.min_generators), "want": list(want)}
    return None


def _random_span(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    A0 = random_act(M, rng, max(size // 2, 0))
    f1 = random_mono_from(A0, rng, rng.randint(0, size - A0.size))
    A2 = random_act(M, rng, size - A0.size)
    homs = enumerate_homs(A0, A2, limit=16)
    if homs:
        f2 = rng.choice(homs)
    else:
        f2 = random_mono_from(A0, rng, rng.randint(0, size - A0.size))
    return f1, f2


def prop_pushout(ops, rng, size, monoids):
    f1, f2 = _random_span(ops, rng, size, monoids)
    P, q1, q2 = ops.pushout(f1, f2)
    if not is_pushout_setwise(f1, f2, q1, q2):
        return {"A0": _table(f1.source), "f1": list(f1.map), "f2": list(f2.map),
                "A1": _table(f1.target), "A2": _table(f2.target)}
    return None


def prop_effective_unions(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    A3 = random_act(M, rng, size)
    g1, g2 = random_mono_into(A3, rng), random_mono_into(A3, rng)
    _, p1, p2, _ = pullback(g1, g2)
    P, q1, q2 = ops.pushout(p1, p2)
    sq = CommutativeSquare(p1, p2, g1, g2)
    k = _acts.induced_map_from_pushout(sq, P, q1, q2)
    if not k.is_injective:
        return {"A3": _table(A3), "g1": list(g1.map), "g2": list(g2.map)}
    return None


def prop_types_oracle(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    N = random_act(M, rng, size, min_size=1)
    X = sorted(random_subset(N, rng, 0.2))
    b1, b2 = rng.randrange(N.size), rng.randrange(N.size)
    p, q = type_rep(N, (b1,), X), type_rep(N, (b2,), X)
    if len(p.core) > 6 or len(q.core) > 6:
        return None
    if types_equal(p, q) != brute_force_types_equal(p, q):
        return {"N": _table(N), "tuples": [b1, b2], "params": X}
    return None


def _query(rng, size, monoids):
    M = pick_monoid(monoids, rng)
    B = random_act(M, rng, size)
    A = random_subact(B, rng, 0.2)
    return B, A, random_subset(B, rng), random_subset(B, rng)


def prop_symmetry(ops, rng, size, monoids):
    B, A, X, Y = _query(rng, size, monoids)
    if is_independent(IndependenceQuery(B, A, X, Y)) != is_independent(IndependenceQuery(B, A, Y, X)):
        return {"B": _table(B), "A": sorted(A), "X": sorted(X), "Y": sorted(Y)}
    return None


def prop_monotonicity(ops, rng, size, monoids):
    B, A, X, Y = _query(rng, size, monoids)
    if not is_independent(IndependenceQuery(B, A, X, Y)):
        return None
    A2 = random_subact_between(B, A, rng, 0.2)
    X2 = frozenset(x for x in X if rng.random() < 0.7)
    Y2 = frozenset(y for y in Y if rng.random() < 0.7)
    if not is_independent(IndependenceQuery(B, A2, X2, Y2)):
        return {"B": _table(B), "A": sorted(A), "A2": sorted(A2), "X": sorted(X2), "Y": sorted(Y2)}
    return None


def prop_transitivity(ops, rng, size, monoids):
    B, A, X, Y = _query(rng, size, monoids)
    A2 = random_subact_between(B, A, rng, 0.25)
    if (is_independent(IndependenceQuery(B, A, X, A2))
            and is_independent(IndependenceQuery(B, A2, X, Y))
            and not is_independent(IndependenceQuery(B, A, X, Y))):
        return {"B": _table(B), "A": sorted(A), "A2": sorted(A2), "X": sorted(X), "Y": sorted(Y)}
    return None


def prop_existence(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    A = random_act(M, rng, max(size // 2, 0))
    i1 = random_mono_from(A, rng, rng.randint(0, size - A.size))
    i2 = random_mono_from(A, rng, rng.randint(0, size - A.size))
    _, q1, q2 = ops.pushout(i1, i2)
    sq = CommutativeSquare(i1, i2, q1, q2)
    if not (q1.is_injective and q2.is_injective) or not square_is_independent(sq):
        return {"A": _table(A), "i1": list(i1.map), "i2": list(i2.map)}
    return None


def prop_cyclic_subacts(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    g = generation_degree(M)
    for B, _ in cyclic_acts(M):
        for A in subacts(B):
            if len(_acts.min_generators(B, A)) > g:
                return {"monoid": M.name, "B": _table(B), "A": sorted(A)}
    return None


def prop_cellular(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    K = random_act(M, rng, size)
    f = random_mono_from(K, rng, rng.randint(0, max(size - K.size, 0)))
    problems = chain_problems(cellular_factorize(f))
    if problems:
        return {"K": _table(K), "L": _table(f.target), "map": list(f.map), "problems": problems}
    return None


def prop_som_extension(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    K = random_act(M, rng, min(size, 3))
    step = som_step(K)
    for cell in step.cells:
        B = cyclic_acts(M)[cell.cyclic_index][0]
        partial = {b: step.leg.map[v] for b, v in cell.hom.items()}
        if find_hom(B, step.result, partial) is None:
            return {"K": _table(K), "cell": cell.cyclic_index, "attaching": sorted(cell.attaching)}
    if not step.leg.is_injective:
        return {"K": _table(K), "problem": "leg is not injective"}
    return None


def prop_weak_vs_g(ops, rng, size, monoids):
    M = pick_monoid(monoids, rng)
    Q = random_act(M, rng, size)
    g = generation_degree(M)
    if bool(is_weakly_injective(Q)) != bool(is_n_injective(Q, g)):
        return {"monoid": M.name, "Q": _table(Q)}
    return None


PROPERTIES = {
    "ideal-generators-minimum": prop_ideal_generators,
    "pushout-universal-property": prop_pushout,
    "effective-unions": prop_effective_unions,
    "types-equal-matches-bijection-search": prop_types_oracle,
    "independence-symmetry": prop_symmetry,
    "independence-monotonicity": prop_monotonicity,
    "independence-transitivity": prop_transitivity,
    "independence-existence": prop_existence,
    "cyclic-subact-generators": prop_cyclic_subacts,
    "cellular-chain-valid": prop_cellular,
    "som-step-extends-cells": prop_som_extension,
    "weak-iff-g-injective": prop_weak_vs_g,
}


@dataclass
class SuiteResult:
    name: str
    instances: int
    counterexample: dict = None
    size: int = None

    @property
    def passed(self):
        return self.counterexample is None

    def to_json(self):
        out = {"passed": self.passed, "instances": self.instances}
        if not self.passed:
            out["counterexample"] = self.counterexample
            out["size"] = self.size
        return out


def _rng(seed, name, size, trial):
    return random.Random(f"{seed}/{name}/{size}/{trial}")


def _check(prop, ops, rng, size, monoids):
    try:
        return prop(ops, rng, size, monoids)
    except ActlabError as exc:
        return {"raised": type(exc).__name__, "message": str(exc)}


def run_property(name, prop, seed, size, trials, monoids, ops):
    for t in range(trials):
        cex = _check(prop, ops, _rng(seed, name, size, t), size, monoids)
        if cex is not None:
            best, best_size = cex, size
            for smaller in range(size - 1, -1, -1):
                found = None
                for t2 in range(trials):
                    found = _check(prop, ops, _rng(seed, name, smaller, t2), smaller, monoids)
                    if found is not None:
                        break
                if found is None:
                    break
                best, best_size = found, smaller
            return SuiteResult(name, t + 1, best, best_size)
    return SuiteResult(name, trials)


def run_selftest(seed=0, sizes=4, trials=40, mutate=None, only=None, max_monoid=4):
    """Run every property; ``sizes`` bounds act sizes (0 runs nothing)."""
    ops = Ops()
    if mutate:
        for attr, fn in MUTATIONS[mutate].items():
            setattr(ops, attr, fn)
    monoids = load_catalog(max_size=max_monoid)
    results = []
    for name, prop in PROPERTIES.items():
        if only and name not in only:
            continue
        if sizes <= 0:
            results.append(SuiteResult(name, 0))
            continue
        results.append(run_property(name, prop, seed, sizes, trials, monoids, ops))
    return results
