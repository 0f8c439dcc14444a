"""Seeded random instances for the property suites.

Random acts are grown from the empty act by attaching random cells (a
subact ``A`` of a cyclic act ``B`` glued along a random hom ``A → K``).
Every finite act arises this way, so the generator reaches all acts.
"""

import random

from .acts import (
    Act,
    ActHom,
    cyclic_acts,
    empty_act,
    enumerate_homs,
    generated_subact,
    induced,
    inclusion,
    subacts,
)


def make_rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def attach_cell(K, B, partial):
    """Glue ``B`` onto ``K`` along the hom ``partial`` (dict on a subact of
    ``B``).  New elements are appended; returns the enlarged act."""
    rows = [list(r) for r in K.action]
    size = K.size
    idx = []
    for b in range(B.size):
        if b in partial:
            idx.append(partial[b])
        else:
            idx.append(size)
            size += 1
    for s, row in enumerate(rows):
        for b in range(B.size):
            if b not in partial:
                row.append(idx[B.action[s][b]])
    return Act(K.monoid, size, tuple(tuple(r) for r in rows))


def random_cell_attachment(K, rng, room):
    """Attach one random cell adding at most ``room`` new elements, or
    return ``K`` unchanged when no cell fits."""
    options = []
    for B, _ in cyclic_acts(K.monoid):
        for A in subacts(B):
            if len(A) < B.size and B.size - len(A) <= room and (K.size or not A):
                options.append((B, A))
    if not options:
        return K
    B, A = rng.choice(options)
    sub, labels = induced(B, A)
    homs = enumerate_homs(sub, K, limit=64)
    if not homs:
        return K
    u = rng.choice(homs)
    return attach_cell(K, B, dict(zip(labels, u.map)))


def extend_act(K, rng, extra):
    """Grow ``K`` by random cells until about ``extra`` elements were added."""
    target = K.size + extra
    stuck = 0
    while K.size < target and stuck < 32:
        K2 = random_cell_attachment(K, rng, target - K.size)
        stuck = stuck + 1 if K2 is K else 0
        K = K2
    return K


def shuffle_act(A, rng):
    """A random relabelling of ``A`` and the iso ``A → copy``."""
    perm = list(range(A.size))
    rng.shuffle(perm)
    rows = [[0] * A.size for _ in range(A.monoid.size)]
    for s, row in enumerate(A.action):
        for x in range(A.size):
            rows[s][perm[x]] = perm[row[x]]
    C = Act(A.monoid, A.size, tuple(tuple(r) for r in rows))
    return C, ActHom(A, C, tuple(perm))


def random_act(monoid, rng, max_size, min_size=0):
    size = rng.randint(min_size, max_size)
    A = extend_act(empty_act(monoid), rng, size)
    return shuffle_act(A, rng)[0]


def random_subset(A, rng, p=0.35):
    return frozenset(x for x in range(A.size) if rng.random() < p)


def random_subact(A, rng, p=0.3):
    return generated_subact(A, random_subset(A, rng, p))


def random_subact_between(A, lower, rng, p=0.3):
    return generated_subact(A, set(lower) | random_subset(A, rng, p))


def random_mono_into(A3, rng, p=0.4):
    """A random subact of ``A3`` presented as an abstract act with a mono."""
    X = random_subact(A3, rng, p)
    sub, incl = inclusion(A3, X)
    C, iso = shuffle_act(sub, rng)
    inv = [0] * C.size
    for x, y in enumerate(iso.map):
        inv[y] = x
    return ActHom(C, A3, tuple(incl.map[inv[c]] for c in range(C.size)))


def random_mono_from(A, rng, extra):
    """A random mono ``A → L`` with ``|L| ≤ |A| + extra``."""
    L = extend_act(A, rng, extra)
    C, iso = shuffle_act(L, rng)
    return ActHom(A, C, tuple(iso.map[x] for x in range(A.size)))


def pick_monoid(monoids, rng):
    return monoids[rng.randrange(len(monoids))]
