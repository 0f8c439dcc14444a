"""Independent brute-force checks.

Each function recomputes a property by exhaustive search, sharing no code
path with the operation it audits.  Used by the test suites and ``selftest``.
"""

from itertools import combinations, permutations, product

from .acts import Act, enumerate_acts, subacts


def brute_force_cover(orbits, subset):
    """Least minimum set ``G ⊆ subset`` with ``⋃ orbits[g] == subset``."""
    target = frozenset(subset)
    items = sorted(target)
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            covered = set()
            for c in combo:
                covered |= orbits[c]
            if covered == target:
                return combo
    return None


def _components(n, edges):
    adj = [[] for _ in range(n)]
    for x, y in edges:
        adj[x].append(y)
        adj[y].append(x)
    comp = [-1] * n
    for start in range(n):
        if comp[start] != -1:
            continue
        comp[start] = start
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if comp[w] == -1:
                    comp[w] = start
                    stack.append(w)
    return comp


def is_pushout_setwise(f1, f2, q1, q2):
    """Is ``(q1, q2)`` a pushout of ``(f1, f2)``?

    Colimits of acts are computed on underlying sets, so it suffices that the
    cocone commutes, is jointly onto, and identifies exactly the pairs
    connected by ``f1(x) ~ f2(x)`` edges.
    """
    n1 = f1.target.size
    n = n1 + f2.target.size
    for x in range(f1.source.size):
        if q1.map[f1.map[x]] != q2.map[f2.map[x]]:
            return False
    if set(q1.map) | set(q2.map) != set(range(q1.target.size)):
        return False
    comp = _components(n, [(f1.map[x], n1 + f2.map[x]) for x in range(f1.source.size)])
    value = list(q1.map) + list(q2.map)
    for u in range(n):
        for v in range(u + 1, n):
            if (comp[u] == comp[v]) != (value[u] == value[v]):
                return False
    return True


def brute_force_types_equal(p, q):
    """Search all bijections between the two cores for an equivariant one
    sending the tuple to the tuple and fixing parameters (matched by label)."""
    A, B = p.ambient, q.ambient
    core1, core2 = sorted(p.core), sorted(q.core)
    if len(core1) != len(core2) or len(p.tuple) != len(q.tuple):
        return False
    qmap = q.label_map()
    pinned = list(zip(p.tuple, q.tuple))
    pinned += [(x, qmap[lab]) for x, lab in zip(p.params, p.labels)]
    for perm in permutations(core2):
        f = dict(zip(core1, perm))
        if any(f[x] != y for x, y in pinned):
            continue
        if all(f[A.action[s][d]] == B.action[s][f[d]]
               for s in range(A.monoid.size) for d in core1):
            return True
    return False


def bar_independent_search(B, base, X, Y):
    """Search subacts ``M1 ⊇ X ∪ base``, ``M2 ⊇ Y ∪ base`` of ``B`` whose
    intersection lies in ``base`` (the ambient itself serves as ``M3``)."""
    base, X, Y = frozenset(base), frozenset(X), frozenset(Y)
    subs = subacts(B)
    left = [s for s in subs if X | base <= s]
    right = [s for s in subs if Y | base <= s]
    return any(m1 & m2 <= base for m1 in left for m2 in right)


def _extends(B, Q, partial):
    """Brute force over all maps ``B → Q`` agreeing with ``partial``."""
    free = [b for b in range(B.size) if b not in partial]
    for vals in product(range(Q.size), repeat=len(free)):
        g = dict(partial)
        g.update(zip(free, vals))
        if all(g[B.action[s][b]] == Q.action[s][g[b]]
               for s in range(B.monoid.size) for b in range(B.size)):
            return True
    return False


def _all_homs(A, Q):
    out = []
    for vals in product(range(Q.size), repeat=A.size):
        if all(vals[A.action[s][a]] == Q.action[s][vals[a]]
               for s in range(A.monoid.size) for a in range(A.size)):
            out.append(vals)
    return out


def injective_up_to(Q, bound):
    """Direct definition of injectivity restricted to inclusions ``A ≤ B``
    with ``|B| ≤ bound`` (including ``A = ∅``)."""
    for m in range(1, bound + 1):
        for B in enumerate_acts(Q.monoid, m):
            for A in subacts(B):
                labels = sorted(A)
                pos = {x: i for i, x in enumerate(labels)}
                sub_rows = [[pos[row[x]] for x in labels] for row in B.action]

                sub = Act(B.monoid, len(labels), tuple(tuple(r) for r in sub_rows))
                for u in _all_homs(sub, Q):
                    if not _extends(B, Q, dict(zip(labels, u))):
                        return False
    return True


def count_homs(A, B):
    return len(_all_homs(A, B))
