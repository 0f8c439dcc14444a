"""Pure-Python search kernels.

These mirror ``_speedups.pyx`` function for function and are used when the
compiled module is unavailable (or ``ACTLAB_PURE_PYTHON=1``).  All tables are
flat lists: an action of an ``n_s``-element monoid on ``n`` points is stored
row-major, ``table[s * n + x] == s·x``.
"""

from itertools import permutations


def close_partial(src, ns, tgt, nt, n_s, fixed):
    """Propagate a partial map along the action.

    Returns ``(closed_map, None)`` or ``(None, (element, wanted, forced))`` when
    the constraints already contradict equivariance.
    """
    m = [-1] * ns
    for x in range(ns):
        y = fixed[x]
        if y < 0:
            continue
        for s in range(n_s):
            z = src[s * ns + x]
            w = tgt[s * nt + y]
            cur = m[z]
            if cur == -1:
                m[z] = w
            elif cur != w:
                return None, (z, cur, w)
    return m, None


def hom_search(src, ns, tgt, nt, n_s, start, injective, limit):
    """All equivariant maps extending the closed partial map ``start``.

    Elements are visited in index order and candidate images in index order,
    so results come out in lexicographic order.  ``limit < 0`` means no limit.
    """
    m = list(start)
    used = [0] * nt
    if injective:
        for v in m:
            if v >= 0:
                used[v] += 1
                if used[v] > 1:
                    return []
    out = []

    def assign(x, y, trail):
        for s in range(n_s):
            z = src[s * ns + x]
            w = tgt[s * nt + y]
            cur = m[z]
            if cur == -1:
                if injective:
                    if used[w]:
                        return False
                    used[w] = 1
                m[z] = w
                trail.append(z)
            elif cur != w:
                return False
        return True

    def undo(trail):
        for z in trail:
            if injective:
                used[m[z]] = 0
            m[z] = -1

    def dfs(x):
        while x < ns and m[x] != -1:
            x += 1
        if x == ns:
            out.append(list(m))
            return 0 <= limit <= len(out)
        for y in range(nt):
            trail = []
            ok = assign(x, y, trail)
            if ok and dfs(x + 1):
                undo(trail)
                return True
            undo(trail)
        return False

    dfs(0)
    return out


def transformation_homs(mul, n_s, m, gens, levels, cands):
    """All monoid homomorphisms S -> T_m, i.e. every action of S on m points.

    ``gens`` lists monoid generators.  ``levels[i]`` lists, for the
    submonoid generated by ``gens[:i+1]``, triples ``(elem, prefix, gen_pos)``
    with ``elem == prefix * gens[gen_pos]`` in BFS order, excluding the
    identity.  ``cands[i]`` holds the transformations worth trying for
    ``gens[i]``.  Returns flat action tables (row 0 is the identity map).
    """
    ident = tuple(range(m))
    act = [None] * n_s
    act[0] = ident
    out = []

    def compose(f, g):
        # (f ∘ g)(x) = f(g(x)): left action, so act[s*t] = act[s] ∘ act[t]
        return tuple(f[g[x]] for x in range(m))

    def consistent(level):
        known = [e for e, _, _ in levels[level]] + [0]
        for e, prefix, gp in levels[level]:
            act[e] = compose(act[prefix], act[gens[gp]]) if e != gens[gp] else act[e]
        for s in known:
            fs = act[s]
            row = mul[s * n_s: (s + 1) * n_s]
            for t in known:
                if compose(fs, act[t]) != act[row[t]]:
                    return False
        return True

    def dfs(level):
        if level == len(gens):
            table = []
            for s in range(n_s):
                table.extend(act[s])
            out.append(table)
            return
        g = gens[level]
        for f in cands[level]:
            act[g] = f
            if consistent(level):
                dfs(level + 1)
        act[g] = None

    if not gens:
        out.append(list(ident))
        return out
    dfs(0)
    return out


def all_maps(m):
    maps = [()]
    for _ in range(m):
        maps = [f + (v,) for f in maps for v in range(m)]
    return maps


def canonical_table(table, n_s, m):
    """Lexicographically least relabeling of an action table, with the
    permutation achieving it (``perm[old] == new``)."""
    best = None
    best_perm = None
    for inv in permutations(range(m)):
        perm = [0] * m
        for new, old in enumerate(inv):
            perm[old] = new
        cand = []
        worse = False
        better = best is None
        for s in range(n_s):
            base = s * m
            for new in range(m):
                v = perm[table[base + inv[new]]]
                if not better:
                    b = best[len(cand)]
                    if v > b:
                        worse = True
                        break
                    if v < b:
                        better = True
                cand.append(v)
            if worse:
                break
        if worse or not better:
            continue
        best = cand
        best_perm = perm
    if best is None:
        best, best_perm = list(table), list(range(m))
    return best, best_perm
