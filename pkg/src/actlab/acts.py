"""Finite left S-acts and their category.

An ``Act`` stores one row per monoid element: ``action[s][x] == s·x``.  Subsets
of a carrier are frozensets of indices.  Quotients are labelled by the least
member of each class, so outputs of ``pushout`` and ``coequalizer`` are stable.
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from . import kernels
from .errors import (
    AssociativityFails,
    IndexOutOfRange,
    InconsistentConstraints,
    MalformedTable,
    MonoidMismatch,
    NotCommutative,
    NotEquivariant,
    NotMono,
    NotSubact,
    ShapeMismatch,
    SourceMismatch,
    TargetMismatch,
    UnitLawFails,
)
from .monoid import generator_levels, maximal_orbit_generators, power_relation


@dataclass(frozen=True)
class Act:
    monoid: object
    size: int
    action: tuple

    @cached_property
    def flat(self):
        return [v for row in self.action for v in row]

    def act(self, s, x):
        return self.action[s][x]

    @property
    def carrier(self):
        return range(self.size)

    def orbit(self, x):
        return frozenset(row[x] for row in self.action)

    @cached_property
    def orbits(self):
        return tuple(self.orbit(x) for x in range(self.size))

    def __repr__(self):
        return f"<Act size={self.size} over {self.monoid!r}>"


@dataclass(frozen=True)
class ActHom:
    source: Act
    target: Act
    map: tuple

    def __call__(self, x):
        return self.map[x]

    def image(self, subset=None):
        xs = range(self.source.size) if subset is None else subset
        return frozenset(self.map[x] for x in xs)

    @property
    def is_injective(self):
        return len(set(self.map)) == len(self.map)

    @property
    def is_surjective(self):
        return len(set(self.map)) == self.target.size

    def then(self, other):
        """``other ∘ self``."""
        if other.source != self.target:
            raise ShapeMismatch("composition of non-composable homomorphisms")
        return ActHom(self.source, other.target, tuple(other.map[y] for y in self.map))


@dataclass(frozen=True)
class CommutativeSquare:
    """``f1: A0→A1, f2: A0→A2, g1: A1→A3, g2: A2→A3`` with g1∘f1 = g2∘f2."""

    f1: ActHom
    f2: ActHom
    g1: ActHom
    g2: ActHom
    checked: bool = field(default=True, compare=False)

    def __post_init__(self):
        if not self.checked:
            return
        if self.f1.source != self.f2.source or self.g1.target != self.g2.target:
            raise ShapeMismatch("square corners do not match")
        if self.f1.target != self.g1.source or self.f2.target != self.g2.source:
            raise ShapeMismatch("square edges are not composable")
        for x in range(self.f1.source.size):
            if self.g1.map[self.f1.map[x]] != self.g2.map[self.f2.map[x]]:
                raise NotCommutative(x)


def validate_act(monoid, action):
    n_s = monoid.size
    try:
        rows = [list(r) for r in action]
    except TypeError:
        raise MalformedTable("action must be a sequence of rows") from None
    if len(rows) != n_s:
        raise MalformedTable(f"expected {n_s} rows (one per monoid element), got {len(rows)}")
    m = len(rows[0]) if rows else 0
    for s, row in enumerate(rows):
        if len(row) != m:
            raise MalformedTable(f"row {s} has {len(row)} entries, expected {m}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < m:
                raise MalformedTable(f"entry {v!r} in row {s} is not in [0, {m})")
    for x in range(m):
        if rows[0][x] != x:
            raise UnitLawFails(x)
    mul = monoid.table
    for s in range(n_s):
        rs = rows[s]
        for t in range(n_s):
            rt = rows[t]
            rst = rows[mul[s][t]]
            for x in range(m):
                if rs[rt[x]] != rst[x]:
                    raise AssociativityFails(s, t, x)
    return Act(monoid, m, tuple(tuple(r) for r in rows))


def _from_flat(monoid, m, flat):
    return Act(monoid, m, tuple(tuple(flat[s * m:(s + 1) * m]) for s in range(monoid.size)))


def regular_act(monoid):
    """S acting on itself by left multiplication."""
    return Act(monoid, monoid.size, monoid.table)


def empty_act(monoid):
    return Act(monoid, 0, tuple(() for _ in range(monoid.size)))


def point_act(monoid):
    return Act(monoid, 1, tuple((0,) for _ in range(monoid.size)))


def make_hom(source, target, mapping):
    """Build an ActHom, checking shape and equivariance."""
    if source.monoid != target.monoid:
        raise MonoidMismatch()
    mp = tuple(mapping)
    if len(mp) != source.size:
        raise ShapeMismatch(f"map has {len(mp)} entries, source has {source.size}")
    for v in mp:
        if not 0 <= v < target.size:
            raise IndexOutOfRange(v, target.size)
    for s in range(source.monoid.size):
        rs, ts = source.action[s], target.action[s]
        for x in range(source.size):
            if mp[rs[x]] != ts[mp[x]]:
                raise NotEquivariant(s, x)
    return ActHom(source, target, mp)


def identity_hom(A):
    return ActHom(A, A, tuple(range(A.size)))


def _check_subset(A, X):
    for x in X:
        if not 0 <= x < A.size:
            raise IndexOutOfRange(x, A.size)


def generated_subact(A, X):
    """``S·X``: the least subact containing ``X``."""
    X = list(X)
    _check_subset(A, X)
    out = set()
    for row in A.action:
        for x in X:
            out.add(row[x])
    return frozenset(out)


def is_subact(A, X):
    return subact_violation(A, X) is None


def subact_violation(A, X):
    X = frozenset(X)
    for s, row in enumerate(A.action):
        for x in sorted(X):
            if row[x] not in X:
                return (s, x)
    return None


def require_subact(A, X, exc=NotSubact):
    bad = subact_violation(A, X)
    if bad is not None:
        raise exc(*bad)


def subacts(A):
    """All subacts (unions of orbits), ordered by size then elements."""
    distinct = sorted(set(A.orbits), key=lambda o: (len(o), sorted(o)))
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for cur in frontier:
            for o in distinct:
                u = cur | o
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(found, key=lambda u: (len(u), sorted(u)))


def min_generators(A, X):
    """Least minimum-size generating set of the subact ``S·X``."""
    closed = generated_subact(A, X)
    return maximal_orbit_generators(A.orbits, closed)


def is_cyclic(A):
    return A.size > 0 and len(min_generators(A, range(A.size))) == 1


def induced(A, subset):
    """The subact on ``subset`` relabelled in increasing order.

    Returns ``(act, labels)`` with ``labels[i]`` the ambient index of ``i``.
    """
    labels = tuple(sorted(subset))
    require_subact(A, labels)
    pos = {x: i for i, x in enumerate(labels)}
    rows = tuple(tuple(pos[row[x]] for x in labels) for row in A.action)
    return Act(A.monoid, len(labels), rows), labels


def inclusion(A, subset):
    """``(sub, hom)``: the induced subact and its inclusion into ``A``."""
    sub, labels = induced(A, subset)
    return sub, ActHom(sub, A, labels)


def enumerate_homs(A, B, constraints=None, injective=False, limit=None):
    """All equivariant maps ``A → B`` extending ``constraints`` (a dict or a
    list with ``-1`` holes), in lexicographic order of the map array."""
    if A.monoid != B.monoid:
        raise MonoidMismatch()
    fixed = [-1] * A.size
    if constraints:
        items = constraints.items() if isinstance(constraints, dict) else enumerate(constraints)
        for x, y in items:
            if y is None or y < 0:
                continue
            if not 0 <= x < A.size:
                raise IndexOutOfRange(x, A.size)
            if not 0 <= y < B.size:
                raise IndexOutOfRange(y, B.size)
            fixed[x] = y
    n_s = A.monoid.size
    start, conflict = kernels.close_partial(A.flat, A.size, B.flat, B.size, n_s, fixed)
    if conflict is not None:
        raise InconsistentConstraints(*conflict)
    lim = -1 if limit is None else limit
    maps = kernels.hom_search(A.flat, A.size, B.flat, B.size, n_s, start, injective, lim)
    return [ActHom(A, B, tuple(m)) for m in maps]


def find_hom(A, B, constraints=None, injective=False):
    """First hom in enumeration order, or None (also None on inconsistency)."""
    try:
        found = enumerate_homs(A, B, constraints, injective=injective, limit=1)
    except InconsistentConstraints:
        return None
    return found[0] if found else None


def extends(B, Q, partial):
    """Is there a hom ``B → Q`` agreeing with the dict ``partial``?"""
    return find_hom(B, Q, partial) is not None


def coproduct(A, B):
    """Tagged disjoint union; ``A`` occupies indices ``0..|A|-1``."""
    if A.monoid != B.monoid:
        raise MonoidMismatch()
    n = A.size
    rows = tuple(ra + tuple(v + n for v in rb) for ra, rb in zip(A.action, B.action))
    C = Act(A.monoid, n + B.size, rows)
    i1 = ActHom(A, C, tuple(range(n)))
    i2 = ActHom(B, C, tuple(range(n, n + B.size)))
    return C, i1, i2


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True


def quotient(A, pairs):
    """Quotient by the act congruence generated by ``pairs``.

    Returns ``(Q, q)``; class ``k`` is the class with the k-th least minimum.
    """
    uf = _UnionFind(A.size)
    todo = list(pairs)
    while todo:
        x, y = todo.pop()
        if uf.union(x, y):
            for row in A.action:
                todo.append((row[x], row[y]))
    reps = sorted({uf.find(x) for x in range(A.size)})
    label = {r: i for i, r in enumerate(reps)}
    q = tuple(label[uf.find(x)] for x in range(A.size))
    rows = tuple(tuple(q[row[r]] for r in reps) for row in A.action)
    Q = Act(A.monoid, len(reps), rows)
    return Q, ActHom(A, Q, q)


def pushout(f1, f2):
    """Pushout of ``A1 ←f1− A0 −f2→ A2``; returns ``(P, q1, q2)``."""
    if f1.source != f2.source:
        raise SourceMismatch("pushout legs must share a source")
    C, i1, i2 = coproduct(f1.target, f2.target)
    pairs = [(i1.map[f1.map[x]], i2.map[f2.map[x]]) for x in range(f1.source.size)]
    P, q = quotient(C, pairs)
    q1 = ActHom(f1.target, P, tuple(q.map[i1.map[x]] for x in range(f1.target.size)))
    q2 = ActHom(f2.target, P, tuple(q.map[i2.map[y]] for y in range(f2.target.size)))
    return P, q1, q2


def pullback(g1, g2):
    """Pullback of ``A1 −g1→ A3 ←g2− A2``; carrier is the sorted list of pairs.

    Returns ``(P, p1, p2, pairs)``.
    """
    if g1.target != g2.target:
        raise TargetMismatch("pullback legs must share a target")
    A1, A2 = g1.source, g2.source
    pairs = [(x, y) for x in range(A1.size) for y in range(A2.size) if g1.map[x] == g2.map[y]]
    pos = {p: i for i, p in enumerate(pairs)}
    rows = tuple(
        tuple(pos[(r1[x], r2[y])] for x, y in pairs)
        for r1, r2 in zip(A1.action, A2.action)
    )
    P = Act(A1.monoid, len(pairs), rows)
    p1 = ActHom(P, A1, tuple(x for x, _ in pairs))
    p2 = ActHom(P, A2, tuple(y for _, y in pairs))
    return P, p1, p2, pairs


def _check_parallel(f, g):
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("equalizer/coequalizer need a parallel pair")


def equalizer(f, g):
    _check_parallel(f, g)
    subset = [x for x in range(f.source.size) if f.map[x] == g.map[x]]
    return inclusion(f.source, subset)


def coequalizer(f, g):
    _check_parallel(f, g)
    return quotient(f.target, [(f.map[x], g.map[x]) for x in range(f.source.size)])


def epi_mono_factorize(h):
    """``h = m ∘ e`` with ``e`` onto the image subact and ``m`` its inclusion."""
    C, m = inclusion(h.target, h.image())
    pos = {y: i for i, y in enumerate(m.map)}
    e = ActHom(h.source, C, tuple(pos[y] for y in h.map))
    return e, m


def require_mono(f):
    seen = {}
    for x, y in enumerate(f.map):
        if y in seen:
            raise NotMono(seen[y], x)
        seen[y] = x


def disjoint_amalgam(i1, i2):
    """Amalgamate two monos out of ``A``; realised as their pushout."""
    require_mono(i1)
    require_mono(i2)
    return pushout(i1, i2)


def induced_map_from_pushout(square, P, q1, q2):
    """The comparison ``P → A3`` for a commutative square and the pushout of
    its first two legs."""
    k = [-1] * P.size
    for x in range(square.g1.source.size):
        k[q1.map[x]] = square.g1.map[x]
    for y in range(square.g2.source.size):
        v = square.g2.map[y]
        if k[q2.map[y]] not in (-1, v):
            raise NotCommutative(y)
        k[q2.map[y]] = v
    return ActHom(P, square.g1.target, tuple(k))


# --- enumeration -----------------------------------------------------------


def canonical_form(A):
    table, _ = kernels.canonical_table(A.flat, A.monoid.size, A.size)
    return (A.size, tuple(table))


def canonical_relabel(A):
    """Isomorphic copy of ``A`` in canonical labelling, with the iso ``A → copy``."""
    table, perm = kernels.canonical_table(A.flat, A.monoid.size, A.size)
    C = _from_flat(A.monoid, A.size, table)
    return C, ActHom(A, C, tuple(perm))


def are_isomorphic(A, B):
    return A.monoid == B.monoid and canonical_form(A) == canonical_form(B)


def _generator_candidates(monoid, m):
    gens, _ = generator_levels(monoid)
    maps = kernels.all_maps(m)
    out = []
    for g in gens:
        k, j = power_relation(monoid, g)
        keep = []
        for f in maps:
            p = list(range(m))
            powers = [tuple(p)]
            for _ in range(k):
                p = [f[v] for v in p]
                powers.append(tuple(p))
            if powers[k] == powers[j]:
                keep.append(f)
        out.append(keep)
    return out


@lru_cache(maxsize=None)
def labelled_act_tables(monoid, m):
    gens, levels = generator_levels(monoid)
    cands = _generator_candidates(monoid, m)
    return kernels.transformation_homs(monoid.flat, monoid.size, m, list(gens),
                                       [list(lv) for lv in levels], cands)


@lru_cache(maxsize=None)
def enumerate_acts(monoid, m):
    """Every act of size ``m`` up to isomorphism, in canonical labelling,
    sorted by canonical table."""
    if m == 0:
        return (empty_act(monoid),)
    seen = set()
    for table in labelled_act_tables(monoid, m):
        can, _ = kernels.canonical_table(table, monoid.size, m)
        seen.add(tuple(can))
    return tuple(_from_flat(monoid, m, list(t)) for t in sorted(seen))


def acts_up_to(monoid, max_size, include_empty=True):
    out = []
    for m in range(0 if include_empty else 1, max_size + 1):
        out.extend(enumerate_acts(monoid, m))
    return out


def _set_partitions(n):
    """Restricted growth strings of length ``n``."""
    if n == 0:
        yield ()
        return
    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from rec(prefix, max(top, b))
            prefix.pop()
    yield from rec([0], 0)


@lru_cache(maxsize=None)
def left_congruences(monoid):
    """Every left-act congruence on S, as a block-label tuple."""
    mul = monoid.table
    out = []
    for rgs in _set_partitions(monoid.size):
        ok = True
        for s in range(monoid.size):
            for t in range(s + 1, monoid.size):
                if rgs[s] != rgs[t]:
                    continue
                for u in range(monoid.size):
                    if rgs[mul[u][s]] != rgs[mul[u][t]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(rgs)
    return tuple(out)


@lru_cache(maxsize=None)
def cyclic_acts(monoid):
    """Every cyclic act up to isomorphism, as quotients ``S/ρ`` of the regular
    act.  Each entry is ``(act, projection S → act)`` with ``act`` generated
    by the image of the identity."""
    S = regular_act(monoid)
    out = []
    seen = set()
    for rgs in left_congruences(monoid):
        pairs = [(s, t) for s in range(monoid.size) for t in range(s + 1, monoid.size)
                 if rgs[s] == rgs[t]]
        Q, q = quotient(S, pairs)
        key = canonical_form(Q)
        if key in seen:
            continue
        seen.add(key)
        out.append((Q, q))
    out.sort(key=lambda e: (e[0].size, canonical_form(e[0])))
    return tuple(out)


def is_mono_categorical(f, probe_acts):
    """Left-cancellability of ``f`` against homs out of each probe act."""
    for T in probe_acts:
        homs = enumerate_homs(T, f.source)
        images = {}
        for h in homs:
            key = tuple(f.map[v] for v in h.map)
            if key in images and images[key] != h.map:
                return False
            images[key] = h.map
    return True


def is_epi_categorical(f, probe_acts):
    """Right-cancellability of ``f`` against homs into each probe act."""
    for T in probe_acts:
        homs = enumerate_homs(f.target, T)
        images = {}
        for h in homs:
            key = tuple(h.map[f.map[x]] for x in range(f.source.size))
            if key in images and images[key] != h.map:
                return False
            images[key] = h.map
    return True
