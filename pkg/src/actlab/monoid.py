"""Finite monoids given by multiplication tables.

Element 0 is always the identity.  Left ideals are the subsets ``I`` with
``S·I ⊆ I``; the empty set counts as one (with zero generators).
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import IdentityLawFails, IndexOutOfRange, MalformedTable, NotAssociative


@dataclass(frozen=True)
class Monoid:
    size: int
    table: tuple
    name: str = field(default="", compare=False)

    identity = 0

    def mul(self, s, t):
        return self.table[s][t]

    @cached_property
    def flat(self):
        return [v for row in self.table for v in row]

    @property
    def elements(self):
        return range(self.size)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Monoid{label} size={self.size}>"


@dataclass(frozen=True)
class LeftIdeal:
    elements: frozenset
    min_generators: tuple

    @property
    def generator_count(self):
        return len(self.min_generators)

    def sorted(self):
        return tuple(sorted(self.elements))


def validate_monoid(table, name=""):
    """Check shape, identity at index 0, and associativity; return a Monoid."""
    try:
        rows = [list(r) for r in table]
    except TypeError:
        raise MalformedTable("table must be a sequence of rows") from None
    n = len(rows)
    if n == 0:
        raise MalformedTable("a monoid has at least one element")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTable(f"entry {v!r} in row {i} is not in [0, {n})")
    for s in range(n):
        if rows[0][s] != s or rows[s][0] != s:
            raise IdentityLawFails(s)
    for s in range(n):
        rs = rows[s]
        for t in range(n):
            st = rs[t]
            rt = rows[t]
            for u in range(n):
                if rows[st][u] != rs[rt[u]]:
                    raise NotAssociative(s, t, u)
    return Monoid(n, tuple(tuple(r) for r in rows), name)


def _check_index(M, a):
    if not 0 <= a < M.size:
        raise IndexOutOfRange(a, M.size)


def left_orbit(M, a):
    return frozenset(M.table[s][a] for s in range(M.size))


def principal_ideal(M, a):
    _check_index(M, a)
    return LeftIdeal(left_orbit(M, a), (a,))


def maximal_orbit_generators(orbits, subset):
    """Least minimum generating set of a closed ``subset``.

    ``orbits[y]`` is the orbit ``S·y``.  A minimum generating set takes one
    element from each class of elements with equal, inclusion-maximal orbit;
    taking the least index of each class gives the lexicographically least.
    """
    subset = sorted(subset)
    gens = []
    for y in subset:
        oy = orbits[y]
        dominated = False
        for z in subset:
            oz = orbits[z]
            if oy < oz or (oy == oz and z < y):
                dominated = True
                break
        if not dominated:
            gens.append(y)
    return tuple(gens)


@lru_cache(maxsize=None)
def all_left_ideals(M):
    """Every left ideal, ordered by size then by sorted elements."""
    orbits = [left_orbit(M, a) for a in range(M.size)]
    distinct = sorted(set(orbits), key=lambda o: (len(o), sorted(o)))
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for ideal in frontier:
            for o in distinct:
                u = ideal | o
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    ordered = sorted(found, key=lambda i: (len(i), sorted(i)))
    return tuple(LeftIdeal(i, maximal_orbit_generators(orbits, i)) for i in ordered)


def generation_degree(M):
    return max(i.generator_count for i in all_left_ideals(M))


def right_reversible(M):
    orbits = [left_orbit(M, a) for a in range(M.size)]
    return all(orbits[t] & orbits[r] for t in range(M.size) for r in range(M.size))


def reversibility_witness(M):
    """First pair ``(t, r)`` with ``St ∩ Sr`` empty, or None."""
    orbits = [left_orbit(M, a) for a in range(M.size)]
    for t in range(M.size):
        for r in range(M.size):
            if not orbits[t] & orbits[r]:
                return (t, r)
    return None


def is_commutative(M):
    return all(M.table[s][t] == M.table[t][s] for s in range(M.size) for t in range(s))


def is_group(M):
    return all(0 in M.table[s] for s in range(M.size))


@lru_cache(maxsize=None)
def generator_levels(M):
    """Monoid generators chosen greedily in index order, plus, per prefix of
    the generator list, a BFS derivation of the generated submonoid."""
    gens = []
    sub = {0}
    for s in range(1, M.size):
        if s not in sub:
            gens.append(s)
            sub = _closure(M, gens)
    levels = []
    for i in range(len(gens)):
        seen = {0}
        queue = [0]
        order = []
        while queue:
            nxt = []
            for p in queue:
                for gp in range(i + 1):
                    e = M.table[p][gens[gp]]
                    if e not in seen:
                        seen.add(e)
                        order.append((e, p, gp))
                        nxt.append(e)
            queue = nxt
        levels.append(tuple(order))
    return tuple(gens), tuple(levels)


def _closure(M, gens):
    seen = {0}
    queue = [0]
    while queue:
        p = queue.pop()
        for g in gens:
            e = M.table[p][g]
            if e not in seen:
                seen.add(e)
                queue.append(e)
    return seen


def power_relation(M, g):
    """``(k, j)`` with ``g^k == g^j``, ``j < k``, k minimal (``g^0 = 1``)."""
    powers = [0]
    cur = 0
    while True:
        cur = M.table[cur][g]
        if cur in powers:
            return len(powers), powers.index(cur)
        powers.append(cur)
