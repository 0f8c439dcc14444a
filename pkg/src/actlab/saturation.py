"""Cellular factorization of monos and the small-object-argument step.

A cell is a subact inclusion ``A ≤ B`` with ``B`` cyclic.  ``cellular_factorize``
rebuilds a mono ``K → L`` one cell at a time; ``som_step`` glues a copy of
``B`` along every attaching hom ``A → K`` that does not already extend.
"""

from dataclasses import dataclass

from .acts import (
    Act,
    ActHom,
    CommutativeSquare,
    cyclic_acts,
    enumerate_homs,
    epi_mono_factorize,
    find_hom,
    identity_hom,
    inclusion,
    induced,
    is_cyclic,
    make_hom,
    pushout,
    regular_act,
    require_mono,
    subacts,
)
from .errors import NotMono
from .injectivity import is_injective, is_weakly_injective


@dataclass(frozen=True)
class CellStep:
    element: int
    cell: Act
    attaching: frozenset
    attach_hom: ActHom
    square: CommutativeSquare
    to_target: ActHom

    @property
    def before(self):
        return self.square.f1.target

    @property
    def after(self):
        return self.square.g1.target


@dataclass(frozen=True)
class CellularChain:
    mono: ActHom
    steps: tuple
    composite: ActHom
    comparison: ActHom

    def __len__(self):
        return len(self.steps)


def cellular_factorize(f):
    """Factor the mono ``f: K → L`` into pushouts of cells.

    Each step adds the orbit of an element ``a ∉`` current image, choosing the
    smallest new orbit ``S·a`` (ties by least index).  ``comparison`` is the
    final iso ``K_m → L``; ``comparison ∘ composite == f``.
    """
    require_mono(f)
    L = f.target
    n_s = L.monoid.size
    S = regular_act(L.monoid)
    K_i = f.source
    t = f
    composite = identity_hom(f.source)
    steps = []
    while True:
        image = t.image()
        rest = [a for a in range(L.size) if a not in image]
        if not rest:
            break
        a = min(rest, key=lambda y: (len(L.orbits[y] - image), y))
        h = ActHom(S, L, tuple(L.action[s][a] for s in range(n_s)))
        _, m = epi_mono_factorize(h)
        B = m.source
        back = {y: k for k, y in enumerate(t.map)}
        A = frozenset(b for b in range(B.size) if m.map[b] in back)
        A_act, incl = inclusion(B, A)
        u = ActHom(A_act, K_i, tuple(back[m.map[b]] for b in incl.map))
        K_next, leg, cell = pushout(u, incl)
        square = CommutativeSquare(u, incl, leg, cell)
        t_map = [-1] * K_next.size
        for k in range(K_i.size):
            t_map[leg.map[k]] = t.map[k]
        for b in range(B.size):
            t_map[cell.map[b]] = m.map[b]
        t_next = make_hom(K_next, L, t_map)
        if not t_next.is_injective:
            dup = [y for y in t_next.map if t_next.map.count(y) > 1][0]
            first = t_next.map.index(dup)
            raise NotMono(first, t_next.map.index(dup, first + 1))
        steps.append(CellStep(a, B, A, u, square, t_next))
        composite = composite.then(leg)
        K_i, t = K_next, t_next
    return CellularChain(f, tuple(steps), composite, t)


@dataclass(frozen=True)
class Cell:
    cyclic_index: int
    attaching: frozenset
    hom: dict
    cell_map: tuple


@dataclass(frozen=True)
class SomStep:
    result: Act
    leg: ActHom
    cells: tuple


def som_step(K, skip_extendable=True):
    """One multiple-pushout step over all non-extendable attaching homs.

    Fresh elements are appended after ``K`` in cell order (cyclic act, subact,
    hom), so ``leg`` is the inclusion of the first ``|K|`` indices.  With
    ``skip_extendable=False`` every attaching hom gets its own cell.
    """
    monoid = K.monoid
    rows = [list(r) for r in K.action]
    size = K.size
    cells = []
    for k, (B, _) in enumerate(cyclic_acts(monoid)):
        for A in subacts(B):
            if len(A) == B.size:
                continue
            sub, labels = induced(B, A)
            for u in enumerate_homs(sub, K):
                partial = dict(zip(labels, u.map))
                if skip_extendable and find_hom(B, K, partial) is not None:
                    continue
                idx = []
                for b in range(B.size):
                    if b in partial:
                        idx.append(partial[b])
                    else:
                        idx.append(size)
                        size += 1
                for s in range(monoid.size):
                    row = rows[s]
                    for b in range(B.size):
                        if b not in partial:
                            row.append(idx[B.action[s][b]])
                cells.append(Cell(k, A, partial, tuple(idx)))
    K1 = Act(monoid, size, tuple(tuple(r) for r in rows))
    return SomStep(K1, ActHom(K, K1, tuple(range(K.size))), tuple(cells))


@dataclass(frozen=True)
class SaturationResult:
    act: Act
    embedding: ActHom
    status: str
    steps: int

    @property
    def reached(self):
        return self.status == "reached"

    def to_json(self):
        return {"status": self.status, "steps": self.steps, "size": self.act.size}


TARGETS = {"weak": is_weakly_injective, "full": is_injective}


def saturate(K, max_steps=8, target="weak", size_cap=512):
    """Iterate ``som_step`` until ``K`` passes the target injectivity test."""
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    test = TARGETS[target]
    emb = identity_hom(K)
    cur = K
    if test(cur):
        return SaturationResult(cur, emb, "reached", 0)
    for i in range(1, max_steps + 1):
        step = som_step(cur)
        emb = ActHom(K, step.result, tuple(step.leg.map[v] for v in emb.map))
        cur = step.result
        if cur.size > size_cap:
            return SaturationResult(cur, emb, "cap_exceeded", i)
        if test(cur):
            return SaturationResult(cur, emb, "reached", i)
    return SaturationResult(cur, emb, "cap_exceeded", max_steps)


def full_som_tower(K, steps):
    """``steps`` unskipped small-object steps; returns ``(K_n, embedding)``."""
    emb = identity_hom(K)
    cur = K
    for _ in range(steps):
        step = som_step(cur, skip_extendable=False)
        emb = ActHom(K, step.result, tuple(step.leg.map[v] for v in emb.map))
        cur = step.result
    return cur, emb


def find_lifting(f, sat):
    """A mono ``g: L → K*`` with ``g ∘ f == sat.embedding``, or None."""
    constraints = {f.map[k]: sat.embedding.map[k] for k in range(f.source.size)}
    return find_hom(f.target, sat.act, constraints, injective=True)


def chain_problems(chain):
    """Structural problems with a chain (empty list when it checks out)."""
    from .oracles import is_pushout_setwise

    problems = []
    for i, st in enumerate(chain.steps):
        sq = st.square
        if not is_cyclic(st.cell):
            problems.append(f"step {i}: cell is not cyclic")
        if not is_pushout_setwise(sq.f1, sq.f2, sq.g1, sq.g2):
            problems.append(f"step {i}: square is not a pushout")
        if not all(v >= 0 for v in st.to_target.map) or not st.to_target.is_injective:
            problems.append(f"step {i}: comparison into the target is not mono")
    comp = chain.composite.then(chain.comparison)
    if comp.map != chain.mono.map:
        problems.append("composite differs from the input mono")
    if not (chain.comparison.is_injective and chain.comparison.is_surjective):
        problems.append("final comparison is not an isomorphism")
    return problems
