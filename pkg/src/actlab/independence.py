"""Pullback independence for acts.

``X`` is independent from ``Y`` over a subact ``A`` of ``B`` when
``S·X ∩ S·Y ⊆ A``.  A type ``gtp(ā/X; N)`` does not fork over ``M`` when
``S·ā ∩ S·X ⊆ M``.
"""

from dataclasses import dataclass

from .acts import (
    Act,
    ActHom,
    enumerate_homs,
    generated_subact,
    induced,
    require_mono,
    require_subact,
    subacts,
)
from .errors import (
    ActlabError,
    BaseNotContained,
    BaseNotSubact,
    ElementInBase,
    ForkingDetected,
    IndexOutOfRange,
    NotCommutative,
    RestrictionsDiffer,
)
from .monoid import maximal_orbit_generators
from .typecalc import PointedTypeRep, orbit_map, type_equality_witness, type_rep


@dataclass(frozen=True)
class IndependenceQuery:
    ambient: Act
    base: frozenset
    left: frozenset
    right: frozenset

    def __post_init__(self):
        for name in ("base", "left", "right"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        for x in self.base | self.left | self.right:
            if not 0 <= x < self.ambient.size:
                raise IndexOutOfRange(x, self.ambient.size)
        require_subact(self.ambient, self.base, BaseNotSubact)


def dependence_witness(q):
    """Elements of ``S·X ∩ S·Y`` outside the base (empty iff independent)."""
    sx = generated_subact(q.ambient, q.left)
    sy = generated_subact(q.ambient, q.right)
    return frozenset((sx & sy) - q.base)


def is_independent(q):
    return not dependence_witness(q)


def square_is_independent(sq):
    for f in (sq.f1, sq.f2, sq.g1, sq.g2):
        require_mono(f)
    for x in range(sq.f1.source.size):
        if sq.g1.map[sq.f1.map[x]] != sq.g2.map[sq.f2.map[x]]:
            raise NotCommutative(x)
    corner = {sq.g1.map[sq.f1.map[x]] for x in range(sq.f1.source.size)}
    return sq.g1.image() & sq.g2.image() == corner


def minimal_base(B, A, x):
    """Least minimum ``Z ⊆ A ∩ S·x`` with ``A ∩ S·x ⊆ S·Z``."""
    A = frozenset(A)
    require_subact(B, A, BaseNotSubact)
    if not 0 <= x < B.size:
        raise IndexOutOfRange(x, B.size)
    if x in A:
        raise ElementInBase(x)
    meet = A & B.orbits[x]
    return maximal_orbit_generators(B.orbits, meet)


@dataclass(frozen=True)
class NonforkingRecord:
    type: PointedTypeRep
    base: frozenset
    verdict: bool
    witness: frozenset


def type_nonforking(p, M):
    M = frozenset(M)
    N = p.ambient
    require_subact(N, M, BaseNotSubact)
    span = generated_subact(N, p.params)
    if not M <= span:
        raise BaseNotContained(M - span)
    meet = generated_subact(N, p.tuple) & span
    witness = frozenset(meet - M)
    return NonforkingRecord(p, M, not witness, witness)


@dataclass(frozen=True)
class MergeResult:
    """Certified iso ``S·a1 ∪ C → S·a2 ∪ C`` fixing ``C``.

    ``hom`` runs between the induced subacts; ``domain``/``codomain`` give
    the ambient labels of their carriers.
    """

    hom: ActHom
    domain: tuple
    codomain: tuple

    def as_dict(self):
        return {self.domain[i]: self.codomain[j] for i, j in enumerate(self.hom.map)}


class CertificationFailed(ActlabError):
    pass


def merge_nonforking(a1, a2, B, C, D):
    B, C = frozenset(B), frozenset(C)
    require_subact(D, B, BaseNotSubact)
    require_subact(D, C, BaseNotSubact)
    if not B <= C:
        raise BaseNotContained(B - C)
    for a in (a1, a2):
        if not 0 <= a < D.size:
            raise IndexOutOfRange(a, D.size)
    base = sorted(B)
    p_b = type_rep(D, (a1,), base)
    q_b = type_rep(D, (a2,), base)
    w = type_equality_witness(p_b, q_b)
    if not w["equal"]:
        raise RestrictionsDiffer(w["equation"])
    orbit1, orbit2 = D.orbits[a1], D.orbits[a2]
    for side, orbit in (("p", orbit1), ("q", orbit2)):
        bad = sorted((orbit & C) - B)
        if bad:
            raise ForkingDetected(side, bad[0])
    f, _ = orbit_map(D, (a1,) + tuple(base), D, (a2,) + tuple(base))
    g = {d: f[d] for d in orbit1}
    for c in C:
        g[c] = c
    dom = orbit1 | C
    cod = orbit2 | C
    _certify(D, g, dom, cod, C)
    src, src_labels = induced(D, dom)
    tgt, tgt_labels = induced(D, cod)
    pos = {y: i for i, y in enumerate(tgt_labels)}
    hom = ActHom(src, tgt, tuple(pos[g[x]] for x in src_labels))
    return MergeResult(hom, src_labels, tgt_labels)


def _certify(D, g, dom, cod, C):
    if set(g) != set(dom):
        raise CertificationFailed("map is not total on S·a1 ∪ C")
    for d in dom:
        if d in C and g[d] != d:
            raise CertificationFailed(f"map moves parameter {d}")
        for row in D.action:
            if g[row[d]] != row[g[d]]:
                raise CertificationFailed(f"map is not equivariant at {d}")
    if len(set(g.values())) != len(dom) or set(g.values()) != set(cod):
        raise CertificationFailed("map is not a bijection onto S·a2 ∪ C")


def splitting_witness(N, p, M):
    """First ``(N1, N2, h)`` showing ``p`` splits over ``M``, or None.

    ``N1``, ``N2`` range over subacts between ``M`` and the parameter subact;
    ``h`` over isomorphisms ``N1 → N2`` fixing ``M``.
    """
    M = frozenset(M)
    require_subact(N, M, BaseNotSubact)
    span = generated_subact(N, p.params)
    if not M <= span:
        raise BaseNotContained(M - span)
    P, labels = induced(N, span)
    pos = {x: i for i, x in enumerate(labels)}
    m_local = {pos[x] for x in M}
    middles = [s for s in subacts(P) if m_local <= s]
    sub_cache = {}
    for s in middles:
        sub_cache[s] = induced(P, s)
    for n1 in middles:
        A1, l1 = sub_cache[n1]
        for n2 in middles:
            if len(n2) != len(n1):
                continue
            A2, l2 = sub_cache[n2]
            pos2 = {x: i for i, x in enumerate(l2)}
            fix = {i: pos2[x] for i, x in enumerate(l1) if x in m_local}
            for h in enumerate_homs(A1, A2, fix, injective=True):
                gens1 = tuple(labels[l1[i]] for i in range(A1.size))
                gens2 = tuple(labels[l2[h.map[i]]] for i in range(A1.size))
                mapping, _ = orbit_map(N, p.tuple + gens1, N, p.tuple + gens2)
                if mapping is None:
                    return (
                        tuple(labels[x] for x in sorted(n1)),
                        tuple(labels[x] for x in sorted(n2)),
                        dict(zip(gens1, gens2)),
                    )
    return None


def splits_over(N, p, M):
    return splitting_witness(N, p, M) is not None
