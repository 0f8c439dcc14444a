"""Quantifier-free types of tuples in acts.

Two pointed configurations ``(b̄1, X in N1)`` and ``(b̄2, X in N2)`` have the
same type exactly when ``s·g1[i] ↦ s·g2[i]`` (``g = b̄ + X``) is a well-defined
bijection between the generated cores.  Parameters are matched by label:
by default a parameter's label is its ambient index, so two reps over the same
ambient compare parameters by identity.
"""

from dataclasses import dataclass

from .acts import Act, generated_subact, induced
from .errors import (
    IndexOutOfRange,
    MonoidMismatch,
    NotASubset,
    ParamMismatch,
    TupleLengthMismatch,
)


@dataclass(frozen=True)
class PointedTypeRep:
    ambient: Act
    tuple: tuple
    params: tuple
    labels: tuple
    core: frozenset
    core_act: Act
    core_labels: tuple
    marked_tuple: tuple
    marked_params: tuple

    def label_map(self):
        return dict(zip(self.labels, self.params))


def type_rep(N, tup, X=(), labels=None):
    """Canonical representative of the type of ``tup`` over ``X`` in ``N``."""
    tup = tuple(tup)
    params = tuple(dict.fromkeys(X))
    for x in tup + params:
        if not 0 <= x < N.size:
            raise IndexOutOfRange(x, N.size)
    if labels is None:
        labels = params
    else:
        labels = tuple(labels)
        if len(labels) != len(params) or len(set(labels)) != len(labels):
            raise ParamMismatch("need one distinct label per parameter")
    core = generated_subact(N, tup + params)
    core_act, core_labels = induced(N, core)
    pos = {x: i for i, x in enumerate(core_labels)}
    return PointedTypeRep(
        ambient=N,
        tuple=tup,
        params=params,
        labels=labels,
        core=core,
        core_act=core_act,
        core_labels=core_labels,
        marked_tuple=tuple(pos[x] for x in tup),
        marked_params=tuple(pos[x] for x in params),
    )


def restrict_type(p, X0):
    X0 = set(X0)
    extra = X0 - set(p.params)
    if extra:
        raise NotASubset(extra)
    keep = [(x, lab) for x, lab in zip(p.params, p.labels) if x in X0]
    return type_rep(p.ambient, p.tuple, [x for x, _ in keep], [lab for _, lab in keep])


def orbit_map(A1, gens1, A2, gens2):
    """Try ``s·gens1[i] ↦ s·gens2[i]``.

    Returns ``(mapping, None)`` when it is a well-defined injective map, else
    ``(None, violation)`` where the violation names an equation
    ``s·g[i] = t·g[j]`` that holds on one side only.
    """
    fwd, bwd = {}, {}
    src_of, tgt_of = {}, {}
    n_s = A1.monoid.size
    for i, (g1, g2) in enumerate(zip(gens1, gens2)):
        for s in range(n_s):
            d1 = A1.action[s][g1]
            d2 = A2.action[s][g2]
            if d1 in fwd:
                if fwd[d1] != d2:
                    t, j = src_of[d1]
                    return None, {"holds_in": "left", "lhs": [s, i], "rhs": [t, j]}
            else:
                fwd[d1] = d2
                src_of[d1] = (s, i)
            if d2 in bwd:
                if bwd[d2] != d1:
                    t, j = tgt_of[d2]
                    return None, {"holds_in": "right", "lhs": [s, i], "rhs": [t, j]}
            else:
                bwd[d2] = d1
                tgt_of[d2] = (s, i)
    return fwd, None


def _aligned(p, q):
    if p.ambient.monoid != q.ambient.monoid:
        raise MonoidMismatch()
    if len(p.tuple) != len(q.tuple):
        raise TupleLengthMismatch(f"tuples of length {len(p.tuple)} and {len(q.tuple)}")
    if set(p.labels) != set(q.labels):
        raise ParamMismatch("parameter labels differ")
    qmap = q.label_map()
    gens1 = p.tuple + p.params
    gens2 = q.tuple + tuple(qmap[lab] for lab in p.labels)
    return gens1, gens2


def type_equality_witness(p, q):
    """``{"equal": True, "map": {...}}`` or ``{"equal": False, "equation": ...}``."""
    gens1, gens2 = _aligned(p, q)
    mapping, violation = orbit_map(p.ambient, gens1, q.ambient, gens2)
    if mapping is None:
        violation["generators"] = {"left": list(gens1), "right": list(gens2)}
        return {"equal": False, "equation": violation}
    return {"equal": True, "map": {int(k): int(v) for k, v in sorted(mapping.items())}}


def types_equal(p, q):
    gens1, gens2 = _aligned(p, q)
    mapping, _ = orbit_map(p.ambient, gens1, q.ambient, gens2)
    return mapping is not None
