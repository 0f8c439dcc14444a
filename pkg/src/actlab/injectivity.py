"""Baer-style injectivity tests.

Every test searches for a subact inclusion ``A ≤ B`` and a hom ``A → Q`` with
no extension ``B → Q``; the first one found (in deterministic order) is the
counterexample.
"""

from dataclasses import dataclass, field

from .acts import (
    coproduct,
    cyclic_acts,
    enumerate_acts,
    enumerate_homs,
    find_hom,
    induced,
    regular_act,
    subacts,
)
from .monoid import all_left_ideals, generation_degree


@dataclass(frozen=True)
class InjectivityVerdict:
    act: object
    level: str
    verdict: bool
    counterexample: dict = field(default=None)
    bound: int = None

    def __bool__(self):
        return self.verdict

    def to_json(self):
        out = {"level": self.level, "verdict": self.verdict}
        if self.bound is not None:
            out["bound"] = self.bound
        out["counterexample"] = self.counterexample
        return out


def zeros(Q):
    return [t for t in range(Q.size) if all(row[t] == t for row in Q.action)]


def has_zero(Q):
    return bool(zeros(Q))


def first_non_extendable(B, A, Q):
    """First hom ``A → Q`` (lex order) with no extension to ``B``, as a dict
    from elements of ``A`` (labels in ``B``) to ``Q``; None if all extend."""
    sub, labels = induced(B, A)
    for u in enumerate_homs(sub, Q):
        partial = dict(zip(labels, u.map))
        if find_hom(B, Q, partial) is None:
            return partial
    return None


def _cex(B, A, partial, **extra):
    out = {
        "B": [list(r) for r in B.action],
        "A": sorted(A),
        "hom": {str(k): v for k, v in sorted(partial.items())},
    }
    out.update(extra)
    return out


def replay_counterexample(Q, cex):
    """True iff the recorded hom really has no extension (replays a failure)."""
    from .acts import validate_act

    if "B" not in cex:
        return not has_zero(Q)
    B = validate_act(Q.monoid, cex["B"])
    partial = {int(k): v for k, v in cex["hom"].items()}
    return find_hom(B, Q, partial) is None


def _ideal_test(Q, ideals, level):
    S = regular_act(Q.monoid)
    for ideal in ideals:
        bad = first_non_extendable(S, ideal.elements, Q)
        if bad is not None:
            return InjectivityVerdict(Q, level, False,
                                      _cex(S, ideal.elements, bad, ideal=list(ideal.min_generators)))
    return InjectivityVerdict(Q, level, True)


def is_n_injective(Q, n):
    if n < 1:
        raise ValueError("n must be a positive integer")
    ideals = [i for i in all_left_ideals(Q.monoid) if i.generator_count <= n]
    return _ideal_test(Q, ideals, f"{n}-injective")


def is_weakly_injective(Q):
    return _ideal_test(Q, all_left_ideals(Q.monoid), "weakly-injective")


def is_injective(Q):
    """Zero element plus extension along every subact of every cyclic act."""
    if not has_zero(Q):
        return InjectivityVerdict(Q, "injective", False, {"reason": "no zero element"})
    for k, (B, _) in enumerate(cyclic_acts(Q.monoid)):
        for A in subacts(B):
            if len(A) == B.size:
                continue
            bad = first_non_extendable(B, A, Q)
            if bad is not None:
                return InjectivityVerdict(Q, "injective", False, _cex(B, A, bad, cyclic_index=k))
    return InjectivityVerdict(Q, "injective", True)


def is_absolutely_pure(Q, bound):
    """Extension from nonempty subacts of every act of size ≤ ``bound``."""
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    level = f"absolutely-pure<={bound}"
    for m in range(1, bound + 1):
        for C in enumerate_acts(Q.monoid, m):
            for B in subacts(C):
                if not B or len(B) == C.size:
                    continue
                bad = first_non_extendable(C, B, Q)
                if bad is not None:
                    return InjectivityVerdict(Q, level, False, _cex(C, B, bad), bound)
    return InjectivityVerdict(Q, level, True, None, bound)


def injective_acts(monoid, max_size):
    return [Q for m in range(1, max_size + 1) for Q in enumerate_acts(monoid, m)
            if is_injective(Q)]


def coproduct_scan(monoid, max_size):
    """Coproducts of pairs of injective acts (size ≤ ``max_size``) that fail
    to be injective, as ``(i, j)`` index pairs into ``injective_acts``."""
    injs = injective_acts(monoid, max_size)
    failures = []
    for i in range(len(injs)):
        for j in range(i, len(injs)):
            C, _, _ = coproduct(injs[i], injs[j])
            if not is_injective(C):
                failures.append((i, j))
    return injs, failures


def strictness_witness(monoid, n, max_size=5):
    """An act of size ≤ ``max_size`` that is n- but not (n+1)-injective."""
    for m in range(1, max_size + 1):
        for Q in enumerate_acts(monoid, m):
            if is_n_injective(Q, n) and not is_n_injective(Q, n + 1):
                return Q
    return None


def injectivity_profile(Q):
    g = generation_degree(Q.monoid)
    return {
        "has_zero": has_zero(Q),
        "n_injective": {str(n): is_n_injective(Q, n).verdict for n in range(1, g + 1)},
        "weakly_injective": is_weakly_injective(Q).verdict,
        "injective": is_injective(Q).verdict,
    }
