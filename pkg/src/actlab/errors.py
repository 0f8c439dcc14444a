"""Exception hierarchy.

Every error carries the offending data as attributes so callers (and the
CLI's JSON output) can report exactly what went wrong.
"""


class ActlabError(Exception):
    """Base class for all errors raised by actlab."""

    def details(self):
        return {k: v for k, v in vars(self).items() if not k.startswith("_")}


class MalformedTable(ActlabError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


class NotAssociative(ActlabError):
    def __init__(self, s, t, u):
        self.triple = (s, t, u)
        super().__init__(f"(s*t)*u != s*(t*u) at s={s}, t={t}, u={u}")


class IdentityLawFails(ActlabError):
    def __init__(self, s):
        self.element = s
        super().__init__(f"element 0 is not a two-sided identity (fails at {s})")


class IndexOutOfRange(ActlabError):
    def __init__(self, index, bound):
        self.index = index
        self.bound = bound
        super().__init__(f"index {index} not in [0, {bound})")


class UnitLawFails(ActlabError):
    def __init__(self, x):
        self.element = x
        super().__init__(f"1*x != x at x={x}")


class AssociativityFails(ActlabError):
    def __init__(self, s, t, x):
        self.triple = (s, t, x)
        super().__init__(f"s*(t*x) != (s*t)*x at s={s}, t={t}, x={x}")


class InconsistentConstraints(ActlabError):
    def __init__(self, element, wanted, forced):
        self.element = element
        self.wanted = wanted
        self.forced = forced
        super().__init__(
            f"partial map sends {element} to {wanted} but equivariance forces {forced}"
        )


class MonoidMismatch(ActlabError):
    def __init__(self, msg="acts are over different monoids"):
        super().__init__(msg)


class SourceMismatch(ActlabError):
    pass


class TargetMismatch(ActlabError):
    pass


class ShapeMismatch(ActlabError):
    pass


class NotEquivariant(ActlabError):
    def __init__(self, s, x):
        self.witness = (s, x)
        super().__init__(f"map(s*x) != s*map(x) at s={s}, x={x}")


class NotMono(ActlabError):
    def __init__(self, x, y):
        self.collision = (x, y)
        super().__init__(f"map identifies {x} and {y}")


class NotCommutative(ActlabError):
    def __init__(self, x):
        self.element = x
        super().__init__(f"square does not commute at {x}")


class NotSubact(ActlabError):
    def __init__(self, s, x):
        self.witness = (s, x)
        super().__init__(f"set is not closed under the action: s={s}, x={x}")


class BaseNotSubact(NotSubact):
    pass


class ParamMismatch(ActlabError):
    pass


class TupleLengthMismatch(ActlabError):
    pass


class NotASubset(ActlabError):
    def __init__(self, extra):
        self.extra = sorted(extra)
        super().__init__(f"elements {self.extra} are not among the parameters")


class ElementInBase(ActlabError):
    def __init__(self, x):
        self.element = x
        super().__init__(f"element {x} already lies in the base")


class BaseNotContained(ActlabError):
    def __init__(self, extra):
        self.extra = sorted(extra)
        super().__init__(f"base elements {self.extra} are outside the parameter subact")


class RestrictionsDiffer(ActlabError):
    def __init__(self, equation):
        self.equation = equation
        super().__init__(f"types over the base differ: {equation}")


class ForkingDetected(ActlabError):
    def __init__(self, side, element):
        self.side = side
        self.element = element
        super().__init__(f"type {side} forks over the base: {element} in S*a ∩ C outside B")


class ParseError(ActlabError):
    def __init__(self, source, line, reason):
        self.source = str(source)
        self.line = line
        self.reason = reason
        super().__init__(f"{source}:{line}: {reason}")
