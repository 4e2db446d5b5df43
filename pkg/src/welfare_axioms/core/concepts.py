"""The seven solution concepts and a uniform ``evaluate`` dispatch.

Each concept maps a profile to a ``frozenset`` of alternative indices.  All
comparisons are made on integer numerators over the profile's common
denominator, so ties are detected exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .profile import LinearOrder, ProfileError, UtilityProfile


def _argmax(scores) -> frozenset[int]:
    best = max(scores)
    return frozenset([s for s, x in enumerate(scores) if x == best])


def bentham(u: UtilityProfile) -> frozenset[int]:
    """Alternatives with the largest total utility."""
    return _argmax([sum(col) for col in zip(*u._num)])


def rawls(u: UtilityProfile) -> frozenset[int]:
    """Alternatives whose worst-off agent is best off."""
    return _argmax([min(col) for col in zip(*u._num)])


def unanimous(u: UtilityProfile) -> frozenset[int]:
    """Alternatives that are a best choice for every agent at once (may be empty)."""
    result = None
    for row in u._num:
        top = max(row)
        best = {s for s, x in enumerate(row) if x == top}
        result = best if result is None else result & best
        if not result:
            return frozenset()
    return frozenset(result)


def dictator(u: UtilityProfile, agent: int) -> frozenset[int]:
    if not 0 <= agent < u.n_agents:
        raise ProfileError(f"dictator {agent} outside agents 0..{u.n_agents - 1}")
    return _argmax(u._num[agent])


def anti_bentham(u: UtilityProfile) -> frozenset[int]:
    """``B(-u)``: the alternatives with the smallest total utility."""
    return _argmax([-sum(col) for col in zip(*u._num)])


def _order_for(u: UtilityProfile, order: LinearOrder | None) -> LinearOrder:
    if order is None:
        return LinearOrder.natural(u.n_alternatives)
    if len(order.ranking) != u.n_alternatives:
        raise ProfileError(
            f"order over {len(order.ranking)} alternatives applied to a profile with {u.n_alternatives}"
        )
    return order


def sub_rawls(u: UtilityProfile, order: LinearOrder | None = None) -> frozenset[int]:
    """The order-minimal element of ``rawls(u)``; natural order when ``order`` is None."""
    return frozenset({_order_for(u, order).minimum(rawls(u))})


def sub_bentham(u: UtilityProfile, order: LinearOrder | None = None) -> frozenset[int]:
    return frozenset({_order_for(u, order).minimum(bentham(u))})


class ConceptKind(enum.Enum):
    BENTHAM = "bentham"
    RAWLS = "rawls"
    UNANIMOUS = "unanimous"
    DICTATOR = "dictator"
    ANTI_BENTHAM = "anti-bentham"
    SUB_RAWLS = "sub-rawls"
    SUB_BENTHAM = "sub-bentham"


_SHORT_NAMES = {
    ConceptKind.BENTHAM: "B",
    ConceptKind.RAWLS: "R",
    ConceptKind.UNANIMOUS: "M",
    ConceptKind.DICTATOR: "dict",
    ConceptKind.ANTI_BENTHAM: "AB",
    ConceptKind.SUB_RAWLS: "subR",
    ConceptKind.SUB_BENTHAM: "subB",
}

_ALIASES = {
    "b": ConceptKind.BENTHAM,
    "r": ConceptKind.RAWLS,
    "m": ConceptKind.UNANIMOUS,
    "dict": ConceptKind.DICTATOR,
    "ab": ConceptKind.ANTI_BENTHAM,
    "antibentham": ConceptKind.ANTI_BENTHAM,
    "anti_bentham": ConceptKind.ANTI_BENTHAM,
    "subr": ConceptKind.SUB_RAWLS,
    "sub_rawls": ConceptKind.SUB_RAWLS,
    "subrawls": ConceptKind.SUB_RAWLS,
    "subb": ConceptKind.SUB_BENTHAM,
    "sub_bentham": ConceptKind.SUB_BENTHAM,
    "subbentham": ConceptKind.SUB_BENTHAM,
}


@dataclass(frozen=True)
class SolutionConceptId:
    """A concept from the registry together with its parameters.

    ``agent`` is required for the dictator.  Sub-solutions take an optional
    order; ``None`` means the natural order ``s1 < s2 < ...`` of whatever
    profile they are applied to.
    """

    kind: ConceptKind
    agent: int | None = None
    order: LinearOrder | None = None

    def __post_init__(self):
        if self.kind is ConceptKind.DICTATOR:
            if self.agent is None or self.agent < 0:
                raise ValueError("the dictator concept needs a non-negative agent index")
        elif self.agent is not None:
            raise ValueError(f"{self.kind.value} takes no agent index")
        if self.order is not None and self.kind not in (ConceptKind.SUB_RAWLS, ConceptKind.SUB_BENTHAM):
            raise ValueError(f"{self.kind.value} takes no order")

    @classmethod
    def parse(cls, text: str) -> "SolutionConceptId":
        """Parse ``bentham``, ``dictator:1``, ``sub-rawls`` or ``sub-rawls:2,0,1`` and the like.

        Orders list alternative indices from smallest to largest.
        """
        name, _, arg = text.strip().partition(":")
        key = name.strip().lower()
        try:
            kind = ConceptKind(key)
        except ValueError:
            if key not in _ALIASES:
                raise ValueError(f"unknown solution concept {text!r}") from None
            kind = _ALIASES[key]
        if kind is ConceptKind.DICTATOR:
            if not arg:
                raise ValueError("dictator needs an agent index, e.g. dictator:0")
            return cls(kind, agent=int(arg))
        if arg:
            if kind not in (ConceptKind.SUB_RAWLS, ConceptKind.SUB_BENTHAM):
                raise ValueError(f"{kind.value} takes no argument")
            return cls(kind, order=LinearOrder(tuple(int(x) for x in arg.split(","))))
        return cls(kind)

    @property
    def short_name(self) -> str:
        base = _SHORT_NAMES[self.kind]
        if self.kind is ConceptKind.DICTATOR:
            return f"{base}^{self.agent}"
        return base

    def __str__(self):
        if self.kind is ConceptKind.DICTATOR:
            return f"dictator:{self.agent}"
        if self.order is not None:
            return f"{self.kind.value}:" + ",".join(map(str, self.order.ranking))
        return self.kind.value


BENTHAM = SolutionConceptId(ConceptKind.BENTHAM)
RAWLS = SolutionConceptId(ConceptKind.RAWLS)
UNANIMOUS = SolutionConceptId(ConceptKind.UNANIMOUS)
ANTI_BENTHAM = SolutionConceptId(ConceptKind.ANTI_BENTHAM)
SUB_RAWLS = SolutionConceptId(ConceptKind.SUB_RAWLS)
SUB_BENTHAM = SolutionConceptId(ConceptKind.SUB_BENTHAM)


def dictator_concept(agent: int = 0) -> SolutionConceptId:
    return SolutionConceptId(ConceptKind.DICTATOR, agent=agent)


_DISPATCH = {
    ConceptKind.BENTHAM: lambda c, u: bentham(u),
    ConceptKind.RAWLS: lambda c, u: rawls(u),
    ConceptKind.UNANIMOUS: lambda c, u: unanimous(u),
    ConceptKind.DICTATOR: lambda c, u: dictator(u, c.agent),
    ConceptKind.ANTI_BENTHAM: lambda c, u: anti_bentham(u),
    ConceptKind.SUB_RAWLS: lambda c, u: sub_rawls(u, c.order),
    ConceptKind.SUB_BENTHAM: lambda c, u: sub_bentham(u, c.order),
}


def evaluate(concept: SolutionConceptId, u: UtilityProfile) -> frozenset[int]:
    """Apply ``concept`` to ``u``; identical to calling the concept's function directly."""
    return _DISPATCH[concept.kind](concept, u)


def format_set(s, alternatives=None) -> str:
    if alternatives is None:
        names = [f"s{k + 1}" for k in sorted(s)]
    else:
        names = [alternatives[k].name for k in sorted(s)]
    return "{" + ", ".join(names) + "}"
