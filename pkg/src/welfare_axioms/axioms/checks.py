"""Checkers for individual axiom instances.

Each checker evaluates one instance of an axiom (a profile, a pair of
profiles with a weight, a perturbation family, ...) and returns an
:class:`AxiomVerdict`.  A failing verdict carries a :class:`Witness` holding
exactly the inputs needed to replay the failure with :func:`replay`.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Any

from ..core import (
    BeliefMatrix,
    MixtureWeight,
    Permutation,
    PerturbationFamily,
    SolutionConceptId,
    UtilityProfile,
    evaluate,
    meet,
    mix,
    permute,
    subjective_mix,
    unanimous,
)

ANONYMITY_EXHAUSTIVE_MAX_AGENTS = 5


class AxiomId(enum.Enum):
    NONEMPTINESS = "NE"
    ANONYMITY = "A"
    UNANIMITY = "U"
    CONTINUITY = "C"
    SUBJECTIVE_EXPECTED_CONSISTENCY = "SEC"
    OBJECTIVE_EXPECTED_CONSISTENCY = "OEC"
    MINIMUM_CONSISTENCY = "MC"

    @classmethod
    def parse(cls, text: str) -> "AxiomId":
        key = text.strip().replace("-", "_").replace(" ", "_")
        for axiom in cls:
            if key.upper() in (axiom.value, axiom.name):
                return axiom
        raise ValueError(f"unknown axiom {text!r}")

    @property
    def label(self) -> str:
        return self.name.replace("_", " ").title()


@dataclass(frozen=True)
class Witness:
    """Inputs that make a solution concept violate an axiom.

    ``check`` names the checker that produced the witness; ``replay`` feeds the
    stored inputs back into it.  ``violating_alternative`` is ``None`` only for
    Nonemptiness, where the violation is the absence of any alternative.
    """

    check: str
    profiles: tuple[UtilityProfile, ...]
    violating_alternative: int | None
    permutation: Permutation | None = None
    weight: MixtureWeight | None = None
    beliefs: BeliefMatrix | None = None
    family: PerturbationFamily | None = None
    tail_from: int = 0
    explanation: dict[str, Any] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: AxiomId
    concept: SolutionConceptId
    trials: int = 0
    witness: Witness | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    def __str__(self):
        if self.passed:
            return f"{self.concept.short_name} {self.axiom.value}: holds ({self.trials} trials)"
        return f"{self.concept.short_name} {self.axiom.value}: violated"


def _sorted(s) -> list[int]:
    return sorted(s)


def check_nonemptiness(concept: SolutionConceptId, u: UtilityProfile) -> AxiomVerdict:
    phi = evaluate(concept, u)
    if phi:
        return AxiomVerdict(AxiomId.NONEMPTINESS, concept, 1)
    w = Witness("nonemptiness", (u,), None, explanation={"phi_u": []})
    return AxiomVerdict(AxiomId.NONEMPTINESS, concept, 1, w)


def _all_permutations(n: int):
    for mapping in itertools.permutations(range(n)):
        yield Permutation(mapping)


def check_anonymity(
    concept: SolutionConceptId,
    u: UtilityProfile,
    permutation: Permutation | None = None,
    *,
    samples: int = 1000,
    seed: int = 0,
) -> AxiomVerdict:
    """Compare ``phi(u)`` with ``phi(u_sigma)``.

    Without an explicit permutation, all ``n!`` permutations are tried for
    ``n <= 5``; larger profiles get ``samples`` seeded random permutations.
    """
    phi = evaluate(concept, u)
    if permutation is not None:
        sigmas = [permutation]
    elif u.n_agents <= ANONYMITY_EXHAUSTIVE_MAX_AGENTS:
        sigmas = _all_permutations(u.n_agents)
    else:
        rng = random.Random(seed)
        sigmas = (Permutation(tuple(rng.sample(range(u.n_agents), u.n_agents))) for _ in range(samples))
    trials = 0
    for sigma in sigmas:
        trials += 1
        phi_sigma = evaluate(concept, permute(u, sigma))
        if phi_sigma != phi:
            w = Witness(
                "anonymity",
                (u,),
                min(phi ^ phi_sigma),
                permutation=sigma,
                explanation={"phi_u": _sorted(phi), "phi_u_sigma": _sorted(phi_sigma)},
            )
            return AxiomVerdict(AxiomId.ANONYMITY, concept, trials, w)
    return AxiomVerdict(AxiomId.ANONYMITY, concept, trials)


def check_unanimity(concept: SolutionConceptId, u: UtilityProfile) -> AxiomVerdict:
    m_u = unanimous(u)
    if not m_u:
        return AxiomVerdict(AxiomId.UNANIMITY, concept, 0)
    phi = evaluate(concept, u)
    outside = phi - m_u
    if not outside:
        return AxiomVerdict(AxiomId.UNANIMITY, concept, 1)
    w = Witness(
        "unanimity",
        (u,),
        min(outside),
        explanation={"phi_u": _sorted(phi), "unanimous_u": _sorted(m_u)},
    )
    return AxiomVerdict(AxiomId.UNANIMITY, concept, 1, w)


def check_continuity(
    concept: SolutionConceptId, family: PerturbationFamily, tail_from: int = 0
) -> AxiomVerdict:
    """Try to refute closedness of ``{u : target in phi(u)}`` along ``family``.

    A failure means the target is chosen at every member from ``tail_from`` on
    but not at the limit ``family.base``.  A pass only says this particular
    sequence does not refute continuity.
    """
    a = family.target
    phi_base = evaluate(concept, family.base)
    members = range(tail_from, len(family))
    if a in phi_base or not members:
        return AxiomVerdict(AxiomId.CONTINUITY, concept, 0)
    if not all(a in evaluate(concept, family.member(k)) for k in members):
        return AxiomVerdict(AxiomId.CONTINUITY, concept, 1)
    w = Witness(
        "continuity",
        (family.base,),
        a,
        family=family,
        tail_from=tail_from,
        explanation={"phi_base": _sorted(phi_base), "members_containing_target": list(members)},
    )
    return AxiomVerdict(AxiomId.CONTINUITY, concept, 1, w)


def _consistency(axiom, check, concept, u, v, combined, phi_u, phi_v, **extra) -> AxiomVerdict:
    common = phi_u & phi_v
    if not common:
        return AxiomVerdict(axiom, concept, 0)
    phi_c = evaluate(concept, combined)
    lost = common - phi_c
    if not lost:
        return AxiomVerdict(axiom, concept, 1)
    w = Witness(
        check,
        (u, v),
        min(lost),
        explanation={
            "phi_u": _sorted(phi_u),
            "phi_v": _sorted(phi_v),
            "combined": [[str(q) for q in row] for row in combined.values],
            "phi_combined": _sorted(phi_c),
        },
        **extra,
    )
    return AxiomVerdict(axiom, concept, 1, w)


def _as_weight(p) -> MixtureWeight:
    return p if isinstance(p, MixtureWeight) else MixtureWeight(p)


def check_oec(concept: SolutionConceptId, u: UtilityProfile, v: UtilityProfile, p) -> AxiomVerdict:
    """Objective Expected Consistency for one pair and one weight ``p`` on ``u``."""
    p = _as_weight(p)
    phi_u, phi_v = evaluate(concept, u), evaluate(concept, v)
    if not phi_u & phi_v:
        return AxiomVerdict(AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY, concept, 0)
    return _consistency(
        AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY, "oec", concept, u, v, mix(u, v, p), phi_u, phi_v, weight=p
    )


def check_mc(concept: SolutionConceptId, u: UtilityProfile, v: UtilityProfile) -> AxiomVerdict:
    """Minimum Consistency: common choices must survive in the worst-case profile."""
    phi_u, phi_v = evaluate(concept, u), evaluate(concept, v)
    if not phi_u & phi_v:
        return AxiomVerdict(AxiomId.MINIMUM_CONSISTENCY, concept, 0)
    return _consistency(AxiomId.MINIMUM_CONSISTENCY, "mc", concept, u, v, meet(u, v), phi_u, phi_v)


def check_sec(
    concept: SolutionConceptId, u: UtilityProfile, v: UtilityProfile, beliefs: BeliefMatrix
) -> AxiomVerdict:
    if not isinstance(beliefs, BeliefMatrix):
        beliefs = BeliefMatrix(tuple(beliefs))
    phi_u, phi_v = evaluate(concept, u), evaluate(concept, v)
    if not phi_u & phi_v:
        return AxiomVerdict(AxiomId.SUBJECTIVE_EXPECTED_CONSISTENCY, concept, 0)
    return _consistency(
        AxiomId.SUBJECTIVE_EXPECTED_CONSISTENCY,
        "sec",
        concept,
        u,
        v,
        subjective_mix(u, v, beliefs),
        phi_u,
        phi_v,
        beliefs=beliefs,
    )


def replay(concept: SolutionConceptId, witness: Witness) -> AxiomVerdict:
    """Re-run the checker that produced ``witness`` on its stored inputs."""
    check = witness.check
    u = witness.profiles[0]
    if check == "nonemptiness":
        return check_nonemptiness(concept, u)
    if check == "anonymity":
        return check_anonymity(concept, u, witness.permutation)
    if check == "unanimity":
        return check_unanimity(concept, u)
    if check == "continuity":
        return check_continuity(concept, witness.family, witness.tail_from)
    if check == "oec":
        return check_oec(concept, u, witness.profiles[1], witness.weight)
    if check == "mc":
        return check_mc(concept, u, witness.profiles[1])
    if check == "sec":
        return check_sec(concept, u, witness.profiles[1], witness.beliefs)
    if check == "lemma1":
        from ..theorems import lemma1_check

        return lemma1_check(concept, list(witness.profiles), witness.explanation["alternative"])
    raise ValueError(f"unknown check {check!r}")


def replays(verdict: AxiomVerdict) -> bool:
    """True when ``verdict`` is a failure whose witness reproduces the same violation."""
    if verdict.witness is None:
        return False
    again = replay(verdict.concept, verdict.witness)
    return (
        again.witness is not None
        and again.witness.violating_alternative == verdict.witness.violating_alternative
    )
