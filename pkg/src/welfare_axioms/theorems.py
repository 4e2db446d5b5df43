"""Mechanized replays: the impossibility trace, the averaging lemma, the
characterization chains for Bentham and Rawls, and the independence table."""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction

from .axioms import (
    AxiomId,
    AxiomVerdict,
    SearchConfig,
    Witness,
    check_anonymity,
    check_nonemptiness,
    check_sec,
    check_unanimity,
    replays,
    run_search,
)
from .core import (
    ANTI_BENTHAM,
    BENTHAM,
    RAWLS,
    SUB_BENTHAM,
    SUB_RAWLS,
    UNANIMOUS,
    BeliefMatrix,
    Permutation,
    ProfileError,
    SolutionConceptId,
    UtilityProfile,
    cyclic_aggregate_min,
    cyclic_aggregate_sum,
    dictator_concept,
    evaluate,
    meet,
    mix,
    permute,
    subjective_mix,
    to_rational,
    unanimous,
)

# ---------------------------------------------------------------------------
# Impossibility under heterogeneous beliefs
# ---------------------------------------------------------------------------

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ImpossibilityScenario:
    """Utilities ``alpha >= beta`` and beliefs ``1/2 < p1 < 1``, ``0 < p2 < 1/2``."""

    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(0)
    p1: Fraction = Fraction(9, 10)
    p2: Fraction = Fraction(1, 10)

    def __post_init__(self):
        for name in ("alpha", "beta", "p1", "p2"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.alpha < self.beta:
            raise ValueError(f"alpha ({self.alpha}) must be at least beta ({self.beta})")
        if not HALF < self.p1 < 1:
            raise ValueError(f"p1 must lie in (1/2, 1), got {self.p1}")
        if not 0 < self.p2 < HALF:
            raise ValueError(f"p2 must lie in (0, 1/2), got {self.p2}")

    @property
    def beliefs(self) -> BeliefMatrix:
        return BeliefMatrix((self.p1, self.p2))


@dataclass(frozen=True)
class ImpossibilityReport:
    scenario: ImpossibilityScenario
    concept: SolutionConceptId
    u: UtilityProfile
    v: UtilityProfile
    e1: UtilityProfile
    e2: UtilityProfile
    unanimous_e1: frozenset
    unanimous_e2: frozenset
    v_is_agent_swap_of_u: bool
    phi: dict[str, frozenset]
    premises_hold: bool
    sec_verdicts: tuple[AxiomVerdict, AxiomVerdict]
    contradiction_established: bool

    @property
    def sec_violated(self) -> bool:
        return any(not v.passed for v in self.sec_verdicts)


def impossibility_demo(scenario: ImpossibilityScenario, concept: SolutionConceptId) -> ImpossibilityReport:
    """Replay the two-agent, two-alternative impossibility argument for ``concept``.

    ``u`` and ``v`` swap the agents' rows, so any anonymous concept picks the
    same nonempty set at both.  Mixing them with the beliefs ``(p1, p2)`` one way
    round makes the first alternative unanimously best; the other way round
    makes the second one unanimously best.  Consistency would force a common
    choice in both mixtures, while Unanimity forces disjoint ones.
    """
    a, b = scenario.alpha, scenario.beta
    u = UtilityProfile([[a, b], [b, a]])
    v = UtilityProfile([[b, a], [a, b]])
    swap = Permutation((1, 0))
    beliefs = scenario.beliefs
    e1 = subjective_mix(u, v, beliefs)
    e2 = subjective_mix(v, u, beliefs)
    m1, m2 = unanimous(e1), unanimous(e2)
    contradiction = len(m1) == 1 and len(m2) == 1 and not (m1 & m2)

    profiles = {"u": u, "v": v, "e1": e1, "e2": e2}
    phi = {name: evaluate(concept, p) for name, p in profiles.items()}
    premises = all(
        check_nonemptiness(concept, p).passed
        and check_anonymity(concept, p).passed
        and check_unanimity(concept, p).passed
        for p in profiles.values()
    )
    sec = (check_sec(concept, u, v, beliefs), check_sec(concept, v, u, beliefs))
    return ImpossibilityReport(
        scenario=scenario,
        concept=concept,
        u=u,
        v=v,
        e1=e1,
        e2=e2,
        unanimous_e1=m1,
        unanimous_e2=m2,
        v_is_agent_swap_of_u=permute(u, swap) == v,
        phi=phi,
        premises_hold=premises,
        sec_verdicts=sec,
        contradiction_established=contradiction,
    )


# ---------------------------------------------------------------------------
# Averaging lemma and the characterization chains
# ---------------------------------------------------------------------------


def iterated_average(profiles) -> UtilityProfile:
    """Equal-weight average built as ``mix(avg_k, u_{k+1}, k/(k+1))``, one profile at a time."""
    profiles = list(profiles)
    if not profiles:
        raise ValueError("cannot average an empty list of profiles")
    avg = profiles[0]
    for k, u in enumerate(profiles[1:], start=1):
        avg = mix(avg, u, Fraction(k, k + 1))
    return avg


def lemma1_check(concept: SolutionConceptId, profiles, s: int) -> AxiomVerdict:
    """If ``s`` is chosen at every profile, check it is chosen at their average.

    The verdict is filed under Objective Expected Consistency, the axiom the
    averaging argument rests on.  It passes vacuously when some profile does
    not choose ``s``.
    """
    profiles = list(profiles)
    if len(profiles) < 2:
        raise ValueError("the averaging lemma needs at least two profiles")
    first = profiles[0]
    for p in profiles[1:]:
        if not first.compatible_with(p):
            raise ProfileError("profiles in the averaging lemma must share shape and alternatives")
    if not 0 <= s < first.n_alternatives:
        raise ProfileError(f"alternative {s} outside 0..{first.n_alternatives - 1}")
    axiom = AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY
    if any(s not in evaluate(concept, p) for p in profiles):
        return AxiomVerdict(axiom, concept, 0)
    avg = iterated_average(profiles)
    phi_avg = evaluate(concept, avg)
    if s in phi_avg:
        return AxiomVerdict(axiom, concept, 1)
    w = Witness(
        "lemma1",
        tuple(profiles),
        s,
        explanation={
            "alternative": s,
            "average": [[str(q) for q in row] for row in avg.values],
            "phi_average": sorted(phi_avg),
        },
    )
    return AxiomVerdict(axiom, concept, 1, w)


class AggregationMode(enum.Enum):
    SUM = "sum"
    MIN = "min"


@dataclass(frozen=True)
class CharacterizationTrace:
    """Every step of the argument that a consistent anonymous unanimous concept
    lies inside Bentham (sum mode) or Rawls (min mode) at ``profile``."""

    mode: AggregationMode
    profile: UtilityProfile
    permuted: tuple[UtilityProfile, ...]
    solution: frozenset
    memberships: dict[int, tuple[bool, ...]]
    aggregate: UtilityProfile
    folded_matches_aggregate: bool
    aggregate_agent_constant: bool
    unanimous_of_aggregate: frozenset
    passed: bool


def characterization_trace(u: UtilityProfile, mode: AggregationMode | str) -> CharacterizationTrace:
    """Run the cyclic-permutation chain for ``u``.

    (a) build the ``n`` cyclic shifts ``u_{sigma^k}``; (b) every member of
    ``phi(u)`` is chosen at each shift; (c) the aggregate of the shifts is
    agent-constant; (d) its unanimous set equals ``phi(u)``.  The aggregate is
    computed twice, by folding the shifts and by the closed form, and the two
    must agree.
    """
    mode = AggregationMode(mode)
    n = u.n_agents
    phi = BENTHAM if mode is AggregationMode.SUM else RAWLS
    permuted = tuple(permute(u, Permutation.cyclic(n, k)) for k in range(1, n + 1))
    solution = evaluate(phi, u)
    memberships = {a: tuple(a in evaluate(phi, w) for w in permuted) for a in sorted(solution)}
    if mode is AggregationMode.SUM:
        aggregate = cyclic_aggregate_sum(u)
        folded = iterated_average(permuted)
    else:
        aggregate = cyclic_aggregate_min(u)
        folded = functools.reduce(meet, permuted)
    constant = aggregate.is_agent_constant()
    m_agg = unanimous(aggregate)
    passed = (
        all(all(row) for row in memberships.values())
        and folded == aggregate
        and constant
        and m_agg == solution
    )
    return CharacterizationTrace(
        mode=mode,
        profile=u,
        permuted=permuted,
        solution=solution,
        memberships=memberships,
        aggregate=aggregate,
        folded_matches_aggregate=folded == aggregate,
        aggregate_agent_constant=constant,
        unanimous_of_aggregate=m_agg,
        passed=passed,
    )


# ---------------------------------------------------------------------------
# Independence of the axioms
# ---------------------------------------------------------------------------

TABLE_CONCEPTS = (UNANIMOUS, dictator_concept(0), ANTI_BENTHAM, SUB_RAWLS, SUB_BENTHAM, RAWLS, BENTHAM)
TABLE_AXIOMS = (
    AxiomId.NONEMPTINESS,
    AxiomId.ANONYMITY,
    AxiomId.UNANIMITY,
    AxiomId.CONTINUITY,
    AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY,
    AxiomId.MINIMUM_CONSISTENCY,
)

# Published pattern, rows in TABLE_CONCEPTS order, columns in TABLE_AXIOMS order.
PUBLISHED_TABLE = {
    "M": (False, True, True, True, True, True),
    "dict^0": (True, False, True, True, True, True),
    "AB": (True, True, False, True, True, False),
    "subR": (True, True, True, False, False, True),
    "subB": (True, True, True, False, True, False),
    "R": (True, True, True, True, False, True),
    "B": (True, True, True, True, True, False),
}


@dataclass(frozen=True)
class CellComparison:
    concept: str
    axiom: str
    expected: bool
    observed: bool
    status: str  # "match", "mismatch" or "inconclusive"


@dataclass(frozen=True)
class IndependenceTable:
    config: SearchConfig
    concepts: tuple[SolutionConceptId, ...]
    axioms: tuple[AxiomId, ...]
    cells: dict[tuple[str, str], AxiomVerdict]

    def cell(self, concept: SolutionConceptId | str, axiom: AxiomId | str) -> AxiomVerdict:
        key_c = concept if isinstance(concept, str) else concept.short_name
        key_a = axiom if isinstance(axiom, str) else axiom.value
        return self.cells[(key_c, key_a)]

    def holds(self, concept, axiom) -> bool:
        return self.cell(concept, axiom).passed

    def rows(self):
        for c in self.concepts:
            yield c, [self.cells[(c.short_name, a.value)] for a in self.axioms]

    def compare_with_published(self) -> list[CellComparison]:
        """Cell-by-cell comparison with the published pattern.

        A published "no" for which the search found no witness is reported as
        inconclusive rather than a mismatch: a finite search cannot prove the
        axiom holds.
        """
        out = []
        for c in self.concepts:
            expected_row = PUBLISHED_TABLE[c.short_name]
            for a, expected in zip(self.axioms, expected_row):
                observed = self.cells[(c.short_name, a.value)].passed
                if observed == expected:
                    status = "match"
                elif not expected and observed:
                    status = "inconclusive"
                else:
                    status = "mismatch"
                out.append(CellComparison(c.short_name, a.value, expected, observed, status))
        return out

    def matches_published(self) -> bool:
        return all(c.status == "match" for c in self.compare_with_published())

    def witnesses_replay(self) -> bool:
        return all(replays(v) for v in self.cells.values() if not v.passed)


def independence_table(cfg: SearchConfig | None = None) -> IndependenceTable:
    """Search every concept/axiom cell; violated cells keep their first witness."""
    cfg = cfg or SearchConfig()
    cells = {}
    for c in TABLE_CONCEPTS:
        for a in TABLE_AXIOMS:
            cells[(c.short_name, a.value)] = run_search(c, a, cfg)
    return IndependenceTable(cfg, TABLE_CONCEPTS, TABLE_AXIOMS, cells)
