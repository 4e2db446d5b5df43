"""Exhaustive-then-random counterexample search over small profiles."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from ..core import (
    BeliefMatrix,
    MixtureWeight,
    Permutation,
    PerturbationFamily,
    SolutionConceptId,
    UtilityProfile,
    evaluate,
    grid_profiles,
    meet,
    mix,
    subjective_mix,
    to_rational,
)
from ..core.profile import default_alternatives
from .checks import (
    AxiomId,
    AxiomVerdict,
    Witness,
    check_anonymity,
    check_continuity,
    check_mc,
    check_nonemptiness,
    check_oec,
    check_sec,
    check_unanimity,
)

DEFAULT_GRID = (Fraction(0), Fraction(1), Fraction(2))
DEFAULT_WEIGHTS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
RANDOM_DENOMINATORS = (1, 2, 3, 4)


@dataclass(frozen=True)
class SearchConfig:
    """Bounds and randomness for :func:`search_counterexample`.

    The exhaustive phase covers every profile with entries in ``grid``,
    ``2..max_agents`` agents and ``1..max_alternatives`` alternatives, every
    ordered pair of same-shape profiles for the two-profile axioms and every
    weight (or belief vector) drawn from ``weight_grid``.  The random phase then
    draws ``random_trials`` instances whose entries are rationals with small
    denominators inside the grid's range.
    """

    grid: tuple[Fraction, ...] = DEFAULT_GRID
    max_agents: int = 2
    max_alternatives: int = 3
    random_trials: int = 20_000
    seed: int = 0
    weight_grid: tuple[Fraction, ...] = DEFAULT_WEIGHTS
    continuity_length: int = 6

    def __post_init__(self):
        grid = tuple(sorted(set(to_rational(g) for g in self.grid)))
        if not grid:
            raise ValueError("grid must be nonempty")
        weights = tuple(sorted(set(MixtureWeight(w).p for w in self.weight_grid)))
        if not weights:
            raise ValueError("weight grid must be nonempty")
        if self.max_agents < 2:
            raise ValueError("profiles need at least 2 agents")
        if self.max_alternatives < 1:
            raise ValueError("profiles need at least one alternative")
        if self.random_trials < 0:
            raise ValueError("random_trials must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.continuity_length < 1:
            raise ValueError("continuity_length must be positive")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "weight_grid", weights)

    @property
    def weights_symmetric(self) -> bool:
        return set(self.weight_grid) == {1 - p for p in self.weight_grid}

    def shapes(self):
        for m in range(1, self.max_alternatives + 1):
            for n in range(2, self.max_agents + 1):
                yield n, m


def search_counterexample(
    concept: SolutionConceptId, axiom: AxiomId, cfg: SearchConfig | None = None
) -> Witness | None:
    """The first witness in the deterministic search order, or ``None``."""
    return run_search(concept, axiom, cfg).witness


def run_search(concept: SolutionConceptId, axiom: AxiomId, cfg: SearchConfig | None = None) -> AxiomVerdict:
    """Like :func:`search_counterexample` but keeps the substantive trial count."""
    cfg = cfg or SearchConfig()
    trials = 0
    for verdict in _exhaustive(concept, axiom, cfg):
        trials += verdict.trials
        if not verdict.passed:
            return AxiomVerdict(axiom, concept, trials, verdict.witness)
    for verdict in _random(concept, axiom, cfg):
        trials += verdict.trials
        if not verdict.passed:
            return AxiomVerdict(axiom, concept, trials, verdict.witness)
    return AxiomVerdict(axiom, concept, trials)


def _exhaustive(concept, axiom, cfg: SearchConfig):
    for n, m in cfg.shapes():
        profiles = list(grid_profiles(cfg.grid, n, m))
        if axiom is AxiomId.NONEMPTINESS:
            for u in profiles:
                yield check_nonemptiness(concept, u)
        elif axiom is AxiomId.ANONYMITY:
            for u in profiles:
                yield check_anonymity(concept, u, seed=cfg.seed)
        elif axiom is AxiomId.UNANIMITY:
            for u in profiles:
                yield check_unanimity(concept, u)
        elif axiom is AxiomId.CONTINUITY:
            for u in profiles:
                for a in range(m):
                    yield check_continuity(concept, PerturbationFamily.halving(u, a, cfg.continuity_length))
        else:
            yield from _pairs(concept, axiom, cfg, profiles, n)


def _pairs(concept, axiom, cfg: SearchConfig, profiles, n):
    # Solutions of the grid profiles are computed once; only pairs with a
    # common choice reach the mixture, and any failure is re-derived by the
    # public checker so the returned witness carries the full record.
    phis = [evaluate(concept, u) for u in profiles]
    weights = [MixtureWeight(p) for p in cfg.weight_grid]
    beliefs = [BeliefMatrix(ws) for ws in itertools.product(cfg.weight_grid, repeat=n)]
    # (u, v, p) and (v, u, 1 - p) are the same instance, as are (u, v) and
    # (v, u) for the meet; with a weight grid closed under p -> 1 - p only
    # pairs with i <= j need visiting.
    symmetric = axiom is AxiomId.MINIMUM_CONSISTENCY or cfg.weights_symmetric
    for i, (u, phi_u) in enumerate(zip(profiles, phis)):
        for j in range(i if symmetric else 0, len(profiles)):
            v, phi_v = profiles[j], phis[j]
            common = phi_u & phi_v
            if not common:
                continue
            if axiom is AxiomId.MINIMUM_CONSISTENCY:
                if common <= evaluate(concept, meet(u, v)):
                    yield AxiomVerdict(axiom, concept, 1)
                else:
                    yield check_mc(concept, u, v)
            elif axiom is AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY:
                for p in weights:
                    if common <= evaluate(concept, mix(u, v, p)):
                        yield AxiomVerdict(axiom, concept, 1)
                    else:
                        yield check_oec(concept, u, v, p)
            elif axiom is AxiomId.SUBJECTIVE_EXPECTED_CONSISTENCY:
                for b in beliefs:
                    if common <= evaluate(concept, subjective_mix(u, v, b)):
                        yield AxiomVerdict(axiom, concept, 1)
                    else:
                        yield check_sec(concept, u, v, b)
            else:
                raise ValueError(f"no search for axiom {axiom}")


class _RandomProfiles:
    def __init__(self, cfg: SearchConfig):
        self.rng = random.Random(cfg.seed)
        self.cfg = cfg
        self.lo, self.hi = cfg.grid[0], cfg.grid[-1]
        self.alternatives = [default_alternatives(m) for m in range(cfg.max_alternatives + 1)]
        self.ranges = {
            d: (math.ceil(self.lo * d), math.floor(self.hi * d)) for d in RANDOM_DENOMINATORS
        }

    def shape(self):
        return self.rng.randint(2, self.cfg.max_agents), self.rng.randint(1, self.cfg.max_alternatives)

    def profile(self, n, m) -> UtilityProfile:
        """Entries ``k/d`` in the grid's range with ``d`` drawn from ``RANDOM_DENOMINATORS``."""
        rng = self.rng
        den = math.lcm(*RANDOM_DENOMINATORS)
        rows = []
        for _ in range(n):
            row = []
            for _ in range(m):
                d = rng.choice(RANDOM_DENOMINATORS)
                row.append(rng.randint(*self.ranges[d]) * (den // d))
            rows.append(tuple(row))
        u = UtilityProfile._from_scaled(tuple(rows), den, self.alternatives[m])
        u._reduce()
        return u


def _random(concept, axiom, cfg: SearchConfig):
    gen = _RandomProfiles(cfg)
    rng = gen.rng
    for _ in range(cfg.random_trials):
        n, m = gen.shape()
        u = gen.profile(n, m)
        if axiom is AxiomId.NONEMPTINESS:
            yield check_nonemptiness(concept, u)
        elif axiom is AxiomId.ANONYMITY:
            yield check_anonymity(concept, u, Permutation(tuple(rng.sample(range(n), n))))
        elif axiom is AxiomId.UNANIMITY:
            yield check_unanimity(concept, u)
        elif axiom is AxiomId.CONTINUITY:
            for a in range(m):
                yield check_continuity(concept, PerturbationFamily.halving(u, a, cfg.continuity_length))
        else:
            v = gen.profile(n, m)
            if axiom is AxiomId.MINIMUM_CONSISTENCY:
                yield check_mc(concept, u, v)
            elif axiom is AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY:
                yield check_oec(concept, u, v, rng.choice(cfg.weight_grid))
            else:
                beliefs = BeliefMatrix(tuple(rng.choice(cfg.weight_grid) for _ in range(n)))
                yield check_sec(concept, u, v, beliefs)
