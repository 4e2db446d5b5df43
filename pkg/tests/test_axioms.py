from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, profile_pairs, profiles, weights
from welfare_axioms.axioms import (
    AxiomId,
    SearchConfig,
    check_anonymity,
    check_continuity,
    check_mc,
    check_nonemptiness,
    check_oec,
    check_sec,
    check_unanimity,
    replay,
    replays,
    run_search,
    search_counterexample,
)
from welfare_axioms.core import (
    ANTI_BENTHAM,
    BENTHAM,
    RAWLS,
    SUB_BENTHAM,
    SUB_RAWLS,
    UNANIMOUS,
    BeliefMatrix,
    Permutation,
    PerturbationFamily,
    dictator_concept,
    evaluate,
    meet,
    mix,
)

SWAP = Permutation((1, 0))
CONCEPTS = (BENTHAM, RAWLS, UNANIMOUS, ANTI_BENTHAM, SUB_RAWLS, SUB_BENTHAM, dictator_concept(0))


def test_axiom_parse():
    assert AxiomId.parse("mc") is AxiomId.MINIMUM_CONSISTENCY
    assert AxiomId.parse("MINIMUM_CONSISTENCY") is AxiomId.MINIMUM_CONSISTENCY
    assert AxiomId.parse("anonymity") is AxiomId.ANONYMITY
    with pytest.raises(ValueError):
        AxiomId.parse("fairness")


def test_nonemptiness_examples():
    assert check_nonemptiness(BENTHAM, P([[1, 0], [0, 1]])).passed
    v = check_nonemptiness(UNANIMOUS, P([[1, 0], [0, 1]]))
    assert not v.passed and v.witness.profiles == (P([[1, 0], [0, 1]]),)
    assert check_nonemptiness(RAWLS, P([[2, 1], [0, 1]])).passed


def test_anonymity_examples():
    assert check_anonymity(BENTHAM, P([[2, 0], [0, 1]]), SWAP).passed
    v = check_anonymity(dictator_concept(0), P([[1, 0], [0, 1]]), SWAP)
    assert not v.passed and v.witness.permutation == SWAP
    u = P([[1, 0], [0, 1]])
    for c in CONCEPTS:
        assert check_anonymity(c, u, Permutation.identity(2)).passed


def test_anonymity_exhaustive_counts_all_permutations():
    u = P([[1, 2, 0], [2, 1, 0], [0, 0, 3]])
    assert check_anonymity(BENTHAM, u).trials == 6


def test_anonymity_samples_beyond_bound():
    u = P([[k % 3, (k + 1) % 2] for k in range(7)])
    v = check_anonymity(BENTHAM, u, samples=50, seed=3)
    assert v.passed and v.trials == 50


def test_unanimity_examples():
    assert check_unanimity(BENTHAM, P([[1, 0], [1, 0]])).passed
    v = check_unanimity(ANTI_BENTHAM, P([[1, 0], [1, 0]]))
    assert not v.passed and v.witness.violating_alternative == 1
    for c in CONCEPTS:
        v = check_unanimity(c, P([[1, 0], [0, 1]]))
        assert v.passed and v.trials == 0


TIE = P([[1, 1], [1, 1]])
EPS = (F(1, 2), F(1, 4), F(1, 8))


def test_continuity_examples():
    assert check_continuity(BENTHAM, PerturbationFamily(TIE, 0, EPS)).passed
    for c in (SUB_BENTHAM, SUB_RAWLS):
        v = check_continuity(c, PerturbationFamily(TIE, 1, EPS))
        assert not v.passed and v.witness.violating_alternative == 1
        assert replays(v)


def test_continuity_tail():
    # Members before tail_from are ignored.
    fam = PerturbationFamily(TIE, 1, EPS)
    assert not check_continuity(SUB_BENTHAM, fam, tail_from=2).passed


def test_oec_examples():
    u, v = P([[2, 0], [0, 0]]), P([[0, 0], [2, 0]])
    verdict = check_oec(RAWLS, u, v, F(1, 2))
    assert not verdict.passed and verdict.witness.violating_alternative == 1
    assert check_oec(BENTHAM, u, v, F(1, 2)).passed
    for c in CONCEPTS:
        assert check_oec(c, u, u, F(1, 3)).passed


def test_mc_examples():
    u, v = P([[4, 1], [0, 1]]), P([[0, 1], [4, 1]])
    verdict = check_mc(BENTHAM, u, v)
    assert not verdict.passed and verdict.witness.violating_alternative == 0
    assert check_mc(RAWLS, u, v).passed
    for c in CONCEPTS:
        assert check_mc(c, u, u).passed


def test_sec_examples():
    u, v = P([[1, 0], [0, 1]]), P([[0, 1], [1, 0]])
    beliefs = BeliefMatrix((F(9, 10), F(1, 10)))
    for c in (BENTHAM, RAWLS):
        verdict = check_sec(c, u, v, beliefs)
        assert not verdict.passed and verdict.witness.violating_alternative == 1
        assert replays(verdict)


def test_consistency_vacuous_on_empty_intersection():
    u, v = P([[2, 0], [2, 0]]), P([[0, 2], [0, 2]])
    for verdict in (
        check_oec(BENTHAM, u, v, F(1, 2)),
        check_mc(BENTHAM, u, v),
        check_sec(BENTHAM, u, v, (F(1, 3), F(2, 3))),
    ):
        assert verdict.passed and verdict.trials == 0


@settings(max_examples=200)
@given(profile_pairs(), weights, st.sampled_from(CONCEPTS))
def test_sec_with_uniform_beliefs_reduces_to_oec(pair, p, concept):
    u, v = pair
    a = check_sec(concept, u, v, BeliefMatrix.uniform(p, u.n_agents))
    b = check_oec(concept, u, v, p)
    assert a.passed == b.passed
    assert a.trials == b.trials
    if not a.passed:
        assert a.witness.violating_alternative == b.witness.violating_alternative


@given(profile_pairs(), weights)
def test_theorem_backed_passes(pair, p):
    u, v = pair
    assert check_oec(BENTHAM, u, v, p).passed
    assert check_mc(RAWLS, u, v).passed


@given(profile_pairs(), weights, st.sampled_from(CONCEPTS))
def test_failures_replay(pair, p, concept):
    u, v = pair
    for verdict in (check_oec(concept, u, v, p), check_mc(concept, u, v), check_unanimity(concept, u)):
        if not verdict.passed:
            assert replays(verdict)
            again = replay(concept, verdict.witness)
            assert again.witness.violating_alternative == verdict.witness.violating_alternative


@given(profile_pairs(), st.sampled_from(CONCEPTS))
def test_violating_alternative_is_lowest(pair, concept):
    u, v = pair
    verdict = check_mc(concept, u, v)
    if not verdict.passed:
        lost = (evaluate(concept, u) & evaluate(concept, v)) - evaluate(concept, meet(u, v))
        assert verdict.witness.violating_alternative == min(lost)


def test_replays_is_false_for_passes():
    assert not replays(check_mc(RAWLS, P([[1, 0], [0, 1]]), P([[1, 0], [0, 1]])))


# --- search ---------------------------------------------------------------

SMALL = SearchConfig(random_trials=300)


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(grid=())
    with pytest.raises(ValueError):
        SearchConfig(max_agents=1)
    with pytest.raises(ValueError):
        SearchConfig(weight_grid=(F(1),))
    with pytest.raises(ValueError):
        SearchConfig(random_trials=-1)


def test_search_bentham_mc_witness():
    w = search_counterexample(BENTHAM, AxiomId.MINIMUM_CONSISTENCY, SMALL)
    assert w is not None
    u, v = w.profiles
    assert w.violating_alternative in evaluate(BENTHAM, u) & evaluate(BENTHAM, v)
    assert w.violating_alternative not in evaluate(BENTHAM, meet(u, v))


def test_search_rawls_oec_witness():
    w = search_counterexample(RAWLS, AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY, SMALL)
    assert w is not None
    u, v = w.profiles
    assert w.violating_alternative not in evaluate(RAWLS, mix(u, v, w.weight.p))


def test_search_bentham_oec_finds_nothing():
    assert search_counterexample(BENTHAM, AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY, SMALL) is None
    verdict = run_search(BENTHAM, AxiomId.OBJECTIVE_EXPECTED_CONSISTENCY, SMALL)
    assert verdict.passed and verdict.trials > 0


def test_search_sec_for_bentham():
    assert search_counterexample(BENTHAM, AxiomId.SUBJECTIVE_EXPECTED_CONSISTENCY, SMALL) is not None


@pytest.mark.parametrize("axiom", list(AxiomId))
def test_search_is_deterministic(axiom):
    cfg = SearchConfig(random_trials=200, seed=11)
    for concept in (RAWLS, SUB_BENTHAM):
        a = run_search(concept, axiom, cfg)
        b = run_search(concept, axiom, cfg)
        assert a == b
        if not a.passed:
            assert replays(a)
