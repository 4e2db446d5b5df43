from .checks import (
    ANONYMITY_EXHAUSTIVE_MAX_AGENTS,
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
    replay,
    replays,
)
from .search import SearchConfig, run_search, search_counterexample

__all__ = [
    "ANONYMITY_EXHAUSTIVE_MAX_AGENTS",
    "AxiomId",
    "AxiomVerdict",
    "SearchConfig",
    "Witness",
    "check_anonymity",
    "check_continuity",
    "check_mc",
    "check_nonemptiness",
    "check_oec",
    "check_sec",
    "check_unanimity",
    "replay",
    "replays",
    "run_search",
    "search_counterexample",
]
