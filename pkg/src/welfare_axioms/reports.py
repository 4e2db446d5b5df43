"""Run reports: a JSON-native record of one command plus its human rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .axioms import AxiomVerdict, SearchConfig, Witness
from .core import SolutionConceptId, UtilityProfile, format_rational, format_set
from .documents import profile_to_json
from .theorems import CharacterizationTrace, ImpossibilityReport, IndependenceTable


@dataclass(frozen=True)
class RunReport:
    command: list[str]
    config: dict[str, Any]
    result: dict[str, Any]
    human: str = field(default="", compare=False)

    def to_json(self) -> str:
        payload = {"command": self.command, "config": self.config, "result": self.result}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        raw = json.loads(text)
        return cls(raw["command"], raw["config"], raw["result"])


def config_to_json(cfg: SearchConfig) -> dict[str, Any]:
    return {
        "grid": [format_rational(g) for g in cfg.grid],
        "max_agents": cfg.max_agents,
        "max_alternatives": cfg.max_alternatives,
        "random_trials": cfg.random_trials,
        "seed": cfg.seed,
        "weights": [format_rational(w) for w in cfg.weight_grid],
        "continuity_length": cfg.continuity_length,
    }


def witness_to_json(w: Witness) -> dict[str, Any]:
    out: dict[str, Any] = {
        "check": w.check,
        "profiles": [profile_to_json(p) for p in w.profiles],
        "violating_alternative": w.violating_alternative,
        "explanation": w.explanation,
    }
    if w.permutation is not None:
        out["permutation"] = list(w.permutation.mapping)
    if w.weight is not None:
        out["weight"] = str(w.weight)
    if w.beliefs is not None:
        out["beliefs"] = [format_rational(b) for b in w.beliefs.weights]
    if w.family is not None:
        out["family"] = {
            "target": w.family.target,
            "epsilons": [format_rational(e) for e in w.family.epsilons],
            "tail_from": w.tail_from,
        }
    return out


def verdict_to_json(v: AxiomVerdict) -> dict[str, Any]:
    out: dict[str, Any] = {
        "axiom": v.axiom.value,
        "concept": str(v.concept),
        "holds": v.passed,
        "trials": v.trials,
    }
    if v.witness is not None:
        out["witness"] = witness_to_json(v.witness)
    return out


def _profile_lines(u: UtilityProfile, indent: str = "    ") -> list[str]:
    cells = [[format_rational(q) for q in row] for row in u.values]
    width = max(len(c) for row in cells for c in row)
    return [indent + "[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells]


def describe_witness(concept: SolutionConceptId, w: Witness) -> list[str]:
    lines = []
    names = "uvwxyz"
    for k, p in enumerate(w.profiles):
        lines.append(f"  {names[k] if k < len(names) else f'u{k}'} =")
        lines.extend(_profile_lines(p))
    if w.permutation is not None:
        lines.append(f"  permutation = {list(w.permutation.mapping)}")
    if w.weight is not None:
        lines.append(f"  p = {w.weight}")
    if w.beliefs is not None:
        lines.append(f"  beliefs = {w.beliefs}")
    if w.family is not None:
        eps = ", ".join(format_rational(e) for e in w.family.epsilons)
        lines.append(f"  bump s{w.family.target + 1} by eps in ({eps})")
    if w.violating_alternative is not None:
        lines.append(f"  violating alternative: s{w.violating_alternative + 1}")
    for key, value in w.explanation.items():
        if key.startswith(("phi", "unanimous")):
            value = format_set(value)
        lines.append(f"  {key}: {value}")
    return lines


def table_to_json(table: IndependenceTable) -> dict[str, Any]:
    rows = []
    for c, verdicts in table.rows():
        rows.append({"concept": c.short_name, "id": str(c), "cells": [verdict_to_json(v) for v in verdicts]})
    return {"axioms": [a.value for a in table.axioms], "rows": rows}


def render_table(table: IndependenceTable) -> str:
    header = "".ljust(8) + "".join(a.value.ljust(14) for a in table.axioms)
    lines = [header]
    for c, verdicts in table.rows():
        cells = []
        for v in verdicts:
            cells.append((f"yes ({v.trials})" if v.passed else "no").ljust(14))
        lines.append(c.short_name.ljust(8) + "".join(cells))
    return "\n".join(lines)


def impossibility_to_json(r: ImpossibilityReport) -> dict[str, Any]:
    return {
        "concept": str(r.concept),
        "u": profile_to_json(r.u),
        "v": profile_to_json(r.v),
        "e1": profile_to_json(r.e1),
        "e2": profile_to_json(r.e2),
        "v_is_agent_swap_of_u": r.v_is_agent_swap_of_u,
        "unanimous_e1": sorted(r.unanimous_e1),
        "unanimous_e2": sorted(r.unanimous_e2),
        "phi": {k: sorted(v) for k, v in sorted(r.phi.items())},
        "premises_hold": r.premises_hold,
        "sec": [verdict_to_json(v) for v in r.sec_verdicts],
        "contradiction_established": r.contradiction_established,
    }


def trace_to_json(t: CharacterizationTrace) -> dict[str, Any]:
    return {
        "mode": t.mode.value,
        "profile": profile_to_json(t.profile),
        "permuted": [profile_to_json(p) for p in t.permuted],
        "solution": sorted(t.solution),
        "memberships": {str(a): list(m) for a, m in t.memberships.items()},
        "aggregate": profile_to_json(t.aggregate),
        "folded_matches_aggregate": t.folded_matches_aggregate,
        "aggregate_agent_constant": t.aggregate_agent_constant,
        "unanimous_of_aggregate": sorted(t.unanimous_of_aggregate),
        "passed": t.passed,
    }
