"""Command-line front end.

Exit codes: 0 success (or the axiom holds, or the contradiction is
established), 1 a violation / no contradiction / a table mismatch, 2 usage or
parse errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .axioms import AxiomId, SearchConfig, run_search
from .core import SolutionConceptId, evaluate, format_rational, format_set, to_rational
from .core.concepts import BENTHAM, RAWLS
from .documents import DocumentError, load_profile
from .reports import (
    RunReport,
    config_to_json,
    describe_witness,
    impossibility_to_json,
    render_table,
    table_to_json,
    verdict_to_json,
)
from .theorems import ImpossibilityScenario, impossibility_demo, independence_table

log = logging.getLogger("welfare_axioms")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational_list(text: str):
    try:
        return tuple(to_rational(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text: str):
    try:
        return to_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _search_flags(p: argparse.ArgumentParser) -> None:
    defaults = SearchConfig()
    p.add_argument("--grid", type=_rational_list, default=defaults.grid,
                   help="comma-separated utility values for the exhaustive phase (default 0,1,2)")
    p.add_argument("--max-agents", type=int, default=defaults.max_agents)
    p.add_argument("--max-alternatives", type=int, default=defaults.max_alternatives)
    p.add_argument("--trials", type=int, default=defaults.random_trials, help="random trials after the grid")
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--weights", type=_rational_list, default=defaults.weight_grid,
                   help="mixture weights in (0,1), e.g. 1/4,1/2,3/4")


def _config(args) -> SearchConfig:
    try:
        return SearchConfig(
            grid=args.grid,
            max_agents=args.max_agents,
            max_alternatives=args.max_alternatives,
            random_trials=args.trials,
            seed=args.seed,
            weight_grid=args.weights,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _concept(text: str) -> SolutionConceptId:
    try:
        return SolutionConceptId.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="welfare-axioms",
        description="Solve utility profiles and audit solution concepts against welfare axioms.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="evaluate a solution concept on a profile file")
    p.add_argument("profile", type=Path)
    p.add_argument("--concept", default="bentham")
    p.add_argument("--output", type=Path)

    p = sub.add_parser("audit", help="search for a counterexample to one axiom")
    p.add_argument("--concept", required=True)
    p.add_argument("--axiom", required=True)
    _search_flags(p)
    p.add_argument("--output", type=Path)

    p = sub.add_parser("table", help="build the concept-by-axiom independence table")
    _search_flags(p)
    p.add_argument("--expect-paper", action="store_true",
                   help="compare with the published table and exit 1 on any difference")
    p.add_argument("--output", type=Path)

    p = sub.add_parser("impossibility", help="replay the heterogeneous-beliefs contradiction")
    p.add_argument("--alpha", type=_rational, default=ImpossibilityScenario.alpha)
    p.add_argument("--beta", type=_rational, default=ImpossibilityScenario.beta)
    p.add_argument("--p1", type=_rational, default=ImpossibilityScenario.p1)
    p.add_argument("--p2", type=_rational, default=ImpossibilityScenario.p2)
    p.add_argument("--output", type=Path)
    return parser


def cmd_solve(args) -> tuple[RunReport, int]:
    concept = _concept(args.concept)
    u = load_profile(args.profile)
    try:
        chosen = evaluate(concept, u)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    labels = [u.alternatives[k].name for k in sorted(chosen)]
    human = ", ".join(labels) if labels else "(empty set)"
    result = {"concept": str(concept), "solution": sorted(chosen), "labels": labels}
    return RunReport(["solve", str(args.profile), str(concept)], {}, result, human), EXIT_OK


def cmd_audit(args) -> tuple[RunReport, int]:
    concept = _concept(args.concept)
    try:
        axiom = AxiomId.parse(args.axiom)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cfg = _config(args)
    verdict = run_search(concept, axiom, cfg)
    lines = [f"{concept} / {axiom.label}:"]
    if verdict.passed:
        lines.append(f"  holds: no counterexample in {verdict.trials} trials")
    else:
        lines.append("  violated; witness:")
        lines.extend(describe_witness(concept, verdict.witness))
    report = RunReport(["audit", str(concept), axiom.value], config_to_json(cfg), verdict_to_json(verdict),
                       "\n".join(lines))
    return report, EXIT_OK if verdict.passed else EXIT_VIOLATION


def cmd_table(args) -> tuple[RunReport, int]:
    cfg = _config(args)
    table = independence_table(cfg)
    lines = [render_table(table), ""]
    for c, verdicts in table.rows():
        for v in verdicts:
            if not v.passed:
                lines.append(f"{c.short_name} violates {v.axiom.label}:")
                lines.extend(describe_witness(c, v.witness))
    result = table_to_json(table)
    code = EXIT_OK
    if args.expect_paper:
        comparison = table.compare_with_published()
        result["comparison"] = [
            {"concept": c.concept, "axiom": c.axiom, "expected": c.expected, "observed": c.observed,
             "status": c.status}
            for c in comparison
        ]
        off = [c for c in comparison if c.status != "match"]
        lines.append("")
        if off:
            code = EXIT_VIOLATION
            lines.append(f"{len(off)} of {len(comparison)} cells differ from the published table:")
            for c in off:
                yn = {True: "yes", False: "no"}
                lines.append(
                    f"  {c.concept} / {c.axiom}: published {yn[c.expected]}, observed {yn[c.observed]} ({c.status})"
                )
        else:
            lines.append(f"all {len(comparison)} cells match the published table")
    command = ["table"] + (["--expect-paper"] if args.expect_paper else [])
    return RunReport(command, config_to_json(cfg), result, "\n".join(lines)), code


def _matrix(u) -> str:
    return "[" + ", ".join("[" + ", ".join(format_rational(q) for q in row) + "]" for row in u.values) + "]"


def cmd_impossibility(args) -> tuple[RunReport, int]:
    try:
        scenario = ImpossibilityScenario(args.alpha, args.beta, args.p1, args.p2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = [impossibility_demo(scenario, c) for c in (BENTHAM, RAWLS)]
    first = reports[0]
    fmt = format_rational
    lines = [
        f"alpha={fmt(scenario.alpha)} beta={fmt(scenario.beta)} p1={fmt(scenario.p1)} p2={fmt(scenario.p2)}",
        f"u = {_matrix(first.u)}",
        f"v = {_matrix(first.v)}  (agents of u swapped: {first.v_is_agent_swap_of_u})",
        f"E1 = p.u + (I-p).v = {_matrix(first.e1)}",
        f"E2 = p.v + (I-p).u = {_matrix(first.e2)}",
        f"M(E1) = {format_set(first.unanimous_e1)}   M(E2) = {format_set(first.unanimous_e2)}",
    ]
    for r in reports:
        lines.append(
            f"{r.concept}: phi(u)={format_set(r.phi['u'])} phi(v)={format_set(r.phi['v'])} "
            f"phi(E1)={format_set(r.phi['e1'])} phi(E2)={format_set(r.phi['e2'])}"
        )
        for v in r.sec_verdicts:
            if not v.passed:
                w = v.witness
                lines.append(f"  subjective consistency fails: s{w.violating_alternative + 1} is lost in the mixture")
    if first.contradiction_established:
        lines.append("contradiction established: M(E1) and M(E2) are disjoint singletons")
        code = EXIT_OK
    else:
        lines.append("no contradiction (degenerate alpha = beta: no alternative is strictly unanimous)")
        code = EXIT_VIOLATION
    config = {"alpha": fmt(scenario.alpha), "beta": fmt(scenario.beta), "p1": fmt(scenario.p1), "p2": fmt(scenario.p2)}
    result = {
        "contradiction_established": first.contradiction_established,
        "reports": [impossibility_to_json(r) for r in reports],
    }
    return RunReport(["impossibility"], config, result, "\n".join(lines)), code


COMMANDS = {
    "solve": cmd_solve,
    "audit": cmd_audit,
    "table": cmd_table,
    "impossibility": cmd_impossibility,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        report, code = COMMANDS[args.command](args)
    except (UsageError, DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.human)
    if args.output is not None:
        args.output.write_text(report.to_json(), encoding="utf-8")
        log.info("wrote %s", args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
