"""Profile documents (JSON) and the JSON renderings used in run reports.

A profile document looks like::

    {"agents": ["Jeremy", "John"],
     "alternatives": ["lab", "cafe"],
     "matrix": [[1, "1/2"], [0, 0.9]]}

Entries may be integers, ``"a/b"`` strings, decimal strings, or bare JSON
numbers; JSON numbers are read from their literal text, so ``0.9`` is exactly
``9/10``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .core import ProfileError, UtilityProfile, format_rational, to_rational


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class ProfileDocument:
    agents: tuple[str, ...]
    alternatives: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def to_profile(self) -> UtilityProfile:
        return UtilityProfile(self.matrix, self.alternatives, self.agents)

    @classmethod
    def from_profile(cls, u: UtilityProfile) -> "ProfileDocument":
        agents = u.agents or tuple(f"agent{i + 1}" for i in range(u.n_agents))
        return cls(tuple(agents), tuple(a.name for a in u.alternatives), u.values)


def rational_to_json(q: Fraction):
    """Integers stay JSON integers; everything else becomes an ``"a/b"`` string."""
    return q.numerator if q.denominator == 1 else format_rational(q)


def profile_to_json(u: UtilityProfile) -> list[list]:
    return [[rational_to_json(q) for q in row] for row in u.values]


def parse_document(text: str) -> ProfileDocument:
    try:
        raw = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError("a profile document must be a JSON object")
    for key in ("agents", "alternatives", "matrix"):
        if key not in raw:
            raise DocumentError(f"missing field {key!r}")
    agents, alternatives, matrix = raw["agents"], raw["alternatives"], raw["matrix"]
    if not isinstance(agents, list) or not isinstance(alternatives, list) or not isinstance(matrix, list):
        raise DocumentError("agents, alternatives and matrix must be lists")
    if len(agents) < 2:
        raise DocumentError(f"at least 2 agents are required, got {len(agents)}")
    if not alternatives:
        raise DocumentError("at least one alternative is required")
    if len(matrix) != len(agents):
        raise DocumentError(f"matrix has {len(matrix)} rows for {len(agents)} agents")
    rows = []
    for i, row in enumerate(matrix):
        if not isinstance(row, list) or len(row) != len(alternatives):
            width = len(row) if isinstance(row, list) else "no"
            raise DocumentError(
                f"row {i} has {width} entries for {len(alternatives)} alternatives"
            )
        parsed = []
        for j, x in enumerate(row):
            try:
                parsed.append(to_rational(x))
            except ProfileError as exc:
                raise DocumentError(f"row {i}, column {j}: {exc}") from None
        rows.append(tuple(parsed))
    return ProfileDocument(tuple(map(str, agents)), tuple(map(str, alternatives)), tuple(rows))


def parse_profile(text: str) -> UtilityProfile:
    return parse_document(text).to_profile()


def load_profile(path) -> UtilityProfile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


def serialize_profile(u: UtilityProfile) -> str:
    doc = ProfileDocument.from_profile(u)
    return json.dumps(
        {
            "agents": list(doc.agents),
            "alternatives": list(doc.alternatives),
            "matrix": profile_to_json(u),
        }
    )
