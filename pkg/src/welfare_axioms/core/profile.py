"""Utility profiles and the small value types the axioms quantify over.

A profile is stored as integer numerators over one shared positive
denominator.  Every comparison made by a solution concept is then an integer
comparison, and every value handed back to callers is an exact
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


class ProfileError(ValueError):
    """Raised for malformed profiles or incompatible profile operations."""


def to_rational(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Integers, ``Fraction``/``Decimal`` instances and strings such as ``"9/10"``
    or ``"0.9"`` are accepted.  Binary floats are rejected outright because
    their decimal rendering is usually not the number the caller meant.
    """
    if isinstance(value, bool):
        raise ProfileError(f"booleans are not utilities: {value!r}")
    if isinstance(value, float):
        raise ProfileError(f"binary float {value!r} is not exact; pass a string or Fraction")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ProfileError(f"cannot parse {value!r} as an exact rational") from exc


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Alternative:
    id: int
    label: str | None = None

    @property
    def name(self) -> str:
        return self.label if self.label is not None else f"s{self.id + 1}"

    def __str__(self) -> str:
        return self.name


def default_alternatives(m: int) -> tuple[Alternative, ...]:
    return tuple(Alternative(k) for k in range(m))


class UtilityProfile:
    """An ``n x m`` matrix of exact rational utilities (rows agents, columns alternatives).

    Parameters
    ----------
    values : sequence of sequences
        Row ``i`` holds agent ``i``'s utility for each alternative.
    alternatives : sequence of str or Alternative, optional
        Labels for the columns.  Defaults to ``s1 .. sm``.
    agents : sequence of str, optional
        Display names for the rows; they play no role in any computation.
    """

    __slots__ = ("_num", "_den", "_reduced", "alternatives", "agents", "_hash")

    def __init__(self, values, alternatives=None, agents=None):
        rows = [list(r) for r in values]
        if len(rows) < 2:
            raise ProfileError(f"a profile needs at least 2 agents, got {len(rows)}")
        m = len(rows[0])
        if m < 1:
            raise ProfileError("a profile needs at least one alternative")
        parsed = []
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ProfileError(f"row {i} has {len(row)} entries, expected {m}")
            parsed.append([to_rational(x) for x in row])
        den = 1
        for row in parsed:
            for q in row:
                den = den * q.denominator // math.gcd(den, q.denominator)
        num = tuple(tuple(q.numerator * (den // q.denominator) for q in row) for row in parsed)

        alts = _coerce_alternatives(alternatives, m)
        if agents is not None:
            agents = tuple(str(a) for a in agents)
            if len(agents) != len(rows):
                raise ProfileError(f"{len(agents)} agent names for {len(rows)} rows")
        self._set(num, den, alts, agents)
        self._reduced = True

    def _set(self, num, den, alternatives, agents):
        self._num = num
        self._den = den
        self.alternatives = alternatives
        self.agents = agents
        self._hash = None

    @classmethod
    def _from_scaled(cls, num, den, alternatives, agents=None) -> "UtilityProfile":
        """Build from integer numerators over a positive ``den`` without re-validating.

        The fraction is reduced lazily, the first time equality, hashing or the
        denominator is needed; solution concepts never need it.
        """
        obj = cls.__new__(cls)
        obj._set(num, den, alternatives, agents)
        obj._reduced = False
        return obj

    def _reduce(self) -> None:
        if self._reduced:
            return
        g = self._den
        for row in self._num:
            for x in row:
                g = math.gcd(g, x)
                if g == 1:
                    break
            if g == 1:
                break
        if g > 1:
            self._num = tuple(tuple(x // g for x in row) for row in self._num)
            self._den //= g
        self._reduced = True

    @property
    def n_agents(self) -> int:
        return len(self._num)

    @property
    def n_alternatives(self) -> int:
        return len(self._num[0])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._num), len(self._num[0])

    @property
    def values(self) -> tuple[tuple[Fraction, ...], ...]:
        d = self._den
        return tuple(tuple(Fraction(x, d) for x in row) for row in self._num)

    def entry(self, i: int, s: int) -> Fraction:
        return Fraction(self._num[i][s], self._den)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num[i])

    def column(self, s: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(row[s], self._den) for row in self._num)

    @property
    def denominator(self) -> int:
        """Least common denominator of all entries."""
        self._reduce()
        return self._den

    def is_agent_constant(self) -> bool:
        first = self._num[0]
        return all(row == first for row in self._num[1:])

    def compatible_with(self, other: "UtilityProfile") -> bool:
        return self.shape == other.shape and self.alternatives == other.alternatives

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.values]

    def __eq__(self, other):
        if not isinstance(other, UtilityProfile):
            return NotImplemented
        self._reduce()
        other._reduce()
        return (
            self._den == other._den
            and self._num == other._num
            and self.alternatives == other.alternatives
        )

    def __hash__(self):
        if self._hash is None:
            self._reduce()
            self._hash = hash((self._num, self._den, self.alternatives))
        return self._hash

    def __repr__(self):
        body = [[format_rational(q) for q in row] for row in self.values]
        return f"UtilityProfile({body})".replace("'", "")


def _coerce_alternatives(alternatives, m: int) -> tuple[Alternative, ...]:
    if alternatives is None:
        return default_alternatives(m)
    alts = []
    for k, a in enumerate(alternatives):
        if isinstance(a, Alternative):
            if a.id != k:
                raise ProfileError(f"alternative {a!r} listed at position {k}")
            alts.append(a)
        elif str(a) == f"s{k + 1}":
            alts.append(Alternative(k))
        else:
            alts.append(Alternative(k, str(a)))
    if len(alts) != m:
        raise ProfileError(f"{len(alts)} alternative labels for {m} columns")
    return tuple(alts)


@dataclass(frozen=True)
class Permutation:
    """Bijection on agent indices; ``permute`` sends row ``mapping[i]`` to row ``i``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(x) for x in self.mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ProfileError(f"{mapping} is not a permutation of 0..{len(mapping) - 1}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def cyclic(cls, n: int, k: int = 1) -> "Permutation":
        """The k-th power of the shift ``i -> i + 1 (mod n)``."""
        return cls(tuple((i + k) % n for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.mapping)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))

    def __call__(self, i: int) -> int:
        return self.mapping[i]


@dataclass(frozen=True)
class MixtureWeight:
    """Objective probability ``p`` of the first profile in a mixture, ``0 < p < 1``."""

    p: Fraction

    def __post_init__(self):
        p = to_rational(self.p)
        if not 0 < p < 1:
            raise ProfileError(f"mixture weight must lie in (0, 1), got {p}")
        object.__setattr__(self, "p", p)

    def __str__(self):
        return format_rational(self.p)


@dataclass(frozen=True)
class BeliefMatrix:
    """Diagonal of per-agent subjective probabilities, each in (0, 1)."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(to_rational(w) for w in self.weights)
        for i, w in enumerate(ws):
            if not 0 < w < 1:
                raise ProfileError(f"belief of agent {i} must lie in (0, 1), got {w}")
        if not ws:
            raise ProfileError("belief matrix is empty")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def uniform(cls, p, n: int) -> "BeliefMatrix":
        return cls((to_rational(p),) * n)

    def __len__(self):
        return len(self.weights)

    def __str__(self):
        return "(" + ", ".join(format_rational(w) for w in self.weights) + ")"


@dataclass(frozen=True)
class LinearOrder:
    """Strict total order on alternative indices; earlier in ``ranking`` is smaller."""

    ranking: tuple[int, ...]

    def __post_init__(self):
        ranking = tuple(int(x) for x in self.ranking)
        if sorted(ranking) != list(range(len(ranking))):
            raise ProfileError(f"{ranking} is not a linear order on 0..{len(ranking) - 1}")
        object.__setattr__(self, "ranking", ranking)

    @classmethod
    def natural(cls, m: int) -> "LinearOrder":
        return cls(tuple(range(m)))

    def minimum(self, subset: Iterable[int]) -> int:
        members = set(subset)
        for s in self.ranking:
            if s in members:
                return s
        raise ValueError("minimum of an empty set")

    def __str__(self):
        return "<".join(f"s{s + 1}" for s in self.ranking)


@dataclass(frozen=True)
class PerturbationFamily:
    """Profiles converging to ``base`` by raising the ``target`` column by each epsilon."""

    base: UtilityProfile
    target: int
    epsilons: tuple[Fraction, ...]

    def __post_init__(self):
        eps = tuple(to_rational(e) for e in self.epsilons)
        if not eps:
            raise ProfileError("a perturbation family needs at least one epsilon")
        if any(e <= 0 for e in eps):
            raise ProfileError("epsilons must be positive")
        if any(a <= b for a, b in zip(eps, eps[1:])):
            raise ProfileError("epsilons must be strictly decreasing")
        if not 0 <= self.target < self.base.n_alternatives:
            raise ProfileError(f"target {self.target} outside 0..{self.base.n_alternatives - 1}")
        object.__setattr__(self, "epsilons", eps)

    @classmethod
    def halving(cls, base: UtilityProfile, target: int, length: int = 6) -> "PerturbationFamily":
        """Epsilons ``1/(n d 2^k)``, ``k = 1..length``, with ``d`` the base's denominator.

        Column sums, minima and entries of ``base`` differ by multiples of
        ``1/d``, so every bump here is too small to overtake a strictly better
        alternative.  A finite family of this form therefore never refutes a
        closed solution set.
        """
        scale = base.n_agents * base.denominator
        return cls(base, target, tuple(Fraction(1, scale * 2**k) for k in range(1, length + 1)))

    def __len__(self):
        return len(self.epsilons)

    def member(self, k: int) -> UtilityProfile:
        return perturbation_member(self, k)


def perturbation_member(family: PerturbationFamily, k: int) -> UtilityProfile:
    if not 0 <= k < len(family.epsilons):
        raise IndexError(f"member {k} outside a family of length {len(family.epsilons)}")
    eps = family.epsilons[k]
    base = family.base
    base._reduce()
    den = base._den * eps.denominator
    bump = eps.numerator * base._den
    t = family.target
    num = tuple(
        tuple(x * eps.denominator + (bump if s == t else 0) for s, x in enumerate(row))
        for row in base._num
    )
    return UtilityProfile._from_scaled(num, den, base.alternatives, base.agents)


def grid_profiles(grid: Sequence, n: int, m: int) -> Iterable[UtilityProfile]:
    """Every ``n x m`` profile with entries drawn from ``grid``, in lexicographic order."""
    values = [to_rational(g) for g in grid]
    alts = default_alternatives(m)
    for flat in itertools.product(values, repeat=n * m):
        yield UtilityProfile([flat[i * m:(i + 1) * m] for i in range(n)], alts)
