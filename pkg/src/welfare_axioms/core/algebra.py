"""Profile algebra: agent permutations, mixtures, the worst-case meet and cyclic aggregates."""

from __future__ import annotations

import math
from fractions import Fraction

from .profile import (
    BeliefMatrix,
    MixtureWeight,
    Permutation,
    ProfileError,
    UtilityProfile,
    to_rational,
)


def _require_compatible(u: UtilityProfile, v: UtilityProfile) -> None:
    u._reduce()
    v._reduce()
    if u.alternatives is v.alternatives and len(u._num) == len(v._num):
        return
    if u.shape != v.shape:
        raise ProfileError(f"profiles of shape {u.shape} and {v.shape} cannot be combined")
    if u.alternatives != v.alternatives:
        raise ProfileError("profiles are over different alternative lists")


def _weight(p) -> Fraction:
    return p.p if isinstance(p, MixtureWeight) else MixtureWeight(p).p


def permute(u: UtilityProfile, sigma: Permutation) -> UtilityProfile:
    """Return ``u_sigma``: row ``i`` of the result is row ``sigma(i)`` of ``u``."""
    u._reduce()
    if sigma.size != u.n_agents:
        raise ProfileError(f"permutation of size {sigma.size} applied to {u.n_agents} agents")
    num = tuple(u._num[j] for j in sigma.mapping)
    return UtilityProfile._from_scaled(num, u._den, u.alternatives, u.agents)


def mix(u: UtilityProfile, v: UtilityProfile, p) -> UtilityProfile:
    """Entrywise ``p*u + (1 - p)*v`` for an objective weight ``0 < p < 1``."""
    _require_compatible(u, v)
    p = _weight(p)
    a, b = p.numerator, p.denominator
    cu, cv = a * v._den, (b - a) * u._den
    num = tuple([tuple([cu * x + cv * y for x, y in zip(ru, rv)]) for ru, rv in zip(u._num, v._num)])
    return UtilityProfile._from_scaled(num, b * u._den * v._den, u.alternatives, u.agents)


def subjective_mix(u: UtilityProfile, v: UtilityProfile, beliefs: BeliefMatrix) -> UtilityProfile:
    """Row ``i`` is ``p_i*u_i + (1 - p_i)*v_i``: each agent mixes with their own belief."""
    _require_compatible(u, v)
    if not isinstance(beliefs, BeliefMatrix):
        beliefs = BeliefMatrix(tuple(beliefs))
    if len(beliefs) != u.n_agents:
        raise ProfileError(f"{len(beliefs)} beliefs for {u.n_agents} agents")
    common = math.lcm(*(w.denominator for w in beliefs.weights))
    rows = []
    for w, ru, rv in zip(beliefs.weights, u._num, v._num):
        scale = common // w.denominator
        cu = w.numerator * scale * v._den
        cv = (w.denominator - w.numerator) * scale * u._den
        rows.append(tuple([cu * x + cv * y for x, y in zip(ru, rv)]))
    return UtilityProfile._from_scaled(tuple(rows), common * u._den * v._den, u.alternatives, u.agents)


def meet(u: UtilityProfile, v: UtilityProfile) -> UtilityProfile:
    """The worst-case profile: entrywise minimum of ``u`` and ``v``."""
    _require_compatible(u, v)
    den = math.lcm(u._den, v._den)
    su, sv = den // u._den, den // v._den
    num = tuple([tuple([min(su * x, sv * y) for x, y in zip(ru, rv)]) for ru, rv in zip(u._num, v._num)])
    return UtilityProfile._from_scaled(num, den, u.alternatives, u.agents)


def negate(u: UtilityProfile) -> UtilityProfile:
    u._reduce()
    num = tuple(tuple(-x for x in row) for row in u._num)
    return UtilityProfile._from_scaled(num, u._den, u.alternatives, u.agents)


def affine(u: UtilityProfile, scale, shift=0) -> UtilityProfile:
    """Entrywise ``scale*u + shift``; the same transform for every agent."""
    u._reduce()
    a, b = to_rational(scale), to_rational(shift)
    den = u._den * a.denominator * b.denominator
    ca = a.numerator * b.denominator
    cb = b.numerator * a.denominator * u._den
    num = tuple(tuple(ca * x + cb for x in row) for row in u._num)
    return UtilityProfile._from_scaled(num, den, u.alternatives, u.agents)


def cyclic_aggregate_sum(u: UtilityProfile) -> UtilityProfile:
    """``(1/n) * sum_k u_{sigma^k}`` for the cyclic shift ``sigma``.

    Every agent ends up with the average utility of the column, so all rows
    coincide.
    """
    u._reduce()
    sums = tuple(sum(col) for col in zip(*u._num))
    return UtilityProfile._from_scaled((sums,) * u.n_agents, u._den * u.n_agents, u.alternatives, u.agents)


def cyclic_aggregate_min(u: UtilityProfile) -> UtilityProfile:
    """``meet_k u_{sigma^k}``: every row is the vector of column minima."""
    u._reduce()
    mins = tuple(min(col) for col in zip(*u._num))
    return UtilityProfile._from_scaled((mins,) * u.n_agents, u._den, u.alternatives, u.agents)


def column_sums(u: UtilityProfile) -> tuple[Fraction, ...]:
    return tuple(Fraction(sum(col), u._den) for col in zip(*u._num))


def column_minima(u: UtilityProfile) -> tuple[Fraction, ...]:
    return tuple(Fraction(min(col), u._den) for col in zip(*u._num))
