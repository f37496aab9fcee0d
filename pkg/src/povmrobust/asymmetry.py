"""Robustness of asymmetry and of coherence.

A state is symmetric under a finite unitary group when it equals its own
group average (twirl).  The robustness of asymmetry is the least noise
weight whose admixture makes a state symmetric; it is computed here as a
dominance program over the twirl-invariant operator subspace, and cross
checked by two independent identities: the optimal advantage in the
group-orbit discrimination game, and the accessible min-information of
the orbit ensemble.  Coherence is the special case of the dephasing
group, where the symmetric operators are the diagonal ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .discrimination import Ensemble, check_density_matrix
from .errors import DimensionMismatch, InfeasibleSubspace, InvalidGroup, SolverFailure
from .info import acc_min_info_ensemble
from .numerics import as_complex_matrix, hermitian_basis
from .solvers import (
    DominanceProgram,
    INFEASIBLE,
    OPTIMAL,
    min_error_guess_value,
    solve_dominating,
)

UNITARY_TOL = 1e-9
CLOSURE_TOL = 1e-8
GRAM_SCHMIDT_DROP_TOL = 1e-9


@dataclass(frozen=True)
class GroupRepresentation:
    """A finite list of unitaries closed under multiplication up to global
    phase, containing the identity."""

    unitaries: np.ndarray
    identity_index: int

    @property
    def order(self) -> int:
        return self.unitaries.shape[0]

    @property
    def dimension(self) -> int:
        return self.unitaries.shape[1]


@dataclass(frozen=True)
class AsymmetryReport:
    """Robustness value with its optimal dominating symmetric operator and
    the two operational cross-checks."""

    value: float
    dominating: np.ndarray
    game_advantage: float
    min_info: float


def validate_group(unitaries, *, unitary_tol: float = UNITARY_TOL,
                   closure_tol: float = CLOSURE_TOL) -> GroupRepresentation:
    """Check unitarity, closure up to global phase, and the presence of the
    identity, then wrap the list."""
    mats = np.stack([as_complex_matrix(u) for u in unitaries])
    n, d = mats.shape[0], mats.shape[1]
    eye = np.eye(d)
    for i, u in enumerate(mats):
        deviation = np.abs(u.conj().T @ u - eye).max()
        if deviation > unitary_tol:
            raise InvalidGroup(f"element {i} fails unitarity by {deviation:.3e}")
    # Phase-insensitive matching: |tr(U_k^dag W)| = d iff W = phase * U_k.
    overlaps = np.abs(np.einsum("kji,ij->k", mats.conj(), eye))
    identity_index = int(np.argmax(overlaps))
    if overlaps[identity_index] < d - closure_tol:
        raise InvalidGroup("the group list does not contain the identity")
    for i in range(n):
        for j in range(n):
            product = mats[i] @ mats[j]
            matches = np.abs(np.einsum("kji,ij->k", mats.conj(), product))
            if matches.max() < d - closure_tol:
                raise InvalidGroup(
                    f"product of elements {i} and {j} matches no listed element"
                )
    return GroupRepresentation(mats, identity_index)


def dephasing_group(d: int) -> GroupRepresentation:
    """Cyclic group of the d diagonal unitaries with d-th root-of-unity
    phases; averaging over it removes every off-diagonal entry."""
    phases = np.exp(2j * np.pi * np.outer(np.arange(d), np.arange(d)) / d)
    return GroupRepresentation(np.stack([np.diag(row) for row in phases]), 0)


def _require_group(g) -> GroupRepresentation:
    if not isinstance(g, GroupRepresentation):
        raise InvalidGroup(f"expected a GroupRepresentation, got {type(g).__name__}")
    return g


def twirl(rho, g: GroupRepresentation) -> np.ndarray:
    """Group average ``(1/|H|) sum_h U_h rho U_h^dag``; idempotent, and the
    identity map exactly on symmetric inputs."""
    g = _require_group(g)
    rho = as_complex_matrix(rho)
    if rho.shape[0] != g.dimension:
        raise DimensionMismatch(
            f"state dimension {rho.shape[0]} vs group dimension {g.dimension}"
        )
    u = g.unitaries
    return np.einsum("hij,jk,hlk->il", u, rho, u.conj()) / g.order


def is_symmetric(rho, g: GroupRepresentation, tol: float = 1e-8) -> bool:
    """True when the state is entrywise within ``tol`` of its twirl."""
    rho = as_complex_matrix(rho)
    return bool(np.abs(rho - twirl(rho, g)).max() <= tol)


def symmetric_subspace_basis(g: GroupRepresentation) -> np.ndarray:
    """Orthonormal Hermitian basis of the twirl-invariant operators.

    Twirling projects onto its own fixed subspace, so twirling a full
    operator basis and orthogonalizing (dropping numerically null
    directions) spans exactly the symmetric operators of any finite
    group, with no representation theory required.
    """
    g = _require_group(g)
    d = g.dimension
    accepted: list[np.ndarray] = []
    for candidate in hermitian_basis(d):
        t = twirl(candidate, g)
        t = 0.5 * (t + t.conj().T)
        for q in accepted:
            t = t - np.einsum("ij,ji->", q, t).real * q
        norm = math.sqrt(abs(np.einsum("ij,ji->", t, t).real))
        if norm > GRAM_SCHMIDT_DROP_TOL:
            accepted.append(t / norm)
    return np.stack(accepted)


def orbit_ensemble(rho, g: GroupRepresentation) -> Ensemble:
    """The group orbit of a state, provided uniformly at random."""
    g = _require_group(g)
    rho = check_density_matrix(rho)
    if rho.shape[0] != g.dimension:
        raise DimensionMismatch(
            f"state dimension {rho.shape[0]} vs group dimension {g.dimension}"
        )
    u = g.unitaries
    states = np.einsum("hij,jk,hlk->hil", u, rho, u.conj())
    return Ensemble(states, np.full(g.order, 1.0 / g.order))


def roa(rho, g: GroupRepresentation) -> AsymmetryReport:
    """Robustness of asymmetry with operational cross-checks.

    Solves ``min tr(sigma) - 1`` over symmetric ``sigma`` dominating the
    state; the report also carries the orbit-game advantage (the group
    order times the optimal guessing probability) and the accessible
    min-information of the orbit, each of which must reproduce the
    robustness through its own identity.
    """
    g = _require_group(g)
    rho = check_density_matrix(rho)
    if rho.shape[0] != g.dimension:
        raise DimensionMismatch(
            f"state dimension {rho.shape[0]} vs group dimension {g.dimension}"
        )
    basis = symmetric_subspace_basis(g)
    solution = solve_dominating(DominanceProgram(g.dimension, basis, rho[None]))
    if solution.status == INFEASIBLE:
        raise InfeasibleSubspace("no symmetric operator dominates the state")
    if solution.status != OPTIMAL:
        raise SolverFailure(f"asymmetry solve returned {solution.status}")
    lift = max(0.0, -solution.min_slack)
    dominating = solution.y + lift * np.eye(g.dimension)
    value = float(np.trace(dominating).real - 1.0)
    orbit = orbit_ensemble(rho, g)
    game_advantage = g.order * min_error_guess_value(orbit)
    min_info = acc_min_info_ensemble(orbit)
    return AsymmetryReport(value, dominating, float(game_advantage), float(min_info))


def roc(rho) -> AsymmetryReport:
    """Robustness of coherence: asymmetry under the dephasing group, where
    the symmetric operators are the diagonal matrices."""
    rho = check_density_matrix(rho)
    return roa(rho, dephasing_group(rho.shape[0]))
