"""Dense linear and operator-dominance programming.

Two solvers live here.  ``solve_lp`` is a dense two-phase simplex with
Bland's anti-cycling rule, adequate up to a few hundred constraints.
``solve_dominating`` minimizes the trace of an operator ranging over a
real-linear span of Hermitian matrices subject to dominating a list of
Hermitian constraints; the positive-semidefinite conditions are enforced
through eigenvector cuts fed to a master LP.  On top of these, the module
instantiates the robustness program of a measurement and the optimal
guessing probability of a state ensemble.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleSubspace, InvalidEnsemble, SolverFailure
from .measurement import Povm, _require_povm
from .numerics import check_hermitian, eig_hermitian, hermitian_basis

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
ITERATION_LIMIT = "iteration_limit"

PIVOT_TOL = 1e-10
FEASIBILITY_TOL = 1e-9
SLACK_TOL = 1e-7
VALUE_TOL = 1e-9
MAX_CUTS = 10000
BASIS_INDEPENDENCE_TOL = 1e-9


@dataclass(frozen=True)
class LpProblem:
    """``min c.x`` subject to ``a_ineq x >= b_ineq`` and ``a_eq x = b_eq``.

    ``nonneg`` restricts all variables to be nonnegative; otherwise they
    are free (handled internally by sign splitting).
    """

    c: np.ndarray
    a_ineq: np.ndarray | None = None
    b_ineq: np.ndarray | None = None
    a_eq: np.ndarray | None = None
    b_eq: np.ndarray | None = None
    nonneg: bool = False


@dataclass(frozen=True)
class LpSolution:
    status: str
    x: np.ndarray | None
    value: float
    iterations: int
    duals_ineq: np.ndarray | None = None
    duals_eq: np.ndarray | None = None
    farkas_ineq: np.ndarray | None = None
    farkas_eq: np.ndarray | None = None


class _Tableau:
    """Standard-form simplex state: A x = b with x >= 0 and b >= 0."""

    def __init__(self, a_std, b_std, n_art):
        m, n = a_std.shape
        self.t = np.hstack([a_std, b_std[:, None]])
        self.n_cols = n
        self.art0 = n - n_art
        self.basis = list(range(self.art0, n))
        self.rows_kept = list(range(m))

    def pivot(self, row, col, z):
        t = self.t
        piv = t[row, col]
        t[row] = t[row] / piv
        column = t[:, col].copy()
        column[row] = 0.0
        t -= np.outer(column, t[row])
        z -= z[col] * t[row]
        self.basis[row] = col

    def run(self, z, allowed, max_iterations, pivot_tol):
        """Bland-rule simplex on the current tableau; mutates z in place."""
        t = self.t
        iterations = 0
        while iterations < max_iterations:
            candidates = np.flatnonzero(allowed & (z[:-1] < -pivot_tol))
            if candidates.size == 0:
                return OPTIMAL, iterations
            col = int(candidates[0])
            ratios = []
            for r in range(t.shape[0]):
                coeff = t[r, col]
                if coeff > pivot_tol:
                    ratios.append((max(t[r, -1], 0.0) / coeff, self.basis[r], r))
            if not ratios:
                return UNBOUNDED, iterations
            ratios.sort()
            self.pivot(ratios[0][2], col, z)
            iterations += 1
        return ITERATION_LIMIT, iterations


def _objective_row(c_std, tableau):
    z = np.concatenate([c_std, [0.0]])
    for r, b in enumerate(tableau.basis):
        cb = c_std[b]
        if cb != 0.0:
            z -= cb * tableau.t[r]
    return z


def solve_lp(problem: LpProblem, *, max_iterations: int = 50000,
             pivot_tol: float = PIVOT_TOL, feas_tol: float = FEASIBILITY_TOL) -> LpSolution:
    """Two-phase dense simplex with Bland's anti-cycling rule.

    On infeasible problems the phase-one duals are returned as a Farkas
    certificate: ``y`` with ``y . rows <= 0`` componentwise on the columns
    and ``y . b > 0`` (inequality-row components nonnegative).
    """
    c = np.atleast_1d(np.asarray(problem.c, dtype=float))
    n = c.size

    blocks = []
    kinds = []
    for a, b, kind in ((problem.a_ineq, problem.b_ineq, "ineq"),
                       (problem.a_eq, problem.b_eq, "eq")):
        if a is None:
            continue
        a = np.atleast_2d(np.asarray(a, dtype=float))
        b = np.atleast_1d(np.asarray(b, dtype=float))
        if a.shape != (b.size, n):
            raise ValueError(f"constraint block has shape {a.shape}, expected ({b.size}, {n})")
        blocks.append((a, b))
        kinds.extend([kind] * b.size)
    if not blocks:
        raise ValueError("problem has no constraints")
    a_full = np.vstack([blk[0] for blk in blocks])
    b_full = np.concatenate([blk[1] for blk in blocks])
    m = b_full.size
    n_ineq = kinds.count("ineq")

    # Column layout: split variables, then surplus columns, then artificials.
    cols = []
    for i in range(n):
        cols.append((i, 1.0))
        if not problem.nonneg:
            cols.append((i, -1.0))
    n_x = len(cols)
    n_total = n_x + n_ineq + m
    a_std = np.zeros((m, n_total))
    for j, (i, sign) in enumerate(cols):
        a_std[:, j] = sign * a_full[:, i]
    surplus_row = 0
    for r, kind in enumerate(kinds):
        if kind == "ineq":
            a_std[r, n_x + surplus_row] = -1.0
            surplus_row += 1
    flip = np.where(b_full < 0.0, -1.0, 1.0)
    a_std *= flip[:, None]
    b_std = b_full * flip
    art0 = n_x + n_ineq
    a_std[:, art0:] = np.eye(m)

    tableau = _Tableau(a_std, b_std, m)
    a_original = a_std.copy()

    c_phase1 = np.zeros(n_total)
    c_phase1[art0:] = 1.0
    z = _objective_row(c_phase1, tableau)
    allowed = np.ones(n_total, dtype=bool)
    status, it1 = tableau.run(z, allowed, max_iterations, pivot_tol)
    if status == ITERATION_LIMIT:
        return LpSolution(ITERATION_LIMIT, None, np.nan, it1)
    phase1_value = -z[-1]
    if phase1_value > feas_tol:
        y = _basis_duals(a_original, c_phase1, tableau.basis)
        y_orig = y * flip
        return LpSolution(
            INFEASIBLE, None, np.nan, it1,
            farkas_ineq=y_orig[:n_ineq] if n_ineq else None,
            farkas_eq=y_orig[n_ineq:] if m > n_ineq else None,
        )

    _drive_out_artificials(tableau, z, art0, pivot_tol)

    c_phase2 = np.zeros(n_total)
    for j, (i, sign) in enumerate(cols):
        c_phase2[j] = sign * c[i]
    z = _objective_row(c_phase2, tableau)
    allowed = np.ones(n_total, dtype=bool)
    allowed[art0:] = False
    status, it2 = tableau.run(z, allowed, max_iterations - it1, pivot_tol)
    if status != OPTIMAL:
        return LpSolution(status, None, np.nan, it1 + it2)

    x_std = np.zeros(n_total)
    for r, b in enumerate(tableau.basis):
        x_std[b] = tableau.t[r, -1]
    x = np.zeros(n)
    for j, (i, sign) in enumerate(cols):
        x[i] += sign * x_std[j]
    value = float(c @ x)
    y = _basis_duals(a_original[tableau.rows_kept], c_phase2, tableau.basis)
    y_full = np.zeros(m)
    for pos, r in enumerate(tableau.rows_kept):
        y_full[r] = y[pos]
    y_full *= flip
    return LpSolution(
        OPTIMAL, x, value, it1 + it2,
        duals_ineq=y_full[:n_ineq] if n_ineq else None,
        duals_eq=y_full[n_ineq:] if m > n_ineq else None,
    )


def _basis_duals(a_original, costs, basis):
    b_mat = a_original[:, basis]
    cb = costs[list(basis)]
    try:
        return np.linalg.solve(b_mat.T, cb)
    except np.linalg.LinAlgError:
        return np.linalg.lstsq(b_mat.T, cb, rcond=None)[0]


def _drive_out_artificials(tableau, z, art0, pivot_tol):
    drop = []
    for r in range(len(tableau.basis)):
        if tableau.basis[r] < art0:
            continue
        row = tableau.t[r, :art0]
        eligible = np.flatnonzero(np.abs(row) > pivot_tol)
        if eligible.size:
            tableau.pivot(r, int(eligible[0]), z)
        else:
            drop.append(r)
    if drop:
        keep = [r for r in range(len(tableau.basis)) if r not in drop]
        tableau.t = tableau.t[keep]
        tableau.basis = [tableau.basis[r] for r in keep]
        tableau.rows_kept = [tableau.rows_kept[r] for r in keep]


@dataclass(frozen=True)
class DominanceProgram:
    """``min tr Y`` over ``Y = sum_j x_j B_j`` subject to ``Y >= K_i``.

    ``basis`` holds the Hermitian matrices ``B_j`` (real coefficients,
    linearly independent), ``constraints`` the Hermitian ``K_i``.
    """

    dimension: int
    basis: np.ndarray
    constraints: np.ndarray


@dataclass(frozen=True)
class SdpSolution:
    status: str
    y: np.ndarray | None
    value: float
    cuts: int
    min_slack: float


def _validate_program(program: DominanceProgram):
    basis = np.stack([check_hermitian(b) for b in program.basis])
    constraints = np.stack([check_hermitian(k) for k in program.constraints])
    d = program.dimension
    if basis.shape[1] != d or constraints.shape[1] != d:
        raise ValueError("basis and constraint dimensions must match the program")
    gram = np.einsum("aij,bji->ab", basis, basis).real
    smallest = eig_hermitian(gram).eigenvalues[0]
    if smallest < BASIS_INDEPENDENCE_TOL:
        raise ValueError(
            f"subspace basis is numerically dependent (Gram eigenvalue {smallest:.3e})"
        )
    return basis, constraints


class _MasterLp:
    """The cutting-plane master ``min c.x`` s.t. ``alpha_j . x >= rhs_j``
    over free coordinates ``x``.

    Solved through its LP dual, where every cut is one nonnegative
    variable and the row count stays at the subspace dimension however
    many cuts accumulate.  A new cut parallel to a stored one only
    updates the right-hand side (keeping the tighter bound), which both
    caps the column count and preserves monotonicity of the master
    values.  The primal point is read off the equality duals; master
    infeasibility surfaces as an unbounded dual.
    """

    def __init__(self, objective: np.ndarray):
        self.objective = objective
        self.alphas: list[np.ndarray] = []
        self.rhs: list[float] = []

    def add_cut(self, alpha: np.ndarray, rhs: float) -> None:
        for j, stored in enumerate(self.alphas):
            if np.abs(stored - alpha).max() < 1e-9:
                self.rhs[j] = max(self.rhs[j], rhs)
                return
        self.alphas.append(alpha)
        self.rhs.append(rhs)

    def solve(self):
        """Return ``(status, x, value)`` for the current cut set."""
        dual = LpProblem(
            -np.asarray(self.rhs),
            a_eq=np.array(self.alphas).T,
            b_eq=self.objective,
            nonneg=True,
        )
        sol = solve_lp(dual)
        if sol.status == UNBOUNDED:
            return INFEASIBLE, None, np.nan
        if sol.status == INFEASIBLE:
            raise SolverFailure("master LP is unbounded; warm-start cuts missing")
        if sol.status != OPTIMAL:
            raise SolverFailure(f"master LP returned {sol.status}")
        x = -sol.duals_eq
        return OPTIMAL, x, float(self.objective @ x)


def solve_dominating(program: DominanceProgram, *, slack_tol: float = SLACK_TOL,
                     value_tol: float = VALUE_TOL, max_cuts: int = MAX_CUTS,
                     trace=None) -> SdpSolution:
    """Cutting-plane minimization of ``tr Y`` under dominance constraints.

    Each round, the eigenvectors of ``Y - K_i`` with eigenvalue below
    ``-slack_tol`` yield cuts ``v+ Y v >= v+ K_i v``.  The master LP is
    warm-started with cuts from the full eigenbasis of every ``K_i``,
    which keeps it bounded from the first round.  The master values form
    a nondecreasing sequence of lower bounds; convergence is declared
    once every slack eigenvalue is above ``-slack_tol``, at which point
    no new cut exists and the value can no longer move by more than
    ``value_tol``.

    ``trace``, when given, receives one JSON line per round with the
    iteration number, master value and worst slack.
    """
    basis, constraints = _validate_program(program)
    objective = np.einsum("jii->j", basis).real
    master = _MasterLp(objective)
    n_cuts = 0

    def add_cut(v, k):
        nonlocal n_cuts
        alpha = np.einsum("i,kij,j->k", v.conj(), basis, v).real
        master.add_cut(alpha, float((v.conj() @ k @ v).real))
        n_cuts += 1

    for k in constraints:
        dec = eig_hermitian(k)
        for idx in range(program.dimension):
            add_cut(dec.eigenvectors[:, idx], k)

    rounds = 0
    previous_value = None
    while True:
        status, x, value = master.solve()
        if status == INFEASIBLE:
            return SdpSolution(INFEASIBLE, None, np.nan, n_cuts, np.nan)
        y = np.tensordot(x, basis, axes=1)
        min_slack = np.inf
        violations = []
        for k in constraints:
            dec = eig_hermitian(y - k)
            min_slack = min(min_slack, float(dec.eigenvalues[0]))
            for idx in np.flatnonzero(dec.eigenvalues < -slack_tol):
                violations.append((dec.eigenvectors[:, idx], k))
        rounds += 1
        if trace is not None:
            trace.write(json.dumps({
                "iteration": rounds, "value": value, "worst_slack": min_slack,
            }) + "\n")
        if not violations:
            return SdpSolution(OPTIMAL, y, value, n_cuts, min_slack)
        if (previous_value is not None and min_slack > -5e-2
                and abs(value - previous_value) < max(value_tol, value_tol * abs(value))):
            polished = _polish_active_set(basis, constraints, y, value, slack_tol)
            if polished is not None:
                y_ref, value_ref, slack_ref = polished
                return SdpSolution(OPTIMAL, y_ref, value_ref, n_cuts, slack_ref)
        if n_cuts + len(violations) > max_cuts:
            return SdpSolution(ITERATION_LIMIT, y, value, n_cuts, min_slack)
        for v, k in violations:
            add_cut(v, k)
        previous_value = value


def _polish_active_set(basis, constraints, y, value, slack_tol):
    """Terminal refinement for the degenerate tail of the cutting plane.

    Eigenvector cuts pin a contact face one direction per round, which
    crawls when the optimal slack operator has a multidimensional kernel.
    Once the master value has stabilized, the kernel is read off the
    near-contact eigenvectors and the face equations ``(Y - K_i) v = 0``
    are solved directly by least squares, with the trace pinned to the
    stabilized value.  The candidate counts only if an eigenvalue check
    confirms dominance and its trace stays within the certified bracket,
    so a wrong active-set guess is discarded, never returned.
    """
    k_dim = basis.shape[0]
    d = basis.shape[1]
    rows = [np.zeros((1, k_dim))]
    rhs = [np.zeros(1)]
    min_slack = min(float(eig_hermitian(y - k).eigenvalues[0]) for k in constraints)
    active_tol = max(1e-5, 3.0 * abs(min_slack))
    for k in constraints:
        dec = eig_hermitian(y - k)
        for idx in np.flatnonzero(dec.eigenvalues < active_tol):
            v = dec.eigenvectors[:, idx]
            coeff = np.einsum("jab,b->ja", basis, v)       # (k, d): B_j v
            target = k @ v
            rows.append(np.concatenate([coeff.real.T, coeff.imag.T], axis=0))
            rhs.append(np.concatenate([target.real, target.imag]))
    weight = 1e3
    rows.append(weight * np.einsum("jii->j", basis).real[None, :])
    rhs.append(np.array([weight * value]))
    solution, *_ = np.linalg.lstsq(np.vstack(rows), np.concatenate(rhs), rcond=None)
    y_ref = np.tensordot(solution, basis, axes=1)
    slack_ref = min(float(eig_hermitian(y_ref - k).eigenvalues[0]) for k in constraints)
    value_ref = float(np.trace(y_ref).real)
    if slack_ref >= -slack_tol and value_ref - value <= 2e-7 * max(1.0, abs(value)):
        return y_ref, value_ref, slack_ref
    return None


def rom_via_sdp(m: Povm) -> float:
    """Robustness of a measurement through its dominance program.

    One scalar block per outcome: minimize ``sum_a q~(a)`` subject to
    ``q~(a) I >= M_a``.  The blocks decouple, so each is solved as its own
    single-constraint program; each block value is lifted to a certified
    dominating point before summing, making the result an upper bound
    within the solver slack.
    """
    m = _require_povm(m)
    d = m.dimension
    eye = np.eye(d, dtype=np.complex128)[None]
    total = 0.0
    for element in m:
        sol = solve_dominating(DominanceProgram(d, eye, element[None]))
        if sol.status == INFEASIBLE:
            raise InfeasibleSubspace("no scalar multiple of the identity dominates")
        if sol.status != OPTIMAL:
            raise SolverFailure(f"robustness block solve returned {sol.status}")
        total += sol.value / d + max(0.0, -sol.min_slack)
    return total - 1.0


def min_error_guess_value(ensemble) -> float:
    """Optimal probability of guessing which ensemble state was prepared,
    over all measurements and relabelings.

    Dual dominance form: ``min tr Y`` over Hermitian ``Y`` with
    ``Y >= p(x) sigma_x`` for every member.  The returned value comes from
    the certified dominating point ``Y + delta I``, so it is never below
    the guessing probability achievable with any fixed measurement.
    """
    from .discrimination import Ensemble
    if not isinstance(ensemble, Ensemble):
        raise InvalidEnsemble(f"expected an Ensemble, got {type(ensemble).__name__}")
    d = ensemble.dimension
    constraints = ensemble.priors[:, None, None] * ensemble.states
    sol = solve_dominating(DominanceProgram(d, hermitian_basis(d), constraints))
    if sol.status == INFEASIBLE:
        raise InfeasibleSubspace("no Hermitian operator dominates the ensemble")
    if sol.status != OPTIMAL:
        raise SolverFailure(f"guessing-value solve returned {sol.status}")
    return sol.value + d * max(0.0, -sol.min_slack)
