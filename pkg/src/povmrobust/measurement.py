"""POVM data model, validation, constructors and classical post-processing.

A measurement is a finite list of positive semidefinite operators summing
to the identity.  Outcome order is significant everywhere: outcome labels
are list indices and are preserved by every operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CompletenessViolation,
    EtaOutOfRange,
    InvalidDistribution,
    InvalidPovm,
    NotOrthonormal,
    NotPsd,
    ShapeMismatch,
    SizeMismatch,
)
from .numerics import check_hermitian, eig_hermitian
from .tolerances import resolve

PSD_TOL = 1e-9
COMPLETENESS_TOL = 1e-8
DISTRIBUTION_TOL = 1e-10
ORTHONORMAL_TOL = 1e-9


@dataclass(frozen=True)
class Povm:
    """A positive operator-valued measure as an ``(o, d, d)`` array.

    Instances are immutable.  Use :func:`validate_povm` to build one from
    untrusted input; the constructors in this module produce valid
    measurements by construction.
    """

    elements: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.elements, dtype=np.complex128)
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2]:
            raise ShapeMismatch(f"expected shape (o, d, d), got {arr.shape}")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "elements", arr)

    @property
    def outcomes(self) -> int:
        return self.elements.shape[0]

    @property
    def dimension(self) -> int:
        return self.elements.shape[1]

    def __len__(self) -> int:
        return self.outcomes

    def __getitem__(self, a: int) -> np.ndarray:
        return self.elements[a]

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class StochasticMap:
    """Conditional probabilities ``p(out | in)`` with shape (inputs, outputs).

    Each row is a distribution over outputs; validation happens on
    construction since it only involves sums.
    """

    probabilities: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probabilities, dtype=float)
        if p.ndim != 2:
            raise ShapeMismatch(f"expected a 2-D array, got shape {p.shape}")
        tol = resolve(DISTRIBUTION_TOL)
        if p.min(initial=0.0) < -tol:
            raise InvalidDistribution("negative conditional probability")
        row_dev = np.abs(p.sum(axis=1) - 1.0).max(initial=0.0)
        if row_dev > tol:
            raise InvalidDistribution(
                f"output distributions must sum to 1, worst deviation {row_dev:.3e}"
            )
        p = np.ascontiguousarray(p)
        p.setflags(write=False)
        object.__setattr__(self, "probabilities", p)

    @property
    def n_inputs(self) -> int:
        return self.probabilities.shape[0]

    @property
    def n_outputs(self) -> int:
        return self.probabilities.shape[1]


def _check_distribution(q, tol: float | None = None) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    tol = resolve(DISTRIBUTION_TOL) if tol is None else tol
    if q.ndim != 1 or q.size == 0:
        raise InvalidDistribution("expected a nonempty probability vector")
    if q.min() < -tol:
        raise InvalidDistribution(f"negative probability {q.min():.3e}")
    if abs(q.sum() - 1.0) > tol:
        raise InvalidDistribution(f"probabilities sum to {q.sum()!r}, not 1")
    return q


def validate_povm(candidate, tol: float | None = None,
                  completeness_tol: float | None = None) -> Povm:
    """Check a list of matrices for POVM validity and wrap it.

    ``tol`` bounds the allowed negativity of element eigenvalues,
    ``completeness_tol`` the entrywise deviation of the element sum from
    the identity.
    """
    tol = resolve(PSD_TOL) if tol is None else tol
    completeness_tol = resolve(COMPLETENESS_TOL) if completeness_tol is None else completeness_tol
    mats = [check_hermitian(m) for m in candidate]
    if not mats:
        raise ShapeMismatch("a POVM needs at least one element")
    d = mats[0].shape[0]
    if any(m.shape[0] != d for m in mats):
        raise ShapeMismatch("POVM elements must share one dimension")
    for a, m in enumerate(mats):
        smallest = eig_hermitian(m).eigenvalues[0]
        if smallest < -tol:
            raise NotPsd(
                f"element {a} has eigenvalue {smallest:.3e} below -{tol:.1e}", index=a
            )
    deviation = np.abs(sum(mats) - np.eye(d)).max()
    if deviation > completeness_tol:
        raise CompletenessViolation(
            f"elements sum to identity only within {deviation:.3e}", deviation=deviation
        )
    return Povm(np.stack(mats))


def trivial_povm(q, d: int) -> Povm:
    """Measurement whose outcome distribution ignores the input state:
    elements ``q(a) * I``."""
    q = _check_distribution(q)
    eye = np.eye(d, dtype=np.complex128)
    return Povm(np.stack([qa * eye for qa in q]))


def projective_povm(basis) -> Povm:
    """Rank-1 projective measurement onto an orthonormal basis.

    ``basis`` holds the vectors as rows; there must be exactly as many
    vectors as the dimension.
    """
    vecs = np.asarray(basis, dtype=np.complex128)
    if vecs.ndim != 2:
        raise NotOrthonormal(f"expected a list of vectors, got shape {vecs.shape}")
    n, d = vecs.shape
    if n != d:
        raise NotOrthonormal(f"need {d} vectors for dimension {d}, got {n}")
    gram = vecs.conj() @ vecs.T
    deviation = np.abs(gram - np.eye(n)).max()
    if deviation > resolve(ORTHONORMAL_TOL):
        raise NotOrthonormal(f"basis fails orthonormality by {deviation:.3e}")
    return Povm(np.stack([np.outer(v, v.conj()) for v in vecs]))


def rank_one_povm(weights, states) -> Povm:
    """Weighted rank-1 measurement with elements ``alpha_a |psi_a><psi_a|``.

    Completeness is checked, not enforced: the weighted projectors must
    already sum to the identity.
    """
    weights = np.asarray(weights, dtype=float)
    states = np.asarray(states, dtype=np.complex128)
    if states.ndim != 2 or weights.ndim != 1 or len(weights) != len(states):
        raise ShapeMismatch("need one weight per state vector")
    elements = np.stack([w * np.outer(v, v.conj()) for w, v in zip(weights, states)])
    return validate_povm(elements)


def post_process(m: Povm, stochastic: StochasticMap) -> Povm:
    """Classically relabel outcomes: ``M'_b = sum_a p(b|a) M_a``."""
    if stochastic.n_inputs != m.outcomes:
        raise SizeMismatch(
            f"map expects {stochastic.n_inputs} inputs, measurement has {m.outcomes} outcomes"
        )
    elements = np.einsum("ab,aij->bij", stochastic.probabilities, m.elements)
    return Povm(elements)


def depolarize_povm(m: Povm, eta: float) -> Povm:
    """Mix each element with white noise of the same weight:
    ``(1 - eta) M_a + eta tr[M_a] I / d``."""
    if not 0.0 <= eta <= 1.0:
        raise EtaOutOfRange(f"eta must lie in [0, 1], got {eta}")
    d = m.dimension
    traces = np.einsum("aii->a", m.elements).real
    eye = np.eye(d, dtype=np.complex128)
    elements = (1.0 - eta) * m.elements + eta * traces[:, None, None] * eye / d
    return Povm(elements)


def random_povm(d: int, o: int, seed: int) -> Povm:
    """Full-rank random measurement, deterministic in the seed.

    Wishart blocks ``W_a = G_a G_a^dag`` are normalized by the inverse
    square root of their sum, which is complete by construction.
    """
    if d < 1 or o < 1:
        raise ValueError("dimension and outcome count must be at least 1")
    rng = np.random.default_rng(seed)
    g = (rng.standard_normal((o, d, d)) + 1j * rng.standard_normal((o, d, d))) / math.sqrt(2.0)
    w = np.einsum("aij,akj->aik", g, g.conj())
    total = w.sum(axis=0)
    dec = eig_hermitian(total)
    inv_sqrt = (dec.eigenvectors / np.sqrt(dec.eigenvalues)) @ dec.eigenvectors.conj().T
    elements = np.einsum("ij,ajk,kl->ail", inv_sqrt, w, inv_sqrt)
    elements = 0.5 * (elements + np.conj(np.swapaxes(elements, 1, 2)))
    return Povm(elements)


def random_stochastic_map(n_in: int, n_out: int, seed: int) -> StochasticMap:
    """Random conditional distribution, rows drawn from a flat Dirichlet."""
    rng = np.random.default_rng(seed)
    return StochasticMap(rng.dirichlet(np.ones(n_out), size=n_in))


def _require_povm(m) -> Povm:
    if not isinstance(m, Povm):
        raise InvalidPovm(f"expected a Povm, got {type(m).__name__}")
    return m
