"""JSON encodings for every value the package exchanges with files.

A complex scalar is a two-element array ``[re, im]``; a matrix is a
row-major array of rows of such pairs.  Serialized reals are rounded to
15 significant digits and objects are emitted with alphabetically sorted
keys, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json

import numpy as np

from .asymmetry import AsymmetryReport, GroupRepresentation, validate_group
from .discrimination import Ensemble, validate_ensemble
from .errors import ParseError
from .info import JointDistribution
from .measurement import Povm, StochasticMap, validate_povm
from .rom import RobustnessReport
from .simulability import SimulabilityResult


def _round15(value: float) -> float:
    return float(f"{value:.15g}")


def _jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return _round15(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return _round15(float(obj))
    if isinstance(obj, dict):
        return {key: _jsonable(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(item) for item in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(item) for item in obj.tolist()]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(payload) -> str:
    """Deterministic JSON text: sorted keys, 15 significant digits."""
    return json.dumps(_jsonable(payload), sort_keys=True)


def matrix_to_json(m) -> list:
    m = np.asarray(m, dtype=np.complex128)
    return [[[_round15(z.real), _round15(z.imag)] for z in row] for row in m.tolist()]


def matrix_from_json(obj) -> np.ndarray:
    try:
        arr = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError("<data>", f"malformed matrix: {exc}") from exc
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ParseError("<data>", f"a matrix is a list of rows of [re, im] pairs, got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def _require(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError("<data>", f"{kind} object needs the key {key!r}")
    return obj[key]


def povm_to_json(m: Povm) -> dict:
    return {
        "dimension": m.dimension,
        "elements": [matrix_to_json(el) for el in m],
    }


def povm_from_json(obj) -> Povm:
    d = _require(obj, "dimension", "POVM")
    elements = [matrix_from_json(el) for el in _require(obj, "elements", "POVM")]
    povm = validate_povm(elements)
    if povm.dimension != d:
        raise ParseError("<data>", f"declared dimension {d}, elements have {povm.dimension}")
    return povm


def stochastic_map_to_json(s: StochasticMap) -> dict:
    return {
        "rows": s.n_inputs,
        "cols": s.n_outputs,
        "p": [[_round15(v) for v in row] for row in s.probabilities.tolist()],
    }


def stochastic_map_from_json(obj) -> StochasticMap:
    p = np.asarray(_require(obj, "p", "stochastic map"), dtype=float)
    if p.shape != (_require(obj, "rows", "stochastic map"), _require(obj, "cols", "stochastic map")):
        raise ParseError("<data>", "stochastic map shape disagrees with rows/cols")
    return StochasticMap(p)


def ensemble_to_json(e: Ensemble) -> dict:
    return {
        "dimension": e.dimension,
        "priors": [_round15(p) for p in e.priors.tolist()],
        "states": [matrix_to_json(s) for s in e.states],
    }


def ensemble_from_json(obj) -> Ensemble:
    d = _require(obj, "dimension", "ensemble")
    states = [matrix_from_json(s) for s in _require(obj, "states", "ensemble")]
    ensemble = validate_ensemble(states, _require(obj, "priors", "ensemble"))
    if ensemble.dimension != d:
        raise ParseError("<data>", f"declared dimension {d}, states have {ensemble.dimension}")
    return ensemble


def state_to_json(rho) -> dict:
    rho = np.asarray(rho, dtype=np.complex128)
    return {"dimension": rho.shape[0], "state": matrix_to_json(rho)}


def state_from_json(obj) -> np.ndarray:
    rho = matrix_from_json(_require(obj, "state", "state"))
    if rho.shape[0] != _require(obj, "dimension", "state"):
        raise ParseError("<data>", "declared dimension disagrees with the state matrix")
    return rho


def group_to_json(g: GroupRepresentation) -> dict:
    return {
        "dimension": g.dimension,
        "unitaries": [matrix_to_json(u) for u in g.unitaries],
    }


def group_from_json(obj) -> GroupRepresentation:
    unitaries = [matrix_from_json(u) for u in _require(obj, "unitaries", "group")]
    group = validate_group(unitaries)
    if group.dimension != _require(obj, "dimension", "group"):
        raise ParseError("<data>", "declared dimension disagrees with the unitaries")
    return group


def joint_to_json(j: JointDistribution) -> dict:
    return {"p": [[_round15(v) for v in row] for row in j.p.tolist()]}


def joint_from_json(obj) -> JointDistribution:
    return JointDistribution(np.asarray(_require(obj, "p", "joint distribution"), dtype=float))


def robustness_report_to_json(report: RobustnessReport) -> dict:
    mixture = None
    if report.pseudo_mixture is not None:
        mixture = {
            "r": _round15(report.pseudo_mixture.r),
            "q": [_round15(v) for v in report.pseudo_mixture.q.tolist()],
            "noise": povm_to_json(report.pseudo_mixture.noise),
        }
    return {
        "rom": _round15(report.value),
        "primal_weights": [_round15(v) for v in report.primal_weights.tolist()],
        "dual_states": [matrix_to_json(s) for s in report.dual_states],
        "pseudo_mixture": mixture,
    }


def simulability_result_to_json(result: SimulabilityResult) -> dict:
    return {
        "verdict": result.verdict,
        "map": None if result.map is None else stochastic_map_to_json(result.map),
        "witness": None if result.witness is None else ensemble_to_json(result.witness),
        "gap": None if result.gap is None else _round15(result.gap),
    }


def asymmetry_report_to_json(report: AsymmetryReport) -> dict:
    return {
        "value": _round15(report.value),
        "dominating_operator": matrix_to_json(report.dominating),
        "game_advantage": _round15(report.game_advantage),
        "min_info": _round15(report.min_info),
    }
