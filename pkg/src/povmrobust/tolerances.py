"""Default numerical tolerances and the global override hook.

Every validation tolerance in the package has a module-level default and
can be overridden per call.  Setting the environment variable
``POVM_ROBUST_TOL`` replaces *all* defaults with a single value; this is
meant for quick experiments only and is discouraged for real use, since
the defaults are calibrated per check.
"""

import os

ENV_VAR = "POVM_ROBUST_TOL"


def resolve(default: float) -> float:
    """Return the default tolerance, unless globally overridden."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_VAR} must parse as a float, got {raw!r}") from exc
