"""Library-wide numeric tolerances.

All identities handled here are exact; these constants only absorb
floating-point error. Each public function takes its tolerance as a keyword
argument defaulting to the value below.
"""
import math
import os

from .errors import ParseError

ENV_REL_TOL = "LOCUSKIT_REL_TOL"

# closed form vs direct summation
EQUIVALENCE_REL_TOL = 1e-10
# spread of a power sum over alpha, relative to its minimum
ALPHA_INDEPENDENCE_REL_TOL = 1e-12
# half-width of the Point band around n * r**(2m)
POINT_BAND_REL_TOL = 1e-9
# bisection stopping width, relative, in u = ell**2
BISECTION_REL_TOL = 1e-14
BISECTION_MAX_ITER = 400
# degeneracy threshold for the weighted classifier, relative to its scale
WEIGHTED_REL_TOL = 1e-12
# analytic lemma value vs direct sum, per vertex
LEMMA_ABS_TOL_PER_TERM = 1e-12
# power-reduction reconstruction, absolute
REDUCTION_ABS_TOL = 1e-13

# largest order with guaranteed exact binomial bookkeeping
MAX_EXACT_ORDER = 64


def env_rel_tol():
    """Return the ``LOCUSKIT_REL_TOL`` override, or None when unset."""
    raw = os.environ.get(ENV_REL_TOL)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = float(raw)
    except ValueError:
        raise ParseError(f"{ENV_REL_TOL}={raw!r} is not a number") from None
    if not (math.isfinite(value) and value > 0):
        raise ParseError(f"{ENV_REL_TOL} must be positive and finite, got {raw!r}")
    return value
