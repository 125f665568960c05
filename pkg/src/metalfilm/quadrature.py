"""Adaptive Gauss-Kronrod quadrature for complex-valued integrands.

A 31-point Kronrod rule with its embedded 15-point Gauss rule supplies a
per-panel value and error estimate; panels holding the bulk of the error
are bisected until the summed estimate meets the tolerance.  Real and
imaginary parts are integrated jointly (the error is the complex modulus
of the Kronrod-Gauss difference), so oscillatory integrands with coupled
components are handled without splitting the problem in two.

The node/weight tables were generated from first principles: the sixteen
added nodes are the roots of the degree-16 Stieltjes polynomial orthogonal
to the product of the Legendre polynomial P15 with all lower powers, and
the interpolatory weights were solved in 60-digit arithmetic.  The test
suite re-verifies the rule (degree-46 exactness, embedded Gauss subrule,
positivity) rather than trusting the frozen digits.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

__all__ = ["QuadratureError", "integrate_complex"]


class QuadratureError(RuntimeError):
    """Panel budget exhausted before reaching the requested tolerance.

    Carries the best estimate so callers may degrade gracefully:
    ``value`` is the integral estimate, ``error_estimate`` its
    (unacceptably large) error bound.
    """

    def __init__(self, message: str, value: complex, error_estimate: float):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


# Nonnegative half of the symmetric 31-point Kronrod node set; entries with a
# nonzero Gauss weight form the embedded 15-point Gauss-Legendre rule.
_NODES_HALF = np.array([
    0.0,
    0.10114206691871750,
    0.20119409399743452,
    0.29918000715316881,
    0.39415134707756337,
    0.48508186364023968,
    0.57097217260853885,
    0.65099674129741697,
    0.72441773136017005,
    0.79041850144246593,
    0.84820658341042722,
    0.89726453234408190,
    0.93727339240070590,
    0.96773907567913913,
    0.98799251802048543,
    0.99800229869339706,
])
_KRONROD_WEIGHTS_HALF = np.array([
    0.10133000701479155,
    0.10076984552387560,
    0.099173598721791959,
    0.096642726983623679,
    0.093126598170825321,
    0.088564443056211771,
    0.083080502823133021,
    0.076849680757720379,
    0.069854121318728259,
    0.062009567800670640,
    0.053481524690928087,
    0.044589751324764877,
    0.035346360791375846,
    0.025460847326715320,
    0.015007947329316123,
    0.0053774798729233490,
])
_GAUSS_WEIGHTS_HALF = np.array([
    0.20257824192556127,
    0.0,
    0.19843148532711158,
    0.0,
    0.18616100001556221,
    0.0,
    0.16626920581699393,
    0.0,
    0.13957067792615431,
    0.0,
    0.10715922046717194,
    0.0,
    0.070366047488108125,
    0.0,
    0.030753241996117268,
    0.0,
])

NODES = np.concatenate([-_NODES_HALF[:0:-1], _NODES_HALF])
KRONROD_WEIGHTS = np.concatenate([_KRONROD_WEIGHTS_HALF[:0:-1], _KRONROD_WEIGHTS_HALF])
GAUSS_WEIGHTS = np.concatenate([_GAUSS_WEIGHTS_HALF[:0:-1], _GAUSS_WEIGHTS_HALF])


def _panel_rule(f, lefts: np.ndarray, rights: np.ndarray):
    """Kronrod value and |K-G| error estimate for a batch of panels."""
    half = 0.5 * (rights - lefts)
    mids = 0.5 * (lefts + rights)
    x = mids[:, None] + half[:, None] * NODES[None, :]
    y = np.asarray(f(x.ravel()), dtype=np.complex128).reshape(x.shape)
    kron = half * (y @ KRONROD_WEIGHTS)
    gauss = half * (y @ GAUSS_WEIGHTS)
    return kron, np.abs(kron - gauss)


def integrate_complex(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_panels: int = 10_000,
    initial_panels: int = 8,
) -> tuple[complex, float]:
    """Integrate a complex-valued function over [a, b] adaptively.

    Parameters
    ----------
    f : callable
        vectorized integrand; receives a 1-D float array strictly inside
        (a, b) and returns a complex array of the same shape
    a, b : float
        integration limits, a <= b
    tol : float
        relative tolerance; iteration stops once the summed error
        estimate is <= tol*(|value| + 1)
    max_panels : int
        subdivision budget (number of simultaneously live panels)
    initial_panels : int
        uniform panels seeding the adaptive loop

    Returns
    -------
    (value, error_estimate)
        complex integral and the final summed error bound, which
        satisfies error_estimate <= tol*(|value| + 1)

    Raises
    ------
    QuadratureError
        if the budget is exhausted first; the exception carries the best
        estimate and its error bound
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be > 0, got {tol!r}")
    if b < a:
        raise ValueError(f"invalid interval [{a!r}, {b!r}]")
    edges = np.linspace(a, b, initial_panels + 1)
    lefts, rights = edges[:-1].copy(), edges[1:].copy()
    vals, errs = _panel_rule(f, lefts, rights)

    while True:
        value = complex(vals.sum())
        err = float(errs.sum())
        if err <= tol * (abs(value) + 1.0):
            return value, err
        room = max_panels - len(vals)
        if room <= 0:
            raise QuadratureError(
                f"quadrature did not reach tol={tol:g} within {max_panels} panels "
                f"(best estimate {value!r}, error {err:g})",
                value,
                err,
            )
        # Bisect the panels carrying the top half of the error mass.
        order = np.argsort(errs)[::-1]
        cum = np.cumsum(errs[order])
        k = int(np.searchsorted(cum, 0.5 * err)) + 1
        k = min(k, room, len(vals))
        split = order[:k]
        keep = np.ones(len(vals), dtype=bool)
        keep[split] = False
        mids = 0.5 * (lefts[split] + rights[split])
        child_l = np.concatenate([lefts[split], mids])
        child_r = np.concatenate([mids, rights[split]])
        child_vals, child_errs = _panel_rule(f, child_l, child_r)
        lefts = np.concatenate([lefts[keep], child_l])
        rights = np.concatenate([rights[keep], child_r])
        vals = np.concatenate([vals[keep], child_vals])
        errs = np.concatenate([errs[keep], child_errs])
