"""Independent brute-force oracles used across the test suite.

These deliberately share no code with the package: composite Simpson on
dense uniform grids, in two different variables, so an error in the
adaptive quadrature or in the integrand substitution cannot cancel.
"""

import numpy as np


def simpson(y, h):
    n = len(y) - 1
    assert n % 2 == 0, "composite Simpson needs an even number of panels"
    return (h / 3.0) * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def fuchs_integral_simpson_u(w, p, panels=10**6):
    """Size-effect kernel integral via Simpson on u = 1/t in (0, 1]."""
    w = complex(w)
    u = np.linspace(0.0, 1.0, panels + 1)
    f = np.zeros(panels + 1, dtype=complex)
    nz = u > 0
    with np.errstate(over="ignore", under="ignore"):
        decay = np.exp(-w / u[nz])
    f[nz] = (u[nz] - u[nz] ** 3) * (1.0 - decay) / (1.0 - p * decay)
    return simpson(f, 1.0 / panels)


def fuchs_integral_simpson_t(w, p, panels=10**6, decay_lengths=40.0):
    """Same integral via Simpson in t on [1, t_max] plus the algebraic tail.

    Beyond t_max = 1 + decay_lengths/Re(w) the exponential is below
    e^-40, so the tail integrand is (1/t^3 - 1/t^5) to ~1e-18 relative
    and integrates in closed form to 1/(2 t_max^2) - 1/(4 t_max^4).
    """
    w = complex(w)
    t_max = 1.0 + decay_lengths / w.real
    t = np.linspace(1.0, t_max, panels + 1)
    with np.errstate(over="ignore", under="ignore"):
        e = np.exp(-w * t)
    f = (t**-3.0 - t**-5.0) * (1.0 - e) / (1.0 - p * e)
    tail = 0.5 / t_max**2 - 0.25 / t_max**4
    return simpson(f, (t_max - 1.0) / panels) + tail
