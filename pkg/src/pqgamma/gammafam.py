"""The four gamma corners: Gamma_{p,q}, Euler's Gamma_p, Jackson's Gamma_q, classical Gamma.

All functions return natural logs; ratios in downstream inequality work
would overflow in the value domain.  Gamma_{p,q} is defined only for
q in (0,1); Gamma_q carries both the 0<q<1 and q>1 branches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qcore import (
    DomainError,
    PQParams,
    SeriesControl,
    log_q_bracket,
    log_q_pochhammer_inf,
    q_bracket,
)

_LOG_2PI = math.log(2.0 * math.pi)

# B_{2n} / (2n (2n-1)) for the Stirling series of ln Gamma
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

_SHIFT = 10.0  # recurrence pushes the argument above this before the series


@dataclass(frozen=True)
class GammaValue:
    """Log-domain carrier for a gamma-family value."""

    log_value: float

    def value(self):
        return math.exp(self.log_value)


def log_gamma_pq(x, params: PQParams):
    """ln Gamma_{p,q}(x) = x ln[p]_q + ln [p]_q! - sum_{k=0}^{p} ln [x+k]_q."""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    p, q = params.p, params.q
    ks = np.arange(0, p + 1, dtype=float)
    lbp = math.log(q_bracket(p, q))
    num = log_q_bracket(np.arange(1, p + 1), q).sum()
    den = log_q_bracket(x + ks, q).sum()
    return x * lbp + float(num) - float(den)


def log_gamma_p(x, p):
    """ln Gamma_p(x) = x ln p + sum_{k=1}^{p} ln k - sum_{k=0}^{p} ln(x+k)."""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    if not isinstance(p, (int, np.integer)) or p < 1:
        raise DomainError(f"p must be a positive integer, got {p!r}")
    num = np.log(np.arange(1, p + 1, dtype=float)).sum()
    den = np.log(x + np.arange(0, p + 1, dtype=float)).sum()
    return x * math.log(p) + float(num) - float(den)


def log_gamma_q(x, q, ctl=SeriesControl()):
    """ln Gamma_q(x) via Jackson's products; 0<q<1 and q>1 branches."""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    if q <= 0 or q == 1.0:
        raise DomainError(f"q must be positive and != 1, got {q!r}")
    if q < 1.0:
        num = log_q_pochhammer_inf(q, q, ctl)
        den = log_q_pochhammer_inf(q**x, q, ctl)
        return num - den + (1.0 - x) * math.log1p(-q)
    qi = 1.0 / q
    num = log_q_pochhammer_inf(qi, qi, ctl)
    den = log_q_pochhammer_inf(q**-x, qi, ctl)
    return num - den + (1.0 - x) * math.log(q - 1.0) + 0.5 * x * (x - 1.0) * math.log(q)


def log_gamma_classical(x):
    """ln Gamma(x) by upward recurrence into the Stirling series region (x >= 10)."""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    shifted = []
    z = x
    while z < _SHIFT:
        shifted.append(math.log(z))
        z += 1.0
    r2 = 1.0 / (z * z)
    series = 0.0
    for c in reversed(_STIRLING):
        series = series * r2 + c
    series /= z  # sum_k c_k z^{-(2k-1)}
    val = (z - 0.5) * math.log(z) - z + 0.5 * _LOG_2PI + series
    return val - math.fsum(shifted)
