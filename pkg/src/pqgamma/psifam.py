"""Psi analogues: psi_{p,q} and its derivatives, psi_p, psi_q (both branches), classical psi.

The (p,q)-psi series is the exact logarithmic derivative of ln Gamma_{p,q};
its n-th derivative is summed over the geometric m-expansion, which is the
series form of the integral against the discrete measure with masses
-ln q at the points -m ln q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qcore import DomainError, PQParams, SeriesControl, TruncationError, q_bracket

_EULER_GAMMA = 0.5772156649015328606

# B_{2n} / (2n) for the asymptotic psi series
_PSI_ASY = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)

_SHIFT = 10.0


@dataclass(frozen=True)
class PsiDerivOrder:
    """Derivative order for the psi family; n = 0 means psi itself.

    Difference-table campaigns cap n at 8: beyond that the tables drown
    in rounding at double precision.
    """

    n: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise DomainError(f"derivative order must be a nonnegative integer, got {self.n!r}")


def psi_pq(x, params: PQParams):
    """psi_{p,q}(x) = ln[p]_q + ln q * sum_{k=0}^{p} q^{x+k}/(1 - q^{x+k})."""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    p, q = params.p, params.q
    lq = math.log(q)
    ys = (x + np.arange(0, p + 1, dtype=float)) * lq
    # q^{x+k}/(1-q^{x+k}) = e^y / (-expm1(y)); expm1 keeps digits as q -> 1
    ratio = np.exp(ys) / (-np.expm1(ys))
    return math.log(q_bracket(p, q)) + lq * float(ratio.sum())


def psi_pq_deriv(x, params: PQParams, order, ctl=SeriesControl()):
    """n-th derivative of psi_{p,q} via the m-series

    (ln q)^{n+1} sum_{m>=1} m^n q^{mx} (1 - q^{m(p+1)}) / (1 - q^m),

    truncated once past the term peak and below rel_tol * |partial sum|.
    """
    n = order.n if isinstance(order, PsiDerivOrder) else int(order)
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    if n < 1:
        raise DomainError(f"derivative order must be >= 1, got {n!r}")
    p, q = params.p, params.q
    lq = math.log(q)
    peak = n / (x * -lq)  # argmax of m^n q^{mx}
    total = 0.0
    m0 = 1
    block = 256
    while m0 <= ctl.max_terms:
        m1 = min(m0 + block, ctl.max_terms + 1)
        ms = np.arange(m0, m1, dtype=float)
        qm = np.exp(ms * lq)
        terms = ms**n * np.exp(ms * (x * lq)) * (1.0 - np.exp(ms * ((p + 1) * lq))) / (1.0 - qm)
        total += float(terms.sum())
        if ms[-1] > peak and terms[-1] < ctl.rel_tol * abs(total):
            return lq ** (n + 1) * total
        m0 = m1
    raise TruncationError(
        f"psi_pq derivative series (x={x}, p={p}, q={q}, n={n}) hit max_terms={ctl.max_terms}"
    )


def psi_p(x, p):
    """psi_p(x) = ln p - sum_{k=0}^{p} 1/(x+k)."""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    if not isinstance(p, (int, np.integer)) or p < 1:
        raise DomainError(f"p must be a positive integer, got {p!r}")
    return math.log(p) - float((1.0 / (x + np.arange(0, p + 1, dtype=float))).sum())


def _geometric_sum(x, q, n, ctl, inverse):
    """sum_{m>=1} m^n q^{±mx} / (1 - q^{±m}) with blockwise truncation.

    inverse=False sums q^{mx}/(1-q^m) (needs 0<q<1); inverse=True sums
    q^{-mx}/(1-q^{-m}) (needs q>1).
    """
    lq = math.log(q) if not inverse else -math.log(q)
    # lq < 0 in both cases; exponential decay rate is x*|lq|
    peak = n / (x * -lq) if n > 0 else 0.0
    total = 0.0
    m0 = 1
    block = 1 << 16
    while m0 <= ctl.max_terms:
        m1 = min(m0 + block, ctl.max_terms + 1)
        ms = np.arange(m0, m1, dtype=float)
        terms = ms**n * np.exp(ms * (x * lq)) / (1.0 - np.exp(ms * lq)) if n else np.exp(
            ms * (x * lq)
        ) / (1.0 - np.exp(ms * lq))
        total += float(terms.sum())
        if ms[-1] > peak and abs(terms[-1]) < ctl.rel_tol * max(abs(total), 1e-300):
            return total
        m0 = m1
    raise TruncationError(f"psi_q series (x={x}, q={q}, n={n}) hit max_terms={ctl.max_terms}")


def psi_q(x, q, ctl=SeriesControl()):
    """psi_q(x) for 0<q<1 and q>1 via the n-series representations."""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    if q <= 0 or q == 1.0:
        raise DomainError(f"q must be positive and != 1, got {q!r}")
    if q < 1.0:
        s = _geometric_sum(x, q, 0, ctl, inverse=False)
        return -math.log1p(-q) + math.log(q) * s
    s = _geometric_sum(x, q, 0, ctl, inverse=True)
    return -math.log(q - 1.0) + math.log(q) * (x - 0.5 - s)


def psi_q_deriv(x, q, order, ctl=SeriesControl()):
    """n-th derivative of psi_q, implementing the cited series for each branch.

    0<q<1: (ln q)^{n+1} sum m^n q^{mx}/(1-q^m).
    q>1, n=1: ln q (1 + sum m q^{-mx}/(1-q^{-mx}));
    q>1, n>=2: (-1)^{n-1} (ln q)^{n+1} sum m^n q^{-mx}/(1-q^{-mx}).
    """
    n = order.n if isinstance(order, PsiDerivOrder) else int(order)
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    if n < 1:
        raise DomainError(f"derivative order must be >= 1, got {n!r}")
    if q <= 0 or q == 1.0:
        raise DomainError(f"q must be positive and != 1, got {q!r}")
    lq = math.log(q)
    if q < 1.0:
        s = _geometric_sum(x, q, n, ctl, inverse=False)
        return lq ** (n + 1) * s
    s = _inverse_x_sum(x, q, n, ctl)
    if n == 1:
        return lq * (1.0 + s)
    return (-1.0) ** (n - 1) * lq ** (n + 1) * s


def _inverse_x_sum(x, q, n, ctl):
    """sum_{m>=1} m^n q^{-mx} / (1 - q^{-mx}) for q > 1."""
    lq = -math.log(q)
    peak = n / (x * -lq)
    total = 0.0
    m0 = 1
    block = 1 << 12
    while m0 <= ctl.max_terms:
        m1 = min(m0 + block, ctl.max_terms + 1)
        ms = np.arange(m0, m1, dtype=float)
        e = np.exp(ms * (x * lq))
        terms = ms**n * e / (1.0 - e)
        total += float(terms.sum())
        if ms[-1] > peak and abs(terms[-1]) < ctl.rel_tol * max(abs(total), 1e-300):
            return total
        m0 = m1
    raise TruncationError(f"psi_q (q>1) series (x={x}, q={q}, n={n}) hit max_terms={ctl.max_terms}")


def psi_classical(x):
    """Classical digamma by recurrence into the asymptotic region (x >= 10); oracle role."""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x!r}")
    acc = []
    z = x
    while z < _SHIFT:
        acc.append(1.0 / z)
        z += 1.0
    r2 = 1.0 / (z * z)
    series = 0.0
    for c in reversed(_PSI_ASY):
        series = series * r2 + c
    series *= r2  # sum_k c_k z^{-2k}
    return math.log(z) - 0.5 / z - series - math.fsum(acc)


def euler_gamma():
    """Euler's constant (as a convenience for limit checks)."""
    return _EULER_GAMMA
