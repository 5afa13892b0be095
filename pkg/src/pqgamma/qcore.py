"""q-arithmetic primitives: q-brackets, q-factorials, infinite q-Pochhammer products.

Everything gamma-scale is carried in the log domain; callers exponentiate
at the boundary.  Evaluation near q = 1 goes through expm1 so that the
bracket (1 - q^n)/(1 - q) keeps its digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """Argument outside the domain of a (p,q)-family function."""


class TruncationError(RuntimeError):
    """A series or product hit its term cap before meeting the tail bound."""


@dataclass(frozen=True)
class PQParams:
    """Deformation parameters shared by all (p,q) functions: p >= 1 integer, 0 < q < 1."""

    p: int
    q: float

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or self.p < 1:
            raise DomainError(f"p must be a positive integer, got {self.p!r}")
        if not (0.0 < self.q < 1.0):
            raise DomainError(f"q must lie strictly inside (0,1), got {self.q!r}")


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for infinite series/products."""

    rel_tol: float = 1e-14
    max_terms: int = 10**6

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms!r}")


def q_bracket(n, q):
    """[n]_q = (1 - q^n)/(1 - q), safe for q arbitrarily close to 1.

    Computed as expm1(n ln q)/expm1(ln q); tends to n as q -> 1-.
    """
    if not (0.0 < q < 1.0):
        raise DomainError(f"q must lie strictly inside (0,1), got {q!r}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n!r}")
    lq = math.log(q)
    return math.expm1(n * lq) / math.expm1(lq)


def log_q_bracket(n, q):
    """ln [n]_q for scalar or array n (n > 0)."""
    lq = math.log(q)
    return np.log(np.expm1(np.asarray(n, dtype=float) * lq) / math.expm1(lq))


def log_q_factorial(p, q):
    """ln [p]_q! = sum_{k=1}^{p} ln [k]_q."""
    if not isinstance(p, (int, np.integer)) or p < 1:
        raise DomainError(f"p must be a positive integer, got {p!r}")
    if not (0.0 < q < 1.0):
        raise DomainError(f"q must lie strictly inside (0,1), got {q!r}")
    return float(log_q_bracket(np.arange(1, p + 1), q).sum())


_BLOCK = 1 << 20


def log_q_pochhammer_inf(a, q, ctl=SeriesControl()):
    """ln (a;q)_inf = sum_{j>=0} ln(1 - a q^j), truncated by its geometric tail bound.

    Stops at J once a q^{J+1} / ((1-q)(1 - a q^{J+1})) < rel_tol * |partial sum|.
    """
    if not (0.0 <= a < 1.0):
        raise DomainError(f"a must lie in [0,1), got {a!r}")
    if not (0.0 < q < 1.0):
        raise DomainError(f"q must lie strictly inside (0,1), got {q!r}")
    if a == 0.0:
        return 0.0
    lq = math.log(q)
    total = 0.0
    j0 = 0
    while j0 < ctl.max_terms:
        j1 = min(j0 + _BLOCK, ctl.max_terms)
        js = np.arange(j0, j1, dtype=float)
        total += float(np.log1p(-a * np.exp(js * lq)).sum())
        aq = a * math.exp(j1 * lq)  # a q^{J+1}
        tail = aq / ((1.0 - q) * (1.0 - aq))
        if tail < ctl.rel_tol * abs(total):
            return total
        j0 = j1
    raise TruncationError(
        f"(a;q)_inf with a={a}, q={q}: tail bound not met within {ctl.max_terms} factors"
    )
