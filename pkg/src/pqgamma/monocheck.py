"""Difference-table verification engine for complete monotonicity and friends.

Complete monotonicity is tested through forward-difference signs,
(-1)^n Delta_h^n f(x) >= -tol, which characterizes CM exactly and needs
only function values; high-order numerical derivatives are hopeless at
double precision.  Tolerances scale with the largest table magnitude to
absorb cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .qcore import DomainError

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid and stencil policy for the difference-table campaigns."""

    lo: float
    hi: float
    points: int = 64
    steps: tuple = (1e-2, 1e-1, 0.5)
    max_order: int = 6
    seed: int = 42

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if self.points < 1:
            raise DomainError(f"points must be >= 1, got {self.points}")
        if not (0 <= self.max_order <= 8):
            raise DomainError(f"max_order must lie in [0,8], got {self.max_order}")
        if any(h <= 0 for h in self.steps):
            raise DomainError(f"steps must be positive, got {self.steps}")

    def xs(self):
        if self.points == 1:
            return [self.lo]
        span = self.hi - self.lo
        return [self.lo + span * i / (self.points - 1) for i in range(self.points)]


@dataclass(frozen=True)
class MonotonicityReport:
    """Verdict plus the worst-case signed slack of a campaign."""

    verdict: str  # "pass" | "fail"
    min_slack: float
    witness: tuple  # (x, n, h) for difference campaigns; (x, y, alpha) for log-convexity
    tolerance_used: float
    evaluations: int
    seed: int | None = None

    @property
    def passed(self):
        return self.verdict == "pass"


class _LCG:
    """Seeded 64-bit linear congruential generator; deterministic across platforms."""

    _A = 6364136223846793005
    _C = 1442695040888963407
    _M = 1 << 64

    def __init__(self, seed):
        self.state = (seed ^ 0x9E3779B97F4A7C15) % self._M

    def uniform(self):
        self.state = (self._A * self.state + self._C) % self._M
        return (self.state >> 11) / float(1 << 53)


def forward_difference(f, x, h, n):
    """Delta_h^n f(x) = sum_j (-1)^{n-j} C(n,j) f(x+jh), compensated via fsum."""
    if h <= 0:
        raise DomainError(f"h must be positive, got {h!r}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n!r}")
    return math.fsum(
        (-1.0) ** (n - j) * math.comb(n, j) * f(x + j * h) for j in range(n + 1)
    )


def difference_table(values):
    """Rows of forward differences: row[n][i] = Delta^n at offset i.

    Built by the exact recursion Delta^n(x) = Delta^{n-1}(x+h) - Delta^{n-1}(x).
    """
    rows = [list(values)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return rows


def _difference_campaign(f, grid, tol_scale, min_order):
    best_margin = math.inf
    best = (0.0, (grid.lo, 0, grid.steps[0]), 0.0)
    evaluations = 0
    for x in grid.xs():
        for h in grid.steps:
            n_avail = min(grid.max_order, int((grid.hi - x) / h + 1e-12))
            if n_avail < min_order:
                continue
            vals = [f(x + j * h) for j in range(n_avail + 1)]
            evaluations += n_avail + 1
            rows = difference_table(vals)
            table_mag = max(abs(v) for row in rows for v in row)
            tol = tol_scale * _EPS * max(1.0, table_mag)
            for n in range(min_order, n_avail + 1):
                s = (-1.0) ** n * rows[n][0]
                margin = s + tol
                if margin < best_margin:
                    best_margin = margin
                    best = (s, (x, n, h), tol)
    verdict = "pass" if best_margin >= 0.0 else "fail"
    return MonotonicityReport(verdict, best[0], best[1], best[2], evaluations, grid.seed)


def check_cm(f, grid: GridSpec, tol_scale=1e3):
    """Complete-monotonicity campaign: (-1)^n Delta_h^n f >= -tol for n = 0..max_order."""
    return _difference_campaign(f, grid, tol_scale, min_order=0)


def check_lcm(f, grid: GridSpec, tol_scale=1e3):
    """Logarithmic complete monotonicity: the difference test on ln f, orders 1..max_order."""

    def g(x):
        v = f(x)
        if v <= 0.0:
            raise DomainError(f"f({x}) = {v} is not positive; ln f undefined")
        return math.log(v)

    return _difference_campaign(g, grid, tol_scale, min_order=1)


def check_log_convex(f, grid: GridSpec, tol_scale=1e3):
    """Seeded-random log-convexity test: ln f(ax+by) <= a ln f(x) + b ln f(y) + tol."""
    rng = _LCG(grid.seed)
    best_margin = math.inf
    best = (0.0, (grid.lo, grid.lo, 0.5), 0.0)
    evaluations = 0
    span = grid.hi - grid.lo
    for _ in range(grid.points**2):
        x = grid.lo + span * rng.uniform()
        y = grid.lo + span * rng.uniform()
        alpha = rng.uniform()
        beta = 1.0 - alpha
        lx, ly, lm = f(x), f(y), f(alpha * x + beta * y)
        evaluations += 3
        if lx <= 0.0 or ly <= 0.0 or lm <= 0.0:
            raise DomainError("log-convexity test needs a positive function")
        lhs = math.log(lm)
        rhs = alpha * math.log(lx) + beta * math.log(ly)
        slack = rhs - lhs
        tol = tol_scale * _EPS * max(1.0, abs(lhs), abs(rhs))
        margin = slack + tol
        if margin < best_margin:
            best_margin = margin
            best = (slack, (x, y, alpha), tol)
    verdict = "pass" if best_margin >= 0.0 else "fail"
    return MonotonicityReport(verdict, best[0], best[1], best[2], evaluations, grid.seed)


def check_decreasing(f, grid: GridSpec, tol_scale=1e3):
    """Monotone decrease over the sorted grid: f(x_{i+1}) <= f(x_i) + tol."""
    xs = grid.xs()
    vals = [f(x) for x in xs]
    tol = tol_scale * _EPS * max(1.0, max(abs(v) for v in vals))
    best_margin = math.inf
    best = (0.0, (xs[0], 1, 0.0), tol)
    for i in range(len(xs) - 1):
        slack = vals[i] - vals[i + 1]
        margin = slack + tol
        if margin < best_margin:
            best_margin = margin
            best = (slack, (xs[i], 1, xs[i + 1] - xs[i]), tol)
    verdict = "pass" if best_margin >= 0.0 else "fail"
    return MonotonicityReport(verdict, best[0], best[1], best[2], len(xs), grid.seed)
