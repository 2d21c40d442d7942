"""Detection statistics: error probability, Marcum Q, correlation, ROC.

The chain evaluated here converts a quantum SNR into a receiver operating
characteristic: the SNR fixes an effective correlation coefficient, and
the correlation plus a channel count map a false-alarm probability to a
detection probability through the first-order Marcum Q function.

Both special functions are implemented locally to documented accuracy so
the package carries no silent dependency for its core math:

- ``erfc``: series plus continued fraction, <= 1e-12 relative on [0, 10].
- ``marcum_q1``: exponent-scaled Poisson-weighted chi-square tail series,
  <= 1e-10 absolute for arguments in [0, 50], with a Gaussian-limit
  switch for arguments far beyond the series range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence


class RocVariant(Enum):
    """Denominator placement in the false-alarm/detection mapping.

    LINEAR_DENOMINATOR divides both Marcum arguments by (1 - rho^2), the
    mapping implemented by default.  SQRT_DENOMINATOR divides by
    sqrt(1 - rho^2) instead, the placement used by related covariance
    treatments of the same receiver; it is offered as an explicit
    alternative, never silently.
    """

    LINEAR_DENOMINATOR = "linear_denominator"
    SQRT_DENOMINATOR = "sqrt_denominator"


@dataclass(frozen=True)
class DetectionParams:
    """Inputs of the false-alarm to detection-probability mapping.

    rho is the correlation coefficient in [0, 1), rho0 its ideal ceiling
    in (0, 1], n_channels the integer channel count N >= 1, and p_fa the
    false-alarm probability in (0, 1].  p_fa = 1 is admitted (the mapping
    degenerates to certain detection) because sweep grids include it as
    their right endpoint.
    """

    rho: float
    n_channels: int
    p_fa: float
    rho0: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.rho < 1.0:
            raise ValueError(f"rho must be in [0, 1), got {self.rho}")
        if not 0.0 < self.rho0 <= 1.0:
            raise ValueError(f"rho0 must be in (0, 1], got {self.rho0}")
        if self.n_channels < 1 or self.n_channels != int(self.n_channels):
            raise ValueError(f"n_channels must be an integer >= 1, got {self.n_channels}")
        if not 0.0 < self.p_fa <= 1.0:
            raise ValueError(f"p_fa must be in (0, 1], got {self.p_fa}")


@dataclass(frozen=True)
class RocCurve:
    """Ordered (p_fa, p_d) pairs with strictly increasing p_fa."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("a ROC curve needs at least one point")
        last_fa = 0.0
        for p_fa, p_d in self.points:
            if p_fa <= last_fa:
                raise ValueError(f"p_fa grid must be strictly increasing, saw {p_fa} after {last_fa}")
            if not 0.0 <= p_d <= 1.0:
                raise ValueError(f"p_d out of [0, 1]: {p_d}")
            last_fa = p_fa

    @property
    def p_fa(self) -> tuple[float, ...]:
        return tuple(p for p, _ in self.points)

    @property
    def p_d(self) -> tuple[float, ...]:
        return tuple(d for _, d in self.points)


_SQRT_PI = math.sqrt(math.pi)

# Below the switch point the all-positive series converges in < 50 terms;
# above it the continued fraction does.  Both are well conditioned at 2.0.
_ERFC_SWITCH = 2.0


def erfc(x: float) -> float:
    """Complementary error function, <= 1e-12 relative on [0, 10].

    For |x| < 2 uses the all-positive-term series
    erf(x) = (2x/sqrt(pi)) e^{-x^2} sum_k (2x^2)^k / (1*3*...*(2k+1)),
    which has no cancellation, then complements.  For |x| >= 2 evaluates
    the classical continued fraction
    erfc(x) = (e^{-x^2}/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    with the modified Lentz iteration.  Negative arguments reflect through
    erfc(-x) = 2 - erfc(x).
    """
    if math.isnan(x):
        return math.nan
    if x < 0.0:
        return 2.0 - erfc(-x)
    if x == 0.0:
        return 1.0
    if x < _ERFC_SWITCH:
        return 1.0 - _erf_series(x)
    return _erfc_cf(x)


def erf(x: float) -> float:
    """Error function, complementary companion of :func:`erfc`."""
    if math.isnan(x):
        return math.nan
    if x < 0.0:
        return -erf(-x)
    if x < _ERFC_SWITCH:
        return _erf_series(x)
    return 1.0 - _erfc_cf(x)


def _erf_series(x: float) -> float:
    """All-positive series for erf, 0 <= x < 2."""
    x2 = 2.0 * x * x
    term = 1.0
    total = 1.0
    denom = 1.0
    for _ in range(200):
        denom += 2.0
        term *= x2 / denom
        total += term
        if term < total * 1e-17:
            break
    return (2.0 * x / _SQRT_PI) * math.exp(-x * x) * total


def _erfc_cf(x: float) -> float:
    """Continued fraction for erfc, x >= 2, modified Lentz iteration.

    Evaluates f = x + (1/2)/(x + 1/(x + (3/2)/(x + 2/(x + ...)))), the
    classical fraction with partial numerators k/2 and constant partial
    denominators x; then erfc(x) = e^{-x^2} / (sqrt(pi) * f).
    """
    tiny = 1e-300
    f = x
    c = f
    d = 0.0
    a = 0.5
    for _ in range(300):
        d = x + a * d
        if d == 0.0:
            d = tiny
        c = x + a / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
        a += 0.5
    return math.exp(-x * x) / (_SQRT_PI * f)


def error_probability(snr_m: float) -> float:
    """Receiver error probability erfc(sqrt(snr/8)) / 2 for snr >= 0.

    Equals 0.5 at zero SNR and decreases strictly toward 0.
    """
    if not snr_m >= 0.0:
        raise ValueError(f"snr_m must be >= 0, got {snr_m}")
    return 0.5 * erfc(math.sqrt(snr_m / 8.0))


def effective_rho(rho0: float, snr_linear: float) -> float:
    """Correlation available at a given linear SNR: rho0/sqrt(1 + SNR^-4).

    Strictly increasing in snr_linear, linear in rho0, and saturating at
    rho0 as the SNR grows; zero SNR maps to zero correlation.
    """
    if not 0.0 < rho0 <= 1.0:
        raise ValueError(f"rho0 must be in (0, 1], got {rho0}")
    if not snr_linear >= 0.0:
        raise ValueError(f"snr_linear must be >= 0, got {snr_linear}")
    if snr_linear == 0.0:
        return 0.0
    t = snr_linear * snr_linear
    if math.isinf(t):
        return rho0
    # rho0 / sqrt(1 + t^-2) rewritten without the t^-2 overflow for tiny t.
    return rho0 * t / math.hypot(t, 1.0)


def snr_for_rho(rho: float, rho0: float = 1.0) -> float:
    """Inverse of :func:`effective_rho`: the linear SNR achieving rho.

    Defined for 0 < rho < rho0; diverges as rho approaches rho0.  The
    base is evaluated as (rho0 - rho)(rho0 + rho)/rho^2 so the
    subtraction stays exact when the two correlations are close; the
    round trip through :func:`effective_rho` is then limited only by
    the rounding of rho itself, which grows as 1/(rho0 - rho).
    """
    if not 0.0 < rho0 <= 1.0:
        raise ValueError(f"rho0 must be in (0, 1], got {rho0}")
    if not 0.0 < rho < rho0:
        raise ValueError(f"rho must be in (0, rho0={rho0}), got {rho}")
    return ((rho0 - rho) * (rho0 + rho) / (rho * rho)) ** -0.25


# Series handles Poisson means x = a^2/2 up to this cap (~36k terms worst
# case); beyond it the Rician statistic is Gaussian to far better than the
# accuracy contract and the erfc limit takes over.
_MARCUM_SERIES_CAP = 2.0e6


def marcum_q1(a: float, b: float) -> float:
    """First-order Marcum Q function Q1(a, b), in [0, 1].

    Evaluated as the Poisson mixture of central chi-square tails,
    Q1(a, b) = sum_k P[Poisson(a^2/2) = k] * P[Poisson(b^2/2) <= k],
    summed over the +-12 sigma window of the a^2/2 Poisson weight with
    log-initialized terms, which keeps every intermediate in range for
    a, b up to a few thousand (absolute error <= 1e-10 on [0, 50]).  For
    a^2/2 beyond the series cap the noncentral statistic is Gaussian to
    better than the contract and Q1 degenerates to the erfc limit.
    Results saturate cleanly at 0 and 1 for extreme arguments.
    """
    if not (a >= 0.0 and b >= 0.0) or math.isinf(a) or math.isinf(b):
        raise ValueError(f"marcum_q1 needs finite a, b >= 0, got a={a}, b={b}")
    x = 0.5 * a * a
    y = 0.5 * b * b
    if y == 0.0:
        # b = 0 exactly, or small enough that b^2/2 underflows; either
        # way the true value differs from 1 by O(b^2) < 1 ulp.
        return 1.0
    if x == 0.0:
        return math.exp(-y) if y < 745.0 else 0.0
    if x > _MARCUM_SERIES_CAP:
        # R = sqrt(Z1^2 + Z2^2) with Z1 ~ N(a, 1): mean sqrt(a^2 + 1) to
        # O(1/a^3), unit variance; P[R > b] in the Gaussian limit.
        return 0.5 * erfc((b - math.sqrt(a * a + 1.0)) / math.sqrt(2.0))
    window = 12.0 * math.sqrt(x) + 30.0
    k_lo = max(0, int(x - window))
    k_hi = int(x + window) + 1
    # Poisson(x) weight at k_lo, then multiplicative updates.
    w = _exp_poisson_log(x, k_lo)
    # g = P[Poisson(y) <= k_lo], accumulated from the same log-initialized
    # term shape; s tracks the Poisson(y) term at the current index.
    if k_lo == 0:
        s = math.exp(-y) if y < 745.0 else 0.0
        g = s
    else:
        s = _exp_poisson_log(y, k_lo)
        g = _poisson_cdf(y, k_lo)
    total = 0.0
    for k in range(k_lo, k_hi + 1):
        total += w * g
        w *= x / (k + 1)
        s *= y / (k + 1)
        g += s
        if k > x and w < 1e-18:
            break
    if total < 0.0:
        return 0.0
    return min(total, 1.0)


def _exp_poisson_log(mean: float, k: int) -> float:
    """Poisson pmf at k via the log form, safe for large means."""
    return math.exp(-mean + k * math.log(mean) - math.lgamma(k + 1.0))


def _poisson_cdf(mean: float, k: int) -> float:
    """P[Poisson(mean) <= k] by direct summation of log-initialized terms.

    Only called for k within the series window of the mean, where the
    retained terms are representable; the far-left tail underflows to
    zero harmlessly.
    """
    j_lo = max(0, int(mean - 12.0 * math.sqrt(mean) - 30.0))
    if j_lo > k:
        j_lo = k
    t = _exp_poisson_log(mean, j_lo)
    total = t
    for j in range(j_lo, k):
        t *= mean / (j + 1)
        total += t
    return total


def detection_probability(
    d: DetectionParams, *, roc_variant: RocVariant = RocVariant.LINEAR_DENOMINATOR
) -> float:
    """Detection probability for the false-alarm point in ``d``.

    Maps (rho, N, p_fa) through Q1(rho*sqrt(2N)/(1-rho^2),
    sqrt(-2 ln p_fa)/(1-rho^2)); at rho = 0 this collapses to the chance
    line P_D = p_fa exactly.  ``roc_variant`` selects the denominator
    placement, see :class:`RocVariant`.
    """
    if not isinstance(roc_variant, RocVariant):
        raise ValueError(f"unknown roc_variant: {roc_variant!r}")
    if d.p_fa == 1.0:
        return 1.0
    denom = 1.0 - d.rho * d.rho
    if roc_variant is RocVariant.SQRT_DENOMINATOR:
        denom = math.sqrt(denom)
    a = d.rho * math.sqrt(2.0 * d.n_channels) / denom
    b = math.sqrt(-2.0 * math.log(d.p_fa)) / denom
    return marcum_q1(a, b)


def roc_curve(
    rho: float,
    n_channels: int,
    p_fa_grid: Sequence[float],
    *,
    rho0: float = 1.0,
    roc_variant: RocVariant = RocVariant.LINEAR_DENOMINATOR,
) -> RocCurve:
    """Evaluate the ROC on a strictly increasing p_fa grid in (0, 1].

    The resulting p_d column is non-decreasing because the mapping is
    monotone in p_fa for fixed (rho, N).
    """
    grid = [float(p) for p in p_fa_grid]
    if not grid:
        raise ValueError("p_fa grid is empty")
    points = []
    for p_fa in grid:
        d = DetectionParams(rho=rho, n_channels=n_channels, p_fa=p_fa, rho0=rho0)
        points.append((p_fa, detection_probability(d, roc_variant=roc_variant)))
    return RocCurve(points=tuple(points))
