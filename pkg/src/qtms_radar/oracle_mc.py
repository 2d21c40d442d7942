"""Monte Carlo validators for the analytic results.

Two independent checks: sample the four-quadrature Gaussian state and
compare the empirical Pearson correlation with the closed form, and
sample the noncentral two-degree exceedance probability behind the
detection curve, Q1(a, b) = P((a + Z1)^2 + Z2^2 >= b^2) with Z1, Z2
standard normal.

All randomness comes from the package's counter-based generator (see
``_kernels``), so a (seed, parameters) pair fixes the sample stream
exactly; reports are reproducible bit for bit on a given backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .quantum_gaussian import QuadCovariance

_SEED_LIMIT = 1 << 64


@dataclass(frozen=True)
class RngSeed:
    """Seed for the counter-based generator: an unsigned 64-bit value."""

    seed: int

    def __post_init__(self) -> None:
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ValueError(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= self.seed < _SEED_LIMIT:
            raise ValueError(f"seed must be in [0, 2^64), got {self.seed}")


@dataclass(frozen=True)
class McReport:
    """One Monte Carlo comparison: estimate vs target with its z-score.

    z_score = (estimate - target) / std_error.  A zero standard error
    (degenerate estimator) gives z = 0 on exact agreement and a signed
    infinity otherwise.
    """

    estimate: float
    std_error: float
    n_samples: int
    target: float
    z_score: float

    def __post_init__(self) -> None:
        if self.n_samples < 1000:
            raise ValueError(f"n_samples must be >= 1000, got {self.n_samples}")
        if not self.std_error >= 0.0:
            raise ValueError(f"std_error must be >= 0, got {self.std_error}")
        expected = _z_score(self.estimate, self.target, self.std_error)
        if not (expected == self.z_score or (math.isnan(expected) and math.isnan(self.z_score))):
            raise ValueError(
                f"z_score {self.z_score} does not match (estimate - target)/std_error = {expected}"
            )


def _z_score(estimate: float, target: float, std_error: float) -> float:
    if std_error == 0.0:
        if estimate == target:
            return 0.0
        return math.copysign(math.inf, estimate - target)
    return (estimate - target) / std_error


def _report(estimate: float, target: float, std_error: float, n: int) -> McReport:
    return McReport(
        estimate=float(estimate),
        std_error=float(std_error),
        n_samples=int(n),
        target=float(target),
        z_score=_z_score(float(estimate), float(target), float(std_error)),
    )


def _as_covariance_matrix(c: QuadCovariance | np.ndarray) -> np.ndarray:
    if isinstance(c, QuadCovariance):
        return np.array(c.c, dtype=float)
    m = np.array(c, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"covariance must be 4x4, got shape {m.shape}")
    return m


def sample_gaussian(c: QuadCovariance | np.ndarray, n: int, seed: RngSeed | int) -> np.ndarray:
    """n zero-mean draws from N(0, c) as an (n, 4) array.

    Sample i consumes generator pairs 2i and 2i+1 (four normals), so the
    stream for fixed seed is independent of chunking and shardable by
    sample index.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s = seed.seed if isinstance(seed, RngSeed) else RngSeed(int(seed)).seed
    m = _as_covariance_matrix(c)
    try:
        lower = np.linalg.cholesky(m)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"covariance is not positive definite: {exc}") from exc
    z = _kernels.normal_pairs(s, 0, 2 * int(n)).reshape(int(n), 4)
    return z @ lower.T


def empirical_pearson(samples: np.ndarray, pair: tuple[int, int], target: float) -> McReport:
    """Sample Pearson correlation of two columns, scored against a target.

    The standard error uses the large-n normal approximation
    (1 - rho_hat^2)/sqrt(n).
    """
    a = np.asarray(samples, dtype=float)
    if a.ndim != 2 or a.shape[0] < 1000:
        raise ValueError(f"need a 2-d sample matrix with >= 1000 rows, got shape {a.shape}")
    i, j = pair
    x = a[:, i]
    y = a[:, j]
    n = a.shape[0]
    x = x - x.mean()
    y = y - y.mean()
    sx = math.sqrt(float(x @ x))
    sy = math.sqrt(float(y @ y))
    if sx == 0.0 or sy == 0.0:
        raise ValueError(f"column pair {pair} has a zero-variance column")
    rho_hat = float(x @ y) / (sx * sy)
    # rounding can push a perfect correlation a couple of ulp past 1,
    # which would make the standard error negative
    rho_hat = max(-1.0, min(1.0, rho_hat))
    std_error = (1.0 - rho_hat * rho_hat) / math.sqrt(n)
    return _report(rho_hat, target, std_error, n)


def marcum_oracle(a: float, b: float, n: int, seed: RngSeed | int) -> McReport:
    """Bernoulli estimate of Q1(a, b), scored against the series evaluation.

    Trial k tests (a + Z1)^2 + Z2^2 >= b^2 using generator pair k.  The
    standard error is the binomial one, sqrt(p(1-p)/n).
    """
    if n < 100_000:
        raise ValueError(f"n must be >= 1e5 for the Marcum oracle, got {n}")
    if not (a >= 0.0 and b >= 0.0):
        raise ValueError(f"noncentrality and threshold must be >= 0, got a={a}, b={b}")
    from .detection import marcum_q1

    s = seed.seed if isinstance(seed, RngSeed) else RngSeed(int(seed)).seed
    hits = _kernels.exceed_count(s, 0, int(n), float(a), float(b))
    p_hat = hits / n
    std_error = math.sqrt(p_hat * (1.0 - p_hat) / n)
    return _report(p_hat, marcum_q1(a, b), std_error, n)
