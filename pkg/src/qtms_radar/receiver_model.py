"""Photon-counting receiver moments and the quantum SNR.

The receiver mixes the (possibly returned) signal mode with the retained
idler on a balanced splitter and counts photons at both output ports.
This module evaluates the means, intensities and variances of those
counts under the two hypotheses, and combines them into the M-mode
quantum signal-to-noise ratio

    snr = 4 M (|d1| - |d0|)^2 / (sqrt(v0) + sqrt(v1))^2,

where d is the between-port mean difference and v the count variance
under each hypothesis.  All gains here are linear; decibel conversion is
the scenario layer's job.

Two readings of the target-absent moments need a word.  The count means
place the idler terms outside the signal bracket, which makes the pair
exactly the eta -> 0, zero-correlation limit of the target-present means
(the continuity the tests assert).  The target-absent intensity, as
published, carries its idler added-noise term without the idler system
gain; ``h0_intensity_gain_fix=True`` restores the gain for consistency
with the count means, and the default leaves the published form alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Hypothesis(Enum):
    """Target absent (H0) or present (H1)."""

    H0 = "h0"
    H1 = "h1"


@dataclass(frozen=True)
class GainSet:
    """Linear system gains, split into detection and amplification stages.

    Each total must equal its stage product: g_s_total = g_d_s * g_a_s and
    g_i_total = g_d_i * g_a_i, both to 1e-9 relative.  All gains >= 1.
    """

    g_s_total: float
    g_i_total: float
    g_d_s: float
    g_a_s: float
    g_d_i: float
    g_a_i: float

    def __post_init__(self) -> None:
        for name in ("g_s_total", "g_i_total", "g_d_s", "g_a_s", "g_d_i", "g_a_i"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 1.0):
                raise ValueError(f"gain {name} must be finite and >= 1 (linear), got {v}")
        for total, d, a in (
            ("g_s_total", "g_d_s", "g_a_s"),
            ("g_i_total", "g_d_i", "g_a_i"),
        ):
            t = getattr(self, total)
            prod = getattr(self, d) * getattr(self, a)
            if abs(t - prod) > 1e-9 * max(t, prod):
                raise ValueError(
                    f"{total} = {t} is not the product {d} * {a} = {prod} (1e-9 relative)"
                )


@dataclass(frozen=True)
class NoiseSet:
    """Mean noise photon numbers entering the receiver chain.

    n_a_s / n_a_i: amplification noise (cryogenic stage), n_d_s / n_d_i:
    detection noise (room temperature stage), n_e: environmental thermal
    photons, n_add_i: idler-channel added noise, n_v: vacuum-mode count
    contribution.  All non-negative.
    """

    n_a_s: float = 0.0
    n_a_i: float = 0.0
    n_d_s: float = 0.0
    n_d_i: float = 0.0
    n_e: float = 0.0
    n_add_i: float = 0.0
    n_v: float = 0.0

    def __post_init__(self) -> None:
        for name in ("n_a_s", "n_a_i", "n_d_s", "n_d_i", "n_e", "n_add_i", "n_v"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise ValueError(f"noise {name} must be finite and >= 0, got {v}")


@dataclass(frozen=True)
class IlluminationParams:
    """Per-mode photon numbers and the channel the signal traverses.

    cross_corr is the signal-idler amplitude correlation <a_s a_I>; for a
    two-mode squeezed vacuum it is sqrt(n_s (n_s + 1)), the physicality
    ceiling enforced here.  m_modes is the integrated mode count M.
    """

    n_s: float
    n_i: float
    eta: float
    m_modes: int
    cross_corr: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.n_s) and self.n_s >= 0.0):
            raise ValueError(f"n_s must be finite and >= 0, got {self.n_s}")
        if not (math.isfinite(self.n_i) and self.n_i >= 0.0):
            raise ValueError(f"n_i must be finite and >= 0, got {self.n_i}")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta must be in [0, 1], got {self.eta}")
        if self.m_modes < 1 or self.m_modes != int(self.m_modes):
            raise ValueError(f"m_modes must be an integer >= 1, got {self.m_modes}")
        ceiling = math.sqrt(self.n_s * (self.n_s + 1.0)) + 1e-12
        if not 0.0 <= self.cross_corr <= ceiling:
            raise ValueError(
                f"cross_corr must be in [0, sqrt(n_s(n_s+1))] = [0, {ceiling}], got {self.cross_corr}"
            )


def tmsv_cross_corr(n_s: float) -> float:
    """Two-mode squeezed vacuum correlation sqrt(n_s (n_s + 1))."""
    if not (math.isfinite(n_s) and n_s >= 0.0):
        raise ValueError(f"n_s must be finite and >= 0, got {n_s}")
    return math.sqrt(n_s * (n_s + 1.0))


@dataclass(frozen=True)
class ReceiverMoments:
    """The eight count moments of one receiver evaluation."""

    mean_plus_h1: float
    mean_minus_h1: float
    mean_plus_h0: float
    mean_minus_h0: float
    intensity_h1: float
    intensity_h0: float
    var_h1: float
    var_h0: float

    def __post_init__(self) -> None:
        for name in (
            "mean_plus_h1",
            "mean_minus_h1",
            "mean_plus_h0",
            "mean_minus_h0",
            "intensity_h1",
            "intensity_h0",
            "var_h1",
            "var_h0",
        ):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise ValueError(f"moment {name} must be finite and >= 0, got {v}")
        if self.mean_plus_h0 != self.mean_minus_h0:
            raise ValueError("target-absent port means must be identical")


def _signal_bracket_h1(g: GainSet, n: NoiseSet, i: IlluminationParams) -> float:
    """Signal-path terms common to the target-present mean and intensity."""
    return (
        g.g_s_total * i.eta * (i.n_s + 1.0)
        + g.g_s_total * i.eta * n.n_a_s * (g.g_a_s - 1.0) / g.g_a_s
        + g.g_s_total * (n.n_e + 1.0) * (1.0 - i.eta) / g.g_a_s
        + (g.g_d_s - 1.0) * n.n_d_s
    )


def _signal_bracket_h0(g: GainSet, n: NoiseSet) -> float:
    """Signal-path terms of the target-absent moments.

    Equals the eta -> 0 limit of the target-present bracket, using
    g_s_total / g_a_s = g_d_s.
    """
    return g.g_d_s * (n.n_e + 1.0) + n.n_d_s * g.g_d_s * (1.0 - 1.0 / g.g_d_s)


def _idler_terms(g: GainSet, n: NoiseSet, i: IlluminationParams) -> float:
    """Idler contribution to every count mean: (G_I N_I + G_I (n_add + 1)) / 2."""
    return 0.5 * g.g_i_total * i.n_i + 0.5 * g.g_i_total * (n.n_add_i + 1.0)


def mean_counts_h1(
    g: GainSet, n: NoiseSet, i: IlluminationParams
) -> tuple[float, float]:
    """Target-present port means (mean_plus, mean_minus).

    The ports differ only by the sign of the correlation transfer term
    sqrt(g_s g_i eta) * cross_corr / 2, so their difference recovers it
    exactly.  Raises if the minus port would go negative, which flags
    inconsistent gain/noise inputs rather than clamping them.
    """
    base = n.n_v + 0.5 * _signal_bracket_h1(g, n, i) + _idler_terms(g, n, i)
    delta = 0.5 * math.sqrt(g.g_s_total * g.g_i_total * i.eta) * i.cross_corr
    mean_minus = base - delta
    if mean_minus < 0.0:
        raise ValueError(
            f"negative minus-port mean ({mean_minus}): gain/noise inputs are inconsistent"
        )
    return base + delta, mean_minus


def mean_counts_h0(
    g: GainSet, n: NoiseSet, i: IlluminationParams
) -> tuple[float, float]:
    """Target-absent port means; the pair is identical by construction.

    The idler photon number rides in ``i`` because the idler is retained
    whether or not a target exists.
    """
    mean = n.n_v + 0.5 * _signal_bracket_h0(g, n) + _idler_terms(g, n, i)
    return mean, mean


def intensity(
    g: GainSet,
    n: NoiseSet,
    i: IlluminationParams,
    hypothesis: Hypothesis,
    *,
    h0_intensity_gain_fix: bool = False,
) -> float:
    """Returned-mode intensity <u+ u> under the chosen hypothesis.

    The target-present intensity carries only signal-path terms; the
    target-absent one also carries idler terms, whose added-noise piece
    is gainless as published unless ``h0_intensity_gain_fix`` is set.
    """
    if hypothesis is Hypothesis.H1:
        return 2.0 * n.n_v + _signal_bracket_h1(g, n, i)
    if hypothesis is Hypothesis.H0:
        add = g.g_i_total * (n.n_add_i + 1.0) if h0_intensity_gain_fix else (n.n_add_i + 1.0)
        return (
            2.0 * n.n_v
            + _signal_bracket_h0(g, n)
            + 0.5 * g.g_i_total * i.n_i
            + 0.5 * add
        )
    raise ValueError(f"unknown hypothesis: {hypothesis!r}")


def variance_from_counts(
    mean_plus: float, mean_minus: float, intensity_value: float, idler_intensity: float
) -> float:
    """Count-difference variance from the port means and intensities.

    sum of m(m+1) over both ports, minus (intensity - idler_intensity)^2/2.
    A negative result is raised, not clamped: it marks a parameter regime
    where the published expression breaks down.
    """
    v = (
        mean_plus * (mean_plus + 1.0)
        + mean_minus * (mean_minus + 1.0)
        - 0.5 * (intensity_value - idler_intensity) ** 2
    )
    if v < 0.0:
        raise ValueError(f"negative count variance ({v}); the moment formula broke down here")
    return v


def variance(
    g: GainSet,
    n: NoiseSet,
    i: IlluminationParams,
    hypothesis: Hypothesis,
    *,
    h0_intensity_gain_fix: bool = False,
) -> float:
    """Count-difference variance under the chosen hypothesis."""
    if hypothesis is Hypothesis.H1:
        mp, mm = mean_counts_h1(g, n, i)
    elif hypothesis is Hypothesis.H0:
        mp, mm = mean_counts_h0(g, n, i)
    else:
        raise ValueError(f"unknown hypothesis: {hypothesis!r}")
    u = intensity(g, n, i, hypothesis, h0_intensity_gain_fix=h0_intensity_gain_fix)
    return variance_from_counts(mp, mm, u, i.n_i)


def receiver_moments(
    g: GainSet,
    n: NoiseSet,
    i: IlluminationParams,
    *,
    h0_intensity_gain_fix: bool = False,
) -> ReceiverMoments:
    """All eight count moments for one parameter set."""
    mp1, mm1 = mean_counts_h1(g, n, i)
    mp0, mm0 = mean_counts_h0(g, n, i)
    u1 = intensity(g, n, i, Hypothesis.H1, h0_intensity_gain_fix=h0_intensity_gain_fix)
    u0 = intensity(g, n, i, Hypothesis.H0, h0_intensity_gain_fix=h0_intensity_gain_fix)
    return ReceiverMoments(
        mean_plus_h1=mp1,
        mean_minus_h1=mm1,
        mean_plus_h0=mp0,
        mean_minus_h0=mm0,
        intensity_h1=u1,
        intensity_h0=u0,
        var_h1=variance_from_counts(mp1, mm1, u1, i.n_i),
        var_h0=variance_from_counts(mp0, mm0, u0, i.n_i),
    )


def snr_quantum(
    g: GainSet,
    n: NoiseSet,
    i: IlluminationParams,
    *,
    h0_intensity_gain_fix: bool = False,
) -> float:
    """M-mode quantum SNR (linear).

    4 M (|d1| - |d0|)^2 / (sqrt(v0) + sqrt(v1))^2 with d the between-port
    mean difference under each hypothesis; d0 vanishes identically, so
    the numerator is driven by the correlation transfer term alone and
    the result is exactly linear in m_modes and zero at zero cross_corr.
    """
    m = receiver_moments(g, n, i, h0_intensity_gain_fix=h0_intensity_gain_fix)
    d1 = abs(m.mean_plus_h1 - m.mean_minus_h1)
    d0 = abs(m.mean_plus_h0 - m.mean_minus_h0)
    denom = (math.sqrt(m.var_h0) + math.sqrt(m.var_h1)) ** 2
    if denom == 0.0:
        raise ValueError("zero variance under both hypotheses; SNR is undefined here")
    # m_modes multiplies last so the result is linear in it to the bit.
    return i.m_modes * (4.0 * (d1 - d0) ** 2 / denom)
