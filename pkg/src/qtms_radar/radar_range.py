"""Fourth-root range equation for the quantum radar and its inverse.

max_range solves R = [G A_e sigma P_s / ((4 pi)^2 P_n SNR_min)]^{1/4};
snr_at_range inverts it for range sweeps.  Everything here is linear and
SI; decibel handling lives in the scenario layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class RangeParams:
    """Inputs of the range equation, all linear/SI and positive.

    snr_min is optional because the inverse direction supplies its own
    SNR; wavelength is optional because the equation itself only needs
    the effective area (the scenario layer derives one from the other
    when the area is not given directly).
    """

    antenna_gain: float
    effective_area: float
    rcs: float
    p_signal: float
    p_noise: float
    snr_min: float | None = None
    wavelength: float | None = None

    def __post_init__(self) -> None:
        required = {
            "antenna_gain": self.antenna_gain,
            "effective_area": self.effective_area,
            "rcs": self.rcs,
            "p_signal": self.p_signal,
            "p_noise": self.p_noise,
        }
        for name, v in required.items():
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be finite and > 0, got {v}")
        for name in ("snr_min", "wavelength"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be finite and > 0 when given, got {v}")


def effective_area(gain_linear: float, wavelength: float) -> float:
    """Antenna effective area G lambda^2 / (4 pi) in m^2."""
    if not gain_linear > 0.0:
        raise ValueError(f"gain must be > 0, got {gain_linear}")
    if not wavelength > 0.0:
        raise ValueError(f"wavelength must be > 0, got {wavelength}")
    return gain_linear * wavelength * wavelength / _FOUR_PI


def max_range(p: RangeParams) -> float:
    """Maximum detection range in meters at p.snr_min."""
    if p.snr_min is None:
        raise ValueError("max_range needs snr_min set on the RangeParams")
    ratio = (
        p.antenna_gain
        * p.effective_area
        * p.rcs
        * p.p_signal
        / (_FOUR_PI * _FOUR_PI * p.p_noise * p.snr_min)
    )
    return ratio**0.25


def snr_at_range(p: RangeParams, range_m: float) -> float:
    """Linear SNR available at a given range; inverse of :func:`max_range`.

    Ignores any snr_min on ``p``: max_range(replace(p, snr_min=result))
    reproduces range_m to 1e-9 relative.
    """
    if not range_m > 0.0:
        raise ValueError(f"range must be > 0, got {range_m}")
    r4 = range_m**4
    return (
        p.antenna_gain
        * p.effective_area
        * p.rcs
        * p.p_signal
        / (_FOUR_PI * _FOUR_PI * p.p_noise * r4)
    )
