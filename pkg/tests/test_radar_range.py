"""Range equation and its scaling laws."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtms_radar.radar_range import RangeParams, effective_area, max_range, snr_at_range
from qtms_radar.scenarios import derive_range_params, preset


def _params(**overrides):
    base = dict(
        antenna_gain=4.365158322401661,  # 6.4 dB
        effective_area=8.8e-5,
        rcs=1.0,
        p_signal=3.1622776601683795e-3,  # 5 dBm
        p_noise=3.1622776601683794e-18,  # -145 dBm
        snr_min=0.04487453899988902,  # -13.48 dB
        wavelength=0.05646092278719397,
    )
    base.update(overrides)
    return RangeParams(**base)


def test_headline_range_from_table_inputs():
    assert max_range(derive_range_params(preset("EJPA"))) == pytest.approx(482.5, abs=1.0)


def test_fourth_root_law_in_snr():
    r1 = max_range(_params())
    r2 = max_range(_params(snr_min=_params().snr_min * 16.0))
    assert r2 == pytest.approx(0.5 * r1, rel=1e-9)


def test_fourth_root_law_in_signal_power():
    r1 = max_range(_params())
    r2 = max_range(_params(p_signal=_params().p_signal * 16.0))
    assert r2 == pytest.approx(2.0 * r1, rel=1e-9)


def test_fourth_root_law_in_noise_power():
    r1 = max_range(_params())
    r2 = max_range(_params(p_noise=_params().p_noise * 16.0))
    assert r2 == pytest.approx(0.5 * r1, rel=1e-9)


@given(
    gain=st.floats(min_value=1.0, max_value=1e5),
    area=st.floats(min_value=1e-6, max_value=10.0),
    rcs=st.floats(min_value=1e-3, max_value=1e3),
    p_s=st.floats(min_value=1e-9, max_value=1e3),
    p_n=st.floats(min_value=1e-20, max_value=1e-3),
    snr=st.floats(min_value=1e-6, max_value=1e3),
)
@settings(max_examples=150)
def test_snr_at_max_range_recovers_threshold(gain, area, rcs, p_s, p_n, snr):
    p = RangeParams(
        antenna_gain=gain, effective_area=area, rcs=rcs,
        p_signal=p_s, p_noise=p_n, snr_min=snr, wavelength=None,
    )
    r = max_range(p)
    assert snr_at_range(p, r) == pytest.approx(snr, rel=1e-9)


def test_snr_at_range_inverse_fourth_power():
    p = _params()
    assert snr_at_range(p, 200.0) == pytest.approx(
        snr_at_range(p, 100.0) / 16.0, rel=1e-12
    )


def test_effective_area_formula():
    lam = 0.05646092278719397
    assert effective_area(4.365158322401661, lam) == pytest.approx(
        4.365158322401661 * lam * lam / (4.0 * math.pi), rel=1e-14
    )
    with pytest.raises(ValueError):
        effective_area(0.0, lam)


def test_params_validation():
    with pytest.raises(ValueError):
        _params(rcs=0.0)
    with pytest.raises(ValueError):
        _params(p_noise=-1e-18)
    with pytest.raises(ValueError):
        max_range(_params(snr_min=None))
