"""Scenario presets, unit conversions, and the scenario file format."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtms_radar.receiver_model import tmsv_cross_corr
from qtms_radar.scenarios import (
    Scenario,
    ScenarioFormatError,
    db_to_linear,
    dbm_to_watts,
    derive_gain_set,
    derive_illumination,
    derive_noise_set,
    derive_range_params,
    derive_receiver_inputs,
    derived_effective_area,
    linear_to_db,
    parse_scenario,
    preset,
    preset_names,
    resolved_values,
    scenario_from_source,
    thermal_photons,
    watts_to_dbm,
    write_scenario,
)

# tools/oracles/planck_reference.py
PLANCK_GOLD = {
    (5.31e9, 4.0): 15.201443736350281,
    (5.31e9, 290.0): 1137.4698558597715,
    (10.09e9, 4.0): 7.770390850702262,
    (10.09e9, 290.0): 598.3722447763276,
    (6.8e9, 4.0): 11.763632951954923,
    (6.8e9, 290.0): 888.1206152143398,
    (6.1445e9, 4.0): 13.070546342404485,
    (6.1445e9, 290.0): 982.9193289022437,
    (7.5376e9, 4.0): 10.564964339533482,
    (7.5376e9, 290.0): 801.1637032082198,
}


def test_db_conversions():
    assert db_to_linear(0.0) == 1.0
    assert db_to_linear(10.0) == pytest.approx(10.0, rel=1e-15)
    assert dbm_to_watts(0.0) == pytest.approx(1e-3, rel=1e-15)
    assert dbm_to_watts(30.0) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(ValueError):
        linear_to_db(0.0)
    with pytest.raises(ValueError):
        watts_to_dbm(-1.0)


@given(x=st.floats(min_value=-200.0, max_value=200.0))
@settings(max_examples=200)
def test_db_round_trip(x):
    assert linear_to_db(db_to_linear(x)) == pytest.approx(x, abs=1e-12)
    assert watts_to_dbm(dbm_to_watts(x)) == pytest.approx(x, abs=1e-12)


@pytest.mark.parametrize(("f", "t"), sorted(PLANCK_GOLD))
def test_thermal_photons_against_goldens(f, t):
    assert thermal_photons(f, t) == pytest.approx(PLANCK_GOLD[(f, t)], rel=1e-13)


def test_thermal_photons_limits():
    assert thermal_photons(5e9, 0.0) == 0.0
    # Rayleigh-Jeans regime: n ~ kT/hf for hf << kT
    f, t = 1e9, 300.0
    approx = 1.380649e-23 * t / (6.62607015e-34 * f)
    assert thermal_photons(f, t) == pytest.approx(approx - 0.5, rel=1e-2)
    assert thermal_photons(1e15, 0.1) == 0.0  # optical at cryogenic: empty
    with pytest.raises(ValueError):
        thermal_photons(-1.0, 4.0)
    with pytest.raises(ValueError):
        thermal_photons(1e9, -4.0)


def test_preset_names_and_case():
    assert preset_names() == ("EJPA", "JRM", "JPA")
    assert preset("ejpa") == preset("EJPA")
    with pytest.raises(ValueError):
        preset("XYZ")


def test_ejpa_preset_table_values():
    s = preset("EJPA")
    assert s.antenna_gain_db == 6.4
    assert s.effective_area_m2 == 8.8e-5
    assert s.bandwidth_hz == 300e6
    assert s.jpa_gain_db == 20.0
    assert s.hemt_gain_db == 38.0
    assert s.signal_gain_db == 83.98
    assert s.detection_gain_db == 16.82
    assert s.amplifier_gain_db == 67.16
    assert s.pump_power_dbm == 5.0
    assert s.noise_power_dbm == -145.0
    assert s.pump_freq_hz == 10.62e9
    assert s.signal_freq_hz == 5.31e9
    assert s.idler_freq_hz == 5.31e9
    assert s.snr_db == -13.48
    assert s.range_m == 482.0
    assert s.n_s == 0.1
    assert s.provenance["snr_db"] == "table"
    assert s.provenance["tau_s"] == "default"
    assert s.provenance["eta_linear"] == "derived"


def test_jrm_and_jpa_presets_spot_values():
    jrm = preset("JRM")
    assert jrm.noise_power_dbm == 4.0  # published anomaly, kept verbatim
    assert jrm.effective_area_m2 is None
    assert jrm.pump_freq_hz == pytest.approx(jrm.signal_freq_hz + jrm.idler_freq_hz, rel=1e-9)
    jpa = preset("JPA")
    assert jpa.signal_gain_db == 96.0
    assert jpa.bandwidth_hz == 1e6
    assert jpa.pump_freq_hz == 13.6821e9


def test_mode_counts_from_calibrated_integration_times():
    assert derive_illumination(preset("EJPA")).m_modes == 300
    assert derive_illumination(preset("JRM")).m_modes == 50
    assert derive_illumination(preset("JPA")).m_modes == 42


def test_scenario_invariants():
    s = preset("EJPA")
    with pytest.raises(ValueError):
        Scenario(**{**_as_dict(s), "pump_freq_hz": 11e9})
    with pytest.raises(ValueError):
        Scenario(**{**_as_dict(s), "eta_linear": 1.5})
    with pytest.raises(ValueError):
        Scenario(**{**_as_dict(s), "tau_s": 0.0})
    with pytest.raises(ValueError):
        Scenario(**{**_as_dict(s), "rho0": 0.0})
    with pytest.raises(ValueError):
        Scenario(**{**_as_dict(s), "n_a_s": -1.0})


def _as_dict(s: Scenario) -> dict:
    from dataclasses import fields

    return {f.name: getattr(s, f.name) for f in fields(s) if f.name != "provenance"}


@pytest.mark.parametrize("name", ["EJPA", "JRM", "JPA"])
def test_write_parse_round_trip(name):
    s = preset(name)
    text = write_scenario(s)
    back = parse_scenario(text)
    assert back == s
    assert write_scenario(back) == text  # write o parse o write is stable


def test_parse_reports_unknown_key_with_line():
    text = write_scenario(preset("EJPA")) + "mystery_knob = 3\n"
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario(text)
    (msg,) = err.value.errors
    assert "unknown key" in msg and "mystery_knob" in msg
    # header comment + 26 populated keys put the appended line at 28
    assert msg.startswith("line 28:")


def test_parse_reports_unit_suffix_mismatch():
    text = write_scenario(preset("EJPA")).replace("bandwidth_hz", "bandwidth_khz")
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario(text)
    joined = "\n".join(err.value.errors)
    assert "unit-suffix mismatch" in joined
    assert "bandwidth_hz" in joined  # names the correct key
    assert "missing required key 'bandwidth_hz'" in joined


def test_parse_reports_duplicate_and_bad_number():
    # n_a_s is a valid override the EJPA dump leaves unset, so its bad
    # value is reported as such rather than shadowed by a duplicate error
    text = write_scenario(preset("EJPA")) + "n_s = 0.2\nn_a_s = twelve\n"
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario(text)
    joined = "\n".join(err.value.errors)
    assert "duplicate key 'n_s'" in joined
    assert "needs a numeric value" in joined


def test_parse_reports_missing_required_key():
    text = "\n".join(
        line for line in write_scenario(preset("EJPA")).splitlines()
        if not line.startswith("bandwidth_hz")
    )
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario(text)
    assert any("missing required key 'bandwidth_hz'" in e for e in err.value.errors)


def test_parse_reports_invariant_violation_with_line():
    text = write_scenario(preset("EJPA")).replace(
        "pump_freq_hz = 10620000000", "pump_freq_hz = 99620000000"
    )
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario(text)
    (msg,) = err.value.errors
    assert "pump_freq_hz" in msg and "line" in msg


def test_parse_eta_db_alternative():
    text = write_scenario(preset("EJPA")).replace("eta_linear = 1", "eta_db = -3")
    s = parse_scenario(text)
    assert s.eta_linear == pytest.approx(10 ** -0.3, rel=1e-12)
    assert s.provenance["eta_linear"] == "derived"
    both = write_scenario(preset("EJPA")) + "eta_db = -3\n"
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario(both)
    assert "alternatives" in err.value.errors[0]
    positive = write_scenario(preset("EJPA")).replace("eta_linear = 1", "eta_db = 2")
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario(positive)
    assert "eta_db must be <= 0" in err.value.errors[0]


def test_parse_garbage_line():
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario("just some words\n")
    assert err.value.errors[0].startswith("line 1:")


def test_parse_collects_multiple_errors():
    text = "name = X\nbogus = 1\nrcs_m2 = z\n"
    with pytest.raises(ScenarioFormatError) as err:
        parse_scenario(text)
    assert len(err.value.errors) > 2


def test_derive_gain_set_consistency_gate():
    s = preset("EJPA")
    g = derive_gain_set(s)
    assert g.g_d_s == pytest.approx(db_to_linear(16.82), rel=1e-12)
    assert g.g_s_total == pytest.approx(g.g_d_s * g.g_a_s, rel=1e-12)
    assert g.g_i_total == g.g_s_total
    from dataclasses import replace

    bad = replace(s, signal_gain_db=90.0)
    with pytest.raises(ValueError, match="0.5 dB"):
        derive_gain_set(bad)


def test_derive_noise_set_defaults_and_overrides():
    s = preset("EJPA")
    n = derive_noise_set(s)
    assert n.n_a_s == pytest.approx(PLANCK_GOLD[(5.31e9, 4.0)], rel=1e-13)
    assert n.n_d_s == pytest.approx(PLANCK_GOLD[(5.31e9, 290.0)], rel=1e-13)
    assert n.n_e == pytest.approx(PLANCK_GOLD[(5.31e9, 290.0)], rel=1e-13)
    g = derive_gain_set(s)
    expected_add = (
        n.n_a_i * (g.g_a_i - 1.0) / g.g_a_i + n.n_d_i * (g.g_d_i - 1.0) / g.g_i_total
    )
    assert n.n_add_i == pytest.approx(expected_add, rel=1e-12)
    from dataclasses import replace

    s2 = replace(s, n_add_i=0.25, n_e=7.0)
    n2 = derive_noise_set(s2)
    assert n2.n_add_i == 0.25
    assert n2.n_e == 7.0


def test_derive_illumination_defaults():
    s = preset("EJPA")
    i = derive_illumination(s)
    assert i.n_s == i.n_i == 0.1
    assert i.cross_corr == pytest.approx(tmsv_cross_corr(0.1), rel=1e-15)
    i2 = derive_illumination(s, n_s=0.37)
    assert i2.n_s == 0.37
    from dataclasses import replace

    with pytest.raises(ValueError, match="below one mode"):
        derive_illumination(replace(s, tau_s=1e-12))


def test_derived_effective_area():
    assert derived_effective_area(preset("EJPA")) == 8.8e-5  # verbatim
    jrm = preset("JRM")
    lam = 299792458.0 / jrm.signal_freq_hz
    expected = db_to_linear(15.0) * lam * lam / (4 * math.pi)
    assert derived_effective_area(jrm) == pytest.approx(expected, rel=1e-12)


def test_derive_range_params_uses_pump_power():
    p = derive_range_params(preset("EJPA"))
    assert p.p_signal == pytest.approx(dbm_to_watts(5.0), rel=1e-12)
    assert p.p_noise == pytest.approx(dbm_to_watts(-145.0), rel=1e-12)
    assert p.snr_min == pytest.approx(db_to_linear(-13.48), rel=1e-12)


def test_resolved_values_provenance_rows():
    rows = {key: (value, label) for key, value, label in resolved_values(preset("EJPA"))}
    assert rows["snr_db"] == ("-13.48", "table")
    assert rows["tau_s"] == ("1e-06", "default")
    assert rows["n_a_s"][1] == "derived"
    jrm_rows = {k: (v, p) for k, v, p in resolved_values(preset("JRM"))}
    assert jrm_rows["effective_area_m2"][1] == "derived"


def test_scenario_from_source(tmp_path):
    assert scenario_from_source("jpa") == preset("JPA")
    f = tmp_path / "s.scn"
    f.write_text(write_scenario(preset("JRM")), encoding="utf-8")
    assert scenario_from_source(str(f)) == preset("JRM")
    with pytest.raises(ValueError, match="neither a preset"):
        scenario_from_source("nope.scn")


def test_receiver_inputs_bundle():
    g, n, i = derive_receiver_inputs(preset("JPA"), n_s=0.5)
    assert i.n_s == 0.5
    assert g.g_s_total > 1.0
    assert n.n_v == 0.0
