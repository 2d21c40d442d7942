"""Covariance structure of the two-mode squeezed state."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtms_radar.quantum_gaussian import (
    QuadCovariance,
    QuadratureOrdering,
    SqueezeParams,
    bogoliubov_matrix,
    covariance_closed_form,
    covariance_via_symplectic,
    pearson_rho,
    reorder,
    symplectic_factors,
    symplectic_form,
)

# tools/oracles/hyperbolic_reference.py
HYPERBOLIC_GOLD = {
    0.1: (1.020066755619076, 0.201336002541094, 0.197375320224904),
    0.3: (1.1854652182422676, 0.6366535821482412, 0.5370495669980353),
    0.5: (1.5430806348152437, 1.1752011936438014, 0.7615941559557649),
    1.0: (3.7621956910836314, 3.6268604078470186, 0.9640275800758169),
    2.0: (27.308232836016487, 27.289917197127753, 0.999329299739067),
    3.0: (201.7156361224559, 201.71315737027922, 0.9999877116507956),
}

# r values stay within [0, 3]: double precision runs out of headroom for
# the det = 1 identity beyond that (eigenvalue spread ~ e^{4r}).
r_values = st.floats(min_value=0.0, max_value=3.0, allow_nan=False)
phi_values = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


def test_bogoliubov_structure():
    m = bogoliubov_matrix(SqueezeParams(r=0.7, phi=0.3)).m
    ch = math.cosh(0.7)
    sh = math.sinh(0.7)
    assert m[0, 0] == m[1, 1] == m[2, 2] == m[3, 3] == pytest.approx(ch, rel=1e-15)
    assert m[0, 3] == pytest.approx(sh * np.exp(-0.3j), rel=1e-15)
    assert m[1, 2] == pytest.approx(sh * np.exp(+0.3j), rel=1e-15)
    assert m[2, 1] == pytest.approx(sh * np.exp(-0.3j), rel=1e-15)
    assert m[3, 0] == pytest.approx(sh * np.exp(+0.3j), rel=1e-15)
    zero_mask = np.ones((4, 4), dtype=bool)
    for idx in ((0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (1, 2), (2, 1), (3, 0)):
        zero_mask[idx] = False
    assert np.all(m[zero_mask] == 0.0)


def test_bogoliubov_zero_squeezing_is_identity():
    m = bogoliubov_matrix(SqueezeParams(r=0.0, phi=0.0)).m
    assert np.array_equal(m, np.eye(4, dtype=complex))


@given(r=st.floats(min_value=0.0, max_value=5.0, allow_nan=False), phi=phi_values)
@settings(max_examples=200)
def test_bogoliubov_inverse_is_negated_squeezing(r, phi):
    from qtms_radar.quantum_gaussian import _bogoliubov_unchecked

    m = _bogoliubov_unchecked(r, phi).m
    m_inv = _bogoliubov_unchecked(-r, phi).m
    assert np.max(np.abs(m @ m_inv - np.eye(4))) < 1e-10 * math.cosh(r) ** 2


def test_squeeze_params_validation():
    with pytest.raises(ValueError):
        SqueezeParams(r=-0.1, phi=0.0)
    with pytest.raises(ValueError):
        SqueezeParams(r=math.nan, phi=0.0)
    with pytest.raises(ValueError):
        SqueezeParams(r=0.1, phi=math.inf)
    assert SqueezeParams(r=0.1, phi=2 * math.pi + 0.25).phi == pytest.approx(0.25)


@given(r=r_values)
@settings(max_examples=100)
def test_symplectic_factor_preserves_form(r):
    f = symplectic_factors(r)
    j = symplectic_form()
    assert np.max(np.abs(f.l @ j @ f.l.T - j)) < 1e-12 * math.cosh(2 * r)


def test_symplectic_factor_shapes_and_diagonal():
    f = symplectic_factors(0.9)
    d = np.diag(f.d)
    assert d == pytest.approx(
        [math.exp(-0.9), math.exp(0.9), math.exp(0.9), math.exp(-0.9)]
    )
    assert np.allclose(f.h @ f.h.T, np.eye(4), atol=1e-15)


@pytest.mark.parametrize("r", [0.0, 0.1, 0.5, 1.0, 2.0, 3.0])
def test_product_form_matches_closed_form(r):
    a = reorder(covariance_via_symplectic(r), QuadratureOrdering.XS_PS_XI_PI)
    b = reorder(
        covariance_closed_form(SqueezeParams(r=r, phi=0.0)),
        QuadratureOrdering.XS_PS_XI_PI,
    )
    assert np.max(np.abs(a.c - b.c)) < 1e-12


@pytest.mark.parametrize("r", sorted(HYPERBOLIC_GOLD))
def test_closed_form_entries_against_goldens(r):
    ch, sh, _ = HYPERBOLIC_GOLD[r]
    c = covariance_closed_form(SqueezeParams(r=r, phi=0.0)).c
    assert np.diag(c) == pytest.approx([ch, ch, ch, ch], rel=1e-14)
    assert c[0, 2] == pytest.approx(sh, rel=1e-14)
    assert c[1, 3] == pytest.approx(-sh, rel=1e-14)
    assert c[0, 1] == c[2, 3] == 0.0


def test_closed_form_phase_rotates_cross_block():
    phi = 0.6
    c = covariance_closed_form(SqueezeParams(r=0.8, phi=phi)).c
    sh = math.sinh(1.6)
    assert c[0, 2] == pytest.approx(sh * math.cos(phi), rel=1e-14)
    assert c[0, 3] == pytest.approx(sh * math.sin(phi), rel=1e-14)
    assert c[1, 2] == pytest.approx(sh * math.sin(phi), rel=1e-14)
    assert c[1, 3] == pytest.approx(-sh * math.cos(phi), rel=1e-14)


@given(r=r_values)
@settings(max_examples=100)
def test_covariance_det_one(r):
    c = covariance_closed_form(SqueezeParams(r=r, phi=0.0)).c
    assert abs(np.linalg.det(c) - 1.0) < 1e-9 * max(1.0, np.linalg.det(c))


@pytest.mark.parametrize("r", sorted(HYPERBOLIC_GOLD))
def test_pearson_matches_goldens(r):
    assert pearson_rho(r) == pytest.approx(HYPERBOLIC_GOLD[r][2], rel=1e-14)


@given(r=st.floats(min_value=0.0, max_value=20.0, allow_nan=False))
@settings(max_examples=200)
def test_pearson_is_sinh_cosh_ratio(r):
    assert abs(pearson_rho(r) - math.sinh(2 * r) / math.cosh(2 * r)) <= 1e-14


def test_pearson_monotone_and_bounded():
    grid = np.linspace(0.0, 6.0, 200)
    vals = [pearson_rho(float(r)) for r in grid]
    assert vals[0] == 0.0
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1.0


def test_pearson_rejects_negative():
    with pytest.raises(ValueError):
        pearson_rho(-0.2)


def test_reorder_round_trip_is_exact():
    c = covariance_closed_form(SqueezeParams(r=1.1, phi=0.4))
    out = reorder(
        reorder(c, QuadratureOrdering.X1_X2_P1_P2), QuadratureOrdering.CLOSED_FORM
    )
    assert np.array_equal(out.c, c.c)
    assert out.ordering is QuadratureOrdering.CLOSED_FORM


def test_reorder_moves_entries_to_canonical_slots():
    c = covariance_closed_form(SqueezeParams(r=0.8, phi=0.0))
    g = reorder(c, QuadratureOrdering.X1_X2_P1_P2)
    # canonical axes (x_s, p_s, x_i, p_i) -> grouped axes (x_s, x_i, p_s, p_i)
    assert g.c[0, 1] == c.c[0, 2]
    assert g.c[2, 3] == c.c[1, 3]


def test_quad_covariance_validation():
    with pytest.raises(ValueError):
        QuadCovariance(c=np.eye(3), ordering=QuadratureOrdering.XS_PS_XI_PI)
    lopsided = np.eye(4)
    lopsided[0, 1] = 0.5
    with pytest.raises(ValueError):
        QuadCovariance(c=lopsided, ordering=QuadratureOrdering.XS_PS_XI_PI)
    with pytest.raises(ValueError):
        QuadCovariance(c=np.diag([2.0, 1.0, 1.0, 1.0]), ordering=QuadratureOrdering.XS_PS_XI_PI)
    with pytest.raises(ValueError):
        QuadCovariance(c=-np.eye(4), ordering=QuadratureOrdering.XS_PS_XI_PI)


def test_symplectic_product_tagged_closed_form():
    assert covariance_via_symplectic(0.5).ordering is QuadratureOrdering.CLOSED_FORM
