"""Two-mode squeezed vacuum covariance structure.

Builds the Bogoliubov matrix of the two-mode squeezing operation, its
position-momentum symplectic factorization, and the 4x4 quadrature
covariance matrix, both as a matrix product and in closed form.  Vacuum
quadrature variance is normalized to 1, so every covariance here has
diagonal cosh(2r) and determinant 1.

Quadrature orderings are explicit: every covariance carries an ordering
tag and conversions go through :func:`reorder` only.  The tags are

- ``XS_PS_XI_PI`` (canonical): (X_signal, P_signal, X_idler, P_idler).
- ``CLOSED_FORM``: the layout the closed-form constructor produces.  Its
  axes coincide with the canonical ones (identity permutation); the tag
  exists so that the conversion is still an explicit, auditable step.
- ``X1_X2_P1_P2``: both positions first, then both momenta.  This is the
  basis the symplectic factors act on.

A note on the product form: the factorization L = H d H^T acts on
(x1, x2, p1, p2), but the covariance product that reproduces the closed
form entrywise is the transpose-first one, H^T diag(e^{-2r}, e^{2r},
e^{2r}, e^{-2r}) H, and its entries land directly in the closed-form
layout.  The same-order product H diag H^T instead flips the sign of the
cross blocks and matches the closed form under no axis permutation; the
test suite demonstrates both.  ``covariance_via_symplectic`` therefore
returns the transpose-first product tagged ``CLOSED_FORM``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class QuadratureOrdering(Enum):
    """Axis conventions for 4x4 quadrature covariance matrices."""

    XS_PS_XI_PI = "xs_ps_xi_pi"
    CLOSED_FORM = "closed_form"
    X1_X2_P1_P2 = "x1_x2_p1_p2"


# For each tag, axis k of a canonically ordered matrix is found at
# _TO_CANONICAL[tag][k] in a matrix carrying that tag.
_TO_CANONICAL: dict[QuadratureOrdering, tuple[int, int, int, int]] = {
    QuadratureOrdering.XS_PS_XI_PI: (0, 1, 2, 3),
    QuadratureOrdering.CLOSED_FORM: (0, 1, 2, 3),
    QuadratureOrdering.X1_X2_P1_P2: (0, 2, 1, 3),
}

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SqueezeParams:
    """Squeezing amplitude r >= 0 and angle phi, normalized to [0, 2*pi)."""

    r: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.r) or self.r < 0.0:
            raise ValueError(f"squeezing amplitude r must be finite and >= 0, got {self.r}")
        if not math.isfinite(self.phi):
            raise ValueError(f"squeezing angle phi must be finite, got {self.phi}")
        object.__setattr__(self, "phi", self.phi % _TWO_PI)


@dataclass(frozen=True)
class BogoliubovMatrix:
    """4x4 complex matrix acting on the operator vector (a1+, a1, a2+, a2)."""

    m: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.m, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "m", m)


@dataclass(frozen=True)
class SymplecticFactors:
    """Orthogonal H, diagonal d and L = H d H^T on (x1, x2, p1, p2)."""

    h: np.ndarray
    d: np.ndarray
    l: np.ndarray

    def __post_init__(self) -> None:
        for name in ("h", "d", "l"):
            a = np.asarray(getattr(self, name), dtype=float)
            if a.shape != (4, 4):
                raise ValueError(f"factor {name} must be 4x4, got shape {a.shape}")
            a.setflags(write=False)
            object.__setattr__(self, name, a)


@dataclass(frozen=True)
class QuadCovariance:
    """4x4 real symmetric quadrature covariance with an ordering tag.

    Enforces symmetry to 1e-12 absolute, positive definiteness, and unit
    determinant to 1e-9 relative (the state is pure, so no physical input
    can violate it; a violation signals a construction bug upstream).
    """

    c: np.ndarray
    ordering: QuadratureOrdering = QuadratureOrdering.XS_PS_XI_PI

    def __post_init__(self) -> None:
        c = np.array(self.c, dtype=float)
        if c.shape != (4, 4):
            raise ValueError(f"covariance must be 4x4, got shape {c.shape}")
        if not isinstance(self.ordering, QuadratureOrdering):
            raise ValueError(f"unknown ordering tag: {self.ordering!r}")
        asym = float(np.max(np.abs(c - c.T)))
        if asym > 1e-12:
            raise ValueError(f"covariance not symmetric: max |c - c.T| = {asym:.3e}")
        c = 0.5 * (c + c.T)
        eigvals = np.linalg.eigvalsh(c)
        if eigvals[0] <= 0.0:
            raise ValueError(f"covariance not positive definite: min eigenvalue {eigvals[0]:.3e}")
        det = float(np.prod(eigvals))
        if abs(det - 1.0) > 1e-9 * max(1.0, abs(det)):
            raise ValueError(f"pure-state covariance must have det 1, got {det!r}")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    def reordered(self, target: QuadratureOrdering) -> "QuadCovariance":
        return reorder(self, target)


def bogoliubov_matrix(p: SqueezeParams) -> BogoliubovMatrix:
    """Matrix of the two-mode squeeze on (a1+, a1, a2+, a2).

    Diagonal entries are cosh r; the anti-diagonal pattern carries
    e^{+-i*phi} sinh r.  At r = 0 this is the identity, and the matrix for
    (r, phi) composed with the one for (-r, phi) is the identity (the
    internal constructor below admits negative r for that inverse check).
    """
    return _bogoliubov_unchecked(p.r, p.phi)


def _bogoliubov_unchecked(r: float, phi: float) -> BogoliubovMatrix:
    """Inverse-check path: r may be negative here."""
    ch = math.cosh(r)
    sh = math.sinh(r)
    ep = cmath.exp(1j * phi) * sh
    em = cmath.exp(-1j * phi) * sh
    m = np.array(
        [
            [ch, 0.0, 0.0, em],
            [0.0, ch, ep, 0.0],
            [0.0, em, ch, 0.0],
            [ep, 0.0, 0.0, ch],
        ],
        dtype=complex,
    )
    return BogoliubovMatrix(m)


def symplectic_factors(r: float) -> SymplecticFactors:
    """Factorization L = H diag(e^{-r}, e^r, e^r, e^{-r}) H^T.

    H is the fixed orthogonal matrix with entries 0 and +-1/sqrt(2); the
    factors act on (x1, x2, p1, p2).  L is symplectic for the block form
    J = [[0, I], [-I, 0]] in that ordering.
    """
    if not math.isfinite(r):
        raise ValueError(f"squeezing amplitude must be finite, got {r}")
    s = 1.0 / math.sqrt(2.0)
    h = np.array(
        [
            [s, 0.0, -s, 0.0],
            [s, 0.0, s, 0.0],
            [0.0, s, 0.0, -s],
            [0.0, s, 0.0, s],
        ]
    )
    d = np.diag([math.exp(-r), math.exp(r), math.exp(r), math.exp(-r)])
    l = h @ d @ h.T
    return SymplecticFactors(h=h, d=d, l=l)


def symplectic_form() -> np.ndarray:
    """Canonical J on (x1, x2, p1, p2): [[0, I2], [-I2, 0]]."""
    j = np.zeros((4, 4))
    j[0, 2] = j[1, 3] = 1.0
    j[2, 0] = j[3, 1] = -1.0
    return j


def covariance_via_symplectic(r: float) -> QuadCovariance:
    """Covariance from the squared symplectic diagonal, as a matrix product.

    Computes H^T diag(e^{-2r}, e^{2r}, e^{2r}, e^{-2r}) H, the product
    order that reproduces the closed form entrywise (see the module
    docstring for why the same-order product H diag H^T does not).  The
    result is tagged ``CLOSED_FORM``.
    """
    if not math.isfinite(r):
        raise ValueError(f"squeezing amplitude must be finite, got {r}")
    f = symplectic_factors(r)
    d2 = f.d @ f.d
    c = f.h.T @ d2 @ f.h
    # Entries are (e^{2r} +- e^{-2r})/2 up to matmul roundoff; symmetrize
    # the few-ulp asymmetry before the type-level check.
    c = 0.5 * (c + c.T)
    return QuadCovariance(c=c, ordering=QuadratureOrdering.CLOSED_FORM)


def covariance_closed_form(p: SqueezeParams) -> QuadCovariance:
    """Closed-form covariance: diagonal cosh 2r, cross blocks sinh 2r.

    The cross block is sinh(2r) * [[cos phi, sin phi], [sin phi, -cos phi]]
    and the result is tagged ``CLOSED_FORM`` (axes coincide with the
    canonical signal/idler interleaved order).
    """
    ch = math.cosh(2.0 * p.r)
    sh = math.sinh(2.0 * p.r)
    cp = sh * math.cos(p.phi)
    sp = sh * math.sin(p.phi)
    c = np.array(
        [
            [ch, 0.0, cp, sp],
            [0.0, ch, sp, -cp],
            [cp, sp, ch, 0.0],
            [sp, -cp, 0.0, ch],
        ]
    )
    return QuadCovariance(c=c, ordering=QuadratureOrdering.CLOSED_FORM)


def pearson_rho(r: float) -> float:
    """Signal-idler quadrature correlation, tanh 2r; in [0, 1) for r >= 0."""
    if not math.isfinite(r) or r < 0.0:
        raise ValueError(f"squeezing amplitude r must be finite and >= 0, got {r}")
    return math.tanh(2.0 * r)


def reorder(c: QuadCovariance, target: QuadratureOrdering) -> QuadCovariance:
    """Permute a covariance to another ordering tag.

    Applies the documented axis permutation (P c P^T); reordering there
    and back returns the original matrix exactly, since permutations are
    orthogonal and the entries are only moved, never recomputed.
    """
    if not isinstance(target, QuadratureOrdering):
        raise ValueError(f"unknown ordering tag: {target!r}")
    src = _TO_CANONICAL[c.ordering]
    dst = _TO_CANONICAL[target]
    # Axis a of the target layout is canonical axis k with dst[k] = a, i.e.
    # source axis src[k].
    perm = [src[dst.index(a)] for a in range(4)]
    m = c.c[np.ix_(perm, perm)]
    return QuadCovariance(c=m, ordering=target)
