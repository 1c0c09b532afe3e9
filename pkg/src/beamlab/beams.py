"""Closed-form paraxial Gaussian beams.

Covers the coherent 1D Gaussian amplitude, the partially coherent 1D
Gaussian Schell-model (GSM) two-point function, and the coherent elliptic
2D beam built as a product of two 1D amplitudes with unequal widths.

Conventions
-----------
* All lengths (widths, coherence lengths, transverse coordinates, the
  propagation distance ``z``) share one arbitrary unit; ``lambda_bar`` is
  the reduced wavelength lambda/(2 pi) in that unit.
* The waist plane sits at ``z = 0``.  The curvature radius follows the
  sign convention ``R(z) = -(z + z_R**2 / z)``, negative for ``z > 0``.
* Infinities (flat phase front ``R = inf``, fully coherent limit
  ``delta = inf``) are carried as IEEE ``math.inf``, never as numeric
  sentinels; all formulas below are written so that the infinite branch
  evaluates exactly (``1/inf**2 == 0.0``).
* With the amplitude normalisation used here the integrated power of a
  1D beam is ``sqrt(intensity)`` and that of a 2D product beam is
  ``sqrt(intensity_x * intensity_y)``; both are conserved under
  propagation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BeamParams1D",
    "GsmParams",
    "BeamParams2D",
    "PropagatedBeam1D",
    "beam_geometry_1d",
    "coherent_amplitude_1d",
    "gsm_rayleigh_range",
    "gsm_widths",
    "gsm_gamma",
    "elliptic_amplitude_2d",
]


def _check_positive(name, value, allow_inf=False):
    if math.isnan(value):
        raise ValueError(f"{name} must not be NaN")
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    if math.isinf(value) and not allow_inf:
        raise ValueError(f"{name} must be finite, got {value}")


@dataclass(frozen=True)
class BeamParams1D:
    """Waist-plane parameters of a coherent 1D Gaussian beam.

    Parameters
    ----------
    intensity : float
        Intensity measure entering the peak amplitude; arbitrary power
        units, must be positive.
    waist_width : float
        Waist width ``w`` (the 1/e half-width of the amplitude).
    lambda_bar : float
        Reduced wavelength lambda/(2 pi).
    """

    intensity: float
    waist_width: float
    lambda_bar: float

    def __post_init__(self):
        _check_positive("intensity", self.intensity)
        _check_positive("waist_width", self.waist_width)
        _check_positive("lambda_bar", self.lambda_bar)


@dataclass(frozen=True)
class GsmParams:
    """Waist-plane parameters of a 1D Gaussian Schell-model beam.

    ``coherence_length = math.inf`` selects the fully coherent limit, in
    which the two-point function factorises exactly.
    """

    intensity: float
    waist_width: float
    coherence_length: float
    lambda_bar: float

    def __post_init__(self):
        _check_positive("intensity", self.intensity)
        _check_positive("waist_width", self.waist_width)
        _check_positive("coherence_length", self.coherence_length, allow_inf=True)
        _check_positive("lambda_bar", self.lambda_bar)


@dataclass(frozen=True)
class BeamParams2D:
    """Waist-plane parameters of a coherent elliptic 2D Gaussian beam.

    The beam is a product of two 1D amplitudes with principal axes x and
    y.  Equal widths are allowed by the construction; the projection
    witness only certifies entanglement for ``width_x != width_y``.
    """

    intensity_x: float
    intensity_y: float
    width_x: float
    width_y: float
    lambda_bar: float

    def __post_init__(self):
        _check_positive("intensity_x", self.intensity_x)
        _check_positive("intensity_y", self.intensity_y)
        _check_positive("width_x", self.width_x)
        _check_positive("width_y", self.width_y)
        _check_positive("lambda_bar", self.lambda_bar)

    def axis_x(self) -> BeamParams1D:
        """1D parameters of the x factor."""
        return BeamParams1D(self.intensity_x, self.width_x, self.lambda_bar)

    def axis_y(self) -> BeamParams1D:
        """1D parameters of the y factor."""
        return BeamParams1D(self.intensity_y, self.width_y, self.lambda_bar)


@dataclass(frozen=True)
class PropagatedBeam1D:
    """Geometry of a coherent 1D Gaussian beam at one transverse plane.

    ``curvature_radius`` is ``math.inf`` in the waist plane and follows
    the ``R(z) = -(z + z_R**2/z)`` sign convention elsewhere.  The Guoy
    phase is ``-0.5 * atan(z / z_R)``, i.e. the principal arctangent
    branch.
    """

    width: float
    curvature_radius: float
    guoy_phase: float
    rayleigh_range: float


def beam_geometry_1d(p: BeamParams1D, z: float) -> PropagatedBeam1D:
    """Evaluate the width, curvature radius and Guoy phase at plane ``z``.

    Parameters
    ----------
    p : BeamParams1D
    z : float
        Distance from the waist plane (either sign).

    Returns
    -------
    PropagatedBeam1D
    """
    z_r = p.waist_width**2 / (2.0 * p.lambda_bar)
    ratio = z / z_r
    width = p.waist_width * math.sqrt(1.0 + ratio * ratio)
    if z == 0.0:
        curvature = math.inf
    else:
        curvature = -(z + z_r * z_r / z)
    guoy = -0.5 * math.atan(ratio)
    return PropagatedBeam1D(width, curvature, guoy, z_r)


def coherent_amplitude_1d(p: BeamParams1D, x, z: float):
    """Closed-form coherent Gaussian amplitude ``psi(x; z)``.

    At ``z = 0`` this reduces to the real waist-plane profile
    ``(2 I / (pi w**2))**0.25 * exp(-x**2 / w**2)``.

    Parameters
    ----------
    p : BeamParams1D
    x : float or ndarray
        Transverse coordinate(s).
    z : float
        Propagation distance.

    Returns
    -------
    complex or ndarray of complex
    """
    g = beam_geometry_1d(p, z)
    x = np.asarray(x, dtype=float)
    prefactor = (2.0 * p.intensity / (math.pi * g.width**2)) ** 0.25
    # 1/inf == 0.0 kills the curvature phase exactly in the waist plane
    curvature_phase = -x * x / (2.0 * p.lambda_bar * g.curvature_radius)
    out = (
        prefactor
        * np.exp(1j * g.guoy_phase)
        * np.exp(-x * x / g.width**2 + 1j * curvature_phase)
    )
    return out[()] if out.ndim == 0 else out


def gsm_rayleigh_range(p: GsmParams) -> float:
    """Rayleigh range of a GSM beam; depends on both width and coherence.

    Equals the coherent value ``w**2 / (2 lambda_bar)`` when
    ``coherence_length`` is infinite and is strictly smaller otherwise
    (partial coherence increases the beam divergence).
    """
    w = p.waist_width
    coherent_zr = w * w / (2.0 * p.lambda_bar)
    return coherent_zr / math.sqrt(1.0 + (w / p.coherence_length) ** 2)


def gsm_widths(p: GsmParams, z: float) -> tuple[float, float, float]:
    """Width, coherence length and curvature radius of a GSM beam at ``z``.

    Returns
    -------
    (width, coherence_length, curvature_radius)
        Both transverse scales grow by the common factor
        ``sqrt(1 + (z/z_R)**2)``; the curvature radius is ``math.inf``
        at the waist.
    """
    z_r = gsm_rayleigh_range(p)
    factor = math.sqrt(1.0 + (z / z_r) ** 2)
    if z == 0.0:
        curvature = math.inf
    else:
        curvature = -(z + z_r * z_r / z)
    return p.waist_width * factor, p.coherence_length * factor, curvature


def gsm_gamma(p: GsmParams, x, x_prime, z: float):
    """Two-point correlation ``Gamma(x, x'; z)`` of a GSM beam.

    Hermitian in its spatial arguments:
    ``gsm_gamma(p, x, x', z) == conj(gsm_gamma(p, x', x, z))``.  With an
    infinite coherence length the result factorises exactly as
    ``psi(x; z) * conj(psi(x'; z))``.

    Parameters
    ----------
    p : GsmParams
    x, x_prime : float or ndarray
        The two transverse points (broadcast against each other).
    z : float

    Returns
    -------
    complex or ndarray of complex
    """
    width, coherence, curvature = gsm_widths(p, z)
    x = np.asarray(x, dtype=float)
    x_prime = np.asarray(x_prime, dtype=float)
    prefactor = math.sqrt(2.0 * p.intensity / (math.pi * width**2))
    diff = x - x_prime
    out = prefactor * np.exp(
        -(x * x + x_prime * x_prime) / width**2
        - diff * diff / (2.0 * coherence**2)
        - 1j * (x * x - x_prime * x_prime) / (2.0 * p.lambda_bar * curvature)
    )
    return out[()] if out.ndim == 0 else out


def elliptic_amplitude_2d(p: BeamParams2D, x, y, z: float):
    """Coherent elliptic 2D amplitude as an exact product of 1D factors.

    ``Psi(x, y; z) = psi_x(x; z) * psi_y(y; z)`` with per-axis Rayleigh
    ranges; the product form holds for every ``z``.
    """
    return coherent_amplitude_1d(p.axis_x(), x, z) * coherent_amplitude_1d(
        p.axis_y(), y, z
    )
