"""Smooth step and cutoff utilities shared across the package.

All cutoffs are built from the classical exp(-1/x) bump, evaluated through
a numerically stable logistic form so that the functions saturate to exact
0.0 / 1.0 in floating point outside their transition band.
"""

from __future__ import annotations

import numpy as np

_EXP_CLAMP = 700.0


def smooth_step(u):
    """C-infinity step: 0 for u <= 0, 1 for u >= 1, strictly monotone between.

    Equals B(u) / (B(u) + B(1-u)) with B(u) = exp(-1/u), computed as a
    logistic of 1/u - 1/(1-u) to avoid under/overflow.
    """
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    out[u <= 0.0] = 0.0
    out[u >= 1.0] = 1.0
    mid = (u > 0.0) & (u < 1.0)
    um = u[mid]
    expo = np.clip(1.0 / um - 1.0 / (1.0 - um), -_EXP_CLAMP, _EXP_CLAMP)
    out[mid] = 1.0 / (1.0 + np.exp(expo))
    return out if out.ndim else float(out)


def ramp_up(x, lo, hi):
    """Smooth 0 -> 1 transition as x crosses [lo, hi]."""
    if not hi > lo:
        raise ValueError("ramp_up needs hi > lo")
    return smooth_step((np.asarray(x, dtype=float) - lo) / (hi - lo))


def ramp_down(x, lo, hi):
    """Smooth 1 -> 0 transition as x crosses [lo, hi]."""
    if not hi > lo:
        raise ValueError("ramp_down needs hi > lo")
    return 1.0 - smooth_step((np.asarray(x, dtype=float) - lo) / (hi - lo))


def pair_partition(d1, d2, delta):
    """Partition of unity from two distance fields.

    Returns (p1, p2) with p1 + p2 = 1 wherever min(d1, d2) < delta,
    p_i = 0 wherever d_i >= delta, built from exp(-1/u) bumps of
    u_i = (delta - d_i)/delta.  Outside the union neighborhood both
    values are 0.
    """
    d1 = np.asarray(d1, dtype=float)
    d2 = np.asarray(d2, dtype=float)
    u1 = (delta - d1) / delta
    u2 = (delta - d2) / delta
    p1 = np.zeros_like(u1)
    only1 = (u1 > 0.0) & (u2 <= 0.0)
    only2 = (u2 > 0.0) & (u1 <= 0.0)
    both = (u1 > 0.0) & (u2 > 0.0)
    p1[only1] = 1.0
    p1[only2] = 0.0
    expo = np.clip(1.0 / u1[both] - 1.0 / u2[both], -_EXP_CLAMP, _EXP_CLAMP)
    p1[both] = 1.0 / (1.0 + np.exp(expo))
    p2 = np.where((u1 > 0.0) | (u2 > 0.0), 1.0 - p1, 0.0)
    if not p1.ndim:
        return float(p1), float(p2)
    return p1, p2


def wirtinger_dbar(f, z, h=1e-5):
    """d/d(conj z) of a callable f at points z by 4th-order central differences.

    f must accept a complex ndarray and return complex values of the same
    shape.  dbar = (df/dx + i df/dy) / 2.
    """
    z = np.asarray(z, dtype=complex)
    c1, c2 = 8.0, -1.0
    fx = (c1 * (f(z + h) - f(z - h)) + c2 * (f(z + 2 * h) - f(z - 2 * h))) / (12.0 * h)
    fy = (c1 * (f(z + 1j * h) - f(z - 1j * h))
          + c2 * (f(z + 2j * h) - f(z - 2j * h))) / (12.0 * h)
    return 0.5 * (fx + 1j * fy)
