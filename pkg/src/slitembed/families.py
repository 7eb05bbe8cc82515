"""Parameter boxes, parameter grids, and evaluable function families.

The parameter space is a product of factors, one per slit: a closed complex
disk (for the slit right endpoint) times a closed positive interval (for the
slit length).  A parameter point r packs one (endpoint, length) pair per
factor.  Families of functions are represented by callables (r, z) -> value
together with a declared fiberwise holomorphy radius.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional, Sequence

import numpy as np


@dataclass(frozen=True)
class ParamPoint:
    """One point r of the parameter box: ((a_1, b_1), ..., (a_n, b_n))."""

    endpoints: tuple          # complex right endpoints a_j
    lengths: tuple            # positive real lengths b_j

    def __post_init__(self):
        object.__setattr__(self, "endpoints", tuple(complex(a) for a in self.endpoints))
        object.__setattr__(self, "lengths", tuple(float(b) for b in self.lengths))
        if len(self.endpoints) != len(self.lengths):
            raise ValueError("endpoint/length count mismatch")

    @property
    def n(self) -> int:
        return len(self.endpoints)

    def flat(self) -> np.ndarray:
        """Real-coordinate embedding (Re a, Im a, b per factor), for metrics."""
        out = []
        for a, b in zip(self.endpoints, self.lengths):
            out.extend((a.real, a.imag, b))
        return np.array(out)


@dataclass(frozen=True)
class BoxFactor:
    """One factor of the box: closed disk (center, radius) x interval [lo, hi]."""

    center: complex
    radius: float
    lo: float
    hi: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("disk radius must be >= 0")
        if not (0 < self.lo <= self.hi):
            raise ValueError("length interval must satisfy 0 < lo <= hi")


@dataclass(frozen=True)
class ParamBox:
    """Compact parameter box with a finite sampling grid.

    resolution gives, per factor, (n_re, n_im, n_len) grid counts; the disk
    is sampled on the grid of its inscribed square so every grid point lies
    inside the closed box.
    """

    factors: tuple
    resolution: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "resolution", tuple(tuple(int(k) for k in res)
                                                     for res in self.resolution))
        if len(self.factors) != len(self.resolution):
            raise ValueError("one resolution triple per factor required")
        for res in self.resolution:
            if len(res) != 3 or any(k < 1 for k in res):
                raise ValueError("grid resolutions must be positive integers")

    @property
    def n(self) -> int:
        return len(self.factors)

    def grid(self) -> list:
        """Full product grid of ParamPoints; all points lie inside the box."""
        per_factor = []
        for fac, (n_re, n_im, n_len) in zip(self.factors, self.resolution):
            half = fac.radius / np.sqrt(2.0)
            re_off = np.linspace(-half, half, n_re) if n_re > 1 else np.array([0.0])
            im_off = np.linspace(-half, half, n_im) if n_im > 1 else np.array([0.0])
            lens = np.linspace(fac.lo, fac.hi, n_len) if n_len > 1 else np.array([fac.lo])
            pairs = [(fac.center + u + 1j * v, b)
                     for u in re_off for v in im_off for b in lens]
            per_factor.append(pairs)
        points = []
        for combo in product(*per_factor):
            points.append(ParamPoint(tuple(c[0] for c in combo),
                                     tuple(c[1] for c in combo)))
        return points

    def contains(self, r: ParamPoint) -> bool:
        if r.n != self.n:
            return False
        for fac, a, b in zip(self.factors, r.endpoints, r.lengths):
            if abs(a - fac.center) > fac.radius + 1e-12:
                return False
            if not (fac.lo - 1e-12 <= b <= fac.hi + 1e-12):
                return False
        return True


@dataclass
class FunctionFamily:
    """Evaluable family (r, z) -> complex, holomorphic in z on |z| <= radius.

    radius=None declares the family entire in z.  The callable must be
    vectorized over a complex ndarray z.
    """

    func: Callable[[ParamPoint, np.ndarray], np.ndarray]
    radius: Optional[float] = None
    label: str = ""

    def __call__(self, r: ParamPoint, z):
        z = np.asarray(z, dtype=complex)
        out = np.asarray(self.func(r, z), dtype=complex)
        if out.shape != z.shape:
            out = np.broadcast_to(out, z.shape).copy()
        return out if z.ndim else complex(out)

    def holomorphic_on(self, rad: float) -> bool:
        return self.radius is None or rad <= self.radius + 1e-12

    @staticmethod
    def constant(value: complex) -> "FunctionFamily":
        v = complex(value)
        return FunctionFamily(lambda r, z: np.full_like(z, v, dtype=complex),
                              radius=None, label=f"const {v}")

    @staticmethod
    def zero() -> "FunctionFamily":
        return FunctionFamily.constant(0.0)

    def __add__(self, other: "FunctionFamily") -> "FunctionFamily":
        rad = None
        if self.radius is not None or other.radius is not None:
            rad = min(x for x in (self.radius, other.radius) if x is not None)
        return FunctionFamily(lambda r, z: self(r, z) + other(r, z), radius=rad)

    def scaled(self, c: complex) -> "FunctionFamily":
        return FunctionFamily(lambda r, z: c * self(r, z), radius=self.radius)
