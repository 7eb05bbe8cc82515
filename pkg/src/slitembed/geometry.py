"""Slit families in the Riemann sphere and their circular-slit images.

A configuration holds n pairwise disjoint horizontal slits per parameter
point r; slit j has right endpoint a_j(r) and length b_j(r).  The Moebius
map w = 1/z + 1 sends the slit family to one circular slit family: the
image of the normalized first slit [-1, 0] is the negative real axis, the
other slits land on circles.  Per (r, j) we record the finite tip of the
image arc, the unit tangent there, the signed curvature of the normalized
circle, and a point sample of the arc.  The rational embedding into C^2
places simple poles at the circular slit tips.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .families import BoxFactor, ParamBox, ParamPoint


class P1Infinity:
    """Tag for the point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = P1Infinity()


class SlitGeometryError(ValueError):
    pass


class PoleEvaluationError(SlitGeometryError):
    """Evaluation requested at (or too close to) a pole; carries the slit index."""

    def __init__(self, j, z):
        self.j = j
        self.z = z
        super().__init__(f"evaluation at pole of slit {j}: z = {z}")


def mobius(z):
    """The sphere automorphism w = 1/z + 1.

    Scalars: 0 maps to INFINITY and INFINITY maps to 1.  Arrays: entries
    exactly 0 come back as complex infinity.
    """
    if isinstance(z, P1Infinity):
        return 1.0 + 0.0j
    z = np.asarray(z, dtype=complex)
    if z.ndim == 0:
        if z == 0:
            return INFINITY
        return complex(1.0 / z + 1.0)
    out = np.empty_like(z)
    zero = z == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        out[~zero] = 1.0 / z[~zero] + 1.0
    out[zero] = complex(np.inf, np.inf)
    return out


def mobius_inv(w):
    """Inverse of mobius: z = 1/(w - 1); 1 maps to INFINITY, INFINITY to 0."""
    if isinstance(w, P1Infinity):
        return 0.0 + 0.0j
    w = np.asarray(w, dtype=complex)
    if w.ndim == 0:
        if w == 1:
            return INFINITY
        return complex(1.0 / (w - 1.0))
    out = np.empty_like(w)
    one = w == 1
    with np.errstate(divide="ignore", invalid="ignore"):
        out[~one] = 1.0 / (w[~one] - 1.0)
    out[one] = complex(np.inf, np.inf)
    return out


def mobius_deriv(z):
    """d/dz of the Moebius map: -1/z^2."""
    z = np.asarray(z, dtype=complex)
    return -1.0 / z**2


@dataclass
class SlitFamilyConfig:
    """The maps r -> (a_j(r), b_j(r)) plus embedding angles.

    By default a_j, b_j are the coordinate projections of r.  User-supplied
    callables (r, j) -> value may replace them for richer demos.  angles
    are the embedding directions theta_2 < ... < theta_n in (0, 2*pi); for
    n = 1 the list is empty.
    """

    box: ParamBox
    angles: Sequence[float] = ()
    normalized: bool = True
    endpoint_fn: Optional[Callable[[ParamPoint, int], complex]] = None
    length_fn: Optional[Callable[[ParamPoint, int], float]] = None
    disjointness_margin: float = 1e-9
    _grid: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        self.angles = tuple(float(t) for t in self.angles)
        if len(self.angles) != max(self.box.n - 1, 0):
            raise SlitGeometryError("need exactly n-1 embedding angles")
        if self.angles and not all(0.0 < t < 2.0 * np.pi for t in self.angles):
            raise SlitGeometryError("embedding angles must lie in (0, 2*pi)")
        if any(t2 <= t1 for t1, t2 in zip(self.angles, self.angles[1:])):
            raise SlitGeometryError("embedding angles must be strictly increasing")

    @property
    def n(self) -> int:
        return self.box.n

    def grid(self) -> list:
        if not self._grid:
            self._grid = self.box.grid()
        return self._grid

    def endpoint(self, r: ParamPoint, j: int) -> complex:
        if self.endpoint_fn is not None:
            return complex(self.endpoint_fn(r, j))
        return r.endpoints[j - 1]

    def length(self, r: ParamPoint, j: int) -> float:
        if self.length_fn is not None:
            return float(self.length_fn(r, j))
        return r.lengths[j - 1]

    def slit_segment(self, r: ParamPoint, j: int):
        """(left, right) endpoints of the horizontal slit l_{r,j}."""
        a = self.endpoint(r, j)
        b = self.length(r, j)
        if b <= 0:
            raise SlitGeometryError(f"slit {j} has nonpositive length {b}")
        return a - b, a

    def slit_points(self, r: ParamPoint, j: int, m: int) -> np.ndarray:
        left, right = self.slit_segment(r, j)
        return left + np.linspace(0.0, 1.0, m) * (right - left)

    def validate(self, r: ParamPoint, samples: int = 64) -> None:
        """Disjointness and normalization checks at one parameter point."""
        if self.normalized:
            a1, b1 = self.endpoint(r, 1), self.length(r, 1)
            if abs(a1) > 1e-12 or abs(b1 - 1.0) > 1e-12:
                raise SlitGeometryError(
                    f"normalization flag set but l_1 = [{a1 - b1}, {a1}] != [-1, 0]")
        segs = [self.slit_segment(r, j) for j in range(1, self.n + 1)]
        for j, (lo, hi) in enumerate(segs, start=1):
            if abs(lo.imag - hi.imag) > 1e-12:
                raise SlitGeometryError(f"slit {j} is not horizontal")
        for i in range(len(segs)):
            for k in range(i + 1, len(segs)):
                d = _horizontal_segment_distance(segs[i], segs[k])
                if d <= self.disjointness_margin:
                    raise SlitGeometryError(
                        f"slits {i + 1} and {k + 1} are not disjoint at r "
                        f"(distance {d:.3e})")

    def validate_grid(self, samples: int = 64) -> None:
        for r in self.grid():
            self.validate(r, samples=samples)


def _segment_distance(seg1, seg2, samples: int) -> float:
    p = seg1[0] + np.linspace(0, 1, samples)[:, None] * (seg1[1] - seg1[0])
    q = seg2[0] + np.linspace(0, 1, samples)[None, :] * (seg2[1] - seg2[0])
    return float(np.min(np.abs(p - q)))


@dataclass
class CircularSlitData:
    """Image-side data of one slit at one parameter point.

    tip is the finite endpoint of the image arc (the image of the slit
    endpoint nearest the Moebius pole is at infinity when the slit touches
    the pole; in that case the other endpoint serves as tip).  tangent is
    the unit tangent of the carrying circle at the tip, curvature the
    signed curvature of the tip-frame normalized circle: positive above
    the real axis, zero for a line.
    """

    j: int
    r: ParamPoint
    tip: complex
    tangent: complex
    curvature: float
    points: np.ndarray
    params: np.ndarray
    touches_pole: bool = False

    def to_tip_frame(self, z):
        """Rotate/translate so the tip sits at 0 with real tangent direction."""
        return np.conj(self.tangent) * (np.asarray(z, dtype=complex) - self.tip)

    def from_tip_frame(self, zeta):
        return self.tangent * np.asarray(zeta, dtype=complex) + self.tip


def circular_slit_data(cfg: SlitFamilyConfig, r: ParamPoint, j: int,
                       m: int = 128) -> CircularSlitData:
    """Image data of slit j at r: tip, unit tangent, signed curvature, samples.

    The sample consists of the images of m equispaced points of the slit;
    when one slit endpoint is the Moebius pole the sample parameter stops
    half a spacing short of it.
    """
    if not 1 <= j <= cfg.n:
        raise SlitGeometryError(f"slit index {j} out of range 1..{cfg.n}")
    if m < 2:
        raise SlitGeometryError("need at least 2 sample points")
    cfg.validate(r)
    left, right = cfg.slit_segment(r, j)
    y = right.imag

    if abs(y) < 1e-15 and left.real < 0 < right.real:
        raise SlitGeometryError(
            f"slit {j} passes through the pole of the Moebius map at 0")

    touches = (right == 0) or (left == 0)
    if right == 0:
        base = left            # pole at the right end; use the finite tip
        tau = np.linspace(0.0, 1.0 - 0.5 / m, m)
    elif left == 0:
        base = right
        tau = np.linspace(0.5 / m, 1.0, m)
    else:
        base = right
        tau = np.linspace(0.0, 1.0, m)

    tip = complex(mobius(base))
    dpsi = complex(mobius_deriv(base))
    tangent = dpsi / abs(dpsi)

    if abs(y) < 1e-15:
        curvature = 0.0
    else:
        center = 1.0 - 0.5j / y          # image of the full horizontal line
        radius = 0.5 / abs(y)
        side = np.imag(np.conj(tangent) * (center - tip))
        curvature = float(np.sign(side) / radius)

    pts = mobius(left + tau * (right - left))
    return CircularSlitData(j=j, r=r, tip=tip, tangent=tangent,
                            curvature=curvature, points=np.asarray(pts),
                            params=tau, touches_pole=touches)


def fit_circle_curvature(data: CircularSlitData, idx=(0, 1, 2)) -> float:
    """Signed curvature from a three-point circumcircle fit of the sample.

    Independent of the analytic formula; returns 0 for collinear samples.
    """
    z1, z2, z3 = (data.points[i] for i in idx)
    x1, y1, x2, y2, x3, y3 = z1.real, z1.imag, z2.real, z2.imag, z3.real, z3.imag
    d = 2.0 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2))
    scale = max(abs(z1 - z2), abs(z2 - z3), abs(z3 - z1))
    if abs(d) < 1e-12 * scale**2:
        return 0.0
    ux = ((abs(z1)**2) * (y2 - y3) + (abs(z2)**2) * (y3 - y1)
          + (abs(z3)**2) * (y1 - y2)) / d
    uy = ((abs(z1)**2) * (x3 - x2) + (abs(z2)**2) * (x1 - x3)
          + (abs(z3)**2) * (x2 - x1)) / d
    center = complex(ux, uy)
    radius = abs(center - z1)
    side = np.imag(np.conj(data.tangent) * (center - data.tip))
    return float(np.sign(side) / radius)


class SlitEmbedding:
    """The rational embedding z -> (z, sum_j e^{i theta_j} / frame_j(z)).

    frame_j is the tip-frame map of slit j >= 2; the first slit contributes
    no pole.  The extended variant adds a second input w to the pole sum,
    making the map an automorphism-friendly rational map of C^2.
    """

    def __init__(self, cfg: SlitFamilyConfig, r: ParamPoint, m: int = 64,
                 pole_tolerance: float = 1e-12):
        self.cfg = cfg
        self.r = r
        self.pole_tolerance = pole_tolerance
        self.data = {j: circular_slit_data(cfg, r, j, m=m)
                     for j in range(2, cfg.n + 1)}

    def pole(self, j: int) -> complex:
        return self.data[j].tip

    def pole_sum(self, z):
        z = np.asarray(z, dtype=complex)
        total = np.zeros_like(z)
        for j in range(2, self.cfg.n + 1):
            d = self.data[j]
            gap = z - d.tip
            bad = np.abs(gap) < self.pole_tolerance
            if np.any(bad):
                zbad = z[bad] if z.ndim else z
                raise PoleEvaluationError(j, complex(np.atleast_1d(zbad)[0]))
            total = total + np.exp(1j * self.cfg.angles[j - 2]) / (np.conj(d.tangent) * gap)
        return total

    def at(self, z):
        z = np.asarray(z, dtype=complex)
        second = self.pole_sum(z)
        return np.stack([z, second], axis=-1)

    def at_ext(self, z, w):
        zb, wb = np.broadcast_arrays(np.asarray(z, dtype=complex),
                                     np.asarray(w, dtype=complex))
        second = wb + self.pole_sum(zb)
        return np.stack([zb, second], axis=-1)


def embed(cfg: SlitFamilyConfig, r: ParamPoint, z, m: int = 64):
    return SlitEmbedding(cfg, r, m=m).at(z)


def embed_ext(cfg: SlitFamilyConfig, r: ParamPoint, z, w, m: int = 64):
    return SlitEmbedding(cfg, r, m=m).at_ext(z, w)


# ---------------------------------------------------------------------------
# external interfaces: JSON configs and CSV curve dumps

def config_from_dict(doc: dict) -> SlitFamilyConfig:
    """Build a SlitFamilyConfig from the JSON document schema.

    Expected keys: n, box (list of {center, radius, length}), angles,
    grid (list of [n_re, n_im, n_len]); optional normalized flag.
    """
    try:
        n = int(doc["n"])
        box_spec = doc["box"]
        angles = [float(t) for t in doc.get("angles", [])]
        grid = doc.get("grid", [[1, 1, 1]] * n)
    except KeyError as exc:
        raise SlitGeometryError(f"config missing field: {exc.args[0]}") from None
    if len(box_spec) != n:
        raise SlitGeometryError(f"box must list {n} factors, got {len(box_spec)}")
    if len(grid) != n:
        raise SlitGeometryError(f"grid must list {n} resolution triples")
    factors = []
    for k, fac in enumerate(box_spec, start=1):
        try:
            cre, cim = fac["center"]
            radius = float(fac["radius"])
            lo, hi = fac["length"]
        except KeyError as exc:
            raise SlitGeometryError(
                f"box factor {k} missing field: {exc.args[0]}") from None
        factors.append(BoxFactor(complex(cre, cim), radius, float(lo), float(hi)))
    box = ParamBox(tuple(factors), tuple(tuple(g) for g in grid))
    return SlitFamilyConfig(box=box, angles=angles,
                            normalized=bool(doc.get("normalized", True)))


def load_config(path) -> SlitFamilyConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_dict(json.load(fh))


def write_curves_csv(path, cfg: SlitFamilyConfig, m: int = 128) -> None:
    """Sampled image slits for every grid r: columns r_index, j, re, im."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["r_index", "j", "re", "im"])
        for ri, r in enumerate(cfg.grid()):
            for j in range(1, cfg.n + 1):
                data = circular_slit_data(cfg, r, j, m=m)
                for z in data.points:
                    writer.writerow([ri, j, repr(float(z.real)), repr(float(z.imag))])
