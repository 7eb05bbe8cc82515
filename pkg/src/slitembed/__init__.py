"""slitembed: parametric holomorphic approximation on slit domains.

Numerical machinery, with per-run certificates, for approximating
continuous families of functions on unbounded Lipschitz curves by entire
families, and for pushing families of slit-complement domains of the
Riemann sphere into C^2 by words of shear automorphisms.
"""

from .families import BoxFactor, FunctionFamily, ParamBox, ParamPoint
from .geometry import (
    INFINITY,
    CircularSlitData,
    PoleEvaluationError,
    SlitEmbedding,
    SlitFamilyConfig,
    SlitGeometryError,
    circular_slit_data,
    config_from_dict,
    embed,
    embed_ext,
    load_config,
    mobius,
    mobius_deriv,
    mobius_inv,
)

__all__ = [
    "BoxFactor", "FunctionFamily", "ParamBox", "ParamPoint",
    "INFINITY", "CircularSlitData", "PoleEvaluationError", "SlitEmbedding",
    "SlitFamilyConfig", "SlitGeometryError", "circular_slit_data",
    "config_from_dict", "embed", "embed_ext", "load_config",
    "mobius", "mobius_deriv", "mobius_inv",
]

__version__ = "0.1.0"
