"""octic168: exact certification of a 168-nodal octic surface in P3."""

__version__ = "0.1.0"

from .arith import QSqrt2, Rat, TowerElem, TowerField, compare, is_square
from .certify import SurfaceCertificate, build_certificate, family_sample_check
from .mpoly import MPoly
from .realroots import isolate_real_roots
from .surface import OcticParams, build_F, build_P, build_q, endrass_params
from .upoly import UPoly

__all__ = [
    "__version__",
    "QSqrt2",
    "Rat",
    "TowerElem",
    "TowerField",
    "compare",
    "is_square",
    "isolate_real_roots",
    "MPoly",
    "UPoly",
    "OcticParams",
    "build_F",
    "build_P",
    "build_q",
    "endrass_params",
    "SurfaceCertificate",
    "build_certificate",
    "family_sample_check",
]
