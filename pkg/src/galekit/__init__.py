"""Exact Gale duality for fans, toric data, quadrics and LVMB data."""

from .complexes import SimplicialComplex
from .cones import Cone, Halfspace
from .errors import GalekitError
from .fans import FanData, FanVerdict, Polyhedron
from .gale import VectorConfiguration, PointConfiguration, gale_dual, is_gale_pair
from .linalg import Matrix
from .lvmb import LVMBDatum
from .quadrics import QuadricSystem
from .rational import Rat

__version__ = "0.1.0"

__all__ = [
    "Cone", "FanData", "FanVerdict", "GalekitError", "Halfspace", "LVMBDatum", "Matrix",
    "PointConfiguration", "Polyhedron", "QuadricSystem", "Rat", "SimplicialComplex",
    "VectorConfiguration", "gale_dual", "is_gale_pair",
]
