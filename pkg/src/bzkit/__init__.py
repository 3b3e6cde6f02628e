"""Tropical BZ data for finite and affine type A crystals."""
from .root_data import Interval, WeightVector, cartan_pairing, phi_from_epsilon
from .maya import MayaCharged, MayaFinite
from .lusztig_finite import LusztigFinite
from .lusztig_affine import LusztigAffine
from .bz_finite import BZFinite, DressedBZ
from .bz_affine import BZAffineView
from .tableau_phi import phi, phi_prime, phi_inverse

__all__ = [
    "Interval",
    "WeightVector",
    "cartan_pairing",
    "phi_from_epsilon",
    "MayaCharged",
    "MayaFinite",
    "LusztigFinite",
    "LusztigAffine",
    "BZFinite",
    "DressedBZ",
    "BZAffineView",
    "phi",
    "phi_prime",
    "phi_inverse",
]
__version__ = "0.1.0"
