"""Exact calculus for the odd Temperley-Lieb supercategory and its relatives.

Submodules: :mod:`scalars` (Laurent polynomials and rational functions in
``q``), :mod:`superlinalg`, :mod:`tl`, :mod:`jones_wenzl`, :mod:`envelope`,
:mod:`osp`, :mod:`k0`, :mod:`brauer`, :mod:`expr` and :mod:`cli`.
"""
from .brauer import SBMorphism, sb_compose, sb_tensor
from .envelope import (
                       PiEnvelope,
                       PiMorphism,
                       PiObject,
                       associated_supercategory,
                       underlying_pi_category,
)
from .expr import parse
from .jones_wenzl import gn, jw, un, vn
from .k0 import IdempotentPair, ZPiLaurent, qint_xpi, verify_idempotent_equivalence
from .scalars import LaurentPoly, RatFunc, delta, quantum_int
from .tl import TLMorphism, enumerate_basis

__all__ = [
                       "IdempotentPair",
                       "LaurentPoly",
                       "PiEnvelope",
                       "PiMorphism",
                       "PiObject",
                       "RatFunc",
                       "SBMorphism",
                       "TLMorphism",
                       "ZPiLaurent",
                       "associated_supercategory",
                       "delta",
                       "enumerate_basis",
                       "gn",
                       "jw",
                       "parse",
                       "qint_xpi",
                       "quantum_int",
                       "sb_compose",
                       "sb_tensor",
                       "un",
                       "underlying_pi_category",
                       "verify_idempotent_equivalence",
                       "vn",
]
