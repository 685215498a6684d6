"""Exact local computations for the unramified exterior-square integral.

Submodules: ``lie`` (root systems, Weyl characters), ``decomp`` (representation
ring, tensor/plethysm/branching), ``lfactor`` (Euler factors), ``series``
(truncated generating series and the numeric local integral) and
``harness`` (verification suite and CLI).
"""
from .decomp import RepRingElement, branch_a3_to_c2, sym_wedge2_split, tensor_formula_inert, tensor_formula_split
from .lfactor import EulerFactor, euler_factor
from .lie import A3, C2, V, W, DominantWeight, character_alternant, character_freudenthal, weyl_dimension
from .satake import SatakeClassA3, SatakeClassC2
from .series import CSCase, TruncatedSeries2, lseries_product, optimal_form_series, raw_local_series

__version__ = "0.1.0"
