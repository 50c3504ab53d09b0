"""Exact computer algebra for algebraic quantum groups: integrals, modular data,
duals, the duality element V, the Heisenberg algebra and the Fourier transform."""

from .algebra import Algebra, Element, Functional, LinearMap, Multiplier, tensor
from .catalog import build
from .dual import Pairing, build_dual
from .duality import DualityV, build_v
from .fourier import FourierPack
from .heisenberg import HeisenbergAlgebra
from .hopf import HopfAlgebra, check_hopf_axioms
from .integrals import derive, identity_suite_one, solve_left_integral
from .report import Report
from .scalars import ComplexField, CyclotomicField

__all__ = [
    "Algebra", "ComplexField", "CyclotomicField", "DualityV", "Element", "FourierPack", "Functional",
    "HeisenbergAlgebra", "HopfAlgebra", "LinearMap", "Multiplier", "Pairing", "Report", "build",
    "build_dual", "build_v", "check_hopf_axioms", "derive", "identity_suite_one", "solve_left_integral",
    "tensor",
]
__version__ = "0.1.0"
