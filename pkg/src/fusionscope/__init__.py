"""fusionscope: what fusion rules reveal about a compact group.

Modules
-------
fusion_core     fusion rings, generalized characters, axiom validation
group_recovery  one-dimensional characters, chain group, odd-fusion check
subrings        representation subrings, quotients, order automorphisms
char_solver     character equations, integer solutions, FP dimensions
su2_engine      SU(2) Clebsch-Gordan series from dimension data
document        JSON ring documents
catalog         example rings
report, cli     full analysis and the ``fusionscope`` command
"""

from .errors import *  # noqa: F401,F403
from .fusion_core import (FusionRing, GeneralizedCharacter, ValidationReport, decompose, dual_char, leq,
                          multiply, validate)
from .group_recovery import (AbelianGroupStructure, center_dual, chain_group, check_oddfusion_pseudoreal_center,
                             identify_invariant_factors, invertible_characters)
from .subrings import (adjoint_subring, characteristic_check, close, enumerate_subrings, find_order_isomorphism,
                       order_automorphisms, quotient_ring)
from .char_solver import (fp_dimensions, fusion_matrices, integer_positive_solutions, solve_character_system,
                          verify_solution)
from .su2_engine import (SpinIndex, SU2Character, cg_product, chi_half_power, chi_in_half_powers,
                         derive_half_tensor, export_truncated_ring, parity_grading)
from .document import RingDocument, parse, serialize
from . import catalog

__version__ = "0.1.0"
