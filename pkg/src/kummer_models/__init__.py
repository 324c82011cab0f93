"""Finite flat models of mu_p and mu_p^2 over a ramified p-adic ring and the
degeneration of cyclic p^2-covers of a local curve."""
from .analysis import AnalysisReport, analyze, analyze_zp, compute_level, solve_threshold
from .base import BaseRing, QuotientB1, mk_curve, mk_point, residue_pth_power_test
from .degen import (atlas, enumerate_admissible, is_admissible, realize,
                    special_case_suite)
from .errors import (HypothesisError, InexactDivisionError, InvalidInputError,
                     InvariantError, KummerError, NotAUnitError, ParseError, PrecisionError)
from .groups import (ModelGroup, hom_brute_force, hom_group, hopf_axioms, mk_extension,
                     mk_glam_n, model_map, phi1_membership, phi_membership, torsor_equations)
from .kernels import BACKEND
from .padic import AtLeast, PAdicContext, mk_context, valuation
from .textio import format_elt, parse_in

__version__ = "0.1.0"
