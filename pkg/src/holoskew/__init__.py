"""Skew braces, gamma functions and regular subgroups of holomorphs."""

from .biskew import (BetaReport, BiskewReport, beta_report, biskew_report, brace_iso_classes,
                     is_bi_gf)
from .catalog import catalog_group, identify, small_groups
from .constructions import (BiHom, RadicalRing, ault_watters_gamma, bilinear_delta,
                            central_gamma, childs_gamma, compatible_pair_group, cube_condition,
                            delta_gamma, lift_rgf, ring_to_gamma, semi_gamma)
from .errors import HypothesisError, InvariantError
from .gamma import (GammaFunction, RelativeGammaFunction, SkewBrace, circle_from_gamma,
                    enumerate_gammas, gamma_from_circle, gamma_from_regular, opposite_gamma,
                    regular_from_gamma)
from .groups import FiniteGroup, Subgroup, make_group, parse_spec
from .holomorph import (RegularSubgroup, build_holomorph, enumerate_regular_subgroups,
                        multiple_holomorph_T)
from .perms import automorphism_group

__version__ = "0.1.0"
