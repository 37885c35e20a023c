"""Exact tools for plane rational and Cremona maps through their base ideals."""
from .algebra import (FieldConfig, GradedPolynomial, MonomialOrder, PolyRing, parse_poly,
                      poly_arith, print_poly, order_at_point)
from .groebner import (GradedIdeal, colon, eliminate, groebner_basis, ideal, intersect, lift,
                       normal_form, saturation)
from .hilbert import HilbertSeries, dim_and_degree, hilbert_series
from .resolution import (BettiTable, GradedFreeResolution, minimal_free_resolution, regularity,
                         is_cohen_macaulay)
from .clusters import (ClusterNode, HomaloidalType, WeightedCluster, enumerate_homaloidal_types,
                       fat_ideal, hudson_test, proximity_matrix)
from .cremona import (Characteristic, PlaneRationalMap, ReesEquations, analyze_base_ideal,
                      base_ideal, compute_characteristic, inclusion_chain_check, is_birational,
                      make_dejonquieres, power_saturation_profile, quartic_square_test,
                      sylvester_rees)
from .monomial import classify_monomial_map
from .corpus import AnalysisReport, run_corpus

__version__ = "0.1.0"
