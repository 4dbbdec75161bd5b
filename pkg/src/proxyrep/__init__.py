"""Theta-representative proxy arrangements for voters and candidates on [0, 1]."""

from .elections import (Profile, Side, median_condorcet_winner, outcome_distance,
                        proxy_profile)
from .geometry import (Arrangement, Instance, InvalidInstance, TieBreak, infeasible_regions,
                       segment, theta_bisector_left, theta_bisector_right, top_of,
                       voronoi_partition)
from .intervals import INF, Interval, IntervalSet
from .io import DocumentError, ResultDocument, emit_result, parse_instance, parse_result
from .render import render_svg
from .restricted import (brute_force_restricted, build_dp_table, gen_lower_restricted,
                         reference_sweep, restricted_upper_bound_size, solve_restricted_optimal,
                         upper_bound_restricted)
from .unrestricted import (approx_lower_bound, dual_theta_for_k, expand_and_merge,
                           gen_lower_unrestricted, solve_unrestricted_optimal,
                           unrestricted_upper_bound_size, upper_bound_unrestricted)
from .verify import (Violation, check_bisector_coincidence, evenly_spaced,
                     evenly_spaced_counterexample, grid_oracle_verify, is_representative,
                     verify_arrangement)

__version__ = "0.1.0"
