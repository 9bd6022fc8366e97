"""Branch inverses of the gamma function as Pick functions, their
Stieltjes densities and integral representations, and the genus-2
extension covering Barnes' G and the double gamma function."""

from .kernel import (ConvergenceError, ContinuationError, DomainError,
                     NewtonConfig, QuadratureConfig, QuadratureError,
                     adaptive_integrate, newton_solve, path_continuation,
                     principal_log)
from .gammafn import (EULER_GAMMA, LOG_SQRT_TWO_PI, CriticalPoint,
                      GammaConstants, PoleError, binet_mu, critical_point,
                      gamma, log_gamma, psi, psi_prime)
from .branches import (K_MAX, BranchInterval, CombDomain, boundary_extension,
                       branch_interval, comb_domain, even_inverse,
                       extended_inverse, in_branch_domain, inverse_branch,
                       joukowski_inverse, log_sin_product, lp_sin_inverse,
                       lp_sin_inverse_real, principal_inverse,
                       sin_comb_inverse)
from .pickrep import (DensityTable, PickParameters, density, density_table,
                      endpoint_exponent, endpoint_identity, pick_parameters,
                      point_mass_sequence, stieltjes_eval, write_density_csv)
from .genus2 import (ClassGDerived, ClassGFunction, Genus2Solver, LambdaRule,
                     barnes_g, barnes_g_function, barnes_lambda_rule,
                     boundary_curve, classify, derived_json, gamma2,
                     gamma2_inverse, genus2_density, genus2_point_mass,
                     genus2_stieltjes_eval, inflection_u, inv_gamma2_function,
                     inverse_f, logf, logf_prime, logf_second, power_rule,
                     quadrant_pick_square, scale_rule, unit_mult_rule)

__version__ = "0.1.0"
