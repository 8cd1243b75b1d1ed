"""N-dimensional Coulomb-Sturmians and their noninteger-quantum-number generalization."""
from .errors import (DomainError, EvaluationError, NumericalFailure, ValidationError)
from .specfun import LaguerreParams, laguerre, laguerre_deriv, log_gamma
from .quadrature import QuadratureRule, gauss_laguerre_rule, integrate, verify_moments
from .orbitals import (GramReport, OrbitalSpec, angular_eigenvalue, gram, normalization,
                       overlap, radial, radial_log, sturmian_energy, validate)
from .odecheck import ResidualReport, radial_derivatives, residual

__version__ = "0.1.0"
