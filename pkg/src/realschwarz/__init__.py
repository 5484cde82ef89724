"""Error function engine, erf-based analytic self-maps, and Schwarz-lemma checks."""

from .checker import check_disk, check_interval, finite_difference_derivative, schwarz_verdict
from .erf_engine import EvalResult, Method, erf, erf_derivative, erf_quadrature, erf_series
from .errors import DomainError, PoleError, ToleranceUnreachable
from .families import MapFamily, evaluate, origin_derivative, rational_boundary_limit

__version__ = "0.1.0"
