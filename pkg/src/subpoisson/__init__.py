"""Sub-Poisson variance proxies, concentration bounds and their checks."""

from .bounds import bennett, bernstein1, bernstein2, bound, bound_curve
from .closure import ProxyCertificate, certificate
from .distributions import Distribution, SampleSet, catalog, parse_descriptor, sample
from .orlicz import psi_norm
from .proxy import ProxyResult, SolverOptions, optimal_proxy
from .special_functions import h, h_inverse, lambert_w0, phi

__all__ = [
    "Distribution", "ProxyCertificate", "ProxyResult", "SampleSet", "SolverOptions",
    "bennett", "bernstein1", "bernstein2", "bound", "bound_curve", "catalog", "certificate",
    "h", "h_inverse", "lambert_w0", "optimal_proxy", "parse_descriptor", "phi", "psi_norm",
    "sample",
]
