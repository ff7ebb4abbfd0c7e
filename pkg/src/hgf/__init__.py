"""hgf: hyperbolic-type metrics and quasiconformal distortion functions.

The package implements the boundary-weighted metric
``log(1 + c*d(x,y)/sqrt(d(x)d(y)))`` on the unit disk and upper half plane,
the hyperbolic metrics of both domains, the elliptic-integral stack behind
the quasiregular Schwarz lemma (complete elliptic integral, conformal
modulus and its inverse, the plane distortion function, lambda and eta), and
a verification harness that checks the associated inequalities over
parameter grids and seeded random samples.
"""

from hgf._backend import backend_name
from hgf.config import DEFAULT_CONFIG, DistortionParams, SpecFunConfig

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "DistortionParams",
    "SpecFunConfig",
    "__version__",
    "backend_name",
]
