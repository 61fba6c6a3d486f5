"""Exact rank computations for the stable cohomology of universal smooth hypersurfaces."""

from .conf import ConfSpec, GradedDims, conf_bm_poincare, total_conf_dimension, verify_split
from .liegroups import exterior_poincare, gl_poincare, pgl_poincare, verify_gl_step
from .qpoly import IntPoly, gaussian_binomial, poly_mul, series_inverse
from .schubert import (
    SchubertSymbol,
    cell_dimension,
    enumerate_symbols,
    grassmannian_poincare,
    total_betti_sum,
)
from .stablering import (
    GradedRingPresentation,
    RingGenerator,
    degenerate_contradiction,
    fiberwise_chern_coefficient,
    monomial_product,
    ring_poincare,
    ring_presentation,
    serre_einfty,
    twisted_coefficients,
)
from .vassiliev import (
    ParamDims,
    SpectralSequencePage,
    build_e1_page,
    diagonal_sum,
    param_dims,
    stability_cutoff,
)

__version__ = "0.1.0"
