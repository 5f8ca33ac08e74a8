"""Exact curvature of left-invariant metrics on Lie groups, with checks for
hypercomplex and hyper-Hermitian structures.

All arithmetic is over the rationals (:class:`fractions.Fraction`); nothing
is ever rounded.
"""
from .curvature import (
    Connection,
    Curvature,
    CurvatureOperator,
    CurvatureTensor,
    DegeneratePlaneError,
    compute,
    curvature_operator,
    levi_civita,
    plucker,
    r_v_u_u,
    ricci,
    riemann,
    riemann_bruteforce,
    scalar,
    sectional,
)
from .hypercomplex import (
    AlmostComplexStructure,
    HypercomplexTriple,
    full_report,
    is_hyper_hermitian,
    is_integrable,
    nijenhuis,
    quaternion_check,
    search_triples,
    square_check,
)
from .lie import (
    CatalogEntry,
    InnerProduct,
    LieAlgebra,
    MetricLieAlgebra,
    bracket,
    catalog,
    catalog_ids,
    load_metric_lie_algebra,
    validate_lie_algebra,
)
from .linalg import Matrix, Rational, ShapeError, char_poly, format_rational, mat_mul, parse_rational
from .signs import Sign, SignClass, classify, is_semidefinite

__version__ = "0.1.0"
