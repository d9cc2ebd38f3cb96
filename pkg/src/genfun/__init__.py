"""Exact expansions of rational generating functions with polynomial coefficients."""

from .binet import QuadraticRootData, binet_S2, binet_Y2, closed_form_gm
from .catalog import CatalogEntry, catalog_eval, catalog_lookup, catalog_names, gegenbauer_2F1_crosscheck
from .closed_forms import (
    NestedSumIndex,
    convolution_S_from_Y,
    convolution_S_higher,
    explicit_Y_general,
    explicit_Y_m2,
    explicit_Y_m3,
    pochhammer,
    recurrence_S_next,
    recurrence_Y_next,
)
from .errors import *  # noqa: F401,F403
from .exact import Surd, as_rational, format_rational, surd_to_float
from .expr import parse_polynomial, parse_spec_document, serialize_spec
from .polynomial import Polynomial
from .series import (
    FamilySpec,
    TruncatedSeries,
    expand,
    expand_S,
    expand_S_higher,
    expand_Y,
    expand_Y_higher,
    series_mul,
    series_pow_rational,
    series_reciprocal,
)
from .transforms import euler_inverse, euler_transform, lambert_partial, reciprocal_fib_partial

__version__ = "0.1.0"
