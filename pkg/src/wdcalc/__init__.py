"""Exterior-square L-factors of Weil-Deligne parameters, Bernstein-Zelevinsky
filtrations of segment products, and Levi-distinction certificates for GL(n)."""

from .catalog import Catalog, default_catalog, load_catalog, resolve_catalog
from .cuspidal import CuspidalDatum, ExplicitChar, SelfDual
from .errors import (
    CatalogError,
    CertificateError,
    DomainError,
    LinkedSegmentsError,
    ParseError,
    WdcalcError,
)
from .expr import parse_expr, print_expr, evaluate
from .levi import (
    LeviShape,
    candidate_levis_discrete,
    candidate_levis_generic,
    excluded_discrete,
    excluded_generic,
    reduce_shapes,
)
from .lfactor import LExpr, LFactor, euler_eval, euler_pole_at, has_pole_at, l_expr_of, lgalois_product
from .segments import Segment, bz_factors_product, bz_factors_single, derivative, make_generic, precedes
from .shalika import shalika_criterion
from .sl2 import Sl2Sum, decompose_character, ext2, sp, sym2, tensor
from .weil_deligne import WDRep, WDTerm, ext2_wd, wd_of_steinberg

__version__ = "0.1.0"
