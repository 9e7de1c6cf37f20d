from .field import (
    Field,
    FieldElement,
    FieldError,
    extension_field,
    field_make,
    is_irreducible,
    is_prime,
    pack,
    unpack,
)
from .poly import (
    NEG_INF,
    BiPoly,
    Poly,
    bipoly_translate,
    compose,
    multipoint_eval,
    poly_eval,
    univariate_roots,
    wdeg,
)

__all__ = [
    "Field",
    "FieldElement",
    "FieldError",
    "extension_field",
    "field_make",
    "is_irreducible",
    "is_prime",
    "pack",
    "unpack",
    "NEG_INF",
    "BiPoly",
    "Poly",
    "bipoly_translate",
    "compose",
    "multipoint_eval",
    "poly_eval",
    "univariate_roots",
    "wdeg",
]
