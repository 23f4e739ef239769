"""Exact signature-tensor algebra and toric invariants of Rough Veronese varieties.

Polynomials are dicts mapping words ("12", or "1,10" for d > 9) to
fractions.Fraction coefficients.
"""

from ._core import (
    InternalDisagreement,
    ParseError,
    ResourceError,
    cfl_factorize,
    concat,
    coord_change,
    cubic_obstruction_search,
    hilbert_values,
    invariants,
    is_base_point_free,
    lie_dimension,
    lyndon_count,
    lyndon_words,
    monomialized_signature,
    pair,
    psi,
    pwl_signature,
    quadric_space_dimension,
    rough_signature_level,
    s_poly,
    shuffle,
    span_dimension,
    standard_bracketing,
    toric_degree,
    variety_dimension,
    weighted_monomials,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
