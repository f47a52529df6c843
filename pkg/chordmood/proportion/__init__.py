from .proportion import (
    Proportion,
    ProportionProducts,
    as_rational,
    inverse_numbers,
    mirror,
    normalize_proportion,
    pairwise_ratios,
    products,
)
from .notation import (
    NotationError,
    format_direct,
    format_inverse,
    format_written,
    other_writing,
    parse_proportion,
    parse_proportion_text,
)
