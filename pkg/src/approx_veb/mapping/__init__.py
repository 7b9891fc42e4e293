"""Universe reductions (multiplicative and additive) onto integer keys."""

from approx_veb.mapping.maps import (
    AdditiveMap,
    KeyMap,
    MultiplicativeMap,
    ceil_log2,
    map_additive,
    map_multiplicative,
    precision_bits,
    reduced_universe_size,
)

__all__ = [
    "AdditiveMap",
    "KeyMap",
    "MultiplicativeMap",
    "ceil_log2",
    "map_additive",
    "map_multiplicative",
    "precision_bits",
    "reduced_universe_size",
]
