"""Word-RAM primitives: bit operations and two-word fixed-point numbers."""

from approx_veb.word.bits import lsb, mask_through, msb, shift_signed, word_mask
from approx_veb.word.fixed_point import FixedPoint, Ordering, WordConfig, fp_compare

__all__ = [
    "FixedPoint",
    "Ordering",
    "WordConfig",
    "fp_compare",
    "lsb",
    "mask_through",
    "msb",
    "shift_signed",
    "word_mask",
]
