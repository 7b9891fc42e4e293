"""Word-RAM bit primitives on unsigned ``b``-bit words.

Python integers are unbounded, so every operation here masks or guards
explicitly instead of relying on hardware wrap-around.  Shifts by at
least the word width yield ``0``.
"""

from __future__ import annotations

from approx_veb.errors import DomainError


def word_mask(b: int) -> int:
    """Return the all-ones ``b``-bit word."""
    return (1 << b) - 1


def msb(x: int) -> int:
    """Return the index of the most significant set bit, ``floor(log2 x)``.

    Raises:
        DomainError: If ``x`` is zero ("msb of zero").
    """
    if x <= 0:
        raise DomainError("msb of zero")
    return x.bit_length() - 1


def lsb(x: int) -> int:
    """Return the index of the least significant set bit.

    Raises:
        DomainError: If ``x`` is zero.
    """
    if x <= 0:
        raise DomainError("lsb of zero")
    return (x & -x).bit_length() - 1


def mask_through(q: int, b: int) -> int:
    """Return the mask of bits ``0..q`` inclusive within a ``b``-bit word.

    Built in two steps so that ``q = b - 1`` never needs a ``b``-bit shift.
    """
    if q < 0:
        return 0
    if q >= b - 1:
        return word_mask(b)
    return ((1 << q) - 1) | (1 << q)


def shift_signed(int_part: int, frac_part: int, amount: int, b: int) -> int:
    """Right-shift the fixed-point value ``int_part + frac_part / 2**b`` by ``amount``.

    The two words are treated as one ``2b``-bit concatenation which is
    shifted right by ``b + amount``.  A negative ``amount`` is a left
    shift of the integer part in which the high bits of the fraction
    shift in at the low end.  The result is truncated to ``b`` bits.

    Raises:
        DomainError: If ``|amount| >= 2b``.
    """
    if abs(amount) >= 2 * b:
        raise DomainError(f"shift amount {amount} out of range for {b}-bit words")
    wide = (int_part << b) | frac_part
    total = b + amount
    if total >= 2 * b:
        return 0
    if total >= 0:
        shifted = wide >> total
    else:
        shifted = wide << -total
    return shifted & word_mask(b)
