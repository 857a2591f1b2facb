"""Small exact-arithmetic helpers: residues, inverses, two-generator membership."""

from __future__ import annotations

from math import gcd

from .errors import InvalidParameters, NotInvertible


def least_nonneg_residue(n: int, modulus: int) -> int:
    """Return n mod modulus in [0, modulus)."""
    if modulus < 1:
        raise InvalidParameters(f"modulus must be >= 1, got {modulus}")
    return n % modulus


def mod_inverse(a: int, modulus: int) -> int:
    """Return the inverse of a modulo modulus, in [0, modulus)."""
    if modulus < 2:
        raise InvalidParameters(f"modulus must be >= 2, got {modulus}")
    try:
        return pow(a, -1, modulus)
    except ValueError:
        raise NotInvertible(f"{a} has no inverse modulo {modulus}") from None


def in_semigroup(n: int, p: int, q: int) -> bool:
    """Whether n = x*q + y*p has a solution with integers x, y >= 0.

    p and q must be coprime and >= 2.  Runs in O(1): x is forced modulo p,
    so n is representable iff the smallest admissible x already fits.
    """
    if p < 2 or q < 2:
        raise InvalidParameters(f"generators must be >= 2, got {p}, {q}")
    if gcd(p, q) != 1:
        raise InvalidParameters(f"generators must be coprime, got {p}, {q}")
    if n < 0:
        return False
    x = n * mod_inverse(q, p) % p
    rest = n - x * q
    return rest >= 0 and rest % p == 0
