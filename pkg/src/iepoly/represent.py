"""Parameter triples and the bounded-coordinate decomposition they induce.

For a pairwise-coprime triple {p, q, r} every integer n has a unique
representation

    n = x*q*r + y*r*p + z*p*q + delta*p*q*r,
    0 <= x < p,  0 <= y < q,  0 <= z < r,  delta an integer,

because x, y, z are forced modulo p, q, r respectively.  An integer
0 <= n < p*q*r is called representable when delta = 0; the indicator of
representable integers drives the window coefficient engine and all the
identity validators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple

import numpy as np

from .arith import in_semigroup, mod_inverse
from .errors import DomainExceeded, InvalidParameters, InvalidTriple

# Vectorized paths accumulate up to three table entries below p*q*r each,
# so this keeps every intermediate inside signed 64 bits.
_PRODUCT_LIMIT = 1 << 60


@dataclass(frozen=True)
class Triple:
    """A pairwise-coprime parameter triple, kept in the order given."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        vals = (self.p, self.q, self.r)
        for v in vals:
            if not isinstance(v, int) or v < 1:
                raise InvalidTriple(f"elements must be positive integers, got {vals}")
        if sum(1 for v in vals if v < 3) > 1:
            raise InvalidTriple(f"at most one element may be below 3, got {vals}")
        for i in range(3):
            for j in range(i + 1, 3):
                if gcd(vals[i], vals[j]) != 1:
                    raise InvalidTriple(
                        f"elements must be pairwise coprime, got {vals}"
                    )
        if self.p * self.q * self.r > _PRODUCT_LIMIT:
            raise InvalidTriple(f"product {vals} exceeds the 64-bit working range")

    @property
    def product(self) -> int:
        return self.p * self.q * self.r

    def is_ternary(self) -> bool:
        """True when all three elements are >= 3."""
        return min(self.p, self.q, self.r) >= 3

    def sorted(self) -> tuple[int, int, int]:
        return tuple(sorted((self.p, self.q, self.r)))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def others(self, pivot: int) -> tuple[int, int]:
        """The two elements besides pivot, in stored order."""
        if pivot not in self.as_tuple():
            raise InvalidParameters(f"pivot {pivot} is not an element of {self}")
        rest = [v for v in self.as_tuple() if v != pivot]
        return (rest[0], rest[1])

    def __str__(self) -> str:
        return f"{{{self.p},{self.q},{self.r}}}"


class Representation(NamedTuple):
    x: int
    y: int
    z: int
    delta: int


class _Context:
    """Cached modular inverses and lookup tables for one triple ordering."""

    def __init__(self, t: Triple):
        p, q, r = t.p, t.q, t.r
        self.triple = t
        self.p, self.q, self.r = p, q, r
        self.qr, self.rp, self.pq = q * r, r * p, p * q
        self.product = p * q * r
        self.inv_qr = mod_inverse(self.qr % p, p) if p > 1 else 0
        self.inv_rp = mod_inverse(self.rp % q, q) if q > 1 else 0
        self.inv_pq = mod_inverse(self.pq % r, r) if r > 1 else 0
        # xtab[n % p] = x_n * q * r, and likewise for y, z
        self.xtab = (np.arange(p, dtype=np.int64) * self.inv_qr % p) * self.qr
        self.ytab = (np.arange(q, dtype=np.int64) * self.inv_rp % q) * self.rp
        self.ztab = (np.arange(r, dtype=np.int64) * self.inv_pq % r) * self.pq


@lru_cache(maxsize=128)
def _context(t: Triple) -> _Context:
    return _Context(t)


def decompose(n: int, t: Triple) -> Representation:
    """Unique bounded-coordinate representation of n for the triple t."""
    c = _context(t)
    x = n % c.p * c.inv_qr % c.p
    y = n % c.q * c.inv_rp % c.q
    z = n % c.r * c.inv_pq % c.r
    delta, rem = divmod(n - x * c.qr - y * c.rp - z * c.pq, c.product)
    if rem != 0:
        raise AssertionError(f"reconstruction failed for n={n}, t={t}")
    return Representation(x, y, z, delta)


def is_representable(n: int, t: Triple) -> bool:
    """Indicator of representable n: delta = 0 in the decomposition.

    Defined for n < product; negative n are never representable.
    """
    c = _context(t)
    if n >= c.product:
        raise DomainExceeded(f"n={n} is outside [{-c.product}, {c.product}) for {t}")
    if n < 0:
        return False
    return decompose(n, t).delta == 0


def indicator_many(ns: np.ndarray, t: Triple) -> np.ndarray:
    """Vectorized representability indicator (uint8) for int64 n < product.

    Negative entries yield 0 without special casing: the reconstructed sum
    of table entries is always nonnegative, so it can never equal n < 0.
    """
    c = _context(t)
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size and int(ns.max()) >= c.product:
        raise DomainExceeded(f"index beyond product {c.product} for {t}")
    tot = c.xtab[ns % c.p]
    tot += c.ytab[ns % c.q]
    tot += c.ztab[ns % c.r]
    return (tot == ns).view(np.uint8)


def indicator_range(t: Triple, stop: int) -> np.ndarray:
    """Representability indicator over [0, stop), stop <= product."""
    c = _context(t)
    if stop > c.product:
        raise DomainExceeded(f"stop={stop} exceeds product {c.product} for {t}")
    return indicator_many(np.arange(max(stop, 0), dtype=np.int64), t)


def semigroup_representative(n: int, t: Triple, pivot: int) -> int:
    """x_n*q + y_n*p, where pivot plays r and p, q are the other elements.

    Equals the smallest N >= 0 with N = x*q + y*p (x, y >= 0) in the class
    of n * pivot^(-1) modulo p*q; computed from that residue directly.
    """
    p, q = t.others(pivot)
    pq = p * q
    c = n * mod_inverse(pivot % pq, pq) % pq
    return c if in_semigroup(c, p, q) else c + pq


def is_representable_via_threshold(n: int, t: Triple, pivot: int) -> bool:
    """Representability decided along an independent route.

    n is representable iff its semigroup representative for the given pivot
    does not exceed n // pivot.  Requires 0 <= n < product.
    """
    if not 0 <= n < t.product:
        raise DomainExceeded(f"n={n} is outside [0, {t.product}) for {t}")
    return semigroup_representative(n, t, pivot) <= n // pivot


def window_count(k: int, m: int, t: Triple) -> int:
    """Number of representable integers in the window (m-k, m].

    Requires k >= 0 and m < product; the window may reach below zero,
    where nothing is representable.
    """
    if k < 0:
        raise InvalidParameters(f"window length must be >= 0, got {k}")
    if m >= t.product:
        raise DomainExceeded(f"m={m} is outside the domain for {t}")
    if k == 0 or m < 0:
        return 0
    lo = max(m - k + 1, 0)
    if lo > m:
        return 0
    return int(indicator_many(np.arange(lo, m + 1, dtype=np.int64), t).sum())
