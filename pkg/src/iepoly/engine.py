"""Two independent exact engines for the coefficient vector.

The polynomial attached to a pairwise-coprime triple {p, q, r} is

    (1 - z^pqr)(1 - z^p)(1 - z^q)(1 - z^r)
    --------------------------------------
    (1 - z^pq)(1 - z^qr)(1 - z^rp)(1 - z)

of degree (p-1)(q-1)(r-1).  The series engine evaluates that quotient as a
truncated power series over int64: multiplying by (1 - z^a) is a lagged
subtraction, dividing is a strided running sum, so the whole vector costs
eight linear passes.  The window engine instead counts representable
integers in four sliding windows derived from the decomposition; the two
routes share no code beyond the triple itself, which is what makes their
agreement a meaningful check.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegreeCapExceeded,
    DomainExceeded,
    InvalidParameters,
    InvalidTriple,
    OverflowDetected,
)
from .represent import Triple, indicator_range, window_count

DEFAULT_DEGREE_CAP = 20_000_000
DEGREE_CAP_ENV = "IEPOLY_DEGREE_CAP"

# Intermediate coefficients must stay below this; trespass means a bug.
_GUARD = 1 << 62

ENGINE_SERIES = "series"
ENGINE_WINDOW = "window"


def degree(t: Triple) -> int:
    return (t.p - 1) * (t.q - 1) * (t.r - 1)


def resolve_degree_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(DEGREE_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameters(f"{DEGREE_CAP_ENV} must be an integer, got {env!r}")
    return DEFAULT_DEGREE_CAP


@dataclass(eq=False)
class CoefficientVector:
    """Coefficients a_0..a_degree (or the lower half) of one polynomial."""

    triple: Triple
    degree: int
    coeffs: np.ndarray = field(repr=False)
    engine: str
    half: bool = False

    def __len__(self) -> int:
        return len(self.coeffs)

    def full_coeffs(self) -> np.ndarray:
        """The complete vector; mirrors the stored half when needed."""
        if not self.half:
            return self.coeffs
        tail = self.coeffs[: self.degree - len(self.coeffs) + 1][::-1]
        return np.concatenate([self.coeffs, tail])

    def coefficient(self, m: int) -> int:
        if m < 0 or m > self.degree:
            return 0
        if self.half and m >= len(self.coeffs):
            m = self.degree - m
        return int(self.coeffs[m])

    def validate(self) -> None:
        """Structural self-checks; raises AssertionError on violation."""
        full = self.full_coeffs()
        assert len(full) == self.degree + 1, "wrong vector length"
        assert full[0] == 1, "leading coefficient must be 1"
        assert full[-1] == 1, "trailing coefficient must be 1"
        assert int(full.sum()) == 1, "coefficients must sum to 1"
        assert np.array_equal(full, full[::-1]), "vector must be palindromic"
        values = np.unique(full)
        assert np.all(np.diff(values) == 1), "coefficient values must form a consecutive run"


def _multiply_factor(c: np.ndarray, a: int) -> None:
    """c *= (1 - z^a), truncated; numpy buffers the overlapping update."""
    if a < len(c):
        c[a:] -= c[:-a]


def _divide_factor(c: np.ndarray, b: int) -> None:
    """c *= 1/(1 - z^b), truncated: c[i] += c[i-b] in increasing order."""
    n = len(c)
    if b >= n:
        return
    if b == 1:
        np.add.accumulate(c, out=c)
        return
    main = n // b * b
    view = c[:main].reshape(-1, b)
    np.add.accumulate(view, axis=0, out=view)
    if main < n:
        c[main:] += c[main - b : n - b]


def _check_guard(c: np.ndarray) -> None:
    if len(c) and (int(c.max()) > _GUARD or int(c.min()) < -_GUARD):
        raise OverflowDetected("intermediate coefficient left the 64-bit guard band")


def coeffs_series(
    t: Triple, mode: str = "full", cap: int | None = None
) -> CoefficientVector:
    """Coefficient vector via truncated power-series arithmetic.

    mode "full" computes all degree+1 coefficients; "half" computes
    indices 0..degree//2 and leaves the rest to the mirror symmetry.
    Handles every valid triple, including ones with an element 1 or 2.
    """
    if mode not in ("full", "half"):
        raise InvalidParameters(f"mode must be 'full' or 'half', got {mode!r}")
    deg = degree(t)
    limit = resolve_degree_cap(cap)
    if deg > limit:
        raise DegreeCapExceeded(deg, limit)
    length = deg // 2 + 1 if mode == "half" else deg + 1
    p, q, r = t.p, t.q, t.r
    c = np.zeros(length, dtype=np.int64)
    c[0] = 1
    for a in (p, q, r, p * q * r):
        _multiply_factor(c, a)
        _check_guard(c)
    for b in (1, p * q, q * r, r * p):
        _divide_factor(c, b)
        _check_guard(c)
    return CoefficientVector(
        triple=t, degree=deg, coeffs=c, engine=ENGINE_SERIES, half=(mode == "half")
    )


def coeffs_window(
    t: Triple, cap: int | None = None, window: int | None = None
) -> CoefficientVector:
    """Coefficient vector via representability window counts.

    a_m is an alternating sum of four length-u window counts, where u is
    the window element (smallest by default; any element gives the same
    vector).  Only fully ternary triples are supported here.
    """
    if not t.is_ternary():
        raise InvalidTriple(f"window engine needs all elements >= 3, got {t}")
    deg = degree(t)
    limit = resolve_degree_cap(cap)
    if deg > limit:
        raise DegreeCapExceeded(deg, limit)
    if window is None:
        u, v, w = t.sorted()
    else:
        u = window
        v, w = t.others(u)
    ind = indicator_range(t, deg + 1)
    prefix = np.zeros(deg + 2, dtype=np.int64)
    np.cumsum(ind, out=prefix[1:])
    off = u + v + w + 1
    padded = np.concatenate([np.zeros(off, dtype=np.int64), prefix])

    def win(d: int) -> np.ndarray:
        # window count of length u ending at m - d, for m = 0..deg
        hi = off + 1 - d
        return padded[hi : hi + deg + 1] - padded[hi - u : hi - u + deg + 1]

    coeffs = win(0) - win(v) - win(w) + win(v + w)
    return CoefficientVector(
        triple=t, degree=deg, coeffs=coeffs, engine=ENGINE_WINDOW, half=False
    )


def coefficient_at(t: Triple, m: int) -> int:
    """Single coefficient a_m without materializing the vector.

    Valid for -product < m < product; indices outside [0, degree] give 0,
    consistently with the window identity itself.
    """
    if not t.is_ternary():
        raise InvalidTriple(f"single-coefficient path needs a ternary triple, got {t}")
    if not -t.product < m < t.product:
        raise DomainExceeded(f"m={m} is outside (-{t.product}, {t.product}) for {t}")
    u, v, w = t.sorted()
    return (
        window_count(u, m, t)
        - window_count(u, m - v, t)
        - window_count(u, m - w, t)
        + window_count(u, m - v - w, t)
    )
