"""Independent pure-Python oracles the numpy engines are tested against.

Everything here favors obvious correctness over speed: dense lists, long
division, and brute-force loops.  Keep these free of imports from the
package so a bug cannot leak into its own oracle.
"""

from math import gcd


def mul_binomial(coeffs: list[int], a: int) -> list[int]:
    """Multiply an ascending coefficient list by (z^a - 1)."""
    out = [0] * (len(coeffs) + a)
    for i, v in enumerate(coeffs):
        out[i + a] += v
        out[i] -= v
    return out


def div_binomial(coeffs: list[int], a: int) -> list[int]:
    """Exact synthetic division of an ascending coefficient list by (z^a - 1)."""
    n = len(coeffs) - 1
    quot = [0] * (n - a + 1)
    rem = list(coeffs)
    for i in range(n, a - 1, -1):
        v = rem[i]
        if v:
            quot[i - a] = v
            rem[i] = 0
            rem[i - a] += v
    assert all(v == 0 for v in rem), "division left a remainder"
    return quot


def reference_coeffs(p: int, q: int, r: int) -> list[int]:
    """Coefficient list via direct long division of the defining quotient."""
    c = [1]
    for a in (p * q * r, p, q, r):
        c = mul_binomial(c, a)
    for b in (p * q, q * r, r * p, 1):
        c = div_binomial(c, b)
    return c


def brute_decompose(n: int, p: int, q: int, r: int):
    """(x, y, z, delta) with n = x*qr + y*rp + z*pq + delta*pqr by search."""
    qr, rp, pq = q * r, r * p, p * q
    for x in range(p):
        for y in range(q):
            rest = n - x * qr - y * rp
            if rest % pq == 0:
                w = rest // pq
                z = w % r
                return x, y, z, (w - z) // r
    raise AssertionError("no decomposition found")  # impossible for coprime triples


def brute_indicator(n: int, p: int, q: int, r: int) -> int:
    if n < 0:
        return 0
    assert n < p * q * r
    return 1 if brute_decompose(n, p, q, r)[3] == 0 else 0


def brute_in_semigroup(n: int, p: int, q: int) -> bool:
    if n < 0:
        return False
    return any((n - x * q) >= 0 and (n - x * q) % p == 0 for x in range(n // q + 1))


def brute_representative(n: int, p: int, q: int, r: int) -> int:
    """Smallest member of <p, q> congruent to n * r^{-1} modulo pq."""
    pq = p * q
    c = n * pow(r % pq, -1, pq) % pq
    while not brute_in_semigroup(c, p, q):
        c += pq
    return c


def coprime_triples(limit: int, lo: int = 3):
    """All pairwise-coprime p < q < r with p*q*r <= limit."""
    out = []
    p = lo
    while p * (p + 1) * (p + 2) <= limit:
        for q in range(p + 1, limit // p + 1):
            if gcd(p, q) != 1:
                continue
            for r in range(q + 1, limit // (p * q) + 1):
                if gcd(r, p) == 1 and gcd(r, q) == 1:
                    out.append((p, q, r))
        p += 1
    return out
