import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from iepoly.engine import (
    CoefficientVector,
    coefficient_at,
    coeffs_series,
    coeffs_window,
    degree,
    resolve_degree_cap,
)
from iepoly.errors import (
    DegreeCapExceeded,
    DomainExceeded,
    InvalidParameters,
    InvalidTriple,
)
from iepoly.represent import Triple

from helpers import coprime_triples, reference_coeffs

ORACLE_TRIPLES = [
    (3, 5, 7),
    (3, 4, 5),
    (3, 5, 8),
    (3, 5, 16),
    (3, 5, 17),
    (2, 3, 5),
    (5, 7, 3),   # unsorted roles
    (3, 4, 1),   # degenerate slot
    (5, 7, 2),
    (4, 5, 21),
    (7, 16, 115),
]


@pytest.mark.parametrize("p,q,r", ORACLE_TRIPLES)
def test_series_matches_long_division(p, q, r):
    vec = coeffs_series(Triple(p, q, r))
    assert vec.coeffs.tolist() == reference_coeffs(p, q, r)
    vec.validate()


@pytest.mark.parametrize("p,q,r", [t for t in ORACLE_TRIPLES if min(t) >= 3])
def test_window_matches_long_division(p, q, r):
    vec = coeffs_window(Triple(p, q, r))
    assert vec.coeffs.tolist() == reference_coeffs(p, q, r)
    vec.validate()


def test_window_rejects_degenerate():
    # the indicator machinery is only wired up for elements >= 3; anything
    # smaller must go through the series engine
    for t in [(3, 5, 1), (3, 5, 2), (2, 3, 5)]:
        with pytest.raises(InvalidTriple):
            coeffs_window(Triple(*t))
        with pytest.raises(InvalidTriple):
            coefficient_at(Triple(*t), 0)


def test_engines_agree_on_small_sweep():
    # every pairwise-coprime triple with modest product, both engines
    for p, q, r in coprime_triples(3000):
        t = Triple(p, q, r)
        s = coeffs_series(t)
        w = coeffs_window(t)
        assert np.array_equal(s.coeffs, w.coeffs), (p, q, r)


def test_half_mode_is_prefix():
    t = Triple(5, 7, 11)
    full = coeffs_series(t)
    half = coeffs_series(t, mode="half")
    n = degree(t) // 2 + 1
    assert half.half and len(half.coeffs) == n
    assert np.array_equal(half.coeffs, full.coeffs[:n])
    assert np.array_equal(half.full_coeffs(), full.coeffs)


@pytest.mark.parametrize("p,q,r", [(3, 5, 7), (5, 7, 11), (7, 5, 3)])
def test_coefficient_at_matches_vector(p, q, r):
    t = Triple(p, q, r)
    vec = coeffs_series(t).coeffs
    d = degree(t)
    for m in [-p * q * r + 1, -1, 0, 1, d // 2, d, d + 1, p * q * r - 1]:
        expect = int(vec[m]) if 0 <= m <= d else 0
        assert coefficient_at(t, m) == expect, m
    with pytest.raises(DomainExceeded):
        coefficient_at(t, p * q * r)


def test_permutation_invariance():
    import itertools

    for base in [(3, 5, 7), (3, 4, 5), (5, 7, 11), (2, 3, 5)]:
        ref = None
        for perm in itertools.permutations(base):
            c = coeffs_series(Triple(*perm)).coeffs
            if ref is None:
                ref = c
            assert np.array_equal(ref, c), perm


def test_structural_invariants():
    t = Triple(7, 11, 13)
    vec = coeffs_series(t)
    c = vec.coeffs
    assert vec.degree == 6 * 10 * 12 == len(c) - 1
    assert c[0] == 1 and c[-1] == 1
    assert int(c.sum()) == 1
    assert np.array_equal(c, c[::-1])  # reciprocal
    vec.validate()


def test_validate_catches_corruption():
    vec = coeffs_series(Triple(3, 5, 7))
    vec.coeffs[3] += 1
    with pytest.raises(AssertionError):
        vec.validate()


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded) as err:
        coeffs_series(Triple(101, 103, 997), cap=1000)
    assert err.value.required > err.value.cap == 1000
    with pytest.raises(DegreeCapExceeded):
        coeffs_window(Triple(101, 103, 997), cap=1000)


def test_degree_cap_env(monkeypatch):
    monkeypatch.setenv("IEPOLY_DEGREE_CAP", "50")
    assert resolve_degree_cap(None) == 50
    with pytest.raises(DegreeCapExceeded):
        coeffs_series(Triple(3, 5, 17))
    monkeypatch.setenv("IEPOLY_DEGREE_CAP", "not-a-number")
    with pytest.raises(InvalidParameters):
        resolve_degree_cap(None)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, len(coprime_triples(4000)) - 1))
def test_engines_agree_property(idx):
    p, q, r = coprime_triples(4000)[idx]
    t = Triple(p, q, r)
    assert np.array_equal(coeffs_series(t).coeffs, coeffs_window(t).coeffs)


def test_coefficient_vector_repr_compact():
    vec = coeffs_series(Triple(3, 5, 7))
    assert "coeffs" not in repr(vec)  # the array itself stays out of repr
    assert len(vec) == vec.degree + 1
