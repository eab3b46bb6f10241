"""Backend agreement: the compiled kernels must match the pure ones exactly,
and the dispatcher must fall back to big integers before int64 overflows."""
import random
from array import array
from fractions import Fraction

import pytest

from ybforge import _kernels
from ybforge.exactla import mat_from_rows, mat_identity, mat_mul, kron

needs_fast = pytest.mark.skipif(not _kernels.has_fast(),
                                reason="compiled backend unavailable")


def rand_ints(rng, count, lo=-50, hi=50):
    return [rng.randint(lo, hi) for _ in range(count)]


@needs_fast
def test_matmul_agreement_randomized():
    rng = random.Random(101)
    for _ in range(25):
        ra, ca, cb = rng.randint(1, 8), rng.randint(1, 8), rng.randint(1, 8)
        a = rand_ints(rng, ra * ca)
        b = rand_ints(rng, ca * cb)
        pure = _kernels.matmul_pure(a, b, ra, ca, cb)
        out = array("q", [0] * (ra * cb))
        _kernels.matmul_fast(array("q", a), array("q", b), out, ra, ca, cb)
        assert list(out) == pure


@needs_fast
def test_kron_agreement_randomized():
    rng = random.Random(102)
    for _ in range(25):
        ra, ca, rb, cb = (rng.randint(1, 5) for _ in range(4))
        a = rand_ints(rng, ra * ca)
        b = rand_ints(rng, rb * cb)
        pure = _kernels.kron_pure(a, b, ra, ca, rb, cb)
        out = array("q", [0] * (ra * rb * ca * cb))
        _kernels.kron_fast(array("q", a), array("q", b), out, ra, ca, rb, cb)
        assert list(out) == pure


def test_pure_matmul_reference():
    # 2x2 hand case
    got = _kernels.matmul_pure([1, 2, 3, 4], [5, 6, 7, 8], 2, 2, 2)
    assert got == [19, 22, 43, 50]


def test_pure_kron_reference():
    got = _kernels.kron_pure([1, 2], [0, 3], 1, 2, 1, 2)
    assert got == [0, 3, 0, 6]


def test_overflow_boundary_routes_to_pure():
    # numerators large enough that amax_a * amax_b * inner >= 2^63:
    # the dispatcher must not enter the int64 kernel, and the result must
    # still be exact
    big = 2 ** 31
    a = mat_from_rows([[big, big], [1, 0]])
    b = mat_from_rows([[big, 1], [big, 0]])
    prod = mat_mul(a, b)
    assert prod.to_rows()[0][0] == Fraction(2 * big * big)
    assert prod.to_rows()[1] == [Fraction(big), Fraction(1)]


def test_fraction_entries_exact_through_both_paths():
    rng = random.Random(103)
    rows_a = [[Fraction(rng.randint(-9, 9), rng.randint(1, 7))
               for _ in range(6)] for _ in range(6)]
    rows_b = [[Fraction(rng.randint(-9, 9), rng.randint(1, 7))
               for _ in range(6)] for _ in range(6)]
    a, b = mat_from_rows(rows_a), mat_from_rows(rows_b)
    with _kernels.force_pure():
        pure = mat_mul(a, b)
        pure_k = kron(a, b)
    assert mat_mul(a, b) == pure
    assert kron(a, b) == pure_k
    # reference value computed with plain Fractions
    want00 = sum(rows_a[0][k] * rows_b[k][0] for k in range(6))
    assert pure.entry(0, 0) == want00


def test_force_pure_restores():
    before = _kernels.has_fast()
    with _kernels.force_pure():
        assert not _kernels.has_fast()
    assert _kernels.has_fast() == before


def test_identity_products():
    i = mat_identity(9)
    assert mat_mul(i, i) == i
