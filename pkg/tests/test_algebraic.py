"""Tests for exact quadratic-integer arithmetic and support classification."""
from __future__ import annotations

import math

import pytest

from qwcorona.algebraic import (
    AmbiguousMatchError,
    InvalidSupportError,
    QuadExt,
    classify_support,
    common_half_form,
    is_perfect_square,
    recognize_quadext,
    square_free_part,
)


# =========================================================================
# square-free factorization
# =========================================================================


def test_square_free_part_exhaustive_small():
    # n = s^2 * c with c square-free, verified by brute force up to 2000
    for n in range(1, 2001):
        s, c = square_free_part(n)
        assert s * s * c == n
        for f in range(2, int(math.isqrt(c)) + 1):
            assert c % (f * f) != 0


def test_square_free_part_examples():
    assert square_free_part(1) == (1, 1)
    assert square_free_part(4) == (2, 1)
    assert square_free_part(8) == (2, 2)
    assert square_free_part(12) == (2, 3)
    assert square_free_part(340) == (2, 85)
    assert square_free_part(16762772) == (26, 24797)


def test_square_free_part_rejects_nonpositive():
    for n in (0, -1, -4):
        with pytest.raises(ValueError):
            square_free_part(n)


def test_is_perfect_square():
    squares = {k * k for k in range(0, 50)}
    for n in range(0, 2401):
        assert is_perfect_square(n) == (n in squares)
    assert not is_perfect_square(-4)


# =========================================================================
# QuadExt canonical form and arithmetic
# =========================================================================


def test_quadext_canonicalization():
    # square part of delta migrates into b
    assert QuadExt(0, 1, 8) == QuadExt(0, 2, 2)
    # delta = 1 collapses into the rational part
    assert QuadExt(1, 3, 1) == QuadExt(4, 0, 1)
    # b = 0 forgets delta
    assert QuadExt(6, 0, 7) == QuadExt(6, 0, 1)


def test_quadext_from_int_roundtrip():
    for k in range(-20, 21):
        e = QuadExt.from_int(k)
        assert e.is_integer
        assert e.as_integer() == k
        assert float(e) == k


def test_quadext_rejects_bad_delta():
    with pytest.raises(ValueError):
        QuadExt(0, 1, 0)
    with pytest.raises(ValueError):
        QuadExt(0, 1, -2)


def test_quadext_arithmetic_matches_floats():
    vals = [QuadExt(a, b, 2) for a in (-3, 0, 2, 5) for b in (-2, 0, 1, 3)]
    vals += [QuadExt(a, b, 5) for a in (-1, 4) for b in (0, 2)]
    vals += [QuadExt.from_int(k) for k in (-2, 0, 3)]
    for x in vals:
        for y in vals:
            shared = x.b == 0 or y.b == 0 or x.delta == y.delta
            if not shared:
                # incompatible surd parts are not representable at all
                with pytest.raises(ValueError):
                    x + y
                with pytest.raises(ValueError):
                    x * y
                continue
            assert float(x) + float(y) == pytest.approx(float(x + y), abs=1e-12)
            assert float(x) - float(y) == pytest.approx(float(x - y), abs=1e-12)
            d = x.delta if x.b != 0 else y.delta
            num_a = x.a * y.a + x.b * y.b * d
            num_b = x.a * y.b + y.a * x.b
            if num_a % 2 != 0 or num_b % 2 != 0:
                # the exact product leaves the half-integer lattice
                with pytest.raises(ValueError):
                    x * y
                continue
            assert float(x) * float(y) == pytest.approx(float(x * y), abs=1e-9)


def test_quadext_product_identity_conjugate():
    # (a + b sqrt(d))/2 times its conjugate gives (a^2 - b^2 d)/4, which
    # stays on the half-integer lattice exactly when a and b share parity
    for a in range(-6, 7):
        for b in range(-4, 5):
            e = QuadExt(a, b, 3)
            if (a - b) % 2 != 0:
                with pytest.raises(ValueError):
                    e * e.conjugate()
                continue
            prod = e * e.conjugate()
            assert prod.b == 0
            assert float(prod) == pytest.approx((a * a - b * b * 3) / 4.0, abs=1e-12)


def test_quadext_int_mixing():
    e = QuadExt(3, 1, 2)
    assert e + 1 == QuadExt(5, 1, 2)
    assert 2 - e == QuadExt(1, -1, 2)
    assert e * 2 == QuadExt(6, 2, 2)


# =========================================================================
# float recognition
# =========================================================================


def test_recognize_integers_and_halves():
    for k in range(-15, 16):
        assert recognize_quadext(float(k)) == QuadExt.from_int(k)
        assert recognize_quadext(k + 0.5) == QuadExt(2 * k + 1, 0, 1)


def test_recognize_surds():
    cases = [
        ((2 + math.sqrt(2)) / 2, QuadExt(2, 1, 2)),
        (2 - math.sqrt(2), QuadExt(4, -2, 2)),
        ((7 + 3 * math.sqrt(5)) / 2, QuadExt(7, 3, 5)),
        (1 + math.sqrt(85), QuadExt(2, 2, 85)),
    ]
    for x, expected in cases:
        assert recognize_quadext(x) == expected


def test_recognize_rejects_pi():
    assert recognize_quadext(math.pi) is None


def test_recognize_loose_tolerance_is_ambiguous():
    # at 1e-5 both (0 + 2*sqrt(2))/2 and (102 - sqrt(9835))/2 fit sqrt(2)
    with pytest.raises(AmbiguousMatchError):
        recognize_quadext(math.sqrt(2), tolerance=1e-5)


def test_recognize_respects_tolerance():
    x = math.sqrt(2) + 5e-7
    assert recognize_quadext(x, tolerance=1e-9) is None
    # restricting the surd search space removes the far-fetched candidates
    assert recognize_quadext(x, tolerance=1e-5, delta_bound=50) == QuadExt(0, 2, 2)


# =========================================================================
# common half form and parity classification
# =========================================================================


def test_common_half_form_all_integers():
    a, delta, b_list = common_half_form([12, 6, 4])
    assert (a, delta) == (0, 1)
    assert b_list == [24, 12, 8]


def test_common_half_form_shared_surd():
    sup = [QuadExt(4, 2, 2), QuadExt(4, 0, 1), QuadExt(4, -2, 2)]
    a, delta, b_list = common_half_form(sup)
    assert (a, delta) == (4, 2)
    assert b_list == [2, 0, -2]


def test_common_half_form_mixed_a_rejected():
    # integers 2 and 0 cannot both take the form (4 + b sqrt(2))/2
    sup = [QuadExt(4, 2, 2), QuadExt.from_int(2), QuadExt.from_int(0), QuadExt(4, -2, 2)]
    with pytest.raises(InvalidSupportError):
        common_half_form(sup)


def test_common_half_form_mixed_delta_rejected():
    with pytest.raises(InvalidSupportError):
        common_half_form([QuadExt(4, 1, 2), QuadExt(4, 1, 3)])


def test_classify_support_integer_case():
    cls = classify_support([12, 6, 4])
    assert cls.delta == 1
    assert cls.g == 2
    # gaps from the top: 0, 6, 8 -> parities even, odd, even
    assert cls.lambda_plus == (QuadExt.from_int(12), QuadExt.from_int(4))
    assert cls.lambda_minus == (QuadExt.from_int(6),)


def test_classify_support_quadratic_case():
    sup = [QuadExt(4, 3, 2), QuadExt(4, 1, 2), QuadExt(4, -1, 2)]
    cls = classify_support(sup)
    assert cls.delta == 2
    assert cls.g == 1
    assert cls.lambda_plus == (QuadExt(4, 3, 2), QuadExt(4, -1, 2))
    assert cls.lambda_minus == (QuadExt(4, 1, 2),)


def test_classify_support_sorts_descending():
    cls = classify_support([4, 12, 6])
    assert [float(e) for e in cls.support] == [12, 6, 4]


def test_classify_support_odd_doubled_gap_rejected():
    # (5 + sqrt(2))/2 and (5 + 2 sqrt(2))/2 share a and delta but the gap
    # is half-integral in units of sqrt(2)
    with pytest.raises(InvalidSupportError):
        classify_support([QuadExt(5, 2, 2), QuadExt(5, 1, 2)])


def test_classify_support_needs_two_distinct():
    with pytest.raises(ValueError):
        classify_support([QuadExt.from_int(3)])
    with pytest.raises(ValueError):
        classify_support([QuadExt.from_int(3), QuadExt.from_int(3)])


def test_classify_support_top_always_plus():
    # exhaustive small integer supports: the largest element lands in plus
    sets = [
        [0, 2],
        [0, 1, 3],
        [2, 4, 8],
        [1, 5, 7, 11],
        [0, 4, 6, 10, 12],
    ]
    for sup in sets:
        cls = classify_support(sup)
        assert cls.support[0] in cls.lambda_plus
        assert set(cls.lambda_plus) | set(cls.lambda_minus) == set(cls.support)
