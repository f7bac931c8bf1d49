"""Laurent polynomial arithmetic, parsing, and the builtin registry."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apolyint.poly import KnotId, LaurentPoly2, PolyParseError, builtin_apoly, parse_poly

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0

FIG8_TEXT = "y + y^-1 - x^4 - x^-4 + x^2 + x^-2 + 2"
K52_TEXT = ("1 + y*(-1+2*x^2+2*x^4-x^8+x^10) + y^2*(x^4-x^6+2*x^10+2*x^12-x^14)"
            " + y^3*x^14")


# ------------------------------------------------------------------- parsing

def test_parse_fig8_has_seven_terms():
    p = parse_poly(FIG8_TEXT)
    assert len(p) == 7
    assert p.terms[(0, 1)] == 1
    assert p.terms[(0, -1)] == 1
    assert p.terms[(4, 0)] == -1
    assert p.terms[(-4, 0)] == -1
    assert p.terms[(0, 0)] == 2


def test_parse_zero():
    assert len(parse_poly("0")) == 0
    assert not parse_poly("0")


def test_parse_k52_grouped_form():
    p = parse_poly(K52_TEXT)
    # the displayed polynomial expands to 12 distinct monomials
    assert len(p) == 12
    assert p.terms[(14, 3)] == 1
    assert p.terms[(0, 0)] == 1
    assert p.terms[(0, 1)] == -1
    assert p.terms[(10, 2)] == 2
    assert p.terms[(14, 2)] == -1


def test_parse_exponent_variants():
    assert parse_poly("x^-4") == parse_poly("x^(-4)")
    assert parse_poly("2x^2") == parse_poly("2*x^2")
    assert parse_poly("x y") == parse_poly("x*y")


def test_parse_syntax_error_carries_position():
    with pytest.raises(PolyParseError) as err:
        parse_poly("x + @y")
    assert err.value.position == 4


def test_parse_rejects_non_integer_coefficient():
    with pytest.raises(PolyParseError, match="non-integer"):
        parse_poly("1.5*x")


def test_parse_rejects_trailing_garbage():
    with pytest.raises(PolyParseError):
        parse_poly("x + y)")


def test_print_parse_roundtrip_on_registry():
    for knot in KnotId:
        p = builtin_apoly(knot)
        assert parse_poly(str(p)) == p


# ---------------------------------------------------------------- evaluation

def test_eval_fig8_at_one_one():
    assert builtin_apoly(KnotId.FIG8)(1, 1) == pytest.approx(4.0, abs=1e-14)


def test_eval_fig8_golden_ratio_zero():
    # x^2 + x^-2 = 3 makes x^4 + x^-4 = 7, so 2 - 7 + 3 + 2 = 0
    assert abs(builtin_apoly(KnotId.FIG8)(GOLDEN, 1.0)) < 1e-12


def test_eval_fig8_at_one_minus_one():
    assert abs(builtin_apoly(KnotId.FIG8)(1.0, -1.0)) < 1e-14


def test_eval_zero_base_negative_exponent_raises():
    with pytest.raises(ZeroDivisionError):
        builtin_apoly(KnotId.FIG8)(0.0, 1.0)


def test_eval_complex_inputs():
    p = parse_poly("x*y + 1")
    assert p(1j, 1j) == pytest.approx(-1 + 0j + 1)


# ------------------------------------------------------------------ partials

def test_partials_simple():
    px, py = parse_poly("x^2").partials()
    assert px == parse_poly("2*x")
    assert not py


def test_partials_laurent():
    px, py = parse_poly("y + y^-1").partials()
    assert not px
    assert py == parse_poly("1 - y^-2")


def test_partials_match_central_differences():
    p = builtin_apoly(KnotId.FIG8)
    px, py = p.partials()
    h = 1e-6
    fd_x = (p(1.3 + h, 1.7) - p(1.3 - h, 1.7)) / (2 * h)
    assert abs(px(1.3, 1.7) - fd_x) < 1e-6


def test_partials_random_points_second_order(rng):
    for knot in KnotId:
        p = builtin_apoly(knot)
        px, py = p.partials()
        for _ in range(100):
            x = rng.uniform(0.5, 2.0)
            y = rng.uniform(0.5, 2.0)
            h = 1e-5
            fd_x = (p(x + h, y) - p(x - h, y)) / (2 * h)
            fd_y = (p(x, y + h) - p(x, y - h)) / (2 * h)
            scale = max(1.0, abs(px(x, y)), abs(py(x, y)))
            assert abs(px(x, y) - fd_x) < 1e-7 * scale
            assert abs(py(x, y) - fd_y) < 1e-7 * scale


# ------------------------------------------------------------------- checks

def test_even_x_property():
    assert builtin_apoly(KnotId.FIG8).is_even_in_x()
    assert builtin_apoly(KnotId.K52).is_even_in_x()
    assert not parse_poly("x*y + 1").is_even_in_x()


def test_reciprocal_property():
    assert builtin_apoly(KnotId.FIG8).is_reciprocal()
    assert builtin_apoly(KnotId.K52).is_reciprocal()
    # x^2 y * p(1/x, 1/y) = y + x + 2 x^2 which is not +-p
    assert not parse_poly("x^2 + x*y + 2*y").is_reciprocal()


def test_reciprocal_rejects_zero():
    with pytest.raises(ValueError):
        parse_poly("0").is_reciprocal()


def test_builtin_registry_is_cached_and_valid():
    for knot in KnotId:
        p = builtin_apoly(knot)
        assert p is builtin_apoly(knot)
        assert p.is_even_in_x() and p.is_reciprocal()


# ------------------------------------------------------------ property tests

def _poly_terms():
    return st.dictionaries(
        st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
        st.integers(-9, 9).filter(lambda c: c != 0),
        max_size=8,
    )


@given(_poly_terms())
def test_roundtrip_random(terms):
    p = LaurentPoly2(terms)
    assert parse_poly(str(p)) == p


@given(_poly_terms(), _poly_terms())
@settings(max_examples=60)
def test_eval_is_ring_homomorphism(t1, t2):
    p, q = LaurentPoly2(t1), LaurentPoly2(t2)
    x, y = 1.37, 0.81
    sum_direct = (p + q)(x, y)
    prod_direct = (p * q)(x, y)
    scale = max(1.0, abs(p(x, y)), abs(q(x, y)))
    assert abs(sum_direct - (p(x, y) + q(x, y))) < 1e-12 * scale
    assert abs(prod_direct - p(x, y) * q(x, y)) < 1e-12 * scale * scale


@given(_poly_terms(), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=60)
def test_symmetrized_polynomials_are_reciprocal(terms, m, n):
    q = LaurentPoly2(terms)
    if not q:
        return
    reverse = LaurentPoly2({(-i, -j): c for (i, j), c in q.terms.items()})
    p = q + reverse.shifted(m, n)
    if p:
        assert p.is_reciprocal()
