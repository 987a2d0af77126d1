from hypothesis import given, strategies as st

from osctab.laurent import LaurentPolynomial


def poly(d):
    return LaurentPolynomial(d)


def test_zero_and_one():
    assert LaurentPolynomial.zero().is_zero()
    assert LaurentPolynomial.one().eval_at_one() == 1
    assert poly({3: 0}).is_zero()


def test_add_cancels():
    assert (poly({2: 5}) + poly({2: -5})).is_zero()
    assert poly({0: 1, -1: 2}) + poly({1: 3}) == poly({-1: 2, 0: 1, 1: 3})


def test_scale_and_shift():
    p = poly({-1: 1, 2: 3})
    assert p.scale(2) == poly({-1: 2, 2: 6})
    assert p.scale(0).is_zero()
    assert p.shift(3) == poly({2: 1, 5: 3})


def test_eval_and_derivative_at_one():
    p = poly({2: 1, 4: 2})  # y^2 + 2 y^4
    assert p.eval_at_one() == 3
    assert p.derivative_at_one() == 2 + 8


def test_repr_and_json():
    p = poly({2: 1, 4: 2})
    assert repr(p) == "1*y^2 + 2*y^4"
    assert p.to_json_dict() == {"2": "1", "4": "2"}
    assert repr(LaurentPolynomial.zero()) == "0"


coeffs = st.dictionaries(st.integers(-6, 6), st.integers(-50, 50), max_size=6)


@given(coeffs, coeffs)
def test_addition_matches_pointwise_model(d1, d2):
    model = dict(d1)
    for e, c in d2.items():
        model[e] = model.get(e, 0) + c
    assert poly(d1) + poly(d2) == poly(model)


@given(coeffs, st.integers(-10, 10))
def test_eval_commutes_with_scale(d, factor):
    assert poly(d).scale(factor).eval_at_one() == factor * poly(d).eval_at_one()


@given(coeffs, st.integers(-5, 5))
def test_shift_derivative_rule(d, k):
    # d/dy (y^k p) at 1 equals k*p(1) + p'(1)
    p = poly(d)
    assert p.shift(k).derivative_at_one() == k * p.eval_at_one() + p.derivative_at_one()
