import pytest
from hypothesis import given, strategies as st

from amicable_lattice.elliptic import (
    CURVE_CONSTANT,
    CurvePoint,
    beta_roots,
    cubic_model,
    on_curve,
    star_to_curve,
    weierstrass_from_cubic,
)
from amicable_lattice.exact import DomainError, is_perfect_square
from amicable_lattice.rhombus import solve_star, star_residual


def test_square_solution_point():
    pt = star_to_curve(4, 1, 1)
    assert (pt.X, pt.Y, pt.p, pt.q, pt.s) == (1152, 41472, 0, 191102976, 0)
    assert on_curve(pt)
    assert 41472 ** 2 == 1152 ** 3 + 191102976


def test_cubic_model_values():
    u, v, s = cubic_model(4, 1, 1)
    assert (u, v, s) == (1536, 128, 0)
    assert u * u == v ** 3 + s * s * v * v + CURVE_CONSTANT


def test_beta_roots_contain_kappa_n_squared():
    assert 4 in beta_roots(4, 1, 1)


def test_non_solution_rejected():
    with pytest.raises(DomainError):
        star_to_curve(3, 1, 1)


@pytest.mark.parametrize("pt, expected", [
    (CurvePoint(1152, 41472, 0, 191102976, 0), True),
    (CurvePoint(0, 0, 0, 0, 0), True),
    (CurvePoint(1152, 41473, 0, 191102976, 0), False),
])
def test_on_curve(pt, expected):
    assert on_curve(pt) is expected


def test_every_solver_solution_maps_on_curve():
    for sol in solve_star():
        assert on_curve(star_to_curve(*sol.key))


@given(st.integers(min_value=-10 ** 6, max_value=10 ** 6), st.integers(min_value=0, max_value=10 ** 4))
def test_affine_map_is_exact_for_every_s(v, s):
    # Y² = 729u², so the map is right iff X³ + pX + q = 729(v³ + s²v² + 2¹⁸)
    pt = weierstrass_from_cubic(0, v, s)
    assert pt.X ** 3 + pt.p * pt.X + pt.q == 729 * (v ** 3 + s * s * v * v + CURVE_CONSTANT)


def test_intermediate_identity_on_all_square_residuals():
    found = 0
    for kappa in range(1, 25):
        for m in range(1, 8):
            for n in range(1, 8):
                if is_perfect_square(star_residual(kappa, m, n)) is None:
                    continue
                u, v, s = cubic_model(kappa, m, n)
                assert u * u == v ** 3 + s * s * v * v + CURVE_CONSTANT
                assert on_curve(star_to_curve(kappa, m, n))
                found += 1
    assert found == 2  # (1, 2, 2) and (4, 1, 1)
