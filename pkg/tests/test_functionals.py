import math

import numpy as np
import pytest

from secstar.caratheodory import measure_equal_atoms, member_from_measure
from secstar.extremal import ClassMember, build_extremal
from secstar.functionals import (K1, an_bound, coefficient_sum_margin,
                                 compute_report, convolution_margin, fs_bound,
                                 sufficient_coefficient_check)
from secstar.series import PowerSeries


def identity_member(order=8):
    c = np.zeros(order + 1)
    c[1] = 1.0
    return ClassMember(PowerSeries(c), provenance="manual")


def test_identity_member_report():
    rep = compute_report(identity_member())
    assert rep.h22 == 0 and rep.h31 == 0
    assert rep.t21 == 1.0 and rep.t31 == 1.0
    assert all(rep.flags.values())


def test_principal_extremal_report():
    rep = compute_report(build_extremal(2, 8))
    assert abs(rep.h22 - 1 / 48) < 1e-15
    assert abs(rep.t21) < 1e-15
    assert abs(rep.t31 - (-1 / 16)) < 1e-15
    assert abs(rep.fs[0.0] - 0.75) < 1e-15
    # a5 = 5/12 exceeds the claimed 1/3: reported, not enforced.
    assert not rep.flags["a5_le_third"]
    assert rep.enforced_flags_pass()


def test_sharp_hankel_values_through_members():
    f3 = member_from_measure(measure_equal_atoms(2), 8)
    assert abs(abs(compute_report(f3).h22) - 0.25) < 1e-12
    f4 = member_from_measure(measure_equal_atoms(3), 8)
    assert abs(abs(compute_report(f4).h31) - 1 / 9) < 1e-12


def test_report_requires_order_five():
    with pytest.raises(ValueError):
        compute_report(identity_member(order=4))


def test_fs_bound_branches():
    assert fs_bound(0.0) == 0.75
    assert fs_bound(1.0) == 0.5
    assert fs_bound(2.0) == 1.25
    assert fs_bound(0.25) == 0.5 and fs_bound(1.25) == 0.5


def test_fs_inequality_on_extremal_grid():
    f = build_extremal(2, 8)
    a2, a3 = f.a(2), f.a(3)
    for mu in np.linspace(-1.0, 3.0, 101):
        assert abs(a3 - mu * a2 * a2) <= fs_bound(float(mu)) + 1e-9


def test_coefficient_sum_margin_identity_member():
    margin = coefficient_sum_margin(identity_member())
    assert abs(margin - (4 - math.cos(1.0) ** 2)) < 1e-15
    assert abs(margin - 3.7080734182735711) < 1e-12


def test_coefficient_sum_margin_extremal_frozen():
    # Frozen from a direct sum over the order-8 coefficients.
    margin = coefficient_sum_margin(build_extremal(2, 8))
    assert abs(margin - 5.1710682382046009) < 1e-12


def test_an_bound_values_and_domain():
    expect4 = math.sqrt((4 - K1) / (16 * K1 - 4))
    assert abs(an_bound(4) - expect4) < 1e-15
    assert abs(an_bound(4) - 2.351091021407249) < 1e-12
    for n in (2, 3):
        with pytest.raises(ValueError, match="corollary inapplicable"):
            an_bound(n)


def test_convolution_margin_identity_member():
    # For the identity the expression is 1 - phi(e^{i theta}) for every z,
    # so the margin is the distance of the boundary curve from w = 1.
    margin = convolution_margin(identity_member(), theta_samples=720,
                                z_radii=8, z_angles=32)
    assert abs(margin - 0.62933413153623885) < 1e-6


def test_convolution_margin_extremal_positive():
    f = build_extremal(2, 32)
    margin = convolution_margin(f, theta_samples=360, z_radii=12, z_angles=48)
    assert margin > 0


def test_sufficient_coefficient_check_unsatisfiable():
    ok, worst = sufficient_coefficient_check(identity_member())
    assert not ok
    assert abs(worst - 4 * math.cos(1) / (1 + math.cos(2))) < 1e-12


def test_t21_unit_iff_a2_zero():
    f3 = member_from_measure(measure_equal_atoms(2), 8)
    rep = compute_report(f3)
    assert abs(rep.a2) < 1e-15 and abs(rep.t21 - 1.0) < 1e-15
    rep2 = compute_report(build_extremal(2, 8))
    assert rep2.t21 < 1.0
