from fractions import Fraction

import pytest

from leonard_ekr import (DualHahnParams, InvalidParameterArray, KrawtchoukParams, QRacahParams,
                         array_from_eigenvalues, base_class, build, dual_hahn, hamming_preset,
                         johnson_preset, krawtchouk, q_racah, validate)

from conftest import FAMILY_INSTANCES, alternating


@pytest.mark.parametrize("name", sorted(FAMILY_INSTANCES))
def test_instances_validate(name):
    assert validate(build(FAMILY_INSTANCES[name])).ok


def test_johnson_preset_values():
    P = johnson_preset(7, 3)
    assert (P.r, P.s, P.s_star) == (-5, -9, Fraction(-7, 2))
    P = johnson_preset(9, 4)
    assert (P.r, P.s, P.s_star) == (-6, -11, Fraction(-18, 5))
    with pytest.raises(ValueError):
        johnson_preset(6, 3)


def test_johnson_7_3_array():
    p = build(johnson_preset(7, 3))
    assert p.theta == (0, -7, -12, -15)
    assert p.theta_star == (0, Fraction(-7, 2), -7, Fraction(-21, 2))
    assert base_class(p).beta == 2


def test_hamming_preset_values():
    P = hamming_preset(3, 4)
    assert (P.r, P.s, P.s_star) == (6, -3, -3)
    P = hamming_preset(2, 2)
    assert (P.r, P.s, P.s_star) == (2, -2, -2)
    with pytest.raises(ValueError):
        hamming_preset(1, 3)
    assert base_class(build(hamming_preset(4, 3))).beta == 2


def test_dual_hahn_shift_only_moves_theta():
    a = dual_hahn(DualHahnParams(3, -5, -9, "-7/2"))
    b = dual_hahn(DualHahnParams(3, -5, -9, "-7/2", theta0=4))
    assert b.theta == tuple(x + 4 for x in a.theta)
    assert (a.theta_star, a.varphi, a.phi) == (b.theta_star, b.varphi, b.phi)


def test_dual_hahn_r_minus_one_rejected():
    with pytest.raises(InvalidParameterArray):
        dual_hahn(DualHahnParams(3, -1, -9, 2))


def test_krawtchouk_degenerate_and_small():
    with pytest.raises(InvalidParameterArray):
        krawtchouk(KrawtchoukParams(3, 6, 2, 3))
    p = krawtchouk(KrawtchoukParams(1, 5, 2, 3))
    assert p.varphi == (-5,)


def test_q_racah_constraint_and_collision():
    with pytest.raises(InvalidParameterArray, match="constraint violated"):
        q_racah(QRacahParams(3, 2, 3, 5, 7, 1))
    # the documented instance hits s q^{i+j+1} = 1 at (i, j) = (1, 3)
    with pytest.raises(InvalidParameterArray, match=r"theta collision at \(1,3\)"):
        q_racah(QRacahParams(3, 2, Fraction(1, 32), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(InvalidParameterArray):
        q_racah(QRacahParams(3, -1, 3, 5, 7, Fraction(15, 7)))


def test_q_racah_r2_from_constraint():
    P = QRacahParams.with_r2_from_constraint(4, 2, 3, 5, 7)
    assert P.r1 * P.r2 == P.s * P.s_star * P.q**5
    assert base_class(q_racah(P)).beta == Fraction(5, 2)


def test_array_from_eigenvalues_recovers_family():
    p = build(johnson_preset(9, 4))
    assert array_from_eigenvalues(p.theta, p.theta_star, p.varphi[0]) == p


def test_alternating_arrays_have_beta_minus_two():
    for d in (4, 5):
        assert base_class(alternating(d)).beta == -2
