"""Closed-form evaluators: pinned values, stratum Segre identities, leading terms."""

import math
from fractions import Fraction

import pytest

from wallcross import (InsertionWord, Pairings, PreconditionError, RegimeError,
                       WallGeometry, ch_direct_sum, ch_dual, ch_extension_bundles,
                       delta_l0, delta_l0_odd, delta_l1, delta_leading, e_alpha,
                       e_zeta, leading_insertion_class, segre_det_closed,
                       segre_det_determinant, segre_det_recursive,
                       segre_from_ch, segre_sum_closed)
from wallcross.closed import comb0, pow0

from conftest import make_model


def test_binomial_and_power_conventions():
    assert comb0(5, 2) == 10
    assert comb0(3, 5) == 0 and comb0(-1, 0) == 0 and comb0(4, -1) == 0
    assert pow0(Fraction(2), -1) == 0
    assert pow0(Fraction(0), 0) == 1


def test_delta_l0_spec_values():
    wall = WallGeometry.build(p1=-1, q=1, zeta2=-1, zetaK=1)
    pr = Pairings(zeta2=-1, zetaK=1, zetaAlpha=2, sigmaZeta=1, sigmaAlpha=1)
    assert delta_l0(wall, pr, 0, 1).value == -10
    wall0 = WallGeometry.build(p1=-4, q=0, zeta2=-4, zetaK=0)
    pr0 = Pairings(zeta2=-4, zetaK=0, zetaAlpha=2)
    assert delta_l0(wall0, pr0, 0, 1).value == -1
    with pytest.raises(RegimeError):
        delta_l0(WallGeometry.build(p1=-8, q=0, zeta2=-4, zetaK=0), pr0, 0, 1)


def test_delta_l0_q0_single_term_shape():
    # q = 0 collapses to eps (-1)^(r+d) 2^(-d) (zeta.alpha)^(d-2r)
    for d, r, za in ((3, 0, 3), (5, 1, -2), (6, 2, 5)):
        wall = WallGeometry.build(p1=-(d + 3), q=0, zeta2=-(d + 3),
                                  zetaK=(d + 3) % 2)
        pr = Pairings(zeta2=wall.zeta2, zetaK=wall.zetaK, zetaAlpha=za)
        expected = (wall.sign_wall() * (-1) ** ((r + d) % 2)
                    * Fraction(2) ** (-d) * Fraction(za) ** (d - 2 * r))
        assert delta_l0(wall, pr, r, 1).value == expected


def test_delta_l0_odd_reduces_to_plain_word():
    wall = WallGeometry.build(p1=-1, q=1, zeta2=-1, zetaK=1)
    model = make_model(q=1, zeta2=-1, zetaK=1, zetaAlpha=2, sigmaZeta=1, sigmaAlpha=1)
    pr = Pairings(zeta2=-1, zetaK=1, zetaAlpha=2, sigmaZeta=1, sigmaAlpha=1)
    word = InsertionWord(r=0, s=wall.d)
    assert delta_l0_odd(wall, model, word).value == delta_l0(wall, pr, 0, 1).value


def test_delta_l0_odd_parity_and_pin():
    wall = WallGeometry.build(p1=-3, q=1, zeta2=-3, zetaK=1)
    model = make_model(q=1, zeta2=-3, zetaK=1, zetaAlpha=3, sigmaZeta=1,
                       sigmaAlpha=2, sigmaK=1, K2=0, Kalpha=2, alpha2=1)
    odd_parity = InsertionWord(r=0, s=1, gammas=(0,))
    assert delta_l0_odd(wall, model, odd_parity).value == 0
    word = InsertionWord(r=0, s=1, gammas=(0,), threes=(0,))
    assert delta_l0_odd(wall, model, word).value == Fraction(3, 2)
    with pytest.raises(PreconditionError):
        delta_l0_odd(wall, model, InsertionWord(r=0, s=2, gammas=(0,), threes=(0,)))


def test_delta_l0_odd_word_order_sign():
    wall = WallGeometry.build(p1=-4, q=1, zeta2=-4, zetaK=0)  # d = 4, word degree 8
    model = make_model(q=1, zeta2=-4, zetaK=0, zetaAlpha=3, sigmaZeta=2, sigmaAlpha=1)
    w12 = InsertionWord(r=0, s=1, gammas=(0, 1))
    w21 = InsertionWord(r=0, s=1, gammas=(1, 0))
    assert delta_l0_odd(wall, model, w12).value == -delta_l0_odd(wall, model, w21).value


def test_delta_l1_spec_values_and_flips_pins():
    wall = WallGeometry.build(p1=-8, q=0, zeta2=-4, zetaK=0)
    pr = Pairings(zeta2=-4, zetaK=0, zetaAlpha=2, K2=8, alpha2=-1)
    assert delta_l1(wall, pr, 0, 1).value == 12
    assert delta_l1(wall, pr, 1, 1).value == Fraction(-1, 2)
    # regression pins confirmed against the ring oracle (d = 9 wall)
    wall9 = WallGeometry.build(p1=-12, q=0, zeta2=-8, zetaK=0)
    pr9 = Pairings(zeta2=-8, zetaK=0, zetaAlpha=2, K2=8, alpha2=-1)
    assert [delta_l1(wall9, pr9, r, 1).value for r in (0, 1, 2)] == \
        [-32, Fraction(13, 2), Fraction(-7, 4)]
    wall18 = WallGeometry.build(p1=-8, q=1, zeta2=-4, zetaK=0)
    pr18 = Pairings(zeta2=-4, zetaK=0, zetaAlpha=3, sigmaZeta=1, sigmaAlpha=2,
                    sigmaK=1, K2=0, Kalpha=2, alpha2=1)
    assert [delta_l1(wall18, pr18, r, 1).value for r in (0, 1)] == \
        [Fraction(-45927, 2), Fraction(-405, 2)]
    with pytest.raises(RegimeError):
        delta_l1(WallGeometry.build(p1=-4, q=0, zeta2=-4, zetaK=0), pr, 0, 1)


def test_delta_sign_oddness_and_polynomial_degree():
    # value flips with eps, and is a polynomial of the displayed degree in zeta.alpha
    wall = WallGeometry.build(p1=-1, q=1, zeta2=-1, zetaK=1)
    flipped = WallGeometry.build(p1=-1, q=1, zeta2=-1, zetaK=1,
                                 zetaW=-1, w2=-5, wK=3)  # u2 = -1 -> eps flips
    pr = Pairings(zeta2=-1, zetaK=1, zetaAlpha=2, sigmaZeta=1, sigmaAlpha=1)
    assert wall.sign_wall() == -flipped.sign_wall()
    assert delta_l0(wall, pr, 0, 1).value == -delta_l0(flipped, pr, 0, 1).value
    # finite differences: degree in zeta.alpha is at most d - 2r
    wall5 = WallGeometry.build(p1=-8, q=0, zeta2=-8, zetaK=0)
    vals = []
    for za in range(0, 8):
        pr5 = Pairings(zeta2=-8, zetaK=0, zetaAlpha=za)
        vals.append(delta_l0(wall5, pr5, 0, 1).value)
    for _ in range(wall5.d + 1):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    assert all(v == 0 for v in vals)
    # same statements at l = 1
    wall_l1 = WallGeometry.build(p1=-8, q=0, zeta2=-4, zetaK=0)
    flip_l1 = WallGeometry.build(p1=-8, q=0, zeta2=-4, zetaK=0,
                                 zetaW=-4, w2=-8, wK=2)
    assert wall_l1.sign_wall() == -flip_l1.sign_wall()
    vals1 = []
    for za in range(0, wall_l1.d + 3):
        pr1 = Pairings(zeta2=-4, zetaK=0, zetaAlpha=za, K2=8, alpha2=-1)
        vals1.append(delta_l1(wall_l1, pr1, 1, 1).value)
        assert delta_l1(flip_l1, pr1, 1, 1).value == -vals1[-1]
    for _ in range(wall_l1.d - 1):
        vals1 = [b - a for a, b in zip(vals1, vals1[1:])]
    assert all(v == 0 for v in vals1)  # degree at most d - 2r = d - 2


def _l1_model(q=1):
    return make_model(q=q, zeta2=-4, zetaK=2, zetaAlpha=2, sigmaZeta=1,
                      sigmaAlpha=1, sigmaK=2, K2=8, Kalpha=-1, alpha2=-1)


def test_segre_sum_closed_small_n():
    m = _l1_model()
    assert segre_sum_closed(m, 0) == 2 * m.one()
    expected = 8 * e_zeta(m) - 4 * m.even("zeta") - 8 * m.universal_class()
    assert segre_sum_closed(m, 1) == expected


def test_segre_det_routes_agree():
    for q in (0, 1, 2):
        m = _l1_model(q=q)
        for n in range(0, 7):
            closed = segre_det_closed(m, n)
            assert closed == segre_det_recursive(m, n)
            assert closed == segre_det_determinant(m, n)
        assert segre_det_closed(m, 1) == (4 * e_zeta(m) - 2 * m.even("zeta")
                                          - 4 * m.universal_class())


def test_factorial_segre_identity():
    # n! s_n = 2 I_n + 2 C(n,2) K^2 (4 e_zeta)^(n-2)
    for q in (0, 1, 2):
        m = _l1_model(q=q)
        ks = m.even("K")
        four_ez = 4 * e_zeta(m)
        for n in range(0, 7):
            lhs = segre_sum_closed(m, n) * math.factorial(n)
            rhs = 2 * segre_det_closed(m, n)
            if n >= 2:
                rhs = rhs + 2 * comb0(n, 2) * (ks * ks) * four_ez ** (n - 2)
            assert lhs == rhs


def test_segre_sum_matches_extension_determinants():
    m = _l1_model(q=1)
    wall = WallGeometry.build(p1=-8, q=1, zeta2=-4, zetaK=2)
    datas = []
    for k in (0, 1):
        ch_p, ch_m = ch_extension_bundles(m, wall, 1, k)
        datas.append(ch_direct_sum(ch_p, ch_dual(ch_m)))
    for n in range(6):
        det_sum = segre_from_ch(datas[0], n) + segre_from_ch(datas[1], n)
        assert det_sum == segre_sum_closed(m, n)


def test_leading_insertion_classes_l1_against_ring():
    # S_{2,1}, S_{1,1}, S_{2,0} for l = 1, q = 1 computed from the stratum data
    m = _l1_model(q=1)
    wall = WallGeometry.build(p1=-8, q=1, zeta2=-4, zetaK=2)
    alpha_s = m.even("alpha")
    ea = e_alpha(m)
    pt = m.point()

    def ring_sjb(j, b):
        total = m.zero()
        for k in (0, 1):
            ch_p, ch_m = ch_extension_bundles(m, wall, 1, k)
            data = ch_direct_sum(ch_p, ch_dual(ch_m))
            total = total + alpha_s ** j * ea ** b * segre_from_ch(data, 2 - j + 1 - b)
        return total

    assert ring_sjb(2, 1) == leading_insertion_class(m, 1, "2l,q") * pt
    assert ring_sjb(1, 1) == leading_insertion_class(m, 1, "2l-1,q") * pt
    assert ring_sjb(2, 0) == leading_insertion_class(m, 1, "2l,q-1") * pt


def test_leading_insertion_class_small_l():
    m = _l1_model(q=2)
    assert leading_insertion_class(m, 0, "2l,q") == e_alpha(m) ** 2
    a2 = m.pair("alpha", "alpha")
    assert leading_insertion_class(m, 1, "2l,q") == 2 * a2 * e_alpha(m) ** 2
    with pytest.raises(PreconditionError):
        leading_insertion_class(m, 1, "bogus")


def test_delta_leading_matches_l0_tail_terms():
    # the two leading terms are exactly the b = q and b = q-1 terms of delta_l0
    for q in (1, 2):
        for d, r in ((6, 0), (7, 1)):
            zeta2 = -(d + 3 * (1 - q))
            if zeta2 >= 0:
                continue
            wall = WallGeometry.build(p1=zeta2, q=q, zeta2=zeta2, zetaK=zeta2 % 2)
            for za in (1, 2, 3, -4):
                pr = Pairings(zeta2=zeta2, zetaK=wall.zetaK, zetaAlpha=za,
                              sigmaZeta=2, sigmaAlpha=3, alpha2=-1)
                s = d - 2 * r
                tail = Fraction(0)
                sign = -1 if (r + d) % 2 else 1
                for b in (q, q - 1):
                    tail += (sign * Fraction(2) ** (3 * q - b - d) * math.perm(q, b)
                             * comb0(s, b) * pow0(Fraction(za), s - b)
                             * pow0(Fraction(3), b) * pow0(Fraction(2), q - b))
                lead = delta_leading(wall, pr, r)
                assert lead.value == wall.sign_wall() * tail
                assert lead.modulus_exponent == d - 2 * r - q + 2


def test_antisymmetry_under_zeta_reversal():
    # pricing the same wall from the other side flips the sign exactly
    from dataclasses import replace
    from wallcross import (InsertionWord, PairingInput, build_model,
                           delta_oracle_l0, delta_oracle_l1)

    def flip_zeta(pr):
        return replace(pr, zetaK=-pr.zetaK, zetaAlpha=-pr.zetaAlpha,
                       sigmaZeta=-pr.sigmaZeta)

    wall = WallGeometry.build(p1=-1, q=1, zeta2=-1, zetaK=1)
    pr = Pairings(zeta2=-1, zetaK=1, zetaAlpha=2, sigmaZeta=1, sigmaAlpha=1,
                  sigmaK=2, K2=8, Kalpha=1, alpha2=-1)
    rev = wall.reversed()
    assert delta_l0(rev, flip_zeta(pr), 0, 1).value == -delta_l0(wall, pr, 0, 1).value
    model = build_model(PairingInput(q=1, pairings=pr))
    model_rev = build_model(PairingInput(q=1, pairings=flip_zeta(pr)))
    assert delta_oracle_l0(model_rev, rev, InsertionWord(s=1)).value == \
        -delta_oracle_l0(model, wall, InsertionWord(s=1)).value
    wall1 = WallGeometry.build(p1=-8, q=1, zeta2=-4, zetaK=0)
    pr1 = Pairings(zeta2=-4, zetaK=0, zetaAlpha=3, sigmaZeta=1, sigmaAlpha=2,
                   sigmaK=1, K2=0, Kalpha=2, alpha2=1)
    rev1 = wall1.reversed()
    m1 = build_model(PairingInput(q=1, pairings=pr1))
    m1rev = build_model(PairingInput(q=1, pairings=flip_zeta(pr1)))
    for r in (0, 1):
        assert delta_l1(rev1, flip_zeta(pr1), r, 1).value == \
            -delta_l1(wall1, pr1, r, 1).value
        assert delta_oracle_l1(m1rev, rev1, r).value == \
            -delta_oracle_l1(m1, wall1, r).value


def test_delta_leading_preconditions_and_zero_at_origin():
    wall = WallGeometry.build(p1=-12, q=0, zeta2=-4, zetaK=0)  # l = 2, d = 9
    pr = Pairings(zeta2=-4, zetaK=0, zetaAlpha=0, alpha2=-1)
    assert delta_leading(wall, pr, 0).value == 0
    assert delta_leading(wall, pr, 0).modulus_exponent == 9 - 4 - 0 + 2
    with pytest.raises(PreconditionError):
        delta_leading(wall, pr, 3)  # d - 2r < 2l + q
