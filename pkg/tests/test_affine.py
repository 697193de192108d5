"""Affine weights: form, coroot pairings, reflections, the order <=."""

import random
from fractions import Fraction

import pytest

from critlevel.affine import (
    AffineWeight,
    Bounds,
    affine_form,
    affine_root,
    affine_weight,
    delta_weight,
    lambda0,
    leq,
    offset,
    pairing_coroot,
    real_positive_roots,
    reflect,
    rho,
    weight_from_json,
    weight_offset,
    weight_to_json,
    zero_offset,
)
from critlevel.cartan import build_finite_root_system
from critlevel.errors import DomainError

F = Fraction

A1 = build_finite_root_system("A1")
A2 = build_finite_root_system("A2")


def a1_alpha():
    return A1.simple_roots[0]


def test_rho_values():
    r1 = rho(A1)
    assert r1.finite == (F(1),) and r1.level == 2 and r1.delta == 0
    assert rho(A2).level == 3
    for rs in (A1, A2):
        theta = rs.highest_root
        alpha0 = affine_root(rs, tuple(-x for x in theta), 1)
        assert pairing_coroot(rho(rs), alpha0) == 1
        for alpha in rs.simple_roots:
            assert pairing_coroot(rho(rs), affine_root(rs, alpha, 0)) == 1


def test_form_table_entries():
    for rs in (A1, A2):
        assert affine_form(lambda0(rs), delta_weight(rs)) == 1
        assert affine_form(delta_weight(rs), delta_weight(rs)) == 0
        assert affine_form(lambda0(rs), lambda0(rs)) == 0


def test_form_bilinear_expansion_a1():
    alpha = a1_alpha()
    lam = affine_weight(A1, alpha, level=1)          # alpha + Lambda0
    mu = affine_weight(A1, alpha, delta=1)           # alpha + delta
    assert affine_form(lam, mu) == 3                 # (alpha,alpha) + (Lambda0,delta)


def test_form_rs_mismatch():
    with pytest.raises(DomainError):
        affine_form(rho(A1), rho(A2))


def test_pairing_coroot_examples():
    alpha = a1_alpha()
    beta = affine_root(A1, alpha, 1)
    for b in (beta, affine_root(A1, alpha, 0), affine_root(A2, A2.simple_roots[0], -2)):
        assert pairing_coroot(delta_weight(b.rs), b) == 0
    lam = affine_weight(A1, (F(1),), level=-2)       # omega - 2 Lambda0
    assert pairing_coroot(lam, beta) == -1
    assert pairing_coroot(lambda0(A1), affine_root(A1, alpha, 0)) == 0
    with pytest.raises(DomainError):
        pairing_coroot(lam, affine_root(A1, (F(0),), 2))


def test_pairing_matches_form_quotient():
    rng = random.Random(11)
    for rs in (A1, A2):
        roots = real_positive_roots(rs, 3)
        for _ in range(40):
            lam = affine_weight(rs, [F(rng.randint(-5, 5), rng.randint(1, 3))
                                     for _ in range(rs.rank)],
                                level=F(rng.randint(-4, 4)), delta=F(rng.randint(-3, 3)))
            beta = rng.choice(roots)
            bw = beta.as_weight()
            assert pairing_coroot(lam, beta) == 2 * affine_form(lam, bw) / affine_form(bw, bw)


def test_reflect_fixes_delta_and_minus_rho():
    for rs in (A1, A2):
        d = delta_weight(rs)
        for beta in real_positive_roots(rs, 2):
            assert reflect(d, beta) == d
            assert reflect(-rho(rs), beta, dot=True) == -rho(rs)


def test_reflect_critical_example():
    alpha = a1_alpha()
    lam = affine_weight(A1, (F(1),), level=-2)       # critical in A1
    beta = affine_root(A1, alpha, -1)                # alpha - delta
    expected = lam - affine_weight(A1, alpha).scaled(2) + delta_weight(A1, 2)
    assert reflect(lam, beta, dot=True) == expected


def test_reflect_involution_random():
    rng = random.Random(23)
    for rs in (A1, A2):
        roots = real_positive_roots(rs, 3)
        for _ in range(30):
            lam = affine_weight(rs, [F(rng.randint(-6, 6), rng.randint(1, 5))
                                     for _ in range(rs.rank)],
                                level=F(rng.randint(-5, 5), rng.randint(1, 2)),
                                delta=F(rng.randint(-5, 5)))
            beta = rng.choice(roots)
            for dot in (False, True):
                assert reflect(reflect(lam, beta, dot=dot), beta, dot=dot) == lam


def test_form_invariant_under_reflection_words():
    rng = random.Random(5)
    for rs in (A1, A2):
        roots = real_positive_roots(rs, 2)
        for _ in range(30):
            lam = affine_weight(rs, [F(rng.randint(-4, 4), rng.randint(1, 3))
                                     for _ in range(rs.rank)],
                                level=F(rng.randint(-4, 4)), delta=F(rng.randint(-4, 4)))
            mu = affine_weight(rs, [F(rng.randint(-4, 4), rng.randint(1, 3))
                                    for _ in range(rs.rank)],
                                level=F(rng.randint(-4, 4)), delta=F(rng.randint(-4, 4)))
            value = affine_form(lam, mu)
            word = [rng.choice(roots) for _ in range(rng.randint(1, 6))]
            wl, wm = lam, mu
            for beta in word:
                wl = reflect(wl, beta)
                wm = reflect(wm, beta)
            assert affine_form(wl, wm) == value
            # words fix delta, so the dot action commutes with +xi*delta
            xi = F(rng.randint(-3, 3))
            shifted = lam.add_delta(xi)
            img, img_shifted = lam, shifted
            for beta in word:
                img = reflect(img, beta, dot=True)
                img_shifted = reflect(img_shifted, beta, dot=True)
            assert img_shifted == img.add_delta(xi)


def test_leq_examples():
    lam = affine_weight(A1, (F(1),), level=-2)
    assert leq(lam, lam)
    assert leq(lam - delta_weight(A1), lam)
    alpha_w = affine_weight(A1, a1_alpha())
    assert not leq(lam + alpha_w, lam)


def test_leq_partial_order_random():
    rng = random.Random(91)
    rs = A2
    simples = [affine_root(rs, a, 0).as_weight() for a in rs.simple_roots]
    simples.append(affine_root(rs, tuple(-x for x in rs.highest_root), 1).as_weight())

    def random_weight():
        return affine_weight(rs, [F(rng.randint(-3, 3)) for _ in range(rs.rank)],
                             level=F(rng.randint(-3, 3)), delta=F(rng.randint(-3, 3)))

    def random_above(base):
        w = base
        for _ in range(rng.randint(0, 4)):
            w = w + rng.choice(simples)
        return w

    for _ in range(60):
        a = random_weight()
        b = random_above(a)
        c = random_above(b)
        assert leq(a, b) and leq(b, c) and leq(a, c)     # transitivity on a chain
        if leq(b, a):
            assert a == b                                # antisymmetry


def test_offset_examples():
    lam = affine_weight(A1, (F(1),), level=-2)
    off = offset(lam, lam - delta_weight(A1))
    assert off.coords == (1, 1)                          # delta = alpha0 + theta
    assert offset(lam, lam) == zero_offset(A1)
    omega = affine_weight(A1, (F(1),))
    assert offset(lam, lam - omega) is None              # omega not in the root lattice
    assert offset(lam, lam - lambda0(A1)) is None        # level mismatch


def test_offset_weight_round_trip():
    rng = random.Random(3)
    for rs in (A1, A2):
        for _ in range(25):
            coords = [rng.randint(-4, 4) for _ in range(rs.rank + 1)]
            off = weight_offset(rs, coords)
            base = rho(rs)
            recovered = offset(base, base - off.as_weight())
            assert recovered == off


def test_bounds():
    off = weight_offset(A2, (2, 1, -1))
    assert off.delta_depth == 2 and off.finite_height == 2
    assert Bounds(2, 2).contains(off)
    assert not Bounds(1, 2).contains(off)
    assert not Bounds(2, 1).contains(off)
    assert Bounds(3, 5).intersect(Bounds(2, 9)) == Bounds(2, 5)
    with pytest.raises(DomainError):
        Bounds(-1, 0)


def test_weight_json_round_trip():
    lam = affine_weight(A2, (F(1, 3), F(-2)), level=F(-3), delta=F(5, 7))
    data = weight_to_json(lam)
    assert data == {"finite": ["1/3", "-2"], "level": "-3", "delta": "5/7"}
    assert weight_from_json(A2, data) == lam
    with pytest.raises(DomainError):
        weight_from_json(A2, {"finite": ["1/3"], "level": "x"})


def test_imaginary_root_predicates():
    im = affine_root(A1, (F(0),), 2)
    assert im.is_imaginary and not im.is_real and im.is_positive
    re = affine_root(A1, a1_alpha(), -1)
    assert re.is_real and not re.is_positive
    with pytest.raises(DomainError):
        affine_root(A1, (F(0),), 0)
    with pytest.raises(DomainError):
        affine_root(A2, (F(1), F(0)), 1)    # omega1 is not a root
