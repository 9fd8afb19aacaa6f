import itertools

import numpy as np
import pytest

from gl2lab.weyl import AffineElt, adm21
from gl2lab.graph import (Weight, SerreWeightLabel, DepthError, label, eta,
                          translate, change_origin, ext1_predict,
                          weights_of_rhobar, jh_of_type, theta,
                          theta_membership, goodness, deepness,
                          tame_type_exponents, predicted_constituents,
                          graph_points, in_graph, sigma_set, w_omega,
                          common_graph_coordinates)


def test_translate_examples_p7():
    mu = Weight([(3, 0)], 7)
    assert translate(mu, (0,)) == label(Weight([(3, 0)], 7))
    t1 = translate(mu, (1,))
    assert t1.canonical_weight().pairs == ((5, 4),)
    tm1 = translate(mu, (-1,))
    assert tm1.diffs == (3,)
    # (0, -3) is the stated representative
    assert tm1 == label(Weight([(0, -3)], 7))


def test_translate_injective_exhaustive():
    for p in (5, 7, 11, 13):
        for f in (1, 2):
            mu = Weight([(3, 1)] * f if p > 5 else [(2, 0)] * f, p)
            seen = {}
            for omega in graph_points(mu):
                lab = translate(mu, omega)
                assert lab.regular()
                assert lab not in seen
                seen[lab] = omega


def test_translate_outside_graph_rejected():
    mu = Weight([(3, 0)], 7)
    with pytest.raises(DepthError):
        translate(mu, (9,))


def test_ext1_lemma_displayed_formulas():
    # t_mu(eta_i) = w_{i-1} t_{-eta_{i-1}} . (mu + eta_i)
    # t_mu(-eta_i) = t_{eta_{i-1}} w_{i-1} . (mu - eta_i)
    p = 11
    for f in (1, 2):
        mu = Weight([(4, 1)] * f, p)
        for i in range(f):
            omega = tuple(1 if j == i else 0 for j in range(f))
            ei = Weight([(1, 0) if j == i else (0, 0) for j in range(f)], p)
            comps = [(1, (0, 0))] * f
            comps[(i - 1) % f] = (-1, (-1, 0))
            elt = AffineElt(comps)
            pred = elt.p_dot((mu + ei).pairs, p)
            assert translate(mu, omega) == label(Weight(pred, p))

            omega_m = tuple(-1 if j == i else 0 for j in range(f))
            comps = [(1, (0, 0))] * f
            comps[(i - 1) % f] = (-1, (0, 1))  # t_{eta} w0 = w0 t_{(0,1)}
            elt = AffineElt(comps)
            pred = elt.p_dot((mu - ei).pairs, p)
            assert translate(mu, omega_m) == label(Weight(pred, p))


def test_change_origin_lambda_r_case():
    # nu in Lambda_R: t_{mu+nu}(omega) = t_mu(omega + nu)
    p = 13
    mu = Weight([(5, 1), (6, 2)], p)
    nu_w = Weight([(1, -1), (-1, 1)], p)  # alpha_0 - alpha_1
    nubar = nu_w.bar()
    for omega in [(0, 0), (1, 2), (-2, 1)]:
        shifted = tuple(o + n for o, n in zip(omega, nubar))
        if in_graph(mu + nu_w, omega) and in_graph(mu, shifted):
            assert translate(mu + nu_w, omega) == translate(mu, shifted)


def test_w_omega_values():
    assert w_omega((1,), 1) == (-1,)
    assert w_omega((0,), 1) == (1,)
    assert w_omega((2,), 1) == (1,)
    # f=2: component j nontrivial iff omega_{j+1} odd
    assert w_omega((1, 0), 2) == (1, -1)
    assert w_omega((0, 1), 2) == (-1, 1)


def test_change_origin_consistency_500():
    rng = np.random.default_rng(17)
    p = 13
    checked = 0
    while checked < 500:
        f = int(rng.integers(1, 3))
        mu = Weight([(int(rng.integers(3, 8)), int(rng.integers(0, 3)))
                     for _ in range(f)], p)
        pts = graph_points(mu)
        if not pts:
            continue
        omega = pts[int(rng.integers(0, len(pts)))]
        lam = translate(mu, omega).canonical_weight()
        pts2 = graph_points(lam)
        if not pts2:
            continue
        omega_p = pts2[int(rng.integers(0, len(pts2)))]
        w = w_omega(omega, f)
        shifted = tuple(w[j] * omega_p[j] + omega[j] for j in range(f))
        if not in_graph(mu, shifted):
            continue
        assert translate(lam, omega_p) == change_origin(mu, omega, omega_p)
        checked += 1


def test_ext1_predict_examples():
    mu = Weight([(4, 0)], 11)
    s0 = translate(mu, (0,))
    s1 = translate(mu, (1,))
    s2 = translate(mu, (2,))
    assert ext1_predict(s0, s1) == 1
    assert ext1_predict(s0, s2) == 0
    assert ext1_predict(s0, s0) == 0
    # symmetric
    assert ext1_predict(s1, s0) == 1


def test_weights_of_rhobar_counts():
    p = 29
    mu = Weight([(10, 1)], p)
    out = weights_of_rhobar((1,), mu)
    base = mu - eta(1, p)
    assert out == {translate(base, (0,)), translate(base, (1,))}
    mu2 = Weight([(10, 1), (12, 2)], p)
    assert len(weights_of_rhobar((1, 1), mu2)) == 4
    shallow = Weight([(1, 0)], p)
    with pytest.raises(DepthError):
        weights_of_rhobar((1,), shallow)


def test_jh_of_type_counts_and_flip():
    p = 29
    mu = Weight([(10, 1)], p)
    nu = eta(1, p)
    jh1 = jh_of_type((1,), (1,), mu, nu)
    assert len(jh1) == 2
    jhw = jh_of_type((1,), (-1,), mu, nu)
    assert len(jhw) == 2
    assert jh1 != jhw


def test_theta_f1_values():
    p = 29
    mu = Weight([(10, 1)], p)
    base = mu - eta(1, p)
    s0 = translate(base, (0,))
    s1 = translate(base, (1,))
    assert theta(s0, (1,), mu) == AffineElt([(1, (1, 2))])
    assert theta(s1, (1,), mu) == AffineElt([(1, (2, 1))])


@pytest.mark.parametrize("f", [1, 2])
def test_theta_equivalence_exhaustive(f):
    p = 29
    mu = Weight([(12, 1)] * f, p)
    for s in itertools.product((1, -1), repeat=f):
        if f > 1 and s != tuple([1] * f):
            continue  # the setup fixes s_j = 1 for j > 0
        W = weights_of_rhobar(s, mu)
        assert len(W) == 2 ** f
        thetas = {}
        for sigma in W:
            thetas[sigma] = theta(sigma, s, mu)
        assert len(set(thetas.values())) == 2 ** f  # bijection
        for w in adm21(f):
            for sigma in W:
                member = theta_membership(sigma, w, s, mu)
                predicted = all(w.comps[j] != thetas[sigma].comps[j]
                                for j in range(f))
                assert member == predicted


def test_goodness():
    p = 5
    mu = Weight([(3, 1)], p)  # mu - eta in C0
    assert goodness((1,), mu)
    assert goodness((-1,), mu)
    # d(i) = 1 for all i: vacuous
    assert goodness((1,), Weight([(17, -3)], p))
    # crafted: s = w0, exponent a multiple of q + 1: mu = (6, 0):
    # mu_1 + p mu_2 = 6 = q + 1 -> not good
    assert not goodness((-1,), Weight([(6, 0)], p))


def test_deepness():
    mu = Weight([(10, 1)], 29)
    assert deepness(mu, 9) and not deepness(mu, 10)


def test_tame_type_exponents():
    p = 7
    spec = tame_type_exponents((1,), Weight([(3, 1)], p))
    assert spec.r == 1 and spec.exponents() == (3, 1)
    spec2 = tame_type_exponents((-1,), Weight([(3, 1)], p))
    assert spec2.r == 2 and spec2.fprime == 2
    e1, e2 = spec2.exponents()
    assert e1 == spec2.a0[0] + p * spec2.a0[1]
    assert e2 == spec2.a0[1] + p * spec2.a0[0]


def test_tame_type_reducible_pattern():
    # rhobar reducible: tau(1, mu) with mu = (r+2, 1) gives exponents
    # (sum (r_j+2) p^j, sum p^j), i.e. (omega^{sum(r_j+1)p^j} + 1) x omega
    p, f = 7, 2
    rs = (2, 3)
    mu = Weight([(r + 2, 1) for r in rs], p)
    spec = tame_type_exponents((1, 1), mu)
    assert spec.r == 1
    e1, e2 = spec.exponents()
    assert e1 == sum((r + 2) * p ** j for j, r in enumerate(rs))
    assert e2 == sum(p ** j for j in range(f))
    assert (e1 - e2) % (p ** f - 1) == \
        sum((r + 1) * p ** j for j, r in enumerate(rs)) % (p ** f - 1)


def test_orbit_invariant_detects_isomorphism():
    p = 7
    a = tame_type_exponents((1,), Weight([(3, 1)], p))
    b = tame_type_exponents((1,), Weight([(1, 3)], p))  # swapped characters
    assert a.orbit_invariant() == b.orbit_invariant()
    c = tame_type_exponents((1,), Weight([(4, 1)], p))
    assert a.orbit_invariant() != c.orbit_invariant()


def test_predicted_constituents_counts():
    p = 29
    lam = Weight([(12, 1)], p)
    D = predicted_constituents("D_lambda_eps", lam, (-1,))
    assert len(D) == 2
    V = predicted_constituents("Vtilde_m2", lam, (-1,))
    assert len(V) == 4
    assert set(V) == {(0,), (1,), (2,), (3,)}
    L2 = predicted_constituents("VJfil", lam, (-1,), bounds=(3,), n=2)
    assert list(L2) == [(3,)]
    L1 = predicted_constituents("VJfil", lam, (-1,), bounds=(3,), n=1)
    assert list(L1) == [(1,)]


def test_jh_disjointness_for_f_le_2():
    p = 29
    for f in (1, 2):
        mu = Weight([(12, 1)] * f, p)
        s = tuple([1] * f)
        W = weights_of_rhobar(s, mu)
        all_sets = {}
        for sigma in W:
            lam = sigma.canonical_weight()
            # find signs with W(rhobar) = {t_lam(-sum_J eps eta)}
            for eps in itertools.product((1, -1), repeat=f):
                cand = set()
                ok = True
                for J in itertools.product((0, 1), repeat=f):
                    pt = tuple(-e * j for e, j in zip(eps, J))
                    if not in_graph(lam, pt):
                        ok = False
                        break
                    cand.add(translate(lam, pt))
                if ok and cand == W:
                    break
            else:
                raise AssertionError("no sign pattern found")
            jh = set(predicted_constituents("Vtilde_m2", lam, eps).values())
            all_sets[sigma] = jh
        sigmas = list(all_sets)
        for i in range(len(sigmas)):
            for j in range(i):
                assert not (all_sets[sigmas[i]] & all_sets[sigmas[j]])


def test_common_graph_requires_central_character():
    p = 11
    a = label(Weight([(4, 0)], p))
    b = label(Weight([(5, 0)], p))
    with pytest.raises(ValueError):
        common_graph_coordinates(a, b)
