from gl2lab.exact import SymPoly, Frac, groebner_membership, Certificate, Refusal


def V(name):
    return SymPoly.var(name)


def test_monomial_membership():
    x, y = V("x"), V("y")
    res = groebner_membership(x * y, [x])
    assert isinstance(res, Certificate)
    assert res.cofactors[0] == y
    assert res.verify(x * y, [x])


def test_definite_non_membership():
    x = V("x")
    res = groebner_membership(SymPoly.const(1), [x])
    assert isinstance(res, Refusal)
    assert not res.bound_limited  # proper ideal, proven non-member


def test_bound_limited_refusal_reported():
    # x^9 in <x^5> needs a degree-9 cofactor product; a tight bound on the
    # reduction is honest only when nothing was skipped.  Use a case where
    # pairs exceed the bound: (xy+1, y^2+... ) contrived small bound.
    x, y = V("x"), V("y")
    g1 = x * y + x
    g2 = y * y + SymPoly.const(1)
    res = groebner_membership(SymPoly.const(1), [g1, g2], degree_bound=1)
    assert isinstance(res, Refusal)
    assert res.bound_limited


def test_elkik_style_certificate():
    # f = p^3 a (a-1)^2, gens = [G5, x dG5/dx] with G5 = (xy+p)(xy+ap)
    x, y, p = V("x"), V("y"), V("p")
    a = SymPoly.cvar("a")
    G5 = (x * y + p) * (x * y + a * p)
    dG5 = G5.derivative("x")
    f = p ** 3 * a * (a - SymPoly.const(1)) ** 2
    res = groebner_membership(f, [G5, x * dG5], degree_bound=8)
    assert isinstance(res, Certificate)
    assert res.verify(f, [G5, x * dG5])


def test_certificates_reverify_by_expansion():
    x, y, z = V("x"), V("y"), V("z")
    gens = [x * y - z, y * z - x, x * z - y]
    f = (x * y - z) * (x + y) + (y * z - x) * z
    res = groebner_membership(f, gens)
    assert isinstance(res, Certificate)
    total = SymPoly.zero()
    for h, g in zip(res.cofactors, gens):
        total = total + h * g
    assert total == f


def test_laurent_cleared_membership():
    # unit variables with negative exponents are cleared transparently
    u = V("d12*")
    x = V("x")
    f = x * SymPoly.var("d12*", -1)
    res = groebner_membership(f, [x])
    assert isinstance(res, Certificate)
    assert res.verify(f, [x])
