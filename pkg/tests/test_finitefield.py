import numpy as np
import pytest

from gl2lab.exact import FqField, field_make


def test_fermat_in_F5():
    F = field_make(5, 1)
    for a in F.elements():
        assert F.equal(F.pow_int(a, 5), a)


def test_F25_frobenius_order_two():
    F = field_make(5, 2)
    assert F.q == 25
    g = F.gen()
    fr = F.frobenius(g)
    assert not F.equal(fr, g)
    assert F.equal(F.frobenius(fr), g)


def test_F7_multiplicative_group_cyclic_of_order_6():
    # exhaustive order check: some element has order exactly 6 and all
    # element orders divide 6
    F = field_make(7, 1)
    orders = []
    for a in F.elements():
        if F.is_zero(a):
            continue
        orders.append(F.element_order(a))
    assert max(orders) == 6
    assert all(6 % o == 0 for o in orders)


def test_nonprime_p_rejected():
    with pytest.raises(ValueError):
        field_make(6, 1)


def test_reducible_modulus_rejected():
    # x^2 - 1 = (x-1)(x+1) over F_5
    with pytest.raises(ValueError):
        field_make(5, 2, modulus=[-1, 0, 1])


def test_field_axioms_random():
    rng = np.random.default_rng(7)
    for (p, m) in [(5, 1), (7, 1), (5, 2), (3, 3)]:
        F = field_make(p, m)
        a, b, c = (F.random((), rng) for _ in range(3))
        assert F.equal(F.mul(F.add(a, b), c),
                       F.add(F.mul(a, c), F.mul(b, c)))
        if not F.is_zero(a):
            assert F.equal(F.mul(a, F.inv(a)), F.ones(()))
        # Frobenius is additive and multiplicative
        assert F.equal(F.frobenius(F.add(a, b)),
                       F.add(F.frobenius(a), F.frobenius(b)))
        assert F.equal(F.frobenius(F.mul(a, b)),
                       F.mul(F.frobenius(a), F.frobenius(b)))


def test_linear_algebra_kernel_and_solve():
    rng = np.random.default_rng(11)
    for (p, m) in [(7, 1), (5, 2)]:
        F = field_make(p, m)
        A = F.random((4, 6), rng)
        K = F.kernel(A)
        assert K.shape[0] == 6 - F.rank(A)
        for row in K:
            assert np.all(F.is_zero(F.matvec(A, row)))
        x = F.random((6,), rng)
        b = F.matvec(A, x)
        sol = F.solve(A, b)
        assert sol is not None
        assert np.all(F.is_zero(F.sub(F.matvec(A, sol), b)))


def test_matmul_associative():
    rng = np.random.default_rng(3)
    F = field_make(5, 2)
    A = F.random((3, 4), rng)
    B = F.random((4, 2), rng)
    C = F.random((2, 5), rng)
    lhs = F.matmul(F.matmul(A, B), C)
    rhs = F.matmul(A, F.matmul(B, C))
    assert np.array_equal(lhs, rhs)
