"""Finite fields F_{p^m} with vectorized numpy arithmetic.

Elements are numpy int64 arrays whose last axis has length m and holds the
coefficients (ascending degree) of a residue polynomial modulo a fixed monic
irreducible of degree m.  All arithmetic stays well inside int64 range for the
small p used here (p <= 50 or so).
"""

import numpy as np


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_is_irreducible(coeffs, p):
    """Deterministic check for a monic poly over Z/p given as ascending list."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    # x^(p^k) mod g for k = 1..m; irreducible iff x^(p^m) == x and
    # gcd(x^(p^k) - x, g) == 1 for all proper divisors k of m.
    def polymulmod(a, b):
        res = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] = (res[i + j] + ai * bj) % p
        # reduce by monic g
        for i in range(len(res) - 1, m - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j in range(m):
                    res[i - m + j] = (res[i - m + j] - c * coeffs[j]) % p
        return [c % p for c in res[:m]] + [0] * max(0, m - len(res))

    def polypow_xp(a):
        # a^p by square and multiply
        e = p
        result = [1] + [0] * (m - 1)
        base = list(a)
        while e:
            if e & 1:
                result = polymulmod(result, base)
            base = polymulmod(base, base)
            e >>= 1
        return result

    x = [0, 1] + [0] * (m - 2) if m >= 2 else [0]
    fr = list(x)
    for k in range(1, m + 1):
        fr = polypow_xp(fr)
        if k < m and m % k == 0:
            # gcd(fr - x, g) must be 1, i.e. fr != x is necessary; for degree-2
            # and the small m used here, fr != x suffices together with the
            # final fr == x check.
            if fr == x:
                return False
    return fr == x


def conway_like_modulus(p, m):
    """First monic irreducible of degree m over Z/p in lexicographic order."""
    if m == 1:
        return [0, 1]
    bound = p ** m
    for code in range(bound):
        coeffs = []
        c = code
        for _ in range(m):
            coeffs.append(c % p)
            c //= p
        poly = coeffs + [1]
        if _poly_is_irreducible(poly, p):
            return poly
    raise RuntimeError("no irreducible polynomial found")


class FqField:
    """The field with p^m elements.

    Scalars are int64 arrays of shape (..., m); matrices over the field are
    arrays of shape (r, c, m).
    """

    def __init__(self, p, m=1, modulus=None):
        if not is_prime(p):
            raise ValueError("p = %r is not prime" % (p,))
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = int(p)
        self.m = int(m)
        self.q = p ** m
        if modulus is None:
            modulus = conway_like_modulus(p, m)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not _poly_is_irreducible([c % p for c in modulus], p):
            raise ValueError("modulus is reducible")
        self.modulus = [c % p for c in modulus]
        # reduction table: x^(m+k) -> row of coefficients, 0 <= k < m-1
        red = np.zeros((2 * m - 1, m), dtype=np.int64)
        for i in range(m):
            red[i, i] = 1
        for k in range(m, 2 * m - 1):
            # x^k = x * x^(k-1); reduce
            row = np.zeros(m + 1, dtype=np.int64)
            row[1:] = red[k - 1]
            c = row[m]
            row = row[:m].copy()
            if c:
                row = (row - c * np.array(self.modulus[:m], dtype=np.int64)) % p
            red[k] = row % p
        self._red = red

    # -- construction ------------------------------------------------------

    def zeros(self, shape):
        return np.zeros(tuple(shape) + (self.m,), dtype=np.int64)

    def ones(self, shape):
        a = self.zeros(shape)
        a[..., 0] = 1
        return a

    def scalar(self, n):
        """Image of the integer n."""
        a = self.zeros(())
        a[..., 0] = n % self.p
        return a

    def gen(self):
        """The class of x, a generator of the extension over Z/p."""
        a = self.zeros(())
        if self.m == 1:
            raise ValueError("prime field has no extension generator")
        a[..., 1] = 1
        return a

    def eye(self, n):
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i, 0] = 1
        return a

    def embed_ints(self, mat):
        """Integer array -> field array (prime subfield)."""
        arr = np.asarray(mat, dtype=np.int64) % self.p
        out = self.zeros(arr.shape)
        out[..., 0] = arr
        return out

    # -- ring ops ----------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        if self.m == 1:
            return (a * b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        m = self.m
        shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
        a = np.broadcast_to(a, shape + (m,))
        b = np.broadcast_to(b, shape + (m,))
        conv = np.zeros(shape + (2 * m - 1,), dtype=np.int64)
        for i in range(m):
            conv[..., i:i + m] += a[..., i:i + 1] * b
        conv %= self.p
        return np.tensordot(conv, self._red, axes=([-1], [0])) % self.p

    def matmul(self, A, B):
        """Matrix product of (r,k,m) and (k,c,m)."""
        if self.m == 1:
            return (A[..., 0] @ B[..., 0])[..., None] % self.p
        m = self.m
        conv = np.zeros((A.shape[0], B.shape[1], 2 * m - 1), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                conv[:, :, i + j] += A[:, :, i] @ B[:, :, j] % self.p
                conv[:, :, i + j] %= self.p
        return np.tensordot(conv, self._red, axes=([-1], [0])) % self.p

    def matvec(self, A, v):
        return self.matmul(A, v[:, None, :])[:, 0, :]

    def pow_int(self, a, n):
        n = int(n)
        if n < 0:
            return self.pow_int(self.inv(a), -n)
        result = self.ones(np.asarray(a).shape[:-1])
        base = np.asarray(a) % self.p
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        if np.any(self.is_zero(a)):
            raise ZeroDivisionError("inverting zero in F_q")
        return self.pow_int(a, self.q - 2)

    def frobenius(self, a, k=1):
        return self.pow_int(a, self.p ** (k % self.m) if self.m > 1 else 1)

    def is_zero(self, a):
        return np.all(np.asarray(a) % self.p == 0, axis=-1)

    def equal(self, a, b):
        return np.array_equal(np.asarray(a) % self.p, np.asarray(b) % self.p)

    # -- enumeration / encoding --------------------------------------------

    def elements(self):
        """All q field elements as an array of shape (q, m)."""
        out = np.zeros((self.q, self.m), dtype=np.int64)
        for i in range(self.q):
            c = i
            for j in range(self.m):
                out[i, j] = c % self.p
                c //= self.p
        return out

    def encode(self, a):
        """Field elements -> integer codes in [0, q)."""
        a = np.asarray(a) % self.p
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return np.tensordot(a, weights, axes=([-1], [0]))

    def element_order(self, a):
        if np.all(self.is_zero(a)):
            raise ValueError("zero has no multiplicative order")
        one = self.ones(())
        x = a
        for n in range(1, self.q):
            if self.equal(x, one):
                return n
            x = self.mul(x, a)
        raise RuntimeError("order not found")

    # -- linear algebra ----------------------------------------------------

    def rref(self, A):
        """Reduced row echelon form; returns (R, pivot_columns)."""
        R = (np.asarray(A) % self.p).copy()
        rows, cols = R.shape[0], R.shape[1]
        pivots = []
        r = 0
        for c in range(cols):
            piv = None
            for i in range(r, rows):
                if not self.is_zero(R[i, c]):
                    piv = i
                    break
            if piv is None:
                continue
            if piv != r:
                R[[piv, r]] = R[[r, piv]]
            inv = self.inv(R[r, c])
            R[r] = self.mul(R[r], inv[None, :] if self.m > 1 else inv)
            col = R[:, c].copy()
            col[r] = 0
            mask = ~self.is_zero(col)
            if np.any(mask):
                idx = np.nonzero(mask)[0]
                R[idx] = self.sub(R[idx], self.mul(col[idx][:, None, :] if self.m > 1 else col[idx][:, None, :], R[r][None, :, :]))
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return R, pivots

    def rank(self, A):
        if A.shape[0] == 0 or A.shape[1] == 0:
            return 0
        _, pivots = self.rref(A)
        return len(pivots)

    def kernel(self, A):
        """Right kernel basis as rows of shape (k, cols, m)."""
        A = np.asarray(A) % self.p
        rows, cols = A.shape[0], A.shape[1]
        if rows == 0:
            return self.eye(cols)
        R, pivots = self.rref(A)
        free = [c for c in range(cols) if c not in pivots]
        basis = self.zeros((len(free), cols))
        for k, fc in enumerate(free):
            basis[k, fc, 0] = 1
            for i, pc in enumerate(pivots):
                basis[k, pc] = self.neg(R[i, fc])
        return basis

    def solve(self, A, b):
        """One solution x of A x = b, or None."""
        A = np.asarray(A) % self.p
        b = np.asarray(b) % self.p
        aug = np.concatenate([A, b[:, None, :]], axis=1)
        R, pivots = self.rref(aug)
        cols = A.shape[1]
        if cols in pivots:
            return None
        x = self.zeros((cols,))
        for i, pc in enumerate(pivots):
            x[pc] = R[i, cols]
        return x

    def row_space(self, A):
        """Echelonized basis of the row space (zero rows removed)."""
        if A.shape[0] == 0:
            return A
        R, pivots = self.rref(A)
        return R[: len(pivots)]

    def in_row_space(self, v, echelon, pivots=None):
        """Is v in the row space of an rref matrix `echelon`?"""
        if echelon.shape[0] == 0:
            return bool(np.all(self.is_zero(v)))
        w = v.copy() % self.p
        R, piv = self.rref(echelon)
        for i, pc in enumerate(piv):
            c = w[pc].copy()
            if not self.is_zero(c):
                w = self.sub(w, self.mul(c[None, :] if self.m > 1 else c, R[i]))
        return bool(np.all(self.is_zero(w)))

    def det2(self, A):
        """Determinant of a 2x2 field matrix."""
        return self.sub(self.mul(A[0, 0], A[1, 1]), self.mul(A[0, 1], A[1, 0]))

    def random(self, shape, rng):
        return rng.integers(0, self.p, size=tuple(shape) + (self.m,)).astype(np.int64)


def field_make(p, m=1, modulus=None):
    """Construct F_{p^m}; raises on non-prime p or reducible modulus."""
    return FqField(p, m, modulus)
