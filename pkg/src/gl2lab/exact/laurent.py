"""Laurent polynomials in v over SymPoly, and generic 2x2 matrices.

LaurentV has finitely supported coefficients ``{v-exponent: SymPoly}``.
Substituting v -> v + s (s a SymPoly) is supported on polynomial parts.
"""

from .sympoly import SymPoly


class LaurentV:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for e, c in coeffs.items():
                if isinstance(c, (int,)):
                    c = SymPoly.const(c)
                if not c.is_zero():
                    cur = self.coeffs.get(e)
                    s = c if cur is None else cur + c
                    if s.is_zero():
                        self.coeffs.pop(e, None)
                    else:
                        self.coeffs[e] = s

    @staticmethod
    def zero():
        return LaurentV()

    @staticmethod
    def const(c):
        if isinstance(c, int):
            c = SymPoly.const(c)
        return LaurentV({0: c})

    @staticmethod
    def v(exp=1):
        return LaurentV({exp: SymPoly.const(1)})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = _coerce(other)
        return self.coeffs.keys() == other.coeffs.keys() and all(
            self.coeffs[e] == other.coeffs[e] for e in self.coeffs)

    def __hash__(self):
        return hash(frozenset((e, hash(c)) for e, c in self.coeffs.items()))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            cur = out.get(e)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        r = LaurentV()
        r.coeffs = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentV()
        r.coeffs = {e: -c for e, c in self.coeffs.items()}
        return r

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                c = c1 * c2
                cur = out.get(e)
                s = c if cur is None else cur + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        r = LaurentV()
        r.coeffs = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("no inverses in LaurentV; multiply by v(-k) instead")
        result = LaurentV.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def support(self):
        return sorted(self.coeffs)

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    def derivative(self):
        """d/dv."""
        out = {}
        for e, c in self.coeffs.items():
            if e != 0:
                out[e - 1] = c.scale(e)
        return LaurentV(out)

    def eval_at(self, value):
        """Evaluate at v = value (a SymPoly); requires no poles."""
        total = SymPoly.zero()
        for e, c in self.coeffs.items():
            if e < 0:
                raise ValueError("pole: negative v-exponent %d at evaluation" % e)
            total = total + c * (value ** e)
        return total

    def shift_v(self, s):
        """Substitute v -> v + s for a SymPoly s; polynomial parts only."""
        if any(e < 0 for e in self.coeffs):
            raise ValueError("cannot shift v on negative exponents")
        vs = LaurentV({1: SymPoly.const(1), 0: s})
        result = LaurentV.zero()
        for e, c in sorted(self.coeffs.items()):
            result = result + LaurentV({0: c}) * (vs ** e)
        return result

    def substitute_vars(self, assignments):
        out = LaurentV()
        for e, c in self.coeffs.items():
            cc = c.substitute(assignments)
            if not cc.is_zero():
                out.coeffs[e] = cc
        return out

    def scale(self, c):
        out = {}
        for e, co in self.coeffs.items():
            s = co * c if isinstance(c, SymPoly) else co.scale(c)
            if not s.is_zero():
                out[e] = s
        r = LaurentV()
        r.coeffs = out
        return r

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            cs = "(%r)" % (c,)
            if e == 0:
                bits.append(cs)
            elif e == 1:
                bits.append("%s*v" % cs)
            else:
                bits.append("%s*v^%d" % (cs, e))
        return " + ".join(bits)


def _coerce(x):
    if isinstance(x, LaurentV):
        return x
    if isinstance(x, SymPoly):
        return LaurentV({0: x})
    if isinstance(x, int):
        return LaurentV.const(x)
    raise TypeError("cannot coerce %r to LaurentV" % (x,))


class Mat2:
    """2x2 matrix over any ring with python operators (SymPoly, LaurentV)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    @staticmethod
    def diag(x, y):
        z = x - x
        return Mat2(x, z, z, y)

    def entries(self):
        return [self.a, self.b, self.c, self.d]

    def __add__(self, other):
        return Mat2(self.a + other.a, self.b + other.b,
                    self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return Mat2(self.a - other.a, self.b - other.b,
                    self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(self.a * other.a + self.b * other.c,
                        self.a * other.b + self.b * other.d,
                        self.c * other.a + self.d * other.c,
                        self.c * other.b + self.d * other.d)
        return Mat2(self.a * other, self.b * other, self.c * other, self.d * other)

    def __rmul__(self, other):
        return Mat2(other * self.a, other * self.b, other * self.c, other * self.d)

    def __eq__(self, other):
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def adj(self):
        return Mat2(self.d, -self.b, -self.c, self.a)

    def map(self, fn):
        return Mat2(fn(self.a), fn(self.b), fn(self.c), fn(self.d))

    def __repr__(self):
        return "[[%r, %r], [%r, %r]]" % (self.a, self.b, self.c, self.d)


def laurent_eval_deriv(F, t, minus_p=None):
    """(d/dv)^t at v = -p of a LaurentV or Mat2 over LaurentV.

    Only t in {0, 1} is supported; the result is a SymPoly (entrywise for
    matrices) in the remaining variables.  Negative v-exponents raise.
    """
    if t not in (0, 1):
        raise ValueError("t must be 0 or 1")
    if minus_p is None:
        minus_p = -SymPoly.var("p")
    if isinstance(F, Mat2):
        return F.map(lambda e: laurent_eval_deriv(e, t, minus_p))
    G = F.derivative() if t == 1 else F
    return G.eval_at(minus_p)
