"""Exact multivariate polynomials with symbolic constants.

Two layers of coefficients:

  * ``CPoly``   -- polynomials in named *constants* (a1, a2, ...) over Q,
  * ``Frac``    -- quotients of CPoly (no gcd; cancellation by exact division),
  * ``SymPoly`` -- polynomials in named *ring variables* with Frac
                   coefficients.

Ring-variable names ending in ``*`` designate units and may carry negative
exponents (the formal inverse of ``d12*`` is just ``d12*`` to the power -1).
The distinguished variable ``p`` is an ordinary polynomial variable; the
p-adic valuation of a SymPoly is the minimal p-exponent over its terms.
"""

from fractions import Fraction


# ---------------------------------------------------------------------------
# polynomials in the symbolic constants


class CPoly:
    """Polynomial over Q in named commuting constants.

    terms: dict mapping sorted tuples ((name, exp), ...) to Fraction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = self.terms.get(mono, Fraction(0)) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    @staticmethod
    def const(c):
        c = Fraction(c)
        return CPoly({(): c} if c else {})

    @staticmethod
    def var(name, exp=1):
        if exp == 0:
            return CPoly.const(1)
        if exp < 0:
            raise ValueError("constants do not have inverses; use Frac")
        return CPoly({((name, exp),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return all(m == () for m in self.terms)

    def const_value(self):
        return self.terms.get((), Fraction(0))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return CPoly(out)

    def __neg__(self):
        return CPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                d = dict(d1)
                for n, e in m2:
                    d[n] = d.get(n, 0) + e
                key = tuple(sorted(d.items()))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return CPoly(out)

    def scale(self, c):
        c = Fraction(c)
        return CPoly({m: co * c for m, co in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, CPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _lead(self):
        """Leading (monomial, coeff) in lex order on sorted monomials."""
        key = max(self.terms, key=lambda m: (sum(e for _, e in m), m))
        return key, self.terms[key]

    def divexact(self, other):
        """Exact quotient self/other, or None if it does not divide."""
        if other.is_zero():
            raise ZeroDivisionError
        rem = CPoly(dict(self.terms))
        lm, lc = other._lead()
        quot = {}
        while not rem.is_zero():
            rm, rc = rem._lead()
            d = dict(rm)
            for n, e in lm:
                d[n] = d.get(n, 0) - e
                if d[n] < 0:
                    return None
            key = tuple(sorted((n, e) for n, e in d.items() if e))
            coeff = rc / lc
            quot[key] = quot.get(key, Fraction(0)) + coeff
            rem = rem - CPoly({key: coeff}) * other
        return CPoly(quot)

    def evaluate(self, values):
        """Substitute Fractions for all constants."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for n, e in m:
                v *= Fraction(values[n]) ** e
            total += v
        return total

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(
                "%s^%d" % (n, e) if e != 1 else n for n, e in m
            )
            if mono:
                bits.append("%s*%s" % (c, mono) if c != 1 else mono)
            else:
                bits.append(str(c))
        return " + ".join(bits)


class Frac:
    """Quotient of two CPoly, reduced only by exact division and content."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = CPoly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = CPoly.const(1)
        else:
            q = num.divexact(den)
            if q is not None:
                num, den = q, CPoly.const(1)
            elif den.is_const():
                num, den = num.scale(1 / den.const_value()), CPoly.const(1)
        self.num = num
        self.den = den

    @staticmethod
    def const(c):
        return Frac(CPoly.const(c))

    @staticmethod
    def var(name):
        return Frac(CPoly.var(name))

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num == self.den

    def __add__(self, other):
        if self.den == other.den:
            return Frac(self.num + other.num, self.den)
        return Frac(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return Frac(self.num * other.num, self.den * other.den)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError
        return Frac(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, Frac):
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        # weak but consistent: hash of evaluated normal form is not available,
        # so hash a crude invariant
        return hash(len(self.num.terms) * 31 + len(self.den.terms))

    def evaluate(self, values):
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return self.num.evaluate(values) / d

    def denominator_conditions(self):
        """The denominator polynomial, as a nonvanishing side condition."""
        return None if self.den.is_const() else self.den

    def __repr__(self):
        if self.den.is_const() and self.den.const_value() == 1:
            return repr(self.num)
        return "(%s)/(%s)" % (self.num, self.den)


FRAC_ZERO = Frac.const(0)
FRAC_ONE = Frac.const(1)


# ---------------------------------------------------------------------------
# the main polynomial ring


def _mono_mul(m1, m2):
    d = dict(m1)
    for n, e in m2:
        d[n] = d.get(n, 0) + e
    return tuple(sorted((n, e) for n, e in d.items() if e))


class SymPoly:
    """Polynomial in ring variables over Frac coefficients.

    terms: dict mapping sorted tuples ((var, exp), ...) to Frac.  Negative
    exponents are allowed exactly for variables whose name ends with ``*``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                for n, e in mono:
                    if e < 0 and not n.endswith("*"):
                        raise ValueError(
                            "negative exponent on non-unit variable %r" % n)
                if not c.is_zero():
                    cur = self.terms.get(mono)
                    s = c if cur is None else cur + c
                    if s.is_zero():
                        self.terms.pop(mono, None)
                    else:
                        self.terms[mono] = s

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero():
        return SymPoly()

    @staticmethod
    def const(c):
        c = Frac.const(c) if not isinstance(c, Frac) else c
        return SymPoly({(): c})

    @staticmethod
    def var(name, exp=1):
        if exp == 0:
            return SymPoly.const(1)
        return SymPoly({((name, exp),): FRAC_ONE})

    @staticmethod
    def cvar(name):
        """A symbolic constant as a degree-0 coefficient."""
        return SymPoly({(): Frac.var(name)})

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[m] == other.terms[m] for m in self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly.const(other)
        out = dict(self.terms)
        merged = SymPoly()
        merged.terms = out
        for m, c in other.terms.items():
            cur = out.get(m)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return merged

    __radd__ = __add__

    def __neg__(self):
        out = SymPoly()
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return SymPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly.const(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = _mono_mul(m1, m2)
                c = c1 * c2
                cur = out.get(key)
                s = c if cur is None else cur + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        r = SymPoly()
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            inv = self.unit_inverse()
            if inv is None:
                raise ValueError("negative power of a non-unit SymPoly")
            return inv ** (-n)
        result = SymPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = Frac.const(c) if not isinstance(c, Frac) else c
        out = SymPoly()
        out.terms = {} if c.is_zero() else {m: co * c for m, co in self.terms.items()}
        return out

    def unit_inverse(self):
        """Inverse if self is a single term in unit variables, else None."""
        if len(self.terms) != 1:
            return None
        (mono, c), = self.terms.items()
        if any(not n.endswith("*") for n, _ in mono):
            return None
        inv_mono = tuple((n, -e) for n, e in mono)
        return SymPoly({inv_mono: c.inverse()})

    # -- structure ---------------------------------------------------------

    def variables(self):
        out = set()
        for m in self.terms:
            out.update(n for n, _ in m)
        return out

    def degree(self, var=None):
        if self.is_zero():
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max((dict(m).get(var, 0) for m in self.terms), default=0)

    def coefficient(self, var, exp):
        """Treat as polynomial in `var`; coefficient of var^exp."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(var, 0) == exp:
                d.pop(var, None)
                out[tuple(sorted(d.items()))] = c
        return SymPoly(out)

    def ord_p(self, var="p"):
        """Minimal var-exponent over terms (None for the zero polynomial)."""
        if self.is_zero():
            return None
        return min(dict(m).get(var, 0) for m in self.terms)

    def divide_by_var(self, var, k=1):
        """Exact division by var^k; raises when a term lacks the factor."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(var, 0) - k
            if e < 0 and not var.endswith("*"):
                raise ValueError("not divisible by %s^%d" % (var, k))
            if e:
                d[var] = e
            else:
                d.pop(var, None)
            out[tuple(sorted(d.items()))] = c
        return SymPoly(out)

    def substitute(self, assignments):
        """Substitute SymPoly values for ring variables."""
        result = SymPoly.zero()
        for m, c in self.terms.items():
            term = SymPoly({(): c})
            for n, e in m:
                if n in assignments:
                    term = term * (assignments[n] ** e)
                else:
                    term = term * SymPoly({((n, e),): FRAC_ONE})
            result = result + term
        return result

    def derivative(self, var):
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(var, 0)
            if e == 0:
                continue
            if e == 1:
                d.pop(var)
            else:
                d[var] = e - 1
            key = tuple(sorted(d.items()))
            add = c * Frac.const(e)
            cur = out.get(key)
            s = add if cur is None else cur + add
            if not s.is_zero():
                out[key] = s
            else:
                out.pop(key, None)
        r = SymPoly()
        r.terms = out
        return r

    def evaluate(self, const_values, var_values):
        """Full numeric evaluation to a Fraction."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c.evaluate(const_values)
            for n, e in m:
                v *= Fraction(var_values[n]) ** e
            total += v
        return total

    def denominator_conditions(self):
        conds = []
        for c in self.terms.values():
            d = c.denominator_conditions()
            if d is not None and d not in conds:
                conds.append(d)
        return conds

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join("%s^%d" % (n, e) if e != 1 else n for n, e in m)
            cs = repr(c)
            if mono:
                bits.append(mono if cs == "1" else "(%s)*%s" % (cs, mono))
            else:
                bits.append(cs)
        return " + ".join(bits)


def sp_vars(names):
    return [SymPoly.var(n) for n in names.split()]
