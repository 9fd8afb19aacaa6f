"""Formal O(p^n) tail tracking.

A tail order is either +infinity, an integer, or N - k for the symbolic
genericity parameter N (constrained by N >= NMIN at suite level).  A
PrecisionExpr pairs an exact SymPoly with such a tail; arithmetic follows
the valuation rules, and equality-as-identity at a claimed precision means
the explicit parts agree exactly while the claimed precision is at most
both tails.
"""

from fractions import Fraction

from ..exact.sympoly import SymPoly

NMIN = 12


class Tail:
    """n_coeff * N + const, or infinity; n_coeff in {0, 1}."""

    __slots__ = ("infinite", "n_coeff", "const")

    def __init__(self, n_coeff=0, const=0, infinite=False):
        self.infinite = bool(infinite)
        self.n_coeff = int(n_coeff)
        self.const = int(const)
        if self.n_coeff not in (0, 1):
            raise ValueError("tail orders are at most linear in N")

    @staticmethod
    def inf():
        return Tail(infinite=True)

    @staticmethod
    def N(const=0):
        return Tail(1, const)

    @staticmethod
    def of(value):
        if isinstance(value, Tail):
            return value
        return Tail(0, int(value))

    def __add__(self, k):
        if self.infinite:
            return self
        return Tail(self.n_coeff, self.const + int(k))

    def __sub__(self, k):
        return self + (-int(k))

    def min_value(self, nmin=NMIN):
        if self.infinite:
            return None
        return self.n_coeff * nmin + self.const

    def leq(self, other, nmin=NMIN):
        """self <= other for all N >= nmin, when decidable; raises else."""
        other = Tail.of(other)
        if other.infinite:
            return True
        if self.infinite:
            return False
        if self.n_coeff == other.n_coeff:
            return self.const <= other.const
        if self.n_coeff == 0:
            # constant <= N + c for all N >= nmin iff constant <= nmin + c
            return self.const <= nmin + other.const
        # N + c <= constant for all N: impossible (N unbounded)
        return False

    def meet(self, other, nmin=NMIN):
        """A tail below both, exact when comparable."""
        other = Tail.of(other)
        if self.infinite:
            return other
        if other.infinite:
            return self
        if self.leq(other, nmin):
            return self
        if other.leq(self, nmin):
            return other
        raise ValueError("incomparable tail orders %r, %r" % (self, other))

    def __eq__(self, other):
        other = Tail.of(other)
        return (self.infinite == other.infinite
                and (self.infinite
                     or (self.n_coeff, self.const) == (other.n_coeff,
                                                       other.const)))

    def __hash__(self):
        return hash((self.infinite, self.n_coeff, self.const))

    def __repr__(self):
        if self.infinite:
            return "inf"
        if self.n_coeff:
            return "N%+d" % self.const if self.const else "N"
        return str(self.const)


class PrecisionExpr:
    """explicit SymPoly + O(p^tail)."""

    __slots__ = ("explicit", "tail")

    def __init__(self, explicit, tail=None):
        if not isinstance(explicit, SymPoly):
            explicit = SymPoly.const(explicit)
        self.explicit = explicit
        self.tail = Tail.inf() if tail is None else Tail.of(tail)

    def ord_p(self):
        v = self.explicit.ord_p()
        return v  # None when the explicit part vanishes

    def __add__(self, other):
        other = _coerce(other)
        return PrecisionExpr(self.explicit + other.explicit,
                             self.tail.meet(other.tail))

    def __neg__(self):
        return PrecisionExpr(-self.explicit, self.tail)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        """tail(xy) >= min(ord(x)+tail(y), tail(x)+ord(y), tail(x)+tail(y));
        vanishing explicit parts drop their candidate (infinite order)."""
        other = _coerce(other)
        sv, ov = self.ord_p(), other.ord_p()
        tails = []
        if not self.tail.infinite and ov is not None:
            tails.append(self.tail + ov)
        if not other.tail.infinite and sv is not None:
            tails.append(other.tail + sv)
        if not (self.tail.infinite or other.tail.infinite):
            s = _tail_sum(self.tail, other.tail)
            if s is not None:
                tails.append(s)
            else:
                # both tails linear in N: their sum 2N + c dominates every
                # remaining candidate N + c' as long as NMIN >= c' - c
                if not tails:
                    raise ValueError("tail order quadratic in N")
                c = self.tail.const + other.tail.const
                for t in tails:
                    if t.n_coeff == 1 and NMIN < t.const - c:
                        raise ValueError("cannot compare 2N tail at NMIN")
        if not tails:
            tail = Tail.inf()
        else:
            # all candidates here are constant or linear in N; take the meet
            tail = tails[0]
            for t in tails[1:]:
                tail = tail.meet(t)
        return PrecisionExpr(self.explicit * other.explicit, tail)

    def divide_by_p(self):
        if self.explicit.is_zero():
            expl = self.explicit
        else:
            expl = self.explicit.divide_by_var("p")
        return PrecisionExpr(expl, self.tail - 1)

    def equals_at(self, other, claimed, nmin=NMIN):
        """Identity at claimed precision: explicit parts equal exactly and
        claimed <= both tails."""
        other = _coerce(other)
        claimed = Tail.of(claimed)
        if self.explicit != other.explicit:
            return False
        return claimed.leq(self.tail, nmin) and claimed.leq(other.tail, nmin)

    def __repr__(self):
        if self.tail.infinite:
            return repr(self.explicit)
        return "%r + O(p^%r)" % (self.explicit, self.tail)


def _tail_sum(a, b):
    if a.infinite or b.infinite:
        return None
    if a.n_coeff + b.n_coeff > 1:
        return None  # quadratic in N; strictly larger than any linear tail
    return Tail(a.n_coeff + b.n_coeff, a.const + b.const)


def _coerce(x):
    if isinstance(x, PrecisionExpr):
        return x
    return PrecisionExpr(x)
