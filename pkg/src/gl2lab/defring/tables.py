"""The five deformation-ring tables as symbolic data.

Shapes are named t21, w_t21, t12.  Unit variables carry a trailing ``*``
and admit formal inverses; the constants a1, a2, a3 are transcendental
coefficients whose mod-p congruences (in terms of sgn(s_j) and r_j) are
recorded alongside.

Row contents (single-type tables):
  template  : the 2x2 matrix of the Frobenius (v-polynomial entries)
  phi_module: the matrix of the associated phi-module (Laurent entries,
              without the trailing s_j^{-1} v^{(r_j+1,0)} factor)
  height    : row 4, three generators
  monodromy : row 5, eight generators with tails N-4 / N-3 alternating
  igens     : row 6, five generators with tails N-8
  p21_extra, p30_extra: the extra generators of rows 7 and 8
"""

from fractions import Fraction

from ..exact.sympoly import SymPoly, Frac
from ..exact.laurent import LaurentV, Mat2
from .precision import Tail, PrecisionExpr

S = SymPoly.var
C = SymPoly.const


def _a(i):
    return SymPoly.cvar("a%d" % i)


P = S("p")
ONE = C(1)


def vp(k=1):
    """(v+p)^k as LaurentV."""
    return LaurentV({1: ONE, 0: P}) ** k


def lv(poly):
    return LaurentV({0: poly})


def vmono(k):
    return LaurentV({k: ONE})


class ShapeTable:
    def __init__(self, name, a_symbol, variables, units, template,
                 phi_module, height, monodromy, igens, p21_extra, p30_extra,
                 a_congruence):
        self.name = name
        self.a = a_symbol
        self.variables = variables
        self.units = units
        self.template = template
        self.phi_module = phi_module
        self.height = height
        self.monodromy = monodromy
        self.igens = igens
        self.p21_extra = p21_extra
        self.p30_extra = p30_extra
        self.a_congruence = a_congruence

    def unit_part(self):
        """The unit u with det(template) = u (v+p)^3 modulo the heights."""
        det = self.template.det()
        shifted = det.shift_v(-P)  # coefficients of (v+p)^k
        return shifted.coeffs.get(3, SymPoly.zero())

    def monodromy_exprs(self):
        tails = [Tail.N(-4), Tail.N(-3)] * 4
        return [PrecisionExpr(m, t) for m, t in zip(self.monodromy, tails)]

    def igen_exprs(self):
        return [PrecisionExpr(g, Tail.N(-8)) for g in self.igens]


def table1():
    """Shape t_(2,1): Abar = diag(e11* v^2, d22* v)."""
    c11, c12, c21, c22 = S("c11"), S("c12"), S("c21"), S("c22")
    d11, d21 = S("d11"), S("d21")
    e11, d22 = S("e11*"), S("d22*")
    a1 = _a(1)
    template = Mat2(
        vp(2) * lv(e11) + vp() * lv(d11) + lv(c11),
        lv(c12),
        vmono(1) * (vp() * lv(d21) + lv(c21)),
        vp() * lv(d22) + lv(c22))
    phi_module = Mat2(
        vmono(-1) * (vp(2) * lv(e11) + vp() * lv(d11) + lv(c11)),
        lv(c12),
        vp() * lv(d21) + lv(c21),
        vp() * lv(d22) + lv(c22))
    height = [
        c11 * c22 + P * c12 * c21,
        d11 * c22 - c12 * c21 + c11 * d22 + P * c12 * d21,
        e11 * c22 + d11 * d22 - c12 * d21,
    ]
    monodromy = [
        (a1 - 1) * d11 * c22 + a1 * c11 * d22 + P * (d11 * d22 + 2 * e11 * c22),
        c22 * (a1 * c11 + P * d11),
        c12 * ((a1 - 1) * d11 + 2 * P * e11),
        c12 * (a1 * c11 + P * d11),
        (a1 - 1) * c21 * c22 - P * ((a1 - 3) * d21 * c22 + (a1 + 1) * c21 * d22),
        P * ((a1 - 1) * c21 * c22 + P * (d21 * c22 - c21 * d22)),
        (a1 - 1) * c12 * c21 + c11 * d22 - P * ((a1 - 3) * c12 * d21 + d11 * d22),
        P * ((a1 - 1) * c12 * c21 + c11 * d22 + P * c12 * d21),
    ]
    e11i, d22i = S("e11*", -1), S("d22*", -1)
    q = c12 * d21 * d22i          # c12 d21 / d22*
    qe = c12 * d21 * e11i         # c12 d21 / e11*
    igens = [
        d11 + (a1 - 2) * q,
        c22 - (a1 - 1) * qe,
        c21 + _frac((a1 - 1) * (a1 - 2), a1) * c12 * d21 * d21 * e11i * d22i,
        c11 - q * (_frac((a1 - 1) * (a1 - 1) * (a1 - 2), a1) * qe * d22i - P),
        c12 * ((a1 - 1) * (a1 - 2) * qe * d22i - 2 * P),
    ]
    p21_extra = c12
    p30_extra = (a1 - 1) * (a1 - 2) * qe * d22i - 2 * P
    return ShapeTable(
        "t21", "a1",
        ["c11", "d11", "x11*", "c12", "c21", "d21", "c22", "x22*"],
        ["e11*", "d22*"],
        template, phi_module, height, monodromy, igens, p21_extra, p30_extra,
        a_congruence=lambda sgn, r: (-sgn * (r + 1) + 1))


def table2():
    """Shape w0 t_(2,1): Abar = antidiag(d12* v ; d21* v^2)."""
    c11, c12, c21, c22 = S("c11"), S("c12"), S("c21"), S("c22")
    d11, d22 = S("d11"), S("d22")
    d12, d21 = S("d12*"), S("d21*")
    a2 = _a(2)
    template = Mat2(
        vp() * lv(d11) + lv(c11),
        vp() * lv(d12) + lv(c12),
        vmono(1) * (vp() * lv(d21) + lv(c21)),
        vp() * lv(d22) + lv(c22))
    phi_module = Mat2(
        vp() * lv(d12) + lv(c12),
        vmono(-1) * (vp() * lv(d11) + lv(c11)),
        vp() * lv(d22) + lv(c22),
        vp() * lv(d21) + lv(c21))
    height = [
        d11 * d22 - (c12 * d21 + d12 * c21) + P * d12 * d21,
        c12 * c21 - d11 * c22 - c11 * d22 - P * (c12 * d21 + d12 * c21),
        c11 * c22 + P * c12 * c21,
    ]
    monodromy = [
        (a2 - 1) * d11 * c22 + a2 * c11 * d22
        + P * (d11 * d22 - 2 * d12 * c21 + P * d12 * d21),
        a2 * c11 * c22 + P * (d11 * c22 + P * d12 * c21),
        (a2 + 1) * c11 * d12 + (a2 - 1) * d11 * c12,
        a2 * c11 * c12 + P * (d11 * c12 - c11 * d12),
        (a2 - 1) * c21 * c22 - P * ((a2 - 3) * d21 * c22 + (a2 + 1) * c21 * d22),
        P * ((a2 - 1) * c21 * c22 + P * (d21 * c22 - c21 * d22)),
        (a2 - 1) * c12 * c21 + c11 * d22
        - P * ((a2 - 3) * c12 * d21 + (a2 - 1) * d12 * c21
               + d11 * d22 + P * d12 * d21),
        P * ((a2 - 1) * c12 * c21 + c11 * d22 + P * c12 * d21),
    ]
    x = d11 * d22 * S("d12*", -1) * S("d21*", -1)
    xp = x + P
    igens = [
        c21 + (a2 - 1) * d21 * xp,
        c12 - a2 * d12 * xp,
        c11 + _frac(a2 * (a2 - 1), a2 + 1) * d11 * xp,
        c22 - _frac(a2 * (a2 - 1), a2 - 2) * d22 * xp,
        xp * (_frac(a2 * (a2 - 1), (a2 - 2) * (a2 + 1)) * x + P),
    ]
    p21_extra = xp
    p30_extra = _frac(a2 * (a2 - 1), (a2 - 2) * (a2 + 1)) * x + P
    return ShapeTable(
        "w_t21", "a2",
        ["c11", "d11", "c12", "x12*", "c21", "x21*", "c22", "d22"],
        ["d12*", "d21*"],
        template, phi_module, height, monodromy, igens, p21_extra, p30_extra,
        a_congruence=lambda sgn, r: (sgn * (r + 1) + 1))


def table3():
    """Shape t_(1,2): Abar = diag(d11* v, e22* v^2)."""
    c11, c12, c21, c22 = S("c11"), S("c12"), S("c21"), S("c22")
    d12, d22 = S("d12"), S("d22")
    d11, e22 = S("d11*"), S("e22*")
    a3 = _a(3)
    template = Mat2(
        vp() * lv(d11) + lv(c11),
        vp() * lv(d12) + lv(c12),
        vmono(1) * lv(c21),
        vp(2) * lv(e22) + vp() * lv(d22) + lv(c22))
    phi_module = Mat2(
        vp() * lv(d11) + lv(c11),
        vmono(-1) * (vp() * lv(d12) + lv(c12)),
        vmono(1) * lv(c21),
        vmono(-1) * (vp(2) * lv(e22) + vp() * lv(d22) + lv(c22)))
    height = [
        c11 * c22 + P * c12 * c21,
        c11 * d22 - c12 * c21 + d11 * c22 + P * d12 * c21,
        c11 * e22 + d11 * d22 - d12 * c21,
    ]
    monodromy = [
        a3 * c11 * d22 + (a3 - 1) * d11 * c22 - P * (d11 * d22 + 2 * c11 * e22),
        c11 * ((a3 - 1) * c22 - P * d22),
        c21 * (a3 * d22 - 2 * P * e22),
        c21 * ((a3 - 1) * c22 - P * d22),
        a3 * c11 * c12 - P * ((a3 + 2) * c11 * d12 + (a3 - 2) * d11 * c12),
        P * (a3 * c11 * c12 - P * (c11 * d12 - d11 * c12)),
        a3 * c12 * c21 - d11 * c22 - P * ((a3 + 2) * d12 * c21 - d11 * d22),
        P * (a3 * c12 * c21 - d11 * c22 - P * d12 * c21),
    ]
    d11i, e22i = S("d11*", -1), S("e22*", -1)
    q = d12 * c21 * d11i          # d12 c21 / d11*
    qe = d12 * c21 * e22i         # d12 c21 / e22*
    igens = [
        d22 - (a3 + 1) * q,
        c11 + a3 * qe,
        c12 - _frac(a3 * (a3 + 1), a3 - 1) * d12 * d12 * c21 * d11i * e22i,
        c22 - q * (_frac(a3 * a3 * (a3 + 1), a3 - 1) * qe * d11i - P),
        c21 * (a3 * (a3 + 1) * qe * d11i - 2 * P),
    ]
    p21_extra = c21
    p30_extra = a3 * (a3 + 1) * qe * d11i - 2 * P
    return ShapeTable(
        "t12", "a3",
        ["c11", "x11*", "c12", "d12", "c21", "c22", "d22", "x22*"],
        ["d11*", "e22*"],
        template, phi_module, height, monodromy, igens, p21_extra, p30_extra,
        a_congruence=lambda sgn, r: (-sgn * (r + 1) - 1))


def _frac(num, den):
    """num/den as a degree-0 SymPoly with rational-function coefficient."""
    if isinstance(num, SymPoly):
        nf = _as_frac(num)
    else:
        nf = Frac.const(num)
    df = _as_frac(den) if isinstance(den, SymPoly) else Frac.const(den)
    return SymPoly({(): nf / df})


def _as_frac(poly):
    if set(poly.terms) != {()} and poly.terms:
        raise ValueError("expected a constant-only SymPoly")
    return poly.terms.get((), Frac.const(0))


# ---------------------------------------------------------------------------
# multi-type tables


class MultiTypeTable:
    """Tables 4 and 5: rows of I_w at an embedding, per shape index i."""

    def __init__(self, name, b_var, igens_by_index, extras_by_index):
        self.name = name
        self.b_var = b_var
        self.igens = igens_by_index          # {i: [generators]}
        self.extras = extras_by_index        # {i: (p21_extra, p30_extra)}

    def igen_exprs(self, i):
        return [PrecisionExpr(g, Tail.inf() if k == 0 else Tail.N(-8))
                for k, g in enumerate(self.igens[i])]


def table4():
    """Multi-type table for target shape t_(1,2): shapes i=1 and i=2."""
    c11, c12, c21, c22 = S("c11"), S("c12"), S("c21"), S("c22")
    d11, d22, b12 = S("d11"), S("d22"), S("b12")
    d12, d21 = S("d12*"), S("d21*")
    d12i, d21i = S("d12*", -1), S("d21*", -1)
    a1, a2 = _a(1), _a(2)
    x = d11 * d22 * d12i * d21i
    xp = x + P
    i1 = [
        c11 + P * d11,
        c12 - P * d12 + (a1 - 2) * d11 * d22 * d21i,
        c21 - (a1 - 1) * d11 * d22 * d12i,
        c22 + _frac((a1 - 1) * (a1 - 2), a1) * d11 * d22 * d22 * d12i * d21i,
        b12 - P * c12 - d11 * d22 * d21i
        * (_frac((a1 - 1) * (a1 - 1) * (a1 - 2), a1) * x - P),
        d11 * ((a1 - 1) * (a1 - 2) * x - 2 * P),
    ]
    i2 = [
        b12,
        c21 + (a2 - 1) * d21 * xp,
        c12 - a2 * d12 * xp,
        c11 + _frac(a2 * (a2 - 1), a2 + 1) * d11 * xp,
        c22 - _frac(a2 * (a2 - 1), a2 - 2) * d22 * xp,
        xp * (_frac(a2 * (a2 - 1), (a2 - 2) * (a2 + 1)) * x + P),
    ]
    extras = {
        1: (d11, (a1 - 1) * (a1 - 2) * x - 2 * P),
        2: (xp, _frac(a2 * (a2 - 1), (a2 - 2) * (a2 + 1)) * x + P),
    }
    return MultiTypeTable("table4", "b12", {1: i1, 2: i2}, extras)


def table5():
    """Multi-type table for target shape t_(2,1): shapes i=2 and i=3."""
    c11, c12, c21, c22 = S("c11"), S("c12"), S("c21"), S("c22")
    d11, d22, b21 = S("d11"), S("d22"), S("b21")
    d12, d21 = S("d12*"), S("d21*")
    d12i, d21i = S("d12*", -1), S("d21*", -1)
    a2, a3 = _a(2), _a(3)
    x = d11 * d22 * d12i * d21i
    xp = x + P
    i2 = [
        b21,
        c21 + (a2 - 1) * d21 * xp,
        c12 - a2 * d12 * xp,
        c11 + _frac(a2 * (a2 - 1), a2 + 1) * d11 * xp,
        c22 - _frac(a2 * (a2 - 1), a2 - 2) * d22 * xp,
        xp * (_frac(a2 * (a2 - 1), (a2 - 2) * (a2 + 1)) * x + P),
    ]
    i3 = [
        c22 + P * d22,
        c21 - P * d21 - (a3 + 1) * d11 * d22 * d12i,
        c12 + a3 * d11 * d22 * d21i,
        c11 - _frac(a3 * (a3 + 1), a3 - 1) * d11 * d11 * d22 * d12i * d21i,
        b21 - P * c21 - d11 * d22 * d12i
        * (_frac(a3 * a3 * (a3 + 1), a3 - 1) * x - P),
        d22 * (a3 * (a3 + 1) * x - 2 * P),
    ]
    extras = {
        2: (xp, _frac(a2 * (a2 - 1), (a2 - 2) * (a2 + 1)) * x + P),
        3: (d22, a3 * (a3 + 1) * x - 2 * P),
    }
    return MultiTypeTable("table5", "b21", {2: i2, 3: i3}, extras)


# change of variables: Table 1 -> Table 4 and Table 3 -> Table 5


def change_of_vars_t1_to_t4():
    return {
        "e11*": S("d12*"),
        "d11": S("c12") - P * S("d12*"),
        "c11": S("b12") - P * S("c12"),
        "d21": S("d22"),
        "c12": S("d11"),
        "c21": S("c22"),
        "d22*": S("d21*"),
        "c22": S("c21"),
    }


def change_of_vars_t3_to_t5():
    return {
        "d11*": S("d12*"),
        "c11": S("c12"),
        "d12": S("d11"),
        "c12": S("c11"),
        "c21": S("d22"),
        "e22*": S("d21*"),
        "d22": S("c21") - P * S("d21*"),
        "c22": S("b21") - P * S("c21"),
    }


def q_ideals_t12_target():
    """The ideals q_1, q_2 of Lemma on lowest Hodge type, t_(1,2) target."""
    q1 = [S("b12") - P * S("c12"), S("c11"), S("c12") - P * S("d12*"),
          S("c21"), S("c22"), S("d11")]
    q2 = [S("b12"), S("c11"), S("c12"), S("c21"), S("c22"),
          S("d11") * S("d22") * S("d12*", -1) * S("d21*", -1) + P]
    return q1, q2


def q_ideals_t21_target():
    q2 = [S("b21"), S("c11"), S("c12"), S("c21"), S("c22"),
          S("d11") * S("d22") * S("d12*", -1) * S("d21*", -1) + P]
    q3 = [S("b21") - P * S("c21"), S("c11"), S("c12"),
          S("c21") - P * S("d21*"), S("c22"), S("d22")]
    return q2, q3


TABLES = {"t21": table1, "w_t21": table2, "t12": table3}
