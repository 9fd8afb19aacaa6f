"""Degree-bounded Buchberger with cofactor certificates.

Membership of f in the ideal generated by ``gens`` over Q(constants) is
decided by an extended Buchberger run that tracks, for every basis element,
its expression as a combination of the original generators.  A successful
reduction of f to zero therefore yields explicit cofactors h_i with
f = sum h_i * gens_i, re-checkable by plain multiplication.

When the S-pair degree bound cuts the run short, a nonzero remainder is
reported as a *refusal* with ``bound_limited=True``; if the basis closed up
without hitting the bound, a nonzero remainder disproves membership
(``bound_limited=False``).

Unit variables (trailing ``*``) with negative exponents are cleared by
monomial factors before the run and restored in the certificate.
"""

from .sympoly import SymPoly, Frac, FRAC_ONE


class Certificate:
    def __init__(self, cofactors, side_conditions):
        self.cofactors = cofactors
        self.side_conditions = side_conditions

    def verify(self, f, gens):
        total = SymPoly.zero()
        for h, g in zip(self.cofactors, gens):
            total = total + h * g
        return total == f

    def __repr__(self):
        return "Certificate(%d cofactors, %d side conditions)" % (
            len(self.cofactors), len(self.side_conditions))


class Refusal:
    def __init__(self, bound_limited, remainder=None):
        self.bound_limited = bound_limited
        self.remainder = remainder

    def __repr__(self):
        kind = "degree-bound exhausted" if self.bound_limited else "not a member"
        return "Refusal(%s)" % kind


def _grevlex_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def _lex_key(mono):
    return tuple(mono)


ORDERS = {"grevlex": _grevlex_key, "lex": _lex_key}


def _collect_vars(polys):
    vs = set()
    for p in polys:
        vs.update(p.variables())
    return sorted(vs)


def _clear_units(poly, varlist):
    """Multiply by a unit monomial so all exponents are >= 0.

    Returns (dense dict-poly, clearing monomial as dict var->exp).
    """
    shift = {}
    for m in poly.terms:
        for n, e in m:
            if e < 0:
                shift[n] = max(shift.get(n, 0), -e)
    out = {}
    index = {v: i for i, v in enumerate(varlist)}
    for m, c in poly.terms.items():
        exps = [0] * len(varlist)
        for n, e in m:
            exps[index[n]] = e
        for n, s in shift.items():
            exps[index[n]] += s
        out[tuple(exps)] = c
    return out, shift


def _to_sympoly(dpoly, varlist):
    terms = {}
    for exps, c in dpoly.items():
        mono = tuple((varlist[i], e) for i, e in enumerate(exps) if e)
        terms[mono] = c
    return SymPoly(terms)


def _mono_div(m1, m2):
    out = []
    for a, b in zip(m1, m2):
        if a < b:
            return None
        out.append(a - b)
    return tuple(out)


def _mono_mul(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


def _mono_lcm(m1, m2):
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _axpy(dst, mono, coeff, src):
    """dst += coeff * x^mono * src for dict-polys."""
    if coeff.is_zero():
        return
    for m, c in src.items():
        key = _mono_mul(mono, m)
        cur = dst.get(key)
        s = coeff * c if cur is None else cur + coeff * c
        if s.is_zero():
            dst.pop(key, None)
        else:
            dst[key] = s


class _Basis:
    """Basis elements with cofactor vectors over the original generators."""

    def __init__(self, ngens, key):
        self.items = []  # list of (terms, cof) with cof a list of dict|None
        self.ngens = ngens
        self.key = key

    def add(self, terms, cof):
        self.items.append((terms, cof))

    def lead(self, idx):
        terms = self.items[idx][0]
        m = max(terms, key=self.key)
        return m, terms[m]

    def reduce(self, terms, side):
        """Fully reduce; returns (remainder, delta) with
        input = remainder + sum_i delta[i] * cleared_gen_i."""
        work = dict(terms)
        delta = [None] * self.ngens
        progress = True
        while progress and work:
            progress = False
            for m in sorted(work, key=self.key, reverse=True):
                c = work.get(m)
                if c is None:
                    continue
                for bi in range(len(self.items)):
                    bm, bc = self.lead(bi)
                    quot = _mono_div(m, bm)
                    if quot is None:
                        continue
                    factor = c / bc
                    d = bc.denominator_conditions()
                    if d is not None and d not in side:
                        side.append(d)
                    bterms, bcof = self.items[bi]
                    _axpy(work, quot, -factor, bterms)
                    for i, entry in enumerate(bcof):
                        if entry:
                            if delta[i] is None:
                                delta[i] = {}
                            _axpy(delta[i], quot, factor, entry)
                            if not delta[i]:
                                delta[i] = None
                    progress = True
                    break
                if progress:
                    break
        return work, delta


def groebner_membership(f, gens, order="grevlex", degree_bound=12,
                        max_basis=400):
    """Certificate or refusal for f in <gens> over Q(constants).

    Symbolic constants are transcendental coefficients; divisions by
    polynomials in them during reduction are recorded as side conditions
    (nonvanishing hypotheses) on the certificate.
    """
    key = ORDERS[order]
    varlist = _collect_vars([f] + list(gens))
    n = len(gens)
    side = []

    basis = _Basis(n, key)
    shifts = []
    for i, g in enumerate(gens):
        dp, sh = _clear_units(g, varlist)
        shifts.append(sh)
        if not dp:
            continue
        cof = [None] * n
        cof[i] = {tuple([0] * len(varlist)): FRAC_ONE}
        basis.add(dp, cof)
    fdp, fshift = _clear_units(f, varlist)

    bound_hit = False
    pairs = [(i, j) for i in range(len(basis.items)) for j in range(i)]
    while pairs:
        pairs.sort(key=lambda ij: sum(_mono_lcm(basis.lead(ij[0])[0],
                                                basis.lead(ij[1])[0])))
        i, j = pairs.pop(0)
        mi, ci = basis.lead(i)
        mj, cj = basis.lead(j)
        lcm = _mono_lcm(mi, mj)
        if sum(lcm) > degree_bound:
            bound_hit = True
            continue
        if _mono_mul(mi, mj) == lcm:
            continue  # coprime leading monomials
        qi = _mono_div(lcm, mi)
        qj = _mono_div(lcm, mj)
        for c in (ci, cj):
            d = c.denominator_conditions()
            if d is not None and d not in side:
                side.append(d)
        s_terms = {}
        s_cof = [None] * n
        bi_terms, bi_cof = basis.items[i]
        bj_terms, bj_cof = basis.items[j]
        _axpy(s_terms, qi, FRAC_ONE / ci, bi_terms)
        _axpy(s_terms, qj, -(FRAC_ONE / cj), bj_terms)
        for idx, entry in enumerate(bi_cof):
            if entry:
                s_cof[idx] = s_cof[idx] or {}
                _axpy(s_cof[idx], qi, FRAC_ONE / ci, entry)
        for idx, entry in enumerate(bj_cof):
            if entry:
                s_cof[idx] = s_cof[idx] or {}
                _axpy(s_cof[idx], qj, -(FRAC_ONE / cj), entry)
        rem, delta = basis.reduce(s_terms, side)
        if rem:
            # rem = s_terms - sum delta*G = sum (s_cof - delta)*G
            new_cof = []
            for idx in range(n):
                acc = dict(s_cof[idx]) if s_cof[idx] else {}
                if delta[idx]:
                    _axpy(acc, tuple([0] * len(varlist)), Frac.const(-1),
                          delta[idx])
                new_cof.append(acc or None)
            basis.add(rem, new_cof)
            if len(basis.items) > max_basis:
                bound_hit = True
                break
            pairs.extend((len(basis.items) - 1, k)
                         for k in range(len(basis.items) - 1))

    rem, delta = basis.reduce(fdp, side)
    if rem:
        return Refusal(bound_limited=bound_hit,
                       remainder=_to_sympoly(rem, varlist))

    # cleared_f = sum delta_i * cleared_g_i with cleared_f = u_f*f and
    # cleared_g_i = u_i*g_i, hence f = sum (u_f^-1 delta_i u_i) g_i.
    u_f_inv = SymPoly({tuple((v, -e) for v, e in fshift.items()): FRAC_ONE}) \
        if fshift else SymPoly.const(1)
    cofactors = []
    for i in range(n):
        entry = delta[i]
        if not entry:
            cofactors.append(SymPoly.zero())
            continue
        h = _to_sympoly(entry, varlist)
        u_i = SymPoly({tuple(sorted(shifts[i].items())): FRAC_ONE}) \
            if shifts[i] else SymPoly.const(1)
        cofactors.append(u_f_inv * h * u_i)
    cert = Certificate(cofactors, side)
    if not cert.verify(f, gens):
        raise AssertionError("internal error: certificate failed to verify")
    return cert
