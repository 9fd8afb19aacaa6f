"""The graded algebra of the pro-p Iwahori modulo its center.

A = U(gbar)^{tensor f} with generators e_j, f_j in degree 1 and h_j in
degree 2 per embedding j, subject to [e_j, f_j] = h_j, h_j central, and
distinct embeddings commuting.  PBW monomials e^a f^b h^c (per embedding)
form a basis; straightening uses

    f^b e^a = sum_k (-1)^k k! C(a,k) C(b,k) e^{a-k} f^{b-k} h^k.

The torus H acts by the characters alpha_j on e_j, alpha_j^{-1} on f_j and
trivially on h_j; character vectors live in Z^f.

The ideal I_G is generated by {e_j f_j, h_j}.  Hilbert data of quotients is
computed by exact rational linear algebra; when the generators split by
embedding, per-embedding quotients are convolved (the normal form realizes
A as the tensor product of its embedding factors).
"""

import itertools
import math
from fractions import Fraction


class PBWAlgebra:
    def __init__(self, f):
        self.f = int(f)

    # monomials are tuples of length 3f: (a_0, b_0, c_0, a_1, ...)

    def zero(self):
        return {}

    def one(self):
        return {tuple([0] * (3 * self.f)): Fraction(1)}

    def gen(self, kind, j):
        mono = [0] * (3 * self.f)
        mono[3 * j + {"e": 0, "f": 1, "h": 2}[kind]] = 1
        return {tuple(mono): Fraction(1)}

    def degree_of_mono(self, mono):
        total = 0
        for j in range(self.f):
            a, b, c = mono[3 * j: 3 * j + 3]
            total += a + b + 2 * c
        return total

    def char_of_mono(self, mono):
        return tuple(mono[3 * j] - mono[3 * j + 1] for j in range(self.f))

    def add(self, x, y):
        out = dict(x)
        for m, c in y.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return out

    def scale(self, x, c):
        c = Fraction(c)
        return {m: co * c for m, co in x.items()} if c else {}

    def _mono_mul(self, m1, m2):
        """Product of two PBW monomials as an element."""
        result = {(): Fraction(1)}
        for j in range(self.f):
            a1, b1, c1 = m1[3 * j: 3 * j + 3]
            a2, b2, c2 = m2[3 * j: 3 * j + 3]
            local = {}
            for k in range(0, min(a2, b1) + 1):
                coeff = Fraction((-1) ** k * math.factorial(k)
                                 * math.comb(a2, k) * math.comb(b1, k))
                key = (a1 + a2 - k, b1 + b2 - k, c1 + c2 + k)
                local[key] = local.get(key, Fraction(0)) + coeff
            new = {}
            for pref, c in result.items():
                for key, c2_ in local.items():
                    new[pref + key] = new.get(pref + key, Fraction(0)) + c * c2_
            result = new
        return {m: c for m, c in result.items() if c}

    def mul(self, x, y):
        out = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                for m, c in self._mono_mul(m1, m2).items():
                    s = out.get(m, Fraction(0)) + c1 * c2 * c
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
        return out

    def normal_form(self, word):
        """Product of a word of generator symbols ('e'|'f'|'h', j)."""
        acc = self.one()
        for kind, j in word:
            acc = self.mul(acc, self.gen(kind, j))
        return acc

    # -- bases ---------------------------------------------------------------

    def _embedding_monos(self, d):
        out = []
        for c in range(d // 2 + 1):
            for a in range(d - 2 * c + 1):
                b = d - 2 * c - a
                out.append((a, b, c))
        return out

    def monomials(self, d):
        per = [self._embedding_monos(k) for k in range(d + 1)]
        out = []
        for split in _compositions(d, self.f):
            for combo in itertools.product(*[per[k] for k in split]):
                out.append(sum(combo, ()))
        return out

    def dims(self, D):
        return [len(self.monomials(d)) for d in range(D + 1)]

    def graded_characters(self, n):
        """Multiset of H-character vectors of gr^n, as a sorted list."""
        return sorted(self.char_of_mono(m) for m in self.monomials(n))


def _compositions(d, parts):
    if parts == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# exact rational row reduction on dict rows


def _row_reduce(rows):
    """Row-reduce a list of dict rows {col: Fraction}; returns pivot count."""
    pivots = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            if col in pivots:
                pr = pivots[col]
                factor = row[col] / pr[col]
                for c, v in pr.items():
                    s = row.get(c, Fraction(0)) - factor * v
                    if s:
                        row[c] = s
                    else:
                        row.pop(c, None)
            else:
                pivots[col] = row
                rank += 1
                break
    return rank, pivots


def _span_dim(vectors):
    rank, _ = _row_reduce(vectors)
    return rank


# ---------------------------------------------------------------------------
# graded ideals and quotient dimensions


def _element_embeddings(alg, x):
    """Set of embeddings an element touches."""
    touched = set()
    for m in x:
        for j in range(alg.f):
            if any(m[3 * j + i] for i in range(3)):
                touched.add(j)
    return touched


def ideal_piece_dims(alg, gens, D):
    """Dimensions of the graded pieces of the left ideal sum A*g."""
    dims = []
    index_cache = {}
    for d in range(D + 1):
        basis = alg.monomials(d)
        index = {m: i for i, m in enumerate(basis)}
        index_cache[d] = index
        rows = []
        for g in gens:
            dg = max(alg.degree_of_mono(m) for m in g)
            if any(alg.degree_of_mono(m) != dg for m in g):
                raise ValueError("ideal generators must be homogeneous")
            if d < dg:
                continue
            for x in alg.monomials(d - dg):
                prod = alg.mul({x: Fraction(1)}, g)
                rows.append({index[m]: c for m, c in prod.items()})
        dims.append(_span_dim(rows))
    return dims


def quotient_dims(alg, gens, D):
    """Dimensions of A / (left ideal generated by gens), degreewise.

    Splits by embedding when every generator touches a single embedding;
    otherwise computes directly.
    """
    groups = {}
    splittable = True
    for g in gens:
        emb = _element_embeddings(alg, g)
        if len(emb) != 1:
            splittable = False
            break
        groups.setdefault(next(iter(emb)), []).append(g)
    if not splittable or alg.f == 1:
        ideal = ideal_piece_dims(alg, gens, D)
        return [len(alg.monomials(d)) - ideal[d] for d in range(D + 1)]
    # per-embedding quotients, then convolution
    one = PBWAlgebra(1)
    per = []
    for j in range(alg.f):
        gj = []
        for g in groups.get(j, []):
            gj.append({(m[3 * j], m[3 * j + 1], m[3 * j + 2]): c
                       for m, c in g.items()})
        ideal = ideal_piece_dims(one, gj, D)
        per.append([len(one.monomials(d)) - ideal[d] for d in range(D + 1)])
    out = per[0]
    for nxt in per[1:]:
        out = [sum(out[i] * nxt[d - i] for i in range(d + 1))
               for d in range(D + 1)]
    return out


def hilbert_dims(alg, D, gens=None):
    """Graded dimensions of A (gens=None) or A/(gens) up to degree D."""
    if gens is None:
        return alg.dims(D)
    return quotient_dims(alg, gens, D)


def ig_generators(alg):
    out = []
    for j in range(alg.f):
        out.append(alg.mul(alg.gen("e", j), alg.gen("f", j)))
        out.append(alg.gen("h", j))
    return out


def free_series_coeffs(f, D):
    """Coefficients of (1/((1-t)^2 (1-t^2)))^f."""
    one = [0] * (D + 1)
    one[0] = 1
    series = one[:]
    factor_inv = []
    # expand 1/(1-t) and 1/(1-t^2) as lists
    inv1 = [1] * (D + 1)
    inv2 = [1 if d % 2 == 0 else 0 for d in range(D + 1)]
    for _ in range(f):
        for piece in (inv1, inv1, inv2):
            series = [sum(series[i] * piece[d - i] for i in range(d + 1))
                      for d in range(D + 1)]
    return series


def polyring_series_coeffs(nvars, D):
    return [math.comb(d + nvars - 1, nvars - 1) for d in range(D + 1)]


def regular_sequence_check(f, D, sequence=None):
    """Degreewise regularity check for a sequence of central elements.

    Default sequence (h_0, ..., h_{f-1}): quotient dims must match a
    polynomial ring in 2f degree-1 variables up to degree D.  A general
    sequence is compared against the Koszul prediction
    dims(A) * prod(1 - t^{deg}).
    """
    alg = PBWAlgebra(f)
    if sequence is None:
        sequence = [alg.gen("h", j) for j in range(f)]
        expected = polyring_series_coeffs(2 * f, D)
    else:
        expected = list(free_series_coeffs(f, D))
        for g in sequence:
            dg = alg.degree_of_mono(next(iter(g)))
            expected = [expected[d] - (expected[d - dg] if d >= dg else 0)
                        for d in range(D + 1)]
    actual = quotient_dims(alg, list(sequence), D)
    return actual == expected


def support_dimension_from_dims(dims, f, window=None):
    """Dimension of the support from graded dims via finite differences.

    Returns the degree of the eventual Hilbert polynomial plus one (zero for
    eventually-zero dims); raises if no stabilization within the data.
    """
    if window is None:
        window = f + 2
    seq = list(dims)
    if len(seq) < window + 1:
        raise ValueError("not enough graded data to stabilize")
    if all(x == 0 for x in seq[-window:]):
        return 0
    level = 0
    while level <= len(seq):
        tail = seq[-window:]
        if all(x == tail[0] for x in tail) and tail[0] != 0:
            return level + 1
        if all(x == 0 for x in tail):
            raise ValueError("dims collapsed without stabilizing")
        seq = [seq[i + 1] - seq[i] for i in range(len(seq) - 1)]
        level += 1
        if len(seq) < window:
            raise ValueError("no stabilization within the degree bound")
    raise ValueError("no stabilization within the degree bound")


class GradedModulePresentation:
    """Cyclic-by-finite presentation: generators in degree 0 with
    H-characters, and homogeneous relation vectors over the algebra."""

    def __init__(self, alg, gen_chars, relations, annihilated_by_ig=False):
        self.alg = alg
        self.gen_chars = [tuple(c) for c in gen_chars]
        # relations: list of dict {gen_index: algebra element}
        self.relations = relations
        self.annihilated_by_ig = annihilated_by_ig

    def _all_relations(self):
        rels = list(self.relations)
        if self.annihilated_by_ig:
            for k in range(len(self.gen_chars)):
                for g in ig_generators(self.alg):
                    rels.append({k: g})
        return rels

    def dims(self, D):
        alg = self.alg
        ngen = len(self.gen_chars)
        rels = self._all_relations()
        out = []
        for d in range(D + 1):
            basis = alg.monomials(d)
            index = {(k, m): i + k * len(basis)
                     for k in range(ngen) for i, m in enumerate(basis)}
            rows = []
            for rel in rels:
                degs = set()
                for el in rel.values():
                    degs.update(alg.degree_of_mono(m) for m in el)
                if len(degs) != 1:
                    raise ValueError("relations must be homogeneous")
                dg = degs.pop()
                if d < dg:
                    continue
                for x in alg.monomials(d - dg):
                    row = {}
                    for k, el in rel.items():
                        prod = alg.mul({x: Fraction(1)}, el)
                        for m, c in prod.items():
                            row[index[(k, m)]] = row.get(index[(k, m)],
                                                         Fraction(0)) + c
                    rows.append({c: v for c, v in row.items() if v})
            out.append(ngen * len(basis) - _span_dim(rows))
        return out

    def characters(self, n):
        """Character multiset of gr^n of the free cover minus relations is
        not well defined in general; provided for free modules only."""
        if self._all_relations():
            raise ValueError("characters only available for free modules")
        alg = self.alg
        out = []
        for chi in self.gen_chars:
            for m in alg.monomials(n):
                cm = alg.char_of_mono(m)
                out.append(tuple(a + b for a, b in zip(chi, cm)))
        return sorted(out)

    def support_dimension(self, D, window=None):
        return support_dimension_from_dims(self.dims(D), self.alg.f, window)


def support_dimension(alg, gens, D, window=None):
    """Support dimension of the cyclic module A/(gens)."""
    dims = quotient_dims(alg, gens, D)
    return support_dimension_from_dims(dims, alg.f, window)


def w_chi3_model(f):
    """The graded model of W_{chi,3}: the free rank-1 module truncated in
    degrees <= 2, as (dims, characters per degree)."""
    alg = PBWAlgebra(f)
    M = GradedModulePresentation(alg, [tuple([0] * f)], [])
    dims = [len(alg.monomials(d)) for d in range(3)]
    chars = {n: M.characters(n) for n in range(3)}
    return dims, chars


def mult_one_criterion(alg, module):
    """True iff I_G^(2) kills the degree-0 part of the module.

    `module` is a GradedModulePresentation generated in degree 0.  When the
    criterion holds, the follow-up support-dimension bound <= f applies to
    the module with I_G added to its relations.
    """
    ig2 = ig_generators(alg)  # all generators sit in degree 2
    basis2 = alg.monomials(2)
    rels = module._all_relations()
    # rows of the degree-2 relation space inside the free cover
    ngen = len(module.gen_chars)
    index = {(k, m): i + k * len(basis2)
             for k in range(ngen) for i, m in enumerate(basis2)}
    rows = []
    for rel in rels:
        degs = set()
        for el in rel.values():
            degs.update(alg.degree_of_mono(m) for m in el)
        dg = degs.pop() if degs else None
        if dg is None or dg > 2:
            continue
        for x in alg.monomials(2 - dg):
            row = {}
            for k, el in rel.items():
                prod = alg.mul({x: Fraction(1)}, el)
                for m, c in prod.items():
                    row[index[(k, m)]] = row.get(index[(k, m)], Fraction(0)) + c
            rows.append({c: v for c, v in row.items() if v})
    _, pivots = _row_reduce(rows)

    def reduces_to_zero(vec):
        vec = dict(vec)
        while vec:
            col = min(vec)
            if col not in pivots:
                return False
            pr = pivots[col]
            factor = vec[col] / pr[col]
            for c, v in pr.items():
                s = vec.get(c, Fraction(0)) - factor * v
                if s:
                    vec[c] = s
                else:
                    vec.pop(c, None)
        return True

    for k in range(ngen):
        for u in ig2:
            vec = {index[(k, m)]: c for m, c in u.items()}
            if not reduces_to_zero(vec):
                return False
    return True
