"""Concrete matrix groups over O/p^e and their coset systems.

GaloisRing(p, e, f) realizes O_K/p^e as (Z/p^e)[x]/(g~) for a monic lift
g~ of the fixed irreducible modulus of F_{p^f}; elements are int64 arrays
of shape (..., f) with coefficients mod p^e.  Groups are presented by
generator matrices; coset systems carry label/representative functions and
are validated by BFS orbit counting against the expected index.
"""

import numpy as np

from ..exact.finitefield import FqField, conway_like_modulus


class GaloisRing:
    """O/p^e with residue field F_{p^f}."""

    def __init__(self, p, e, f):
        self.p, self.e, self.f = int(p), int(e), int(f)
        self.q = p ** f
        self.mod = p ** e
        self.modulus = conway_like_modulus(p, f)  # ascending, monic
        self.field = FqField(p, f, self.modulus)
        m = f
        red = np.zeros((2 * m - 1, m), dtype=np.int64)
        for i in range(m):
            red[i, i] = 1
        for k in range(m, 2 * m - 1):
            row = np.zeros(m + 1, dtype=np.int64)
            row[1:] = red[k - 1]
            c = row[m]
            row = row[:m].copy()
            if c:
                row = (row - c * np.array(self.modulus[:m], dtype=np.int64))
            red[k] = row % self.mod
        self._red = red

    # elements: arrays (..., f) with entries in [0, p^e)

    def zeros(self, shape):
        return np.zeros(tuple(shape) + (self.f,), dtype=np.int64)

    def one(self):
        a = self.zeros(())
        a[..., 0] = 1
        return a

    def scalar(self, n):
        a = self.zeros(())
        a[..., 0] = n % self.mod
        return a

    def eye(self, n=2):
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i, 0] = 1
        return a

    def add(self, a, b):
        return (a + b) % self.mod

    def sub(self, a, b):
        return (a - b) % self.mod

    def neg(self, a):
        return (-a) % self.mod

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        m = self.f
        shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
        a = np.broadcast_to(a, shape + (m,))
        b = np.broadcast_to(b, shape + (m,))
        conv = np.zeros(shape + (2 * m - 1,), dtype=np.int64)
        for i in range(m):
            conv[..., i:i + m] += a[..., i:i + 1] * b
            conv %= self.mod
        return np.tensordot(conv, self._red, axes=([-1], [0])) % self.mod

    def matmul(self, A, B):
        m = self.f
        conv = np.zeros((A.shape[0], B.shape[1], 2 * m - 1), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                conv[:, :, i + j] += (A[:, :, i] @ B[:, :, j]) % self.mod
                conv[:, :, i + j] %= self.mod
        return np.tensordot(conv, self._red, axes=([-1], [0])) % self.mod

    def is_unit(self, a):
        return not self.field.is_zero(self.reduce_mod_p(a))

    def inv(self, a):
        """Inverse of a unit via lifting the residue inverse."""
        if not self.is_unit(a):
            raise ZeroDivisionError("not a unit in O/p^e")
        x = self.field.inv(self.reduce_mod_p(a)).astype(np.int64)
        # Newton: x -> x(2 - a x) doubles p-adic precision
        steps = 1
        prec = self.p
        while prec < self.mod:
            two = self.scalar(2)
            x = self.mul(x, self.sub(two, self.mul(a % self.mod, x)))
            prec *= prec
        return x % self.mod

    def mat2_inv(self, g):
        det = self.sub(self.mul(g[0, 0], g[1, 1]), self.mul(g[0, 1], g[1, 0]))
        di = self.inv(det)
        out = self.zeros((2, 2))
        out[0, 0] = self.mul(di, g[1, 1])
        out[1, 1] = self.mul(di, g[0, 0])
        out[0, 1] = self.mul(di, self.neg(g[0, 1]))
        out[1, 0] = self.mul(di, self.neg(g[1, 0]))
        return out

    def reduce_mod_p(self, a):
        return np.asarray(a) % self.p

    def divide_by_p(self, a):
        a = np.asarray(a) % self.mod
        if np.any(a % self.p):
            raise ValueError("element not divisible by p")
        return a // self.p

    def teichmueller(self, abar):
        """Teichmueller lift of a residue-field element."""
        x = np.asarray(abar).astype(np.int64) % self.p
        for _ in range(self.e - 1):
            y = x
            for _ in range(1):
                pass
            # x -> x^q fixes residue and contracts to the Teichmueller lift
            x = self._pow(x, self.q)
        return x

    def _pow(self, a, n):
        result = self.one()
        base = np.asarray(a) % self.mod
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def encode(self, a):
        a = np.asarray(a) % self.mod
        weights = self.mod ** np.arange(self.f, dtype=np.int64)
        return int(np.tensordot(a, weights, axes=([-1], [0])))


def field_generator(F):
    """A generator of F_q^times (deterministic search)."""
    for a in F.elements():
        if F.is_zero(a):
            continue
        if F.element_order(a) == F.q - 1:
            return a
    raise RuntimeError("no generator found")


class GroupContext:
    """A matrix group over a GaloisRing given by named generator matrices."""

    def __init__(self, name, ring, gens, order=None):
        self.name = name
        self.R = ring
        self.gens = dict(gens)          # name -> (2,2,f) matrix
        self.gen_names = list(gens)
        self.order = order

    def gen(self, name):
        return self.gens[name]

    def mat(self, mat_entries):
        """Build a matrix from ints or ring elements."""
        R = self.R
        out = R.zeros((2, 2))
        for i in range(2):
            for j in range(2):
                v = mat_entries[i][j]
                if isinstance(v, (int, np.integer)):
                    out[i, j] = R.scalar(int(v))
                else:
                    out[i, j] = np.asarray(v) % R.mod
        return out


def _k1_generator_mats(R):
    """1 + p a^i E_{rs} for i < f and the four positions."""
    out = {}
    a = R.teichmueller(R.field.gen() if R.f > 1 else R.field.scalar(1))
    powers = [R.one()]
    for _ in range(1, R.f):
        powers.append(R.mul(powers[-1], a))
    for i in range(R.f):
        for (r, s), tag in (((0, 0), "11"), ((0, 1), "12"),
                            ((1, 0), "21"), ((1, 1), "22")):
            g = R.eye()
            g[r, s] = R.add(g[r, s], (R.p * powers[i]) % R.mod)
            out["k1_%s_%d" % (tag, i)] = g
    return out


def _unipotent_mats(R):
    out = {}
    a = R.teichmueller(R.field.gen() if R.f > 1 else R.field.scalar(1))
    powers = [R.one()]
    for _ in range(1, R.f):
        powers.append(R.mul(powers[-1], a))
    for i in range(R.f):
        up = R.eye()
        up[0, 1] = powers[i]
        lo = R.eye()
        lo[1, 0] = powers[i]
        out["u+_%d" % i] = up
        out["u-_%d" % i] = lo
    return out


def _torus_mats(R):
    g = R.teichmueller(field_generator(R.field))
    t1 = R.eye()
    t1[0, 0] = g
    t2 = R.eye()
    t2[1, 1] = g
    return {"t1": t1, "t2": t2}


def gl2_context(p, f=1, e=1):
    """GL2(O/p^e); for e = 1 this is GL2(k)."""
    R = GaloisRing(p, e, f)
    q = R.q
    gens = {}
    gens.update(_unipotent_mats(R))
    gens.update(_torus_mats(R))
    if e > 1:
        gens.update(_k1_generator_mats(R))
    order = None
    if e == 1:
        order = (q * q - 1) * (q * q - q)
    else:
        order = (q * q - 1) * (q * q - q) * q ** (4 * (e - 1))
    return GroupContext("GL2(O/p^%d), q=%d" % (e, q), R, gens, order)


def iwahori_gen_names(ctx):
    """Generators of the Iwahori inside a level >= 2 GL2 context."""
    names = [n for n in ctx.gen_names if n.startswith("u+_")]
    names += ["t1", "t2"]
    names += [n for n in ctx.gen_names if n.startswith("k1_")]
    return names


def k1_gen_names(ctx):
    return [n for n in ctx.gen_names if n.startswith("k1_")]


def borel_context(p, f=1):
    """B(k) inside GL2(k)."""
    R = GaloisRing(p, 1, f)
    gens = {}
    gens.update({k: v for k, v in _unipotent_mats(R).items()
                 if k.startswith("u+_")})
    gens.update(_torus_mats(R))
    q = R.q
    return GroupContext("B(k), q=%d" % q, R, gens, order=q * (q - 1) ** 2)


def torus_context(p, f=1):
    R = GaloisRing(p, 1, f)
    q = R.q
    return GroupContext("T(k), q=%d" % q, R, _torus_mats(R),
                        order=(q - 1) ** 2)


# ---------------------------------------------------------------------------
# coset systems


class CosetSystem:
    """Right cosets H\\G with label and representative maps."""

    def __init__(self, name, ring, label_fn, rep_fn, index):
        self.name = name
        self.R = ring
        self.label = label_fn
        self.rep = rep_fn
        self.index = index
        self.labels = None

    def validate(self, ctx):
        """BFS from the identity over right multiplication by generators;
        checks every coset is reachable and the count matches."""
        R = self.R
        seen = {}
        start = self.label(R.eye())
        seen[start] = R.eye()
        frontier = [start]
        while frontier:
            nxt = []
            for lab in frontier:
                g = seen[lab]
                for name in ctx.gen_names:
                    h = R.matmul(g, ctx.gen(name))
                    lab2 = self.label(h)
                    if lab2 not in seen:
                        seen[lab2] = h
                        nxt.append(lab2)
            frontier = nxt
        if len(seen) != self.index:
            raise ValueError("coset table for %s has %d orbits, expected %d"
                             % (self.name, len(seen), self.index))
        self.labels = sorted(seen)
        # representative consistency: label(rep(l)) == l and the factor
        # rep-correction stays in the subgroup (checked by the caller's
        # subgroup membership function when provided)
        for lab in self.labels:
            if self.label(self.rep(lab)) != lab:
                raise ValueError("representative mismatch for %r" % (lab,))
        return self.labels


def _line_label(R, u, v):
    """Projective label of a nonzero residue row (u, v)."""
    F = R.field
    ub, vb = R.reduce_mod_p(u), R.reduce_mod_p(v)
    if not F.is_zero(vb):
        x = F.mul(ub, F.inv(vb))
        return ("fin", int(F.encode(x)))
    return ("inf",)


def iwahori_cosets(ctx):
    """I\\K labelled by the projective bottom row mod p."""
    R = ctx.R
    F = R.field

    def label(g):
        return _line_label(R, g[1, 0], g[1, 1])

    def rep(lab):
        if lab[0] == "fin":
            x = _decode(F, lab[1])
            m = R.eye()
            m[1, 0] = x.astype(np.int64)
            return m
        m = R.zeros((2, 2))
        m[0, 1] = R.one()
        m[1, 0] = R.one()
        return m

    return CosetSystem("I\\K", R, label, rep, R.q + 1)


def torus_in_borel_cosets(ctx):
    """T\\B labelled by a^{-1} b."""
    R = ctx.R
    F = R.field

    def label(g):
        a, b = g[0, 0], g[0, 1]
        return ("x", int(F.encode(F.mul(F.inv(R.reduce_mod_p(a)),
                                        R.reduce_mod_p(b)))))

    def rep(lab):
        x = _decode(F, lab[1])
        m = R.eye()
        m[0, 1] = x.astype(np.int64)
        return m

    return CosetSystem("T\\B", R, label, rep, R.q)


def torus_in_gl2_cosets(ctx):
    """T\\G labelled by the pair of row lines (distinct)."""
    R = ctx.R

    def label(g):
        return (_line_label(R, g[0, 0], g[0, 1]),
                _line_label(R, g[1, 0], g[1, 1]))

    def rep(lab):
        m = R.zeros((2, 2))
        for i, l in enumerate(lab):
            if l[0] == "fin":
                m[i, 0] = _decode(R.field, l[1]).astype(np.int64)
                m[i, 1] = R.one()
            else:
                m[i, 0] = R.one()
        return m

    q = R.q
    return CosetSystem("T\\G", R, label, rep, q * (q + 1))


def borel_in_gl2_cosets(ctx):
    """B\\G labelled by the bottom row line."""
    R = ctx.R

    def label(g):
        return _line_label(R, g[1, 0], g[1, 1])

    def rep(lab):
        m = R.zeros((2, 2))
        if lab[0] == "fin":
            m[0, 0] = R.one()
            m[1, 0] = _decode(R.field, lab[1]).astype(np.int64)
            m[1, 1] = R.one()
        else:
            m[0, 1] = R.one()
            m[1, 0] = R.one()
        return m

    return CosetSystem("B\\G", R, label, rep, R.q + 1)


def _decode(F, code):
    out = np.zeros((F.m,), dtype=np.int64)
    c = code
    for j in range(F.m):
        out[j] = c % F.p
        c //= F.p
    return out


# ---------------------------------------------------------------------------
# reductions and characters


def reduce_to_gl2k(R, g):
    return R.reduce_mod_p(g)


def twisted_reduction(R, g):
    """I -> B(k): (a b; pc d) -> (d, c; 0, a) mod p."""
    a, b, c, d = g[0, 0], g[0, 1], g[1, 0], g[1, 1]
    cbar = R.reduce_mod_p(R.divide_by_p(c))
    out = np.zeros((2, 2, R.f), dtype=np.int64)
    out[0, 0] = R.reduce_mod_p(d)
    out[0, 1] = cbar
    out[1, 1] = R.reduce_mod_p(a)
    return out


class TorusCharacter:
    """chi(diag(x, y)) = x^m y^n evaluated through sigma_0: k -> F."""

    def __init__(self, F, m, n):
        self.F = F
        q1 = F.q - 1
        self.m = m % q1
        self.n = n % q1

    def swap(self):
        return TorusCharacter(self.F, self.n, self.m)

    def times_alpha0(self, k=1):
        return TorusCharacter(self.F, self.m + k, self.n - k)

    def __eq__(self, other):
        return (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return "chi(%d,%d)" % (self.m, self.n)

    def value(self, x, y):
        F = self.F
        return F.mul(F.pow_int(x, self.m), F.pow_int(y, self.n))

    def of_borel_elt(self, R, g):
        return self.value(R.reduce_mod_p(g[0, 0]), R.reduce_mod_p(g[1, 1]))

    def of_iwahori_elt(self, R, g):
        """Through I ->> T(k), diagonal mod p."""
        return self.value(R.reduce_mod_p(g[0, 0]), R.reduce_mod_p(g[1, 1]))
