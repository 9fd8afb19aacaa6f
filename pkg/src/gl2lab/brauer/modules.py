"""Finite-dimensional modules over the group algebras, and their analysis.

A GModule stores one invertible matrix per named generator over an FqField.
Socles are computed as sums of images of Hom(sigma, M) over candidate
irreducibles; Hom spaces out of a cyclic module are computed by spinning a
generating vector while recording, for every (basis vector, generator)
pair, either a definition (new basis vector) or a linear relation; a
homomorphism is then a choice of image for the generator satisfying all
recorded relations.  Irreducibles are identified by highest-weight data
(joint fixed vectors of the unipotent part with their torus character).
"""

import numpy as np


class GModule:
    def __init__(self, field, actions, group_tag="", meta=None):
        self.F = field
        self.actions = dict(actions)    # name -> (dim, dim, m) matrix
        self.group_tag = group_tag
        self.meta = meta or {}
        dims = {a.shape[0] for a in self.actions.values()}
        if len(dims) != 1:
            raise ValueError("inconsistent action dimensions")
        self.dim = dims.pop()

    def gen_names(self):
        return sorted(self.actions)

    def act(self, name, vec):
        return self.F.matvec(self.actions[name], vec)

    # -- constructions -----------------------------------------------------

    def tensor(self, other):
        F = self.F
        out = {}
        for name in self.actions:
            A, B = self.actions[name], other.actions[name]
            n1, n2 = A.shape[0], B.shape[0]
            prod = F.zeros((n1 * n2, n1 * n2))
            for i in range(n1):
                for k in range(n1):
                    prod[i * n2:(i + 1) * n2, k * n2:(k + 1) * n2] = \
                        F.mul(A[i, k][None, None, :], B)
            out[name] = prod
        return GModule(F, out, self.group_tag)

    def direct_sum(self, other):
        F = self.F
        out = {}
        for name in self.actions:
            A, B = self.actions[name], other.actions[name]
            n1, n2 = A.shape[0], B.shape[0]
            M = F.zeros((n1 + n2, n1 + n2))
            M[:n1, :n1] = A
            M[n1:, n1:] = B
            out[name] = M
        return GModule(F, out, self.group_tag)

    def dual(self):
        F = self.F
        out = {}
        for name, A in self.actions.items():
            out[name] = np.swapaxes(mat_inverse(F, A), 0, 1)
        return GModule(F, out, self.group_tag + "*")

    def restrict_to(self, names, new_tag=None):
        return GModule(self.F, {n: self.actions[n] for n in names},
                       new_tag or self.group_tag)

    def submodule(self, basis):
        """Module structure on the row space of `basis` (must be stable)."""
        F = self.F
        B = F.row_space(basis)
        out = {}
        for name, A in self.actions.items():
            if B.shape[0]:
                imgs = np.stack([F.matvec(A, b) for b in B])
            else:
                imgs = F.zeros((0, self.dim))
            # express_in_basis returns X with image(B_i) = sum_j X[j,i] B_j,
            # which is exactly the action matrix on coordinates
            out[name] = express_in_basis(F, B, imgs)
        sub = GModule(F, out, self.group_tag)
        sub.meta["basis"] = B
        return sub

    def quotient(self, basis):
        """Quotient by the stable row space of `basis`."""
        F = self.F
        if basis.shape[0]:
            R, pivots = F.rref(basis)
            R = R[:len(pivots)]
        else:
            R, pivots = basis, []
        free = [c for c in range(self.dim) if c not in pivots]

        def project(vec):
            w = vec.copy()
            for i, pc in enumerate(pivots):
                c = w[pc].copy()
                if not F.is_zero(c):
                    w = F.sub(w, F.mul(c, R[i]))
            return w[free]

        out = {}
        for name, A in self.actions.items():
            mat = F.zeros((len(free), len(free)))
            for jj, j in enumerate(free):
                e = F.zeros((self.dim,))
                e[j, 0] = 1
                mat[:, jj] = project(F.matvec(A, e))
            out[name] = mat
        quo = GModule(F, out, self.group_tag)
        quo.meta["free_coords"] = free
        quo.meta["project"] = project
        return quo


def mat_inverse(F, A):
    n = A.shape[0]
    aug = np.concatenate([A, F.eye(n)], axis=1)
    R, pivots = F.rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix not invertible")
    return R[:, n:]


def express_in_basis(F, B, vectors):
    """Coordinates: vectors[i] = sum_j X[j, i] B[j]; returns X (k, n)."""
    if B.shape[0] == 0:
        if vectors.shape[0] and not np.all(F.is_zero(vectors)):
            raise ValueError("vector outside the zero space")
        return F.zeros((0, vectors.shape[0]))
    X = F.zeros((B.shape[0], vectors.shape[0]))
    Bt = np.swapaxes(B, 0, 1)
    for i, v in enumerate(vectors):
        sol = F.solve(Bt, v)
        if sol is None:
            raise ValueError("vector outside the subspace")
        X[:, i] = sol
    return X


class EchelonTracker:
    """Incremental row echelon with expression tracking.

    add(v) returns None when v enlarges the span, else the coefficient
    vector expressing v in terms of the previously added *independent*
    vectors (in insertion order)."""

    def __init__(self, F, dim):
        self.F = F
        self.dim = dim
        self.rows = []        # reduced rows
        self.pivots = []      # pivot column per row
        self.exprs = []       # each row as combination of inserted vectors
        self.count = 0        # number of independent vectors inserted

    def reduce(self, v):
        F = self.F
        w = v.copy() % F.p
        expr = F.zeros((self.count,))
        for i, pc in enumerate(self.pivots):
            c = w[pc].copy()
            if not F.is_zero(c):
                w = F.sub(w, F.mul(c, self.rows[i]))
                if self.count:
                    expr = F.add(expr, F.mul(c, self.exprs[i]))
        return w, expr

    def add(self, v):
        F = self.F
        w, expr = self.reduce(v)
        nz = [j for j in range(self.dim) if not F.is_zero(w[j])]
        if not nz:
            return expr
        piv = nz[0]
        inv = F.inv(w[piv])
        wn = F.mul(inv, w)
        # new independent vector: index self.count; its expression vector
        new_expr = F.zeros((self.count + 1,))
        new_expr[self.count, 0] = 1
        # current expr says v = sum expr_i * basis_i + w
        # so w = v - sum(...): normalized: wn = inv*(v - sum ...)
        padded = F.zeros((self.count + 1,))
        if self.count:
            padded[:self.count] = F.mul(F.neg(inv), expr)
        padded[self.count] = inv
        for i in range(len(self.exprs)):
            old = self.exprs[i]
            grown = F.zeros((self.count + 1,))
            grown[:old.shape[0]] = old
            self.exprs[i] = grown
        self.rows.append(wn)
        self.pivots.append(piv)
        self.exprs.append(padded)
        self.count += 1
        return None


def invariants(M, names):
    """Common kernel of (g - 1) over the listed generators."""
    F = M.F
    mats = [(M.actions[name] - F.eye(M.dim)) % F.p for name in names]
    if not mats:
        return F.eye(M.dim)
    return F.kernel(np.concatenate(mats, axis=0))


def coinvariants_basis(M, names):
    """Basis of sum (g - 1)M."""
    F = M.F
    rows = []
    for name in names:
        A = (M.actions[name] - F.eye(M.dim)) % F.p
        for j in range(M.dim):
            rows.append(A[:, j])
    return F.row_space(np.stack(rows)) if rows else F.zeros((0, M.dim))


def spin(M, vectors):
    """Basis of the submodule generated by the given vectors."""
    F = M.F
    tracker = EchelonTracker(F, M.dim)
    queue = []
    basis = []
    for v in vectors:
        if tracker.add(v) is None:
            basis.append(v)
            queue.append(v)
    while queue:
        v = queue.pop()
        for name in M.actions:
            w = F.matvec(M.actions[name], v)
            if tracker.add(w) is None:
                basis.append(w)
                queue.append(w)
    return F.row_space(np.stack(basis)) if basis else F.zeros((0, M.dim))


class CyclicPresentation:
    """Spin of a generating vector with recorded definitions/relations."""

    def __init__(self, M, v0):
        F = M.F
        self.M = M
        tracker = EchelonTracker(F, M.dim)
        tracker.add(v0)
        basis = [v0]
        defs = [None]
        relations = []
        i = 0
        names = sorted(M.actions)
        while i < len(basis):
            for name in names:
                w = F.matvec(M.actions[name], basis[i])
                expr = tracker.add(w)
                if expr is None:
                    basis.append(w)
                    defs.append((i, name))
                else:
                    relations.append((i, name, expr))
            i += 1
        self.basis = np.stack(basis)
        self.defs = defs
        self.relations = relations

    def dim(self):
        return self.basis.shape[0]

    def homs_to(self, N, candidates):
        """Hom(<v0>, N) with the generator mapping into span(candidates).

        candidates: (k, dimN) array; returns a list of hom matrices
        (dimN, nb) whose columns are the images of the spin basis."""
        F = self.M.F
        k = candidates.shape[0]
        if k == 0:
            return []
        nb = self.dim()
        img = [None] * nb
        img[0] = candidates
        for idx in range(1, nb):
            parent, name = self.defs[idx]
            img[idx] = np.stack([F.matvec(N.actions[name], img[parent][j])
                                 for j in range(k)])
        rows = []
        for (i, name, coords) in self.relations:
            lhs = np.stack([F.matvec(N.actions[name], img[i][j])
                            for j in range(k)])
            rhs = F.zeros((k, N.dim))
            for pos in range(coords.shape[0]):
                c = coords[pos]
                if F.is_zero(c):
                    continue
                rhs = F.add(rhs, F.mul(c, img[pos]))
            rows.append(F.sub(lhs, rhs))
        if rows:
            constraint = np.concatenate(
                [np.swapaxes(r, 0, 1) for r in rows], axis=0)
            alphas = F.kernel(constraint)
        else:
            alphas = F.eye(k)
        homs = []
        for alpha in alphas:
            mat = F.zeros((N.dim, nb))
            for idx in range(nb):
                vec = F.zeros((N.dim,))
                for j in range(k):
                    vec = F.add(vec, F.mul(alpha[j], img[idx][j]))
                mat[:, idx] = vec
            homs.append(mat)
        return homs


# ---------------------------------------------------------------------------
# highest-weight identification


class IrreducibleLibrary:
    """Builds and caches F(lambda), with lookups by highest-weight char."""

    def __init__(self, builder, p, f):
        self.builder = builder
        self.p, self.f = p, f
        self.cache = {}
        self._char_cache = {}

    def module(self, lab):
        if lab not in self.cache:
            self.cache[lab] = self.builder(lab)
        return self.cache[lab]

    def candidates_for_char(self, m, n):
        key = (m, n)
        if key in self._char_cache:
            return self._char_cache[key]
        import itertools as it
        p, f = self.p, self.f
        q1 = p ** f - 1
        out = []
        for diffs in it.product(range(p), repeat=f):
            D = sum(d * p ** j for j, d in enumerate(diffs))
            if (D - (m - n)) % q1 != 0:
                continue
            e = (2 * n + D) % (2 * q1)
            out.append(_label_from_invariants(p, f, diffs, e))
        self._char_cache[key] = out
        return out


def _label_from_invariants(p, f, diffs, e):
    from ..graph import Weight, SerreWeightLabel
    D = sum(d * p ** j for j, d in enumerate(diffs))
    c = ((e - D) % (2 * (p ** f - 1))) // 2
    pairs = [(diffs[0] + c, c)] + [(d, 0) for d in diffs[1:]]
    return SerreWeightLabel(Weight(pairs, p))


class ModuleAnalyzer:
    """Socle/radical/JH machinery over a fixed group context."""

    def __init__(self, library, unipotent_names, protriv_names, torus_eval):
        self.lib = library
        self.unipotent_names = unipotent_names
        self.protriv_names = protriv_names
        self.torus_eval = torus_eval
        self._pres_cache = {}

    def pro_p_invariants(self, M):
        names = [n for n in self.unipotent_names + self.protriv_names
                 if n in M.actions]
        return invariants(M, names)

    def _presentation(self, lab, M):
        key = (lab, tuple(sorted(M.actions)))
        if key not in self._pres_cache:
            sigma = self.lib.module(lab)
            if set(sigma.actions) - set(M.actions):
                sigma = sigma.restrict_to(
                    [x for x in sigma.actions if x in M.actions])
            v0 = sigma.F.zeros((sigma.dim,))
            v0[0, 0] = 1
            self._pres_cache[key] = CyclicPresentation(sigma, v0)
        return self._pres_cache[key]

    def socle_data(self, M):
        out = []
        inv = self.pro_p_invariants(M)
        if inv.shape[0] == 0:
            return out
        for (m, n), eigvecs in self.torus_eval(M, inv):
            for lab in self.lib.candidates_for_char(m, n):
                pres = self._presentation(lab, M)
                homs = pres.homs_to(M, eigvecs)
                if homs:
                    out.append((lab, homs))
        return out

    def socle(self, M):
        rows = []
        for lab, homs in self.socle_data(M):
            for h in homs:
                for j in range(h.shape[1]):
                    rows.append(h[:, j])
        if not rows:
            return M.F.zeros((0, M.dim))
        return M.F.row_space(np.stack(rows))

    def socle_multiset(self, M):
        out = {}
        for lab, homs in self.socle_data(M):
            out[lab] = out.get(lab, 0) + len(homs)
        return out

    def socle_series(self, M):
        layers = []
        cur = M
        while cur.dim > 0:
            data = self.socle_data(cur)
            layer = {}
            rows = []
            for lab, homs in data:
                layer[lab] = layer.get(lab, 0) + len(homs)
                for h in homs:
                    for j in range(h.shape[1]):
                        rows.append(h[:, j])
            if not layer:
                raise RuntimeError("socle computation found no constituents")
            layers.append(layer)
            basis = cur.F.row_space(np.stack(rows))
            if basis.shape[0] == cur.dim:
                break
            cur = cur.quotient(basis)
        return layers

    def jh_multiset(self, M):
        out = {}
        if M.dim == 0:
            return out
        for layer in self.socle_series(M):
            for lab, mult in layer.items():
                out[lab] = out.get(lab, 0) + mult
        return out

    def radical_basis(self, M):
        Md = M.dual()
        socd = self.socle(Md)
        if socd.shape[0] == 0:
            return M.F.zeros((0, M.dim))
        return M.F.kernel(socd)

    def cosocle_multiset(self, M):
        rad = self.radical_basis(M)
        if rad.shape[0] == 0:
            return self.socle_multiset(M)
        quo = M.quotient(M.F.row_space(rad))
        return self.socle_multiset(quo)

    def hom_dim_from_irr(self, lab, M):
        inv = self.pro_p_invariants(M)
        if inv.shape[0] == 0:
            return 0
        total = 0
        for (m, n), eigvecs in self.torus_eval(M, inv):
            if lab in self.lib.candidates_for_char(m, n):
                pres = self._presentation(lab, M)
                total += len(pres.homs_to(M, eigvecs))
        return total


def _generator_vector(analyzer, P):
    """A vector generating a module with simple cosocle."""
    F = P.F
    rad = analyzer.radical_basis(P)
    if rad.shape[0]:
        _, pivots = F.rref(rad)
    else:
        pivots = []
    for j in range(P.dim):
        if j not in pivots:
            v = F.zeros((P.dim,))
            v[j, 0] = 1
            return v
    raise ValueError("module has no cosocle generator")
