"""Serre-weight combinatorics via the extension graph.

Weights live in X*(T) = (Z^2)^f for a fixed (p, f).  The weight lattice of
the restricted SL2 is Lambda_W = Z^f via (a, b) -> a - b per embedding; the
root lattice sits inside as (2Z)^f and eta_j maps to the j-th unit vector.

A Serre-weight label is the class of a p-restricted weight modulo
(p - pi)X^0; it is determined by the differences d_j = a_j - b_j in [0, p-1]
and the central-character exponent sum(p^j (a_j + b_j)) modulo 2(p^f - 1).
"""

import itertools

from .weyl import AffineElt


class Weight:
    """Element of X*(T) = (Z^2)^f with ambient (p, f)."""

    __slots__ = ("pairs", "p")

    def __init__(self, pairs, p):
        self.pairs = tuple((int(a), int(b)) for a, b in pairs)
        self.p = int(p)

    @property
    def f(self):
        return len(self.pairs)

    def __eq__(self, other):
        return (isinstance(other, Weight) and self.pairs == other.pairs
                and self.p == other.p)

    def __hash__(self):
        return hash((self.pairs, self.p))

    def __repr__(self):
        return "Weight%r" % (self.pairs,)

    def __add__(self, other):
        return Weight([(a + c, b + d) for (a, b), (c, d)
                       in zip(self.pairs, other.pairs)], self.p)

    def __sub__(self, other):
        return Weight([(a - c, b - d) for (a, b), (c, d)
                       in zip(self.pairs, other.pairs)], self.p)

    def alpha_pairing(self, j):
        a, b = self.pairs[j]
        return a - b

    def plus_eta(self):
        return Weight([(a + 1, b) for a, b in self.pairs], self.p)

    def bar(self):
        """Image in Lambda_W = Z^f."""
        return tuple(a - b for a, b in self.pairs)

    def dominant(self):
        return all(a >= b for a, b in self.pairs)

    def p_restricted(self):
        return all(0 <= a - b <= self.p - 1 for a, b in self.pairs)

    def regular(self):
        return all(0 <= a - b < self.p - 1 for a, b in self.pairs)

    def in_C0(self):
        return all(0 < (a + 1 - b) < self.p for a, b in self.pairs)

    def deepness(self):
        """Largest N >= -1 such that the weight is N-deep in C0."""
        vals = [a + 1 - b for a, b in self.pairs]
        n = min(min(v, self.p - v) for v in vals) - 1
        return n

    def is_deep(self, N):
        return all(N < (a + 1 - b) < self.p - N for a, b in self.pairs)


def eta(f, p):
    return Weight([(1, 0)] * f, p)


def eta_J(J, f, p):
    return Weight([(1, 0) if j in J else (0, 0) for j in range(f)], p)


class DepthError(ValueError):
    pass


def _require(cond, msg, force=False):
    if not cond and not force:
        raise DepthError(msg)


class SerreWeightLabel:
    """Canonical label of F(lambda), lambda in X_1 mod (p - pi)X^0."""

    __slots__ = ("p", "f", "diffs", "cchar")

    def __init__(self, weight):
        p, f = weight.p, weight.f
        diffs = tuple(a - b for a, b in weight.pairs)
        if not all(0 <= d <= p - 1 for d in diffs):
            raise ValueError("weight %r is not p-restricted" % (weight,))
        modulus = 2 * (p ** f - 1)
        s = sum((p ** j) * (a + b) for j, (a, b) in enumerate(weight.pairs))
        self.p, self.f = p, f
        self.diffs = diffs
        self.cchar = s % modulus

    def __eq__(self, other):
        return (isinstance(other, SerreWeightLabel)
                and (self.p, self.f, self.diffs, self.cchar)
                == (other.p, other.f, other.diffs, other.cchar))

    def __hash__(self):
        return hash((self.p, self.f, self.diffs, self.cchar))

    def __repr__(self):
        return "F%r" % (self.canonical_weight().pairs,)

    def regular(self):
        return all(d <= self.p - 2 for d in self.diffs)

    def dim(self):
        out = 1
        for d in self.diffs:
            out *= d + 1
        return out

    def canonical_weight(self):
        """A fixed representative in X_1."""
        p, f = self.p, self.f
        modulus = 2 * (p ** f - 1)
        D = sum((p ** j) * d for j, d in enumerate(self.diffs))
        c = ((self.cchar - D) % modulus) // 2
        pairs = [(self.diffs[0] + c, c)]
        pairs += [(d, 0) for d in self.diffs[1:]]
        return Weight(pairs, p)

    def highest_weight_char(self):
        """(m, n) mod q-1: the T(k)-character of the highest weight line."""
        lam = self.canonical_weight()
        q1 = self.p ** self.f - 1
        m = sum((self.p ** j) * a for j, (a, b) in enumerate(lam.pairs)) % q1
        n = sum((self.p ** j) * b for j, (a, b) in enumerate(lam.pairs)) % q1
        return (m, n)


def label(weight):
    return SerreWeightLabel(weight)


# ---------------------------------------------------------------------------
# the translation map t_mu and friends


def in_graph(mu, omega):
    """omega in Lambda_W^mu: 0 <= <mubar + omega, alpha^vee> < p - 1."""
    bar = mu.bar()
    return all(0 <= bar[j] + omega[j] <= mu.p - 2 for j in range(mu.f))


def graph_points(mu):
    """All of Lambda_W^mu."""
    bar = mu.bar()
    ranges = [range(-bar[j], mu.p - 1 - bar[j]) for j in range(mu.f)]
    return [tuple(o) for o in itertools.product(*ranges)]


def translate(mu, omega, force=False):
    """The injective map t_mu: Lambda_W^mu -> Serre-weight labels."""
    f, p = mu.f, mu.p
    _require(in_graph(mu, omega), "omega outside the extension graph", force)
    ns, ds = [], []
    for o in omega:
        d = o % 2
        ns.append((o - d) // 2)
        ds.append(d)
    pairs = []
    for j in range(f):
        a, b = mu.pairs[j]
        n, d = ns[j], ds[j]
        if ds[(j + 1) % f] == 0:
            pairs.append((a + n + d, b - n))
        else:
            pairs.append((b - 1 - n, a + n + d - p + 1))
    return SerreWeightLabel(Weight(pairs, p))


def w_omega(omega, f):
    """w_omega = w_{0,J} for omega = eta_J mod Lambda_R: component j is
    nontrivial exactly when j+1 lies in J, i.e. when omega_{j+1} is odd."""
    return tuple(-1 if omega[(j + 1) % f] % 2 else 1 for j in range(f))


def apply_sign_tuple(signs, omega):
    return tuple(s * o for s, o in zip(signs, omega))


def change_origin(mu, omega, omega_prime, force=False):
    """t_lambda(omega') computed as t_mu(w_omega^{-1}(omega') + omega),
    where lambda is a representative of t_mu(omega)."""
    f = mu.f
    _require(in_graph(mu, omega), "omega outside the extension graph", force)
    w = w_omega(omega, f)
    shifted = tuple(w[j] * omega_prime[j] + omega[j] for j in range(f))
    _require(in_graph(mu, shifted),
             "w_omega^-1(omega') + omega outside the extension graph", force)
    return translate(mu, shifted, force=force)


def common_graph_coordinates(sigma, sigma_prime):
    """Find (mu, 0, omega') with sigma = t_mu(0), sigma' = t_mu(omega')."""
    if not (sigma.regular() and sigma_prime.regular()):
        raise ValueError("both weights must be regular")
    mu = sigma.canonical_weight()
    for omega in graph_points(mu):
        if translate(mu, omega) == sigma_prime:
            return mu, tuple([0] * mu.f), omega
    raise ValueError("weights do not lie in a common extension graph")


def ext1_predict(sigma, sigma_prime):
    """1 if the graph points are adjacent, else 0."""
    if sigma == sigma_prime:
        return 0
    try:
        _, _, omega = common_graph_coordinates(sigma, sigma_prime)
    except ValueError:
        return 0
    nonzero = [o for o in omega if o != 0]
    return 1 if len(nonzero) == 1 and nonzero[0] in (1, -1) else 0


# ---------------------------------------------------------------------------
# W(rhobar), Jordan-Hoelder of type reductions, and theta


def sigma_set(f):
    """Sigma = {eta_J image in Lambda_W} as 0/1 vectors."""
    return [tuple(1 if j in J else 0 for j in range(f))
            for J in _subsets(range(f))]


def _subsets(it):
    items = list(it)
    for mask in range(1 << len(items)):
        yield {items[i] for i in range(len(items)) if mask >> i & 1}


def weights_of_rhobar(s_eps, mu, force=False):
    """W(rhobar) = {F(t_{mu-eta}(s omega)) : omega in Sigma}."""
    f = mu.f
    base = mu - eta(f, mu.p)
    _require(base.is_deep(1), "mu - eta must be 1-deep in C0", force)
    out = set()
    for omega in sigma_set(f):
        out.add(translate(base, apply_sign_tuple(s_eps, omega), force=force))
    return out


def jh_of_type(s_eps, w_eps, mu, nu, force=False):
    """JH of the reduction of sigma(tau) for tau = tau(sw^-1, mu - sw^-1 nu).

    nu is a Weight with nu in eta + Lambda_R; returns the 2^f labels
    F(t_{mu-eta}(s w^-1 (omega - nubar))).
    """
    f, p = mu.f, mu.p
    nubar = nu.bar()
    _require(all((nubar[j] - 1) % 2 == 0 for j in range(f)),
             "nu must lie in eta + Lambda_R", force)
    sw = tuple(a * b for a, b in zip(s_eps, w_eps))  # s w^{-1} on Lambda_W
    swnu = apply_sign_tuple(sw, nubar)
    # depth hypothesis: mu - s w^-1(nu) - eta is 1-deep; on the alcove line
    # this reads 1 < <mu, alpha> - sw^-1(nubar) < p - 1 per embedding.
    vals = [mu.alpha_pairing(j) - swnu[j] for j in range(f)]
    _require(all(1 < v < p - 1 for v in vals),
             "mu - s w^-1(nu) - eta must be 1-deep in C0", force)
    base = mu - eta(f, p)
    out = set()
    for omega in sigma_set(f):
        point = apply_sign_tuple(sw, tuple(o - n for o, n in zip(omega, nubar)))
        out.add(translate(base, point, force=force))
    return out


T21 = (1, (2, 1))
T12 = (1, (1, 2))
W_T21 = (-1, (2, 1))


def theta(sigma, s_eps, mu, force=False):
    """theta(sigma) in {t_(2,1), t_(1,2)}^f for sigma in W(rhobar).

    The membership condition at embedding j of w is governed by the data of
    w at embedding f-1-j (through the * anti-isomorphism), so the component
    theta(sigma)_j reads off omega at index f-1-j.
    """
    f = mu.f
    base = mu - eta(f, mu.p)
    for omega in sigma_set(f):
        if translate(base, apply_sign_tuple(s_eps, omega), force=force) == sigma:
            return AffineElt([T21 if omega[(f - 1 - j) % f] == 1 else T12
                              for j in range(f)])
    raise ValueError("sigma is not a weight of rhobar")


def theta_membership(sigma, w, s_eps, mu, force=False):
    """sigma in JH(reduction of sigma(tau_w) tensor det-twist)?

    w lies in Adm^v(t_(2,1))^f; the twist replaces nu by nu - (1,1), which
    does not change its image in Lambda_W.
    """
    tnw = w.star().t_nu_w_form()
    w_eps = tuple(e for e, _ in tnw)
    nu = Weight([n for _, n in tnw], mu.p)
    jh = jh_of_type(s_eps, w_eps, mu, nu, force=force)
    return sigma in jh


# ---------------------------------------------------------------------------
# goodness and tame type exponents


def _pi_chain(s_eps, f, upto):
    """pi_j = s_1^{-1} ... s_j^{-1} as sign flips (S_2 case), j = 0..upto."""
    out = [1]
    acc = 1
    for j in range(1, upto + 1):
        acc *= s_eps[j % f]
        out.append(acc)
    return out


def goodness(s_eps, mu):
    """The divisor-congruence condition on (s, mu); n = 2."""
    f, p = mu.f, mu.p
    q = p ** f
    pi = _pi_chain(s_eps, f, 2 * f)
    # orbit sizes d(i): minimal d with pi_{fd}(i) = i; for n = 2 both i
    # have the same d since pi is a sign chain
    d = 1 if pi[f] == 1 else 2
    if d == 1:
        return True
    modulus = (q * q - 1) // (q - 1)  # only proper divisor d = 1
    for i in (0, 1):
        total = 0
        for j in range(2 * f):
            pair = mu.pairs[j % f]
            comp = pair if pi[j] == 1 else (pair[1], pair[0])
            total += (p ** j) * comp[i]
        if total % modulus == 0:
            return False
    return True


def deepness(mu, N):
    return mu.is_deep(N)


class TameTypeSpec:
    """Lowest alcove presentation data for a tame inertial type tau(s, kappa).

    kappa plays the role of mu + eta in the displayed definition; exponents
    are those of the fundamental characters of niveau f' = rf.
    """

    def __init__(self, s_eps, kappa):
        self.s_eps = tuple(s_eps)
        self.kappa = kappa
        f, p = kappa.f, kappa.p
        s_tau = 1
        for e in s_eps:
            s_tau *= e
        self.r = 1 if s_tau == 1 else 2
        self.fprime = self.r * f
        pi = _pi_chain(s_eps, f, self.fprime)
        self.alpha_prime = []
        for j in range(self.fprime):
            pair = kappa.pairs[j % f]
            self.alpha_prime.append(pair if pi[j] == 1 else (pair[1], pair[0]))
        # a'(j') = sum_i alpha'_{-j'+i} p^i  (indices mod f')
        self.a_primes = []
        for jp in range(self.fprime):
            acc = [0, 0]
            for i in range(self.fprime):
                src = self.alpha_prime[(-jp + i) % self.fprime]
                acc[0] += (p ** i) * src[0]
                acc[1] += (p ** i) * src[1]
            self.a_primes.append(tuple(acc))
        # a(0) = sum_{j<f} alpha'_j p^j
        acc = [0, 0]
        for j in range(f):
            acc[0] += (p ** j) * self.alpha_prime[j][0]
            acc[1] += (p ** j) * self.alpha_prime[j][1]
        self.a0 = tuple(acc)
        # s'_or,j = s_1^{-1} ... s_{f'-1-j}^{-1} = pi_{f'-1-j}
        self.orientation = [pi[self.fprime - 1 - jp]
                            for jp in range(self.fprime)]

    def exponents(self):
        """Exponent pair of the fundamental character omega_{f'}."""
        p, f = self.kappa.p, self.kappa.f
        if self.r == 1:
            return self.a0
        e1 = self.a0[0] + (p ** f) * self.a0[1]
        e2 = self.a0[1] + (p ** f) * self.a0[0]
        return (e1, e2)

    def orbit_invariant(self):
        """Multiset of character exponents at niveau 2f, mod p^{2f} - 1;
        invariant of the mod-p reduction as I_K-representation."""
        p, f = self.kappa.p, self.kappa.f
        mod2f = p ** (2 * f) - 1
        if self.r == 1:
            lift = 1 + p ** f
            return frozenset({(self.a0[0] * lift) % mod2f,
                              (self.a0[1] * lift) % mod2f})
        e1, e2 = self.exponents()
        return frozenset({e1 % mod2f, e2 % mod2f})


def tame_type_exponents(s_eps, kappa):
    return TameTypeSpec(s_eps, kappa)


# ---------------------------------------------------------------------------
# predicted constituent sets


def predicted_constituents(kind, lam, eps, bounds=None, n=None, force=False):
    """Constituent sets with the coordinatewise order.

    kind in {"D_lambda_eps", "Vtilde_m2", "VJfil"}; returns a dict mapping
    index tuples a to labels, with the partial order b <= a coordinatewise
    describing the submodule structure.
    """
    f, p = lam.f, lam.p
    if kind == "D_lambda_eps":
        _require(all(2 < lam.alpha_pairing(j) < p - 3 for j in range(f)),
                 "need 2 < <lambda, alpha> < p - 3", force)
        index = list(itertools.product(range(2), repeat=f))
    elif kind == "Vtilde_m2":
        _require(lam.is_deep(7), "lambda must be 7-deep in C0", force)
        index = [a for a in itertools.product(range(4), repeat=f)
                 if sum(x // 2 for x in a) <= 1]
    elif kind == "VJfil":
        if bounds is None or n is None:
            raise ValueError("VJfil needs bounds and n")
        _check_jfil_conditions(lam, eps, bounds, force)
        index = [a for a in itertools.product(
            *[range(B + 1) for B in bounds])
            if all(x % 2 == 1 or x == B for x, B in zip(a, bounds))
            and sum(x // 2 for x in a) == n - 1]
    else:
        raise ValueError("unknown kind %r" % (kind,))
    out = {}
    for a in index:
        point = tuple(e * x for e, x in zip(eps, a))
        out[a] = translate(lam, point, force=force)
    return out


def _check_jfil_conditions(lam, eps, bounds, force=False):
    f, p = lam.f, lam.p
    for i in range(f):
        B = bounds[i]
        prev = eps[(i - 1) % f]
        _require(B % 2 == (1 - prev) // 2 % 2,
                 "B_i parity condition fails at i=%d" % i, force)
        v = lam.alpha_pairing(i)
        if eps[i] == -1:
            _require(3 + 2 * (B // 2) <= v <= p - 4,
                     "depth bound fails at i=%d" % i, force)
        else:
            _require(3 <= v <= p - 4 - 2 * (B // 2),
                     "depth bound fails at i=%d" % i, force)
