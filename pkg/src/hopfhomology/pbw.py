"""Poincare-Birkhoff-Witt arithmetic in universal envelopes U(g).

Monomials are exponent tuples for the ordered basis x_1 < .. < x_d;
elements are dicts {exponent tuple: Fraction}.  Straightening uses
x_i x_j = x_j x_i + [x_i, x_j] and never raises total degree, so degree
bounds certified by callers are stable under multiplication.

The Hopf structure of U(g) is generated by the primitives: the
coproduct of a PBW monomial is the binomial expansion, the counit kills
every positive degree, and the translation map (the inverse Galois map
against 1) is built from x -> x (x) 1 - 1 (x) x by the reversed
multiplicativity rule.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import comb

from .errors import DegreeOverflowError, ValidationError
from .linalg import Matrix, zero_vec


class LieAlgebraData:
    """Finite dimensional Lie algebra by bracket structure constants."""

    def __init__(self, dim, brackets, name=None, labels=None, validate=True):
        self.dim = dim
        self.name = name or f"lie{dim}"
        self.labels = labels or [f"x{i}" for i in range(dim)]
        self.bracket = [[[Q(x) for x in brackets[i][j]] for j in range(dim)] for i in range(dim)]
        self._xmul_cache = {}
        if validate:
            self._validate()

    def _validate(self):
        d = self.dim
        for i in range(d):
            for j in range(d):
                anti = [a + b for a, b in zip(self.bracket[i][j], self.bracket[j][i])]
                if any(anti):
                    raise ValidationError(f"bracket not antisymmetric at ({i},{j})")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    total = zero_vec(d)
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket[a][b]
                        for m, cm in enumerate(inner):
                            if cm:
                                for n, cn in enumerate(self.bracket[m][c]):
                                    if cn:
                                        total[n] += cm * cn
                    if any(total):
                        raise ValidationError(f"Jacobi fails at ({i},{j},{k})")

    def bracket_vec(self, u, v):
        d = self.dim
        out = zero_vec(d)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    for k, c in enumerate(self.bracket[i][j]):
                        if c:
                            out[k] += a * b * c
        return out

    def adjoint_matrix(self, i):
        """ad x_i as a matrix on g."""
        return Matrix.from_cols([self.bracket[i][j] for j in range(self.dim)], nrows=self.dim)

    def adjoint_trace(self, i):
        m = self.adjoint_matrix(i)
        return sum(m.rows[k][k] for k in range(self.dim))

    def opposite(self):
        d = self.dim
        neg = [[[-x for x in self.bracket[i][j]] for j in range(d)] for i in range(d)]
        return LieAlgebraData(d, neg, name=self.name + "-op", labels=self.labels, validate=False)

    def __repr__(self):
        return f"LieAlgebraData({self.name}, dim {self.dim})"


# ---------------------------------------------------------------------------
# monomials


def mono_deg(m):
    return sum(m)


def mono_one(d):
    return (0,) * d


def monomials_upto(d, bound):
    """All exponent tuples of total degree <= bound, lex sorted."""
    out = []

    def rec(prefix, rest, budget):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for e in range(budget + 1):
            rec(prefix + [e], rest - 1, budget - e)

    rec([], d, bound)
    out.sort()
    return out


def elt_scale(c, u):
    if not c:
        return {}
    return {m: c * a for m, a in u.items()}


def elt_add(*elts):
    out = {}
    for e in elts:
        for m, c in e.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def elt_deg(u):
    return max((mono_deg(m) for m in u), default=0)


def _xmul(g: LieAlgebraData, i, m):
    """x_i times the monomial m, straightened; dict of monomials."""
    key = (i, m)
    cached = g._xmul_cache.get(key)
    if cached is not None:
        return cached
    j = None
    for k in range(i):
        if m[k]:
            j = k
            break
    if j is None:
        out = {m[:i] + (m[i] + 1,) + m[i + 1 :]: Q(1)}
    else:
        # m = x_j m' with j minimal, so x_i m = x_j x_i m' + [x_i, x_j] m'.
        # Re-prepending x_j must recurse: brackets may create indices < j.
        mp = m[:j] + (m[j] - 1,) + m[j + 1 :]
        out = {}
        for mm, c in _xmul(g, i, mp).items():
            for m2, c2 in _xmul(g, j, mm).items():
                s = out.get(m2, 0) + c * c2
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        for k, ck in enumerate(g.bracket[i][j]):
            if ck:
                for mm, c in _xmul(g, k, mp).items():
                    s = out.get(mm, 0) + ck * c
                    if s:
                        out[mm] = s
                    else:
                        out.pop(mm, None)
    g._xmul_cache[key] = out
    return out


def mono_mul(g: LieAlgebraData, m1, m2):
    """Normal form of the product of two PBW monomials."""
    result = {m2: Q(1)}
    factors = []
    for i in range(g.dim):
        factors.extend([i] * m1[i])
    for i in reversed(factors):
        nxt = {}
        for m, c in result.items():
            for mm, d in _xmul(g, i, m).items():
                s = nxt.get(mm, 0) + c * d
                if s:
                    nxt[mm] = s
                else:
                    nxt.pop(mm, None)
        result = nxt
    return result


def pbw_multiply(g: LieAlgebraData, u, v, bound=None):
    """Product of two elements; DegreeOverflowError past the bound."""
    out = {}
    for m1, c1 in u.items():
        for m2, c2 in v.items():
            for m, c in mono_mul(g, m1, m2).items():
                s = out.get(m, 0) + c1 * c2 * c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
    if bound is not None:
        worst = max((mono_deg(m) for m in out), default=0)
        if worst > bound:
            raise DegreeOverflowError(f"product has degree {worst} > bound {bound}", bound=bound)
    return out


def elt_counit(u):
    d = None
    for m in u:
        d = len(m)
        break
    if d is None:
        return Q(0)
    return u.get(mono_one(d), Q(0))


def generator(g: LieAlgebraData, i):
    m = [0] * g.dim
    m[i] = 1
    return {tuple(m): Q(1)}


def one(g: LieAlgebraData):
    return {mono_one(g.dim): Q(1)}


# ---------------------------------------------------------------------------
# the Hopf structure on generators, extended to monomials


def delta_mono(g: LieAlgebraData, m):
    """Binomial coproduct of a PBW monomial: dict {(m1, m2): coeff}."""
    d = g.dim
    out = {}

    def rec(i, left, right, coef):
        if i == d:
            key = (tuple(left), tuple(right))
            s = out.get(key, 0) + coef
            if s:
                out[key] = s
            else:
                out.pop(key, None)
            return
        for k in range(m[i] + 1):
            left[i] = k
            right[i] = m[i] - k
            rec(i + 1, left, right, coef * comb(m[i], k))

    rec(0, [0] * d, [0] * d, Q(1))
    return out


def delta_elt(g, u):
    out = {}
    for m, c in u.items():
        for key, d_ in delta_mono(g, m).items():
            s = out.get(key, 0) + c * d_
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def translation_mono(g: LieAlgebraData, m):
    """u -> u_+ (x) u_-, built one generator factor at a time.

    Uses the reversed multiplicativity (uv)_+ (x) (uv)_- =
    u_+ v_+ (x) v_- u_-, with x_+ (x) x_- = x (x) 1 - 1 (x) x on
    generators.  Second legs multiply in reversed order, so they get
    straightened.
    """
    d = g.dim
    result = {(mono_one(d), mono_one(d)): Q(1)}
    factors = []
    for i in range(d):
        factors.extend([i] * m[i])
    for i in factors:
        gmono = tuple(1 if k == i else 0 for k in range(d))
        step = {}
        for (p, q), c in result.items():
            # term x_i (x) 1: p x_i (x) q
            for mm, cc in mono_mul(g, p, gmono).items():
                key = (mm, q)
                s = step.get(key, 0) + c * cc
                if s:
                    step[key] = s
                else:
                    step.pop(key, None)
            # term -1 (x) x_i: p (x) x_i q  (new factor multiplies from the left)
            for mm, cc in _xmul(g, i, q).items():
                key = (p, mm)
                s = step.get(key, 0) - c * cc
                if s:
                    step[key] = s
                else:
                    step.pop(key, None)
        result = step
    return result


def translation_elt(g, u):
    out = {}
    for m, c in u.items():
        for key, d_ in translation_mono(g, m).items():
            s = out.get(key, 0) + c * d_
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# finite dimensional modules over U(g)


class LieModule:
    """Finite dimensional U(g)-module given by generator action matrices.

    Left modules: rho([x,y]) = rho(x) rho(y) - rho(y) rho(x).
    Right modules act through matrices on column vectors, m.u = R(u) m,
    so R([x,y]) = R(y) R(x) - R(x) R(y).
    """

    def __init__(self, g: LieAlgebraData, dim, side, gen_matrices, name=None, validate=True):
        if side not in ("left", "right"):
            raise ValidationError("side must be 'left' or 'right'")
        self.g = g
        self.dim = dim
        self.side = side
        self.name = name or "module"
        self.gen = [m if isinstance(m, Matrix) else Matrix(m, ncols=dim) for m in gen_matrices]
        if len(self.gen) != g.dim:
            raise ValidationError("one matrix per Lie generator required")
        self._mono_cache = {}
        if validate:
            self._validate()

    def _validate(self):
        d = self.g.dim
        for i in range(d):
            for j in range(d):
                comm = self.gen[i] @ self.gen[j] - self.gen[j] @ self.gen[i]
                expect = Matrix.zeros(self.dim, self.dim)
                for k, c in enumerate(self.g.bracket[i][j]):
                    if c:
                        expect = expect + self.gen[k].scale(c)
                if self.side == "right":
                    expect = -expect
                if comm != expect:
                    raise ValidationError(
                        f"matrices do not represent the bracket at ({i},{j}) [{self.side}]"
                    )

    def act_mono(self, m):
        cached = self._mono_cache.get(m)
        if cached is not None:
            return cached
        out = Matrix.identity(self.dim)
        d = self.g.dim
        order = range(d) if self.side == "left" else reversed(range(d))
        for i in order:
            for _ in range(m[i]):
                out = out @ self.gen[i]
        self._mono_cache[m] = out
        return out

    def act(self, elt):
        out = Matrix.zeros(self.dim, self.dim)
        for m, c in elt.items():
            if c:
                out = out + self.act_mono(m).scale(c)
        return out

    @classmethod
    def trivial(cls, g, side="left"):
        return cls(g, 1, side, [Matrix([[0]]) for _ in range(g.dim)], name="trivial")

    @classmethod
    def adjoint(cls, g):
        return cls(g, g.dim, "left", [g.adjoint_matrix(i) for i in range(g.dim)], name="adjoint")

    @classmethod
    def weight_right(cls, g, weights, name="weight"):
        """One dimensional right module m.x_i = weights[i] m."""
        return cls(g, 1, "right", [Matrix([[w]]) for w in weights], name=name)

    def __repr__(self):
        return f"LieModule({self.name}, {self.side}, dim {self.dim} over {self.g.name})"


def tensor_left_lie(g, M: LieModule, N: LieModule) -> LieModule:
    """Diagonal action on M (x) N for left modules (primitives add)."""
    if M.side != "left" or N.side != "left":
        raise ValidationError("tensor_left_lie needs two left modules")
    mats = []
    im = Matrix.identity(M.dim)
    i_n = Matrix.identity(N.dim)
    for i in range(g.dim):
        mats.append(M.gen[i].kron(i_n) + im.kron(N.gen[i]))
    return LieModule(g, M.dim * N.dim, "left", mats, name=f"{M.name}(x){N.name}")


def tensor_right_lie(g, M: LieModule, P: LieModule) -> LieModule:
    """Right action (m (x) p) x = m (x) p x - x m (x) p on M (x) P."""
    if M.side != "left" or P.side != "right":
        raise ValidationError("tensor_right_lie needs a left and a right module")
    mats = []
    im = Matrix.identity(M.dim)
    ip = Matrix.identity(P.dim)
    for i in range(g.dim):
        mats.append(im.kron(P.gen[i]) - M.gen[i].kron(ip))
    return LieModule(g, M.dim * P.dim, "right", mats, name=f"{M.name}(x){P.name}")


def right_from_left(g, M: LieModule) -> LieModule:
    """Flip a left module to a right module through x -> -x."""
    return LieModule(g, M.dim, "right", [-m for m in M.gen], name=M.name + "-r")


def ug_hopf_report(g: LieAlgebraData, bound=3) -> dict:
    """Translation-map identities on all PBW monomials of degree <= bound.

    The sweep is finite and certified by the bound (the full basis is
    infinite).  Checks the two composition identities against the
    coproduct, the counit laws, coassociativity, and multiplicativity
    of the coproduct on monomial pairs inside the window.
    """
    checks = {}
    monos = monomials_upto(g.dim, bound)
    unit = mono_one(g.dim)

    def pair_mul_second(pairs, q):
        out = {}
        for (x, y), c in pairs.items():
            for y2, c2 in mono_mul(g, y, q).items():
                k = (x, y2)
                s = out.get(k, 0) + c * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    ok1 = ok2 = True
    for m in monos:
        acc1 = {}
        for (p, q), c in translation_mono(g, m).items():
            for (x, y), c2 in delta_mono(g, p).items():
                for y2, c3 in mono_mul(g, y, q).items():
                    k = (x, y2)
                    s = acc1.get(k, 0) + c * c2 * c3
                    if s:
                        acc1[k] = s
                    else:
                        acc1.pop(k, None)
        if acc1 != {(m, unit): Q(1)}:
            ok1 = False
        acc2 = {}
        for (p, q), c in delta_mono(g, m).items():
            for (x, y), c2 in translation_mono(g, p).items():
                for y2, c3 in mono_mul(g, y, q).items():
                    k = (x, y2)
                    s = acc2.get(k, 0) + c * c2 * c3
                    if s:
                        acc2[k] = s
                    else:
                        acc2.pop(k, None)
        if acc2 != {(m, unit): Q(1)}:
            ok2 = False
    checks["translation_1"] = ok1
    checks["translation_2"] = ok2

    ok = True
    for m in monos:
        lhs = {}
        for (p, q), c in delta_mono(g, m).items():
            if q == unit:
                s = lhs.get(p, 0) + c
                if s:
                    lhs[p] = s
                else:
                    lhs.pop(p, None)
        if lhs != {m: Q(1)}:
            ok = False
        rhs = {}
        for (p, q), c in delta_mono(g, m).items():
            if p == unit:
                s = rhs.get(q, 0) + c
                if s:
                    rhs[q] = s
                else:
                    rhs.pop(q, None)
        if rhs != {m: Q(1)}:
            ok = False
    checks["counit_laws"] = ok

    ok = True
    for m in monos:
        lhs = {}
        rhs = {}
        for (p, q), c in delta_mono(g, m).items():
            for (x, y), c2 in delta_mono(g, p).items():
                k = (x, y, q)
                s = lhs.get(k, 0) + c * c2
                if s:
                    lhs[k] = s
                else:
                    lhs.pop(k, None)
            for (x, y), c2 in delta_mono(g, q).items():
                k = (p, x, y)
                s = rhs.get(k, 0) + c * c2
                if s:
                    rhs[k] = s
                else:
                    rhs.pop(k, None)
        if lhs != rhs:
            ok = False
    checks["coassociative"] = ok

    ok = True
    half = [m for m in monos if mono_deg(m) * 2 <= bound]
    for m1 in half:
        for m2 in half:
            prod = mono_mul(g, m1, m2)
            direct = delta_elt(g, prod)
            composed = {}
            for (p, q), c in delta_mono(g, m1).items():
                for (x, y), c2 in delta_mono(g, m2).items():
                    for px, c3 in mono_mul(g, p, x).items():
                        for qy, c4 in mono_mul(g, q, y).items():
                            k = (px, qy)
                            s = composed.get(k, 0) + c * c2 * c3 * c4
                            if s:
                                composed[k] = s
                            else:
                                composed.pop(k, None)
            if direct != composed:
                ok = False
    checks["delta_multiplicative"] = ok

    ok = True
    for m1 in half:
        for m2 in half:
            prod = mono_mul(g, m1, m2)
            direct = {}
            for mm, c in prod.items():
                for k, c2 in translation_mono(g, mm).items():
                    s = direct.get(k, 0) + c * c2
                    if s:
                        direct[k] = s
                    else:
                        direct.pop(k, None)
            composed = {}
            for (p, q), c in translation_mono(g, m1).items():
                for (x, y), c2 in translation_mono(g, m2).items():
                    for px, c3 in mono_mul(g, p, x).items():
                        for yq, c4 in mono_mul(g, y, q).items():
                            k = (px, yq)
                            s = composed.get(k, 0) + c * c2 * c3 * c4
                            if s:
                                composed[k] = s
                            else:
                                composed.pop(k, None)
            if direct != composed:
                ok = False
    checks["translation_multiplicative"] = ok
    return checks


def transport_to_opposite(g: LieAlgebraData, gop: LieAlgebraData, elt):
    """Image of an element under U(g) -> U(g^op), x -> x (antihomomorphism).

    A PBW monomial maps to the product of its generator word reversed,
    straightened in the opposite algebra.
    """
    out = {}
    for m, c in elt.items():
        factors = []
        for i in range(g.dim):
            factors.extend([i] * m[i])
        acc = {mono_one(g.dim): Q(1)}
        for i in factors:  # reversed word means multiply on the left in order
            nxt = {}
            for mm, cc in acc.items():
                for m2, d in _xmul(gop, i, mm).items():
                    s = nxt.get(m2, 0) + cc * d
                    if s:
                        nxt[m2] = s
                    else:
                        nxt.pop(m2, None)
            acc = nxt
        for mm, cc in acc.items():
            s = out.get(mm, 0) + c * cc
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
    return out
