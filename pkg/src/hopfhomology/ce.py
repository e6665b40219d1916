"""The Koszul-type free resolution of the trivial module over U(g).

Terms are U(g) (x) Lambda^n g, free left modules of rank C(d, n) on
wedge generators; the differential is the classical one

    d e_I = sum_l (-1)^l x_{i_l} e_{I - i_l}
          + sum_{p<q} (-1)^{p+q} e_{[x_p, x_q] ^ rest},

with d d = 0 verified as an exact PBW identity on every generator.
The comultiplication P -> Tot(P (x) P) is the subset-splitting map with
unshuffle signs; it is checked to be a chain map against the diagonal
U(g)-action (primitives act by Leibniz), so cup and cap products over
U(g) evaluate in closed form.

The same file holds the degree-truncated bar machinery for U(g): the
cochain complex of maps on tuples of PBW monomials of bounded total
degree.  Multiplication never raises PBW degree, so these truncations
are honest quotient complexes; the certified window of any number
computed from them carries the bound used.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import LiftFailedError, ValidationError, WindowExceededError
from .linalg import Matrix, Q, zero_vec
from .pbw import (
    LieAlgebraData,
    LieModule,
    delta_elt,
    mono_deg,
    mono_mul,
    mono_one,
    monomials_upto,
    pbw_multiply,
)


def _merge(d, k, c):
    if not c:
        return
    s = d.get(k, 0) + c
    if s:
        d[k] = s
    else:
        del d[k]


def _insert_sign(z, rest):
    """Sign of moving z from the front into its sorted slot of rest."""
    pos = sum(1 for x in rest if x < z)
    return Q(-1) ** pos, tuple(sorted(rest + (z,)))


class CEResolution:
    """Finite free resolution of the trivial U(g)-module.

    Implements the generator interface consumed by the Ext and Tor
    machinery: entries of diff_cols are PBW element dicts, actions are
    taken through LieModule.
    """

    def __init__(self, g: LieAlgebraData, validate=True):
        self.g = g
        self.dimension = g.dim
        self.max_degree = 10 ** 9  # complete resolution: every degree certified
        self._gens = {
            n: list(combinations(range(g.dim), n)) for n in range(g.dim + 1)
        }
        self._gen_index = {
            n: {s: k for k, s in enumerate(self._gens[n])} for n in range(g.dim + 1)
        }
        self._diff_cols = {}
        if validate:
            self._check_square_zero()

    def rank(self, n):
        if 0 <= n <= self.g.dim:
            return comb(self.g.dim, n)
        return 0

    def generators(self, n):
        return self._gens.get(n, [])

    def gen_index(self, n, s):
        return self._gen_index[n][s]

    def diff_cols(self, n):
        """Columns of d_n : P_n -> P_{n-1}; entries are PBW dicts."""
        if n in self._diff_cols:
            return self._diff_cols[n]
        if not (1 <= n <= self.g.dim):
            self._diff_cols[n] = []
            return []
        g = self.g
        cols = []
        for I in self._gens[n]:
            col = {}
            for l, xi in enumerate(I):
                rest = I[:l] + I[l + 1 :]
                sign = Q(-1) ** l
                k = self._gen_index[n - 1][rest]
                gen_mono = tuple(1 if t == xi else 0 for t in range(g.dim))
                entry = col.setdefault(k, {})
                _merge(entry, gen_mono, sign)
            for p in range(n):
                for q in range(p + 1, n):
                    rest = tuple(x for t, x in enumerate(I) if t not in (p, q))
                    base_sign = Q(-1) ** (p + q)
                    for z, c in enumerate(g.bracket[I[p]][I[q]]):
                        if not c or z in rest:
                            continue
                        ins, merged = _insert_sign(z, rest)
                        k = self._gen_index[n - 1][merged]
                        entry = col.setdefault(k, {})
                        _merge(entry, mono_one(g.dim), base_sign * c * ins)
            cols.append({k: e for k, e in col.items() if e})
        self._diff_cols[n] = cols
        return cols

    def act_left(self, entry, M: LieModule):
        return M.act(entry)

    act_right = act_left

    def _check_square_zero(self):
        g = self.g
        for n in range(2, g.dim + 1):
            outer = self.diff_cols(n - 1)
            for j, col in enumerate(self.diff_cols(n)):
                acc = {}
                for i, entry in col.items():
                    for i2, entry2 in outer[i].items():
                        prod = pbw_multiply(g, entry, entry2)
                        for m, c in prod.items():
                            _merge(acc, (i2, m), c)
                if acc:
                    raise ValidationError(f"d d != 0 at degree {n}, generator {j}")

    # -- the subset-splitting comultiplication ---------------------------

    def diagonal(self, K):
        """List of (I, J, sign) with I + J = K as ordered subsets."""
        out = []
        n = len(K)
        for r in range(n + 1):
            for pos in combinations(range(n), r):
                I = tuple(K[t] for t in pos)
                J = tuple(K[t] for t in range(n) if t not in pos)
                inv = 0
                posset = set(pos)
                for a in range(n):
                    if a in posset:
                        continue
                    inv += sum(1 for b in pos if b > a)
                out.append((I, J, Q(-1) ** inv))
        return out

    def check_diagonal_chain_map(self):
        """d_Tot(diag(e_K)) equals diag(d e_K) for every generator.

        Elements of P_i (x) P_j are dicts {(I, J, m1, m2): coeff}; the
        total differential uses the sign (-1)^i on the second leg and
        the action of U(g) on a tensor leg multiplies from the left.
        """
        g = self.g
        for n in range(1, g.dim + 1):
            for K in self._gens[n]:
                lhs = {}
                for I, J, sgn in self.diagonal(K):
                    i = len(I)
                    # d on the first leg
                    if i >= 1:
                        for k, entry in self.diff_cols(i)[self.gen_index(i, I)].items():
                            I2 = self._gens[i - 1][k]
                            for m, c in entry.items():
                                _merge(lhs, (I2, J, m, mono_one(g.dim)), sgn * c)
                    # d on the second leg with the Koszul sign
                    j = len(J)
                    if j >= 1:
                        sign2 = Q(-1) ** i
                        for k, entry in self.diff_cols(j)[self.gen_index(j, J)].items():
                            J2 = self._gens[j - 1][k]
                            for m, c in entry.items():
                                _merge(lhs, (I, J2, mono_one(g.dim), m), sgn * sign2 * c)
                rhs = {}
                for k, entry in self.diff_cols(n)[self.gen_index(n, K)].items():
                    K2 = self._gens[n - 1][k]
                    for m, c in entry.items():
                        # diagonal action of the PBW element m on diag(e_K2)
                        for I, J, sgn in self.diagonal(K2):
                            for (m1, m2), c2 in delta_elt(g, {m: c}).items():
                                _merge(rhs, (I, J, m1, m2), sgn * c2)
                for key in set(lhs) | set(rhs):
                    if lhs.get(key, 0) != rhs.get(key, 0):
                        raise ValidationError(
                            f"comultiplication is not a chain map at {K}"
                        )
        return True

    def __repr__(self):
        return f"CEResolution({self.g.name})"


def ce_resolution(g: LieAlgebraData, validate=True) -> CEResolution:
    res = CEResolution(g, validate=validate)
    if validate:
        res.check_diagonal_chain_map()
    return res


# ---------------------------------------------------------------------------
# bounded-degree linear algebra on free U(g) complexes


class BoundedBasis:
    """Basis (generator, monomial) of U(g)^{ranks} up to PBW degree m."""

    def __init__(self, g, rank, bound):
        self.g = g
        self.rank = rank
        self.bound = bound
        self.monos = monomials_upto(g.dim, bound)
        self.index = {}
        for j in range(rank):
            for m in self.monos:
                self.index[(j, m)] = len(self.index)
        self.dim = len(self.index)

    def coords(self, elt_by_gen):
        v = zero_vec(self.dim)
        for j, elt in elt_by_gen.items():
            for m, c in elt.items():
                v[self.index[(j, m)]] += c
        return v


def bounded_free_map(g, cols, src: BoundedBasis, dst: BoundedBasis, entries_act="right") -> Matrix:
    """Matrix of a generator-level map on bounded coefficient spaces.

    cols[j] = {i: pbw entry}.  With entries_act = "right" the map sends
    x^a e_j to sum_i (x^a entry) e_i (left modules, coefficients on the
    left); with "left" it sends x^a e_j to sum_i (entry x^a) e_i, which
    is the dualized differential acting on right-module coordinates.
    Entries of positive degree raise the bound, so dst.bound must cover
    src.bound plus the top entry degree.
    """
    out = Matrix.zeros(dst.dim, src.dim)
    for j in range(src.rank):
        col = cols[j] if j < len(cols) else {}
        for m in src.monos:
            cidx = src.index[(j, m)]
            for i, entry in col.items():
                if entries_act == "right":
                    prod = pbw_multiply(g, {m: Q(1)}, entry)
                else:
                    prod = pbw_multiply(g, entry, {m: Q(1)})
                for m2, c in prod.items():
                    out.rows[dst.index[(i, m2)]][cidx] += c
    return out


# ---------------------------------------------------------------------------
# degree-truncated bar complex of U(g)


class UgBarComplex:
    """Quotient cochain model of the bar resolution of U(g).

    Degree n cochains are M-valued functions on tuples of n PBW
    monomials of total degree <= bound; the differential is dual to the
    bar boundary.  Multiplication in U(g) never raises total degree, so
    this is a genuine quotient complex of the full bar cochain complex.
    """

    def __init__(self, g: LieAlgebraData, bound: int):
        self.g = g
        self.bound = bound
        self._tuples = {}

    def tuples(self, n):
        if n in self._tuples:
            return self._tuples[n]
        monos = monomials_upto(self.g.dim, self.bound)
        out = []

        def rec(prefix, rest, budget):
            if rest == 0:
                out.append(tuple(prefix))
                return
            for m in monos:
                d = mono_deg(m)
                if d <= budget:
                    rec(prefix + [m], rest - 1, budget - d)

        rec([], n, self.bound)
        out.sort()
        idx = {t: k for k, t in enumerate(out)}
        self._tuples[n] = (out, idx)
        return self._tuples[n]

    def cochain_dim(self, n, M):
        return len(self.tuples(n)[0]) * M.dim

    def cochain_matrix(self, n, M: LieModule) -> Matrix:
        """delta : C^n(M) -> C^{n+1}(M) from the bar faces."""
        g = self.g
        dm = M.dim
        src, src_idx = self.tuples(n)
        dst, _ = self.tuples(n + 1)
        out = Matrix.zeros(len(dst) * dm, len(src) * dm)
        for ti, t in enumerate(dst):
            # u_1 . phi(u_2 ..)
            act = M.act_mono(t[0])
            k = src_idx[t[1:]]
            for a in range(dm):
                for b in range(dm):
                    if act.rows[a][b]:
                        out.rows[ti * dm + a][k * dm + b] += act.rows[a][b]
            # inner faces
            for i in range(1, n + 1):
                sign = Q(-1) ** i
                prod = mono_mul(g, t[i - 1], t[i])
                for m, c in prod.items():
                    merged = t[: i - 1] + (m,) + t[i + 1 :]
                    k = src_idx[merged]
                    for a in range(dm):
                        out.rows[ti * dm + a][k * dm + a] += sign * c
            # counit face kills positive degree in the last slot
            if mono_deg(t[-1]) == 0:
                sign = Q(-1) ** (n + 1)
                k = src_idx[t[:-1]]
                for a in range(dm):
                    out.rows[ti * dm + a][k * dm + a] += sign
        return out

    def ext_dims(self, M: LieModule, upto) -> list:
        mats = [self.cochain_matrix(n, M) for n in range(upto + 1)]
        for n in range(upto):
            if not (mats[n + 1] @ mats[n]).is_zero():
                raise ValidationError("truncated bar differential does not square to zero")
        dims = []
        for n in range(upto + 1):
            c = mats[n].ncols
            r_out = mats[n].rank()
            r_in = mats[n - 1].rank() if n >= 1 else 0
            dims.append(c - r_out - r_in)
        return dims


# ---------------------------------------------------------------------------
# comparison CE -> bar over U(g) via the bar contraction


def ce_to_bar_words(ce: CEResolution, upto: int):
    """Images of the CE generators in the bar complex of U(g).

    Bar elements are dicts {tuple of monomials: coeff} (slot 0 is the
    module coefficient).  Built by the contraction recursion
    F(e) = s(F(d e)) with s = prepend a unit slot; exact in PBW
    arithmetic, and verified to be a chain map by the caller's tests.
    """
    g = ce.g
    unit = mono_one(g.dim)
    images = [{(): {(unit,): Q(1)}}]

    def bar_mul_left(u_elt, bar_elt):
        out = {}
        for w, c in bar_elt.items():
            for m, cm in u_elt.items():
                prod = mono_mul(g, m, w[0])
                for m2, c2 in prod.items():
                    _merge(out, (m2,) + w[1:], c * cm * c2)
        return out

    for n in range(1, upto + 1):
        prev = images[n - 1]
        cur = {}
        for K in ce.generators(n):
            acc = {}
            for k, entry in ce.diff_cols(n)[ce.gen_index(n, K)].items():
                K2 = ce.generators(n - 1)[k]
                img = prev[K2]
                for w, c in bar_mul_left(entry, img).items():
                    _merge(acc, w, c)
            # contraction: prepend a unit slot
            lifted = {}
            for w, c in acc.items():
                _merge(lifted, (unit,) + w, c)
            cur[K] = lifted
        images.append(cur)
    return images


def bar_boundary_word_ug(g, w):
    """b' on a bar word of monomials over U(g)."""
    n = len(w) - 1
    out = {}
    if n == 0:
        return out
    for i in range(n):
        sign = Q(-1) ** i
        prod = mono_mul(g, w[i], w[i + 1])
        for m, c in prod.items():
            _merge(out, w[:i] + (m,) + w[i + 2 :], sign * c)
    if mono_deg(w[n]) == 0:
        sign = Q(-1) ** n
        _merge(out, w[:-1], sign)
    return out


def ce_vs_bar_ext(g: LieAlgebraData, M: LieModule, upto: int, bound: int):
    """Ext dims over U(g) from the Koszul resolution and the bar model.

    Returns (ce_dims, bar_dims, per-degree bijectivity of the induced
    comparison on classes).  The comparison pulls a bar cochain back
    along the contraction-built map CE -> bar and reads it on CE
    generators.
    """
    from .homology import ext as ext_generic

    ce = ce_resolution(g, validate=False)
    bar = UgBarComplex(g, bound)
    ce_dims = []
    bar_mats = [bar.cochain_matrix(n, M) for n in range(upto + 2)]
    bar_dims = []
    for n in range(upto + 1):
        c = bar_mats[n].ncols
        bar_dims.append(c - bar_mats[n].rank() - (bar_mats[n - 1].rank() if n else 0))
    images = ce_to_bar_words(ce, upto + 1)
    # verify the comparison is a chain map degree by degree
    for n in range(1, upto + 1):
        for K in ce.generators(n):
            img = images[n][K]
            bd = {}
            for w, c in img.items():
                for w2, d in bar_boundary_word_ug(g, w).items():
                    _merge(bd, w2, c * d)
            direct = {}
            for k, entry in ce.diff_cols(n)[ce.gen_index(n, K)].items():
                K2 = ce.generators(n - 1)[k]
                for w, c in images[n - 1][K2].items():
                    for m, cm in entry.items():
                        for m2, c2 in mono_mul(g, m, w[0]).items():
                            _merge(direct, (m2,) + w[1:], c * cm * c2)
            if bd != direct:
                raise LiftFailedError(f"comparison map fails at degree {n}")
    bijective = []
    for n in range(upto + 1):
        eg = ext_generic(ce, M, n)
        ce_dims.append(eg.dim)
        src, src_idx = bar.tuples(n)
        dm = M.dim
        bar_h = _cochain_homology(bar_mats, n)
        if eg.dim != bar_h.dim:
            bijective.append(False)
            continue
        cols = []
        for v in bar_h.representatives():
            pulled = []
            for K in ce.generators(n):
                vals = zero_vec(dm)
                for w, c in images[n][K].items():
                    # evaluate the cochain: slot 0 acts on the value
                    tail = w[1:]
                    if tail not in src_idx:
                        raise WindowExceededError(
                            "comparison image leaves the truncation window"
                        )
                    k = src_idx[tail]
                    act = M.act_mono(w[0])
                    for a in range(dm):
                        for b in range(dm):
                            if act.rows[a][b] and v[k * dm + b]:
                                vals[a] += c * act.rows[a][b] * v[k * dm + b]
                pulled.extend(vals)
            cols.append(eg.class_of(pulled))
        if eg.dim == 0:
            bijective.append(True)
        else:
            m = Matrix.from_cols(cols, nrows=eg.dim)
            bijective.append(m.rank() == eg.dim)
    return ce_dims, bar_dims, bijective


def _cochain_homology(mats, n):
    from .complexes import HomologySpace

    d_out = mats[n]
    if n >= 1:
        d_in = mats[n - 1]
    else:
        d_in = Matrix.zeros(mats[0].ncols, 0)
    return HomologySpace(d_out, d_in)
