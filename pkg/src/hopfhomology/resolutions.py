"""Resolutions of the base algebra: the bar construction and friends.

The bar complex of U over A has degree n term (U (x)_Aop)^{n+1}, a free
left U-module.  Words are kept in a tail normal form: the degree n
basis is (u, t_1 .. t_n) where u runs over the U-basis and each t is an
index into a fixed free decomposition U = (+)_t f_t <| A.  The glueing
relations push base coefficients leftward as |>> actions, so
projections never touch a row reduction.

The boundary is the alternating face sum ending in the counit face

    (-1)^n u_0 (x) .. (x) u_{n-2} (x) (eps(u_n) |>> u_{n-1}),

and the contracting homotopy prepends a unit slot, with bottom map
a -> eta(1 (x) a) on the augmentation (which is what the degree zero
homotopy identity forces, using that eps is right A-linear).

Free generator bookkeeping is the load bearing piece: the differential
is stored as a matrix of U-coefficients over the generators, which is
what turns Hom_U(P_n, M) and N (x)_U P_n into plain matrix complexes.
"""

from __future__ import annotations

from itertools import product as iproduct

from .algebras import ModuleRep
from .bialgebroid import BialgebroidData, module_tensor_left
from .complexes import DoubleComplex
from .errors import LiftFailedError, ValidationError, WindowExceededError
from .linalg import Matrix, Q, induced_map, unit_vec, zero_vec


def _merge(target, key, c):
    if not c:
        return
    s = target.get(key, 0) + c
    if s:
        target[key] = s
    else:
        del target[key]


class BarResolution:
    """Truncated bar resolution of A over U, free generators recorded.

    A depth N construction certifies Ext and Tor in degrees <= N - 1;
    consumers enforce the window.
    """

    def __init__(self, data: BialgebroidData, depth: int):
        if depth < 1:
            raise ValidationError("depth must be at least 1")
        self.data = data
        self.depth = depth
        self.max_degree = depth
        U = data.U
        self.U = U
        self.tails = data.tails_l
        self.s = len(self.tails)
        self.expand = data.expand_l
        self.push = data.bl_l  # a |>> as matrices
        self.trivial_base = data.A.dim == 1
        if self.trivial_base:
            # greedy table picked the basis itself; keep the fast path honest
            for i, entry in enumerate(self.expand):
                if entry != [(i, 0, Q(1))]:
                    raise ValidationError("unexpected tail table over the ground field")
        self._pushed_tail_cache = {}
        self._mul_cache = {}
        self._gens = {n: list(iproduct(range(self.s), repeat=n)) for n in range(depth + 1)}
        self._gen_index = {n: {g: k for k, g in enumerate(self._gens[n])} for n in range(depth + 1)}
        self._diff_cols = {}
        self._words = {}
        self._word_index = {}
        self._action_cache = {}

    # -- bookkeeping ----------------------------------------------------

    def rank(self, n):
        if not (0 <= n <= self.depth):
            raise WindowExceededError(f"degree {n} outside bar window 0..{self.depth}")
        return self.s ** n

    def generators(self, n):
        return self._gens[n]

    def words(self, n):
        """Concrete basis words (u, t_1 .. t_n) at degree n, generator major."""
        if n not in self._words:
            ws = []
            for g in self._gens[n]:
                for u in range(self.U.dim):
                    ws.append((u,) + g)
            self._words[n] = ws
            self._word_index[n] = {w: k for k, w in enumerate(ws)}
        return self._words[n]

    def word_index(self, n, w):
        self.words(n)
        return self._word_index[n][w]

    def concrete_dim(self, n):
        return self.rank(n) * self.U.dim

    # -- normal form ----------------------------------------------------

    def _pushed_tail(self, r, t):
        key = (r, t)
        out = self._pushed_tail_cache.get(key)
        if out is None:
            col = self.push[r].apply(self.tails[t])
            out = {p: c for p, c in enumerate(col) if c}
            self._pushed_tail_cache[key] = out
        return out

    def _renorm(self, word, k, vec):
        """Replace slot k of word by the raw U-vector vec and normalise.

        Slots right of k are already tail indices; pushing cascades
        leftward until it lands in the free slot 0.
        """
        out = {}
        if k == 0:
            for b, c in vec.items():
                _merge(out, (b,) + word[1:], c)
            return out
        if self.trivial_base:
            for b, c in vec.items():
                _merge(out, word[:k] + (b,) + word[k + 1 :], c)
            return out
        for b, cb in vec.items():
            for t, r, c in self.expand[b]:
                coef = cb * c
                w2 = word[:k] + (t,) + word[k + 1 :]
                if k - 1 == 0:
                    col = self.push[r].col(word[0])
                    pushed = {p: x for p, x in enumerate(col) if x}
                else:
                    pushed = self._pushed_tail(r, word[k - 1])
                for w3, c3 in self._renorm(w2, k - 1, pushed).items():
                    _merge(out, w3, coef * c3)
        return out

    def _mul_basis_tail(self, u, t):
        """e_u times the tail vector f_t, as a sparse U-vector."""
        key = (u, t)
        out = self._mul_cache.get(key)
        if out is None:
            prod = self.U.left_mult_matrix(unit_vec(self.U.dim, u)).apply(self.tails[t])
            out = {p: c for p, c in enumerate(prod) if c}
            self._mul_cache[key] = out
        return out

    def _tail_product(self, t1, t2):
        key = ("tt", t1, t2)
        out = self._mul_cache.get(key)
        if out is None:
            prod = self.U.multiply(self.tails[t1], self.tails[t2])
            out = {p: c for p, c in enumerate(prod) if c}
            self._mul_cache[key] = out
        return out

    # -- boundary, homotopy, augmentation --------------------------------

    def boundary_word(self, w):
        """b' of a normal word; sparse dict of degree n-1 normal words."""
        n = len(w) - 1
        if n == 0:
            return {}
        out = {}
        # face 0 merges the free slot with the first tail
        for p, c in self._mul_basis_tail(w[0], w[1]).items():
            _merge(out, (p,) + w[2:], c)
        # middle faces merge adjacent tails
        for i in range(1, n):
            sign = Q(-1) ** i
            vec = self._tail_product(w[i], w[i + 1])
            shell = w[: i + 1] + w[i + 2 :]
            for w2, c in self._renorm(shell, i, vec).items():
                _merge(out, w2, sign * c)
        # counit face
        sign = Q(-1) ** n
        eps_last = self.data.counit(self.tails[w[n]])
        if n == 1:
            acted = self.data.U.right_mult_matrix(self.data.eta_target(eps_last)).col(w[0])
            for p, c in enumerate(acted):
                if c:
                    _merge(out, (p,), sign * c)
        else:
            target = self.push_vector(eps_last, self.tails[w[n - 1]])
            shell = w[: n]
            for w2, c in self._renorm(shell, n - 1, target).items():
                _merge(out, w2, sign * c)
        return out

    def push_vector(self, a_vec, u_vec):
        """a |>> u for an A-vector a and U-vector u, sparse."""
        acted = self.data.U.right_mult_matrix(self.data.eta_target(a_vec)).apply(u_vec)
        return {p: c for p, c in enumerate(acted) if c}

    def boundary_elt(self, elt):
        out = {}
        for w, c in elt.items():
            for w2, d in self.boundary_word(w).items():
                _merge(out, w2, c * d)
        return out

    def homotopy_word(self, w):
        """s of a normal word: prepend a unit slot, renormalise."""
        out = {}
        for p, c in enumerate(self.U.unit):
            if c:
                shell = (p, 0) + w[1:]
                for w2, d in self._renorm(shell, 1, {w[0]: Q(1)}).items():
                    _merge(out, w2, c * d)
        return out

    def homotopy_elt(self, elt):
        out = {}
        for w, c in elt.items():
            for w2, d in self.homotopy_word(w).items():
                _merge(out, w2, c * d)
        return out

    def homotopy_bottom(self, a_vec):
        """s on the augmentation: a -> eta(1 (x) a)."""
        v = self.data.eta_target(a_vec)
        return {(p,): c for p, c in enumerate(v) if c}

    def augmentation_word(self, w):
        return self.data.counit(unit_vec(self.U.dim, w[0]))

    def augmentation_elt(self, elt):
        out = zero_vec(self.data.A.dim)
        for w, c in elt.items():
            if len(w) == 1:
                for k, d in enumerate(self.augmentation_word(w)):
                    out[k] += c * d
        return out

    # -- free generator differential -------------------------------------

    def diff_cols(self, n):
        """Column j: dict {row generator index: U-coefficient tuple}."""
        if n in self._diff_cols:
            return self._diff_cols[n]
        if not (1 <= n <= self.depth):
            raise WindowExceededError(f"differential {n} outside bar window")
        nu = self.U.dim
        cols = []
        for g in self._gens[n]:
            acc = {}
            for p, c in enumerate(self.U.unit):
                if not c:
                    continue
                for w2, d in self.boundary_word((p,) + g).items():
                    _merge(acc, w2, c * d)
            col = {}
            for w2, c in acc.items():
                gi = self._gen_index[n - 1][w2[1:]]
                if gi not in col:
                    col[gi] = zero_vec(nu)
                col[gi][w2[0]] += c
            cols.append({gi: tuple(v) for gi, v in col.items()})
        self._diff_cols[n] = cols
        return cols

    def act_left(self, uvec, M: ModuleRep):
        key = (id(M), uvec)
        out = self._action_cache.get(key)
        if out is None:
            out = M.act(list(uvec))
            self._action_cache[key] = out
        return out

    act_right = act_left

    # -- concrete chain model ---------------------------------------------

    def chain_matrix(self, n):
        """The k-linear boundary on concrete words, dense."""
        src = self.words(n)
        tgt_index = self._word_index[n - 1] if self.words(n - 1) else {}
        m = Matrix.zeros(self.concrete_dim(n - 1), self.concrete_dim(n))
        for j, w in enumerate(src):
            for w2, c in self.boundary_word(w).items():
                m.rows[tgt_index[w2]][j] += c
        return m

    def action_matrices(self, n):
        """Left multiplication on the free slot, one matrix per U-basis."""
        key = ("act", n)
        if key in self._action_cache:
            return self._action_cache[key]
        nu = self.U.dim
        ws = self.words(n)
        widx = self._word_index[n]
        mats = []
        for i in range(nu):
            m = Matrix.zeros(len(ws), len(ws))
            for j, w in enumerate(ws):
                for p, c in enumerate(self.U.mult[i][w[0]]):
                    if c:
                        m.rows[widx[(p,) + w[1:]]][j] += c
            mats.append(m)
        self._action_cache[key] = mats
        return mats

    def module_rep(self, n):
        return ModuleRep(self.U, self.concrete_dim(n), "left", self.action_matrices(n), validate=False)

    def augmentation_matrix(self):
        ws = self.words(0)
        return Matrix.from_cols([self.augmentation_word(w) for w in ws], nrows=self.data.A.dim)

    def generator_vector(self, n, g):
        """Concrete coordinates of the generator 1 (x) f_{g}."""
        v = zero_vec(self.concrete_dim(n))
        for p, c in enumerate(self.U.unit):
            if c:
                v[self.word_index(n, (p,) + g)] += c
        return v

    def __repr__(self):
        return f"BarResolution({self.data.name}, depth {self.depth}, rank base {self.s})"


def bar_resolution(data: BialgebroidData, depth: int) -> BarResolution:
    return BarResolution(data, depth)


# ---------------------------------------------------------------------------
# the total complex of P (x) P


class TotalTensorComplex:
    """Tot of the levelwise monoidal product of a bar resolution with itself.

    Carries the quotient presentation of each block, the induced module
    structure per total degree, the totalized differential and the
    augmentation through A (x) A = A.  Certified through total degree
    `upto`.
    """

    def __init__(self, bar: BarResolution, upto: int):
        if upto > bar.depth:
            raise WindowExceededError("total degree exceeds the bar window")
        self.bar = bar
        self.data = bar.data
        self.upto = upto
        data = bar.data
        U = data.U
        self.blocks = {}
        reps = {n: bar.module_rep(n) for n in range(upto + 1)}
        chain = {n: bar.chain_matrix(n) for n in range(1, upto + 1)}
        spaces = {}
        dh = {}
        dv = {}
        for i in range(upto + 1):
            for j in range(upto + 1 - i):
                tm = module_tensor_left(data, reps[i], reps[j])
                self.blocks[(i, j)] = tm
                spaces[(i, j)] = tm.space.dim
        for (i, j), tm in self.blocks.items():
            if i >= 1:
                amb = chain[i].kron(Matrix.identity(reps[j].dim))
                dh[(i, j)] = induced_map(amb, tm.space, self.blocks[(i - 1, j)].space)
            if j >= 1:
                amb = Matrix.identity(reps[i].dim).kron(chain[j])
                dv[(i, j)] = induced_map(amb, tm.space, self.blocks[(i, j - 1)].space)
        self.double = DoubleComplex(spaces, dh, dv)
        self.complex, self.offsets = self.double.totalize()
        # module structure per total degree: block diagonal of tensor actions
        self.action = {}
        for n in range(upto + 1):
            mats = []
            for u in range(U.dim):
                m = Matrix.zeros(self.complex.dim(n), self.complex.dim(n))
                for ij in self.double.total_degree_blocks(n):
                    off = self.offsets[ij]
                    blk = self.blocks[ij].module.action[u]
                    for r in range(blk.nrows):
                        for c in range(blk.ncols):
                            if blk.rows[r][c]:
                                m.rows[off + r][off + c] = blk.rows[r][c]
                mats.append(m)
            self.action[n] = mats
        # augmentation through A (x) A -> A
        tm00 = self.blocks[(0, 0)]
        na = data.A.dim
        aug0 = bar.augmentation_matrix()
        cols = []
        for k in range(tm00.space.dim):
            amb = tm00.space.lift(unit_vec(tm00.space.dim, k))
            acc = zero_vec(na)
            dim0 = bar.concrete_dim(0)
            for z, c in enumerate(amb):
                if not c:
                    continue
                p, q = divmod(z, dim0)
                ea = aug0.col(p)
                eb = aug0.col(q)
                prod = data.A.multiply(ea, eb)
                for t, d in enumerate(prod):
                    acc[t] += c * d
            cols.append(acc)
        self.aug = Matrix.from_cols(cols, nrows=na)

    def act(self, n, uvec):
        out = Matrix.zeros(self.complex.dim(n), self.complex.dim(n))
        for i, c in enumerate(uvec):
            if c:
                out = out + self.action[n][i].scale(c)
        return out

    def check_resolution(self, through_degree=None):
        """Exactness of the augmented total complex in checked degrees."""
        top = self.upto if through_degree is None else through_degree
        report = {}
        h0 = self.complex.homology(0) if top >= 1 else None
        if h0 is not None:
            # H_0 must be A through the augmentation
            report[0] = (h0.dim == self.data.A.dim)
        for n in range(1, top):
            report[n] = self.complex.betti(n) == 0
        if not (self.aug @ self.complex.d(1)).is_zero():
            report["aug"] = False
        return report


def tensor_resolution(bar: BarResolution, upto: int) -> TotalTensorComplex:
    return TotalTensorComplex(bar, upto)


# ---------------------------------------------------------------------------
# chain map lifting


def lift_to_bar(src: BarResolution, dst: BarResolution, upto: int):
    """Chain map src -> dst over the identity of A, via the homotopy.

    On each free generator g of src_n the value is s(F_{n-1}(d g)),
    extended U-linearly; this is the standard comparison built from the
    contraction of the target.  Returns one concrete matrix per degree.
    """
    mats = []
    # degree 0: the free generator 1 maps through the bottom contraction,
    # then the map extends U-linearly over the word basis
    gen0 = zero_vec(dst.concrete_dim(0))
    for p, c in enumerate(src.U.unit):
        if c:
            a = src.augmentation_word((p,))
            for w2, d in dst.homotopy_bottom(a).items():
                gen0[dst.word_index(0, w2)] += c * d
    acts0 = dst.action_matrices(0)
    cols = [acts0[w[0]].apply(gen0) for w in src.words(0)]
    mats.append(Matrix.from_cols(cols, nrows=dst.concrete_dim(0)))
    top = min(src.depth, dst.depth) if upto is None else upto
    for n in range(1, top + 1):
        prev = mats[n - 1]
        cols = []
        gen_imgs = {}
        for g in src.generators(n):
            gv = src.generator_vector(n, g)
            dg = {}
            for j, c in enumerate(gv):
                if c:
                    for w2, d in src.boundary_word(src.words(n)[j]).items():
                        _merge(dg, w2, c * d)
            prev_img = zero_vec(dst.concrete_dim(n - 1))
            for w2, c in dg.items():
                col = prev.col(src.word_index(n - 1, w2))
                for k, d in enumerate(col):
                    if d:
                        prev_img[k] += c * d
            img = {}
            for k, c in enumerate(prev_img):
                if c:
                    for w3, d in dst.homotopy_word(dst.words(n - 1)[k]).items():
                        _merge(img, w3, c * d)
            gen_imgs[g] = img
        acts = dst.action_matrices(n)
        for w in src.words(n):
            g = w[1:]
            base = gen_imgs[g]
            # w = e_u . g, so apply the dst action of e_u
            v = zero_vec(dst.concrete_dim(n))
            for w2, c in base.items():
                col = acts[w[0]].col(dst.word_index(n, w2))
                for k, d in enumerate(col):
                    if d:
                        v[k] += c * d
            cols.append(v)
        mats.append(Matrix.from_cols(cols, nrows=dst.concrete_dim(n)))
    return mats


def lift_into_total(bar: BarResolution, tot: TotalTensorComplex, upto: int):
    """Diagonal approximation P -> Tot(P (x) P) by degreewise exact solves.

    Degree zero sends 1 to the class of 1 (x) 1; each next degree
    solves d X = F_{n-1}(d g) per free generator and extends
    U-linearly.  LiftFailedError if a solve is inconsistent.
    """
    data = bar.data
    U = data.U
    mats = []
    tm00 = tot.blocks[(0, 0)]
    dim0 = bar.concrete_dim(0)
    one_one = zero_vec(dim0 * dim0)
    for p, c in enumerate(U.unit):
        if not c:
            continue
        for q, d in enumerate(U.unit):
            if d:
                one_one[p * dim0 + q] += c * d
    base = tm00.space.project(one_one)
    cols = []
    for w in bar.words(0):
        # w = (u,): image is u . (1 (x) 1)
        cols.append(tot.action[0][w[0]].apply(base))
    mats.append(Matrix.from_cols(cols, nrows=tot.complex.dim(0)))
    for n in range(1, upto + 1):
        prev = mats[n - 1]
        d_tot = tot.complex.d(n)
        gen_sol = {}
        for g in bar.generators(n):
            gv = bar.generator_vector(n, g)
            dg = zero_vec(bar.concrete_dim(n - 1))
            for j, c in enumerate(gv):
                if c:
                    for w2, d in bar.boundary_word(bar.words(n)[j]).items():
                        dg[bar.word_index(n - 1, w2)] += c * d
            rhs = prev.apply(dg)
            sol = d_tot.solve(rhs)
            if sol is None:
                raise LiftFailedError(f"diagonal lift inconsistent at degree {n}")
            gen_sol[g] = sol
        cols = []
        for w in bar.words(n):
            cols.append(tot.action[n][w[0]].apply(gen_sol[w[1:]]))
        mats.append(Matrix.from_cols(cols, nrows=tot.complex.dim(n)))
    return mats
