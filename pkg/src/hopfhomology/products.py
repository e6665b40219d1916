"""Cup, composition, evaluation and cap products at chain level.

Two contexts implement the same four products.  For a finite
dimensional Hopf structure the diagonal approximation P -> Tot(P (x) P)
is produced by degreewise exact solves into the total tensor complex;
for a universal envelope the subset-splitting comultiplication of the
Koszul resolution is used in closed form.  Signs flow from exactly two
conventions fixed elsewhere: the totalization sign (-1)^(horizontal
degree) and the shift sign (-1)^m on a lifted degree m class.  The
graded commutation rule between composition and cup, and the agreement
of evaluation and cap against classes of the base, are theorems the
test suite checks; nothing here inserts them.
"""

from __future__ import annotations

from .bialgebroid import module_tensor_left, module_tensor_right
from .errors import LiftFailedError, WindowExceededError
from .homology import cochain_concrete_matrix
from .linalg import Matrix, Q, zero_vec
from .pbw import LieModule, mono_one, pbw_multiply, tensor_left_lie, tensor_right_lie
from .resolutions import BarResolution, TotalTensorComplex, lift_into_total
from .ce import BoundedBasis, CEResolution, bounded_free_map


def transport_cochain(rank, iso: Matrix, cochain, src_dim):
    """Apply a module map to the values of a generator cochain."""
    out = []
    for k in range(rank):
        vals = [cochain[k * src_dim + a] for a in range(src_dim)]
        out.extend(iso.apply(vals))
    return out


def transport_cycle(rank, iso: Matrix, cycle, src_dim):
    return transport_cochain(rank, iso, cycle, src_dim)


# ---------------------------------------------------------------------------
# finite dimensional context


class BarProducts:
    """Products over a finite dimensional Hopf structure via the bar model."""

    def __init__(self, h, bar: BarResolution, total_degree: int):
        self.h = h
        self.data = h.data
        self.bar = bar
        self.total_degree = total_degree
        self.tot = TotalTensorComplex(bar, total_degree)
        self.diag = lift_into_total(bar, self.tot, total_degree)
        self._lift_cache = {}
        self._tensor_right_cache = {}

    # -- cup ---------------------------------------------------------------

    def cup(self, m, n, phi, psi, M, N):
        """(phi cup psi) as a cochain valued in the tensor module of M, N.

        Returns (cochain vector, TensorModule for M (x) N).
        """
        if m + n > self.total_degree:
            raise WindowExceededError("cup exceeds the prepared total degree")
        bar = self.bar
        tm = module_tensor_left(self.data, M, N)
        ev_m = cochain_concrete_matrix(bar, M, m, phi)
        ev_n = cochain_concrete_matrix(bar, N, n, psi)
        block = self.tot.blocks[(m, n)]
        off = self.tot.offsets[(m, n)]
        dim_n_side = bar.concrete_dim(n)
        out = []
        for g in bar.generators(m + n):
            v = self.diag[m + n].apply(bar.generator_vector(m + n, g))
            blockvec = v[off : off + block.space.dim]
            amb = block.space.lift(blockvec)
            acc_amb = zero_vec(M.dim * N.dim)
            for z, c in enumerate(amb):
                if not c:
                    continue
                zi, zj = divmod(z, dim_n_side)
                mv = ev_m.col(zi)
                nv = ev_n.col(zj)
                for a, ca in enumerate(mv):
                    if not ca:
                        continue
                    for b, cb in enumerate(nv):
                        if cb:
                            acc_amb[a * N.dim + b] += c * ca * cb
            out.extend(tm.space.project(acc_amb))
        return out, tm

    # -- lifting a class of Ext(A, A) to a chain self-map --------------------

    def lift_class(self, m, phi):
        """Chain maps f_j : P_{m+j} -> P_j with d f = (-1)^m f d, f over phi."""
        key = (m, tuple(phi))
        if key in self._lift_cache:
            return self._lift_cache[key]
        bar = self.bar
        a_mod = self.data.a_module()
        sign = Q(-1) ** m
        ev = cochain_concrete_matrix(bar, a_mod, m, phi)
        # degree 0 on generators through the bottom contraction
        mats = []
        cols = []
        acts0 = bar.action_matrices(0)
        gen_vals = {}
        for g in bar.generators(m):
            a_val = ev.apply(bar.generator_vector(m, g))
            img = bar.homotopy_bottom(a_val)
            v = zero_vec(bar.concrete_dim(0))
            for w, c in img.items():
                v[bar.word_index(0, w)] += c
            gen_vals[g] = v
        for w in bar.words(m):
            base = gen_vals[w[1:]]
            cols.append(acts0[w[0]].apply(base))
        mats.append(Matrix.from_cols(cols, nrows=bar.concrete_dim(0)))
        for j in range(1, bar.depth - m + 1):
            prev = mats[j - 1]
            acts = bar.action_matrices(j)
            gen_vals = {}
            for g in bar.generators(m + j):
                gv = bar.generator_vector(m + j, g)
                dg = zero_vec(bar.concrete_dim(m + j - 1))
                for z, c in enumerate(gv):
                    if c:
                        for w2, d in bar.boundary_word(bar.words(m + j)[z]).items():
                            dg[bar.word_index(m + j - 1, w2)] += c * d
                target = prev.apply(dg)
                img = {}
                for k, c in enumerate(target):
                    if c:
                        for w3, d in bar.homotopy_word(bar.words(j - 1)[k]).items():
                            img[w3] = img.get(w3, 0) + c * d
                v = zero_vec(bar.concrete_dim(j))
                for w3, c in img.items():
                    if c:
                        v[bar.word_index(j, w3)] += sign * c
                gen_vals[g] = v
            cols = []
            for w in bar.words(m + j):
                cols.append(acts[w[0]].apply(gen_vals[w[1:]]))
            mats.append(Matrix.from_cols(cols, nrows=bar.concrete_dim(j)))
        self._lift_cache[key] = mats
        return mats

    def yoneda(self, m, n, phi, psi, M):
        """psi o phi for phi in Ext^m(A, A), psi in Ext^n(A, M); a cochain."""
        bar = self.bar
        lifts = self.lift_class(m, phi)
        ev = cochain_concrete_matrix(bar, M, n, psi)
        comp = ev @ lifts[n]
        out = []
        for g in bar.generators(m + n):
            out.extend(comp.apply(bar.generator_vector(m + n, g)))
        return out

    def bullet(self, m, phi, z, n, N):
        """phi . z for phi in Ext^m(A, A), z a Tor_n(N, A) cycle vector."""
        if n < m:
            raise WindowExceededError("evaluation needs n >= m")
        bar = self.bar
        lifts = self.lift_class(m, phi)
        f = lifts[n - m]
        dn = N.dim
        out = zero_vec(bar.rank(n - m) * dn)
        for k, g in enumerate(bar.generators(n)):
            zk = [z[k * dn + a] for a in range(dn)]
            img = f.apply(bar.generator_vector(n, g))
            for w_idx, c in enumerate(img):
                if not c:
                    continue
                w = bar.words(n - m)[w_idx]
                gi = bar._gen_index[n - m][w[1:]]
                acted = N.action[w[0]].apply(zk)
                for a, d in enumerate(acted):
                    if d:
                        out[gi * dn + a] += c * d
        return out

    def tensor_right(self, M, N):
        key = (id(M), id(N))
        if key not in self._tensor_right_cache:
            self._tensor_right_cache[key] = module_tensor_right(self.h, M, N)
        return self._tensor_right_cache[key]

    def cap(self, m, phi, z, n, M, N):
        """phi cap z in Tor_{n-m} of the tensor module of M and N.

        z is a Tor_n(N, A) cycle vector; phi an Ext^m(A, M) cocycle.
        Returns (cycle vector, TensorModule).
        """
        if n < m:
            raise WindowExceededError("cap needs n >= m")
        if n > self.total_degree:
            raise WindowExceededError("cap exceeds the prepared total degree")
        bar = self.bar
        tm = self.tensor_right(M, N)
        ev_m = cochain_concrete_matrix(bar, M, m, phi)
        i_deg = n - m
        block = self.tot.blocks[(i_deg, m)]
        off = self.tot.offsets[(i_deg, m)]
        dim_second = bar.concrete_dim(m)
        dn = N.dim
        # Koszul sign for moving the degree m shift past the first leg
        koszul = Q(-1) ** (i_deg * m)
        out = zero_vec(bar.rank(i_deg) * tm.space.dim)
        for k, g in enumerate(bar.generators(n)):
            zk = [z[k * dn + a] for a in range(dn)]
            v = self.diag[n].apply(bar.generator_vector(n, g))
            blockvec = v[off : off + block.space.dim]
            amb = block.space.lift(blockvec)
            for zidx, c in enumerate(amb):
                if not c:
                    continue
                zi, zj = divmod(zidx, dim_second)
                mval = ev_m.col(zj)
                # (phi(y) (x) n) . u_i at the generator of the x leg
                wi = bar.words(i_deg)[zi]
                gi = bar._gen_index[i_deg][wi[1:]]
                pair = zero_vec(M.dim * dn)
                for a, ca in enumerate(mval):
                    if not ca:
                        continue
                    for b, cb in enumerate(zk):
                        if cb:
                            pair[a * dn + b] += ca * cb
                coords = tm.space.project(pair)
                acted = tm.module.action[wi[0]].apply(coords)
                for t, d in enumerate(acted):
                    if d:
                        out[gi * tm.space.dim + t] += koszul * c * d
        return out, tm


# ---------------------------------------------------------------------------
# universal envelope context


class CEProducts:
    """Products over U(g) through the Koszul resolution, in closed form."""

    def __init__(self, ce: CEResolution, lift_bound=6, max_lift_bound=14):
        self.ce = ce
        self.g = ce.g
        self.lift_bound = lift_bound
        self.max_lift_bound = max_lift_bound
        self._lift_cache = {}

    def cup(self, m, n, phi, psi, M: LieModule, N: LieModule):
        ce = self.ce
        tm = tensor_left_lie(self.g, M, N)
        dm, dn = M.dim, N.dim
        out = []
        for K in ce.generators(m + n):
            acc = zero_vec(dm * dn)
            for I, J, sgn in ce.diagonal(K):
                if len(I) != m:
                    continue
                gi = ce.gen_index(m, I)
                gj = ce.gen_index(n, J)
                for a in range(dm):
                    ca = phi[gi * dm + a]
                    if not ca:
                        continue
                    for b in range(dn):
                        cb = psi[gj * dn + b]
                        if cb:
                            acc[a * dn + b] += sgn * ca * cb
            out.extend(acc)
        return out, tm

    def lift_class(self, m, phi):
        """f_j : P_{m+j} -> P_j with d f = (-1)^m f d, entries bounded PBW."""
        key = (m, tuple(phi))
        if key in self._lift_cache:
            return self._lift_cache[key]
        g = self.g
        ce = self.ce
        sign = Q(-1) ** m
        # f_0 sends e_G to phi(e_G) . 1
        lifts = [{G: {ce.generators(0)[0]: {mono_one(g.dim): phi[ce.gen_index(m, G)]}}
                  for G in ce.generators(m)}]
        top = g.dim - m
        for j in range(1, top + 1):
            prev = lifts[j - 1]
            cur = {}
            for G in ce.generators(m + j):
                rhs_by_gen = {}
                for i, entry in ce.diff_cols(m + j)[ce.gen_index(m + j, G)].items():
                    G2 = ce.generators(m + j - 1)[i]
                    for k, u in prev[G2].items():
                        prod = pbw_multiply(g, entry, u)
                        tgt = rhs_by_gen.setdefault(k, {})
                        for mo, c in prod.items():
                            s = tgt.get(mo, 0) + sign * c
                            if s:
                                tgt[mo] = s
                            else:
                                tgt.pop(mo, None)
                sol = self._solve_boundary(j, rhs_by_gen)
                cur[G] = sol
            lifts.append(cur)
        self._lift_cache[key] = lifts
        return lifts

    def _solve_boundary(self, j, rhs_by_gen):
        """Solve d_j (X) = rhs in P_{j-1} with bounded PBW coefficients."""
        g = self.g
        ce = self.ce
        bound = self.lift_bound
        while True:
            src = BoundedBasis(g, ce.rank(j), bound)
            dst = BoundedBasis(g, ce.rank(j - 1), bound + 1)
            mat = bounded_free_map(g, ce.diff_cols(j), src, dst)
            rhs = dst.coords({ce.gen_index(j - 1, G): e for G, e in rhs_by_gen.items()})
            sol = mat.solve(rhs)
            if sol is not None:
                out = {}
                for (k, mo), idx in src.index.items():
                    if sol[idx]:
                        out.setdefault(ce.generators(j)[k], {})[mo] = sol[idx]
                return out
            bound += 2
            if bound > self.max_lift_bound:
                raise LiftFailedError("chain lift not found within the degree bound")

    def yoneda(self, m, n, phi, psi, M: LieModule):
        ce = self.ce
        if ce.rank(m + n) == 0:
            return []
        lifts = self.lift_class(m, phi)
        f = lifts[n]
        dm = M.dim
        out = []
        for G in ce.generators(m + n):
            acc = zero_vec(dm)
            for K, u in f[G].items():
                gi = ce.gen_index(n, K)
                vals = [psi[gi * dm + a] for a in range(dm)]
                img = M.act(u).apply(vals)
                for a, c in enumerate(img):
                    acc[a] += c
            out.extend(acc)
        return out

    def bullet(self, m, phi, z, n, N: LieModule):
        if n < m:
            raise WindowExceededError("evaluation needs n >= m")
        ce = self.ce
        if ce.rank(n) == 0:
            return zero_vec(ce.rank(n - m) * N.dim)
        lifts = self.lift_class(m, phi)
        f = lifts[n - m]
        dn = N.dim
        out = zero_vec(ce.rank(n - m) * dn)
        for k, G in enumerate(ce.generators(n)):
            zk = [z[k * dn + a] for a in range(dn)]
            for K, u in f[G].items():
                gi = ce.gen_index(n - m, K)
                acted = N.act(u).apply(zk)
                for a, c in enumerate(acted):
                    if c:
                        out[gi * dn + a] += c
        return out

    def cap(self, m, phi, z, n, M: LieModule, N: LieModule):
        if n < m:
            raise WindowExceededError("cap needs n >= m")
        ce = self.ce
        tm = tensor_right_lie(self.g, M, N)
        dm, dn = M.dim, N.dim
        # evaluating the degree m cocycle on the second leg moves the
        # shift past the degree n - m first leg: Koszul sign
        koszul = Q(-1) ** ((n - m) * m)
        out = zero_vec(ce.rank(n - m) * dm * dn)
        for k, G in enumerate(ce.generators(n)):
            zk = [z[k * dn + a] for a in range(dn)]
            for I, J, sgn in ce.diagonal(G):
                if len(J) != m:
                    continue
                gi = ce.gen_index(n - m, I)
                gj = ce.gen_index(m, J)
                for a in range(dm):
                    ca = phi[gj * dm + a]
                    if not ca:
                        continue
                    for b in range(dn):
                        cb = zk[b]
                        if cb:
                            out[gi * dm * dn + a * dn + b] += koszul * sgn * ca * cb
        return out, tm
