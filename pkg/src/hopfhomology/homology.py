"""Ext and Tor over U from a resolution with recorded free generators.

A resolution object must provide rank(n), diff_cols(n) (columns of the
generator-level differential, entries are coefficients in U in whatever
representation the carrier uses), act_left(entry, M) / act_right(entry,
N) returning action matrices, and max_degree.  Both the bar resolution
and the Koszul-type resolution of a universal envelope satisfy this.

Ext^n(A, M) is the cohomology of M^{rank(0)} -> M^{rank(1)} -> ..,
Tor_n(N, A) the homology of .. -> N^{rank(1)} -> N^{rank(0)}.  Classes
always carry explicit representatives in generator coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import HomologySpace
from .errors import LiftFailedError, WindowExceededError
from .linalg import Matrix, SparseReducer


def cochain_matrix(res, M, n) -> Matrix:
    """delta^n : Hom(P_n, M) -> Hom(P_{n+1}, M) on generator coordinates."""
    dm = M.dim
    rows = res.rank(n + 1) * dm
    cols = res.rank(n) * dm
    out = Matrix.zeros(rows, cols)
    for k, col in enumerate(res.diff_cols(n + 1)):
        for j, entry in col.items():
            act = res.act_left(entry, M)
            for a in range(dm):
                row = out.rows[k * dm + a]
                arow = act.rows[a]
                for b in range(dm):
                    if arow[b]:
                        row[j * dm + b] += arow[b]
    return out


def cochain_rows_sparse(res, M, n):
    """Rows of delta^n as sparse dicts (rank computations at scale)."""
    dm = M.dim
    rows = [dict() for _ in range(res.rank(n + 1) * dm)]
    for k, col in enumerate(res.diff_cols(n + 1)):
        for j, entry in col.items():
            act = res.act_left(entry, M)
            for a in range(dm):
                arow = act.rows[a]
                target = rows[k * dm + a]
                for b in range(dm):
                    if arow[b]:
                        key = j * dm + b
                        s = target.get(key, 0) + arow[b]
                        if s:
                            target[key] = s
                        else:
                            target.pop(key, None)
    return rows


def chain_matrix(res, N, n) -> Matrix:
    """boundary_n : N^{rank(n)} -> N^{rank(n-1)} on generator coordinates."""
    dn = N.dim
    rows = res.rank(n - 1) * dn
    cols = res.rank(n) * dn
    out = Matrix.zeros(rows, cols)
    for k, col in enumerate(res.diff_cols(n)):
        for j, entry in col.items():
            act = res.act_right(entry, N)
            for a in range(dn):
                row = out.rows[j * dn + a]
                arow = act.rows[a]
                for b in range(dn):
                    if arow[b]:
                        row[k * dn + b] += arow[b]
    return out


def chain_rows_sparse(res, N, n):
    dn = N.dim
    rows = [dict() for _ in range(res.rank(n - 1) * dn)]
    for k, col in enumerate(res.diff_cols(n)):
        for j, entry in col.items():
            act = res.act_right(entry, N)
            for a in range(dn):
                arow = act.rows[a]
                target = rows[j * dn + a]
                for b in range(dn):
                    if arow[b]:
                        key = k * dn + b
                        s = target.get(key, 0) + arow[b]
                        if s:
                            target[key] = s
                        else:
                            target.pop(key, None)
    return rows


def _sparse_rank(rows):
    red = SparseReducer()
    for r in rows:
        if r:
            red.add(r)
    return red.rank


@dataclass
class CohomologyClass:
    degree: int
    vector: tuple
    resolution: object
    module: object

    def __eq__(self, other):
        return (
            isinstance(other, CohomologyClass)
            and self.degree == other.degree
            and self.vector == other.vector
        )


@dataclass
class HomologyClass:
    degree: int
    vector: tuple
    resolution: object
    module: object


class ExtGroup:
    """Ext^n with a canonical class basis and decomposition queries."""

    def __init__(self, res, M, n):
        if n < 0 or n > res.max_degree - 1:
            raise WindowExceededError(
                f"Ext degree {n} outside certified window 0..{res.max_degree - 1}"
            )
        self.res = res
        self.module = M
        self.degree = n
        d_out = cochain_matrix(res, M, n)
        d_in = (
            cochain_matrix(res, M, n - 1)
            if n >= 1
            else Matrix.zeros(res.rank(0) * M.dim, 0)
        )
        self.space = HomologySpace(d_out, d_in)

    @property
    def dim(self):
        return self.space.dim

    def class_of(self, cochain):
        """Canonical class coordinates of a cocycle."""
        return self.space.class_of(list(cochain))

    def basis_cocycles(self):
        return self.space.representatives()

    def classes(self):
        return [
            CohomologyClass(self.degree, tuple(v), self.res, self.module)
            for v in self.basis_cocycles()
        ]

    def is_coboundary(self, cochain):
        return self.space.is_boundary(list(cochain))


class TorGroup:
    """Tor_n with a canonical class basis."""

    def __init__(self, res, N, n):
        if n < 0 or n > res.max_degree - 1:
            raise WindowExceededError(
                f"Tor degree {n} outside certified window 0..{res.max_degree - 1}"
            )
        self.res = res
        self.module = N
        self.degree = n
        d_out = (
            chain_matrix(res, N, n)
            if n >= 1
            else Matrix.zeros(0, res.rank(0) * N.dim)
        )
        d_in = chain_matrix(res, N, n + 1)
        self.space = HomologySpace(d_out, d_in)

    @property
    def dim(self):
        return self.space.dim

    def class_of(self, cycle):
        return self.space.class_of(list(cycle))

    def basis_cycles(self):
        return self.space.representatives()

    def classes(self):
        return [
            HomologyClass(self.degree, tuple(v), self.res, self.module)
            for v in self.basis_cycles()
        ]


def ext(res, M, n) -> ExtGroup:
    return ExtGroup(res, M, n)


def tor(res, N, n) -> TorGroup:
    return TorGroup(res, N, n)


def ext_dims(res, M, upto):
    """Ext dimensions for degrees 0..upto, computed from sparse ranks."""
    if upto > res.max_degree - 1:
        raise WindowExceededError(
            f"Ext degree {upto} outside certified window 0..{res.max_degree - 1}"
        )
    ranks = {}
    for n in range(upto + 1):
        ranks[n] = _sparse_rank(cochain_rows_sparse(res, M, n))
    dims = []
    for n in range(upto + 1):
        c = res.rank(n) * M.dim
        dims.append(c - ranks[n] - (ranks[n - 1] if n >= 1 else 0))
    return dims


def tor_dims(res, N, upto):
    if upto > res.max_degree - 1:
        raise WindowExceededError(
            f"Tor degree {upto} outside certified window 0..{res.max_degree - 1}"
        )
    ranks = {}
    for n in range(1, upto + 2):
        ranks[n] = _sparse_rank(chain_rows_sparse(res, N, n))
    dims = []
    for n in range(upto + 1):
        c = res.rank(n) * N.dim
        out_rank = ranks[n] if n >= 1 else 0
        dims.append(c - out_rank - ranks[n + 1])
    return dims


# ---------------------------------------------------------------------------
# evaluation of generator cochains on concrete vectors, and comparison
# of resolutions


def cochain_concrete_matrix(bar, M, n, psi) -> Matrix:
    """The U-linear map P_n -> M determined by generator values psi.

    psi has length rank(n) * dim(M); the result acts on the concrete
    word basis of the bar term.
    """
    dm = M.dim
    words = bar.words(n)
    cols = []
    for w in words:
        g = bar._gen_index[n][w[1:]]
        val = [psi[g * dm + a] for a in range(dm)]
        cols.append(M.action[w[0]].apply(val))
    return Matrix.from_cols(cols, nrows=dm)


def pull_cochain(src_bar, dst_bar, M, n, psi, chain_map_n) -> list:
    """Pull a generator cochain on dst back to src along a chain map."""
    dm = M.dim
    ev = cochain_concrete_matrix(dst_bar, M, n, psi)
    comp = ev @ chain_map_n
    out = []
    for g in src_bar.generators(n):
        gv = src_bar.generator_vector(n, g)
        out.extend(comp.apply(gv))
    return out


class ExtIsomorphism:
    """Induced isomorphism on Ext along a comparison of resolutions."""

    def __init__(self, forward: Matrix, backward: Matrix):
        self.forward = forward
        self.backward = backward

    @property
    def bijective(self):
        return (
            self.forward.nrows == self.forward.ncols
            and self.forward.rank() == self.forward.nrows
        )


def resolution_independence(p, q, M, n, lift_forward=None, lift_backward=None) -> ExtIsomorphism:
    """Ext computed from p and from q agree through explicit lifts.

    p and q are bar resolutions of the same base data; the lifts are
    produced with the target contraction when not supplied.  Returns
    the induced maps on class bases and checks them mutually inverse.
    """
    from .resolutions import lift_to_bar

    if lift_forward is None:
        lift_forward = lift_to_bar(p, q, n + 1)
    if lift_backward is None:
        lift_backward = lift_to_bar(q, p, n + 1)
    ep = ext(p, M, n)
    eq = ext(q, M, n)
    if ep.dim != eq.dim:
        raise LiftFailedError("Ext dimensions disagree between resolutions")
    fwd_cols = []
    for v in eq.basis_cocycles():
        pulled = pull_cochain(p, q, M, n, v, lift_forward[n])
        fwd_cols.append(ep.class_of(pulled))
    bwd_cols = []
    for v in ep.basis_cocycles():
        pulled = pull_cochain(q, p, M, n, v, lift_backward[n])
        bwd_cols.append(eq.class_of(pulled))
    fwd = Matrix.from_cols(fwd_cols, nrows=ep.dim)
    bwd = Matrix.from_cols(bwd_cols, nrows=eq.dim)
    iso = ExtIsomorphism(fwd, bwd)
    if ep.dim and not (fwd @ bwd) == Matrix.identity(ep.dim):
        raise LiftFailedError("comparison maps are not mutually inverse on Ext")
    return iso
