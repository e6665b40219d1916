"""Finite dimensional associative algebras given by structure constants.

An algebra is a basis b_0..b_{n-1} with products b_i b_j = sum_k
c[i][j][k] b_k and a distinguished unit vector.  Modules are given by
one action matrix per basis element.  Constructors validate the axioms
by full basis sweeps; every downstream computation assumes valid data,
so the sweeps are not optional.
"""

from __future__ import annotations

from .errors import ValidationError
from .linalg import (
    Matrix,
    QuotientSpace,
    Subspace,
    frac,
    frac_str,
    induced_map,
    unit_vec,
    vec_is_zero,
    zero_vec,
)


class FinDimAlgebra:
    """Associative unital algebra over Q with a chosen basis."""

    def __init__(self, dim, labels, mult, unit, validate=True):
        self.dim = dim
        self.labels = list(labels)
        if len(self.labels) != dim:
            raise ValidationError("label count does not match dimension")
        # mult[i][j] is the coordinate vector of b_i * b_j
        self.mult = [[[frac(x) for x in mult[i][j]] for j in range(dim)] for i in range(dim)]
        self.unit = [frac(x) for x in unit]
        self._left_mult = None
        self._right_mult = None
        if validate:
            self._validate()

    def _validate(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                if len(self.mult[i][j]) != n:
                    raise ValidationError("structure constant vector of wrong length")
        for i in range(n):
            ui = self.multiply(self.unit, unit_vec(n, i))
            iu = self.multiply(unit_vec(n, i), self.unit)
            if ui != unit_vec(n, i) or iu != unit_vec(n, i):
                raise ValidationError(f"unit fails on basis element {self.labels[i]}")
        for i in range(n):
            for j in range(n):
                ij = self.mult[i][j]
                for l in range(n):
                    left = self.multiply(ij, unit_vec(n, l))
                    right = self.multiply(unit_vec(n, i), self.mult[j][l])
                    if left != right:
                        raise ValidationError(
                            f"associativity fails on ({self.labels[i]},{self.labels[j]},{self.labels[l]})"
                        )

    def multiply(self, u, v):
        """Product of two coordinate vectors."""
        n = self.dim
        out = zero_vec(n)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(self.mult[i][j]):
                    if s:
                        out[k] += c * s
        return out

    def left_mult_matrix(self, u):
        """Matrix of v -> u v."""
        if self._left_mult is None:
            self._left_mult = [
                Matrix.from_cols([self.mult[i][j] for j in range(self.dim)], nrows=self.dim)
                for i in range(self.dim)
            ]
        out = Matrix.zeros(self.dim, self.dim)
        for i, a in enumerate(u):
            if a:
                out = out + self._left_mult[i].scale(a)
        return out

    def right_mult_matrix(self, u):
        """Matrix of v -> v u."""
        if self._right_mult is None:
            self._right_mult = [
                Matrix.from_cols([self.mult[i][j] for i in range(self.dim)], nrows=self.dim)
                for j in range(self.dim)
            ]
        out = Matrix.zeros(self.dim, self.dim)
        for j, a in enumerate(u):
            if a:
                out = out + self._right_mult[j].scale(a)
        return out

    def is_commutative(self):
        return all(
            self.mult[i][j] == self.mult[j][i]
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def opposite(self):
        """Same space, product reversed."""
        n = self.dim
        mult = [[self.mult[j][i] for j in range(n)] for i in range(n)]
        return FinDimAlgebra(n, [f"{l}^op" for l in self.labels], mult, self.unit, validate=False)

    def enveloping(self):
        """A tensor A^op with basis b_i (x) b_j ordered lexicographically."""
        n = self.dim
        labels = [f"{self.labels[i]}(x){self.labels[j]}" for i in range(n) for j in range(n)]
        dim = n * n
        mult = [[None] * dim for _ in range(dim)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        # (x (x) y)(x' (x) y') = xx' (x) y'y
                        first = self.mult[i][k]
                        second = self.mult[l][j]
                        out = zero_vec(dim)
                        for p, a in enumerate(first):
                            if not a:
                                continue
                            for q, b in enumerate(second):
                                if b:
                                    out[p * n + q] += a * b
                        mult[i * n + j][k * n + l] = out
        unit = zero_vec(dim)
        for p, a in enumerate(self.unit):
            if not a:
                continue
            for q, b in enumerate(self.unit):
                if b:
                    unit[p * n + q] += a * b
        return FinDimAlgebra(dim, labels, mult, unit, validate=False)

    def to_json(self):
        return {
            "dim": self.dim,
            "labels": self.labels,
            "unit": [frac_str(x) for x in self.unit],
            "mult": [
                [[frac_str(x) for x in self.mult[i][j]] for j in range(self.dim)]
                for i in range(self.dim)
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["dim"], data["labels"], data["mult"], data["unit"])

    def __repr__(self):
        return f"FinDimAlgebra(dim {self.dim}: {', '.join(self.labels)})"


class ModuleRep:
    """Finite dimensional left or right module over a FinDimAlgebra.

    For a left module the action matrices satisfy rho(uv) = rho(u)rho(v);
    for a right module the order is reversed (matrices still act on
    column vectors, m . u = rho(u) m).
    """

    def __init__(self, algebra, dim, side, action, validate=True):
        if side not in ("left", "right"):
            raise ValidationError("side must be 'left' or 'right'")
        self.algebra = algebra
        self.dim = dim
        self.side = side
        self.action = [m if isinstance(m, Matrix) else Matrix(m, ncols=dim) for m in action]
        if len(self.action) != algebra.dim:
            raise ValidationError("need one action matrix per algebra basis element")
        if validate:
            self._validate()

    def _validate(self):
        n = self.algebra.dim
        ident = Matrix.identity(self.dim)
        for m in self.action:
            if m.nrows != self.dim or m.ncols != self.dim:
                raise ValidationError("action matrix of wrong shape")
        if self.act(self.algebra.unit) != ident:
            raise ValidationError("unit does not act as identity")
        for i in range(n):
            for j in range(n):
                lhs = self.act(self.algebra.mult[i][j])
                if self.side == "left":
                    rhs = self.action[i] @ self.action[j]
                else:
                    rhs = self.action[j] @ self.action[i]
                if lhs != rhs:
                    raise ValidationError(
                        f"{self.side} action fails on pair "
                        f"({self.algebra.labels[i]},{self.algebra.labels[j]})"
                    )

    def act(self, u):
        out = Matrix.zeros(self.dim, self.dim)
        for i, a in enumerate(u):
            if a:
                out = out + self.action[i].scale(a)
        return out

    @classmethod
    def regular_left(cls, algebra):
        return cls(
            algebra,
            algebra.dim,
            "left",
            [algebra.left_mult_matrix(unit_vec(algebra.dim, i)) for i in range(algebra.dim)],
            validate=False,
        )

    @classmethod
    def regular_right(cls, algebra):
        return cls(
            algebra,
            algebra.dim,
            "right",
            [algebra.right_mult_matrix(unit_vec(algebra.dim, i)) for i in range(algebra.dim)],
            validate=False,
        )

    def restrict_along(self, target_algebra, images):
        """Module over target_algebra pulled back along b_i -> images[i].

        images are coordinate vectors in self.algebra; the caller
        asserts the assignment is an algebra map (validation sweeps
        will catch violations).
        """
        return ModuleRep(
            target_algebra,
            self.dim,
            self.side,
            [self.act(img) for img in images],
        )

    def to_json(self):
        return {
            "dim": self.dim,
            "side": self.side,
            "action": [m.to_json() for m in self.action],
        }

    @classmethod
    def from_json(cls, algebra, data):
        return cls(algebra, data["dim"], data["side"], [Matrix.from_json(m) for m in data["action"]])

    def __repr__(self):
        return f"ModuleRep({self.side}, dim {self.dim} over {self.algebra!r})"


class BimoduleRep:
    """Commuting left and right module structures on one space."""

    def __init__(self, left: ModuleRep, right: ModuleRep, validate=True):
        if left.dim != right.dim:
            raise ValidationError("left and right structures live on different spaces")
        if left.side != "left" or right.side != "right":
            raise ValidationError("sides are wrong")
        self.left = left
        self.right = right
        self.dim = left.dim
        if validate:
            for i in range(left.algebra.dim):
                for j in range(right.algebra.dim):
                    a = left.action[i]
                    b = right.action[j]
                    if a @ b != b @ a:
                        raise ValidationError("left and right actions do not commute")


def tensor_over(algebra, m_right: ModuleRep, n_left: ModuleRep) -> QuotientSpace:
    """m (x)_algebra n as a quotient of the plain tensor product.

    Ambient basis is (i, j) -> i * dim(n) + j.  Relations span
    { m.a (x) n  -  m (x) a.n } over all basis elements.
    """
    if m_right.side != "right" or n_left.side != "left":
        raise ValidationError("tensor_over needs a right and a left module")
    dm, dn = m_right.dim, n_left.dim
    ambient = dm * dn
    relations = []
    for a_idx in range(algebra.dim):
        ra = m_right.action[a_idx]
        la = n_left.action[a_idx]
        for i in range(dm):
            ma = ra.col(i)
            for j in range(dn):
                an = la.col(j)
                rel = zero_vec(ambient)
                for p, c in enumerate(ma):
                    if c:
                        rel[p * dn + j] += c
                for q, c in enumerate(an):
                    if c:
                        rel[i * dn + q] -= c
                if not vec_is_zero(rel):
                    relations.append(rel)
    return QuotientSpace.from_relation_vectors(ambient, relations)


def descend_outer_action(space: QuotientSpace, ambient_matrices) -> list:
    """Push commuting outer action matrices down to the quotient.

    Raises NotWellDefinedError if any matrix fails to preserve the
    relations (which signals corrupted input data, not a soft failure).
    """
    return [induced_map(m, space, space) for m in ambient_matrices]


def hom_over(algebra, m: ModuleRep, n: ModuleRep) -> Subspace:
    """Space of module maps m -> n as a subspace of matrix space.

    Matrices T of shape dim(n) x dim(m) with T rho_m(b) = rho_n(b) T
    for every basis element b; flattened row major.
    """
    if m.side != n.side:
        raise ValidationError("hom_over needs modules of the same side")
    dm, dn = m.dim, n.dim
    unknowns = dn * dm
    rows = []
    for a_idx in range(algebra.dim):
        am = m.action[a_idx]
        an = n.action[a_idx]
        # equation T @ am - an @ T = 0, entry (r, c)
        for r in range(dn):
            for c in range(dm):
                row = zero_vec(unknowns)
                for k in range(dm):
                    if am.rows[k][c]:
                        row[r * dm + k] += am.rows[k][c]
                for k in range(dn):
                    if an.rows[r][k]:
                        row[k * dm + c] -= an.rows[r][k]
                if not vec_is_zero(row):
                    rows.append(row)
    if not rows:
        return Subspace(unknowns, Matrix.identity(unknowns))
    ker = Matrix(rows, ncols=unknowns).kernel()
    return Subspace(unknowns, ker)


def hom_basis_matrices(sub: Subspace, dn, dm):
    """Unflatten a hom_over basis into matrices."""
    out = []
    for row in sub.basis.rows:
        out.append(Matrix([[row[r * dm + c] for c in range(dm)] for r in range(dn)], ncols=dm))
    return out
