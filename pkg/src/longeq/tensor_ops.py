"""Exact operators on M(x)M and M(x)M(x)M, solution constructors, law checks.

Conventions, used everywhere downstream:

* An operator acts as ``R(m_v (x) m_u) = sum_{i,j} x[u,v,j,i] m_i (x) m_j``
  with all indices 1..n; the first tensor slot carries v on input and i on
  output.
* The matrix view indexes the ordered basis ``m_a (x) m_b`` at row/column
  ``(a-1)n + (b-1)``, so the entry at row ``(i-1)n+(j-1)``, column
  ``(v-1)n+(u-1)`` is ``x[u,v,j,i]``. The matrix view and the 4-index
  coefficient family round-trip losslessly.

All arithmetic in this module is exact rational.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .errors import (
    CentralityViolated,
    NonCommutingPair,
    NotALongSolution,
    NotASubmodule,
    NotIdempotent,
    SingularMatrix,
    SingularOperator,
)
from .linalg import F0, F1

LAWS = ("long", "d_equation", "qybe", "hopf", "kz_bracket", "symmetric")


class TensorOp2:
    """Exact endomorphism of M(x)M, stored as its n^2 x n^2 matrix view."""

    def __init__(self, dim, matrix):
        if dim < 1:
            raise ValueError("dim must be positive")
        matrix = la.to_frac_matrix(matrix)
        if len(matrix) != dim * dim or any(len(r) != dim * dim for r in matrix):
            raise ValueError("matrix view must be n^2 x n^2")
        self.dim = dim
        self.matrix = matrix

    @classmethod
    def from_coeffs(cls, dim, x):
        """Build from the 4-index family ``x[u][v][j][i]`` (0-based nesting)."""
        n = dim
        mat = la.zeros(n * n, n * n)
        for u in range(n):
            for v in range(n):
                for j in range(n):
                    for i in range(n):
                        mat[i * n + j][v * n + u] = Fraction(x[u][v][j][i])
        return cls(dim, mat)

    def coeff(self, u, v, j, i):
        """x[u,v,j,i] with 1-based indices."""
        n = self.dim
        return self.matrix[(i - 1) * n + (j - 1)][(v - 1) * n + (u - 1)]

    def coeffs(self):
        """The 4-index family as nested lists ``x[u][v][j][i]`` (0-based)."""
        n = self.dim
        return [
            [
                [[self.matrix[i * n + j][v * n + u] for i in range(n)] for j in range(n)]
                for v in range(n)
            ]
            for u in range(n)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, TensorOp2)
            and self.dim == other.dim
            and la.mat_eq(self.matrix, other.matrix)
        )

    def __repr__(self):
        return f"TensorOp2(dim={self.dim})"


class TensorOp3:
    """Endomorphism of M(x)M(x)M over the basis m_a(x)m_b(x)m_c.

    Basis index: ``(a-1)n^2 + (b-1)n + (c-1)``.
    """

    def __init__(self, dim, matrix):
        matrix = la.to_frac_matrix(matrix)
        if len(matrix) != dim**3 or any(len(r) != dim**3 for r in matrix):
            raise ValueError("matrix must be n^3 x n^3")
        self.dim = dim
        self.matrix = matrix

    def __mul__(self, other):
        return TensorOp3(self.dim, la.mat_mul(self.matrix, other.matrix))

    def __add__(self, other):
        return TensorOp3(self.dim, la.mat_add(self.matrix, other.matrix))

    def __sub__(self, other):
        return TensorOp3(self.dim, la.mat_sub(self.matrix, other.matrix))

    def __eq__(self, other):
        return (
            isinstance(other, TensorOp3)
            and self.dim == other.dim
            and la.mat_eq(self.matrix, other.matrix)
        )

    def is_zero(self):
        return la.is_zero_matrix(self.matrix)

    @classmethod
    def identity(cls, n):
        return cls(n, la.identity(n**3))


def flip_matrix(n):
    """Matrix of the flip tau(m_a (x) m_b) = m_b (x) m_a."""
    t = la.zeros(n * n, n * n)
    for a in range(n):
        for b in range(n):
            t[b * n + a][a * n + b] = F1
    return t


def lift(r: TensorOp2, positions: int) -> TensorOp3:
    """Place R on two of the three tensor slots; identity on the third.

    ``positions`` is one of 12, 13, 23.
    """
    n = r.dim
    if positions == 12:
        return TensorOp3(n, la.kron(r.matrix, la.identity(n)))
    if positions == 23:
        return TensorOp3(n, la.kron(la.identity(n), r.matrix))
    if positions == 13:
        out = la.zeros(n**3, n**3)
        for row in range(n * n):
            a, c = divmod(row, n)
            rrow = r.matrix[row]
            for col in range(n * n):
                x = rrow[col]
                if not x:
                    continue
                a2, c2 = divmod(col, n)
                for b in range(n):
                    out[a * n * n + b * n + c][a2 * n * n + b * n + c2] = x
        return TensorOp3(n, out)
    raise ValueError("positions must be 12, 13 or 23")


def _commutes(a: TensorOp3, b: TensorOp3) -> bool:
    return la.mat_eq(la.mat_mul(a.matrix, b.matrix), la.mat_mul(b.matrix, a.matrix))


def check_laws(r: TensorOp2, laws=None) -> dict:
    """Evaluate the requested laws exactly; returns {law: bool}.

    Laws: long, d_equation, qybe, hopf, kz_bracket, symmetric. When the
    Long law holds the KZ bracket is asserted to hold as well (it is an
    algebraic consequence; a failure indicates a bug).
    """
    wanted = set(LAWS) if laws is None else set(laws)
    unknown = wanted - set(LAWS)
    if unknown:
        raise ValueError(f"unknown laws: {sorted(unknown)}")
    r12 = lift(r, 12)
    r13 = lift(r, 13)
    r23 = lift(r, 23)
    m12, m13, m23 = r12.matrix, r13.matrix, r23.matrix
    report = {}
    need_long = bool({"long", "kz_bracket"} & wanted)
    long_ok = None
    if need_long or "d_equation" in wanted:
        eq2 = la.mat_eq(la.mat_mul(m12, m23), la.mat_mul(m23, m12))
        if "d_equation" in wanted:
            report["d_equation"] = eq2
    if need_long:
        eq1 = la.mat_eq(la.mat_mul(m12, m13), la.mat_mul(m13, m12))
        long_ok = eq1 and eq2
        if "long" in wanted:
            report["long"] = long_ok
    if "qybe" in wanted:
        lhs = la.mat_mul(la.mat_mul(m12, m13), m23)
        rhs = la.mat_mul(la.mat_mul(m23, m13), m12)
        report["qybe"] = la.mat_eq(lhs, rhs)
    if "hopf" in wanted:
        lhs = la.mat_mul(la.mat_mul(m23, m13), m12)
        report["hopf"] = la.mat_eq(lhs, la.mat_mul(m12, m23))
    if "kz_bracket" in wanted:
        s = la.mat_add(m13, m23)
        kz = la.mat_eq(la.mat_mul(m12, s), la.mat_mul(s, m12))
        if long_ok:
            assert kz, "Long holds but the KZ bracket does not: internal bug"
        report["kz_bracket"] = kz
    if "symmetric" in wanted:
        t = flip_matrix(r.dim)
        report["symmetric"] = la.mat_eq(la.mat_mul(t, la.mat_mul(r.matrix, t)), r.matrix)
    return report


def long_witness(r: TensorOp2):
    """First componentwise violation of the Long system, or None.

    Returns ``(equation_number, (i, j, k, l, p, q))`` with 1-based indices;
    equation 1 is the R12/R13 half, equation 2 the R12/R23 half.
    """
    n = r.dim
    x = r.coeff
    rng = range(1, n + 1)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    for p in rng:
                        for q in rng:
                            lhs = sum((x(k, v, j, i) * x(q, l, p, v) for v in rng), F0)
                            rhs = sum((x(k, l, j, a) * x(q, a, p, i) for a in rng), F0)
                            if lhs != rhs:
                                return (1, (i, j, k, l, p, q))
                            lhs = sum((x(k, v, j, i) * x(l, q, v, p) for v in rng), F0)
                            rhs = sum((x(k, l, j, a) * x(a, q, i, p) for a in rng), F0)
                            if lhs != rhs:
                                return (2, (i, j, k, l, p, q))
    return None


def check_long_componentwise(r: TensorOp2) -> bool:
    """Componentwise Long check; the independent oracle for check_laws."""
    return long_witness(r) is None


def make_diag(n, a) -> TensorOp2:
    """R(m_i (x) m_j) = a[i][j] m_i (x) m_j (a is n x n, 1-based in math)."""
    a = la.to_frac_matrix(a)
    if len(a) != n or any(len(row) != n for row in a):
        raise ValueError("a must be n x n")
    mat = la.zeros(n * n, n * n)
    for i in range(n):
        for j in range(n):
            mat[i * n + j][i * n + j] = a[i][j]
    return TensorOp2(n, mat)


def make_pair(f, g) -> TensorOp2:
    """R = f (x) g for commuting f, g; raises NonCommutingPair otherwise."""
    f = la.to_frac_matrix(f)
    g = la.to_frac_matrix(g)
    n = len(f)
    if len(g) != n:
        raise ValueError("f and g must have equal size")
    if not la.mat_eq(la.mat_mul(f, g), la.mat_mul(g, f)):
        raise NonCommutingPair("fg != gf")
    return TensorOp2(n, la.kron(f, g))


def make_conjugate(u, r: TensorOp2) -> TensorOp2:
    """(u (x) u) R (u (x) u)^{-1} for invertible u and Long R."""
    u = la.to_frac_matrix(u)
    if len(u) != r.dim:
        raise ValueError("u must be n x n")
    try:
        pass_mat = la.kron(u, u)
        pass_inv = la.mat_inv(pass_mat)
    except ValueError as exc:
        raise SingularMatrix("u is not invertible") from exc
    if not check_long_componentwise(r):
        raise NotALongSolution("input is not a Long solution", long_witness(r))
    return TensorOp2(r.dim, la.mat_mul(pass_mat, la.mat_mul(r.matrix, pass_inv)))


def make_phi(n, phi) -> TensorOp2:
    """Symmetric solution attached to an idempotent map phi on {1..n}.

    ``phi`` is a length-n sequence of 1-based values. Coefficients:
    x[u,v,j,i] = [u==v][phi(i)==v][phi(j)==v].
    """
    phi = list(phi)
    if len(phi) != n or any(not 1 <= p <= n for p in phi):
        raise ValueError("phi must map {1..n} into itself")
    if any(phi[p - 1] != p for p in phi):
        raise NotIdempotent("phi o phi != phi")
    mat = la.zeros(n * n, n * n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = phi[i - 1]
            if phi[j - 1] == v:
                mat[(i - 1) * n + (j - 1)][(v - 1) * n + (v - 1)] = F1
    return TensorOp2(n, mat)


class GradedActionData:
    """A finite abelian group acting on M, with a compatible grading.

    ``elements`` are hashable labels, ``table`` maps (g, h) -> gh,
    ``actions`` maps each element to an invertible n x n matrix (columns
    convention: (g . m_v) = sum_i actions[g][i][v] m_i), and ``degrees``
    assigns a group element to each basis vector.
    """

    def __init__(self, elements, table, actions, degrees):
        self.elements = list(elements)
        self.table = dict(table)
        self.actions = {g: la.to_frac_matrix(m) for g, m in actions.items()}
        self.degrees = list(degrees)
        self.n = len(self.degrees)
        self._validate()

    def _validate(self):
        elems = self.elements
        if set(self.actions) != set(elems):
            raise ValueError("one action matrix per group element required")
        if any(d not in elems for d in self.degrees):
            raise ValueError("degrees must be group elements")
        # identity element
        ident = next(
            (e for e in elems if all(self.table[(e, g)] == g == self.table[(g, e)] for g in elems)),
            None,
        )
        if ident is None:
            raise ValueError("group table has no identity")
        self.identity = ident
        if not la.mat_eq(self.actions[ident], la.identity(self.n)):
            raise ValueError("identity element must act as the identity matrix")
        for g in elems:
            for h in elems:
                gh = self.table[(g, h)]
                if not la.mat_eq(
                    la.mat_mul(self.actions[g], self.actions[h]), self.actions[gh]
                ):
                    raise ValueError(f"actions violate the group law at ({g}, {h})")
        # every homogeneous component must be stable under every action
        for g in elems:
            m = self.actions[g]
            for i in range(self.n):
                for v in range(self.n):
                    if m[i][v] and self.degrees[i] != self.degrees[v]:
                        raise NotASubmodule(
                            f"action of {g!r} mixes degrees {self.degrees[v]!r} "
                            f"and {self.degrees[i]!r}"
                        )


def make_graded(data: GradedActionData) -> TensorOp2:
    """R(n (x) m) = sum_s (s . n) (x) m_s over homogeneous components of m.

    On basis vectors: R(m_v (x) m_u) = (degree(m_u) . m_v) (x) m_u.
    """
    n = data.n
    mat = la.zeros(n * n, n * n)
    for u in range(n):
        act = data.actions[data.degrees[u]]
        for v in range(n):
            for i in range(n):
                if act[i][v]:
                    mat[i * n + u][v * n + u] = act[i][v]
    return TensorOp2(n, mat)


def make_homothety(rep, element) -> TensorOp2:
    """Homothety by a two-tensor over a matrix algebra.

    ``rep`` is a list of n x n matrices generating the acting algebra;
    ``element`` is a list of ``(coeff, left_index, right_index)`` triples
    describing sum coeff * rep[left] (x) rep[right]. The left legs must
    commute with every generator (checked exactly).
    """
    rep = [la.to_frac_matrix(m) for m in rep]
    if not rep:
        raise ValueError("rep must be nonempty")
    n = len(rep[0])
    acc = la.zeros(n * n, n * n)
    for coeff, li, ri in element:
        acc = la.mat_add(acc, la.mat_scale(la.kron(rep[li], rep[ri]), coeff))
    for idx, a in enumerate(rep):
        lhs = la.zeros(n * n, n * n)
        rhs = la.zeros(n * n, n * n)
        for coeff, li, ri in element:
            lhs = la.mat_add(lhs, la.mat_scale(la.kron(la.mat_mul(rep[li], a), rep[ri]), coeff))
            rhs = la.mat_add(rhs, la.mat_scale(la.kron(la.mat_mul(a, rep[li]), rep[ri]), coeff))
        if not la.mat_eq(lhs, rhs):
            raise CentralityViolated(f"left legs do not commute with rep[{idx}]")
    return TensorOp2(n, acc)


def invert(r: TensorOp2) -> TensorOp2:
    """Inverse in the same convention; raises SingularOperator when rank-deficient."""
    try:
        return TensorOp2(r.dim, la.mat_inv(r.matrix))
    except ValueError as exc:
        raise SingularOperator("operator matrix is singular") from exc


def idempotent_maps(n):
    """All idempotent maps on {1..n} as 1-based tuples, lexicographic."""
    out = []

    def rec(prefix):
        if len(prefix) == n:
            if all(prefix[p - 1] == p for p in prefix):
                out.append(tuple(prefix))
            return
        for v in range(1, n + 1):
            rec(prefix + [v])

    rec([])
    return out
