"""Bialgebras by structure constants, sigma tables, and the axiom machinery.

Structure constants follow the usual conventions:

* ``mult[a][b][c]`` is the coefficient of e_c in e_a * e_b,
* ``comult[a][p][q]`` the coefficient of e_p (x) e_q in Delta(e_a),
* ``unit`` the coordinate vector of 1, ``counit`` the values eps(e_a).

Validation at construction is mandatory: every axiom check below presumes
a genuine bialgebra, so failures implicate the sigma table, not the
structure constants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .errors import (
    InvalidBialgebra,
    InvalidCoaction,
    InvalidGroupTable,
    NotAStrongDMap,
)
from .linalg import F0, F1
from .tensor_ops import TensorOp2, check_long_componentwise, long_witness

AXIOMS = ("L1", "L2", "L3", "L4", "L5", "B1", "strongD")

GENERATOR_WORD_CAP = 4


class Coalgebra:
    """A finite-dimensional coalgebra given by structure constants."""

    def __init__(self, basis, comult, counit):
        self.basis = list(basis)
        self.d = len(self.basis)
        self.comult = [la.to_frac_matrix(m) for m in comult]
        self.counit = [Fraction(x) for x in counit]
        self._validate()

    def _validate(self):
        d = self.d
        if len(self.comult) != d or len(self.counit) != d:
            raise InvalidBialgebra("comult/counit size mismatch")
        for a in range(d):
            # counit laws
            for c in range(d):
                left = sum((self.counit[p] * self.comult[a][p][c] for p in range(d)), F0)
                right = sum((self.comult[a][c][p] * self.counit[p] for p in range(d)), F0)
                want = F1 if a == c else F0
                if left != want or right != want:
                    raise InvalidBialgebra(f"counit law fails on basis {a}")
        nz = [
            [(p, q, self.comult[a][p][q]) for p in range(d) for q in range(d)
             if self.comult[a][p][q]]
            for a in range(d)
        ]
        for a in range(d):
            # coassociativity, accumulated sparsely on e_p (x) e_q (x) e_c
            acc = {}
            for m, c, x in nz[a]:
                for p, q, y in nz[m]:
                    key = (p, q, c)
                    acc[key] = acc.get(key, F0) + x * y
            for p, m, x in nz[a]:
                for q, c, y in nz[m]:
                    key = (p, q, c)
                    acc[key] = acc.get(key, F0) - x * y
            if any(v for v in acc.values()):
                raise InvalidBialgebra(f"coassociativity fails on basis {a}")


class FinDimBialgebra:
    """A bialgebra by structure constants; validated exactly at construction."""

    def __init__(self, basis, mult, unit, comult, counit):
        self.basis = list(basis)
        self.d = len(self.basis)
        self.mult = [[ [Fraction(x) for x in cell] for cell in row] for row in mult]
        self.unit = [Fraction(x) for x in unit]
        self.comult = [la.to_frac_matrix(m) for m in comult]
        self.counit = [Fraction(x) for x in counit]
        self._coalgebra = Coalgebra(self.basis, self.comult, self.counit)
        self._validate_algebra()
        self._validate_compat()

    def as_coalgebra(self):
        return self._coalgebra

    def product(self, va, vb):
        """Product of two coordinate vectors."""
        d = self.d
        out = [F0] * d
        for a, xa in enumerate(va):
            if xa:
                ma = self.mult[a]
                for b, xb in enumerate(vb):
                    if xb:
                        f = xa * xb
                        for c in range(d):
                            if ma[b][c]:
                                out[c] += f * ma[b][c]
        return out

    def basis_product(self, a, b):
        return list(self.mult[a][b])

    def _validate_algebra(self):
        d = self.d
        # unit laws
        for b in range(d):
            eb = [F1 if c == b else F0 for c in range(d)]
            if self.product(self.unit, eb) != eb or self.product(eb, self.unit) != eb:
                raise InvalidBialgebra(f"unit law fails on basis {b}")
        # associativity
        for a in range(d):
            for b in range(d):
                ab = self.mult[a][b]
                for c in range(d):
                    ec = [F1 if t == c else F0 for t in range(d)]
                    lhs = self.product(ab, ec)
                    bc = self.mult[b][c]
                    ea = [F1 if t == a else F0 for t in range(d)]
                    rhs = self.product(ea, bc)
                    if lhs != rhs:
                        raise InvalidBialgebra(f"associativity fails at ({a},{b},{c})")

    def _validate_compat(self):
        d = self.d
        # eps is an algebra map
        for a in range(d):
            for b in range(d):
                val = sum((self.mult[a][b][c] * self.counit[c] for c in range(d)), F0)
                if val != self.counit[a] * self.counit[b]:
                    raise InvalidBialgebra(f"counit not multiplicative at ({a},{b})")
        if sum((self.unit[c] * self.counit[c] for c in range(d)), F0) != F1:
            raise InvalidBialgebra("eps(1) != 1")
        # Delta(1) = 1 (x) 1
        d1 = la.zeros(d, d)
        for a, xa in enumerate(self.unit):
            if xa:
                d1 = la.mat_add(d1, la.mat_scale(self.comult[a], xa))
        want = [[self.unit[p] * self.unit[q] for q in range(d)] for p in range(d)]
        if not la.mat_eq(d1, want):
            raise InvalidBialgebra("Delta(1) != 1 (x) 1")
        # Delta is an algebra map; work with sparse entry lists throughout
        comult_nz = [
            [(p, q, self.comult[a][p][q]) for p in range(d) for q in range(d)
             if self.comult[a][p][q]]
            for a in range(d)
        ]
        mult_nz = [
            [[(c, self.mult[a][b][c]) for c in range(d) if self.mult[a][b][c]]
             for b in range(d)]
            for a in range(d)
        ]
        for a in range(d):
            for b in range(d):
                acc = {}
                for c, xc in mult_nz[a][b]:
                    for p, q, x in comult_nz[c]:
                        acc[(p, q)] = acc.get((p, q), F0) + xc * x
                for p1, q1, x1 in comult_nz[a]:
                    for p2, q2, x2 in comult_nz[b]:
                        f = x1 * x2
                        for p, xp in mult_nz[p1][p2]:
                            fp = f * xp
                            for q, xq in mult_nz[q1][q2]:
                                acc[(p, q)] = acc.get((p, q), F0) - fp * xq
                if any(v for v in acc.values()):
                    raise InvalidBialgebra(f"Delta not multiplicative at ({a},{b})")


class SigmaTable:
    """A bilinear form on a bialgebra basis: ``table[a][b] = sigma(e_a (x) e_b)``."""

    def __init__(self, table):
        self.table = la.to_frac_matrix(table)
        self.d = len(self.table)

    @classmethod
    def counit_square(cls, b: FinDimBialgebra):
        """The table eps (x) eps, which satisfies the Long axioms on any bialgebra."""
        return cls([[b.counit[p] * b.counit[q] for q in range(b.d)] for p in range(b.d)])

    def __getitem__(self, key):
        return self.table[key[0]][key[1]]


def _strong_d_witness(comult, d, s):
    """First basis pair violating sum s(x1 (x) y) x2 = sum s(x2 (x) y) x1."""
    for a in range(d):
        for b in range(d):
            for r in range(d):
                lhs = sum((comult[a][p][r] * s[p][b] for p in range(d)), F0)
                rhs = sum((comult[a][r][q] * s[q][b] for q in range(d)), F0)
                if lhs != rhs:
                    return (a, b)
    return None


def check_axioms(b: FinDimBialgebra, s: SigmaTable, which=None) -> dict:
    """Check the requested axioms exactly on basis tuples.

    Returns {axiom: (ok, witness)} where the witness is the first violating
    basis tuple. ``strongD`` is the same identity as L1 phrased on the
    coalgebra alone.
    """
    which = set(AXIOMS) - {"strongD"} if which is None else set(which)
    unknown = which - set(AXIOMS)
    if unknown:
        raise ValueError(f"unknown axioms: {sorted(unknown)}")
    d = b.d
    t = s.table
    report = {}
    if "L1" in which or "strongD" in which:
        w = _strong_d_witness(b.comult, d, t)
        for name in {"L1", "strongD"} & which:
            report[name] = (w is None, w)
    if "L2" in which:
        w = None
        for a in range(d):
            if sum((b.unit[c] * t[a][c] for c in range(d)), F0) != b.counit[a]:
                w = (a,)
                break
        report["L2"] = (w is None, w)
    if "L4" in which:
        w = None
        for a in range(d):
            if sum((b.unit[c] * t[c][a] for c in range(d)), F0) != b.counit[a]:
                w = (a,)
                break
        report["L4"] = (w is None, w)
    if "L3" in which:
        w = None
        for a, x, y in itertools.product(range(d), repeat=3):
            lhs = sum((b.mult[x][y][m] * t[a][m] for m in range(d)), F0)
            rhs = F0
            for p in range(d):
                for q in range(d):
                    c = b.comult[a][p][q]
                    if c:
                        rhs += c * t[p][x] * t[q][y]
            if lhs != rhs:
                w = (a, x, y)
                break
        report["L3"] = (w is None, w)
    if "L5" in which:
        w = None
        for x, y, a in itertools.product(range(d), repeat=3):
            lhs = sum((b.mult[x][y][m] * t[m][a] for m in range(d)), F0)
            rhs = F0
            for p in range(d):
                for q in range(d):
                    c = b.comult[a][p][q]
                    if c:
                        rhs += c * t[y][p] * t[x][q]
            if lhs != rhs:
                w = (x, y, a)
                break
        report["L5"] = (w is None, w)
    if "B1" in which:
        w = None
        for a in range(d):
            for c in range(d):
                lhs = [F0] * d
                rhs = [F0] * d
                for p in range(d):
                    for q in range(d):
                        x1 = b.comult[a][p][q]
                        if not x1:
                            continue
                        for r in range(d):
                            for u in range(d):
                                x2 = b.comult[c][r][u]
                                if not x2:
                                    continue
                                f = x1 * x2
                                if t[p][r]:
                                    prod = b.mult[u][q]
                                    fl = f * t[p][r]
                                    for m in range(d):
                                        if prod[m]:
                                            lhs[m] += fl * prod[m]
                                if t[q][u]:
                                    prod = b.mult[p][r]
                                    fr = f * t[q][u]
                                    for m in range(d):
                                        if prod[m]:
                                            rhs[m] += fr * prod[m]
                if lhs != rhs:
                    w = (a, c)
                    break
            if w:
                break
        report["B1"] = (w is None, w)
    return report


@dataclass
class AffineTableSpace:
    """Affine space of d x d tables: particular solution plus homogeneous basis.

    Variables are row-major: index p*d + q stands for sigma(e_p (x) e_q).
    """

    d: int
    particular: list
    basis: list

    def contains(self, table) -> bool:
        t = la.to_frac_matrix(table)
        vec = [t[p][q] for p in range(self.d) for q in range(self.d)]
        diff = [x - y for x, y in zip(vec, self.particular)]
        if not self.basis:
            return la.is_zero_vec(diff)
        rows = [list(v) for v in self.basis]
        red, pivots = la.rref(rows)
        for row, p in zip(red, pivots):
            f = diff[p]
            if f:
                diff = [x - f * y for x, y in zip(diff, row)]
        return la.is_zero_vec(diff)

    def pinned(self) -> dict:
        """Variables constant across the space, as {(p, q): value}."""
        out = {}
        for k in range(self.d * self.d):
            if all(not v[k] for v in self.basis):
                out[(k // self.d, k % self.d)] = self.particular[k]
        return out


def _l1_l2_l4_rows(b: FinDimBialgebra):
    """Linear system (rows, rhs) in the d^2 unknowns sigma(e_p (x) e_q)."""
    d = b.d
    rows, rhs = [], []
    idx = lambda p, q: p * d + q
    for a in range(d):
        for y in range(d):
            for r in range(d):
                row = [F0] * (d * d)
                for p in range(d):
                    if b.comult[a][p][r]:
                        row[idx(p, y)] += b.comult[a][p][r]
                for q in range(d):
                    if b.comult[a][r][q]:
                        row[idx(q, y)] -= b.comult[a][r][q]
                if not la.is_zero_vec(row):
                    rows.append(row)
                    rhs.append(F0)
    for a in range(d):
        row = [F0] * (d * d)
        for c in range(d):
            if b.unit[c]:
                row[idx(a, c)] += b.unit[c]
        rows.append(row)
        rhs.append(b.counit[a])
        row = [F0] * (d * d)
        for c in range(d):
            if b.unit[c]:
                row[idx(c, a)] += b.unit[c]
        rows.append(row)
        rhs.append(b.counit[a])
    return rows, rhs


def l1_solution_space(b: FinDimBialgebra) -> AffineTableSpace:
    """All tables satisfying the linear axioms L1, L2, L4, exactly."""
    rows, rhs = _l1_l2_l4_rows(b)
    sol = la.solve_affine(rows, rhs)
    if sol is None:
        raise InvalidBialgebra("L1/L2/L4 system inconsistent on a validated bialgebra")
    particular, basis = sol
    return AffineTableSpace(b.d, particular, basis)


@dataclass
class FeasibilityResult:
    """Outcome of the sound-but-incomplete sigma feasibility procedure.

    ``status`` is ``"infeasible"`` (a proof, with a witness description) or
    ``"unknown"`` (the residual affine space; NOT a feasibility claim).
    """

    status: str
    witness: str | None = None
    space: AffineTableSpace | None = None


def _quadratic_equations(b: FinDimBialgebra):
    """L3/L5 on basis triples as (constant, linear_terms, quadratic_terms).

    Each equation reads: const + sum coeff*var + sum coeff*var1*var2 = 0,
    with variables indexed row-major into the d x d table.
    """
    d = b.d
    idx = lambda p, q: p * d + q
    eqs = []
    for a, x, y in itertools.product(range(d), repeat=3):
        lin = {}
        quad = {}
        for m in range(d):
            if b.mult[x][y][m]:
                lin[idx(a, m)] = lin.get(idx(a, m), F0) + b.mult[x][y][m]
        for p in range(d):
            for q in range(d):
                c = b.comult[a][p][q]
                if c:
                    key = (idx(p, x), idx(q, y))
                    quad[key] = quad.get(key, F0) - c
        eqs.append(("L3", (a, x, y), F0, lin, quad))
    for x, y, a in itertools.product(range(d), repeat=3):
        lin = {}
        quad = {}
        for m in range(d):
            if b.mult[x][y][m]:
                lin[idx(m, a)] = lin.get(idx(m, a), F0) + b.mult[x][y][m]
        for p in range(d):
            for q in range(d):
                c = b.comult[a][p][q]
                if c:
                    key = (idx(y, p), idx(x, q))
                    quad[key] = quad.get(key, F0) - c
        eqs.append(("L5", (x, y, a), F0, lin, quad))
    return eqs


def sigma_feasibility(b: FinDimBialgebra) -> FeasibilityResult:
    """Sound, incomplete search for Long-structure obstructions.

    Solves the linear axioms, then repeatedly linearizes any quadratic
    axiom instance whose products each contain at most one unpinned factor.
    Reports infeasible only on an exact 0 = nonzero contradiction.
    """
    rows, rhs = _l1_l2_l4_rows(b)
    quads = _quadratic_equations(b)
    d2 = b.d * b.d

    def current_space():
        sol = la.solve_affine(rows, rhs)
        return sol

    sol = current_space()
    if sol is None:
        return FeasibilityResult("infeasible", witness="linear axioms L1/L2/L4")
    used = set()
    while True:
        particular, basis = sol
        pinned = {
            k: particular[k] for k in range(d2) if all(not v[k] for v in basis)
        }
        added = False
        for eq_id, (name, where, const, lin, quad) in enumerate(quads):
            if eq_id in used:
                continue
            row = [F0] * d2
            c0 = const
            for k, coeff in lin.items():
                row[k] += coeff
            usable = True
            for (k1, k2), coeff in quad.items():
                if k1 in pinned and k2 in pinned:
                    c0 += coeff * pinned[k1] * pinned[k2]
                elif k1 in pinned:
                    row[k2] += coeff * pinned[k1]
                elif k2 in pinned:
                    row[k1] += coeff * pinned[k2]
                else:
                    usable = False
                    break
            if not usable:
                continue
            used.add(eq_id)
            if la.is_zero_vec(row):
                if c0:
                    return FeasibilityResult(
                        "infeasible", witness=f"{name} at basis triple {where}"
                    )
                continue
            rows.append(row)
            rhs.append(-c0)
            added = True
        if not added:
            break
        sol = current_space()
        if sol is None:
            return FeasibilityResult(
                "infeasible", witness="linearized quadratic axioms contradict L1/L2/L4"
            )
    particular, basis = sol
    return FeasibilityResult("unknown", space=AffineTableSpace(b.d, particular, basis))


@dataclass
class GeneratorBialgebra:
    """A free bialgebra given on generators.

    ``delta`` maps each generator to a list of (coeff, left_word, right_word)
    with words as tuples of generator names (empty tuple = 1); ``eps`` maps
    generators to scalars. Relations, if any, are ignored: words are compared
    with free-algebra semantics.
    """

    generators: list
    delta: dict
    eps: dict

    def eps_word(self, w):
        acc = F1
        for g in w:
            acc *= Fraction(self.eps[g])
        return acc

    def delta_word(self, w):
        terms = [(F1, (), ())]
        for g in w:
            nxt = []
            for coeff, lw, rw in terms:
                for c2, l2, r2 in self.delta[g]:
                    nxt.append((coeff * Fraction(c2), lw + l2, rw + r2))
            terms = nxt
        return terms


def generator_sigma_words(g: GeneratorBialgebra, table, w1, w2,
                          cap=GENERATOR_WORD_CAP):
    """Extend a generator-pair sigma table to words via the splitting laws."""
    w1, w2 = tuple(w1), tuple(w2)
    if len(w1) > cap or len(w2) > cap:
        raise ValueError(f"word longer than cap {cap}")
    if not w1:
        return g.eps_word(w2)
    if not w2:
        return g.eps_word(w1)
    if len(w1) == 1 and len(w2) == 1:
        return Fraction(table.get((w1[0], w2[0]), F0))
    if len(w2) > 1:
        y, z = w2[:1], w2[1:]
        acc = F0
        for coeff, lw, rw in g.delta_word(w1):
            s1 = generator_sigma_words(g, table, lw, y, cap)
            if s1:
                acc += coeff * s1 * generator_sigma_words(g, table, rw, z, cap)
        return acc
    x, y = w1[:1], w1[1:]
    acc = F0
    for coeff, lw, rw in g.delta_word(w2):
        s1 = generator_sigma_words(g, table, y, lw, cap)
        if s1:
            acc += coeff * s1 * generator_sigma_words(g, table, x, rw, cap)
    return acc


def check_generator_long(g: GeneratorBialgebra, table):
    """Degree-one strong D-identity over the free algebra on the generators.

    For each generator pair (x, y) the two sides of the identity are expanded
    and matched word by word, with sigma extended through the splitting laws
    where a word factor is longer than one letter. Returns ``(ok, report)``;
    the report carries the forced linear constraints on the generator-pair
    table when every comultiplication factor is a word of length <= 1, and
    the first violating pair otherwise.
    """
    gens = list(g.generators)
    violations = []
    for x in gens:
        for y in gens:
            coeffs = {}
            for c, lw, rw in g.delta[x]:
                c = Fraction(c)
                s = generator_sigma_words(g, table, lw, (y,))
                if s:
                    coeffs[rw] = coeffs.get(rw, F0) + c * s
                s = generator_sigma_words(g, table, rw, (y,))
                if s:
                    coeffs[lw] = coeffs.get(lw, F0) - c * s
            bad = {w: v for w, v in coeffs.items() if v}
            if bad:
                violations.append(((x, y), bad))
    report = {"violations": violations}
    linearizable = all(
        len(lw) <= 1 and len(rw) <= 1
        for gname in gens
        for _, lw, rw in g.delta[gname]
    )
    if linearizable:
        m = len(gens)
        gi = {name: k for k, name in enumerate(gens)}
        idx = lambda a, b: a * m + b
        rows, rhs = [], []
        for x in gens:
            for y in gens:
                word_rows = {}
                word_consts = {}
                for c, lw, rw in g.delta[x]:
                    c = Fraction(c)
                    # + sigma(lw (x) y) * rw
                    if lw:
                        word_rows.setdefault(rw, [F0] * (m * m))[
                            idx(gi[lw[0]], gi[y])
                        ] += c
                    else:
                        word_consts[rw] = word_consts.get(rw, F0) + c * Fraction(g.eps[y])
                    # - sigma(rw (x) y) * lw
                    if rw:
                        word_rows.setdefault(lw, [F0] * (m * m))[
                            idx(gi[rw[0]], gi[y])
                        ] -= c
                    else:
                        word_consts[lw] = word_consts.get(lw, F0) - c * Fraction(g.eps[y])
                for w in set(word_rows) | set(word_consts):
                    row = word_rows.get(w, [F0] * (m * m))
                    if not la.is_zero_vec(row) or word_consts.get(w, F0):
                        rows.append(row)
                        rhs.append(-word_consts.get(w, F0))
        sol = la.solve_affine(rows, rhs) if rows else ([F0] * (m * m), None)
        if sol is None:
            report["constraints"] = None
        else:
            particular, basis = sol if rows else ([F0] * (m * m), [])
            if basis is None:
                basis = []
            space = AffineTableSpace(m, particular, basis)
            report["constraints"] = space
            report["generator_order"] = gens
    return (not violations, report)


def strong_dmap_rsigma(c, s: SigmaTable, rho) -> TensorOp2:
    """Build the induced operator on a comodule from a strong D-map.

    ``c`` is a coalgebra (or anything with d/comult/counit); ``rho`` gives
    the coaction: rho[v][l] is the coalgebra coordinate vector of the
    coefficient of m_v in rho(m_l). Checks the strong D-map identity and
    the coaction laws, then verifies the output is a Long solution.
    """
    d = c.d
    n = len(rho)
    rho = [[ [Fraction(x) for x in cell] for cell in row] for row in rho]
    if any(len(row) != n for row in rho) or any(
        len(cell) != d for row in rho for cell in row
    ):
        raise InvalidCoaction("rho must be n x n with coalgebra-valued entries")
    w = _strong_d_witness(c.comult, d, s.table)
    if w is not None:
        raise NotAStrongDMap(f"strong D-map identity fails at basis pair {w}", w)
    # counit law of the coaction
    for v in range(n):
        for l in range(n):
            val = sum((rho[v][l][k] * c.counit[k] for k in range(d)), F0)
            if val != (F1 if v == l else F0):
                raise InvalidCoaction(f"counit law fails at ({v},{l})")
    # coassociativity of the coaction
    for v in range(n):
        for l in range(n):
            for p in range(d):
                for q in range(d):
                    lhs = sum((rho[v][l][k] * c.comult[k][p][q] for k in range(d)), F0)
                    rhs = sum((rho[v][w_][p] * rho[w_][l][q] for w_ in range(n)), F0)
                    if lhs != rhs:
                        raise InvalidCoaction(f"coassociativity fails at ({v},{l})")
    mat = la.zeros(n * n, n * n)
    for v in range(n):
        for u in range(n):
            for i in range(n):
                for j in range(n):
                    acc = F0
                    for k1 in range(d):
                        x1 = rho[i][v][k1]
                        if x1:
                            for k2 in range(d):
                                x2 = rho[j][u][k2]
                                if x2:
                                    acc += x1 * x2 * s.table[k1][k2]
                    mat[i * n + j][v * n + u] = acc
    out = TensorOp2(n, mat)
    assert check_long_componentwise(out), (
        "induced operator fails the Long equation: internal bug "
        f"(witness {long_witness(out)})"
    )
    return out


def comatrix_coalgebra(n) -> Coalgebra:
    """The comatrix coalgebra of order n: Delta(c_jk) = sum_u c_ju (x) c_uk."""
    d = n * n
    comult = [la.zeros(d, d) for _ in range(d)]
    counit = [F0] * d
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            a = (j - 1) * n + (k - 1)
            for u in range(1, n + 1):
                comult[a][(j - 1) * n + (u - 1)][(u - 1) * n + (k - 1)] = F1
            if j == k:
                counit[a] = F1
    basis = [f"c_{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    return Coalgebra(basis, comult, counit)


def fundamental_comodule(n):
    """Coaction coefficients rho(m_l) = sum_v m_v (x) c_vl over the comatrix
    coalgebra of order n."""
    d = n * n
    rho = [[[F0] * d for _ in range(n)] for _ in range(n)]
    for v in range(n):
        for l in range(n):
            rho[v][l][v * n + l] = F1
    return rho


def sweedler_h4() -> FinDimBialgebra:
    """The 4-dimensional Hopf algebra on {1, x, y, z}: x^2 = 1, y^2 = 0,
    xy = z, xz = -zx = y (char k != 2)."""
    names = ["1", "x", "y", "z"]
    d = 4
    I, X, Y, Z = 0, 1, 2, 3
    mult = [[[F0] * d for _ in range(d)] for _ in range(d)]

    def setp(a, b, c, v=F1):
        mult[a][b][c] = Fraction(v)

    for a in range(d):
        setp(I, a, a)
        if a != I:
            setp(a, I, a)
    setp(X, X, I)
    setp(X, Y, Z)
    setp(X, Z, Y)
    setp(Y, X, Z, -1)
    # y*y = 0, y*z = 0, z*y = 0, z*z = 0 already zero
    setp(Z, X, Y, -1)
    comult = [la.zeros(d, d) for _ in range(d)]
    comult[I][I][I] = F1
    comult[X][X][X] = F1
    comult[Y][Y][X] = F1
    comult[Y][I][Y] = F1
    comult[Z][X][Z] = F1
    comult[Z][Z][I] = F1
    counit = [F1, F1, F0, F0]
    unit = [F1, F0, F0, F0]
    return FinDimBialgebra(names, mult, unit, comult, counit)


def group_algebra(labels, table) -> FinDimBialgebra:
    """Group algebra k[G] with group-like basis.

    ``table[i][j]`` is the index of the product of elements i and j; the
    table must be a genuine group table.
    """
    d = len(labels)
    if len(table) != d or any(len(r) != d for r in table):
        raise InvalidGroupTable("table must be d x d")
    if any(not 0 <= v < d for r in table for v in r):
        raise InvalidGroupTable("table entries out of range")
    for a in range(d):
        for b in range(d):
            for c in range(d):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise InvalidGroupTable(f"not associative at ({a},{b},{c})")
    ident = next(
        (e for e in range(d) if all(table[e][g] == g == table[g][e] for g in range(d))),
        None,
    )
    if ident is None:
        raise InvalidGroupTable("no identity element")
    for a in range(d):
        if sorted(table[a]) != list(range(d)) or sorted(
            table[r][a] for r in range(d)
        ) != list(range(d)):
            raise InvalidGroupTable(f"element {a} has no inverse")
    mult = [[[F1 if c == table[a][b] else F0 for c in range(d)] for b in range(d)]
            for a in range(d)]
    comult = [la.zeros(d, d) for _ in range(d)]
    for a in range(d):
        comult[a][a][a] = F1
    return FinDimBialgebra(
        list(labels), mult, [F1 if a == ident else F0 for a in range(d)], comult,
        [F1] * d
    )


def cyclic_group_algebra(m) -> FinDimBialgebra:
    """k[Z/m] with basis g^0 .. g^{m-1}."""
    return group_algebra(
        [f"g^{i}" for i in range(m)],
        [[(i + j) % m for j in range(m)] for i in range(m)],
    )


def comatrix_tensor_truncation(n, degree) -> FinDimBialgebra:
    """Tensor bialgebra on the comatrix coalgebra, truncated in word length.

    Quotient of the tensor algebra over the order-n comatrix coalgebra by
    the biideal (long words) intersected with the counit kernel. The
    comultiplication splits each letter through the matrix indices and
    preserves word length, so the basis consists of the words of length
    <= degree together with one extra group-like class s: any longer word
    w collapses to eps(w) * s, and s absorbs all products (s * a =
    eps(a) * s). Dimension: 1 + sum_{k<=degree} n^(2k).
    """
    letters = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    words = [()]
    frontier = [()]
    for _ in range(degree):
        frontier = [w + (l,) for w in frontier for l in letters]
        words.extend(frontier)
    index = {w: k for k, w in enumerate(words)}
    d = len(words) + 1
    s = d - 1

    def word_eps(w):
        return F1 if all(i == j for (i, j) in w) else F0

    mult = [[[F0] * d for _ in range(d)] for _ in range(d)]
    for a, wa in enumerate(words):
        for b, wb in enumerate(words):
            cat = wa + wb
            if len(cat) <= degree:
                mult[a][b][index[cat]] = F1
            else:
                mult[a][b][s] = word_eps(wa) * word_eps(wb)
    for a, wa in enumerate(words):
        mult[a][s][s] = word_eps(wa)
        mult[s][a][s] = word_eps(wa)
    mult[s][s][s] = F1
    comult = [la.zeros(d, d) for _ in range(d)]
    counit = [F0] * d
    for a, w in enumerate(words):
        terms = [(F1, (), ())]
        for (i, j) in w:
            terms = [
                (c, lw + ((i, u),), rw + ((u, j),))
                for c, lw, rw in terms
                for u in range(1, n + 1)
            ]
        for c, lw, rw in terms:
            comult[a][index[lw]][index[rw]] += c
        counit[a] = word_eps(w)
    comult[s][s][s] = F1
    counit[s] = F1
    basis = ["*".join(f"c_{i}_{j}" for (i, j) in w) or "1" for w in words] + ["s"]
    unit = [F1] + [F0] * (d - 1)
    return FinDimBialgebra(basis, mult, unit, comult, counit)


def builtin_bialgebras() -> dict:
    """Named constructors for the bundled bialgebras."""
    return {
        "sweedler_h4": sweedler_h4,
        "group_algebra": group_algebra,
        "comatrix_tensor_truncation": comatrix_tensor_truncation,
    }
