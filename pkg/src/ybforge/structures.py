"""Structure-constant (co)algebras and graded Lie structures.

An AlgebraSpec stores e_i e_j = sum_k c[i][j][k] e_k; a CoalgebraSpec stores
eta(e_k) = sum_{i,j} d[k][i][j] e_i (x) e_j.  Axiom checkers cover
commutativity, associativity, the Jordan identity (x^2 y) x = x^2 (y x),
their coalgebra duals, and the Z2- and G-graded Lie axioms.

The Jordan identity is cubic in x, so checking it on basis elements alone
proves nothing; it is verified on coordinate grids through paramgrid, which
makes a passing check a proof (tensor-grid interpolation), not a sample.

The W subspace of V^(x4) is built in three modes because the source text's
literal reading is contradicted by a computable counterexample: pattern3
uses only the x(x)x(x)y(x)x pattern (equivalent to the Jordan identity),
symmetrized sums each generator over the four insertion positions (holds in
any Jordan algebra via linearized power-associativity), and full takes all
four positions separately (fails already for 2x2 symmetric matrices).
Checkers take the mode explicitly and never guess.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import paramgrid, ybcore
from .exactla import (Rat, kron, mat_from_columns, mat_identity, mat_mul,
                      mat_sub, project_onto, row_space_basis, vec_is_zero)


class PreconditionError(ValueError):
    """A checker's stated precondition does not hold for the input."""


class MissingUnitError(PreconditionError):
    """Construction requires a unital algebra."""


def _frac_table(table, n, what):
    if len(table) != n:
        raise ValueError("%s table must be %d^3" % (what, n))
    out = []
    for plane in table:
        if len(plane) != n:
            raise ValueError("%s table must be %d^3" % (what, n))
        rows = []
        for row in plane:
            if len(row) != n:
                raise ValueError("%s table must be %d^3" % (what, n))
            rows.append([Fraction(x) for x in row])
        out.append(rows)
    return out


class AlgebraSpec:
    """Finite-dimensional algebra by structure constants; unit optional."""

    def __init__(self, basis, c, unit=None):
        self.n = len(basis)
        self.basis = list(basis)
        self.c = _frac_table(c, self.n, "structure")
        self.unit = [Fraction(x) for x in unit] if unit is not None else None
        if self.unit is not None and len(self.unit) != self.n:
            raise ValueError("unit dim mismatch")

    def __eq__(self, other):
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        return (self.basis == other.basis and self.c == other.c
                and self.unit == other.unit)


class CoalgebraSpec:
    """Finite-dimensional coalgebra: d[k][i][j] is the e_i(x)e_j part of eta(e_k)."""

    def __init__(self, basis, d):
        self.n = len(basis)
        self.basis = list(basis)
        self.d = _frac_table(d, self.n, "comultiplication")

    def __eq__(self, other):
        if not isinstance(other, CoalgebraSpec):
            return NotImplemented
        return self.basis == other.basis and self.d == other.d


class SuperLieSpec:
    """Z2-graded bracket by structure constants with a parity per basis element."""

    def __init__(self, basis, grading, b):
        self.n = len(basis)
        self.basis = list(basis)
        self.grading = [int(g) for g in grading]
        if len(self.grading) != self.n or any(g not in (0, 1) for g in self.grading):
            raise ValueError("grading must assign 0 or 1 per basis element")
        self.b = _frac_table(b, self.n, "bracket")
        for i in range(self.n):
            for j in range(self.n):
                par = (self.grading[i] + self.grading[j]) % 2
                for k in range(self.n):
                    if self.b[i][j][k] and self.grading[k] != par:
                        raise ValueError(
                            "bracket [%s,%s] leaves the %d-graded part"
                            % (self.basis[i], self.basis[j], par))


class ColorLieSpec:
    """(G,theta)-graded bracket; G a product of cyclic groups given by moduli."""

    def __init__(self, basis, moduli, grading, theta, b):
        self.n = len(basis)
        self.basis = list(basis)
        self.moduli = [int(m) for m in moduli]
        self.grading = [tuple(int(x) % m for x, m in zip(g, self.moduli))
                        for g in grading]
        if len(self.grading) != self.n:
            raise ValueError("grading dim mismatch")
        self.theta = {(tuple(a), tuple(b2)): Fraction(v)
                      for (a, b2), v in theta.items()}
        elems = list(group_elements(self.moduli))
        for a in elems:
            for b2 in elems:
                v = self.theta.get((a, b2))
                if v is None:
                    raise ValueError("theta missing at %r,%r" % (a, b2))
                if v == 0:
                    raise ValueError("theta must be nonzero")
        self.b = _frac_table(b, self.n, "bracket")
        for i in range(self.n):
            for j in range(self.n):
                tgt = self.group_add(self.grading[i], self.grading[j])
                for k in range(self.n):
                    if self.b[i][j][k] and self.grading[k] != tgt:
                        raise ValueError("bracket leaves L_{a+b}")

    def group_add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))


def group_elements(moduli):
    return itertools.product(*(range(m) for m in moduli))


@dataclass(frozen=True)
class WSubspace:
    n: int
    mode: str
    basis: tuple  # tuple of coordinate vectors in Q^(n^4)


@dataclass(frozen=True)
class PropReport:
    commutative: bool
    associative: bool
    unital: bool
    jordan: bool


@dataclass(frozen=True)
class CoPropReport:
    cocommutative: bool
    coassociative: bool


@dataclass(frozen=True)
class Thm21Verdict:
    jordan: bool
    assoc: bool
    equivalent: bool


@dataclass(frozen=True)
class SuperLieReport:
    antisym: bool
    jacobi: bool


@dataclass(frozen=True)
class CenterReport:
    even: bool
    commutes: bool
    witness: Optional[int]  # basis index of a nonzero bracket, if any

    def __bool__(self):
        return self.even and self.commutes


@dataclass(frozen=True)
class ColorLieReport:
    bicharacter: bool
    antisym: bool
    jacobi: bool


def basis_vec(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def mul_vec(A, u, v):
    """Bilinear extension of the structure constants."""
    if len(u) != A.n or len(v) != A.n:
        raise ValueError("dim mismatch")
    out = [Fraction(0)] * A.n
    for i in range(A.n):
        if u[i]:
            ci = A.c[i]
            for j in range(A.n):
                if v[j]:
                    uv = u[i] * v[j]
                    row = ci[j]
                    for k in range(A.n):
                        if row[k]:
                            out[k] += uv * row[k]
    return out


def bracket_vec(L, u, v):
    """Bilinear extension of a graded bracket (SuperLieSpec or ColorLieSpec)."""
    out = [Fraction(0)] * L.n
    for i in range(L.n):
        if u[i]:
            bi = L.b[i]
            for j in range(L.n):
                if v[j]:
                    uv = u[i] * v[j]
                    row = bi[j]
                    for k in range(L.n):
                        if row[k]:
                            out[k] += uv * row[k]
    return out


def _unit_valid(A):
    if A.unit is None:
        return False
    for i in range(A.n):
        e = basis_vec(A.n, i)
        if mul_vec(A, A.unit, e) != e or mul_vec(A, e, A.unit) != e:
            return False
    return True


def _jordan_identity_grid(A):
    # (x^2 y) x = x^2 (y x) for x = sum s_i e_i, y over the basis; cubic in
    # each s_i, so 4-point grids per coordinate certify the identity.
    n = A.n
    names = ["s%d" % i for i in range(n)]
    bound = paramgrid.degree_bounds("jordan-identity")["s"]
    grids = {nm: paramgrid.default_grid(bound + 1) for nm in names}

    def evaluate(assign):
        x = [assign[nm] for nm in names]
        x2 = mul_vec(A, x, x)
        lhs_cols, rhs_cols = [], []
        for j in range(n):
            y = basis_vec(n, j)
            lhs_cols.append(mul_vec(A, mul_vec(A, x2, y), x))
            rhs_cols.append(mul_vec(A, x2, mul_vec(A, y, x)))
        return mat_from_columns(lhs_cols), mat_from_columns(rhs_cols)

    job = paramgrid.IdentityJob(
        description="jordan identity (x^2 y) x = x^2 (y x)",
        variables=[(nm, bound) for nm in names],
        grids=grids,
        evaluator=evaluate,
    )
    return paramgrid.grid_verify(job).verdict


def check_algebra_props(A):
    """Commutativity, associativity, declared-unit validity, Jordan property.

    jordan means: commutative and the identity (x^2 y) x = x^2 (y x) holds
    for all x, y.  (A Jordan algebra is commutative by definition; an
    associative noncommutative algebra satisfies the bare identity but is
    not Jordan.)
    """
    n = A.n
    comm = all(A.c[i][j] == A.c[j][i] for i in range(n) for j in range(i + 1, n))
    assoc = True
    for i in range(n):
        for j in range(n):
            eij = A.c[i][j]
            for k in range(n):
                lhs = mul_vec(A, eij, basis_vec(n, k))
                rhs = mul_vec(A, basis_vec(n, i), A.c[j][k])
                if lhs != rhs:
                    assoc = False
                    break
            if not assoc:
                break
        if not assoc:
            break
    unital = _unit_valid(A)
    jordan = comm and _jordan_identity_grid(A)
    return PropReport(comm, assoc, unital, jordan)


def theorem21_instance(s, t):
    """Dim-2 commutative algebra with a^2 = b, b^2 = a, ab = ba = s a + t b."""
    s, t = Fraction(s), Fraction(t)
    c = [[[0, 1], [s, t]],
         [[s, t], [1, 0]]]
    return AlgebraSpec(["a", "b"], c)


def theorem21_verdict(s, t):
    rep = check_algebra_props(theorem21_instance(s, t))
    return Thm21Verdict(rep.jordan, rep.associative,
                        rep.jordan == rep.associative)


_W_CACHE = {}


def _polarized_generator(n, idx3, j, pos):
    # sum over all orderings of idx3 with e_j inserted at slot pos
    v = [Fraction(0)] * n ** 4
    for perm in itertools.permutations(idx3):
        slots = list(perm[:pos]) + [j] + list(perm[pos:])
        flat = ((slots[0] * n + slots[1]) * n + slots[2]) * n + slots[3]
        v[flat] += 1
    return v


def w_subspace_basis(n, mode):
    """Polarization basis of W in V^(x4) for the given mode (see module doc)."""
    if mode not in ("pattern3", "symmetrized", "full"):
        raise ValueError("unknown mode %r" % (mode,))
    key = (n, mode)
    if key in _W_CACHE:
        return _W_CACHE[key]
    gens = []
    for idx3 in itertools.combinations_with_replacement(range(n), 3):
        for j in range(n):
            if mode == "pattern3":
                gens.append(_polarized_generator(n, idx3, j, 2))
            elif mode == "full":
                for pos in range(4):
                    gens.append(_polarized_generator(n, idx3, j, pos))
            else:
                acc = [Fraction(0)] * n ** 4
                for pos in range(4):
                    g = _polarized_generator(n, idx3, j, pos)
                    acc = [x + y for x, y in zip(acc, g)]
                gens.append(acc)
    ws = WSubspace(n, mode, tuple(tuple(v) for v in row_space_basis(gens)))
    _W_CACHE[key] = ws
    return ws


def _g_eval(A, w):
    # G(v) = ((v1 v2) v3) v4 - (v1 v2)(v3 v4), extended linearly
    n = A.n
    acc = [Fraction(0)] * n
    for flat, coef in enumerate(w):
        if not coef:
            continue
        l = flat % n
        k = (flat // n) % n
        j = (flat // n ** 2) % n
        i = flat // n ** 3
        v12 = A.c[i][j]
        t1 = mul_vec(A, mul_vec(A, v12, basis_vec(n, k)), basis_vec(n, l))
        t2 = mul_vec(A, v12, A.c[k][l])
        for m in range(n):
            acc[m] += coef * (t1[m] - t2[m])
    return acc


def jordan_w_check(A, mode):
    """True iff ((v1 v2) v3) v4 = (v1 v2)(v3 v4) on every W basis vector."""
    rep_comm = all(A.c[i][j] == A.c[j][i]
                   for i in range(A.n) for j in range(i + 1, A.n))
    if not rep_comm:
        raise PreconditionError("jordan_w_check requires a commutative algebra")
    ws = w_subspace_basis(A.n, mode)
    return all(vec_is_zero(_g_eval(A, w)) for w in ws.basis)


def comul_vec(C, v):
    """Linear extension of eta; output coordinates are (i,j) -> i*n+j."""
    n = C.n
    if len(v) != n:
        raise ValueError("dim mismatch")
    out = [Fraction(0)] * n ** 2
    for k in range(n):
        if v[k]:
            dk = C.d[k]
            for i in range(n):
                row = dk[i]
                for j in range(n):
                    if row[j]:
                        out[i * n + j] += v[k] * row[j]
    return out


def comul_mat(C):
    """eta as an n^2 x n matrix (column k = eta(e_k))."""
    cols = [comul_vec(C, basis_vec(C.n, k)) for k in range(C.n)]
    return mat_from_columns(cols)


def coalgebra_props(C):
    n = C.n
    h = comul_mat(C)
    tau = ybcore.twist(n).mat
    cocomm = mat_mul(tau, h) == h
    ident = mat_identity(n)
    coassoc = mat_mul(kron(h, ident), h) == mat_mul(kron(ident, h), h)
    return CoPropReport(cocomm, coassoc)


def jordan_co_check(C, mode):
    """Dual W relation: both four-fold comultiplications agree inside W.

    Computes D = (eta(x)I(x)I)(eta(x)I)eta - (I(x)I(x)eta)(eta(x)I)eta column
    by column and requires the orthogonal projection of each column onto W
    to vanish.
    """
    if not coalgebra_props(C).cocommutative:
        raise PreconditionError("jordan_co_check requires a cocommutative coalgebra")
    n = C.n
    h = comul_mat(C)
    i1 = mat_identity(n)
    i2 = mat_identity(n ** 2)
    two = mat_mul(kron(h, i1), h)                       # V -> V^(x3)
    d = mat_sub(mat_mul(kron(h, i2), two), mat_mul(kron(i2, h), two))
    ws = w_subspace_basis(n, mode)
    basis = [list(b) for b in ws.basis]
    for k in range(n):
        col = [d.entry(r, k) for r in range(n ** 4)]
        if not vec_is_zero(project_onto(basis, col)):
            return False
    return True


def theorem22_instance(beta):
    """Dim-2 coalgebra: eta(e) = 1/b (e(x)f + f(x)e) + f(x)f and
    eta(f) = b (e(x)f + f(x)e) + e(x)e."""
    beta = Fraction(beta)
    if beta == 0:
        raise ValueError("beta must be nonzero")
    inv = 1 / beta
    d = [
        [[0, inv], [inv, 1]],          # eta(e)
        [[1, beta], [beta, 0]],        # eta(f)
    ]
    return CoalgebraSpec(["e", "f"], d)


def thm22_conditions(C, eps, zeta):
    """(eps(x)eps) . eta = zeta and (zeta(x)zeta) . eta = eps, exactly."""
    eps = [Fraction(x) for x in eps]
    zeta = [Fraction(x) for x in zeta]
    if len(row_space_basis([eps, zeta])) != 2:
        raise PreconditionError("covectors must be linearly independent")
    n = C.n
    for k in range(n):
        dk = C.d[k]
        ee = sum(dk[i][j] * eps[i] * eps[j] for i in range(n) for j in range(n))
        zz = sum(dk[i][j] * zeta[i] * zeta[j] for i in range(n) for j in range(n))
        if ee != zeta[k] or zz != eps[k]:
            return False
    return True


def dualize(A):
    """Transpose to the dual basis: d[k][i][j] := c[i][j][k]."""
    n = A.n
    d = [[[A.c[i][j][k] for j in range(n)] for i in range(n)] for k in range(n)]
    return CoalgebraSpec(list(A.basis), d)


def dualize_co(C):
    """Inverse assignment: c[i][j][k] := d[k][i][j]."""
    n = C.n
    c = [[[C.d[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]
    return AlgebraSpec(list(C.basis), c)


def validate_superlie(L):
    n = L.n
    g = L.grading

    def sgn(i, j):
        return -1 if g[i] and g[j] else 1

    antisym = True
    for i in range(n):
        for j in range(n):
            lhs = L.b[i][j]
            rhs = [-sgn(i, j) * x for x in L.b[j][i]]
            if lhs != rhs:
                antisym = False
    jacobi = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t1 = bracket_vec(L, basis_vec(n, i), L.b[j][k])
                t2 = bracket_vec(L, basis_vec(n, j), L.b[k][i])
                t3 = bracket_vec(L, basis_vec(n, k), L.b[i][j])
                acc = [sgn(k, i) * x + sgn(i, j) * y + sgn(j, k) * z
                       for x, y, z in zip(t1, t2, t3)]
                if not vec_is_zero(acc):
                    jacobi = False
    return SuperLieReport(antisym, jacobi)


def center_contains(L, z):
    """z central and even; falsy report carries the reason."""
    if len(z) != L.n:
        raise ValueError("dim mismatch")
    z = [Fraction(x) for x in z]
    even = all(not z[i] or L.grading[i] == 0 for i in range(L.n))
    witness = None
    for i in range(L.n):
        if not vec_is_zero(bracket_vec(L, z, basis_vec(L.n, i))):
            witness = i
            break
    return CenterReport(even, witness is None, witness)


def structure_to_json(obj):
    """JSON file form.  For algebras, superlie and colorlie structures
    table[i][j][k] is the e_k-coefficient of e_i e_j (resp. the bracket);
    for coalgebras table[k][i][j] is the e_i(x)e_j-coefficient of eta(e_k).
    """
    from .exactla import rat_to_str

    def t3(table):
        return [[[rat_to_str(x) for x in row] for row in plane]
                for plane in table]

    if isinstance(obj, AlgebraSpec):
        out = {"kind": "algebra", "dim": obj.n, "basis": list(obj.basis),
               "table": t3(obj.c)}
        if obj.unit is not None:
            out["unit"] = [rat_to_str(x) for x in obj.unit]
        return out
    if isinstance(obj, CoalgebraSpec):
        return {"kind": "coalgebra", "dim": obj.n, "basis": list(obj.basis),
                "table": t3(obj.d)}
    if isinstance(obj, SuperLieSpec):
        return {"kind": "superlie", "dim": obj.n, "basis": list(obj.basis),
                "grading": list(obj.grading), "table": t3(obj.b)}
    if isinstance(obj, ColorLieSpec):
        return {"kind": "colorlie", "dim": obj.n, "basis": list(obj.basis),
                "group": list(obj.moduli),
                "grading": [list(g) for g in obj.grading],
                "theta": [[list(a), list(b), rat_to_str(v)]
                          for (a, b), v in sorted(obj.theta.items())],
                "table": t3(obj.b)}
    raise TypeError("cannot serialize %r" % type(obj).__name__)


def structure_from_json(obj):
    from .exactla import rat_from_str

    def t3(table):
        return [[[rat_from_str(x) for x in row] for row in plane]
                for plane in table]

    kind = obj.get("kind")
    basis = list(obj["basis"])
    if int(obj["dim"]) != len(basis):
        raise ValueError("dim does not match basis length")
    if kind == "algebra":
        unit = obj.get("unit")
        if unit is not None:
            unit = [rat_from_str(x) for x in unit]
        return AlgebraSpec(basis, t3(obj["table"]), unit)
    if kind == "coalgebra":
        return CoalgebraSpec(basis, t3(obj["table"]))
    if kind == "superlie":
        return SuperLieSpec(basis, obj["grading"], t3(obj["table"]))
    if kind == "colorlie":
        theta = {(tuple(a), tuple(b)): rat_from_str(v)
                 for a, b, v in obj["theta"]}
        return ColorLieSpec(basis, obj["group"], [tuple(g) for g in obj["grading"]],
                            theta, t3(obj["table"]))
    raise ValueError("unknown structure kind %r" % kind)


def validate_colorlie(S):
    n = S.n
    elems = list(group_elements(S.moduli))
    th = S.theta
    bich = True
    for a in elems:
        for b in elems:
            if th[a, b] * th[b, a] != 1:
                bich = False
            for c in elems:
                if th[S.group_add(a, b), c] != th[a, c] * th[b, c]:
                    bich = False
                if th[a, S.group_add(b, c)] != th[a, b] * th[a, c]:
                    bich = False
    antisym = True
    for i in range(n):
        for j in range(n):
            t = th[S.grading[i], S.grading[j]]
            rhs = [-t * x for x in S.b[j][i]]
            if S.b[i][j] != rhs:
                antisym = False
    jacobi = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                a, b, c = S.grading[i], S.grading[j], S.grading[k]
                t1 = bracket_vec(S, basis_vec(n, i), S.b[j][k])
                t2 = bracket_vec(S, basis_vec(n, k), S.b[i][j])
                t3 = bracket_vec(S, basis_vec(n, j), S.b[k][i])
                acc = [th[c, a] * x + th[b, c] * y + th[a, b] * z
                       for x, y, z in zip(t1, t2, t3)]
                if not vec_is_zero(acc):
                    jacobi = False
    return ColorLieReport(bich, antisym, jacobi)
