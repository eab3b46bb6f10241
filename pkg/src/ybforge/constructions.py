"""Operator families on A(x)A and L(x)L, with predicted verdicts and inverses.

Every family here is produced by one bilinear template on basis columns:
some combination of ab(x)1, 1(x)ab, the swap b(x)a, and the diagonal a(x)b.
Verification goes through ybcore (exact matrix identities) and paramgrid
(grid certification for the parameter-dependent claims).
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .exactla import Mat, mat_from_columns, mat_identity, mat_mul, mat_scale, mat_transpose
from .paramgrid import GridConfigError, GridResult, default_grid, degree_bounds
from .structures import (AlgebraSpec, MissingUnitError, PreconditionError,
                         basis_vec, bracket_vec, center_contains,
                         check_algebra_props, mul_vec)
from .ybcore import (LinOp2, braid_check, compose, lift, mat_is_zero,
                     restricted_braid_check, twist)


class NotYangBaxterError(ValueError):
    """Parameters fall outside the cases that give a Yang-Baxter operator."""


@dataclass(frozen=True)
class ColoredFamily:
    tag: str
    n: int
    params: dict
    evaluator: Callable            # (u, v) -> LinOp2
    color_set: Optional[tuple] = None  # finite color set, when the family has one


@dataclass(frozen=True)
class OneParamFamily:
    n: int
    q: Fraction
    evaluator: Callable            # (t) -> LinOp2

    def __call__(self, t):
        return self.evaluator(t)


@dataclass(frozen=True)
class PhiPair:
    op: LinOp2
    inverse: LinOp2


@dataclass(frozen=True)
class Form8Result:
    matched: bool
    q8: Optional[Fraction]
    eta8: Optional[Fraction]
    display: Mat                   # normalized matrix in the template's row layout
    offending: Optional[tuple]     # (row, col) of the first non-template entry
    value: Optional[Fraction]


@dataclass(frozen=True)
class RestrictedReport:
    restricted: bool
    full: bool
    unit_adjoined: bool
    family_size: int


def _require_unit(A):
    rep = check_algebra_props(A)
    if not rep.unital:
        raise MissingUnitError("construction needs a unital algebra")
    return A.unit


def _formula_op(A, unit, c_ab1, c_1ab, c_swap, c_diag):
    # column (i,j) = c_ab1*(e_i e_j)(x)1 + c_1ab*1(x)(e_i e_j)
    #               - c_swap*e_j(x)e_i - c_diag*e_i(x)e_j
    n = A.n
    cols = []
    for i in range(n):
        for j in range(n):
            col = [Fraction(0)] * n ** 2
            if c_ab1 or c_1ab:
                ab = A.c[i][j]
                for k in range(n):
                    if ab[k]:
                        for l in range(n):
                            if unit[l]:
                                prod = ab[k] * unit[l]
                                if c_ab1:
                                    col[k * n + l] += c_ab1 * prod
                                if c_1ab:
                                    col[l * n + k] += c_1ab * prod
            if c_swap:
                col[j * n + i] -= c_swap
            if c_diag:
                col[i * n + j] -= c_diag
            cols.append(col)
    return LinOp2(n, mat_from_columns(cols))


def r_algebra(A, alpha, beta, gamma):
    """R(a(x)b) = alpha ab(x)1 + beta 1(x)ab - gamma a(x)b."""
    unit = _require_unit(A)
    if A.n < 2:
        raise PreconditionError("needs dim >= 2")
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    return _formula_op(A, unit, alpha, beta, Fraction(0), gamma)


def thm32_predict(alpha, beta, gamma):
    """True iff (alpha, beta, gamma) falls in one of the three YB cases."""
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    return ((alpha == gamma != 0 and beta != 0)
            or (beta == gamma != 0 and alpha != 0)
            or (alpha == beta == 0 and gamma != 0))


def thm32_inverse(A, alpha, beta, gamma):
    """Formula inverse: swap and invert the scalars (0,0,gamma is its own case)."""
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    if not thm32_predict(alpha, beta, gamma):
        raise NotYangBaxterError(
            "(%s,%s,%s) is not in a Yang-Baxter case" % (alpha, beta, gamma))
    if alpha == beta == 0:
        return r_algebra(A, 0, 0, 1 / gamma)
    return r_algebra(A, 1 / beta, 1 / alpha, 1 / gamma)


_FORM8_FIXED = {(0, 1): 0, (0, 2): 0, (0, 3): 0,
                (1, 0): 0, (1, 2): 0, (1, 3): 0,
                (2, 0): 0, (2, 3): 0,
                (3, 1): 0, (3, 2): 0}


def matrix_form8(A2, alpha, beta):
    """Match (R_{alpha,beta,alpha} . tau)/beta against the classification
    template [[1,0,0,0],[0,1,0,0],[0,1-q,q,0],[eta,0,0,-q]].

    The template is written in the row-vector convention, so the
    column-action matrix is transposed before matching.  On a match,
    q8 = alpha/beta and eta8 is the (4,1) display entry, required to be 0
    or 1.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == 0 or beta == 0:
        raise PreconditionError("alpha and beta must be nonzero")
    if A2.n != 2:
        raise PreconditionError("needs a dim-2 algebra")
    unit = _require_unit(A2)
    if unit != [Fraction(1), Fraction(0)]:
        raise PreconditionError("basis must be ordered (1, x) with 1 the unit")
    r = r_algebra(A2, alpha, beta, alpha)
    display = mat_transpose(mat_scale(compose(r, twist(2)).mat, 1 / beta))
    q8 = alpha / beta
    eta8 = display.entry(3, 0)

    def fail(pos):
        return Form8Result(False, None, None, display, pos, display.entry(*pos))

    expect = {(0, 0): Fraction(1), (1, 1): Fraction(1), (2, 1): 1 - q8,
              (2, 2): q8, (3, 3): -q8}
    for pos, want in _FORM8_FIXED.items():
        if display.entry(*pos) != want:
            return fail(pos)
    for pos, want in expect.items():
        if display.entry(*pos) != want:
            return fail(pos)
    if eta8 not in (0, 1):
        return fail((3, 0))
    return Form8Result(True, q8, eta8, display, None, None)


def r_colored(A, p, q):
    """R(u,v)(a(x)b) = p(u-v) 1(x)ab + q(u-v) ab(x)1 - (pu-qv) b(x)a."""
    unit = _require_unit(A)
    if A.n < 2:
        raise PreconditionError("needs dim >= 2")
    p, q = Fraction(p), Fraction(q)

    def evaluate(u, v):
        u, v = Fraction(u), Fraction(v)
        return _formula_op(A, unit, q * (u - v), p * (u - v), p * u - q * v,
                           Fraction(0))

    return ColoredFamily("colored", A.n, {"p": p, "q": q}, evaluate)


def colored_qybe_verify(F, grid):
    """Check R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v) on grid^3.

    For the polynomial family (tag "colored") a grid of at least 4 distinct
    points certifies the identity for all colors (degree <= 3 per variable).
    For table-driven families the grid must lie inside the declared color
    set, and the verdict is certified when it covers the whole set
    (exhaustion).
    """
    grid = [Fraction(g) for g in grid]
    if len(set(grid)) != len(grid):
        raise GridConfigError("grid points must be distinct")
    if F.color_set is not None:
        missing = [g for g in grid if g not in F.color_set]
        if missing:
            raise GridConfigError("grid point %s outside the color set" % missing[0])
        bound = len(F.color_set) - 1
        certified = set(grid) == set(F.color_set)
    else:
        bound = degree_bounds("colored")["u"]
        certified = len(grid) >= bound + 1
    ops = {}
    lifts = {}

    def lifted(u, v, pos):
        key = (u, v, pos)
        if key not in lifts:
            if (u, v) not in ops:
                ops[u, v] = F.evaluator(u, v)
            lifts[key] = lift(ops[u, v], pos).mat
        return lifts[key]

    witness = None
    for u, v, w in itertools.product(grid, repeat=3):
        lhs = mat_mul(mat_mul(lifted(u, v, 12), lifted(u, w, 13)),
                      lifted(v, w, 23))
        rhs = mat_mul(mat_mul(lifted(v, w, 23), lifted(u, w, 13)),
                      lifted(u, v, 12))
        if lhs != rhs:
            witness = {"u": u, "v": v, "w": w}
            break
    cert = {name: (len(grid), bound) for name in ("u", "v", "w")}
    return GridResult("colored QYBE for %s family" % F.tag,
                      witness is None, certified and witness is None,
                      witness, cert)


def s_oneparam(A, q):
    """S(t)(a(x)b) = (t-1) 1(x)ab + q(t-1) ab(x)1 - (t-q) b(x)a, t nonzero."""
    unit = _require_unit(A)
    if A.n < 2:
        raise PreconditionError("needs dim >= 2")
    q = Fraction(q)

    def evaluate(t):
        t = Fraction(t)
        if t == 0:
            raise ValueError("t must be nonzero")
        return _formula_op(A, unit, q * (t - 1), t - 1, t - q, Fraction(0))

    return OneParamFamily(A.n, q, evaluate)


def oneparam_verify(A, q, tgrid):
    """Check S12(t1/t2) S13(t1/t3) S23(t2/t3) = S23(t2/t3) S13(t1/t3) S12(t1/t2).

    Additive spectral parameters are realized multiplicatively (t = e^lambda,
    differences become ratios), so the grid must avoid 0.  After clearing
    the t denominators both sides have degree <= 6 per t variable; a grid of
    7 distinct nonzero points certifies the identity.
    """
    fam = s_oneparam(A, q)
    tgrid = [Fraction(t) for t in tgrid]
    if len(set(tgrid)) != len(tgrid):
        raise GridConfigError("t-grid points must be distinct")
    if any(t == 0 for t in tgrid):
        raise GridConfigError("t-grid points must be nonzero")
    bound = degree_bounds("oneparam")["t1"]
    certified = len(tgrid) >= bound + 1
    lifts = {}

    def lifted(ratio, pos):
        key = (ratio, pos)
        if key not in lifts:
            lifts[key] = lift(fam(ratio), pos).mat
        return lifts[key]

    witness = None
    for t1, t2, t3 in itertools.product(tgrid, repeat=3):
        lhs = mat_mul(mat_mul(lifted(t1 / t2, 12), lifted(t1 / t3, 13)),
                      lifted(t2 / t3, 23))
        rhs = mat_mul(mat_mul(lifted(t2 / t3, 23), lifted(t1 / t3, 13)),
                      lifted(t1 / t2, 12))
        if lhs != rhs:
            witness = {"t1": t1, "t2": t2, "t3": t3}
            break
    cert = {name: (len(tgrid), bound) for name in ("t1", "t2", "t3")}
    return GridResult("one-parameter YBE at q=%s" % q,
                      witness is None, certified and witness is None,
                      witness, cert)


def wxz_thm38(A, lam, mu):
    """W = ab(x)1 + lam 1(x)ab - b(x)a; X with both coefficients 1;
    Z = mu ab(x)1 + 1(x)ab - b(x)a."""
    unit = _require_unit(A)
    lam, mu = Fraction(lam), Fraction(mu)
    one = Fraction(1)
    w = _formula_op(A, unit, one, lam, one, Fraction(0))
    x = _formula_op(A, unit, one, one, one, Fraction(0))
    z = _formula_op(A, unit, mu, one, one, Fraction(0))
    return w, x, z


def wxz_from_colored(F, s, t):
    """W = R(s,s), X = R(s,t), Z = R(t,t)."""
    s, t = Fraction(s), Fraction(t)
    if F.color_set is not None:
        for c in (s, t):
            if c not in F.color_set:
                raise GridConfigError("%s outside the color set" % c)
    return F.evaluator(s, s), F.evaluator(s, t), F.evaluator(t, t)


def _graded_sign(L, i, j):
    return -1 if L.grading[i] and L.grading[j] else 1


def phi_super(L, z, alpha):
    """phi(x(x)y) = alpha [x,y](x)z + (-1)^{|x||y|} y(x)x, with its formula
    inverse alpha z(x)[x,y] + (-1)^{|x||y|} y(x)x; their product is the
    identity (asserted)."""
    rep = center_contains(L, z)
    if not rep:
        raise PreconditionError(
            "z must be even and central (even=%s, commutes=%s)"
            % (rep.even, rep.commutes))
    alpha = Fraction(alpha)
    z = [Fraction(x) for x in z]
    n = L.n
    cols_op, cols_inv = [], []
    for i in range(n):
        for j in range(n):
            br = L.b[i][j]
            sign = _graded_sign(L, i, j)
            col_op = [Fraction(0)] * n ** 2
            col_inv = [Fraction(0)] * n ** 2
            if alpha:
                for k in range(n):
                    if br[k]:
                        for l in range(n):
                            if z[l]:
                                col_op[k * n + l] += alpha * br[k] * z[l]
                                col_inv[l * n + k] += alpha * br[k] * z[l]
            col_op[j * n + i] += sign
            col_inv[j * n + i] += sign
            cols_op.append(col_op)
            cols_inv.append(col_inv)
    op = LinOp2(n, mat_from_columns(cols_op))
    inv = LinOp2(n, mat_from_columns(cols_inv))
    assert mat_mul(op.mat, inv.mat) == mat_identity(n ** 2), \
        "formula inverse failed"
    return PhiPair(op, inv)


def r_super_colored(L, z, alpha_table, beta_table, colors):
    """R(u,v)(a(x)b) = alpha(u) [a,b](x)z + beta(u) (-1)^{|a||b|} a(x)b.

    As printed, the operator depends on u only; reports flag the asymmetry.
    alpha and beta are finite lookup tables, total on the color set.
    """
    rep = center_contains(L, z)
    if not rep:
        raise PreconditionError(
            "z must be even and central (even=%s, commutes=%s)"
            % (rep.even, rep.commutes))
    z = [Fraction(x) for x in z]
    colors = tuple(Fraction(c) for c in colors)
    atab = {Fraction(k): Fraction(v) for k, v in alpha_table.items()}
    btab = {Fraction(k): Fraction(v) for k, v in beta_table.items()}
    for c in colors:
        if c not in atab or c not in btab:
            raise ValueError("tables must be total on the color set; missing %s" % c)
    n = L.n

    def evaluate(u, v):
        u = Fraction(u)
        au, bu = atab[u], btab[u]   # KeyError on colors outside the tables
        cols = []
        for i in range(n):
            for j in range(n):
                br = L.b[i][j]
                col = [Fraction(0)] * n ** 2
                if au:
                    for k in range(n):
                        if br[k]:
                            for l in range(n):
                                if z[l]:
                                    col[k * n + l] += au * br[k] * z[l]
                if bu:
                    col[i * n + j] += bu * _graded_sign(L, i, j)
                cols.append(col)
        return LinOp2(n, mat_from_columns(cols))

    return ColoredFamily("superColored", n,
                         {"alpha": atab, "beta": btab}, evaluate, colors)


def _adjoin_unit(J):
    """J+ = k.1 (+) J: formal unit prepended at index 0."""
    n = J.n + 1
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    c[0][0][0] = Fraction(1)
    for i in range(1, n):
        c[0][i][i] = Fraction(1)
        c[i][0][i] = Fraction(1)
    for i in range(J.n):
        for j in range(J.n):
            for k in range(J.n):
                c[i + 1][j + 1][k + 1] = J.c[i][j][k]
    return AlgebraSpec(["1"] + list(J.basis), c, unit=[1] + [0] * J.n)


def _kron3_vec(a, b, c):
    out = []
    for x in a:
        for y in b:
            xy = x * y
            for w in c:
                out.append(xy * w)
    return out


def jordan_r_restricted(J, alpha, beta, gamma, grid=None):
    """Braid equation for R_{alpha,beta,gamma} over a Jordan algebra,
    restricted to the span of {a^2(x)b(x)a, a(x)b(x)a^2 : a,b in J}.

    J must satisfy the Jordan property.  When J lacks a unit a formal one is
    adjoined (the formula references 1); the spanning family still ranges
    over elements of J only.  a and b run over coordinate grids with 4
    points per coordinate, which spans the same subspace as all of J (the
    family is cubic in a and linear in b).
    """
    props = check_algebra_props(J)
    if not props.jordan:
        raise PreconditionError("J must be a Jordan algebra")
    if props.unital:
        jp, offset = J, 0
    else:
        jp, offset = _adjoin_unit(J), 1
    if grid is None:
        grid = default_grid(4)
    grid = [Fraction(g) for g in grid]
    r = r_algebra(jp, alpha, beta, gamma)
    full = braid_check(r)
    pad = [Fraction(0)] * offset
    family = []
    for acoords in itertools.product(grid, repeat=J.n):
        a = pad + list(acoords)
        a2 = mul_vec(jp, a, a)
        for bcoords in itertools.product(grid, repeat=J.n):
            b = pad + list(bcoords)
            family.append(_kron3_vec(a2, b, a))
            family.append(_kron3_vec(a, b, a2))
    restricted = restricted_braid_check(r, family)
    return RestrictedReport(restricted, full, offset == 1, len(family))
