"""Operators on V(x)V, their lifts to V(x)3, and the braid-type checks.

Index convention everywhere: e_i (x) e_j sits at coordinate i*n + j, and
e_i (x) e_j (x) e_k at i*n^2 + j*n + k, row-major and zero-based.  The lifts
are R12 = R(x)I, R23 = I(x)R, and R13 = (I(x)tau)(R(x)I)(I(x)tau), computed
by exact matrix products.
"""
from dataclasses import dataclass
from typing import Optional

from .exactla import (Mat, first_mismatch, kron, mat_from_columns,
                      mat_identity, mat_inverse, mat_is_zero, mat_mul,
                      mat_sub)


class LinOp2:
    """Linear operator on V(x)V as an n^2 x n^2 exact matrix."""

    def __init__(self, n, mat):
        if mat.rows != n * n or mat.cols != n * n:
            raise ValueError("expected %d x %d matrix" % (n * n, n * n))
        self.n = n
        self.mat = mat

    def __eq__(self, other):
        if not isinstance(other, LinOp2):
            return NotImplemented
        return self.n == other.n and self.mat == other.mat

    def __repr__(self):
        return "LinOp2(n=%d)" % self.n


class LinOp3:
    """Linear operator on V(x)V(x)V as an n^3 x n^3 exact matrix."""

    def __init__(self, n, mat):
        if mat.rows != n ** 3 or mat.cols != n ** 3:
            raise ValueError("expected %d x %d matrix" % (n ** 3, n ** 3))
        self.n = n
        self.mat = mat

    def __eq__(self, other):
        if not isinstance(other, LinOp3):
            return NotImplemented
        return self.n == other.n and self.mat == other.mat


@dataclass(frozen=True)
class YbReport:
    braid: bool
    invertible: bool
    yb: bool


@dataclass(frozen=True)
class WxzReport:
    www: bool
    zzz: bool
    wxx: bool
    xxz: bool

    def all_hold(self):
        return self.www and self.zzz and self.wxx and self.xxz


def twist(n):
    """tau(v(x)w) = w(x)v as a permutation matrix."""
    num = [0] * n ** 4
    for i in range(n):
        for j in range(n):
            num[(j * n + i) * n * n + (i * n + j)] = 1
    return LinOp2(n, Mat(n * n, n * n, num, 1, _reduced=True))


def identity2(n):
    return LinOp2(n, mat_identity(n * n))


def compose(a, b):
    if a.n != b.n:
        raise ValueError("dim mismatch")
    return LinOp2(a.n, mat_mul(a.mat, b.mat))


_ITAU_CACHE = {}


def _i_tau(n):
    # I (x) tau on V^(x3), cached per dimension
    if n not in _ITAU_CACHE:
        _ITAU_CACHE[n] = kron(mat_identity(n), twist(n).mat)
    return _ITAU_CACHE[n]


def lift(r, pos):
    """Lift a LinOp2 to slots (1,2), (1,3) or (2,3) of V^(x3)."""
    n = r.n
    if pos == 12:
        return LinOp3(n, kron(r.mat, mat_identity(n)))
    if pos == 23:
        return LinOp3(n, kron(mat_identity(n), r.mat))
    if pos == 13:
        it = _i_tau(n)
        return LinOp3(n, mat_mul(it, mat_mul(kron(r.mat, mat_identity(n)), it)))
    raise ValueError("pos must be 12, 13 or 23")


def _triple(a, b, c):
    return mat_mul(mat_mul(a.mat, b.mat), c.mat)


def braid_diff(r):
    """R12 R23 R12 - R23 R12 R23 as a matrix on V^(x3)."""
    r12, r23 = lift(r, 12), lift(r, 23)
    return mat_sub(_triple(r12, r23, r12), _triple(r23, r12, r23))


def braid_check(r):
    return mat_is_zero(braid_diff(r))


def braid_witness(r):
    """None when the braid equation holds; else ((i,j,k) in, (i,j,k) out)."""
    r12, r23 = lift(r, 12), lift(r, 23)
    hit = first_mismatch(_triple(r12, r23, r12), _triple(r23, r12, r23))
    if hit is None:
        return None
    row, col = hit
    return _unflatten3(r.n, col), _unflatten3(r.n, row)


def _unflatten3(n, flat):
    return (flat // n ** 2, (flat // n) % n, flat % n)


def qybe_check(r):
    r12, r13, r23 = lift(r, 12), lift(r, 13), lift(r, 23)
    return _triple(r12, r13, r23) == _triple(r23, r13, r12)


def qybe_witness(r):
    """None when the QYBE holds; else ((i,j,k) in, (i,j,k) out)."""
    r12, r13, r23 = lift(r, 12), lift(r, 13), lift(r, 23)
    hit = first_mismatch(_triple(r12, r13, r23), _triple(r23, r13, r12))
    if hit is None:
        return None
    row, col = hit
    return _unflatten3(r.n, col), _unflatten3(r.n, row)


def is_yb_operator(r):
    """Braid + invertibility; yb = both (the definition of a YB operator)."""
    braid = braid_check(r)
    invertible = mat_inverse(r.mat) is not None
    return YbReport(braid, invertible, braid and invertible)


def braid_qybe_equiv(r):
    """Metamorphic identity: braid(R) <=> QYBE(R tau) <=> QYBE(tau R)."""
    tau = twist(r.n)
    b = braid_check(r)
    q1 = qybe_check(compose(r, tau))
    q2 = qybe_check(compose(tau, r))
    return b == q1 == q2


def yb_commutator(r, s, t):
    """[R,S,T] = R12 S13 T23 - T23 S13 R12 on V^(x3)."""
    if not (r.n == s.n == t.n):
        raise ValueError("dim mismatch")
    lhs = _triple(lift(r, 12), lift(s, 13), lift(t, 23))
    rhs = _triple(lift(t, 23), lift(s, 13), lift(r, 12))
    return LinOp3(r.n, mat_sub(lhs, rhs))


def wxz_check(w, x, z):
    """The four commutator conditions [W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z]."""
    if not (w.n == x.n == z.n):
        raise ValueError("dim mismatch")
    return WxzReport(
        www=mat_is_zero(yb_commutator(w, w, w).mat),
        zzz=mat_is_zero(yb_commutator(z, z, z).mat),
        wxx=mat_is_zero(yb_commutator(w, x, x).mat),
        xxz=mat_is_zero(yb_commutator(x, x, z).mat),
    )


def restricted_braid_check(r, spanning):
    """True iff the braid difference kills every spanning vector of V^(x3)."""
    n3 = r.n ** 3
    for v in spanning:
        if len(v) != n3:
            raise ValueError("spanning vector dim %d != %d" % (len(v), n3))
    if not spanning:
        return True
    d = braid_diff(r)
    cols = mat_from_columns(spanning)
    return mat_is_zero(mat_mul(d, cols))


def linop2_to_json(r):
    from .exactla import rat_to_str
    rows = r.mat.to_rows()
    return {"kind": "linop2", "n": r.n,
            "mat": [[rat_to_str(x) for x in row] for row in rows]}


def linop2_from_json(obj):
    from .exactla import mat_from_rows, rat_from_str
    if obj.get("kind") != "linop2":
        raise ValueError("not a linop2 object")
    n = int(obj["n"])
    rows = [[rat_from_str(x) for x in row] for row in obj["mat"]]
    return LinOp2(n, mat_from_rows(rows))
