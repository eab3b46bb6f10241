"""Exact rational linear algebra.

Scalars are arbitrary-precision rationals (fractions.Fraction, aliased Rat).
A Mat stores one common positive denominator and a flat row-major list of
integer numerators, canonically reduced, so matrix products run on plain
integer kernels.  Products dispatch to the compiled int64 kernel whenever an
a-priori bound proves the accumulator cannot overflow; otherwise they fall
back to the pure big-integer kernel.  Equality is exact everywhere; there is
no tolerance anywhere in this package.
"""
from array import array
from fractions import Fraction
from math import gcd

from . import _kernels

Rat = Fraction

# Entries of an ra*ca by ca*cb product are bounded by ca*max|a|*max|b|;
# keeping that below 2**63 makes the int64 kernel exact.
_I64_LIMIT = 2 ** 63


def rat_from_str(s):
    """Parse "p/q" or "p" into a Rat."""
    try:
        return Fraction(s.strip())
    except ZeroDivisionError:
        raise ValueError("zero denominator in %r" % s) from None


def rat_to_str(x):
    """Canonical "p/q" form, bare "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


class Mat:
    """Dense exact matrix: integer numerators over one common denominator."""

    __slots__ = ("rows", "cols", "num", "den", "_amax")

    def __init__(self, rows, cols, num, den=1, _reduced=False):
        if len(num) != rows * cols:
            raise ValueError("entry count %d != %d*%d" % (len(num), rows, cols))
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = [-x for x in num]
            den = -den
        if not _reduced and den != 1:
            g = gcd(den, *num) if num else den
            if g > 1:
                num = [x // g for x in num]
                den //= g
        self.rows = rows
        self.cols = cols
        self.num = num
        self.den = den
        self._amax = None

    def amax(self):
        if self._amax is None:
            self._amax = max(map(abs, self.num), default=0)
        return self._amax

    def entry(self, i, j):
        return Fraction(self.num[i * self.cols + j], self.den)

    def to_rows(self):
        d = self.den
        return [[Fraction(x, d) for x in self.num[i * self.cols:(i + 1) * self.cols]]
                for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.den == other.den and self.num == other.num)

    def __hash__(self):
        return hash((self.rows, self.cols, self.den, tuple(self.num)))

    def __repr__(self):
        return "Mat(%dx%d, den=%d)" % (self.rows, self.cols, self.den)


def mat_from_rows(rows):
    """Build a Mat from nested Rat/int/str entries."""
    r = len(rows)
    c = len(rows[0]) if r else 0
    ent = []
    for row in rows:
        if len(row) != c:
            raise ValueError("ragged rows")
        for x in row:
            ent.append(Fraction(x) if not isinstance(x, Fraction) else x)
    den = 1
    for x in ent:
        den = den * x.denominator // gcd(den, x.denominator)
    num = [x.numerator * (den // x.denominator) for x in ent]
    return Mat(r, c, num, den)


def mat_zeros(rows, cols):
    return Mat(rows, cols, [0] * (rows * cols), 1, _reduced=True)


def mat_identity(n):
    num = [0] * (n * n)
    for i in range(n):
        num[i * n + i] = 1
    return Mat(n, n, num, 1, _reduced=True)


def _mul_nums(a, b):
    ra, ca, cb = a.rows, a.cols, b.cols
    if _kernels.has_fast() and ca and a.amax() * b.amax() * ca < _I64_LIMIT:
        fa = array("q", a.num)
        fb = array("q", b.num)
        out = array("q", bytes(8 * ra * cb))
        _kernels.matmul_fast(fa, fb, out, ra, ca, cb)
        return list(out)
    return _kernels.matmul_pure(a.num, b.num, ra, ca, cb)


def mat_mul(a, b):
    if a.cols != b.rows:
        raise ValueError("shape mismatch: %dx%d by %dx%d"
                         % (a.rows, a.cols, b.rows, b.cols))
    return Mat(a.rows, b.cols, _mul_nums(a, b), a.den * b.den)


def kron(a, b):
    ra, ca, rb, cb = a.rows, a.cols, b.rows, b.cols
    if _kernels.has_fast() and a.amax() * b.amax() < _I64_LIMIT:
        fa = array("q", a.num)
        fb = array("q", b.num)
        out = array("q", bytes(8 * ra * ca * rb * cb))
        _kernels.kron_fast(fa, fb, out, ra, ca, rb, cb)
        num = list(out)
    else:
        num = _kernels.kron_pure(a.num, b.num, ra, ca, rb, cb)
    return Mat(ra * rb, ca * cb, num, a.den * b.den)


def _aligned(a, b):
    # common denominator lcm, scaled numerator lists
    d = a.den * b.den // gcd(a.den, b.den)
    sa, sb = d // a.den, d // b.den
    na = a.num if sa == 1 else [x * sa for x in a.num]
    nb = b.num if sb == 1 else [x * sb for x in b.num]
    return na, nb, d


def mat_add(a, b):
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch")
    na, nb, d = _aligned(a, b)
    return Mat(a.rows, a.cols, [x + y for x, y in zip(na, nb)], d)


def mat_sub(a, b):
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch")
    na, nb, d = _aligned(a, b)
    return Mat(a.rows, a.cols, [x - y for x, y in zip(na, nb)], d)


def mat_scale(a, s):
    s = Fraction(s)
    return Mat(a.rows, a.cols, [x * s.numerator for x in a.num],
               a.den * s.denominator)


def mat_eq(a, b):
    return a == b


def mat_is_zero(a):
    return not any(a.num)


def mat_transpose(a):
    num = [0] * (a.rows * a.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            num[j * a.rows + i] = a.num[i * a.cols + j]
    return Mat(a.cols, a.rows, num, a.den, _reduced=True)


def first_mismatch(a, b):
    """(row, col) of the first differing entry, or None if equal."""
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch")
    na, nb, _ = _aligned(a, b)
    for idx, (x, y) in enumerate(zip(na, nb)):
        if x != y:
            return divmod(idx, a.cols)
    return None


def mat_inverse(a):
    """Exact inverse by Gauss-Jordan elimination; None when singular."""
    if a.rows != a.cols:
        raise ValueError("not square")
    n = a.rows
    aug = [row + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a.to_rows())]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        if pv != 1:
            aug[col] = [x / pv for x in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return mat_from_rows([row[n:] for row in aug])


# Vectors are plain lists of Rat.

def vec_from(entries):
    return [Fraction(x) if not isinstance(x, Fraction) else x for x in entries]


def vec_is_zero(v):
    return not any(v)


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def mat_apply(a, v):
    """Apply a to a coordinate vector (length a.cols)."""
    if len(v) != a.cols:
        raise ValueError("dim mismatch")
    out = []
    for i in range(a.rows):
        base = i * a.cols
        s = sum(a.num[base + j] * v[j] for j in range(a.cols) if a.num[base + j])
        out.append(Fraction(s, a.den) if isinstance(s, int) else s / a.den)
    return out


def mat_from_columns(vecs):
    """Stack vectors as the columns of a Mat."""
    if not vecs:
        raise ValueError("no columns")
    dim = len(vecs[0])
    den = 1
    fr = []
    for v in vecs:
        if len(v) != dim:
            raise ValueError("dim mismatch")
        fv = [Fraction(x) if not isinstance(x, Fraction) else x for x in v]
        fr.append(fv)
        for x in fv:
            den = den * x.denominator // gcd(den, x.denominator)
    num = [0] * (dim * len(vecs))
    for j, fv in enumerate(fr):
        for i, x in enumerate(fv):
            num[i * len(vecs) + j] = x.numerator * (den // x.denominator)
    return Mat(dim, len(vecs), num, den)


def row_space_basis(vecs):
    """Reduced row-echelon basis of the span; deterministic for a fixed order."""
    if not vecs:
        return []
    dim = len(vecs[0])
    rows = []
    for v in vecs:
        if len(v) != dim:
            raise ValueError("dim mismatch")
        rows.append(list(v))
    basis = []   # list of (pivot_col, row) kept reduced
    for row in rows:
        row = [Fraction(x) for x in row]
        for pc, b in basis:
            if row[pc] != 0:
                f = row[pc]
                row = [x - f * y for x, y in zip(row, b)]
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            continue
        lv = row[lead]
        if lv != 1:
            row = [x / lv for x in row]
        for pc, b in basis:
            if b[lead] != 0:
                f = b[lead]
                for j in range(dim):
                    b[j] -= f * row[j]
        basis.append((lead, row))
    basis.sort(key=lambda t: t[0])
    return [b for _, b in basis]


def _solve(rows, rhs):
    # Gauss with first-nonzero pivot; None when the system is singular.
    n = len(rows)
    aug = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return [aug[i][n] for i in range(n)]


def project_onto(basis, v):
    """Orthogonal projection of v onto span(basis), by exact Gram solve.

    Standard coordinate dot product; the basis must be independent (the Gram
    matrix is then invertible), otherwise this raises ValueError.
    """
    if not basis:
        return [Fraction(0)] * len(v)
    gram = [[vec_dot(bi, bj) for bj in basis] for bi in basis]
    rhs = [vec_dot(bi, v) for bi in basis]
    coef = _solve(gram, rhs)
    if coef is None:
        raise ValueError("dependent basis")
    out = [Fraction(0)] * len(v)
    for c, b in zip(coef, basis):
        if c:
            for i, x in enumerate(b):
                out[i] += c * x
    return out


def mat_to_text(a):
    """Text form: first line "rows cols", then one row per line."""
    lines = ["%d %d" % (a.rows, a.cols)]
    for row in a.to_rows():
        lines.append(" ".join(rat_to_str(x) for x in row))
    return "\n".join(lines) + "\n"


def mat_from_text(text):
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    r, c = (int(t) for t in lines[0].split())
    if len(lines) != r + 1:
        raise ValueError("expected %d rows" % r)
    rows = []
    for ln in lines[1:]:
        row = [rat_from_str(t) for t in ln.split()]
        if len(row) != c:
            raise ValueError("expected %d columns" % c)
        rows.append(row)
    return mat_from_rows(rows) if r else mat_zeros(0, 0)
