# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""int64 matrix kernels.

Same contracts as _pure, restricted to inputs whose products cannot
overflow a signed 64-bit accumulator.  The caller (exactla) checks the
bound max|a| * max|b| * inner_dim < 2**63 before dispatching here.
"""

BACKEND = "fast"


def matmul_i64(long long[::1] a, long long[::1] b, long long[::1] out,
               Py_ssize_t ra, Py_ssize_t ca, Py_ssize_t cb):
    cdef Py_ssize_t i, j, k, arow, orow, brow
    cdef long long aik
    for i in range(ra):
        arow = i * ca
        orow = i * cb
        for j in range(cb):
            out[orow + j] = 0
        for k in range(ca):
            aik = a[arow + k]
            if aik != 0:
                brow = k * cb
                for j in range(cb):
                    out[orow + j] += aik * b[brow + j]


def kron_i64(long long[::1] a, long long[::1] b, long long[::1] out,
             Py_ssize_t ra, Py_ssize_t ca, Py_ssize_t rb, Py_ssize_t cb):
    cdef Py_ssize_t i, j, k, l, cols, base, row, brow
    cdef long long aij
    cols = ca * cb
    for i in range(ra * rb * cols):
        out[i] = 0
    for i in range(ra):
        for j in range(ca):
            aij = a[i * ca + j]
            if aij != 0:
                base = (i * rb) * cols + j * cb
                for k in range(rb):
                    row = base + k * cols
                    brow = k * cb
                    for l in range(cb):
                        out[row + l] = aij * b[brow + l]
