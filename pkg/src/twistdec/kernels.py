"""Hot loops of the Guruswami-Sudan decoder.

Every kernel exists twice: a loop version compiled with numba (``nb_*``) and a
vectorised pure-numpy version (``np_*``).  The module-level names without a
prefix dispatch on :data:`twistdec._accel.BACKEND`.

Field arithmetic inside the compiled kernels works on integer encodings and
the tuple returned by :meth:`Field.kernel_args`:
``(mode, p, q-1, exp, log, zech, neg)`` with mode 0 = prime field,
1 = odd-characteristic extension (Zech logs), 2 = binary extension (xor).
"""

from __future__ import annotations

import numpy as np

from ._accel import BACKEND, njit


def binomials_mod(n: int, p: int) -> np.ndarray:
    """Pascal triangle C(i, j) mod p for 0 <= i, j <= n."""
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    out[:, 0] = 1
    for i in range(1, n + 1):
        out[i, 1 : i + 1] = (out[i - 1, 1 : i + 1] + out[i - 1, 0:i]) % p
    return out


# -- scalar field arithmetic for compiled code --------------------------------


@njit
def _fadd(a, b, mode, p, qm1, exp, log, zech, neg):
    if mode == 0:
        s = a + b
        return s - p if s >= p else s
    if mode == 2:
        return a ^ b
    if a == 0:
        return b
    if b == 0:
        return a
    la = log[a]
    d = log[b] - la
    if d < 0:
        d += qm1
    z = zech[d]
    if z < 0:
        return 0
    return exp[la + z]


@njit
def _fneg(a, mode, p, qm1, exp, log, zech, neg):
    if mode == 0:
        return 0 if a == 0 else p - a
    return neg[a]


@njit
def _fmul(a, b, mode, p, qm1, exp, log, zech, neg):
    if mode == 0:
        return (a * b) % p
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@njit
def _finv(a, mode, p, qm1, exp, log, zech, neg):
    if mode == 0:
        result = 1
        base = a % p
        e = p - 2
        while e > 0:
            if e & 1:
                result = (result * base) % p
            base = (base * base) % p
            e >>= 1
        return result
    la = log[a]
    return exp[(qm1 - la) % qm1]


# -- interpolation matrix ----------------------------------------------------


@njit
def nb_interp_matrix(xpow, ypow, s, mono_i, mono_j, binom, mode, p, qm1, exp, log, zech, neg):
    n = xpow.shape[0]
    ncols = mono_i.shape[0]
    nrows = n * s * (s + 1) // 2
    M = np.zeros((nrows, ncols), dtype=np.int64)
    row = 0
    for pt in range(n):
        for a in range(s):
            for b in range(s - a):
                for c in range(ncols):
                    I = mono_i[c]
                    J = mono_j[c]
                    if I < a or J < b:
                        continue
                    coef = (binom[I, a] * binom[J, b]) % p
                    if coef == 0:
                        continue
                    v = _fmul(xpow[pt, I - a], ypow[pt, J - b], mode, p, qm1, exp, log, zech, neg)
                    M[row, c] = _fmul(coef, v, mode, p, qm1, exp, log, zech, neg)
                row += 1
    return M


def np_interp_matrix(F, xpow, ypow, s, mono_i, mono_j, binom):
    n = xpow.shape[0]
    der = np.array([(a, b) for a in range(s) for b in range(s - a)], dtype=np.int64)
    da = der[:, 0][None, :, None]
    db = der[:, 1][None, :, None]
    I = mono_i[None, None, :]
    J = mono_j[None, None, :]
    ok = (I >= da) & (J >= db)
    ei = np.where(ok, I - da, 0)
    ej = np.where(ok, J - db, 0)
    pts = np.arange(n)[:, None, None]
    coef = (binom[I, da] * binom[J, db]) % F.p
    val = F.vmul(xpow[pts, ei], ypow[pts, ej])
    val = F.vmul(val, coef)
    val = np.where(ok, val, 0)
    return val.reshape(n * len(der), len(mono_i))


# -- first kernel vector by Gauss-Jordan --------------------------------------


@njit
def nb_first_kernel_vector(M, mode, p, qm1, exp, log, zech, neg):
    """Reduce M column by column and stop at the first non-pivot column c.

    All columns before c are pivots, so the kernel vector with x[c] = 1 and the
    remaining free variables zero is x[j] = -M[j, c] for j < c.
    """
    M = M.copy()
    nrows, ncols = M.shape
    idx = np.zeros(ncols, dtype=np.int64)
    lrow = np.zeros(ncols, dtype=np.int64)
    for col in range(ncols):
        prow = col
        piv = -1
        for r in range(prow, nrows):
            if M[r, col] != 0:
                piv = r
                break
        if piv < 0:
            x = np.zeros(ncols, dtype=np.int64)
            x[col] = 1
            for j in range(col):
                x[j] = _fneg(M[j, col], mode, p, qm1, exp, log, zech, neg)
            return x
        if piv != prow:
            for c in range(col, ncols):
                t = M[piv, c]
                M[piv, c] = M[prow, c]
                M[prow, c] = t
        inv = _finv(M[prow, col], mode, p, qm1, exp, log, zech, neg)
        for c in range(col, ncols):
            M[prow, c] = _fmul(M[prow, c], inv, mode, p, qm1, exp, log, zech, neg)
        if mode != 0:
            # nonzero pivot-row entries in log form, so each update is one exp lookup
            nnz = 0
            for c in range(col, ncols):
                if M[prow, c] != 0:
                    idx[nnz] = c
                    lrow[nnz] = log[M[prow, c]]
                    nnz += 1
        for r in range(nrows):
            if r == prow:
                continue
            f = M[r, col]
            if f == 0:
                continue
            nf = _fneg(f, mode, p, qm1, exp, log, zech, neg)
            if mode == 0:
                for c in range(col, ncols):
                    M[r, c] = (M[r, c] + nf * M[prow, c]) % p
                continue
            lnf = log[nf]
            if mode == 2:
                for t in range(nnz):
                    M[r, idx[t]] ^= exp[lnf + lrow[t]]
                continue
            for t in range(nnz):
                c = idx[t]
                M[r, c] = _fadd(M[r, c], exp[lnf + lrow[t]], mode, p, qm1, exp, log, zech, neg)
    return np.zeros(0, dtype=np.int64)


def np_first_kernel_vector(F, M):
    M = np.array(M, dtype=np.int64, copy=True)
    nrows, ncols = M.shape
    for col in range(ncols):
        prow = col
        nz = np.flatnonzero(M[prow:, col]) if prow < nrows else np.zeros(0, dtype=np.int64)
        if nz.size == 0:
            x = np.zeros(ncols, dtype=np.int64)
            x[col] = 1
            x[:col] = F.vneg(M[:col, col])
            return x
        piv = prow + int(nz[0])
        if piv != prow:
            M[[prow, piv]] = M[[piv, prow]]
        inv = F.inv(int(M[prow, col]))
        M[prow, col:] = F.vmul(M[prow, col:], inv)
        factors = M[:, col].copy()
        factors[prow] = 0
        rows = np.flatnonzero(factors)
        if rows.size:
            upd = F.vmul(factors[rows][:, None], M[prow, col:][None, :])
            M[rows, col:] = F.vsub(M[rows, col:], upd)
    return np.zeros(0, dtype=np.int64)


# -- Roth-Ruckenstein step: Q(x, x*y + gamma) with the x-power stripped --------


@njit
def nb_rr_step(Q, gamma, mode, p, qm1, exp, log, zech, neg):
    dx, dy = Q.shape
    T = Q.copy()
    if gamma != 0:
        for i in range(dx):
            for k in range(dy - 1):
                for j in range(dy - 2, k - 1, -1):
                    T[i, j] = _fadd(
                        T[i, j],
                        _fmul(T[i, j + 1], gamma, mode, p, qm1, exp, log, zech, neg),
                        mode, p, qm1, exp, log, zech, neg,
                    )
    U = np.zeros((dx + dy - 1, dy), dtype=np.int64)
    for i in range(dx):
        for j in range(dy):
            U[i + j, j] = T[i, j]
    return _strip(U)


@njit
def _strip(U):
    lo = 0
    hi = U.shape[0]
    while lo < hi:
        zero = True
        for j in range(U.shape[1]):
            if U[lo, j] != 0:
                zero = False
                break
        if not zero:
            break
        lo += 1
    while hi > lo:
        zero = True
        for j in range(U.shape[1]):
            if U[hi - 1, j] != 0:
                zero = False
                break
        if not zero:
            break
        hi -= 1
    hy = U.shape[1]
    while hy > 1:
        zero = True
        for i in range(lo, hi):
            if U[i, hy - 1] != 0:
                zero = False
                break
        if not zero:
            break
        hy -= 1
    return U[lo:hi, :hy].copy()


def np_strip(U):
    rows = np.flatnonzero(U.any(axis=1))
    if rows.size == 0:
        return U[:0, :1].copy()
    cols = np.flatnonzero(U.any(axis=0))
    return U[rows[0] : rows[-1] + 1, : cols[-1] + 1].copy()


def np_rr_step(F, Q, gamma):
    from .algebra.poly import taylor_shift_rows

    dx, dy = Q.shape
    T = taylor_shift_rows(F, Q.T, gamma).T if gamma else Q.copy()
    U = np.zeros((dx + dy - 1, dy), dtype=np.int64)
    jj = np.arange(dy)
    for i in range(dx):
        U[i + jj, jj] = T[i]
    return np_strip(U)


# -- dispatch ----------------------------------------------------------------


def interp_matrix(F, xpow, ypow, s, mono_i, mono_j, binom):
    if BACKEND == "numba":
        return nb_interp_matrix(xpow, ypow, s, mono_i, mono_j, binom, *F.kernel_args())
    return np_interp_matrix(F, xpow, ypow, s, mono_i, mono_j, binom)


def first_kernel_vector(F, M):
    if BACKEND == "numba":
        return nb_first_kernel_vector(M, *F.kernel_args())
    return np_first_kernel_vector(F, M)


def rr_step(F, Q, gamma):
    if BACKEND == "numba":
        return nb_rr_step(Q, int(gamma), *F.kernel_args())
    return np_rr_step(F, Q, gamma)


def strip(U):
    return np_strip(U)


# -- 2-D Taylor shift Q(x + a, y + r) -----------------------------------------


@njit
def nb_translate(Q, a, r, mode, p, qm1, exp, log, zech, neg):
    T = Q.copy()
    dx, dy = T.shape
    if a != 0:
        for col in range(dy):
            for k in range(dx - 1):
                for i in range(dx - 2, k - 1, -1):
                    T[i, col] = _fadd(
                        T[i, col],
                        _fmul(T[i + 1, col], a, mode, p, qm1, exp, log, zech, neg),
                        mode, p, qm1, exp, log, zech, neg,
                    )
    if r != 0:
        for row in range(dx):
            for k in range(dy - 1):
                for j in range(dy - 2, k - 1, -1):
                    T[row, j] = _fadd(
                        T[row, j],
                        _fmul(T[row, j + 1], r, mode, p, qm1, exp, log, zech, neg),
                        mode, p, qm1, exp, log, zech, neg,
                    )
    return T


def np_translate(F, Q, a, r):
    from .algebra.poly import taylor_shift_rows

    T = taylor_shift_rows(F, Q, a)
    return taylor_shift_rows(F, T.T, r).T.copy()


def translate(F, Q, a, r):
    if BACKEND == "numba":
        return nb_translate(Q, int(a), int(r), *F.kernel_args())
    return np_translate(F, Q, a, r)
