"""Vectorized field arithmetic on element indices, for exhaustive sweeps.

Elements of F_q are identified with their position in the fixed
enumeration (see gf); index 0 is the zero element.  Multiplication runs
on discrete-log tables, addition on a precomputed q x q table.  All
batch routines here are cross-checked against the scalar gf/polyring
implementations in the test suite; they are accelerators, not a second
source of truth.
"""

from __future__ import annotations

import numpy as np

from .errors import FieldTooLarge
from .gf import FieldCtx, primitive_element

TABLE_CAP = 4096  # largest q for which index tables are built


class FieldTables:
    """Index-based operation tables for one field context."""

    def __init__(self, ctx: FieldCtx):
        if ctx.q > TABLE_CAP:
            raise FieldTooLarge(f"q = {ctx.q} exceeds table cap {TABLE_CAP}")
        self.ctx = ctx
        q, p, n = ctx.q, ctx.p, ctx.n
        self.q, self.p, self.n = q, p, n
        self.place = p ** np.arange(n - 1, -1, -1, dtype=np.int64)

        # coefficient vectors by index
        idx = np.arange(q, dtype=np.int64)
        elems = np.empty((q, n), dtype=np.int64)
        rem = idx.copy()
        for k in range(n):
            elems[:, k], rem = np.divmod(rem, self.place[k])
        self.elems = elems

        # powers of the primitive element
        g = primitive_element(ctx)
        self.alpha = ctx.index_of(g)
        exp = np.empty(q - 1, dtype=np.int64)
        acc = ctx.one()
        for k in range(q - 1):
            exp[k] = ctx.index_of(acc)
            acc = acc * g
        self.exp = exp
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self.log = log

        # operation tables
        self.add = (((elems[:, None, :] + elems[None, :, :]) % p)
                    @ self.place).astype(np.int32)
        mul = np.zeros((q, q), dtype=np.int32)
        if q > 1:
            lg = log[1:]
            mul[1:, 1:] = exp[(lg[:, None] + lg[None, :]) % (q - 1)]
        self.mul = mul
        self.neg = (((p - elems) % p) @ self.place).astype(np.int32)
        inv = np.zeros(q, dtype=np.int32)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        self.inv0 = inv
        # embedded integers: index of the coefficient vector (i, 0, ..., 0)
        self.emb = (np.arange(p, dtype=np.int64) * self.place[0]).astype(np.int32)

        self._eval_matrix = None
        self._interp_matrix = None

    # -- conversions -------------------------------------------------------
    def index(self, a) -> int:
        return self.ctx.index_of(a)

    def element(self, idx: int):
        return self.ctx.el_at(int(idx))

    def sub(self, x, y):
        return self.add[x, self.neg[y]]

    # -- powers with the 0**0 = 1 convention -------------------------------
    def pow_scalar_exp(self, base: np.ndarray, k: int) -> np.ndarray:
        """base^k elementwise for one integer exponent k >= 0."""
        base = np.asarray(base)
        if k == 0:
            return np.full(base.shape, self.emb[1], dtype=np.int32)
        out = np.zeros(base.shape, dtype=np.int32)
        nz = base != 0
        out[nz] = self.exp[(k * self.log[base[nz]]) % (self.q - 1)]
        return out

    def pow_outer(self, base: np.ndarray, exps: np.ndarray) -> np.ndarray:
        """(len(base), len(exps)) array of base[r]^exps[c], exps >= 0."""
        base = np.asarray(base)
        exps = np.asarray(exps, dtype=np.int64)
        out = np.zeros((len(base), len(exps)), dtype=np.int32)
        nz = base != 0
        if nz.any():
            lg = self.log[base[nz]]
            out[nz] = self.exp[(lg[:, None] * exps[None, :]) % (self.q - 1)]
        zero_exp = exps == 0
        if zero_exp.any():
            out[:, zero_exp] = self.emb[1]
        return out

    # -- linear maps over F_p ---------------------------------------------
    def eval_matrix(self) -> np.ndarray:
        """(q*n, q*n) float64 matrix of evaluation as an F_p-linear map.

        Flattening: coefficient of x^i, prime-field component k sits at
        position i*n + k; value at the a-th enumerated point, component k
        at a*n + k.
        """
        if self._eval_matrix is None:
            q, n = self.q, self.n
            pw = self.pow_outer(np.arange(q, dtype=np.int32), np.arange(q))  # a^i
            M = np.empty((q * n, q * n), dtype=np.float64)
            for k in range(n):
                basis_idx = int(self.place[k])  # index of the k-th basis element
                prod = self.mul[pw, basis_idx]          # (q, q) index of a^i * e_k
                comps = self.elems[prod]                # (q, q, n)
                M[:, k::n] = comps.transpose(0, 2, 1).reshape(q * n, q)
            self._eval_matrix = M
        return self._eval_matrix

    def interp_matrix(self) -> np.ndarray:
        if self._interp_matrix is None:
            M = self.eval_matrix().astype(np.int64) % self.p
            self._interp_matrix = _matinv_mod(M, self.p).astype(np.float64)
        return self._interp_matrix

    def _apply_linear(self, rows_idx: np.ndarray, M: np.ndarray) -> np.ndarray:
        """Apply an F_p-linear map (given as float matrix) to index rows."""
        m, q = rows_idx.shape
        n = self.n
        out = np.empty_like(rows_idx)
        chunk = max(1, 4_000_000 // (q * n))
        for s in range(0, m, chunk):
            comps = self.elems[rows_idx[s:s + chunk]]          # (c, q, n)
            flat = comps.reshape(len(comps), q * n).astype(np.float64)
            res = (flat @ M.T) % self.p
            res = res.astype(np.int64).reshape(len(comps), q, n)
            out[s:s + chunk] = (res @ self.place).astype(rows_idx.dtype)
        return out

    def batch_eval(self, coeff_rows: np.ndarray) -> np.ndarray:
        """Value tables of reduced coefficient rows (indices in, indices out)."""
        return self._apply_linear(coeff_rows, self.eval_matrix())

    def batch_interp(self, table_rows: np.ndarray) -> np.ndarray:
        """Reduced coefficients of value-table rows (indices in, indices out)."""
        return self._apply_linear(table_rows, self.interp_matrix())


def _matinv_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p by Gauss-Jordan elimination."""
    m = len(M)
    A = M % p
    I = np.eye(m, dtype=np.int64)
    for col in range(m):
        piv = col + int(np.nonzero(A[col:, col])[0][0])
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
            I[[col, piv]] = I[[piv, col]]
        inv = pow(int(A[col, col]), p - 2, p)
        A[col] = A[col] * inv % p
        I[col] = I[col] * inv % p
        mask = np.nonzero(A[:, col])[0]
        mask = mask[mask != col]
        if len(mask):
            f = A[mask, col][:, None]
            A[mask] = (A[mask] - f * A[col]) % p
            I[mask] = (I[mask] - f * I[col]) % p
    return I


def tables(ctx: FieldCtx) -> FieldTables:
    """Cached FieldTables for a context."""
    if ctx._tables is None:
        ctx._tables = FieldTables(ctx)
    return ctx._tables


def chain_value_tables(t: FieldTables, a_list: list[np.ndarray]) -> np.ndarray:
    """Value tables of the chains with parameter columns a_list.

    a_list holds n+2 index arrays of common length m (a0, a1, ..., a_{n+1});
    the result is (m, q) with row r the table of chain r.
    """
    a_list = [np.asarray(a, dtype=np.int32) for a in a_list]
    m = len(a_list[0])
    q = t.q
    out = np.empty((m, q), dtype=np.int32)
    for x in range(q):
        v = t.add[t.mul[a_list[0], x], a_list[1]]
        for k in range(2, len(a_list)):
            v = t.add[t.inv0[v], a_list[k]]
        out[:, x] = v
    return out


def rank2_coeff_rows(t: FieldTables, a0, a1, a2, a3) -> np.ndarray:
    """Reduced coefficients of the rank-2 closed form, one row per tuple.

    Column i is the coefficient of x^i; column q-1 is always zero and the
    constant lands in column 0.  Zero-base powers follow 0**0 = 1.
    """
    a0 = np.asarray(a0, dtype=np.int32)
    a1 = np.asarray(a1, dtype=np.int32)
    a2 = np.asarray(a2, dtype=np.int32)
    a3 = np.asarray(a3, dtype=np.int32)
    q, p = t.q, t.p
    m = len(a0)
    inv_a2 = t.inv0[a2]
    eta = t.add[a1, inv_a2]
    neg_a0 = t.neg[a0]

    i = np.arange(1, q - 1, dtype=np.int64)
    emb_i = t.emb[(i % p).astype(np.int64)]                       # (q-2,)
    pow_neg = t.pow_outer(neg_a0, i)                              # (-a0)^i
    pow_eta = t.pow_outer(eta, q - 2 - i)                         # eta^(q-2-i)
    pow_a1 = t.pow_outer(a1, q - 1 - i)                           # a1^(q-1-i)

    lin = t.add[a1[:, None], t.neg[t.mul[emb_i[None, :], inv_a2[:, None]]]]
    bracket = t.add[t.mul[lin, pow_eta], t.neg[pow_a1]]
    coeff = t.mul[t.mul[inv_a2[:, None], pow_neg], bracket]

    eta_top = t.pow_outer(eta, np.array([q - 2]))[:, 0]
    a1_top = t.pow_outer(a1, np.array([q - 1]))[:, 0]
    inner = t.add[t.mul[a1, eta_top], t.add[np.full(m, t.emb[1], np.int32), t.neg[a1_top]]]
    c = t.add[a3, t.mul[inv_a2, inner]]

    out = np.zeros((m, q), dtype=np.int32)
    out[:, 0] = c
    out[:, 1:q - 1] = coeff
    return out


def weight_rows(coeff_rows: np.ndarray) -> np.ndarray:
    """Weight (nonzero-coefficient count) per row of index coefficients."""
    return np.count_nonzero(coeff_rows, axis=1)


def degree_rows(coeff_rows: np.ndarray) -> np.ndarray:
    """Degree per row; -1 for a zero row."""
    m, q = coeff_rows.shape
    nz = coeff_rows != 0
    rev = nz[:, ::-1]
    first = np.argmax(rev, axis=1)
    deg = q - 1 - first
    deg[~nz.any(axis=1)] = -1
    return deg


class TableOps:
    """Scalar field operations on element indices, for tight loops."""

    def __init__(self, t: FieldTables):
        self.add_t = t.add
        self.mul_t = t.mul
        self.neg_t = t.neg
        self.inv_t = t.inv0
        self.one = int(t.emb[1])

    def add(self, x, y):
        return int(self.add_t[x, y])

    def sub(self, x, y):
        return int(self.add_t[x, self.neg_t[y]])

    def mul(self, x, y):
        return int(self.mul_t[x, y])

    def inv(self, x):
        return int(self.inv_t[x])
