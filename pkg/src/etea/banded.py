"""Banded matrices: construction, products, and SPD banded solves.

Storage is diagonal-major: one contiguous row per diagonal, aligned to the
column index (entry ``M[i, j]`` lives at ``data[lower_bw + j - i, j]``).
Entries outside the band are never stored.
"""

import numpy as np
from scipy.linalg import cholesky_banded, cho_solve_banded, solveh_banded


class NotPositiveDefiniteError(np.linalg.LinAlgError):
    """Raised when a factorization hits a non-positive pivot."""


class BandedMatrix:
    """Real banded matrix with ``lower_bw`` sub- and ``upper_bw`` superdiagonals.

    Parameters
    ----------
    rows, cols : int
        Matrix dimensions.
    lower_bw, upper_bw : int
        Number of nonzero diagonals below/above the main diagonal.
        Must satisfy ``lower_bw < rows`` and ``upper_bw < cols``.
    data : ndarray, shape (lower_bw + upper_bw + 1, cols), optional
        Diagonal storage; row ``lower_bw + k`` holds diagonal ``k`` (offset
        ``j - i``), indexed by column ``j``. Zeros if omitted.
    """

    def __init__(self, rows, cols, lower_bw, upper_bw, data=None):
        rows, cols = int(rows), int(cols)
        lower_bw, upper_bw = int(lower_bw), int(upper_bw)
        if rows < 1 or cols < 1:
            raise ValueError(f"empty matrix shape ({rows}, {cols})")
        if lower_bw < 0 or upper_bw < 0:
            raise ValueError("bandwidths must be nonnegative")
        if lower_bw >= rows or upper_bw >= cols:
            raise ValueError(
                f"bandwidths ({lower_bw}, {upper_bw}) exceed shape ({rows}, {cols})"
            )
        self.rows = rows
        self.cols = cols
        self.lower_bw = lower_bw
        self.upper_bw = upper_bw
        n_diags = lower_bw + upper_bw + 1
        if data is None:
            data = np.zeros((n_diags, cols))
        else:
            data = np.asarray(data, dtype=float)
            if data.shape != (n_diags, cols):
                raise ValueError(
                    f"data shape {data.shape} != expected {(n_diags, cols)}"
                )
        self.data = data

    @property
    def shape(self):
        return (self.rows, self.cols)

    @classmethod
    def identity(cls, n):
        m = cls(n, n, 0, 0)
        m.data[0, :] = 1.0
        return m

    @classmethod
    def symmetric_toeplitz(cls, n, taps):
        """n-by-n symmetric Toeplitz matrix from center-outward taps.

        ``taps[0]`` is the main diagonal value, ``taps[k]`` the value on the
        k-th sub- and superdiagonals.
        """
        taps = np.asarray(taps, dtype=float)
        d = len(taps) - 1
        m = cls(n, n, d, d)
        for k in range(-d, d + 1):
            j0, j1 = max(0, k), min(n, n + k)
            m.data[d + k, j0:j1] = taps[abs(k)]
        return m

    @classmethod
    def from_dense(cls, arr, lower_bw=None, upper_bw=None):
        """Build from a dense array, detecting bandwidths unless given."""
        arr = np.asarray(arr, dtype=float)
        rows, cols = arr.shape
        if lower_bw is None or upper_bw is None:
            lo, up = 0, 0
            for k in range(-(rows - 1), cols):
                if np.any(np.diagonal(arr, k) != 0.0):
                    lo = max(lo, -k)
                    up = max(up, k)
            lower_bw = lo if lower_bw is None else lower_bw
            upper_bw = up if upper_bw is None else upper_bw
        m = cls(rows, cols, lower_bw, upper_bw)
        for k in range(-lower_bw, upper_bw + 1):
            j0, j1 = max(0, k), min(cols, rows + k)
            if j1 > j0:
                m.data[lower_bw + k, j0:j1] = np.diagonal(arr, k)
        return m

    def diagonal(self, k=0):
        """Entries of diagonal ``k`` (offset ``j - i``), as a copy."""
        j0, j1 = max(0, k), min(self.cols, self.rows + k)
        if not (-self.lower_bw <= k <= self.upper_bw):
            return np.zeros(max(0, j1 - j0))
        return self.data[self.lower_bw + k, j0:j1].copy()

    def toarray(self):
        out = np.zeros((self.rows, self.cols))
        for k in range(-self.lower_bw, self.upper_bw + 1):
            j0, j1 = max(0, k), min(self.cols, self.rows + k)
            if j1 > j0:
                j = np.arange(j0, j1)
                out[j - k, j] = self.data[self.lower_bw + k, j0:j1]
        return out

    @property
    def T(self):
        return banded_transpose(self)

    def __matmul__(self, other):
        if isinstance(other, BandedMatrix):
            return banded_mul(self, other)
        return banded_mul_vec(self, other)

    def __repr__(self):
        return (
            f"BandedMatrix({self.rows}x{self.cols}, "
            f"lower_bw={self.lower_bw}, upper_bw={self.upper_bw})"
        )


def banded_mul(left, right):
    """Product of two banded matrices, itself banded.

    Result bandwidths are the sums of the operands' bandwidths, clipped to
    the result shape. Entries equal the dense product exactly.
    """
    if left.cols != right.rows:
        raise ValueError(
            f"incompatible shapes {left.shape} @ {right.shape}"
        )
    rows, cols = left.rows, right.cols
    lower = min(left.lower_bw + right.lower_bw, rows - 1)
    upper = min(left.upper_bw + right.upper_bw, cols - 1)
    out = BandedMatrix(rows, cols, lower, upper)
    for k1 in range(-left.lower_bw, left.upper_bw + 1):
        lrow = left.data[left.lower_bw + k1]
        for k2 in range(-right.lower_bw, right.upper_bw + 1):
            k = k1 + k2
            if k < -lower or k > upper:
                continue
            # C[i, j] += L[i, i + k1] * R[j - k2, j]; constraints on j:
            # 0 <= i = j - k < rows, 0 <= j - k2 < right.rows, 0 <= j < cols
            j0 = max(k, k2, 0)
            j1 = min(rows + k, right.rows + k2, cols)
            if j1 <= j0:
                continue
            out.data[lower + k, j0:j1] += (
                lrow[j0 - k2:j1 - k2] * right.data[right.lower_bw + k2, j0:j1]
            )
    return out


def banded_mul_vec(m, v):
    """Matrix-vector product ``m @ v``; equals the dense product exactly."""
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or len(v) != m.cols:
        raise ValueError(f"vector length {v.shape} incompatible with {m.shape}")
    out = np.zeros(m.rows)
    for k in range(-m.lower_bw, m.upper_bw + 1):
        i0 = max(0, -k)
        i1 = min(m.rows, m.cols - k)
        if i1 <= i0:
            continue
        out[i0:i1] += m.data[m.lower_bw + k, i0 + k:i1 + k] * v[i0 + k:i1 + k]
    return out


def banded_transpose(m):
    """Transpose; lower and upper bandwidths swap."""
    out = BandedMatrix(m.cols, m.rows, m.upper_bw, m.lower_bw)
    for k in range(-m.lower_bw, m.upper_bw + 1):
        j0, j1 = max(0, k), min(m.cols, m.rows + k)
        if j1 > j0:
            # entry (i, j) of m becomes entry (j, i) on diagonal -k,
            # stored under its new column index i = j - k
            out.data[m.upper_bw - k, j0 - k:j1 - k] = m.data[m.lower_bw + k, j0:j1]
    return out


def banded_add(a, b):
    """Sum of two banded matrices of identical shape."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} + {b.shape}")
    lower = max(a.lower_bw, b.lower_bw)
    upper = max(a.upper_bw, b.upper_bw)
    out = BandedMatrix(a.rows, a.cols, lower, upper)
    out.data[lower - a.lower_bw:lower + a.upper_bw + 1] += a.data
    out.data[lower - b.lower_bw:lower + b.upper_bw + 1] += b.data
    return out


def scale_rows(m, s):
    """New banded matrix whose row ``i`` is ``m``'s row ``i`` times ``s[i]``."""
    s = np.asarray(s, dtype=float)
    if len(s) != m.rows:
        raise ValueError(f"scale length {len(s)} != rows {m.rows}")
    out = BandedMatrix(m.rows, m.cols, m.lower_bw, m.upper_bw)
    for k in range(-m.lower_bw, m.upper_bw + 1):
        j0, j1 = max(0, k), min(m.cols, m.rows + k)
        if j1 > j0:
            out.data[m.lower_bw + k, j0:j1] = (
                m.data[m.lower_bw + k, j0:j1] * s[j0 - k:j1 - k]
            )
    return out


def _upper_ab(q):
    """LAPACK upper-banded form of a structurally symmetric banded matrix."""
    if q.rows != q.cols:
        raise ValueError(f"matrix not square: {q.shape}")
    if q.lower_bw != q.upper_bw:
        raise ValueError("symmetric solve requires equal bandwidths")
    # ab[u - k, j] = q[j - k, j], i.e. reversed upper rows of the storage
    return q.data[q.lower_bw:][::-1]


def banded_solve_spd(q, b):
    """Solve ``q @ x = b`` for symmetric positive-definite banded ``q``.

    Uses a banded Cholesky factorization (LAPACK), O(rows * bandwidth^2).

    Raises
    ------
    NotPositiveDefiniteError
        If a non-positive pivot is met, i.e. ``q`` is not positive definite.
    """
    b = np.asarray(b, dtype=float)
    if len(b) != q.rows:
        raise ValueError(f"rhs length {len(b)} != matrix rows {q.rows}")
    try:
        return solveh_banded(_upper_ab(q), b)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite: {exc}"
        ) from exc


def spd_factorize(q):
    """Factor an SPD banded matrix once; returns a ``solve(b)`` callable."""
    try:
        factor = cholesky_banded(_upper_ab(q))
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError(
            f"matrix is not positive definite: {exc}"
        ) from exc

    def solve(b):
        return cho_solve_banded((factor, False), np.asarray(b, dtype=float))

    return solve
