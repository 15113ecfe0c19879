"""Symmetric sparse matrices in canonical lower-triangle triplet form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SparseSymMatrix:
    """Symmetric matrix of the given order storing only the lower triangle.

    Triplets are 1-based, deduplicated and sorted by (row, col) with
    ``row >= col``; the implicit upper triangle mirrors the stored entries.
    """

    order: int
    rows: np.ndarray
    cols: np.ndarray
    vals: np.ndarray

    @classmethod
    def from_triplets(cls, order, triplets):
        """Build from an iterable of 1-based ``(row, col, value)`` entries.

        Entries are reflected into the lower triangle and duplicates are
        summed, so scatter-style accumulation can emit the same position
        repeatedly.
        """
        acc = {}
        for r, c, v in triplets:
            r = int(r)
            c = int(c)
            if not (1 <= r <= order and 1 <= c <= order):
                raise ValueError(
                    f"triplet index ({r},{c}) outside 1..{order}"
                )
            if r < c:
                r, c = c, r
            key = (r, c)
            acc[key] = acc.get(key, 0.0) + float(v)
        keys = sorted(acc)
        rows = np.array([k[0] for k in keys], dtype=np.int64)
        cols = np.array([k[1] for k in keys], dtype=np.int64)
        vals = np.array([acc[k] for k in keys], dtype=float)
        return cls(order=order, rows=rows, cols=cols, vals=vals)

    @property
    def nnz(self):
        return self.vals.size

    def entries(self):
        """List of (row, col, value) triplets, 1-based, row >= col."""
        return list(zip(self.rows.tolist(), self.cols.tolist(), self.vals.tolist()))

    def to_dense(self):
        """Materialize the full symmetric matrix."""
        M = np.zeros((self.order, self.order))
        r = self.rows - 1
        c = self.cols - 1
        M[r, c] = self.vals
        off = r != c
        M[c[off], r[off]] = self.vals[off]
        return M

    def matvec(self, x):
        """Product with a dense vector, honoring the implicit upper triangle."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.order,):
            raise ValueError("vector length must equal the matrix order")
        y = np.zeros(self.order)
        r = self.rows - 1
        c = self.cols - 1
        np.add.at(y, r, self.vals * x[c])
        off = r != c
        np.add.at(y, c[off], self.vals[off] * x[r[off]])
        return y

    def diagonal(self):
        d = np.zeros(self.order)
        on = self.rows == self.cols
        d[self.rows[on] - 1] = self.vals[on]
        return d
