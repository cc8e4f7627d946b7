"""Exact linear algebra over prime fields.

Vectors over GF(2) are Python int bitmasks (bit ``i`` is the coefficient
of column ``i``); large eliminations are packed into numpy uint64 words
so a row operation touches 64 columns at a time.  Vectors over odd
primes are coefficient tuples handled by a small dense implementation.
All pivoting is deterministic: ascending column order, first matching
row, so every reduced basis this module returns is canonical.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

_WORD = 64
_NUMPY_THRESHOLD = 1 << 16  # rows * words above which packed elimination pays off


def _pack(rows: Sequence[int], ncols: int) -> np.ndarray:
    nwords = (ncols + _WORD - 1) // _WORD or 1
    out = np.zeros((len(rows), nwords), dtype=np.uint64)
    mask = (1 << _WORD) - 1
    for i, v in enumerate(rows):
        w = 0
        while v:
            out[i, w] = v & mask
            v >>= _WORD
            w += 1
    return out


def _unpack(words: np.ndarray) -> list[int]:
    out = []
    for row in words:
        v = 0
        for w in range(len(row) - 1, -1, -1):
            v = (v << _WORD) | int(row[w])
        out.append(v)
    return out


def _gf2_rref_numpy(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    words = _pack(rows, ncols)
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        w, b = divmod(col, _WORD)
        colbits = (words[r:, w] >> np.uint64(b)) & np.uint64(1)
        hits = np.nonzero(colbits)[0]
        if len(hits) == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
        sel = ((words[:, w] >> np.uint64(b)) & np.uint64(1)).astype(bool)
        sel[r] = False
        if sel.any():
            words[sel] ^= words[r]
        pivots.append(col)
        r += 1
    return _unpack(words[:r]), pivots


def _gf2_rref_ints(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    work = [v for v in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(work):
            break
        bit = 1 << col
        p = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    return work[:r], pivots


def gf2_rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of int-bitmask rows.

    Returns (nonzero reduced rows, pivot columns), pivots ascending.
    """
    nwords = (ncols + _WORD - 1) // _WORD or 1
    if len(rows) * nwords > _NUMPY_THRESHOLD:
        return _gf2_rref_numpy(rows, ncols)
    return _gf2_rref_ints(rows, ncols)


def gf2_rank(rows: Sequence[int], ncols: int) -> int:
    return len(gf2_rref(rows, ncols)[0])


def gf2_reduce(vec: int, rref_rows: Sequence[int], pivots: Sequence[int]) -> int:
    """Residual of vec after reduction by an rref basis."""
    for row, col in zip(rref_rows, pivots):
        if vec & (1 << col):
            vec ^= row
    return vec


def gf2_in_span(vec: int, rref_rows: Sequence[int], pivots: Sequence[int]) -> bool:
    return gf2_reduce(vec, rref_rows, pivots) == 0


def gf2_kernel(rows: Sequence[int], ncols: int) -> list[int]:
    """Right-kernel basis of the matrix, one bitmask per free column.

    The basis is in reduced form and ordered by free column index, so it
    is canonical for a given row list.
    """
    red, pivots = gf2_rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        fbit = 1 << f
        for row, col in zip(red, pivots):
            if row & fbit:
                v |= 1 << col
        basis.append(v)
    return basis


def gf2_left_kernel(rows: Sequence[int], ncols: int) -> list[int]:
    """Combos of the given rows summing to zero, as bitmasks over row indices."""
    k = len(rows)
    transposed = []
    for c in range(ncols):
        bit = 1 << c
        v = 0
        for i, row in enumerate(rows):
            if row & bit:
                v |= 1 << i
        transposed.append(v)
    return gf2_kernel(transposed, k)


def bits_to_tuple(vec: int, ncols: int) -> tuple[int, ...]:
    return tuple((vec >> i) & 1 for i in range(ncols))


class GF2Space:
    """Incrementally maintained reduced row space over GF(2).

    Rows are int bitmasks; the pivot of a row is its lowest set bit.
    """

    __slots__ = ("_rows",)

    def __init__(self, vectors: Iterable[int] = ()) -> None:
        self._rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, vec: int) -> int:
        rows = self._rows
        while vec:
            piv = (vec & -vec).bit_length() - 1
            row = rows.get(piv)
            if row is None:
                return vec
            vec ^= row
        return 0

    def add(self, vec: int) -> bool:
        """Insert vec; returns True if it enlarged the space."""
        vec = self.reduce(vec)
        if vec == 0:
            return False
        piv = (vec & -vec).bit_length() - 1
        for q, row in self._rows.items():
            if row & (1 << piv):
                self._rows[q] = row ^ vec
        self._rows[piv] = vec
        return True

    def __contains__(self, vec: int) -> bool:
        return self.reduce(vec) == 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    def basis(self) -> list[int]:
        return [self._rows[p] for p in sorted(self._rows)]


def modp_rref(rows: Sequence[Sequence[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p for odd p; rows are coefficient lists."""
    if not rows:
        return [], []
    m = np.array([list(r) for r in rows], dtype=np.int64) % p
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        hits = np.nonzero(m[r:, col])[0]
        if len(hits) == 0:
            continue
        q = r + int(hits[0])
        if q != r:
            m[[r, q]] = m[[q, r]]
        inv = pow(int(m[r, col]), p - 2, p)
        m[r] = (m[r] * inv) % p
        for i in range(len(m)):
            if i != r and m[i, col]:
                m[i] = (m[i] - m[i, col] * m[r]) % p
        pivots.append(col)
        r += 1
    return [list(map(int, row)) for row in m[:r]], pivots


def modp_rank(rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    return len(modp_rref(rows, ncols, p)[0])


def modp_reduce(vec: Sequence[int], rref_rows: Sequence[Sequence[int]],
                pivots: Sequence[int], p: int) -> list[int]:
    out = [c % p for c in vec]
    for row, col in zip(rref_rows, pivots):
        c = out[col]
        if c:
            for j, rj in enumerate(row):
                if rj:
                    out[j] = (out[j] - c * rj) % p
    return out


def modp_kernel(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[tuple[int, ...]]:
    red, pivots = modp_rref(rows, ncols, p)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, col in zip(red, pivots):
            if row[f]:
                v[col] = (-row[f]) % p
        basis.append(tuple(v))
    return basis


__all__ = [
    "gf2_rref", "gf2_rank", "gf2_reduce", "gf2_in_span", "gf2_kernel",
    "gf2_left_kernel", "bits_to_tuple", "GF2Space",
    "modp_rref", "modp_rank", "modp_reduce", "modp_kernel",
]
