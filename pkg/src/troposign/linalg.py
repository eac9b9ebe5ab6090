"""Vectors and matrices over the max-plus semiring and its symmetrization.

Vectors are tuples, matrices tuples of row tuples (dense, row-major).  Entries
are ``TropNum`` for tropical objects and :class:`~troposign.core.SignedTrop`
for signed ones.  Indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from .core import (
    MINUS_ONE,
    NEG_INF,
    ONE,
    ZERO,
    SignedTrop,
    TropNum,
    TropicalError,
    add,
    from_pair,
    from_trop,
    is_signed,
    mul,
    neg,
    negative_part,
    positive_part,
    rational,
)

TropVec = tuple
TropMat = tuple
SignedVec = tuple
SignedMat = tuple

MAX_DET_SIZE = 8


def trop_vec(values: Iterable) -> TropVec:
    return tuple(rational(v) for v in values)


def trop_mat(rows: Iterable[Iterable]) -> TropMat:
    m = tuple(trop_vec(r) for r in rows)
    _check_rect(m)
    return m


def signed_mat(rows: Iterable[Iterable[SignedTrop]]) -> SignedMat:
    m = tuple(tuple(r) for r in rows)
    _check_rect(m)
    return m


def _check_rect(m) -> None:
    if not m or not m[0]:
        raise ValueError("matrix dimensions must be positive")
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise ValueError("ragged matrix")


def shape(m) -> tuple[int, int]:
    return len(m), len(m[0])


def _square(m) -> int:
    r, c = shape(m)
    if r != c:
        raise ValueError(f"expected a square matrix, got {r}x{c}")
    return r


def _same_length(x, y) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


def dot_trop(x: TropVec, y: TropVec) -> TropNum:
    """Tropical scalar product ``max_i x_i + y_i``."""
    _same_length(x, y)
    best = NEG_INF
    for a, b in zip(x, y):
        if a == NEG_INF or b == NEG_INF:
            continue
        s = a + b
        if s > best:
            best = s
    return best


def split_signed(x: SignedVec) -> tuple[TropVec, TropVec]:
    """Canonical decomposition ``x = x+ ⊖ x-`` with disjoint supports."""
    try:
        return (
            tuple(positive_part(v) for v in x),
            tuple(negative_part(v) for v in x),
        )
    except TropicalError:
        raise TropicalError("vector has a balanced or extended entry") from None


def join_signed(plus: TropVec, minus: TropVec) -> SignedVec:
    """Inverse of :func:`split_signed`; the pair must be signed."""
    _same_length(plus, minus)
    out = []
    for p, m in zip(plus, minus):
        if p != NEG_INF and m != NEG_INF:
            raise TropicalError("pair is not signed")
        out.append(from_pair(p, m))
    return tuple(out)


def dot_signed(x: SignedVec, a: TropVec) -> SignedTrop:
    """``<x, a> = <x+, a> ⊖ <x-, a>`` for a signed ``x`` and tropical ``a``."""
    _same_length(x, a)
    plus, minus = split_signed(x)
    return from_pair(dot_trop(plus, a), dot_trop(minus, a))


def frobenius(x: SignedMat, y: SignedMat) -> SignedTrop:
    if shape(x) != shape(y):
        raise ValueError(f"shape mismatch: {shape(x)} vs {shape(y)}")
    out = ZERO
    for rx, ry in zip(x, y):
        for a, b in zip(rx, ry):
            out = add(out, mul(a, b))
    return out


def frobenius_trop(x: TropMat, y: TropMat) -> TropNum:
    if shape(x) != shape(y):
        raise ValueError(f"shape mismatch: {shape(x)} vs {shape(y)}")
    return max(dot_trop(rx, ry) for rx, ry in zip(x, y))


def support(z: TropVec) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(z) if v != NEG_INF)


def _check_index_set(z, idx) -> frozenset[int]:
    idx = frozenset(idx)
    bad = [i for i in idx if not 0 <= i < len(z)]
    if bad:
        raise IndexError(f"indices out of range: {sorted(bad)}")
    return idx


def restrict(z: TropVec, idx: Iterable[int]) -> TropVec:
    """``z_I``: keep the entries indexed by ``idx``, zero the rest."""
    idx = _check_index_set(z, idx)
    return tuple(v if i in idx else NEG_INF for i, v in enumerate(z))


def restrict_complement(z: TropVec, idx: Iterable[int]) -> TropVec:
    """``z`` with the entries indexed by ``idx`` set to the tropical zero."""
    idx = _check_index_set(z, idx)
    return tuple(NEG_INF if i in idx else v for i, v in enumerate(z))


def vmax(x: TropVec, y: TropVec) -> TropVec:
    _same_length(x, y)
    return tuple(a if a >= b else b for a, b in zip(x, y))


def vscale(lam: TropNum, x: TropVec) -> TropVec:
    if lam == NEG_INF:
        return tuple(NEG_INF for _ in x)
    return tuple(NEG_INF if v == NEG_INF else v + lam for v in x)


def transpose(m):
    return tuple(zip(*m))


def diag(m) -> tuple:
    n = _square(m)
    return tuple(m[i][i] for i in range(n))


def identity(n: int) -> SignedMat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def to_signed(m: TropMat) -> SignedMat:
    """Embed a tropical matrix (or vector of rows) as positive entries."""
    return tuple(tuple(from_trop(v) for v in row) for row in m)


def is_symmetric(m) -> bool:
    n = _square(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def is_signed_mat(m: SignedMat) -> bool:
    return all(is_signed(v) for row in m for v in row)


def matmul(x: SignedMat, y: SignedMat) -> SignedMat:
    rx, cx = shape(x)
    ry, cy = shape(y)
    if cx != ry:
        raise ValueError(f"cannot multiply {rx}x{cx} by {ry}x{cy}")
    out = []
    for i in range(rx):
        row = []
        for j in range(cy):
            acc = ZERO
            for k in range(cx):
                acc = add(acc, mul(x[i][k], y[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def matmul_trop(x: TropMat, y: TropMat) -> TropMat:
    yt = transpose(y)
    if shape(x)[1] != len(y):
        raise ValueError("inner dimensions differ")
    return tuple(tuple(dot_trop(r, c) for c in yt) for r in x)


def gram_trop(y: TropMat) -> TropMat:
    """``Y ⊙ Yᵀ``."""
    return tuple(tuple(dot_trop(ri, rj) for rj in y) for ri in y)


def matadd(x: SignedMat, y: SignedMat) -> SignedMat:
    if shape(x) != shape(y):
        raise ValueError("shape mismatch")
    return tuple(tuple(add(a, b) for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def matvec(m: SignedMat, v: Sequence[SignedTrop]) -> tuple:
    if shape(m)[1] != len(v):
        raise ValueError("dimension mismatch")
    out = []
    for row in m:
        acc = ZERO
        for a, b in zip(row, v):
            acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def quadratic_form(a: SignedMat, x: Sequence[SignedTrop]) -> SignedTrop:
    """``xᵀ A x = ⊕_{ij} x_i A_ij x_j`` evaluated in the symmetrized semiring."""
    n = _square(a)
    if len(x) != n:
        raise ValueError("dimension mismatch")
    acc = ZERO
    for i in range(n):
        xi = x[i]
        if xi is ZERO or xi == ZERO:
            continue
        for j in range(n):
            acc = add(acc, mul(mul(xi, a[i][j]), x[j]))
    return acc


def _perm_sign(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity += length - 1
    return parity & 1


def det_signed(a: SignedMat) -> SignedTrop:
    """Permutation expansion ``⊕_σ sgn(σ) ⊙ ⊙_i A_{i,σ(i)}``.

    Costs O(n·n!) and is therefore limited to ``n <= MAX_DET_SIZE``.
    """
    n = _square(a)
    if n > MAX_DET_SIZE:
        raise ValueError(f"permutation expansion limited to n <= {MAX_DET_SIZE}")
    acc = ZERO
    for p in permutations(range(n)):
        term = MINUS_ONE if _perm_sign(p) else ONE
        for i in range(n):
            term = mul(term, a[i][p[i]])
            if term is ZERO:
                break
        acc = add(acc, term)
    return acc


def minor(a, i: int, j: int):
    """``a`` with row ``i`` and column ``j`` deleted."""
    return tuple(
        tuple(v for c, v in enumerate(row) if c != j) for r, row in enumerate(a) if r != i
    )


def comatrix(a: SignedMat) -> SignedMat:
    """Entry ``(i, j)`` is ``(⊖1)^(i+j) ⊙ det A(i, j)``."""
    n = _square(a)
    if n < 2:
        raise ValueError("comatrix is not defined for 1x1 matrices")
    return tuple(
        tuple(
            neg(det_signed(minor(a, i, j))) if (i + j) % 2 else det_signed(minor(a, i, j))
            for j in range(n)
        )
        for i in range(n)
    )


def kleene_star(c: SignedMat) -> SignedMat:
    """``C* = I ⊕ C ⊕ C² ⊕ ... ⊕ C^(n-1)``."""
    n = _square(c)
    acc = identity(n)
    p = identity(n)
    for _ in range(n - 1):
        p = matmul(p, c)
        acc = matadd(acc, p)
    return acc


def signed_vec(values: Iterable[SignedTrop]) -> SignedVec:
    v = tuple(values)
    if not all(isinstance(e, SignedTrop) for e in v):
        raise TypeError("signed vectors hold SignedTrop entries")
    return v
