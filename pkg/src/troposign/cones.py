"""Tropical matrix cones: PSD, PD, CP, CPSD and copositive.

Every test reduces to inequalities on 2x2 principal submatrices.  Verdicts
carry a certificate: for non-members the offending index pair (and, where one
exists, a signed vector ``x`` on which the quadratic form is strictly
negative), for members of CP/CPSD a factor ``Y`` with ``Y ⊙ Yᵀ = X``.
Indices inside certificates are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    NEG_INF,
    ZERO,
    Neg,
    Pos,
    SignedTrop,
    TropicalError,
    from_trop,
    half,
    is_signed,
    modulus,
    rational,
)
from .linalg import (
    SignedMat,
    TropMat,
    frobenius_trop,
    gram_trop,
    quadratic_form,
    shape,
    to_signed,
)


@dataclass(frozen=True)
class ConeVerdict:
    member: bool
    certificate: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.member


def _square(m) -> int:
    r, c = shape(m)
    if r != c:
        raise ValueError(f"expected a square matrix, got {r}x{c}")
    return r


def _check_signed(a: SignedMat) -> int:
    n = _square(a)
    for i, row in enumerate(a):
        for j, v in enumerate(row):
            if not isinstance(v, SignedTrop):
                raise TypeError(f"entry ({i}, {j}) is not a SignedTrop")
            if not is_signed(v):
                raise TropicalError(f"entry ({i}, {j}) = {v} is not signed")
    return n


def _asymmetry(m) -> Optional[tuple[int, int]]:
    n = len(m)
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                return i, j
    return None


def _trop_mat(x) -> TropMat:
    m = tuple(tuple(rational(v) for v in row) for row in x)
    _square(m)
    return m


def _sum(a, b):
    if a == NEG_INF or b == NEG_INF:
        return NEG_INF
    return a + b


def _violation_vector(n, i, j, a, b, c, off_sign) -> tuple:
    """Signed ``x`` supported on ``{i, j}`` whose cross term dominates.

    ``a, c`` are the diagonal moduli, ``b`` the (finite) off-diagonal one and
    ``off_sign`` the sign of the off-diagonal entry.  Requires
    ``2b > a + c``; the cross term ``x_i x_j A_ij`` is then the unique term of
    maximal modulus and it is negative.
    """
    if a != NEG_INF and c != NEG_INF:
        u, v = -half(a), -half(c)
    elif a == NEG_INF and c != NEG_INF:
        u, v = c - b + 1, 0
    elif c == NEG_INF and a != NEG_INF:
        u, v = 0, a - b + 1
    else:
        u, v = 0, 0
    x = [ZERO] * n
    x[i] = Pos(u)
    x[j] = Neg(v) if off_sign > 0 else Pos(v)
    return tuple(x)


def _diag_vector(n, i) -> tuple:
    x = [ZERO] * n
    x[i] = Pos(0)
    return tuple(x)


# -- signed cones -----------------------------------------------------------


def is_psd_signed(a: SignedMat) -> ConeVerdict:
    """Membership in PSD_n(S): symmetric, ``A_ii ⪰ 0`` and ``A_ij² ⪯ A_ii A_jj``."""
    n = _check_signed(a)
    bad = _asymmetry(a)
    if bad:
        return ConeVerdict(False, {"i": bad[0], "j": bad[1], "reason": "not symmetric"})
    for i in range(n):
        if a[i][i].kind == "-":
            return ConeVerdict(
                False,
                {"i": i, "j": i, "reason": "negative diagonal entry", "x": _diag_vector(n, i)},
            )
    for i in range(n):
        for j in range(i + 1, n):
            aii, ajj, aij = modulus(a[i][i]), modulus(a[j][j]), modulus(a[i][j])
            if aij == NEG_INF:
                continue
            if 2 * aij > _sum(aii, ajj):
                x = _violation_vector(n, i, j, aii, aij, ajj, 1 if a[i][j].kind == "+" else -1)
                return ConeVerdict(
                    False, {"i": i, "j": j, "reason": "A_ij^2 exceeds A_ii A_jj", "x": x}
                )
    return ConeVerdict(True, {})


def is_pd_signed(a: SignedMat) -> ConeVerdict:
    """Membership in PD_n(S): ``A_ii ≻ 0`` and ``A_ij² ≺ A_ii A_jj`` for ``i != j``."""
    n = _check_signed(a)
    bad = _asymmetry(a)
    if bad:
        return ConeVerdict(False, {"i": bad[0], "j": bad[1], "reason": "not symmetric"})
    for i in range(n):
        if a[i][i].kind != "+":
            return ConeVerdict(False, {"i": i, "j": i, "reason": "diagonal entry not positive"})
    for i in range(n):
        for j in range(i + 1, n):
            aij = modulus(a[i][j])
            if aij == NEG_INF:
                continue
            if not 2 * aij < a[i][i].mag + a[j][j].mag:
                return ConeVerdict(
                    False, {"i": i, "j": j, "reason": "A_ij^2 not strictly below A_ii A_jj"}
                )
    return ConeVerdict(True, {})


def is_copositive(a: SignedMat) -> ConeVerdict:
    """Membership in the tropical copositive cone.

    ``A_ii ⪰ 0`` and ``(A_ij⁻)² ⪯ A_ii A_jj``: only negative off-diagonal
    entries are constrained.  Raises on non-symmetric input.
    """
    n = _check_signed(a)
    bad = _asymmetry(a)
    if bad:
        raise TropicalError(f"matrix is not symmetric at ({bad[0]}, {bad[1]})")
    for i in range(n):
        if a[i][i].kind == "-":
            return ConeVerdict(
                False,
                {"i": i, "j": i, "reason": "negative diagonal entry", "x": _diag_vector(n, i)},
            )
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j].kind != "-":
                continue
            aii, ajj, aij = modulus(a[i][i]), modulus(a[j][j]), a[i][j].mag
            if 2 * aij > _sum(aii, ajj):
                x = _violation_vector(n, i, j, aii, aij, ajj, -1)
                return ConeVerdict(
                    False,
                    {"i": i, "j": j, "reason": "negative part of A_ij too large", "x": x},
                )
    return ConeVerdict(True, {})


# -- tropical cones ---------------------------------------------------------


def is_psd_trop(x) -> ConeVerdict:
    """Tropical PSD: the matrix read as positive signed entries is in PSD_n(S)."""
    return is_psd_signed(to_signed(_trop_mat(x)))


def is_cp(x) -> ConeVerdict:
    """Tropical complete positivity: symmetric and ``2 X_ij <= X_ii + X_jj``."""
    m = _trop_mat(x)
    n = len(m)
    bad = _asymmetry(m)
    if bad:
        return ConeVerdict(False, {"i": bad[0], "j": bad[1], "reason": "not symmetric"})
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != NEG_INF and 2 * m[i][j] > _sum(m[i][i], m[j][j]):
                return ConeVerdict(
                    False, {"i": i, "j": j, "reason": "X_ij^2 exceeds X_ii X_jj"}
                )
    return ConeVerdict(True, {})


def _factor(m: TropMat) -> TropMat:
    """Singleton-plus-pair factor; equals a Gram factor exactly on CP members."""
    n = len(m)
    cols = []
    for i in range(n):
        col = [NEG_INF] * n
        col[i] = half(m[i][i])
        cols.append(col)
    for i in range(n):
        for j in range(i + 1, n):
            col = [NEG_INF] * n
            xij, xjj = m[i][j], m[j][j]
            if xij != NEG_INF and xjj != NEG_INF:
                col[i] = rational(Fraction(xij) - Fraction(xjj) / 2)
                col[j] = half(xjj)
            cols.append(col)
    return tuple(tuple(c[r] for c in cols) for r in range(n))


def cp_factorize(x) -> TropMat:
    """Return ``Y`` with ``n(n+1)/2`` columns and ``Y ⊙ Yᵀ = X``."""
    m = _trop_mat(x)
    verdict = is_cp(m)
    if not verdict.member:
        raise TropicalError(f"matrix is not completely positive: {verdict.certificate}")
    y = _factor(m)
    if gram_trop(y) != m:
        raise TropicalError("factorization check failed")
    return y


def is_cpsd(x) -> ConeVerdict:
    """Tropical CPSD membership by an explicit Gram representation.

    Row ``i`` of the singleton-plus-pair factor becomes the diagonal matrix
    ``D_i``; diagonal matrices are tropically PSD, and ``X`` is a member when
    ``X_ij = <D_i, D_j>`` (Frobenius product) for all ``i, j``.  Any Gram
    matrix of PSD matrices satisfies the 2x2 inequalities, so a mismatch
    certifies non-membership.
    """
    m = _trop_mat(x)
    n = len(m)
    y = _factor(m)
    k = len(y[0])
    blocks = [
        tuple(tuple(y[r][c] if c == d else NEG_INF for d in range(k)) for c in range(k))
        for r in range(n)
    ]
    for i in range(n):
        for j in range(n):
            if frobenius_trop(blocks[i], blocks[j]) != m[i][j]:
                return ConeVerdict(
                    False, {"i": min(i, j), "j": max(i, j), "reason": "no Gram representation"}
                )
    return ConeVerdict(True, {"factor": y})


def psd_witness_value(a: SignedMat, x) -> SignedTrop:
    """``xᵀ A x`` for a certificate vector; negative for a genuine violation."""
    return quadratic_form(a, x)


def as_signed_matrix(x) -> SignedMat:
    """Accept a tropical matrix or a signed one and return a signed matrix."""
    if x and x[0] and isinstance(x[0][0], SignedTrop):
        return tuple(tuple(r) for r in x)
    return tuple(tuple(from_trop(v) for v in r) for r in _trop_mat(x))
