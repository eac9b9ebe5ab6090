"""Monomial lifts evaluated exactly at a fixed rational ``t``.

A signed tropical number ``x`` lifts to ``sign(x) * c * t**|x|``.  With ``t``
a perfect power and exponents of small denominator, every lift is an exact
rational, so classical statements (signs of inner products, principal
minors) are decided exactly and the leading exponent is read back with
:func:`sval_extract`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .cones import cp_factorize, is_copositive, is_psd_signed
from .core import (
    NEG_INF,
    ZERO,
    Neg,
    Pos,
    SignedTrop,
    TropicalError,
    from_trop,
    is_signed,
    rational,
)
from .linalg import det_signed, gram_trop, to_signed
from .polar import polar_contains, random_point, sample_polar

DEFAULT_T = 10**6
DEFAULT_MAX_DENOMINATOR = 4


@dataclass(frozen=True)
class RationalLift:
    """Evaluation point ``t > 1`` and the exponent denominator bound."""

    t: Fraction = Fraction(DEFAULT_T)
    max_denominator: int = DEFAULT_MAX_DENOMINATOR

    def __post_init__(self):
        t = Fraction(self.t)
        if t <= 1:
            raise ValueError("t must exceed 1")
        if self.max_denominator < 1:
            raise ValueError("max_denominator must be positive")
        object.__setattr__(self, "t", t)

    def squared(self) -> "RationalLift":
        return RationalLift(self.t**2, self.max_denominator)


def _iroot(n: int, q: int) -> Optional[int]:
    """Exact integer ``q``-th root of ``n >= 0``, or ``None``."""
    if n < 2:
        return n
    # Newton's iteration from an upper bound decreases to floor(n ** (1/q))
    r = 1 << -(-n.bit_length() // q)
    while True:
        s = ((q - 1) * r + n // r ** (q - 1)) // q
        if s >= r:
            break
        r = s
    return r if r**q == n else None


def power_exact(t: Fraction, e) -> Fraction:
    """``t**e`` for rational ``e``; raises when the result is irrational."""
    e = Fraction(e)
    p, q = e.numerator, e.denominator
    if q == 1:
        return t**p
    num, den = _iroot(t.numerator, q), _iroot(t.denominator, q)
    if num is None or den is None:
        raise TropicalError(f"t = {t} has no rational {q}-th root; pick t a perfect power")
    return Fraction(num, den) ** p


def lift_scalar(x: SignedTrop, lift: RationalLift = RationalLift(), c=1) -> Fraction:
    """``sign(x) * c * t**|x|``; zero lifts to 0."""
    if not isinstance(x, SignedTrop) or not is_signed(x):
        raise TropicalError(f"cannot lift {x!r}: only signed values lift")
    if x == ZERO:
        return Fraction(0)
    c = Fraction(c)
    if c <= 0:
        raise ValueError("lift coefficients must be positive")
    v = c * power_exact(lift.t, x.mag)
    return v if x.kind == "+" else -v


def lift_trop(a, lift: RationalLift = RationalLift(), c=1) -> Fraction:
    """Lift of a max-plus number as a nonnegative rational."""
    return lift_scalar(from_trop(a), lift, c)


def _log_t(v: Fraction, t: Fraction) -> float:
    return (math.log(v.numerator) - math.log(v.denominator)) / (
        math.log(t.numerator) - math.log(t.denominator)
    )


@dataclass(frozen=True)
class SvalEstimate:
    """Signed leading exponent of a rational read at ``t``.

    ``exponent`` is the rational of denominator at most ``max_denominator``
    nearest to ``raw = log_t |v|``; ``error = |raw - exponent|`` is the
    ``log_t`` of the leading coefficient.  ``exact`` is set when ``|v|`` is
    exactly ``t**exponent``.
    """

    sign: int
    exponent: object
    raw: float
    error: float
    exact: bool

    def to_signed(self) -> SignedTrop:
        if self.sign == 0:
            return ZERO
        return Pos(self.exponent) if self.sign > 0 else Neg(self.exponent)


def sval_extract(v, lift: RationalLift = RationalLift()) -> SvalEstimate:
    v = Fraction(v)
    if v == 0:
        return SvalEstimate(0, NEG_INF, float("-inf"), 0.0, True)
    sign = 1 if v > 0 else -1
    raw = _log_t(abs(v), lift.t)
    e = rational(Fraction(raw).limit_denominator(lift.max_denominator))
    try:
        exact = power_exact(lift.t, e) == abs(v)
    except TropicalError:
        exact = False
    return SvalEstimate(sign, e, raw, abs(raw - float(e)), exact)


def sval(v, lift: RationalLift = RationalLift()) -> SignedTrop:
    return sval_extract(v, lift).to_signed()


# -- exact rational linear algebra ------------------------------------------


def det_fraction(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                for k in range(col, n):
                    a[r][k] -= f * a[col][k]
    return det


def principal_minors(m) -> dict[tuple[int, ...], Fraction]:
    n = len(m)
    out = {}
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            out[idx] = det_fraction([[m[i][j] for j in idx] for i in idx])
    return out


def is_psd_rational(m) -> bool:
    """Exact classical PSD test: symmetric with all principal minors >= 0."""
    n = len(m)
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        return False
    return all(d >= 0 for d in principal_minors(m).values())


def lift_matrix(a, lift: RationalLift = RationalLift(), coeffs=None) -> tuple:
    n = len(a)
    return tuple(
        tuple(lift_scalar(a[i][j], lift, 1 if coeffs is None else coeffs[i][j]) for j in range(len(a[i])))
        for i in range(n)
    )


def matrix_sval(m, lift: RationalLift = RationalLift()) -> tuple:
    return tuple(tuple(sval(v, lift) for v in row) for row in m)


def matrix_val(m, lift: RationalLift = RationalLift()) -> tuple:
    out = []
    for row in m:
        r = []
        for v in row:
            if v < 0:
                raise TropicalError("val of a negative entry in a nonnegative matrix")
            r.append(sval_extract(v, lift).exponent)
        out.append(tuple(r))
    return tuple(out)


@dataclass(frozen=True)
class PsdLift:
    matrix: tuple
    t: Fraction
    psd: bool
    attempts: tuple = ()


def psd_coefficients(n: int) -> tuple:
    """``b_ii = n - 1`` (1 when ``n = 1``) and ``b_ij = 1`` off the diagonal."""
    d = max(n - 1, 1)
    return tuple(tuple(d if i == j else 1 for j in range(n)) for i in range(n))


def lift_psd(a, lift: RationalLift = RationalLift(), retry: bool = True) -> PsdLift:
    """Lift ``A`` in PSD_n(S) to a classically PSD rational matrix.

    Entry ``(i, j)`` becomes ``sign(A_ij) * b_ij * t**|A_ij|``.  The result is
    certified by exact principal minors.  If the certificate fails the lift is
    retried once at ``t**2`` and both attempts are recorded.
    """
    verdict = is_psd_signed(a)
    if not verdict.member:
        raise TropicalError(f"matrix is not in PSD_n(S): {verdict.certificate}")
    b = psd_coefficients(len(a))
    attempts = []
    current = lift
    for _ in range(2 if retry else 1):
        m = lift_matrix(a, current, b)
        ok = is_psd_rational(m)
        attempts.append((current.t, ok))
        if ok:
            return PsdLift(m, current.t, True, tuple(attempts))
        current = current.squared()
    return PsdLift(m, current.t, False, tuple(attempts))


# -- verification harnesses -------------------------------------------------


@dataclass
class LiftReport:
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "consistent" if not self.counterexamples else "counterexample"


def _lift_point(a, lift) -> tuple:
    return tuple(lift_trop(v, lift) for v in a)


def _dot(x, y) -> Fraction:
    return sum((p * q for p, q in zip(x, y)), Fraction(0))


def _random_coeff(rng: random.Random) -> Fraction:
    # rationals in [1/2, 2], well inside the band the exponent reader tolerates
    return Fraction(rng.randint(8, 32), 16)


def interior_perturbation(x: Sequence[SignedTrop], shift=1, fill=-5) -> tuple:
    """Raise positive coordinates by ``shift`` and put ``Pos(fill)`` on zeros."""
    out = []
    for v in x:
        if v.kind == "+":
            out.append(Pos(v.mag + shift))
        elif v.kind == "-":
            out.append(v)
        else:
            out.append(Pos(fill))
    return tuple(out)


def verify_polar_commutation(
    points,
    lift: RationalLift = RationalLift(),
    samples: int = 200,
    rng: Optional[random.Random] = None,
    exponents: Sequence = (-3, -2, -1, 0, 1, 2, 3),
    max_tries: int = 200_000,
) -> LiftReport:
    """Desk-scale check that sval commutes with taking polars.

    Inclusion one way: random classical polar elements ``x`` of the lifted
    point set (``x_i = ±c t^e``) must have ``sval(x)`` in the tropical polar.
    The other way: members of the tropical polar, perturbed into the interior,
    lift as monomials to classical polar elements.
    """
    rng = rng or random.Random(0)
    pts = [tuple(rational(v) for v in a) for a in points]
    pts = [a for a in pts if any(v != NEG_INF for v in a)]
    report = LiftReport()
    if not pts:
        report.details["note"] = "no generator with nonempty support"
        return report
    n = len(pts[0])
    lifted = [_lift_point(a, lift) for a in pts]

    def classical_member(x) -> bool:
        if any(_dot(x, la) < 0 for la in lifted):
            return False
        for _ in range(3):
            lam = [Fraction(rng.randint(0, 4), rng.randint(1, 4)) for _ in lifted]
            comb = [sum((l * la[i] for l, la in zip(lam, lifted)), Fraction(0)) for i in range(n)]
            if _dot(x, comb) < 0:
                return False
        return True

    found, tries = 0, 0
    while found < samples and tries < max_tries:
        tries += 1
        x = []
        for _ in range(n):
            r = rng.random()
            if r < 0.15:
                x.append(Fraction(0))
            else:
                v = _random_coeff(rng) * power_exact(lift.t, rng.choice(exponents))
                x.append(v if r < 0.575 else -v)
        if not classical_member(x):
            continue
        found += 1
        report.checked += 1
        sx = tuple(sval(v, lift) for v in x)
        if not polar_contains(pts, sx):
            report.counterexamples.append(
                {"direction": "sval of classical polar", "A": pts, "x": x, "sval": sx}
            )
    report.details["classical_samples"] = found

    polar = sample_polar(pts, samples, rng, magnitudes=exponents)
    for x in polar:
        z = interior_perturbation(x)
        report.checked += 1
        if not polar_contains(pts, z):
            report.counterexamples.append(
                {"direction": "perturbation left the polar", "A": pts, "x": x, "z": z}
            )
            continue
        lz = tuple(lift_scalar(v, lift) for v in z)
        bad = [la for la in lifted if _dot(lz, la) < 0]
        if bad:
            report.counterexamples.append(
                {"direction": "lift of tropical polar", "A": pts, "x": x, "z": z}
            )
    report.details["tropical_samples"] = len(polar)
    return report


def _classical_matmul_t(y) -> tuple:
    return tuple(tuple(_dot(ri, rj) for rj in y) for ri in y)


def remark_matrix_check(lift: RationalLift = RationalLift()) -> dict:
    """The 2x2 matrix ``[[2,3],[3,2]]``: copositive, not in sval(PSD)."""
    m = ((Pos(2), Pos(3)), (Pos(3), Pos(2)))
    lifted = lift_matrix(m, lift)
    det = det_fraction(lifted)
    return {
        "copositive": is_copositive(m).member,
        "psd": is_psd_signed(m).member,
        "det_signed": det_signed(m),
        "lifted_det": det,
        "lifted_det_sval": sval(det, lift),
        "lifted_psd": is_psd_rational(lifted),
    }


def random_cp_matrix(rng: random.Random, n: int, magnitudes=(-2, -1, 0, 1, 2)) -> tuple:
    """``Y ⊙ Yᵀ`` for a random tropical ``Y`` with a finite diagonal block."""
    k = rng.randint(1, n + 1)
    y = [list(random_point(rng, k, magnitudes, p_inf=0.3)) for _ in range(n)]
    for i in range(n):
        if all(v == NEG_INF for v in y[i]):
            y[i][rng.randrange(k)] = rng.choice(magnitudes)
    return gram_trop(tuple(tuple(r) for r in y))


def random_copositive_signed(
    rng: random.Random, n: int, magnitudes=(-2, -1, 0, 1, 2), max_tries=10_000
) -> tuple:
    for _ in range(max_tries):
        a = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = Pos(rng.choice(magnitudes))
            for j in range(i + 1, n):
                r = rng.random()
                m = rng.choice(magnitudes)
                v = ZERO if r < 0.2 else (Pos(m) if r < 0.6 else Neg(m))
                a[i][j] = a[j][i] = v
        m = tuple(tuple(r) for r in a)
        if is_copositive(m).member:
            return m
    raise RuntimeError("no copositive sample found")


def split_copositive(m) -> tuple[tuple, tuple]:
    """``M = P ⊕ N`` with ``P`` in PSD_n(S) (diagonal and negative part) and ``N >= 0``."""
    n = len(m)
    p = tuple(
        tuple(m[i][j] if i == j or m[i][j].kind == "-" else ZERO for j in range(n))
        for i in range(n)
    )
    nn = tuple(
        tuple(m[i][j] if i != j and m[i][j].kind == "+" else ZERO for j in range(n))
        for i in range(n)
    )
    return p, nn


def verify_collapse(
    n: int,
    lift: RationalLift = RationalLift(),
    samples: int = 100,
    rng: Optional[random.Random] = None,
) -> LiftReport:
    """Lift checks for the collapse of the primal and dual cone hierarchies.

    Primal: a random ``X`` in CP_n(T) lifts through its CP factor (a
    completely positive matrix) and through the PSD lift (a PSD matrix with
    nonnegative entries); both have valuation ``X``.  Dual: a random
    copositive ``M`` splits as PSD part plus nonnegative part, whose lifts sum
    to a matrix of PSD + NN with signed valuation ``M``.
    """
    if not 1 <= n <= 4:
        raise ValueError("verify_collapse supports 1 <= n <= 4")
    rng = rng or random.Random(0)
    # sampled exponents are half-integers; reading at denominator 2 leaves
    # room for leading coefficients up to the number of factor columns
    reader = RationalLift(lift.t, 2)
    report = LiftReport()
    for _ in range(samples):
        x = random_cp_matrix(rng, n)
        y = cp_factorize(x)
        ly = tuple(tuple(lift_trop(v, lift) for v in row) for row in y)
        route1 = _classical_matmul_t(ly)
        route2 = lift_psd(to_signed(x), lift)
        report.checked += 1
        bad = []
        if matrix_val(route1, reader) != x:
            bad.append("cp lift")
        if not route2.psd or any(v < 0 for row in route2.matrix for v in row):
            bad.append("psd lift certificate")
        elif matrix_val(route2.matrix, reader) != x:
            bad.append("psd lift valuation")
        if bad:
            report.counterexamples.append({"direction": "primal", "X": x, "failed": bad})

        m = random_copositive_signed(rng, n)
        p, nn = split_copositive(m)
        lp = lift_psd(p, lift)
        ln = lift_matrix(nn, lift)
        total = tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(lp.matrix, ln))
        report.checked += 1
        back = matrix_sval(total, reader)
        if not lp.psd or back != m or not is_copositive(back).member:
            report.counterexamples.append({"direction": "dual", "M": m, "sval": back})

    remark = remark_matrix_check(lift)
    report.details["remark_matrix"] = remark
    report.checked += 1
    if not (
        remark["copositive"]
        and not remark["psd"]
        and remark["det_signed"] == Neg(6)
        and remark["lifted_det"] < 0
        and remark["lifted_det_sval"] == Neg(6)
    ):
        report.counterexamples.append({"direction": "remark matrix", **remark})
    return report


def lift_quadratic_value(a, b, lift: RationalLift = RationalLift()) -> Fraction:
    """Optimal value ``-bᵀA⁻¹b / 4`` of the lifted quadratic, exactly.

    ``A`` lifts with unit coefficients; it must be classically positive
    definite at ``t``.
    """
    la = lift_matrix(a, lift)
    lb = [lift_scalar(v, lift) for v in b]
    if not all(d > 0 for d in principal_minors(la).values()):
        raise TropicalError("lifted matrix is not positive definite at this t")
    sol = _solve(la, lb)
    return -_dot(lb, sol) / 4


def _solve(a, b) -> list[Fraction]:
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                for k in range(col, n + 1):
                    m[r][k] -= f * m[col][k]
    return [m[i][n] / m[i][i] for i in range(n)]
