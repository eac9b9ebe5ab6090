"""Optimization over signed tropical numbers.

Infima are taken in the totally ordered set of signed values extended by
``TOP`` and ``BOT``; points where the objective is balanced are infeasible.
Polynomials are tuples of signed coefficients, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cones import is_copositive, is_pd_signed
from .core import (
    BOT,
    NEG_INF,
    ONE,
    ZERO,
    Neg,
    Pos,
    SignedTrop,
    TropicalError,
    add,
    inverse,
    is_balanced,
    is_signed,
    lt,
    modulus,
    mul,
    neg,
    power,
)
from .linalg import comatrix, det_signed, quadratic_form, transpose

SignedPoly = tuple


def signed_poly(coeffs: Sequence[SignedTrop]) -> SignedPoly:
    """Validate coefficients (lowest degree first) and drop trailing zeros."""
    cs = list(coeffs)
    for k, a in enumerate(cs):
        if not isinstance(a, SignedTrop) or not is_signed(a):
            raise TropicalError(f"coefficient a_{k} = {a!r} is not signed")
    while cs and cs[-1] == ZERO:
        cs.pop()
    if not cs:
        raise TropicalError("the zero polynomial has no degree")
    return tuple(cs)


def degree(f: SignedPoly) -> int:
    return len(f) - 1


def eval_poly(f: SignedPoly, x: SignedTrop) -> SignedTrop:
    """``⊕_k a_k x^k`` in the symmetrized semiring; may be balanced."""
    if not is_signed(x):
        raise TropicalError(f"evaluation point {x!r} is not signed")
    acc = ZERO
    xk = ONE
    for a in f:
        acc = add(acc, mul(a, xk))
        xk = mul(xk, x)
    return acc


def abs_eval(f: SignedPoly, m) -> object:
    """``|f|(m) = max_k |a_k| + k m``."""
    best = NEG_INF
    for k, a in enumerate(f):
        ak = modulus(a)
        if ak == NEG_INF:
            continue
        if m == NEG_INF:
            v = ak if k == 0 else NEG_INF
        else:
            v = ak + k * m
        if v > best:
            best = v
    return best


def tie_points(f: SignedPoly) -> list:
    """Moduli where at least two monomials of ``|f|`` attain the maximum."""
    terms = [(k, modulus(a)) for k, a in enumerate(f) if a != ZERO]
    out = set()
    for p, (k, ak) in enumerate(terms):
        for l, al in terms[p + 1 :]:
            m = Fraction(ak - al) / (l - k)
            m = m.numerator if m.denominator == 1 else m
            top = abs_eval(f, m)
            if ak + k * m == top and al + l * m == top:
                out.add(m)
    return sorted(out)


def poly_roots(f: SignedPoly) -> list[SignedTrop]:
    """All signed ``x`` with ``f(x)`` balanced, sorted by ``⪯``.

    A root has a modulus where two monomials tie; elsewhere one signed
    monomial dominates and the value is signed.  Zero is a root iff
    ``a_0`` is zero.
    """
    f = signed_poly(f)
    roots = []
    if f[0] == ZERO:
        roots.append(ZERO)
    for m in tie_points(f):
        for x in (Pos(m), Neg(m)):
            if is_balanced(eval_poly(f, x)):
                roots.append(x)
    return sorted(roots, key=_order_key)


def _order_key(x: SignedTrop):
    if x.kind == "+":
        return (2, x.mag)
    if x.kind == "-":
        return (0, -x.mag)
    return (1, 0)


@dataclass(frozen=True)
class OptResult:
    """Infimum of a signed optimization problem and how it is reached.

    ``kind`` is one of ``"attained"``, ``"limit"``, ``"unbounded"``; for a
    limit, ``point`` is the root approached and ``side`` is ``"left"``
    (from below in ``⪯``) or ``"right"``.
    """

    value: SignedTrop
    kind: str
    point: Optional[SignedTrop] = None
    side: Optional[str] = None

    @property
    def attainment(self) -> str:
        if self.kind == "unbounded":
            return "unbounded"
        if self.kind == "limit":
            return f"limit at {self.point}"
        return f"attained at {self.point}"


def minimize_poly(f: Sequence[SignedTrop]) -> OptResult:
    """Infimum of ``f(x)`` over signed ``x`` with ``f(x)`` signed.

    Odd degree or a negative leading coefficient gives ``BOT``.  Otherwise
    the signed line is cut at the tie moduli of ``|f|``; inside each piece a
    single monomial dominates, so the infimum over the piece sits at one of
    its ends.  Comparing the ends and the tie points themselves gives the
    exact infimum, including the degenerate ties where a root is not a sign
    change (``x² ⊕ x ⊕ 0`` stays positive around ``⊖0``).
    """
    f = signed_poly(f)
    n = degree(f)
    lead = f[-1]
    if n == 0:
        # a constant is its own infimum whatever its sign
        return OptResult(lead, "attained", ZERO)
    if n % 2 == 1 or lead.kind == "-":
        return OptResult(BOT, "unbounded")
    best = OptResult(f[0], "attained", ZERO)
    for cand in _candidates(f):
        if _better(cand, best):
            best = cand
    return best


def _candidates(f: SignedPoly):
    cuts = tie_points(f)
    for make in (Pos, Neg):
        for m in cuts:
            y = eval_poly(f, make(m))
            if is_signed(y):
                yield OptResult(y, "attained", make(m))
        bounds = [NEG_INF, *cuts, None]
        for lo, hi in zip(bounds, bounds[1:]):
            y = eval_poly(f, make(_inside(lo, hi)))
            if y.kind == "-":
                # modulus grows toward the upper end; an unbounded piece
                # cannot be negative for an even positive leading term
                yield OptResult(Neg(abs_eval(f, hi)), "limit", make(hi), _side(make, up=False))
            elif lo != NEG_INF:
                yield OptResult(Pos(abs_eval(f, lo)), "limit", make(lo), _side(make, up=True))


def _inside(lo, hi):
    if lo == NEG_INF and hi is None:
        return 0
    if lo == NEG_INF:
        return hi - 1
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def _side(make, up: bool) -> str:
    # approaching a modulus from above moves a positive point leftward in ⪯
    # and a negative point rightward
    if make is Pos:
        return "right" if up else "left"
    return "left" if up else "right"


def _better(a: OptResult, b: OptResult) -> bool:
    if a.value != b.value:
        return lt(a.value, b.value)
    return a.kind == "attained" and b.kind != "attained"


# -- quadratic problems -----------------------------------------------------


@dataclass(frozen=True)
class QuadSolution:
    value: SignedTrop
    xbar: tuple
    xstar: Optional[tuple]

    @property
    def generic(self) -> bool:
        return self.xstar is not None


def quad_objective(a, b, x) -> SignedTrop:
    """``xᵀ A x ⊕ bᵀ x``."""
    acc = quadratic_form(a, x)
    for bi, xi in zip(b, x):
        acc = add(acc, mul(bi, xi))
    return acc


def solve_quadratic(a, b) -> QuadSolution:
    """Closed-form solution of ``inf xᵀAx ⊕ bᵀx`` for positive definite ``A``.

    The value is ``⊖ ⊕_i b_i² A_ii⁻¹``, approached along a sequence tending
    to ``x̄ = ⊖ diag(A)⁻¹ b``.  ``xstar = ⊖ (det A)⁻¹ (com A)ᵀ b`` is the
    image of the optimum of a generic lift; it is ``None`` when some entry
    of ``(com A)ᵀ b`` is balanced.
    """
    verdict = is_pd_signed(a)
    if not verdict.member:
        raise TropicalError(f"matrix is not positive definite: {verdict.certificate}")
    n = len(a)
    if len(b) != n:
        raise ValueError("dimension mismatch")
    for k, bi in enumerate(b):
        if not is_signed(bi):
            raise TropicalError(f"b_{k} = {bi!r} is not signed")
    dinv = [inverse(a[i][i]) for i in range(n)]
    value = ZERO
    for i in range(n):
        value = add(value, mul(power(b[i], 2), dinv[i]))
    value = neg(value)
    xbar = tuple(neg(mul(dinv[i], b[i])) for i in range(n))
    if n == 1:
        xstar = xbar
    else:
        xstar = _xstar(a, b)
    return QuadSolution(value, xbar, xstar)


def _xstar(a, b) -> Optional[tuple]:
    det = det_signed(a)
    if not is_signed(det) or det == ZERO:
        return None
    comt = transpose(comatrix(a))
    out = []
    for row in comt:
        acc = ZERO
        for c, bj in zip(row, b):
            acc = add(acc, mul(c, bj))
        if not is_signed(acc):
            return None
        out.append(neg(mul(inverse(det), acc)))
    return tuple(out)


def copositive_qp_value(a) -> tuple[SignedTrop, Optional[tuple]]:
    """Value of ``inf xᵀAx`` over ``x ⪰ 0``, with a witness when unbounded.

    Returns ``(ZERO, None)`` for copositive ``A``.  Otherwise returns
    ``(BOT, x)`` where ``x ⪰ 0`` and ``xᵀAx`` is signed negative, so that
    scaling ``x`` drives the objective to ``BOT``.
    """
    verdict = is_copositive(a)
    if verdict.member:
        return ZERO, None
    x = verdict.certificate["x"]
    v = quadratic_form(a, x)
    if not (is_signed(v) and lt(v, ZERO)):
        raise TropicalError("copositivity witness check failed")
    return BOT, x
