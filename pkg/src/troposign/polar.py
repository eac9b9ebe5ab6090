"""Signed polars of finite point sets and the bend-cone machinery.

Polars and bend cones are infinite sets, so nothing here materializes them.
The module offers membership tests, the pair combinators (``vee_map``,
``oplus_i``, ``hat_oplus``), a sampled checker for the bend-cone axioms, and
tropical projection and separation for finitely generated cones.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

from .core import NEG_INF, ZERO, Neg, Pos, SignedTrop, TropNum, TropicalError, geq, rational
from .linalg import SignedVec, TropVec, dot_signed, dot_trop, join_signed, split_signed, vmax


@dataclass(frozen=True)
class SignedPair:
    """A pair ``(plus, minus)`` of tropical vectors of equal length.

    The pair encodes the tropical half-space ``<plus, a> >= <minus, a>``.
    It is *signed* when ``plus`` and ``minus`` have disjoint supports.
    """

    plus: TropVec
    minus: TropVec

    def __post_init__(self):
        plus = tuple(rational(v) for v in self.plus)
        minus = tuple(rational(v) for v in self.minus)
        if len(plus) != len(minus):
            raise ValueError("plus and minus parts differ in length")
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    @property
    def dim(self) -> int:
        return len(self.plus)

    @property
    def is_signed(self) -> bool:
        return all(p == NEG_INF or m == NEG_INF for p, m in zip(self.plus, self.minus))

    def __add__(self, other: "SignedPair") -> "SignedPair":
        return SignedPair(vmax(self.plus, other.plus), vmax(self.minus, other.minus))

    def scale(self, lam: TropNum) -> "SignedPair":
        return SignedPair(_scale(lam, self.plus), _scale(lam, self.minus))

    def to_vec(self) -> SignedVec:
        return join_signed(self.plus, self.minus)

    @classmethod
    def from_vec(cls, x: SignedVec) -> "SignedPair":
        plus, minus = split_signed(x)
        return cls(plus, minus)

    @classmethod
    def zero(cls, n: int) -> "SignedPair":
        z = (NEG_INF,) * n
        return cls(z, z)


def _scale(lam, v):
    if lam == NEG_INF:
        return tuple(NEG_INF for _ in v)
    return tuple(NEG_INF if x == NEG_INF else x + lam for x in v)


def _as_pair(p) -> SignedPair:
    if isinstance(p, SignedPair):
        return p
    if p and isinstance(p[0], SignedTrop):
        return SignedPair.from_vec(p)
    plus, minus = p
    return SignedPair(plus, minus)


def _check_points(points: Sequence[TropVec], n: int) -> None:
    for a in points:
        if len(a) != n:
            raise ValueError(f"dimension mismatch: point of length {len(a)}, expected {n}")


# -- membership -------------------------------------------------------------


def polar_contains(points: Sequence[TropVec], x: SignedVec) -> bool:
    """Whether the signed vector ``x`` lies in the signed polar of ``points``."""
    _check_points(points, len(x))
    for a in points:
        if not geq(dot_signed(x, a), ZERO):
            return False
    return True


def two_sided_contains(points: Sequence[TropVec], p) -> bool:
    """Whether the pair ``p`` (signed or not) lies in the two-sided polar."""
    p = _as_pair(p)
    _check_points(points, p.dim)
    return all(dot_trop(p.plus, a) >= dot_trop(p.minus, a) for a in points)


def one_sided_contains(pairs: Iterable, a: TropVec) -> bool:
    """Whether the point ``a`` satisfies every half-space in ``pairs``."""
    for p in pairs:
        p = _as_pair(p)
        if p.dim != len(a):
            raise ValueError("dimension mismatch")
        if dot_trop(p.plus, a) < dot_trop(p.minus, a):
            return False
    return True


# -- pair combinators -------------------------------------------------------


def vee_map(p) -> SignedPair:
    """Coordinatewise reduction of a pair to a signed pair.

    Ties go to the plus side; the minus entry survives only when strictly
    larger.  Half-space membership is preserved.
    """
    p = _as_pair(p)
    plus, minus = [], []
    for fp, fm in zip(p.plus, p.minus):
        if fp >= fm:
            plus.append(fp)
            minus.append(NEG_INF)
        else:
            plus.append(NEG_INF)
            minus.append(fm)
    return SignedPair(tuple(plus), tuple(minus))


def oplus_i(x, y, i: int) -> SignedPair:
    """Cancellation sum ``(x+ ⊕ y+ off i, x- off i ⊕ y-)``; needs ``x-_i == y+_i``."""
    x, y = _as_pair(x), _as_pair(y)
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    if not 0 <= i < x.dim:
        raise IndexError(i)
    if x.minus[i] != y.plus[i]:
        raise TropicalError("cancellation index mismatch")
    return _cancel(x, y, {i})


def _cancel(x: SignedPair, y: SignedPair, idx) -> SignedPair:
    plus = tuple(
        xp if k in idx else max(xp, yp) for k, (xp, yp) in enumerate(zip(x.plus, y.plus))
    )
    minus = tuple(
        ym if k in idx else max(xm, ym) for k, (xm, ym) in enumerate(zip(x.minus, y.minus))
    )
    return SignedPair(plus, minus)


def tie_indices(x, y) -> frozenset[int]:
    """Indices with ``x-_k == y+_k`` finite; ties at ``-inf`` cancel nothing."""
    x, y = _as_pair(x), _as_pair(y)
    return frozenset(k for k in range(x.dim) if x.minus[k] == y.plus[k] != NEG_INF)


def hat_oplus(x, y) -> SignedPair:
    """Cancellation sum on every tie index ``x-_k == y+_k`` at once."""
    x, y = _as_pair(x), _as_pair(y)
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    return _cancel(x, y, tie_indices(x, y))


def hat_oplus_vee(x, y) -> SignedPair:
    """The bend addition: :func:`hat_oplus` followed by :func:`vee_map`."""
    return vee_map(hat_oplus(x, y))


def pair_leq(x, y) -> bool:
    """Coordinatewise ``x ⪯ y`` for signed pairs: ``x+ <= y+`` and ``y- <= x-``."""
    x, y = _as_pair(x), _as_pair(y)
    return all(a <= b for a, b in zip(x.plus, y.plus)) and all(
        b <= a for a, b in zip(x.minus, y.minus)
    )


# -- bend cone axioms -------------------------------------------------------

PairSet = Union[Callable[[SignedPair], bool], Iterable]


@dataclass
class AxiomReport:
    status: str
    samples_run: int
    violations: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.status == "consistent"

    @property
    def counterexample(self) -> Optional[dict]:
        for axiom in ("i", "ii", "iii", "iv"):
            if axiom in self.violations:
                return {"axiom": axiom, **self.violations[axiom]}
        return None


def _membership(r: PairSet):
    if callable(r):
        return r, None
    listed = [_as_pair(p) for p in r]
    members = set(listed)
    return members.__contains__, listed


def check_bend_axioms(
    r: PairSet,
    samples: Optional[Sequence] = None,
    *,
    dim: Optional[int] = None,
    scalars: Sequence[TropNum] = (NEG_INF, -2, -1, 0, 1, 2),
    plus_budget: int = 20,
    rng: Optional[random.Random] = None,
) -> AxiomReport:
    """Check the four signed bend cone axioms on a finite sample.

    ``r`` is either a finite collection of signed pairs or a membership
    predicate.  ``samples`` are elements of ``r`` that the closure axioms are
    exercised on; for a finite ``r`` they default to ``r`` itself.  Each axiom
    keeps its first counterexample under the fixed sample ordering.
    """
    member, listed = _membership(r)
    if samples is None:
        if listed is None:
            raise ValueError("a predicate needs explicit samples")
        samples = listed
    samples = [_as_pair(s) for s in samples]
    for s in samples:
        if not s.is_signed:
            raise TropicalError(f"unsigned pair in sample: {s}")
    if dim is None:
        if not samples:
            raise ValueError("cannot infer the dimension")
        dim = samples[0].dim
    rng = rng or random.Random(0)
    violations: dict = {}
    runs = 0

    def fail(axiom, **data):
        violations.setdefault(axiom, data)

    grid = [NEG_INF, -2, -1, 0, 1, 2]
    zero = (NEG_INF,) * dim
    for _ in range(plus_budget):
        xp = tuple(rng.choice(grid) for _ in range(dim))
        runs += 1
        if not member(SignedPair(xp, zero)):
            fail("i", pair=SignedPair(xp, zero))
            break
    for s in samples:
        for lam in scalars:
            runs += 1
            if not member(s.scale(lam)):
                fail("ii", pair=s, scalar=lam)
                break
    for x in samples:
        for y in samples:
            runs += 1
            if not member(vee_map(x + y)):
                fail("iii", x=x, y=y)
            for i in sorted(tie_indices(x, y)):
                runs += 1
                if not member(vee_map(oplus_i(x, y, i))):
                    fail("iv", x=x, y=y, index=i)
    status = "consistent" if not violations else "violated"
    return AxiomReport(status, runs, violations)


def polar_predicate(points: Sequence[TropVec]) -> Callable[[SignedPair], bool]:
    """Membership predicate for the signed part of the two-sided polar."""
    pts = [tuple(rational(v) for v in a) for a in points]

    def member(p: SignedPair) -> bool:
        return p.is_signed and two_sided_contains(pts, p)

    return member


def saturate_diagonal(r: PairSet) -> Callable[[object], bool]:
    """Membership test for ``R ⊕ Δⁿ`` built from a signed bend cone ``R``.

    A query ``f`` is split as ``f = f^∨ ⊕ (c, c)`` with ``c = min(f+, f-)``;
    it is a member when ``f^∨`` is.  Pairs with an empty minus part are
    always members.  For a finite ``R`` the listed pairs stand for their
    scaling closure.
    """
    member, listed = _membership(r)

    def in_closure(g: SignedPair) -> bool:
        if listed is None:
            return member(g)
        return any(_is_multiple(g, s) for s in listed)

    def contains(f) -> bool:
        g = vee_map(_as_pair(f))
        if all(v == NEG_INF for v in g.minus):
            return True
        return in_closure(g)

    return contains


def _is_multiple(g: SignedPair, s: SignedPair) -> bool:
    gv = g.plus + g.minus
    sv = s.plus + s.minus
    if any((a == NEG_INF) != (b == NEG_INF) for a, b in zip(gv, sv)):
        return False
    shifts = {a - b for a, b in zip(gv, sv) if a != NEG_INF}
    return len(shifts) <= 1


def diagonal_split(f) -> tuple[SignedPair, TropVec]:
    """``f = f^∨ ⊕ (c, c)`` with ``c_i = min(f+_i, f-_i)``."""
    f = _as_pair(f)
    c = tuple(min(p, m) for p, m in zip(f.plus, f.minus))
    return vee_map(f), c


# -- projection and separation ----------------------------------------------


def _residual(a: TropVec, z: TropVec) -> TropNum:
    best = None
    for ai, zi in zip(a, z):
        if ai == NEG_INF:
            continue
        if zi == NEG_INF:
            return NEG_INF
        d = zi - ai
        if best is None or d < best:
            best = d
    return NEG_INF if best is None else best


def project_onto_hull(points: Sequence[TropVec], z: TropVec) -> TropVec:
    """Largest tropical combination of ``points`` below ``z``.

    Generators with empty support are skipped.
    """
    if not points:
        raise ValueError("need at least one generator")
    _check_points(points, len(z))
    proj = (NEG_INF,) * len(z)
    for a in points:
        lam = _residual(a, z)
        if lam == NEG_INF:
            continue
        proj = vmax(proj, _scale(lam, a))
    return proj


def in_hull(points: Sequence[TropVec], z: TropVec) -> bool:
    return project_onto_hull(points, z) == tuple(z)


def separate(points: Sequence[TropVec], z: TropVec) -> Optional[SignedVec]:
    """Signed half-space containing every point but not ``z``.

    Returns ``None`` when ``z`` lies in the tropical cone generated by
    ``points``.  The separator is built from the projection ``P`` of ``z``:
    coordinates where ``P`` reaches ``z`` go to the positive side with
    coefficient ``-P_j``, the others to the negative side.  Coordinates that
    the finite formula cannot handle (``P_j = -inf``) receive finite
    coefficients chosen large enough.  The result is re-verified before it is
    returned.
    """
    z = tuple(rational(v) for v in z)
    points = [tuple(rational(v) for v in a) for a in points]
    proj = project_onto_hull(points, z)
    if proj == z:
        return None
    n = len(z)
    tight = [proj[j] == z[j] for j in range(n)]
    minus = [NEG_INF] * n
    for j in range(n):
        if not tight[j]:
            minus[j] = -proj[j] if proj[j] != NEG_INF else 1 - z[j]
    plus = [NEG_INF] * n
    for j in range(n):
        if tight[j] and z[j] != NEG_INF:
            plus[j] = -z[j]
    # coordinates where z vanishes: any coefficient keeps z strictly violating,
    # so pick one large enough to cover every generator touching them
    for j in range(n):
        if tight[j] and z[j] == NEG_INF:
            need = [
                dot_trop(minus, a) - a[j]
                for a in points
                if a[j] != NEG_INF and dot_trop(minus, a) != NEG_INF
            ]
            if any(a[j] != NEG_INF for a in points):
                plus[j] = max([0, *need])
    u = join_signed(tuple(plus), tuple(minus))
    if not polar_contains(points, u):
        raise TropicalError("separator construction failed: a generator violates it")
    if geq(dot_signed(u, z), ZERO):
        raise TropicalError("separator construction failed: z satisfies it")
    return u


# -- sampling ---------------------------------------------------------------


def random_signed_vec(
    rng: random.Random,
    n: int,
    magnitudes: Sequence[TropNum] = (-3, -2, -1, 0, 1, 2, 3),
    p_zero: float = 0.2,
) -> SignedVec:
    out = []
    for _ in range(n):
        if rng.random() < p_zero:
            out.append(ZERO)
        else:
            m = rng.choice(magnitudes)
            out.append(Pos(m) if rng.random() < 0.5 else Neg(m))
    return tuple(out)


def sample_polar(
    points: Sequence[TropVec],
    count: int,
    rng: random.Random,
    magnitudes: Sequence[TropNum] = (-3, -2, -1, 0, 1, 2, 3),
    max_tries: int = 100_000,
) -> list[SignedVec]:
    """Rejection-sample ``count`` members of the signed polar of ``points``."""
    if not points:
        raise ValueError("need at least one point")
    n = len(points[0])
    out: list[SignedVec] = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError(f"only {len(out)} polar members found in {max_tries} draws")
        x = random_signed_vec(rng, n, magnitudes)
        if polar_contains(points, x):
            out.append(x)
    return out


def random_point(
    rng: random.Random, n: int, magnitudes=(-2, -1, 0, 1, 2), p_inf: float = 0.2
) -> TropVec:
    return tuple(NEG_INF if rng.random() < p_inf else rng.choice(magnitudes) for _ in range(n))
