"""Max-plus numbers and the symmetrized tropical semiring.

A tropical number (``TropNum``) is an exact rational, stored as ``int`` or
``fractions.Fraction``, or the tropical zero ``NEG_INF``.  Finite values never
pass through floating point; ``NEG_INF`` is the float ``-inf`` only because it
compares and adds correctly against ints and Fractions.

Elements of the symmetrized semiring are :class:`SignedTrop` instances.  Each
one is the canonical representative of a class of pairs ``(a+, a-)``:

====== ================= =================
kind   pair              meaning
====== ================= =================
``z``  (-inf, -inf)      zero
``+``  (m, -inf)         positive ``m``
``-``  (-inf, m)         negative ``m``
``o``  (m, m)            balanced ``m``
====== ================= =================

plus the two extended elements ``TOP`` and ``BOT`` used as optimization values.

Operators: ``a + b`` is the tropical sum, ``a * b`` the tropical product,
``-a`` the symmetry, ``a - b`` is ``a + (-b)`` and ``a ** k`` is a tropical
power.  The order relations are *not* bound to ``<``/``<=`` because they are
not transitive on the whole semiring; use :func:`leq`, :func:`lt` and
:func:`balances`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

NEG_INF = float("-inf")

TropNum = Union[int, Fraction, float]

ZERO_KIND = "z"
POS_KIND = "+"
NEG_KIND = "-"
BAL_KIND = "o"
TOP_KIND = "top"
BOT_KIND = "bot"

_KINDS = (ZERO_KIND, POS_KIND, NEG_KIND, BAL_KIND, TOP_KIND, BOT_KIND)
_WITH_MAG = (POS_KIND, NEG_KIND, BAL_KIND)


class TropicalError(ValueError):
    """Raised when an operation is undefined on its arguments."""


def rational(x) -> TropNum:
    """Coerce ``x`` to an exact rational, or to ``NEG_INF``.

    Accepts ints, Fractions, decimal or fraction strings (``"3/2"``,
    ``"-0.25"``, ``"-inf"``) and finite floats (read through their shortest
    decimal repr, so ``0.1`` becomes ``1/10``).
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not tropical numbers")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, float):
        if x == NEG_INF:
            return NEG_INF
        if x != x or x == float("inf"):
            raise TropicalError(f"{x!r} is not a tropical number")
        return rational(Fraction(repr(x)))
    if isinstance(x, str):
        s = x.strip()
        if s in ("-inf", "-Infinity", "-∞"):
            return NEG_INF
        return rational(Fraction(s))
    if isinstance(x, Rational):
        return rational(Fraction(x.numerator, x.denominator))
    raise TypeError(f"cannot read {x!r} as a tropical number")


def is_finite(x: TropNum) -> bool:
    return x != NEG_INF


def half(x: TropNum) -> TropNum:
    """Tropical square root of a max-plus number."""
    if x == NEG_INF:
        return NEG_INF
    return rational(Fraction(x) / 2)


class SignedTrop:
    """An element of the symmetrized tropical semiring, or ``TOP``/``BOT``.

    Build values with :func:`Pos`, :func:`Neg`, :func:`Bal` or the constants
    ``ZERO``, ``ONE``, ``TOP``, ``BOT``.  Instances are immutable and hashable.
    """

    __slots__ = ("kind", "mag")

    def __init__(self, kind: str, mag=None):
        if kind not in _KINDS:
            raise TropicalError(f"unknown kind {kind!r}")
        if kind in _WITH_MAG:
            if mag is None:
                raise TropicalError(f"kind {kind!r} needs a magnitude")
            mag = rational(mag)
            if mag == NEG_INF:
                # (-inf, -inf) and its relatives all collapse to zero
                kind, mag = ZERO_KIND, None
        elif mag is not None:
            raise TropicalError(f"kind {kind!r} carries no magnitude")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "mag", mag)

    @classmethod
    def _raw(cls, kind, mag):
        obj = object.__new__(cls)
        object.__setattr__(obj, "kind", kind)
        object.__setattr__(obj, "mag", mag)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("SignedTrop is immutable")

    def __reduce__(self):
        return (SignedTrop, (self.kind, self.mag))

    def __eq__(self, other):
        if not isinstance(other, SignedTrop):
            return NotImplemented
        return self.kind == other.kind and self.mag == other.mag

    def __hash__(self):
        return hash((self.kind, self.mag))

    def __repr__(self):
        if self.kind == ZERO_KIND:
            return "ZERO"
        if self.kind == TOP_KIND:
            return "TOP"
        if self.kind == BOT_KIND:
            return "BOT"
        name = {POS_KIND: "Pos", NEG_KIND: "Neg", BAL_KIND: "Bal"}[self.kind]
        return f"{name}({self.mag!s})"

    def __str__(self):
        if self.kind == ZERO_KIND:
            return "𝟘"
        if self.kind == TOP_KIND:
            return "⊤"
        if self.kind == BOT_KIND:
            return "⊥"
        prefix = {POS_KIND: "", NEG_KIND: "⊖", BAL_KIND: "•"}[self.kind]
        return f"{prefix}{self.mag!s}"

    # refuse the classical comparison operators: the tropical order is partial
    def __lt__(self, other):
        raise TypeError("use troposign.lt / leq; the order is not transitive")

    __le__ = __gt__ = __ge__ = __lt__

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        return add(self, neg(other))

    def __pow__(self, k: int):
        return power(self, k)

    @property
    def pair(self) -> tuple[TropNum, TropNum]:
        return to_pair(self)


def Pos(m) -> SignedTrop:  # noqa: N802 - mirrors the variant names
    return SignedTrop(POS_KIND, m)


def Neg(m) -> SignedTrop:  # noqa: N802
    return SignedTrop(NEG_KIND, m)


def Bal(m) -> SignedTrop:  # noqa: N802
    return SignedTrop(BAL_KIND, m)


ZERO = SignedTrop._raw(ZERO_KIND, None)
ONE = SignedTrop._raw(POS_KIND, 0)
MINUS_ONE = SignedTrop._raw(NEG_KIND, 0)
TOP = SignedTrop._raw(TOP_KIND, None)
BOT = SignedTrop._raw(BOT_KIND, None)

_EXTENDED = (TOP_KIND, BOT_KIND)


def from_trop(x: TropNum) -> SignedTrop:
    """Embed a max-plus number as a positive element."""
    x = rational(x)
    if x == NEG_INF:
        return ZERO
    return SignedTrop._raw(POS_KIND, x)


def to_pair(a: SignedTrop) -> tuple[TropNum, TropNum]:
    k = a.kind
    if k == POS_KIND:
        return (a.mag, NEG_INF)
    if k == NEG_KIND:
        return (NEG_INF, a.mag)
    if k == BAL_KIND:
        return (a.mag, a.mag)
    if k == ZERO_KIND:
        return (NEG_INF, NEG_INF)
    raise TropicalError("extended elements have no pair representative")


def from_pair(plus: TropNum, minus: TropNum) -> SignedTrop:
    """Project a pair of max-plus numbers onto its canonical class."""
    if plus > minus:
        return SignedTrop._raw(POS_KIND, plus)
    if minus > plus:
        return SignedTrop._raw(NEG_KIND, minus)
    if plus == NEG_INF:
        return ZERO
    return SignedTrop._raw(BAL_KIND, plus)


def add(a: SignedTrop, b: SignedTrop) -> SignedTrop:
    if a.kind in _EXTENDED or b.kind in _EXTENDED:
        if a.kind == TOP_KIND or b.kind == TOP_KIND:
            return TOP
        raise TropicalError("sum with ⊥ is undefined")
    ap, am = to_pair(a)
    bp, bm = to_pair(b)
    return from_pair(ap if ap > bp else bp, am if am > bm else bm)


def mul(a: SignedTrop, b: SignedTrop) -> SignedTrop:
    ka, kb = a.kind, b.kind
    if ka == ZERO_KIND or kb == ZERO_KIND:
        return ZERO
    if ka in _EXTENDED or kb in _EXTENDED:
        return _mul_extended(a, b)
    m = a.mag + b.mag
    if ka == BAL_KIND or kb == BAL_KIND:
        return SignedTrop._raw(BAL_KIND, m)
    if ka == kb:
        return SignedTrop._raw(POS_KIND, m)
    return SignedTrop._raw(NEG_KIND, m)


def _mul_extended(a: SignedTrop, b: SignedTrop) -> SignedTrop:
    def sgn(x):
        if x.kind in (POS_KIND, TOP_KIND):
            return 1
        if x.kind in (NEG_KIND, BOT_KIND):
            return -1
        raise TropicalError("product of ⊤/⊥ with a balanced element is undefined")

    return TOP if sgn(a) * sgn(b) > 0 else BOT


def neg(a: SignedTrop) -> SignedTrop:
    """The symmetry map: swaps positive and negative parts."""
    k = a.kind
    if k == POS_KIND:
        return SignedTrop._raw(NEG_KIND, a.mag)
    if k == NEG_KIND:
        return SignedTrop._raw(POS_KIND, a.mag)
    if k == TOP_KIND:
        return BOT
    if k == BOT_KIND:
        return TOP
    return a


def power(a: SignedTrop, k: int) -> SignedTrop:
    if k < 0:
        return power(inverse(a), -k)
    out = ONE
    for _ in range(k):
        out = mul(out, a)
    return out


def inverse(a: SignedTrop) -> SignedTrop:
    """Multiplicative inverse of a signed nonzero element."""
    if a.kind == POS_KIND:
        return SignedTrop._raw(POS_KIND, -a.mag)
    if a.kind == NEG_KIND:
        return SignedTrop._raw(NEG_KIND, -a.mag)
    raise TropicalError(f"{a!r} has no inverse")


def modulus(a: SignedTrop) -> TropNum:
    if a.kind in _EXTENDED:
        raise TropicalError("modulus undefined on extended elements")
    return NEG_INF if a.kind == ZERO_KIND else a.mag


def leq(a: SignedTrop, b: SignedTrop) -> bool:
    """``a ⪯ b``, i.e. ``a+ ⊕ b- <= a- ⊕ b+`` on pair representatives.

    ``BOT`` is below and ``TOP`` above every element.
    """
    if a.kind in _EXTENDED or b.kind in _EXTENDED:
        return a.kind == BOT_KIND or b.kind == TOP_KIND
    ap, am = to_pair(a)
    bp, bm = to_pair(b)
    return max(ap, bm) <= max(am, bp)


def lt(a: SignedTrop, b: SignedTrop) -> bool:
    """``a ≺ b``, i.e. ``a+ ⊕ b- < a- ⊕ b+``."""
    if a.kind in _EXTENDED or b.kind in _EXTENDED:
        if a.kind == b.kind:
            return False
        return a.kind == BOT_KIND or b.kind == TOP_KIND
    ap, am = to_pair(a)
    bp, bm = to_pair(b)
    return max(ap, bm) < max(am, bp)


def geq(a: SignedTrop, b: SignedTrop) -> bool:
    return leq(b, a)


def gt(a: SignedTrop, b: SignedTrop) -> bool:
    return lt(b, a)


def balances(a: SignedTrop, b: SignedTrop) -> bool:
    """``a ∇ b``, i.e. ``a+ ⊕ b- == a- ⊕ b+``."""
    if a.kind in _EXTENDED or b.kind in _EXTENDED:
        raise TropicalError("balance relation undefined on extended elements")
    ap, am = to_pair(a)
    bp, bm = to_pair(b)
    return max(ap, bm) == max(am, bp)


def sign_class(a: SignedTrop) -> str:
    return {
        ZERO_KIND: "zero",
        POS_KIND: "positive",
        NEG_KIND: "negative",
        BAL_KIND: "balanced",
        TOP_KIND: "top",
        BOT_KIND: "bot",
    }[a.kind]


def is_signed(a: SignedTrop) -> bool:
    return a.kind in (ZERO_KIND, POS_KIND, NEG_KIND)


def is_balanced(a: SignedTrop) -> bool:
    """Membership in the balanced part, which contains zero."""
    return a.kind in (ZERO_KIND, BAL_KIND)


def positive_part(a: SignedTrop) -> TropNum:
    """``a+`` of the canonical decomposition ``a = a+ ⊖ a-`` of a signed element."""
    if a.kind == POS_KIND:
        return a.mag
    if a.kind in (NEG_KIND, ZERO_KIND):
        return NEG_INF
    raise TropicalError(f"{a!r} is not signed")


def negative_part(a: SignedTrop) -> TropNum:
    if a.kind == NEG_KIND:
        return a.mag
    if a.kind in (POS_KIND, ZERO_KIND):
        return NEG_INF
    raise TropicalError(f"{a!r} is not signed")


def sqrt_pos(a: SignedTrop) -> SignedTrop:
    if a.kind == ZERO_KIND:
        return ZERO
    if a.kind != POS_KIND:
        raise TropicalError("square root needs a positive argument")
    return SignedTrop._raw(POS_KIND, half(a.mag))


def tsum(values, start: SignedTrop = ZERO) -> SignedTrop:
    """Tropical sum of an iterable of signed elements."""
    out = start
    for v in values:
        out = add(out, v)
    return out
