"""JSON encoding of tropical and signed values.

Signed scalars are objects ``{"s": sign, "m": magnitude}`` with sign one of
``"+" "-" "o" "z" "top" "bot"``; ``"m"`` is absent for zero and the extended
elements.  Max-plus numbers are strings, ``"-inf"`` for the tropical zero.
Magnitudes are written as exact rationals (``"3/2"``); decimal strings
(``"1.5"``) are accepted on input.
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    BOT,
    NEG_INF,
    TOP,
    ZERO,
    SignedTrop,
    TropicalError,
    from_trop,
    rational,
)
from .polar import SignedPair


def encode_trop(x) -> str:
    x = rational(x)
    return "-inf" if x == NEG_INF else str(x)


def decode_trop(obj):
    if isinstance(obj, bool):
        raise TropicalError(f"not a tropical number: {obj!r}")
    if isinstance(obj, (int, str, Fraction)):
        return rational(obj)
    if isinstance(obj, float):
        return rational(obj)
    if obj is None:
        return NEG_INF
    raise TropicalError(f"not a tropical number: {obj!r}")


def encode_scalar(a: SignedTrop) -> dict:
    if not isinstance(a, SignedTrop):
        raise TypeError(f"not a signed value: {a!r}")
    if a.mag is None:
        return {"s": a.kind}
    return {"s": a.kind, "m": str(a.mag)}


def decode_scalar(obj) -> SignedTrop:
    """Read a signed scalar; a bare number is read as a positive value."""
    if isinstance(obj, SignedTrop):
        return obj
    if isinstance(obj, dict):
        s = obj.get("s")
        if s == "z":
            return ZERO
        if s == "top":
            return TOP
        if s == "bot":
            return BOT
        if s in ("+", "-", "o"):
            if "m" not in obj:
                raise TropicalError(f"scalar {obj!r} needs a magnitude")
            m = rational(obj["m"])
            return SignedTrop(s, m)
        raise TropicalError(f"unknown sign {s!r}")
    return from_trop(decode_trop(obj))


def encode_vec(v) -> list:
    return [encode_scalar(a) if isinstance(a, SignedTrop) else encode_trop(a) for a in v]


def encode_matrix(m) -> list:
    return [encode_vec(row) for row in m]


def decode_signed_vec(obj) -> tuple:
    _need_list(obj, "vector")
    return tuple(decode_scalar(a) for a in obj)


def decode_trop_vec(obj) -> tuple:
    _need_list(obj, "vector")
    return tuple(decode_trop(a) for a in obj)


def decode_signed_matrix(obj) -> tuple:
    _need_list(obj, "matrix")
    return tuple(decode_signed_vec(r) for r in obj)


def decode_trop_matrix(obj) -> tuple:
    """Read a max-plus matrix; signed entries must be positive or zero."""
    _need_list(obj, "matrix")
    out = []
    for row in obj:
        _need_list(row, "matrix row")
        r = []
        for a in row:
            if isinstance(a, dict):
                v = decode_scalar(a)
                if v.kind not in ("+", "z"):
                    raise TropicalError(f"entry {v} is not a max-plus number")
                r.append(NEG_INF if v.kind == "z" else v.mag)
            else:
                r.append(decode_trop(a))
        out.append(tuple(r))
    return tuple(out)


def encode_pair(p: SignedPair) -> dict:
    return {"plus": [encode_trop(v) for v in p.plus], "minus": [encode_trop(v) for v in p.minus]}


def decode_pair(obj) -> SignedPair:
    if isinstance(obj, dict):
        return SignedPair(decode_trop_vec(obj["plus"]), decode_trop_vec(obj["minus"]))
    return SignedPair.from_vec(decode_signed_vec(obj))


def encode_fraction(q) -> str:
    return str(Fraction(q))


def encode_value(obj):
    """Recursively turn library values into JSON-compatible data."""
    if isinstance(obj, SignedTrop):
        return encode_scalar(obj)
    if isinstance(obj, SignedPair):
        return encode_pair(obj)
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, float):
        return "-inf" if obj == NEG_INF else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): encode_value(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode_value(v) for v in obj]
    raise TypeError(f"cannot encode {obj!r}")


def _need_list(obj, what) -> None:
    if not isinstance(obj, list):
        raise TropicalError(f"expected a JSON array for the {what}, got {type(obj).__name__}")


def encode_certificate(cert: dict) -> dict:
    """Certificate as JSON, with index entries shifted to 1-based."""
    out = {}
    for k, v in cert.items():
        out[k] = v + 1 if k in ("i", "j", "index") and isinstance(v, int) else encode_value(v)
    return out
