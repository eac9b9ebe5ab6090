"""Deterministic test corpora of cone members, point sets and CNF formulas."""

from __future__ import annotations

import json
import random
from pathlib import Path

from .cones import is_copositive, is_cp, is_psd_signed
from .core import NEG_INF, ZERO, Neg, Pos
from .polar import random_point, sample_polar
from .sat import cnf_satisfiable, format_dimacs, random_3cnf
from .serialize import encode_certificate, encode_matrix, encode_value, encode_vec

KINDS = ("psd", "cp", "copositive", "polar", "sat")
MAGNITUDES = (-2, -1, 0, 1, 2)


def random_signed_symmetric(rng: random.Random, n: int, magnitudes=MAGNITUDES, p_zero=0.15):
    a = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            r = rng.random()
            m = rng.choice(magnitudes)
            v = ZERO if r < p_zero else (Pos(m) if r < (1 + p_zero) / 2 else Neg(m))
            a[i][j] = a[j][i] = v
    return tuple(tuple(r) for r in a)


def random_psd_biased(rng: random.Random, n: int, magnitudes=MAGNITUDES):
    """Signed symmetric matrix with a positive diagonal about half the time."""
    a = [list(r) for r in random_signed_symmetric(rng, n, magnitudes)]
    if rng.random() < 0.5:
        for i in range(n):
            a[i][i] = Pos(rng.choice(magnitudes))
    return tuple(tuple(r) for r in a)


def random_trop_symmetric(rng: random.Random, n: int, magnitudes=MAGNITUDES, p_inf=0.15):
    a = [[NEG_INF] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = NEG_INF if rng.random() < p_inf else rng.choice(magnitudes)
            a[i][j] = a[j][i] = v
    return tuple(tuple(r) for r in a)


def _entry(kind: str, n: int, rng: random.Random) -> tuple[str, str]:
    if kind == "psd":
        m = random_psd_biased(rng, n)
        v = is_psd_signed(m)
        data = {"matrix": encode_matrix(m), "member": v.member, "certificate": encode_certificate(v.certificate)}
    elif kind == "cp":
        m = random_trop_symmetric(rng, n)
        v = is_cp(m)
        data = {"matrix": encode_matrix(m), "member": v.member, "certificate": encode_certificate(v.certificate)}
    elif kind == "copositive":
        m = random_psd_biased(rng, n)
        v = is_copositive(m)
        data = {"matrix": encode_matrix(m), "member": v.member, "certificate": encode_certificate(v.certificate)}
    elif kind == "polar":
        k = rng.randint(1, 4)
        pts = []
        while len(pts) < k:
            a = random_point(rng, n, MAGNITUDES)
            if any(x != NEG_INF for x in a):
                pts.append(a)
        members = sample_polar(pts, 5, rng)
        data = {"A": [encode_vec(a) for a in pts], "members": [encode_vec(x) for x in members]}
    elif kind == "sat":
        nclauses = rng.randint(1, 15)
        cnf = random_3cnf(rng, n, nclauses)
        sat = cnf_satisfiable(cnf, n) is not None
        return format_dimacs(n, cnf, f"satisfiable: {str(sat).lower()}"), "cnf"
    else:
        raise ValueError(f"unknown corpus kind {kind!r}; expected one of {', '.join(KINDS)}")
    return json.dumps(encode_value(data), ensure_ascii=False, indent=1, sort_keys=True) + "\n", "json"


def gen_corpus(kind: str, n: int, count: int, seed: int, out_dir) -> list[Path]:
    """Write ``count`` instances to ``out_dir``; identical inputs give identical files."""
    if kind not in KINDS:
        raise ValueError(f"unknown corpus kind {kind!r}; expected one of {', '.join(KINDS)}")
    if not 1 <= n <= 6:
        raise ValueError("corpus dimension must satisfy 1 <= n <= 6")
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(f"{kind}/{n}/{seed}")
    paths = []
    for k in range(count):
        text, ext = _entry(kind, n, rng)
        p = out / f"{kind}_n{n}_{k:03d}.{ext}"
        p.write_text(text, encoding="utf-8")
        paths.append(p)
    return paths
