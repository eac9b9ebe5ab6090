"""3-SAT as tropical quadratic feasibility, with an exhaustive checker.

Each boolean variable ``v`` (1-based) gets two unknowns ``x_v`` and ``y_v``
at positions ``2(v-1)`` and ``2(v-1)+1``.  Truth is the tropical ``1``
(``Pos(1)``), falsity the tropical unit ``Pos(0)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .core import ZERO, Neg, Pos, SignedTrop, add, geq, leq, mul

TRUE = Pos(1)
FALSE = Pos(0)
DEFAULT_DOMAIN = (FALSE, TRUE)

LE = "le"
GE = "ge"


@dataclass(frozen=True)
class QuadConstraint:
    """``f(x) = ⊕ x_i A_ij x_j ⊕ b_i x_i ⊕ c`` compared with zero.

    ``quad`` and ``lin`` are sparse: tuples of ``((i, j), A_ij)`` and
    ``(i, b_i)``.  ``rel`` is ``"le"`` for ``f ⪯ 0`` or ``"ge"`` for ``f ⪰ 0``.
    """

    quad: tuple
    lin: tuple
    const: SignedTrop
    rel: str
    label: str = ""

    def __post_init__(self):
        if self.rel not in (LE, GE):
            raise ValueError(f"unknown relation {self.rel!r}")

    @property
    def variables(self) -> frozenset[int]:
        vs = set()
        for (i, j), _ in self.quad:
            vs.update((i, j))
        for i, _ in self.lin:
            vs.add(i)
        return frozenset(vs)

    def value(self, x: Sequence[SignedTrop]) -> SignedTrop:
        acc = self.const
        for (i, j), a in self.quad:
            acc = add(acc, mul(mul(x[i], a), x[j]))
        for i, b in self.lin:
            acc = add(acc, mul(b, x[i]))
        return acc

    def holds(self, x: Sequence[SignedTrop]) -> bool:
        v = self.value(x)
        return leq(v, ZERO) if self.rel == LE else geq(v, ZERO)


@dataclass(frozen=True)
class QuadSystem:
    nvars: int
    constraints: tuple = field(default_factory=tuple)

    def holds(self, x: Sequence[SignedTrop]) -> bool:
        return all(c.holds(x) for c in self.constraints)


def balance_pair(quad, lin, const, label) -> tuple[QuadConstraint, QuadConstraint]:
    """``f ∇ 0`` written as ``f ⪯ 0`` together with ``f ⪰ 0``."""
    quad, lin = tuple(quad), tuple(lin)
    return (
        QuadConstraint(quad, lin, const, LE, label),
        QuadConstraint(quad, lin, const, GE, label),
    )


def x_index(v: int) -> int:
    return 2 * (v - 1)


def y_index(v: int) -> int:
    return 2 * (v - 1) + 1


def _check_cnf(cnf, nvars: int) -> list[tuple[int, ...]]:
    out = []
    for k, clause in enumerate(cnf):
        clause = tuple(clause)
        if not 1 <= len(clause) <= 3:
            raise ValueError(f"clause {k} has {len(clause)} literals, expected 1 to 3")
        for lit in clause:
            if isinstance(lit, bool) or not isinstance(lit, int) or lit == 0:
                raise ValueError(f"clause {k}: bad literal {lit!r}")
            if abs(lit) > nvars:
                raise ValueError(f"clause {k}: variable {abs(lit)} exceeds {nvars}")
        out.append(clause)
    return out


def num_vars(cnf) -> int:
    return max((abs(lit) for clause in cnf for lit in clause), default=0)


def encode_3sat(cnf: Iterable[Sequence[int]], nvars: Optional[int] = None) -> QuadSystem:
    """Encode a CNF with at most three literals per clause.

    Literals are DIMACS integers.  The system holds, in order: for each
    unknown ``s`` the domain constraint ``s² ⊖ 1 s ⊕ 1 ∇ 0``, for each
    variable the link ``x_v y_v ∇ 1``, and for each clause the sum of its
    literal unknowns ``∇ 1`` (``y_v`` stands for ``¬v``).
    """
    cnf = list(cnf)
    if nvars is None:
        nvars = num_vars(cnf)
    clauses = _check_cnf(cnf, nvars)
    cons: list[QuadConstraint] = []
    for v in range(1, nvars + 1):
        for name, s in (("x", x_index(v)), ("y", y_index(v))):
            cons.extend(
                balance_pair([((s, s), Pos(0))], [(s, Neg(1))], Pos(1), f"domain {name}{v}")
            )
    for v in range(1, nvars + 1):
        xi, yi = x_index(v), y_index(v)
        cons.extend(balance_pair([((xi, yi), Pos(0))], [], Neg(1), f"link {v}"))
    for k, clause in enumerate(clauses):
        lits = sorted({x_index(l) if l > 0 else y_index(-l) for l in clause})
        cons.extend(balance_pair([], [(i, Pos(0)) for i in lits], Neg(1), f"clause {k + 1}"))
    return QuadSystem(2 * nvars, tuple(cons))


def decode(witness: Sequence[SignedTrop], nvars: int) -> dict[int, bool]:
    """Boolean assignment read off the ``x`` unknowns of a witness."""
    return {v: witness[x_index(v)] == TRUE for v in range(1, nvars + 1)}


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Optional[tuple] = None
    nodes: int = 0


def feasibility_bruteforce(
    system: QuadSystem, domain: Sequence[SignedTrop] = DEFAULT_DOMAIN
) -> Feasibility:
    """Exhaustive search over ``domain`` for every unknown.

    Assignments are enumerated in lexicographic order of domain indices and
    each constraint is checked as soon as its last unknown is set, so the
    first witness in that order is returned.  Exact for finite domains; for
    SAT encodings the default domain loses nothing since the domain
    constraints force it.
    """
    domain = tuple(domain)
    if not domain:
        raise ValueError("empty domain")
    n = system.nvars
    due: list[list[QuadConstraint]] = [[] for _ in range(n + 1)]
    for c in system.constraints:
        vs = c.variables
        due[(max(vs) + 1) if vs else 0].append(c)
    x = [ZERO] * n
    nodes = 0
    # constant constraints decide everything up front
    if not all(c.holds(x) for c in due[0]):
        return Feasibility(False, None, 0)

    def search(k: int) -> bool:
        nonlocal nodes
        if k == n:
            return True
        for d in domain:
            nodes += 1
            x[k] = d
            if all(c.holds(x) for c in due[k + 1]) and search(k + 1):
                return True
        x[k] = ZERO
        return False

    if search(0):
        return Feasibility(True, tuple(x), nodes)
    return Feasibility(False, None, nodes)


def cnf_satisfiable(cnf: Sequence[Sequence[int]], nvars: Optional[int] = None) -> Optional[dict]:
    """Exhaustive boolean check; returns a satisfying assignment or ``None``."""
    if nvars is None:
        nvars = num_vars(cnf)
    for bits in product((False, True), repeat=nvars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in clause) for clause in cnf):
            return {v + 1: bits[v] for v in range(nvars)}
    return None


def satisfies(cnf, assignment: dict[int, bool]) -> bool:
    return all(any(assignment[abs(l)] == (l > 0) for l in clause) for clause in cnf)


# -- DIMACS -----------------------------------------------------------------


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Read a DIMACS CNF file; returns ``(nvars, clauses)``."""
    nvars = None
    nclauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("c") or s.startswith("%"):
            continue
        if s.startswith("p"):
            parts = s.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: bad problem line {s!r}")
            nvars, nclauses = int(parts[2]), int(parts[3])
            continue
        if nvars is None:
            raise ValueError(f"line {lineno}: clause before the problem line")
        for tok in s.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ValueError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if nvars is None:
        raise ValueError("missing problem line")
    if current:
        clauses.append(tuple(current))
    if nclauses is not None and len(clauses) != nclauses:
        raise ValueError(f"problem line announces {nclauses} clauses, found {len(clauses)}")
    _check_cnf(clauses, nvars)
    return nvars, clauses


def format_dimacs(nvars: int, clauses: Sequence[Sequence[int]], comment: str = "") -> str:
    lines = [f"c {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"p cnf {nvars} {len(clauses)}")
    lines.extend(" ".join(str(l) for l in cl) + " 0" for cl in clauses)
    return "\n".join(lines) + "\n"


def random_3cnf(rng, nvars: int, nclauses: int) -> list[tuple[int, ...]]:
    """Uniform random clauses of three distinct variables (fewer if ``nvars < 3``)."""
    k = min(3, nvars)
    return [
        tuple(v if rng.random() < 0.5 else -v for v in rng.sample(range(1, nvars + 1), k))
        for _ in range(nclauses)
    ]
