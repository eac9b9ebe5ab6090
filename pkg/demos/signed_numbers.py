"""Signed tropical numbers: arithmetic, the order, and where transitivity breaks."""

from troposign import Bal, Neg, Pos, ZERO, add, balances, leq, mul, neg
from troposign.core import from_pair

print("Pos(2) + Neg(3) =", add(Pos(2), Neg(3)))
print("Pos(2) + Neg(2) =", add(Pos(2), Neg(2)))
print("Pos(2) * Neg(3) =", mul(Pos(2), Neg(3)))
print("Pos(4) - Pos(4) =", add(Pos(4), neg(Pos(4))))

chain = [Pos(1), Pos(0), Pos(-1), ZERO, Neg(-1), Neg(0), Neg(1)]
print("descending chain:", " > ".join(str(x) for x in chain))

# balanced middle terms defeat transitivity
a, b, c = from_pair(5, float("-inf")), from_pair(7, 7), from_pair(4, float("-inf"))
print(f"{a} <= {b}: {leq(a, b)}   {b} <= {c}: {leq(b, c)}   {a} <= {c}: {leq(a, c)}")
print(f"{Bal(5)} balances {Pos(3)}: {balances(Bal(5), Pos(3))}")
