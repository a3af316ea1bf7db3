"""Seeded random carriers, elements and equations shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from rieszlex.groups import Free, Int, Lex, Mat, Matrix, Prod, Rat, Trivial, Word, is_positive
from rieszlex.rdp import Equation

Z, Q, M = Int(), Rat(), Matrix()
ZZ = Prod((Z, Z))
QQ_STRICT = Prod((Q, Q), strict=True)

SWEEP_CARRIERS = {
    "Int": Z,
    "Rat": Q,
    "Prod(Int,Int)": ZZ,
    "Strict(Rat,Rat)": QQ_STRICT,
    "Lex(Int,Int)": Lex(Z, Z),
    "Lex(Prod(Int,Int),Int)": Lex(ZZ, Z),
    "Lex(Strict(Rat,Rat),Matrix)": Lex(QQ_STRICT, M),
}


def rat(rng: random.Random, lo: int = -4, hi: int = 4) -> Fraction:
    return Fraction(rng.randint(lo * 3, hi * 3), rng.choice((1, 2, 3)))


def element(desc, rng: random.Random):
    match desc:
        case Int():
            return rng.randint(-4, 4)
        case Rat():
            return rat(rng)
        case Matrix():
            return Mat(Fraction(rng.randint(1, 6), rng.choice((1, 2, 3))), rat(rng))
        case Free(k=k):
            return desc.normalize([(rng.randint(1, k), rng.choice((1, -1))) for _ in range(rng.randint(0, 4))])
        case Trivial(child=c):
            return element(c, rng)
        case Prod(children=cs):
            return tuple(element(c, rng) for c in cs)
        case Lex(first=a, second=g):
            return (element(a, rng), element(g, rng))
    raise TypeError(desc)


def positive(desc, rng: random.Random, zero_bias: float = 0.15):
    """A random element >= 0, zero with probability about ``zero_bias``."""
    if rng.random() < zero_bias:
        return desc.zero()
    match desc:
        case Int():
            return rng.randint(0, 5)
        case Rat():
            return Fraction(rng.randint(0, 12), rng.choice((1, 2, 3)))
        case Matrix():
            if rng.random() < 0.3:
                return Mat(1, Fraction(rng.randint(0, 6), rng.choice((1, 2))))
            return Mat(1 + Fraction(rng.randint(1, 6), rng.choice((1, 2, 3))), rat(rng))
        case Prod(children=cs, strict=False):
            return tuple(positive(c, rng, zero_bias) for c in cs)
        case Prod(children=cs, strict=True):
            return tuple(Fraction(rng.randint(1, 12), rng.choice((1, 2, 3))) if isinstance(c, Rat)
                         else rng.randint(1, 5) for c in cs)
        case Lex(first=a, second=g):
            f = positive(a, rng, 0.35)
            s = positive(g, rng, zero_bias) if f == a.zero() else element(g, rng)
            return (f, s)
        case Trivial():
            return desc.zero()
    raise TypeError(desc)


def equation(desc, rng: random.Random, zero_bias: float = 0.15, tries: int = 200) -> Equation:
    """a1 + a2 = b1 + b2 with all four >= 0, drawn by rejection on b2."""
    for _ in range(tries):
        a1, a2, b1 = (positive(desc, rng, zero_bias) for _ in range(3))
        b2 = desc.add(desc.neg(b1), desc.add(a1, a2))
        if is_positive(desc, b2):
            return Equation(a1, a2, b1, b2)
    # fall back to a split of a table, which always exists
    c = [positive(desc, rng, zero_bias) for _ in range(4)]
    if desc.add(c[1], c[2]) != desc.add(c[2], c[1]):
        c[2] = desc.zero()
    return Equation(desc.add(c[0], c[1]), desc.add(c[2], c[3]), desc.add(c[0], c[2]), desc.add(c[1], c[3]))


# ---------------------------------------------------------------------------
# descriptors for the parser round trip
# ---------------------------------------------------------------------------


def descriptor(rng: random.Random, depth: int = 0):
    leaf = depth >= 2 or rng.random() < 0.4
    if leaf:
        kind = rng.choice(("Z", "Q", "Matrix", "Free", "FreeAb"))
        if kind == "Z":
            return Int()
        if kind == "Q":
            return Rat()
        if kind == "Matrix":
            return Matrix()
        k = rng.randint(1, 4)
        vals = tuple(Fraction(rng.randint(1, 4), rng.choice((1, 2, 3))) for _ in range(k))
        return Free(k, vals, kind == "FreeAb")
    kind = rng.choice(("Trivial", "Prod", "Strict", "Lex"))
    if kind == "Trivial":
        return Trivial(descriptor(rng, depth + 1))
    if kind == "Lex":
        return Lex(descriptor(rng, depth + 1), descriptor(rng, depth + 1))
    n = rng.randint(2, 3)
    return Prod(tuple(descriptor(rng, depth + 1) for _ in range(n)), kind == "Strict")


def word(k: int, rng: random.Random) -> Word:
    return Free(k, tuple(Fraction(1) for _ in range(k))).normalize(
        [(rng.randint(1, k), rng.choice((1, -1))) for _ in range(rng.randint(0, 5))]
    )
