"""Carrier groups: descriptors, elements, group operations and partial orders.

A descriptor is an immutable tree describing a po-group.  Elements are plain
Python values whose shape follows the descriptor:

    Int        -> int
    Rat        -> Fraction (ints accepted)
    Matrix     -> Mat(a, b), the matrix [[a, b], [0, 1]] with a > 0
    Free       -> Word (reduced; canonically sorted when ``abelian``)
    Prod, Lex  -> tuple of child elements
    Trivial    -> the child's element

All arithmetic is exact.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator, Sequence, Union

from .errors import ShapeMismatch

Element = Any


@dataclass(frozen=True)
class SearchBudget:
    """Bounds shared by every enumerative procedure."""

    max_abs_coord: int = 6
    max_word_len: int = 4
    max_candidates: int = 4000
    seed: int = 0

    def __post_init__(self):
        for name in ("max_abs_coord", "max_word_len", "max_candidates", "seed"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")

    def to_json(self) -> dict:
        return {
            "max_abs_coord": self.max_abs_coord,
            "max_word_len": self.max_word_len,
            "max_candidates": self.max_candidates,
            "seed": self.seed,
        }


DEFAULT_BUDGET = SearchBudget()


def _frac(x) -> Fraction:
    if isinstance(x, bool):
        raise ShapeMismatch(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise ShapeMismatch(f"not a rational: {x!r}")


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Mat:
    """The affine matrix [[a, b], [0, 1]]; composition is matrix product."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.a <= 0:
            raise ShapeMismatch(f"matrix entry a must be > 0, got {self.a}")

    def __repr__(self):
        return f"M({self.a},{self.b})"


Letter = tuple[int, int]


def reduce_letters(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, sign in letters:
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A reduced word over g1..gk; letters are (generator index, +1/-1)."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def of(cls, *letters: Letter) -> "Word":
        return cls(reduce_letters(letters))

    @classmethod
    def gen(cls, i: int, power: int = 1) -> "Word":
        sign = 1 if power >= 0 else -1
        return cls(((i, sign),) * abs(power))

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        if not self.letters:
            return "e"
        return " ".join(("" if s > 0 else "-") + f"g{i}" for i, s in self.letters)


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------


class Descriptor:
    """Common interface of all carrier descriptors."""

    def zero(self) -> Element:
        raise NotImplementedError

    def check(self, x: Element) -> Element:
        """Return ``x`` normalised, or raise ShapeMismatch."""
        raise NotImplementedError

    def add(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def neg(self, x: Element) -> Element:
        raise NotImplementedError

    def leq(self, x: Element, y: Element) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Int(Descriptor):
    def zero(self):
        return 0

    def check(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise ShapeMismatch(f"Int expects an int, got {x!r}")
        return x

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def leq(self, x, y):
        return x <= y


@dataclass(frozen=True)
class Rat(Descriptor):
    def zero(self):
        return Fraction(0)

    def check(self, x):
        return _frac(x)

    def add(self, x, y):
        return Fraction(x) + y

    def neg(self, x):
        return -Fraction(x)

    def leq(self, x, y):
        return x <= y


@dataclass(frozen=True)
class Matrix(Descriptor):
    """Affine group of the line, linearly ordered by (a, b) lexicographically.

    The positive cone is a > 1 or (a = 1 and b >= 0); since
    -(a,b) + (c,d) = (c/a, (d-b)/a) this is exactly the lexicographic order.
    """

    def zero(self):
        return Mat(1, 0)

    def check(self, x):
        if not isinstance(x, Mat):
            raise ShapeMismatch(f"Matrix expects Mat, got {x!r}")
        return x

    def add(self, x, y):
        return Mat(x.a * y.a, x.a * y.b + x.b)

    def neg(self, x):
        return Mat(1 / x.a, -x.b / x.a)

    def leq(self, x, y):
        return (x.a, x.b) <= (y.a, y.b)


@dataclass(frozen=True)
class Free(Descriptor):
    """Free group on g1..gk ordered by a positive valuation.

    x <= y iff x == y or v(x) < v(y).  With ``abelian=True`` the carrier is the
    free abelian group on the same generators with the same order.
    """

    k: int
    vals: tuple[Fraction, ...]
    abelian: bool = False

    def __post_init__(self):
        vals = tuple(_frac(v) for v in self.vals)
        object.__setattr__(self, "vals", vals)
        if self.k < 1 or len(vals) != self.k:
            raise ShapeMismatch(f"Free needs k >= 1 and k valuations, got k={self.k}, {len(vals)} values")
        if any(v <= 0 for v in vals):
            raise ShapeMismatch("Free valuations must be strictly positive")

    def zero(self):
        return Word()

    def normalize(self, letters: Sequence[Letter]) -> Word:
        if not self.abelian:
            return Word(reduce_letters(letters))
        exps = [0] * (self.k + 1)
        for gen, sign in letters:
            exps[gen] += sign
        out: list[Letter] = []
        for gen in range(1, self.k + 1):
            n = exps[gen]
            out.extend([(gen, 1 if n > 0 else -1)] * abs(n))
        return Word(tuple(out))

    def check(self, x):
        if not isinstance(x, Word):
            raise ShapeMismatch(f"Free expects Word, got {x!r}")
        for gen, sign in x.letters:
            if not 1 <= gen <= self.k or sign not in (1, -1):
                raise ShapeMismatch(f"bad letter {(gen, sign)} for Free({self.k})")
        norm = self.normalize(x.letters)
        if norm != x:
            raise ShapeMismatch(f"word {x!r} is not in normal form")
        return x

    def add(self, x, y):
        return self.normalize(x.letters + y.letters)

    def neg(self, x):
        return self.normalize(tuple((g, -s) for g, s in reversed(x.letters)))

    def valuation(self, x: Word) -> Fraction:
        return sum((s * self.vals[g - 1] for g, s in x.letters), Fraction(0))

    def leq(self, x, y):
        return x == y or self.valuation(x) < self.valuation(y)


@dataclass(frozen=True)
class Prod(Descriptor):
    """Direct product with the componentwise (``strict=False``) or strict order."""

    children: tuple[Descriptor, ...]
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ShapeMismatch("Prod needs at least two children")

    def zero(self):
        return tuple(c.zero() for c in self.children)

    def check(self, x):
        if not isinstance(x, tuple) or len(x) != len(self.children):
            raise ShapeMismatch(f"expected a {len(self.children)}-tuple, got {x!r}")
        return tuple(c.check(v) for c, v in zip(self.children, x))

    def add(self, x, y):
        return tuple(c.add(p, q) for c, p, q in zip(self.children, x, y))

    def neg(self, x):
        return tuple(c.neg(p) for c, p in zip(self.children, x))

    def leq(self, x, y):
        if self.strict:
            return x == y or all(c.leq(p, q) and p != q for c, p, q in zip(self.children, x, y))
        return all(c.leq(p, q) for c, p, q in zip(self.children, x, y))


@dataclass(frozen=True)
class Lex(Descriptor):
    first: Descriptor
    second: Descriptor

    def zero(self):
        return (self.first.zero(), self.second.zero())

    def check(self, x):
        if not isinstance(x, tuple) or len(x) != 2:
            raise ShapeMismatch(f"expected a pair, got {x!r}")
        return (self.first.check(x[0]), self.second.check(x[1]))

    def add(self, x, y):
        return (self.first.add(x[0], y[0]), self.second.add(x[1], y[1]))

    def neg(self, x):
        return (self.first.neg(x[0]), self.second.neg(x[1]))

    def leq(self, x, y):
        if x[0] == y[0]:
            return self.second.leq(x[1], y[1])
        return self.first.leq(x[0], y[0])


@dataclass(frozen=True)
class Trivial(Descriptor):
    """The child's group with the discrete order (positive cone {0})."""

    child: Descriptor

    def zero(self):
        return self.child.zero()

    def check(self, x):
        return self.child.check(x)

    def add(self, x, y):
        return self.child.add(x, y)

    def neg(self, x):
        return self.child.neg(x)

    def leq(self, x, y):
        return x == y


GroupDescriptor = Union[Int, Rat, Matrix, Free, Prod, Lex, Trivial]


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def check(desc: Descriptor, x: Element) -> Element:
    return desc.check(x)


def zero(desc: Descriptor) -> Element:
    return desc.zero()


def add(desc: Descriptor, x: Element, y: Element, *more: Element) -> Element:
    desc.check(x)
    desc.check(y)
    out = desc.add(x, y)
    for z in more:
        out = desc.add(out, desc.check(z))
    return out


def total(desc: Descriptor, *xs: Element) -> Element:
    """Left-to-right sum x1 + x2 + ... (zero for no arguments)."""
    out = desc.zero()
    for x in xs:
        out = desc.add(out, x)
    return out


def neg(desc: Descriptor, x: Element) -> Element:
    return desc.neg(desc.check(x))


def sub(desc: Descriptor, x: Element, y: Element) -> Element:
    """x - y, i.e. x + (-y)."""
    return desc.add(x, desc.neg(y))


def leq(desc: Descriptor, x: Element, y: Element) -> bool:
    desc.check(x)
    desc.check(y)
    return desc.leq(x, y)


def lt(desc: Descriptor, x: Element, y: Element) -> bool:
    return x != y and desc.leq(x, y)


def comparable(desc: Descriptor, x: Element, y: Element) -> bool:
    return desc.leq(x, y) or desc.leq(y, x)


def is_positive(desc: Descriptor, x: Element) -> bool:
    return desc.leq(desc.zero(), x)


def is_strictly_positive(desc: Descriptor, x: Element) -> bool:
    return x != desc.zero() and desc.leq(desc.zero(), x)


def commute(desc: Descriptor, x: Element, y: Element) -> bool:
    return desc.add(x, y) == desc.add(y, x)


def valuation(desc: Descriptor, w: Word) -> Fraction:
    if not isinstance(desc, Free):
        raise ShapeMismatch("valuation is defined on Free carriers only")
    return desc.valuation(desc.check(w))


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------


def is_abelian(desc: Descriptor) -> bool:
    match desc:
        case Int() | Rat():
            return True
        case Matrix():
            return False
        case Free(k=k, abelian=ab):
            return ab or k == 1
        case Prod(children=cs):
            return all(is_abelian(c) for c in cs)
        case Lex(first=a, second=g):
            return is_abelian(a) and is_abelian(g)
        case Trivial(child=c):
            return is_abelian(c)
    raise ShapeMismatch(f"unknown descriptor {desc!r}")


def is_linear(desc: Descriptor) -> bool:
    match desc:
        case Int() | Rat() | Matrix():
            return True
        case Free(k=k):
            # the valuation is injective only on a rank-one carrier
            return k == 1
        case Lex(first=a, second=g):
            return is_linear(a) and is_linear(g)
    return False


def is_dense(desc: Descriptor) -> bool:
    """Every strictly positive pair has an element strictly between it and 0."""
    match desc:
        case Rat() | Matrix():
            return True
        case Prod(children=cs):
            return all(is_dense(c) for c in cs)
        case Lex(second=g):
            return is_dense(g)
    return False


def has_strict_lower_bounds(desc: Descriptor) -> bool:
    match desc:
        case Int() | Rat() | Matrix() | Free():
            return True
        case Prod(children=cs):
            return all(has_strict_lower_bounds(c) for c in cs)
        case Lex(first=a):
            return has_strict_lower_bounds(a)
    return False


def is_directed(desc: Descriptor) -> bool:
    match desc:
        case Int() | Rat() | Matrix() | Free():
            return True
        case Prod(children=cs, strict=True):
            return all(has_strict_lower_bounds(c) for c in cs)
        case Prod(children=cs):
            return all(is_directed(c) for c in cs)
        case Lex(first=a):
            return has_strict_lower_bounds(a)
    # Trivial(child): distinct elements have no common lower bound
    return False


def has_positive_element(desc: Descriptor) -> bool:
    return not isinstance(desc, Trivial)


def some_positive(desc: Descriptor) -> Element:
    """A fixed strictly positive element (raises if the cone is {0})."""
    match desc:
        case Int():
            return 1
        case Rat():
            return Fraction(1)
        case Matrix():
            return Mat(2, 0)
        case Free(vals=vals):
            i = max(range(len(vals)), key=lambda j: (vals[j], -j))
            return Word(((i + 1, 1),))
        case Prod(children=cs):
            return tuple(some_positive(c) for c in cs)
        case Lex(first=a, second=g):
            if has_positive_element(a):
                return (some_positive(a), g.zero())
            return (a.zero(), some_positive(g))
    raise ShapeMismatch(f"{desc!r} has no strictly positive element")


def coordinates(desc: Descriptor) -> tuple[Descriptor, ...]:
    """Factors of a product; a single carrier counts as one factor."""
    if isinstance(desc, Prod) and not desc.strict:
        return desc.children
    return (desc,)


def as_coords(desc: Descriptor, x: Element) -> tuple:
    if isinstance(desc, Prod) and not desc.strict:
        return x
    return (x,)


def from_coords(desc: Descriptor, xs: Sequence[Element]) -> Element:
    if isinstance(desc, Prod) and not desc.strict:
        return tuple(xs)
    (x,) = xs
    return x


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _letter_order(k: int) -> list[Letter]:
    return [(g, s) for g in range(1, k + 1) for s in (1, -1)]


def reduced_words(k: int, max_len: int) -> Iterator[Word]:
    """Every reduced word of length <= max_len, length first then lexicographic."""
    if k < 1:
        raise ValueError("k must be >= 1")
    alphabet = _letter_order(k)

    def extend(prefix: tuple[Letter, ...], remaining: int) -> Iterator[tuple[Letter, ...]]:
        if remaining == 0:
            yield prefix
            return
        for g, s in alphabet:
            if prefix and prefix[-1] == (g, -s):
                continue
            yield from extend(prefix + ((g, s),), remaining - 1)

    for length in range(max_len + 1):
        for letters in extend((), length):
            yield Word(letters)


def reduced_word_count(k: int, max_len: int) -> int:
    return 1 + sum(2 * k * (2 * k - 1) ** (n - 1) for n in range(1, max_len + 1))


def _rat_values(bound: int, denominators: int = 2) -> list[Fraction]:
    vals = {Fraction(p, q) for q in range(1, denominators + 1) for p in range(-bound * q, bound * q + 1)}
    return sorted(vals, key=lambda f: (f.denominator, abs(f), f < 0))


def _combine(lists: Sequence[Sequence[Element]], cap: int, seed: int) -> list[tuple]:
    """Cartesian product ordered by total rank with a seeded tie-break."""
    if not lists:
        return [()]
    per = max(2, int(round(cap ** (1 / len(lists)))) + 1)
    lists = [list(l[:per]) for l in lists]
    rng = random.Random(seed)
    combos = []
    for idx in itertools.product(*(range(len(l)) for l in lists)):
        combos.append((sum(idx), rng.random(), idx))
    combos.sort()
    return [tuple(l[i] for l, i in zip(lists, idx)) for _, _, idx in combos[:cap]]


@lru_cache(maxsize=256)
def _sample(desc: Descriptor, budget: SearchBudget) -> tuple:
    m, cap = budget.max_abs_coord, max(1, budget.max_candidates)
    match desc:
        case Int():
            out = [0]
            for n in range(1, m + 1):
                out += [n, -n]
            return tuple(out[:cap])
        case Rat():
            return tuple(_rat_values(m)[:cap])
        case Matrix():
            pos = sorted({v for v in _rat_values(m) if v > 0}, key=lambda f: (f.denominator, abs(f - 1)))
            pos.remove(1)
            avals = [Fraction(1)] + pos
            pairs = _combine([avals, _rat_values(m)], cap, budget.seed)
            return tuple(Mat(a, b) for a, b in pairs)
        case Free():
            seen: dict[Word, None] = {}
            for w in reduced_words(desc.k, budget.max_word_len):
                seen.setdefault(desc.normalize(w.letters), None)
                if len(seen) >= cap:
                    break
            return tuple(seen)
        case Prod(children=cs):
            return tuple(_combine([_sample(c, budget) for c in cs], cap, budget.seed))
        case Lex(first=a, second=g):
            return tuple(_combine([_sample(a, budget), _sample(g, budget)], cap, budget.seed))
        case Trivial(child=c):
            return _sample(c, budget)
    raise ShapeMismatch(f"unknown descriptor {desc!r}")


def sample_elements(desc: Descriptor, budget: SearchBudget = DEFAULT_BUDGET) -> list[Element]:
    """Deterministic finite sample of the carrier in increasing canonical size."""
    return list(_sample(desc, budget))
