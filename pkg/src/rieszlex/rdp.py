"""RDP tables, their verification, and the RDP0 / interpolation constructions.

A table refines two decompositions of one element:

            b1    b2
      a1   c11   c12
      a2   c21   c22

with a1 = c11 + c12, a2 = c21 + c22, b1 = c11 + c21, b2 = c12 + c22 (operand
order as written, which matters on non-abelian carriers).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import (
    ConstructionFailed,
    InvalidEquation,
    NoRuleApplies,
    NotApplicable,
    NotFound,
    SolverFailed,
    Unsupported,
)
from .groups import (
    DEFAULT_BUDGET,
    Descriptor,
    Element,
    Int,
    Lex,
    Prod,
    Rat,
    SearchBudget,
    Trivial,
    commute,
    comparable,
    is_abelian,
    is_linear,
    is_positive,
    is_strictly_positive,
    sample_elements,
    sub,
    total,
)
from .props import antilattice_status, strict_between
from .verdict import Status, Verdict


@dataclass(frozen=True)
class Equation:
    """a1 + a2 = b1 + b2."""

    a1: Element
    a2: Element
    b1: Element
    b2: Element

    def elements(self) -> tuple:
        return (self.a1, self.a2, self.b1, self.b2)

    def validate(self, desc: Descriptor, positive: bool = True) -> "Equation":
        for x in self.elements():
            desc.check(x)
        if desc.add(self.a1, self.a2) != desc.add(self.b1, self.b2):
            raise InvalidEquation(f"{self.a1!r} + {self.a2!r} != {self.b1!r} + {self.b2!r}")
        if positive and not all(is_positive(desc, x) for x in self.elements()):
            raise InvalidEquation("table solving needs all four elements >= 0")
        return self


@dataclass(frozen=True)
class RdpTable:
    c11: Element
    c12: Element
    c21: Element
    c22: Element
    equation: Equation

    def entries(self) -> tuple:
        return (self.c11, self.c12, self.c21, self.c22)


@dataclass(frozen=True)
class TableReport:
    sums_ok: bool
    positivity: tuple[bool, bool, bool, bool]
    rdp1: Verdict | None = None
    rdp2: Verdict | None = None

    @property
    def is_rdp_table(self) -> bool:
        return self.sums_ok and all(self.positivity)


def sums_hold(desc: Descriptor, t: RdpTable) -> bool:
    e = t.equation
    return (
        e.a1 == desc.add(t.c11, t.c12)
        and e.a2 == desc.add(t.c21, t.c22)
        and e.b1 == desc.add(t.c11, t.c21)
        and e.b2 == desc.add(t.c12, t.c22)
    )


def verify_table(
    desc: Descriptor, table: RdpTable, budget: SearchBudget = DEFAULT_BUDGET, properties: bool = True
) -> TableReport:
    """Re-check a table from scratch; optionally attach RDP1/RDP2 verdicts."""
    for x in table.entries() + table.equation.elements():
        desc.check(x)
    ok = sums_hold(desc, table)
    pos = tuple(is_positive(desc, c) for c in table.entries())
    if not (properties and ok and all(pos)):
        return TableReport(ok, pos)
    return TableReport(ok, pos, check_rdp1_com(desc, table, budget), check_rdp2_meet(desc, table, budget))


# ---------------------------------------------------------------------------
# lower intervals
# ---------------------------------------------------------------------------


def _interval(desc: Descriptor, c: Element, budget: SearchBudget) -> tuple[list, bool]:
    """Elements of [0, c] and whether the list is the whole interval."""
    cap = max(1, budget.max_candidates)
    z = desc.zero()
    match desc:
        case Int():
            return list(range(0, c + 1))[:cap], c + 1 <= cap
        case Trivial():
            return [z], True
        case Prod(children=cs, strict=False):
            parts = [_interval(ch, v, budget) for ch, v in zip(cs, c)]
            combos = list(itertools.islice(itertools.product(*(p for p, _ in parts)), cap))
            total_size = 1
            for p, _ in parts:
                total_size *= len(p)
            return [tuple(t) for t in combos], all(ex for _, ex in parts) and total_size <= cap
        case Prod(children=cs, strict=True):
            if c == z:
                return [z], True
            inner = [[v for v in _interval(ch, x, budget)[0] if v != ch.zero() and v != x] for ch, x in zip(cs, c)]
            out = [z, c] + [tuple(t) for t in itertools.islice(itertools.product(*inner), cap)]
            return _dedupe(out)[:cap], False
        case Lex(first=a, second=g):
            za, zg = a.zero(), g.zero()
            gs = sample_elements(g, budget)
            out = [z, c]
            out += [(za, x) for x in gs if g.leq(zg, x) and (c[0] != za or g.leq(x, c[1]))]
            out += [(c[0], x) for x in gs if g.leq(x, c[1]) and (c[0] != za or g.leq(zg, x))]
            if c[0] != za:
                firsts = [v for v in _interval(a, c[0], budget)[0] if v != za and v != c[0]]
                out += [(f, x) for f in firsts for x in gs[:8]]
            out = [v for v in _dedupe(out) if desc.leq(z, v) and desc.leq(v, c)]
            return out[:cap], False
        case Rat():
            m = max(1, min(budget.max_abs_coord, 12))
            return _dedupe([z, c] + [c * Fraction(j, m) for j in range(1, m)]), False
    pool = [z, c] + [x for x in sample_elements(desc, budget) if desc.leq(z, x) and desc.leq(x, c)]
    return _dedupe(pool)[:cap], False


def _dedupe(xs: list) -> list:
    return list(dict.fromkeys(xs))


def lower_interval(desc: Descriptor, c: Element, budget: SearchBudget = DEFAULT_BUDGET) -> list:
    """[0, c] exactly when it is finite and small enough, else a sample containing 0 and c."""
    if not is_positive(desc, c):
        raise NotApplicable(f"{c!r} is not positive")
    out, _ = _interval(desc, c, budget)
    return out


def interval_is_exact(desc: Descriptor, c: Element, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    return _interval(desc, c, budget)[1]


# ---------------------------------------------------------------------------
# RDP1 and RDP2 on a table
# ---------------------------------------------------------------------------


def check_rdp1_com(desc: Descriptor, table: RdpTable, budget: SearchBudget = DEFAULT_BUDGET) -> Verdict:
    """Do all 0 <= x <= c12 and 0 <= y <= c21 commute?"""
    if is_abelian(desc):
        return Verdict(Status.HOLDS, reason="abelian carrier")
    xs, ex1 = _interval(desc, table.c12, budget)
    ys, ex2 = _interval(desc, table.c21, budget)
    for x in xs:
        for y in ys:
            if not commute(desc, x, y):
                return Verdict(Status.FAILS, evidence={"x": x, "y": y}, reason="x + y != y + x")
    if ex1 and ex2:
        return Verdict(Status.HOLDS, reason="both intervals enumerated")
    return Verdict(Status.HOLDS_SAMPLED, reason="no counterexample in sample", budget=budget, bounded=True)


def _meet(desc: Descriptor, x, y):
    """Meet on lattice carriers, or None when no analytic rule applies."""
    if is_linear(desc):
        return x if desc.leq(x, y) else y
    if isinstance(desc, Prod) and not desc.strict:
        parts = [_meet(c, p, q) for c, p, q in zip(desc.children, x, y)]
        return None if any(p is None for p in parts) else tuple(parts)
    return None


def check_rdp2_meet(desc: Descriptor, table: RdpTable, budget: SearchBudget = DEFAULT_BUDGET) -> Verdict:
    """Is c12 ^ c21 = 0?"""
    x, y, z = table.c12, table.c21, desc.zero()
    m = _meet(desc, x, y)
    if m is None and comparable(desc, x, y):
        m = x if desc.leq(x, y) else y
    if m is not None:
        if m == z:
            return Verdict(Status.HOLDS, evidence={"meet": m})
        return Verdict(Status.FAILS, evidence={"meet": m}, reason="meet is not 0")
    # incomparable, both strictly positive
    try:
        d = strict_between(desc, x, y)
        return Verdict(Status.FAILS, evidence={"lower_bound": d}, reason="strictly positive common lower bound")
    except (NotApplicable, NotFound, Unsupported):
        pass
    for d in sample_elements(desc, budget):
        if is_strictly_positive(desc, d) and desc.leq(d, x) and desc.leq(d, y):
            return Verdict(Status.FAILS, evidence={"lower_bound": d}, reason="strictly positive common lower bound")
    if antilattice_status(desc, budget).status is Status.HOLDS:
        return Verdict(Status.FAILS, reason="incomparable elements of an antilattice have no meet")
    return Verdict(Status.UNKNOWN, reason="budget-exhausted", budget=budget, bounded=True)


# ---------------------------------------------------------------------------
# RDP0 and interpolation
# ---------------------------------------------------------------------------

Solver = Callable[..., tuple]


def _default_solver() -> Solver:
    from .solvers import solve

    return solve


def rdp0_decompose(desc: Descriptor, a, b, c, solver: Solver | None = None, budget: SearchBudget = DEFAULT_BUDGET):
    """(b1, c1) with a = b1 + c1, 0 <= b1 <= b, 0 <= c1 <= c, for 0 <= a <= b + c."""
    z = desc.zero()
    if a == z:
        return z, z
    solver = solver or _default_solver()
    rest = total(desc, desc.neg(a), b, c)
    try:
        table, _ = solver(desc, Equation(a, rest, b, c), budget)
    except (ConstructionFailed, NoRuleApplies, NotFound) as exc:
        raise SolverFailed(f"no table for {a!r} + {rest!r} = {b!r} + {c!r}: {exc}") from exc
    b1, c1 = table.c11, table.c12
    ok = (
        a == desc.add(b1, c1)
        and is_positive(desc, b1)
        and is_positive(desc, c1)
        and desc.leq(b1, b)
        and desc.leq(c1, c)
    )
    if not ok:
        raise SolverFailed("solver table does not give a valid split")
    return b1, c1


def interpolate(desc: Descriptor, a1, a2, b1, b2, solver: Solver | None = None, budget: SearchBudget = DEFAULT_BUDGET):
    """c with a1, a2 <= c <= b1, b2, via an RDP0 split of b2 - a1."""
    for lo in (a1, a2):
        for hi in (b1, b2):
            if not desc.leq(lo, hi):
                raise NotApplicable(f"{lo!r} is not below {hi!r}")
    x = sub(desc, b2, a1)
    _, c2 = rdp0_decompose(desc, x, sub(desc, b2, a2), sub(desc, b1, a1), solver, budget)
    c = desc.add(c2, a1)
    if not all(desc.leq(lo, c) and desc.leq(c, hi) for lo in (a1, a2) for hi in (b1, b2)):
        raise SolverFailed(f"interpolant {c!r} violates the bounds")
    return c
