"""Witness-producing predicates for the order hypotheses the solvers rely on.

Each ``*_witness`` function returns an element that the caller can re-check
with ``leq``/``is_central``; failure is reported by raising.  Constructions
are per-carrier where a recipe is known and a bounded search otherwise.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import floor

from .errors import (
    InvalidEquation,
    InvalidWitness,
    NotApplicable,
    NotComDirected,
    NotDirected,
    NotFound,
    ShapeMismatch,
    Unsupported,
)
from .groups import (
    DEFAULT_BUDGET,
    Descriptor,
    Element,
    Free,
    Int,
    Lex,
    Mat,
    Matrix,
    Prod,
    Rat,
    SearchBudget,
    Trivial,
    Word,
    commute,
    comparable,
    has_positive_element,
    has_strict_lower_bounds,
    is_abelian,
    is_dense,
    is_directed,
    is_linear,
    is_positive,
    is_strictly_positive,
    lt,
    reduced_words,
    sample_elements,
    some_positive,
    sub,
    total,
)
from .verdict import Status, Verdict


def _min(desc: Descriptor, x, y):
    return x if desc.leq(x, y) else y


# ---------------------------------------------------------------------------
# lower bounds
# ---------------------------------------------------------------------------


def directed_witness(desc: Descriptor, x: Element, y: Element) -> Element:
    """A common lower bound d <= x, y."""
    desc.check(x)
    desc.check(y)
    match desc:
        case Int() | Rat() | Matrix():
            return _min(desc, x, y)
        case Free():
            if is_linear(desc):
                return _min(desc, x, y)
            return _free_below(desc, min(desc.valuation(x), desc.valuation(y)))
        case Prod(children=cs, strict=False):
            return tuple(directed_witness(c, p, q) for c, p, q in zip(cs, x, y))
        case Prod(strict=True):
            if x == y:
                return x
            return strict_lower_bound(desc, x, y)
        case Lex(first=a, second=g):
            if x[0] == y[0]:
                return (x[0], directed_witness(g, x[1], y[1]))
            if not has_strict_lower_bounds(a):
                raise NotDirected(f"{desc!r}: first components {x[0]!r}, {y[0]!r} have no strict lower bound")
            return (strict_lower_bound(a, x[0], y[0]), g.zero())
        case Trivial():
            if x == y:
                return x
            raise NotDirected("the discrete order has no common lower bound for distinct elements")
    raise ShapeMismatch(f"unknown descriptor {desc!r}")


def _free_below(desc: Free, bound: Fraction) -> Word:
    """-n*g1 with the least n >= 0 such that its value is strictly below ``bound``."""
    v1 = desc.vals[0]
    n = max(floor(-bound / v1) + 1, 0)
    return desc.normalize(((1, -1),) * n)


def lower_bound(desc: Descriptor, *xs: Element) -> Element:
    """A common lower bound of all ``xs`` by folding directed_witness."""
    d = xs[0]
    for x in xs[1:]:
        d = directed_witness(desc, d, x)
    return d


def strict_lower_bound(desc: Descriptor, x: Element, y: Element) -> Element:
    """d <= x, y with d distinct from both (strict in every coordinate of products)."""
    match desc:
        case Int() | Rat():
            return min(x, y) - 1
        case Matrix():
            m = _min(desc, x, y)
            return Mat(m.a, m.b - 1)
        case Free():
            return _free_below(desc, min(desc.valuation(x), desc.valuation(y)))
        case Prod(children=cs):
            return tuple(strict_lower_bound(c, p, q) for c, p, q in zip(cs, x, y))
        case Lex(first=a, second=g):
            return (strict_lower_bound(a, x[0], y[0]), g.zero())
        case Trivial():
            raise Unsupported("the discrete order has no strict lower bounds")
    raise ShapeMismatch(f"unknown descriptor {desc!r}")


def strict_between(desc: Descriptor, a: Element, b: Element) -> Element:
    """d with 0 < d < a and 0 < d < b."""
    if not (is_strictly_positive(desc, a) and is_strictly_positive(desc, b)):
        raise NotApplicable("strict_between needs two strictly positive elements")
    d = _between(desc, a, b)
    if not (is_strictly_positive(desc, d) and lt(desc, d, a) and lt(desc, d, b)):
        raise NotFound(f"no element strictly between 0 and {a!r}, {b!r}")
    return d


def _between(desc: Descriptor, a, b):
    match desc:
        case Rat():
            return Fraction(min(a, b)) / 2
        case Matrix():
            m = _min(desc, a, b)
            if m.a > 1:
                return Mat((1 + m.a) / 2, 0)
            return Mat(1, m.b / 2)
        case Prod(children=cs, strict=True):
            return tuple(_between(c, p, q) for c, p, q in zip(cs, a, b))
        case Prod(children=cs):
            out = []
            for c, p, q in zip(cs, a, b):
                z = c.zero()
                out.append(_between(c, p, q) if p != z and q != z else z)
            return tuple(out)
        case Lex(first=fa, second=g):
            za, zg = fa.zero(), g.zero()
            if a[0] != za and b[0] != za:
                if is_dense(fa):
                    return (_between(fa, a[0], b[0]), zg)
                if has_positive_element(g):
                    return (za, some_positive(g))
            if a[0] == za and b[0] == za:
                return (za, _between(g, a[1], b[1]))
            inner = a[1] if a[0] == za else b[1]
            return (za, _between(g, inner, inner))
    raise Unsupported(f"{desc!r} has no dense-between rule")


# ---------------------------------------------------------------------------
# centre and com-directedness
# ---------------------------------------------------------------------------


def is_central(desc: Descriptor, x: Element) -> bool:
    desc.check(x)
    match desc:
        case Int() | Rat():
            return True
        case Matrix():
            # commuting with M(2,0) forces b = 0, with M(1,1) forces a = 1
            return x == Mat(1, 0)
        case Free():
            return is_abelian(desc) or x == Word()
        case Prod(children=cs):
            return all(is_central(c, v) for c, v in zip(cs, x))
        case Lex(first=a, second=g):
            return is_central(a, x[0]) and is_central(g, x[1])
        case Trivial(child=c):
            return is_central(c, x)
    raise ShapeMismatch(f"unknown descriptor {desc!r}")


def _centre_is_trivial(desc: Descriptor) -> bool:
    return isinstance(desc, Matrix) or (isinstance(desc, Free) and not is_abelian(desc))


def is_com_directed(desc: Descriptor) -> bool:
    """Analytic com-directedness rule (False also means 'no rule known')."""
    if is_abelian(desc):
        return is_directed(desc)
    match desc:
        case Prod(children=cs, strict=False):
            return all(is_com_directed(c) for c in cs)
        case Lex(first=a):
            return is_abelian(a) and has_strict_lower_bounds(a)
    return False


def com_directed_witness(desc: Descriptor, x: Element, y: Element) -> Element:
    """A central d with d <= x, y."""
    desc.check(x)
    desc.check(y)
    if is_abelian(desc):
        try:
            return directed_witness(desc, x, y)
        except NotDirected as exc:
            raise NotComDirected(str(exc)) from exc
    z = desc.zero()
    match desc:
        case Matrix() | Free():
            if desc.leq(z, x) and desc.leq(z, y):
                return z
            raise NotComDirected(f"the centre of {desc!r} is trivial and 0 is not below {x!r}, {y!r}")
        case Prod(children=cs, strict=False):
            return tuple(com_directed_witness(c, p, q) for c, p, q in zip(cs, x, y))
        case Lex(first=a, second=g):
            return _lex_com_witness(a, g, x, y)
        case Trivial():
            if x == y and is_central(desc, x):
                return x
            raise NotComDirected("the discrete order is not directed")
    d = directed_witness(desc, x, y)
    if is_central(desc, d):
        return d
    raise NotFound(f"no central lower bound found for {x!r}, {y!r}")


def _lex_com_witness(a: Descriptor, g: Descriptor, x, y):
    if has_strict_lower_bounds(a):
        s = strict_lower_bound(a, x[0], y[0])
        if is_central(a, s):
            return (s, g.zero())
    za = a.zero()
    if a.leq(za, x[0]) and a.leq(za, y[0]):
        tails = [p[1] for p in (x, y) if p[0] == za]
        if not tails:
            return (za, g.zero())
        return (za, com_directed_witness(g, tails[0], tails[-1]))
    if x[0] == y[0] and is_central(a, x[0]):
        return (x[0], com_directed_witness(g, x[1], y[1]))
    if _centre_is_trivial(a):
        raise NotComDirected(f"only central first component is 0, which is not below {x[0]!r}, {y[0]!r}")
    raise NotFound(f"no central lower bound found for {x!r}, {y!r}")


# ---------------------------------------------------------------------------
# antilattice
# ---------------------------------------------------------------------------


def antilattice_status(desc: Descriptor, budget: SearchBudget = DEFAULT_BUDGET) -> Verdict:
    """Whether only comparable pairs have a meet."""
    if isinstance(desc, Trivial):
        return Verdict(Status.HOLDS, reason="discrete order: distinct elements have no common lower bound")
    if is_linear(desc):
        return Verdict(Status.HOLDS, reason="linearly ordered")
    if isinstance(desc, Free):
        return Verdict(
            Status.HOLDS,
            reason="incomparable elements share a value; lower bounds of maximal value are never unique",
        )
    if isinstance(desc, Prod) and desc.strict and all(is_linear(c) for c in desc.children):
        return Verdict(
            Status.HOLDS,
            reason="lowering one coordinate of a candidate meet gives a lower bound not below it",
        )
    if isinstance(desc, Prod) and not desc.strict:
        nontrivial = [i for i, c in enumerate(desc.children) if has_positive_element(c)]
        if len(nontrivial) >= 2:
            i, j = nontrivial[:2]
            zero = desc.zero()
            a = list(zero)
            b = list(zero)
            a[i] = some_positive(desc.children[i])
            b[j] = some_positive(desc.children[j])
            return Verdict(
                Status.FAILS,
                evidence={"a": tuple(a), "b": tuple(b), "meet": zero},
                reason="incomparable pair with componentwise meet",
            )
    found = falsify_antilattice(desc, budget)
    if found is not None:
        return found
    return Verdict(Status.UNKNOWN, reason="no-analytic-rule", budget=budget, bounded=True)


def falsify_antilattice(desc: Descriptor, budget: SearchBudget = DEFAULT_BUDGET, limit: int = 40) -> Verdict | None:
    """Search a small sample for an incomparable pair with an unrefuted meet.

    A sample-greatest lower bound m is refuted by any sampled lower bound not
    below it, by a translate m + z (z sampled) that is a lower bound not below
    m, or by m + e with e strictly between 0 and the gaps.
    """
    pool = sample_elements(desc, budget)[:limit]
    for a, b in itertools.combinations(pool, 2):
        if comparable(desc, a, b):
            continue
        lows = [c for c in pool if desc.leq(c, a) and desc.leq(c, b)]
        for m in lows:
            if any(not desc.leq(c, m) for c in lows):
                continue
            if _refute_meet(desc, a, b, m, pool):
                continue
            return Verdict(
                Status.FAILS,
                evidence={"a": a, "b": b, "meet": m},
                reason="meet candidate not refuted within budget",
                budget=budget,
                bounded=True,
            )
    return None


def _refute_meet(desc, a, b, m, pool) -> bool:
    for z in pool:
        c = desc.add(m, z)
        if desc.leq(c, a) and desc.leq(c, b) and not desc.leq(c, m):
            return True
    try:
        e = strict_between(desc, desc.add(desc.neg(m), a), desc.add(desc.neg(m), b))
    except (NotApplicable, NotFound, Unsupported):
        return False
    c = desc.add(m, e)
    return desc.leq(c, a) and desc.leq(c, b) and not desc.leq(c, m)


# ---------------------------------------------------------------------------
# NCDP
# ---------------------------------------------------------------------------


def _conj(desc, a, d):
    return total(desc, desc.neg(a), d, a)


def ncdp_holds(desc: Descriptor, a, b, d) -> bool:
    return (
        is_strictly_positive(desc, d)
        and desc.leq(d, a)
        and desc.leq(d, b)
        and _conj(desc, a, d) == _conj(desc, b, d)
    )


def has_ncdp(desc: Descriptor) -> bool:
    """Analytic rule: carriers for which ncdp_witness has a construction."""
    if is_linear(desc) or isinstance(desc, Trivial):
        return True  # vacuous: no incomparable strictly positive pairs
    match desc:
        case Prod(children=cs, strict=True):
            return all(is_linear(c) and is_dense(c) and is_abelian(c) for c in cs)
        case Lex(first=c, second=b):
            if is_linear(c):
                return has_ncdp(b) and is_abelian(b) and has_strict_lower_bounds(b)
            return is_linear(b) and is_abelian(b) and is_directed(c)
    return False


def ncdp_witness(desc: Descriptor, a: Element, b: Element, budget: SearchBudget = DEFAULT_BUDGET) -> Element:
    """0 < d <= a, b with -a + d + a = -b + d + b, for incomparable a, b > 0."""
    desc.check(a)
    desc.check(b)
    if not (is_strictly_positive(desc, a) and is_strictly_positive(desc, b)):
        raise NotApplicable("NCDP concerns strictly positive elements")
    if comparable(desc, a, b):
        raise NotApplicable(f"{a!r} and {b!r} are comparable")
    for d in _ncdp_candidates(desc, a, b):
        if d is not None and ncdp_holds(desc, a, b, d):
            return d
    for d in sample_elements(desc, budget):
        if ncdp_holds(desc, a, b, d):
            return d
    raise NotFound(f"no NCDP witness for {a!r}, {b!r} within budget", budget)


def _try(f, *args):
    try:
        return f(*args)
    except (NotApplicable, NotFound, Unsupported, NotDirected):
        return None


def _ncdp_candidates(desc, a, b):
    match desc:
        case Prod(strict=True):
            yield _try(strict_between, desc, a, b)
        case Lex(first=c, second=g):
            zc = c.zero()
            if is_linear(c):
                # first components of an incomparable pair are equal
                if a[0] != zc:
                    yield (a[0], _try(strict_lower_bound, g, a[1], b[1]))
                else:
                    yield (zc, _try(strict_between, g, a[1], b[1]))
            if is_linear(g):
                if a[0] != zc and b[0] != zc:
                    yield (zc, some_positive(g))
                elif a[0] == zc and b[0] == zc:
                    t = _try(strict_between, g, a[1], b[1])
                    yield (zc, t if t is not None else _min(g, a[1], b[1]))
                else:
                    inner = a[1] if a[0] == zc else b[1]
                    t = _try(strict_between, g, inner, inner)
                    yield (zc, t if t is not None else inner)


# ---------------------------------------------------------------------------
# wRDP and (P1)-(P2)
# ---------------------------------------------------------------------------


def _require_sum(desc, u1, u2, v1, v2):
    for x in (u1, u2, v1, v2):
        desc.check(x)
    if desc.add(u1, u2) != desc.add(v1, v2):
        raise InvalidEquation(f"{u1!r} + {u2!r} != {v1!r} + {v2!r}")


def wrdp_conditions_hold(desc: Descriptor, u1, u2, v1, v2, d1, d2) -> bool:
    """d1 <= u1, v2; d2 <= u2, v1; d1 + d2 = d2 + d1; -u1 + v1 = -d1 + d2."""
    return (
        desc.leq(d1, u1)
        and desc.leq(d1, v2)
        and desc.leq(d2, u2)
        and desc.leq(d2, v1)
        and commute(desc, d1, d2)
        and desc.add(desc.neg(u1), v1) == desc.add(desc.neg(d1), d2)
    )


def p1p2_hold(desc: Descriptor, u1, u2, v1, v2, k) -> bool:
    """k >= 0, v2 <= u1 + k, and u2 - k commutes with v2 - k."""
    return (
        is_positive(desc, k)
        and desc.leq(v2, desc.add(u1, k))
        and commute(desc, sub(desc, u2, k), sub(desc, v2, k))
    )


def p1p2_from_wrdp(desc: Descriptor, u1, u2, v1, v2, d1, d2) -> Element:
    _require_sum(desc, u1, u2, v1, v2)
    if not wrdp_conditions_hold(desc, u1, u2, v1, v2, d1, d2):
        raise InvalidWitness("(d1, d2) do not satisfy the wRDP conditions")
    k = desc.add(desc.neg(d1), v2)
    if not p1p2_hold(desc, u1, u2, v1, v2, k):  # pragma: no cover - algebraic identity
        raise InvalidWitness("conversion produced an invalid k")
    return k


def wrdp_from_p1p2(desc: Descriptor, u1, u2, v1, v2, k) -> tuple[Element, Element]:
    _require_sum(desc, u1, u2, v1, v2)
    if not p1p2_hold(desc, u1, u2, v1, v2, k):
        raise InvalidWitness(f"k = {k!r} does not satisfy (P1)-(P2)")
    d1, d2 = sub(desc, v2, k), sub(desc, u2, k)
    if not wrdp_conditions_hold(desc, u1, u2, v1, v2, d1, d2):  # pragma: no cover
        raise InvalidWitness("conversion produced invalid witnesses")
    return d1, d2


def k_candidates(desc: Descriptor, budget: SearchBudget):
    """Candidate k in canonical order; on free carriers every word up to the length bound."""
    if isinstance(desc, Free):
        seen = set()
        for w in reduced_words(desc.k, budget.max_word_len):
            w = desc.normalize(w.letters)
            if w in seen:
                continue
            seen.add(w)
            if len(seen) > budget.max_candidates:
                return
            yield w
    else:
        yield from sample_elements(desc, budget)


def wrdp_witnesses(desc: Descriptor, u1, u2, v1, v2, budget: SearchBudget = DEFAULT_BUDGET) -> tuple[Element, Element]:
    _require_sum(desc, u1, u2, v1, v2)
    if is_abelian(desc):
        d1 = directed_witness(desc, u1, v2)
        d2 = total(desc, d1, desc.neg(u1), v1)
        if not wrdp_conditions_hold(desc, u1, u2, v1, v2, d1, d2):  # pragma: no cover
            raise InvalidWitness("abelian shortcut produced invalid witnesses")
        return d1, d2
    if not is_directed(desc):
        raise NotDirected(f"{desc!r} is not directed, so it has no wRDP")
    for k in k_candidates(desc, budget):
        if p1p2_hold(desc, u1, u2, v1, v2, k):
            return wrdp_from_p1p2(desc, u1, u2, v1, v2, k)
    raise NotFound("no (d1, d2) found within budget", budget)
