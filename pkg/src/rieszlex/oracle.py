"""Brute-force searches used as ground truth for the constructive solvers.

Nothing here calls the solvers.  A table is determined by its corner c11
(c12 = -c11 + a1, c21 = -c11 + b1, c22 = -c21 + a2), so the table search
ranges over c11 in [0, a1] and re-checks the last identity.
"""

from __future__ import annotations

from typing import Iterator

from .groups import (
    DEFAULT_BUDGET,
    Descriptor,
    Free,
    SearchBudget,
    Word,
    is_positive,
    reduced_words,
    sub,
)
from .rdp import Equation, RdpTable, _interval, verify_table
from .verdict import Status, Verdict


def enumerate_reduced_words(k: int, max_len: int) -> Iterator[Word]:
    """Every reduced word over g1..gk up to ``max_len`` letters, shortest first."""
    return reduced_words(k, max_len)


def _corner_candidates(desc: Descriptor, eq: Equation, budget: SearchBudget) -> tuple[list, bool]:
    if isinstance(desc, Free):
        # every word up to the length bound, not just the capped sample
        z = desc.zero()
        out, seen = [], set()
        for w in reduced_words(desc.k, budget.max_word_len):
            w = desc.normalize(w.letters)
            if w in seen:
                continue
            seen.add(w)
            if desc.leq(z, w) and desc.leq(w, eq.a1) and desc.leq(w, eq.b1):
                out.append(w)
        return out, False
    cands, exact = _interval(desc, eq.a1, budget)
    return [c for c in cands if desc.leq(c, eq.b1)], exact


def iter_tables(desc: Descriptor, eq: Equation, budget: SearchBudget = DEFAULT_BUDGET) -> Iterator[RdpTable]:
    """Every RDP table whose corner lies in the enumerated candidate set."""
    eq.validate(desc)
    yield from _tables(desc, eq, _corner_candidates(desc, eq, budget)[0])


def _tables(desc: Descriptor, eq: Equation, cands: list) -> Iterator[RdpTable]:
    a1, a2, b1, b2 = eq.elements()
    for c11 in cands:
        c12 = desc.add(desc.neg(c11), a1)
        c21 = desc.add(desc.neg(c11), b1)
        c22 = desc.add(desc.neg(c21), a2)
        if desc.add(c12, c22) != b2:
            continue
        if not all(is_positive(desc, c) for c in (c11, c12, c21, c22)):
            continue
        yield RdpTable(c11, c12, c21, c22, eq)


def brute_force_table(desc: Descriptor, eq: Equation, budget: SearchBudget = DEFAULT_BUDGET) -> Verdict:
    """Found with the first table, NotFoundExhaustive when [0, a1] was enumerated in full."""
    eq.validate(desc)
    cands, exact = _corner_candidates(desc, eq, budget)
    for table in _tables(desc, eq, cands):
        report = verify_table(desc, table, budget, properties=False)
        if report.is_rdp_table:
            ev = dict(zip(("c11", "c12", "c21", "c22"), table.entries()))
            return Verdict(Status.FOUND, evidence=ev)
    if exact:
        return Verdict(Status.NOT_FOUND_EXHAUSTIVE, reason="every corner in [0, a1] was tried")
    return Verdict(
        Status.NOT_FOUND_WITHIN_BUDGET,
        reason="no table with a corner in the enumerated sample",
        budget=budget,
        bounded=True,
    )


def table_of(verdict: Verdict, eq: Equation) -> RdpTable:
    ev = verdict.evidence
    return RdpTable(ev["c11"], ev["c12"], ev["c21"], ev["c22"], eq)


def search_wrdp_k(desc: Free, u1, u2, v1, v2, budget: SearchBudget = DEFAULT_BUDGET) -> Verdict:
    """First k >= 0 (in word order) with v2 <= u1 + k and u2 - k, v2 - k commuting."""
    if not isinstance(desc, Free):
        raise TypeError("search_wrdp_k runs on free carriers")
    Equation(u1, u2, v1, v2).validate(desc, positive=False)
    z = desc.zero()
    seen: set = set()
    tried = 0
    for w in reduced_words(desc.k, budget.max_word_len):
        k = desc.normalize(w.letters)
        if k in seen:
            continue
        seen.add(k)
        if tried >= budget.max_candidates:
            break
        tried += 1
        if not desc.leq(z, k):
            continue
        if not desc.leq(v2, desc.add(u1, k)):
            continue
        p, q = sub(desc, u2, k), sub(desc, v2, k)
        if desc.add(p, q) == desc.add(q, p):
            return Verdict(Status.FOUND, evidence={"k": k})
    return Verdict(
        Status.NOT_FOUND_WITHIN_BUDGET,
        reason=f"no k among {tried} words of length <= {budget.max_word_len}",
        budget=budget,
        bounded=True,
    )


def oracle_solver(desc: Descriptor, eq: Equation, budget: SearchBudget = DEFAULT_BUDGET):
    """Solver-shaped wrapper: the first table the corner search finds."""
    from .errors import SolverFailed
    from .solvers import SolverTrace

    v = brute_force_table(desc, eq, budget)
    if v.status is not Status.FOUND:
        raise SolverFailed(f"oracle found no table: {v.status.value}")
    return table_of(v, eq), SolverTrace("oracle")
