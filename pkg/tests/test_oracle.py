from fractions import Fraction

import pytest

from rieszlex.casebook import commutator_instance
from rieszlex.errors import SolverFailed
from rieszlex.groups import Free, Int, Lex, Prod, Rat, SearchBudget, Word, reduced_word_count
from rieszlex.oracle import (
    brute_force_table,
    enumerate_reduced_words,
    iter_tables,
    oracle_solver,
    search_wrdp_k,
    table_of,
)
from rieszlex.rdp import Equation, verify_table
from rieszlex.verdict import Status

ZZ = Prod((Int(), Int()))
g = Word.gen


def test_word_enumeration_is_shortest_first_and_reduced():
    words = list(enumerate_reduced_words(2, 3))
    assert words[0] == Word()
    assert len(words) == reduced_word_count(2, 3) == 1 + 4 + 12 + 36
    lengths = [len(w.letters) for w in words]
    assert lengths == sorted(lengths)
    for w in words:
        assert all(a != (b[0], -b[1]) for a, b in zip(w.letters, w.letters[1:]))


def test_exhaustive_on_integers():
    eq = Equation(2, 1, 1, 2)
    tables = list(iter_tables(Int(), eq))
    # DERIVED: corner ranges over 0..1 (c11 <= b1 = 1)
    assert [t.entries() for t in tables] == [(0, 2, 1, 0), (1, 1, 0, 1)]
    v = brute_force_table(Int(), eq)
    assert v.status is Status.FOUND and not v.bounded
    assert verify_table(Int(), table_of(v, eq), properties=False).is_rdp_table


def test_found_tables_verify_on_products():
    eq = Equation((2, 1), (1, 2), (1, 1), (2, 2))
    v = brute_force_table(ZZ, eq)
    assert v.status is Status.FOUND
    assert verify_table(ZZ, table_of(v, eq), properties=False).is_rdp_table


def test_free_group_refutation_is_bounded():
    F = Free(3, (1, 1, Fraction(1, 2)))
    eq, c = commutator_instance(F)
    assert F.valuation(c) == 0
    v = brute_force_table(F, eq, SearchBudget(max_word_len=4))
    assert v.status is Status.NOT_FOUND_WITHIN_BUDGET and v.bounded
    assert v.budget.max_word_len == 4
    with pytest.raises(SolverFailed):
        oracle_solver(F, eq, SearchBudget(max_word_len=3))


def test_wrdp_k_search():
    F = Free(3, (1, 1, Fraction(1, 2)))
    u = (F.normalize([(3, 1), (1, -1)]), g(1), F.normalize([(3, 1), (2, -1)]), g(2))
    v = search_wrdp_k(F, *u, SearchBudget(max_word_len=4))
    assert v.status is Status.NOT_FOUND_WITHIN_BUDGET
    assert v.reason == f"no k among {reduced_word_count(3, 4)} words of length <= 4"
    FA = Free(3, (1, 1, Fraction(1, 2)), abelian=True)
    va = search_wrdp_k(FA, *(FA.normalize(x.letters) for x in u), SearchBudget(max_word_len=3))
    # PAPER: abelian control, k = 2 g1
    assert va.status is Status.FOUND and va.evidence["k"] == g(1, 2)
    with pytest.raises(TypeError):
        search_wrdp_k(Int(), 1, 1, 1, 1)


def test_oracle_solver_shape():
    L = Lex(Int(), Rat())
    eq = Equation((1, 0), (1, 0), (1, 0), (1, 0))
    t, tr = oracle_solver(L, eq)
    assert tr.tag == "oracle"
    assert verify_table(L, t, properties=False).is_rdp_table


def test_wrdp_k_zero_when_all_four_agree():
    F = Free(2, (1, 1))
    x = F.normalize([(1, 1), (2, -1)])
    v = search_wrdp_k(F, x, x, x, x)
    assert v.status is Status.FOUND and v.evidence["k"] == Word()


def test_small_word_counts():
    assert list(enumerate_reduced_words(1, 2)) == [Word(), g(1), g(1, -1), g(1, 2), g(1, -2)]
    assert len(list(enumerate_reduced_words(2, 1))) == 5
