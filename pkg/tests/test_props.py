import random
from fractions import Fraction

import pytest

from rieszlex.errors import InvalidWitness, NotApplicable, NotComDirected, NotDirected, Unsupported
from rieszlex.groups import Free, Int, Lex, Mat, Matrix, Prod, Rat, Trivial, Word, is_strictly_positive, leq
from rieszlex.props import (
    antilattice_status,
    com_directed_witness,
    directed_witness,
    has_ncdp,
    is_central,
    is_com_directed,
    lower_bound,
    ncdp_holds,
    ncdp_witness,
    p1p2_from_wrdp,
    strict_between,
    strict_lower_bound,
    wrdp_conditions_hold,
    wrdp_witnesses,
)
from rieszlex.verdict import Status

from . import gen

Q2 = Prod((Rat(), Rat()), strict=True)
ZZ = Prod((Int(), Int()))
F2 = Free(2, (1, Fraction(1, 2)))
g = Word.gen


def test_directed_witness_on_free_group():
    # DERIVED: -g1 has valuation -1, below both g1 (1) and -g2 (-1/2)
    w = directed_witness(F2, g(1), g(2, -1))
    assert w == g(1, -1)
    assert leq(F2, w, g(1)) and leq(F2, w, g(2, -1))


@pytest.mark.parametrize("desc", [Int(), Rat(), Matrix(), ZZ, Q2, Lex(ZZ, Int()), Lex(Q2, Matrix()), F2], ids=repr)
def test_lower_bounds_are_below(desc):
    rng = random.Random(2)
    for _ in range(50):
        x, y, z = (gen.element(desc, rng) for _ in range(3))
        d = lower_bound(desc, x, y, z)
        assert all(leq(desc, d, v) for v in (x, y, z))
        s = strict_lower_bound(desc, x, y)
        assert leq(desc, s, x) and s != x and leq(desc, s, y) and s != y


def test_trivial_order_is_not_directed():
    with pytest.raises(NotDirected):
        directed_witness(Trivial(Rat()), Fraction(1), Fraction(2))
    assert directed_witness(Trivial(Rat()), Fraction(3), Fraction(3)) == 3
    with pytest.raises(Unsupported):
        strict_lower_bound(Trivial(Rat()), 1, 2)


def test_strict_between_frozen():
    # DERIVED: componentwise halves of the minimum
    assert strict_between(Q2, (1, 4), (2, 3)) == (Fraction(1, 2), Fraction(3, 2))
    assert strict_between(Rat(), 1, Fraction(1, 3)) == Fraction(1, 6)
    with pytest.raises(NotApplicable):
        strict_between(Q2, (0, 0), (2, 3))


def test_strict_between_in_matrix_group():
    M = Matrix()
    d = strict_between(M, Mat(2, 0), Mat(3, 1))
    assert is_strictly_positive(M, d) and leq(M, d, Mat(2, 0)) and leq(M, d, Mat(3, 1))


def test_centre_of_matrix_group():
    M = Matrix()
    assert is_central(M, Mat(1, 0))
    assert not is_central(M, Mat(1, 1))
    assert not is_central(M, Mat(2, 0))
    assert is_central(ZZ, (3, -1))


def test_com_directed_witnesses():
    L = Lex(Int(), Matrix())
    assert is_com_directed(L)
    # DERIVED: first coordinate one below the minimum, identity matrix
    w = com_directed_witness(L, (1, Mat(2, 0)), (0, Mat(1, 1)))
    assert w == (-1, Mat(1, 0))
    assert not is_com_directed(Matrix())
    with pytest.raises(NotComDirected):
        com_directed_witness(Matrix(), Mat(Fraction(1, 2), 0), Mat(Fraction(1, 3), 0))
    # pairs above the identity are fine
    assert com_directed_witness(Matrix(), Mat(2, 0), Mat(3, 5)) == Mat(1, 0)


@pytest.mark.parametrize(
    "desc, status",
    [
        (Int(), Status.HOLDS),
        (Q2, Status.HOLDS),
        (Lex(Int(), Int()), Status.HOLDS),
        (Matrix(), Status.HOLDS),
        (F2, Status.HOLDS),
        (Trivial(Rat()), Status.HOLDS),
        (ZZ, Status.FAILS),
        (Lex(ZZ, Int()), Status.UNKNOWN),
    ],
    ids=repr,
)
def test_antilattice_status(desc, status):
    assert antilattice_status(desc).status is status


def test_product_order_is_not_an_antilattice_with_witness():
    v = antilattice_status(ZZ)
    assert v.status is Status.FAILS and v.evidence


def test_ncdp_frozen_witnesses():
    # DERIVED: half the minimum in each coordinate
    assert ncdp_witness(Q2, (1, 3), (2, 1)) == (Fraction(1, 2), Fraction(1, 2))
    A = Lex(Matrix(), Q2)
    assert has_ncdp(A)
    d = ncdp_witness(A, (Mat(1, 0), (1, 3)), (Mat(1, 0), (2, 1)))
    assert ncdp_holds(A, (Mat(1, 0), (1, 3)), (Mat(1, 0), (2, 1)), d)
    # DERIVED: strictly positive first components, so the first of a is kept
    assert ncdp_witness(A, (Mat(2, 0), (1, 1)), (Mat(2, 0), (3, -1)))[0] == Mat(2, 0)


def test_ncdp_needs_strict_positivity():
    with pytest.raises(NotApplicable):
        ncdp_witness(Q2, (0, 0), (1, 1))


def test_wrdp_witnesses_abelian_frozen():
    # DERIVED: d1 = min(u1, v2), d2 = d1 - u1 + v1
    assert wrdp_witnesses(Int(), 1, 2, 2, 1) == (1, 2)
    d1, d2 = wrdp_witnesses(ZZ, (1, 0), (0, 3), (2, 1), (-1, 2))
    assert wrdp_conditions_hold(ZZ, (1, 0), (0, 3), (2, 1), (-1, 2), d1, d2)


def test_wrdp_witnesses_not_directed():
    with pytest.raises(NotDirected):
        wrdp_witnesses(Trivial(Rat()), 1, 2, 3, 0)


def test_wrdp_witnesses_on_free_group_found_by_search():
    F = Free(3, (1, 1, Fraction(1, 2)))
    u1, u2, v1, v2 = g(1), g(2), g(1), g(2)
    d1, d2 = wrdp_witnesses(F, u1, u2, v1, v2)
    assert wrdp_conditions_hold(F, u1, u2, v1, v2, d1, d2)


def test_invalid_witness_rejected():
    with pytest.raises(InvalidWitness):
        p1p2_from_wrdp(Int(), 1, 2, 2, 1, 5, 5)
