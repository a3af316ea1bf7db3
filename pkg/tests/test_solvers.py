import random
from fractions import Fraction

import pytest

from rieszlex.errors import (
    AbelianRequired,
    DensityRequired,
    InvalidEquation,
    InvalidWitness,
    NotApplicable,
    WrdpWitnessUnavailable,
)
from rieszlex.groups import Free, Int, Lex, Mat, Matrix, Prod, Rat, Trivial, Word, comparable, is_strictly_positive
from rieszlex.oracle import oracle_solver
from rieszlex.props import wrdp_witnesses
from rieszlex.rdp import Equation, RdpTable, check_rdp1_com, check_rdp2_meet, interpolate, rdp0_decompose, verify_table
from rieszlex.solvers import (
    antilattice_strengthen,
    solve,
    solve_lex_ncdp,
    solve_lex_prodlinear_rdp1,
    solve_lex_wrdp,
    solve_linear,
    solve_strict_product,
    wrdp_corner_table,
)
from rieszlex.verdict import Status

from . import gen

Z, Q, M = Int(), Rat(), Matrix()
ZZ = Prod((Z, Z))
Q2 = Prod((Q, Q), strict=True)
g = Word.gen
F3 = Free(3, (1, 1, Fraction(1, 2)))


def entries(t: RdpTable):
    return t.entries()


# -- linear and product carriers ------------------------------------------


def test_linear_frozen():
    # DERIVED: a1 <= b1 puts a1 in the corner
    t, tr = solve(Z, Equation(1, 1, 1, 1))
    assert entries(t) == (1, 0, 0, 1) and tr.tag == "linear"
    t = solve_linear(Q, Equation(Fraction(1, 2), Fraction(1, 6), Fraction(1, 3), Fraction(1, 3)))
    assert entries(t) == (Fraction(1, 3), Fraction(1, 6), 0, Fraction(1, 6))


def test_product_order_is_componentwise():
    # DERIVED: per-coordinate linear tables
    t, tr = solve(ZZ, Equation((2, 1), (1, 2), (1, 1), (2, 2)))
    assert entries(t) == ((1, 1), (1, 0), (0, 0), (1, 2))
    assert tr.tag == "product"


def test_degenerate_equation():
    t, tr = solve(ZZ, Equation((0, 0), (1, 2), (1, 2), (0, 0)))
    assert tr.tag == "degenerate" and verify_table(ZZ, t, properties=False).is_rdp_table


def test_invalid_equation_rejected():
    with pytest.raises(InvalidEquation):
        solve(Z, Equation(1, 1, 1, 2))
    with pytest.raises(InvalidEquation):
        solve(Z, Equation(-1, 3, 1, 1))


# -- strict products --------------------------------------------------------

STRICT_EQ = Equation((1, 4), (3, 7), (2, 3), (2, 8))


def test_strict_product_frozen():
    # DERIVED: corner shifted by half the minimum so no coordinate vanishes
    t = solve_strict_product(Q2, STRICT_EQ)
    assert entries(t) == (
        (Fraction(1, 2), Fraction(3, 2)),
        (Fraction(1, 2), Fraction(5, 2)),
        (Fraction(3, 2), Fraction(3, 2)),
        (Fraction(3, 2), Fraction(11, 2)),
    )
    rep = verify_table(Q2, t)
    assert rep.rdp1.status is Status.HOLDS
    assert rep.rdp2.status is Status.FAILS


def test_strict_product_needs_density():
    with pytest.raises(DensityRequired):
        solve_strict_product(Prod((Z, Z), strict=True), Equation((1, 1), (1, 1), (1, 1), (1, 1)))
    with pytest.raises(NotApplicable):
        solve_strict_product(Prod((ZZ, Q), strict=True), Equation(*[((1, 1), 1)] * 4))


def test_antilattice_strengthen_frozen():
    t = antilattice_strengthen(Q2, STRICT_EQ)
    assert entries(t) == (
        (Fraction(3, 4), Fraction(9, 4)),
        (Fraction(1, 4), Fraction(7, 4)),
        (Fraction(5, 4), Fraction(3, 4)),
        (Fraction(7, 4), Fraction(25, 4)),
    )
    assert all(is_strictly_positive(Q2, c) for c in t.entries())
    assert not comparable(Q2, t.c12, t.c21)
    with pytest.raises(NotApplicable):
        antilattice_strengthen(Q2, Equation((1, 1), (2, 2), (2, 2), (1, 1)))


# -- lexicographic products with linear or product first factor -----------


def test_lex_int_int_equal_firsts():
    L = Lex(Z, Z)
    t, tr = solve(L, Equation((1, 5), (1, -5), (1, 0), (1, 0)))
    assert tr.tag == "Thm3.3(3)(iv)"
    assert verify_table(L, t, properties=False).is_rdp_table


def test_lex_prodlinear_incomparable_frozen():
    L = Lex(ZZ, Z)
    eq = Equation(((2, 3), 1), ((1, 4), 2), ((1, 4), 0), ((2, 3), 3))
    t, tr = solve(L, eq)
    assert tr.tag == "Thm3.3(4)"
    assert tr.aux["I1"] == (1,) and tr.aux["I2"] == (2,)
    assert (tr.aux["e"], tr.aux["f"], tr.aux["g"], tr.aux["h"]) == ((1, 3), (1, 0), (0, 1), (1, 3))
    assert check_rdp1_com(L, t).status is Status.HOLDS


def test_lex_prodlinear_needs_abelian_second_factor():
    L = Lex(ZZ, M)
    eq = Equation(((2, 3), Mat(1, 0)), ((1, 4), Mat(1, 0)), ((1, 4), Mat(1, 0)), ((2, 3), Mat(1, 0)))
    with pytest.raises(AbelianRequired):
        solve_lex_prodlinear_rdp1(L, eq)


def test_trivially_ordered_first_factor_lifts_second():
    L = Lex(Trivial(F3), Z)
    e = Word()
    t, tr = solve(L, Equation((e, 1), (e, 2), (e, 2), (e, 1)))
    assert tr.tag == "Ex2.2"
    assert verify_table(L, t, properties=False).is_rdp_table


# -- general lexicographic products ----------------------------------------


def test_lex_over_antilattice_fails_rdp1():
    L = Lex(Q2, M)
    eq = Equation(((1, 4), Mat(2, 0)), ((3, 7), Mat(1, 1)), ((2, 3), Mat(2, 2)), ((2, 8), Mat(1, 0)))
    t, tr = solve(L, eq)
    assert tr.tags() == ["Thm3.2(II)", "Thm3.2", "degenerate"]
    assert tr.aux["d"] == Mat(1, 0)
    v = check_rdp1_com(L, t)
    assert v.status is Status.FAILS
    assert v.evidence == {"x": ((0, 0), Mat(2, 0)), "y": ((Fraction(3, 2), Fraction(3, 2)), Mat(1, 1))}


def test_ncdp_zero_corner_branch():
    L = Lex(Q2, Z)
    eq = Equation(((1, 3), 0), ((2, 1), 0), ((2, 1), 0), ((1, 3), 0))
    t, tr = solve_lex_ncdp(Q2, Z, eq, a_solver=oracle_solver)
    assert tr.tag == "Thm5.1(i)-II-e11=0"
    assert tr.aux["d'"] == (Fraction(1, 2), Fraction(1, 2))
    assert verify_table(L, t, properties=False).is_rdp_table


def test_wrdp_zero_corner_branch():
    A = ZZ
    eq = Equation(((1, 0), g(1)), ((0, 1), g(2)), ((0, 1), g(1)), ((1, 0), g(2)))
    t, tr = solve_lex_wrdp(A, F3, eq)
    assert tr.tag == "Thm5.1(iii)-II-e11=0"
    d = F3.normalize([(2, 1), (1, -1)])
    assert tr.aux["d1"] == d and tr.aux["d2"] == d
    assert verify_table(Lex(A, F3), t, properties=False).is_rdp_table


def test_wrdp_both_diagonal_branch():
    eq = Equation(((2, 1), g(1)), ((1, 2), g(2)), ((1, 2), g(1)), ((2, 1), g(2)))
    t, tr = solve_lex_wrdp(ZZ, F3, eq)
    # the free factor has no table rule, so the witness table is used
    assert tr.tag == "Thm5.1(iii)-II-witness"
    assert verify_table(Lex(ZZ, F3), t, properties=False).is_rdp_table


# -- corner tables -----------------------------------------------------------


def test_wrdp_corner_table():
    u1, u2, v1, v2 = (1, 0), (0, 3), (2, 1), (-1, 2)
    d1, d2 = wrdp_witnesses(ZZ, u1, u2, v1, v2)
    t = wrdp_corner_table(ZZ, u1, u2, v1, v2, d1, d2)
    assert t.c12 == d1 and t.c21 == d2
    with pytest.raises(InvalidWitness):
        wrdp_corner_table(ZZ, u1, u2, v1, v2, (5, 5), d2)


# -- RDP0, interpolation, table checks --------------------------------------


def test_rdp0_split_and_interpolation():
    b1, c1 = rdp0_decompose(ZZ, (3, 1), (2, 2), (2, 0))
    assert ZZ.add(b1, c1) == (3, 1)
    assert interpolate(Z, -1, 0, 3, 2) in range(0, 3)
    with pytest.raises(NotApplicable):
        interpolate(Z, 5, 0, 3, 2)


def test_verify_table_detects_bad_sums():
    eq = Equation(1, 1, 1, 1)
    bad = RdpTable(1, 1, 0, 0, eq)
    rep = verify_table(Z, bad)
    assert not rep.sums_ok and not rep.is_rdp_table and rep.rdp1 is None


def test_rdp2_meet_on_lattice():
    t, _ = solve(ZZ, Equation((2, 1), (1, 2), (1, 1), (2, 2)))
    assert check_rdp2_meet(ZZ, t).status is Status.HOLDS


@pytest.mark.parametrize("name", list(gen.SWEEP_CARRIERS))
def test_random_tables_verify(name):
    desc = gen.SWEEP_CARRIERS[name]
    rng = random.Random(sum(map(ord, name)))
    for _ in range(60):
        eq = gen.equation(desc, rng, zero_bias=0.05)
        t, tr = solve(desc, eq)
        assert verify_table(desc, t, properties=False).is_rdp_table, (eq, tr)


def test_corner_table_frozen_integer_instance():
    # DERIVED: c11 = 1 - 1, c22 = -2 + 2
    t = wrdp_corner_table(Z, 1, 2, 2, 1, 1, 2)
    assert entries(t) == (0, 1, 2, 0)


def test_corner_table_on_equal_decompositions():
    # u = v: any common lower bound, here d1 = v2 gives c22 = 0
    t = wrdp_corner_table(Z, 3, 1, 3, 1, 1, 1)
    assert t.c12 == 1 and t.c22 == 0


def test_wrdp_route_reports_missing_witnesses():
    F = Free(3, (1, 1, Fraction(1, 2)))
    u1, u2 = F.normalize([(3, 1), (1, -1)]), g(1)
    v1, v2 = F.normalize([(3, 1), (2, -1)]), g(2)
    eq = Equation(((1, 0), u1), ((0, 1), u2), ((0, 1), v1), ((1, 0), v2))
    with pytest.raises(WrdpWitnessUnavailable):
        solve_lex_wrdp(ZZ, F, eq)


def test_ncdp_route_flags_directedness():
    A = Lex(M, Q2)
    L = Lex(A, Z)
    I = Mat(1, 0)
    eq = Equation(((I, (1, 3)), 1), ((I, (2, 1)), 0), ((I, (2, 1)), 0), ((I, (1, 3)), 1))
    t, tr = solve_lex_ncdp(A, Z, eq)
    assert tr.aux["requires"] == "G directed"
    assert verify_table(L, t, properties=False).is_rdp_table
