"""Groebner engine and ideal operations against hand and brute-force oracles."""
import random

import pytest

from krull import (AlgebraError, GF, Ideal, Polynomial, QQ, RingSpec,
                   UnitIdealError, buchberger, colon, eliminate, intersect,
                   is_m_primary, krull_dim, maximal_ideal, monomials_of_degree,
                   normal_form, parse_poly, parse_poly_list, parse_ring,
                   saturate, vdim_artinian)
from krull.errors import UnsupportedInputError

from conftest import mk_ideal
from oracles import (count_standard_monomials_box, membership_oracle,
                     remainder_oracle, vdim_oracle)


def basis_strs(gb):
    return [str(g) for g in gb.basis]


# --- buchberger -----------------------------------------------------------------

def test_principal_ideal():
    ring = parse_ring("Q[x]")
    gb = buchberger(Ideal(ring, [ring.var("x")]))
    assert basis_strs(gb) == ["x"]


def test_monomial_gens_already_gb(qxyz):
    gb = buchberger(mk_ideal(qxyz, "x*y, x*z"))
    assert set(basis_strs(gb)) == {"x*y", "x*z"}


def test_circle_line_elimination_oracle(qxy):
    # substituting x = y into x^2+y^2-1 gives 2y^2-1, so the reduced (monic)
    # basis must be {x - y, y^2 - 1/2}; verify both inclusions by normal form
    I = mk_ideal(qxy, "x^2+y^2-1, x-y")
    gb = buchberger(I)
    assert basis_strs(gb) == ["x - y", "y^2 - 1/2"]
    for g in I.gens:
        assert normal_form(g, gb).is_zero()
    expected = mk_ideal(qxy, "x - y, y^2 - 1/2")
    gb2 = buchberger(expected)
    for g in gb.basis:
        assert normal_form(g, gb2).is_zero()


def test_zero_ideal_gb(qxy):
    assert buchberger(Ideal(qxy, ())).basis == ()


# --- normal form -------------------------------------------------------------------

def test_nf_member_is_zero(qxy):
    I = mk_ideal(qxy, "x^2+y^2-1, x-y")
    gb = buchberger(I)
    f = parse_poly("(x-y)*(x+y) + x^2+y^2-1", qxy)
    assert normal_form(f, gb).is_zero()


def test_nf_one_survives_proper_ideal(qxy):
    gb = buchberger(mk_ideal(qxy, "x^2, x*y"))
    assert normal_form(qxy.one(), gb) == qxy.one()


def test_nf_matches_linear_algebra_remainder(qxy):
    I = mk_ideal(qxy, "x^2+y^2-1, x-y")
    gb = buchberger(I)
    f = parse_poly("x^2*y", qxy)
    assert normal_form(f, gb) == remainder_oracle(f, I, 3)


def test_nf_idempotent(qxy):
    gb = buchberger(mk_ideal(qxy, "x^2+y^2-1, x-y"))
    f = parse_poly("x^3*y - 2*x + 1", qxy)
    r = normal_form(f, gb)
    assert normal_form(r, gb) == r


# --- intersect ------------------------------------------------------------------------

def test_intersect_coprime_principal(qxy):
    got = buchberger(intersect(mk_ideal(qxy, "x"), mk_ideal(qxy, "y")))
    assert basis_strs(got) == ["x*y"]


def test_intersect_example_family(ex1_ring):
    xs = Ideal(ex1_ring, [ex1_ring.var(i) for i in range(3)])
    y = Ideal(ex1_ring, [ex1_ring.var("y")])
    J = intersect(xs, y)
    gb = buchberger(J)
    expected = buchberger(mk_ideal(ex1_ring, "x1*y, x2*y, x3*y"))
    assert gb.basis == expected.basis
    # membership both ways by normal form
    for g in J.gens:
        assert normal_form(g, expected).is_zero()
    for g in expected.basis:
        assert normal_form(g, gb).is_zero()


def test_intersect_self(qxyz):
    I = mk_ideal(qxyz, "x^2 - y*z, z")
    assert buchberger(intersect(I, I)).basis == buchberger(I).basis


def test_intersect_general_non_monomial(qxy):
    a = mk_ideal(qxy, "x + y")
    b = mk_ideal(qxy, "x - y")
    got = buchberger(intersect(a, b))
    assert basis_strs(got) == ["x^2 - y^2"]


# --- colon ------------------------------------------------------------------------------

def _assert_colon_sound(I, J, C):
    gbI = buchberger(I)
    for c in C.gens:
        for j in J.gens:
            assert normal_form(c * j, gbI).is_zero()
    gbC = buchberger(C)
    for g in I.gens:
        assert normal_form(g, gbC).is_zero()


def test_colon_by_unit(qxy):
    I = mk_ideal(qxy, "x^2, x*y")
    C = colon(I, Ideal(qxy, [qxy.one()]))
    assert buchberger(C).basis == buchberger(I).basis


def test_colon_monomial(qxy):
    I = mk_ideal(qxy, "x^2, x*y")
    J = mk_ideal(qxy, "x")
    C = colon(I, J)
    assert set(basis_strs(buchberger(C))) == {"x", "y"}
    _assert_colon_sound(I, J, C)


def test_colon_maximality_by_enumeration(qxyz):
    # (x,y) : (x,y,z) -- every degree-<=2 poly f with f*m in (x,y) must lie
    # in the computed colon, and the computed colon must satisfy f*m in (x,y)
    q = mk_ideal(qxyz, "x, y")
    m = maximal_ideal(qxyz)
    C = colon(q, m)
    _assert_colon_sound(q, m, C)
    gbq = buchberger(q)
    gbC = buchberger(C)
    for d in (1, 2):
        for mono in monomials_of_degree(3, d):
            f = qxyz.monomial(mono)
            holds = all(normal_form(f * v, gbq).is_zero() for v in qxyz.vars)
            assert holds == normal_form(f, gbC).is_zero()
    assert basis_strs(gbC) == ["y", "x"]


def test_colon_zero_ideal_error(qxy):
    with pytest.raises(AlgebraError):
        colon(mk_ideal(qxy, "x"), Ideal(qxy, ()))


def test_colon_artinian_route_matches_elimination(qxy):
    # force both strategies on the same input and compare
    from krull.groebner import _colon_single_elim
    I = mk_ideal(qxy, "x^3, y^2 + x*y")
    f = parse_poly("x*y", qxy)
    fast = colon(I, Ideal(qxy, [f]))
    slow = _colon_single_elim(I, f)
    assert buchberger(fast).basis == buchberger(slow).basis


# --- saturate ------------------------------------------------------------------------------

def test_saturate_principal_power(qxy):
    S, n = saturate(mk_ideal(qxy, "x^2"), mk_ideal(qxy, "x"))
    assert basis_strs(buchberger(S)) == ["1"]
    assert n == 2


def test_saturate_example_family_two(ex2_ring, ex2_ideal):
    S, _ = saturate(ex2_ideal, maximal_ideal(ex2_ring))
    assert buchberger(S).basis == buchberger(mk_ideal(ex2_ring, "x^2, z^2")).basis


def test_saturate_by_unit_is_identity(qxy):
    I = mk_ideal(qxy, "x^2")
    S, n = saturate(I, Ideal(qxy, [qxy.one()]))
    assert n == 0
    assert buchberger(S).basis == buchberger(I).basis


def test_saturate_soundness(qxyz):
    I = mk_ideal(qxyz, "x^2*z, y*z^2")
    S, n = saturate(I, mk_ideal(qxyz, "z"))
    _assert_colon_sound(I, mk_ideal(qxyz, "z" * 1), colon(I, mk_ideal(qxyz, "z")))
    assert buchberger(S).basis == buchberger(mk_ideal(qxyz, "x^2, y")).basis


# --- eliminate -----------------------------------------------------------------------------

def test_eliminate_drops_dependent(qxy):
    got = eliminate(mk_ideal(qxy, "x - y"), ["y"])
    assert got.is_zero


def test_eliminate_substitution_oracle(qxyz):
    got = buchberger(eliminate(mk_ideal(qxyz, "x - y^2, y - z"), ["x", "z"]))
    assert got.basis == buchberger(mk_ideal(qxyz, "x - z^2")).basis


def test_eliminate_keep_all(qxyz):
    I = mk_ideal(qxyz, "x - y^2")
    assert eliminate(I, ["x", "y", "z"]).gens == I.gens


def test_eliminate_empty_keep_error(qxy):
    with pytest.raises(AlgebraError):
        eliminate(mk_ideal(qxy, "x"), [])


# --- dimension and length -----------------------------------------------------------------

def test_krull_dim_zero_ideal(qxyz):
    assert krull_dim(Ideal(qxyz, ())) == 3


def test_krull_dim_example_two(ex2_ideal):
    assert krull_dim(ex2_ideal) == 1


def test_krull_dim_example_one(ex1_ideal):
    assert krull_dim(ex1_ideal) == 3


def test_krull_dim_unit_ideal_error(qxy):
    with pytest.raises(UnitIdealError):
        krull_dim(mk_ideal(qxy, "x, x+1"))


def test_vdim_point(qxy):
    assert vdim_artinian(mk_ideal(qxy, "x, y")) == 1


def test_vdim_square(qxy):
    I = mk_ideal(qxy, "x^2, y^2")
    assert vdim_artinian(I) == 4
    assert vdim_artinian(I) == count_standard_monomials_box(
        [(2, 0), (0, 2)], [3, 3])


def test_vdim_staircase(qxy):
    # standard monomials {1, x, y, y^2}
    assert vdim_artinian(mk_ideal(qxy, "x^2, x*y, y^3")) == 4


def test_vdim_positive_dimension_error(qxy):
    with pytest.raises(AlgebraError):
        vdim_artinian(mk_ideal(qxy, "x"))


def test_is_m_primary(qxyz, ex2_ideal):
    assert is_m_primary(mk_ideal(qxyz, "x, y, z"))
    assert not is_m_primary(mk_ideal(parse_ring("Q[x,y]"), "x"))
    assert not is_m_primary(ex2_ideal)


def test_is_m_primary_rejects_inhomogeneous(qxy):
    with pytest.raises(UnsupportedInputError):
        is_m_primary(mk_ideal(qxy, "x^2 - 1"))


# --- randomized cross-checks (small; the full suites run in the acceptance module) -----

def _random_poly(ring, rng, deg, homogeneous=False):
    n = ring.nvars
    items = []
    degs = [deg] if homogeneous else range(deg + 1)
    for d in degs:
        for mono in monomials_of_degree(n, d):
            if rng.random() < 0.4:
                items.append((mono, rng.randint(1, 5)))
    return Polynomial.from_terms(ring, items)


def test_gb_canonical_under_permutation_and_scaling(qxy):
    rng = random.Random(5)
    for _ in range(10):
        gens = [_random_poly(qxy, rng, rng.randint(1, 3)) for _ in range(3)]
        gens = [g for g in gens if g]
        if not gens:
            continue
        base = buchberger(Ideal(qxy, gens)).basis
        shuffled = gens[:]
        rng.shuffle(shuffled)
        shuffled = [g.scale(rng.randint(1, 9)) for g in shuffled]
        assert buchberger(Ideal(qxy, shuffled)).basis == base


def test_membership_agrees_with_oracle(qxy):
    rng = random.Random(11)
    for _ in range(10):
        gens = [_random_poly(qxy, rng, rng.randint(1, 3), homogeneous=True)
                for _ in range(2)]
        gens = [g for g in gens if g]
        if not gens:
            continue
        I = Ideal(qxy, gens)
        gb = buchberger(I)
        for _ in range(5):
            f = _random_poly(qxy, rng, rng.randint(1, 4), homogeneous=True)
            if not f:
                continue
            assert normal_form(f, gb).is_zero() == membership_oracle(f, I)


def test_vdim_agrees_with_oracle(qxy):
    rng = random.Random(17)
    for _ in range(10):
        gens = [qxy.monomial((rng.randint(1, 3), 0)),
                qxy.monomial((0, rng.randint(1, 3))),
                qxy.monomial((rng.randint(0, 2), rng.randint(0, 2)))]
        I = Ideal(qxy, [g for g in gens if g.total_degree() > 0])
        assert vdim_artinian(I) == vdim_oracle(I)
