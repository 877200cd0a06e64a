"""Monomial ideal decompositions, associated primes, dimension filtration."""
import random

import pytest

from krull import (Ideal, QuotientModule, UnitIdealError, buchberger,
                   associated_primes, dimension_filtration,
                   irreducible_decomposition, is_monomial_ideal,
                   maximal_ideal, parse_ring, primary_decomposition,
                   saturate, socle_dim, unmixed_component)
from krull.errors import UnsupportedInputError
from krull.groebner import normal_form

from conftest import mk_ideal


def _component_ideals(ring, comps):
    return [c.ideal(ring) for c in comps]


def assert_decomposition_sound(ring, ideal, comps):
    """Intersection of components equals the ideal (double inclusion by NF),
    and no component contains the intersection of the others."""
    from krull import intersect
    inter = None
    ideals = _component_ideals(ring, comps)
    for ci in ideals:
        inter = ci if inter is None else intersect(inter, ci)
    assert buchberger(inter).basis == buchberger(ideal).basis
    if len(ideals) > 1:
        for skip in range(len(ideals)):
            rest = None
            for j, ci in enumerate(ideals):
                if j == skip:
                    continue
                rest = ci if rest is None else intersect(rest, ci)
            gb_skip = buchberger(ideals[skip])
            assert not all(normal_form(g, gb_skip).is_zero() for g in rest.gens)


# --- is_monomial_ideal ---------------------------------------------------------

def test_is_monomial_basic(qxy, ex1_ideal):
    assert is_monomial_ideal(mk_ideal(qxy, "x^2, x*y"))
    assert not is_monomial_ideal(mk_ideal(qxy, "x + y"))
    assert is_monomial_ideal(ex1_ideal)


def test_is_monomial_detects_hidden_monomial(qxy):
    # generators are not monomials but the ideal is
    assert is_monomial_ideal(mk_ideal(qxy, "x + y, x - y"))


# --- irreducible decomposition ----------------------------------------------------

def test_squarefree_split(qxy):
    comps = irreducible_decomposition(mk_ideal(qxy, "x*y"))
    assert {c.describe(qxy) for c in comps} == {"(x)", "(y)"}
    assert_decomposition_sound(qxy, mk_ideal(qxy, "x*y"), comps)


def test_split_with_embedded(qxy):
    I = mk_ideal(qxy, "x^2, x*y")
    comps = irreducible_decomposition(I)
    assert {c.describe(qxy) for c in comps} == {"(x)", "(x^2, y)"}
    assert_decomposition_sound(qxy, I, comps)


def test_split_artinian_matches_socle(qxy):
    I = mk_ideal(qxy, "x^2, x*y, y^3")
    comps = irreducible_decomposition(I)
    assert {c.describe(qxy) for c in comps} == {"(x^2, y)", "(x, y^3)"}
    assert_decomposition_sound(qxy, I, comps)
    module = QuotientModule(qxy)
    assert len(comps) == socle_dim(module, I)


def test_unit_ideal_rejected(qxy):
    with pytest.raises(UnitIdealError):
        irreducible_decomposition(Ideal(qxy, (qxy.one(),)))


def test_non_monomial_rejected(qxy):
    with pytest.raises(UnsupportedInputError):
        irreducible_decomposition(mk_ideal(qxy, "x + y"))


# --- primary decomposition, Ass -------------------------------------------------------

def test_primary_example_one(ex1_ring, ex1_ideal):
    prims = primary_decomposition(ex1_ideal)
    shown = {(tuple(sorted(str(g) for g in prim.gens)),
              tuple(sorted(str(g) for g in rad.gens))) for prim, rad in prims}
    assert shown == {(("y",), ("y",)),
                     (("x1", "x2", "x3"), ("x1", "x2", "x3"))}


def test_primary_embedded(qxy):
    prims = primary_decomposition(mk_ideal(qxy, "x^2, x*y"))
    as_strs = {(tuple(sorted(str(g) for g in prim.gens)),
                tuple(sorted(str(g) for g in rad.gens))) for prim, rad in prims}
    assert as_strs == {(("x",), ("x",)), (("x^2", "y"), ("x", "y"))}


def test_primary_of_primary_is_itself(qxy):
    I = mk_ideal(qxy, "x^2, y")
    prims = primary_decomposition(I)
    assert len(prims) == 1
    assert buchberger(prims[0][0]).basis == buchberger(I).basis


def test_ass_example_one(ex1_ring, ex1_ideal):
    ass = associated_primes(ex1_ideal)
    names = [{ex1_ring.names[i] for i in s} for s in ass]
    assert names == [{"y"}, {"x1", "x2", "x3"}]
    dims = {ex1_ring.nvars - len(s) for s in ass}
    assert dims == {1, 3}


def test_ass_example_two(ex2_ring, ex2_ideal):
    ass = associated_primes(ex2_ideal)
    names = [{ex2_ring.names[i] for i in s} for s in ass]
    assert names == [{"x", "z"}, {"x", "y", "z"}]
    dims = {ex2_ring.nvars - len(s) for s in ass}
    assert dims == {0, 1}


def test_ass_prime_input(qxyz):
    ass = associated_primes(mk_ideal(qxyz, "x, z"))
    assert ass == ((0, 2),)


# --- dimension filtration ----------------------------------------------------------------

def test_filtration_example_one(ex1_ring, ex1_ideal):
    chain = dimension_filtration(ex1_ideal)
    assert chain.dims == (1, 3)
    assert len(chain.ideals) == 3
    assert buchberger(chain.ideals[1]).basis == \
        buchberger(mk_ideal(ex1_ring, "y")).basis
    assert [str(g) for g in buchberger(chain.ideals[2]).basis] == ["1"]
    assert unmixed_component(ex1_ideal).gens == chain.ideals[1].gens


def test_filtration_trivial_for_cm(qxy):
    I = mk_ideal(qxy, "x^2, y^2")
    chain = dimension_filtration(I)
    assert chain.dims == (0,)
    assert unmixed_component(I).gens == I.gens


def test_filtration_example_two(ex2_ring, ex2_ideal):
    chain = dimension_filtration(ex2_ideal)
    assert chain.dims == (0, 1)
    K1 = buchberger(chain.ideals[1]).basis
    assert K1 == buchberger(mk_ideal(ex2_ring, "x^2, z^2")).basis
    assert buchberger(unmixed_component(ex2_ideal)).basis == K1


def test_filtration_zero_relations(qxyz):
    chain = dimension_filtration(Ideal(qxyz, ()))
    assert chain.dims == (3,)
    assert unmixed_component(Ideal(qxyz, ())).is_zero


def test_unmixed_saturation_consistency(ex2_ring, ex2_ideal):
    # lowest dimension present is 0, so K_1 must equal J : m^infinity
    chain = dimension_filtration(ex2_ideal)
    assert chain.dims[0] == 0
    S, _ = saturate(ex2_ideal, maximal_ideal(ex2_ring))
    assert buchberger(chain.ideals[1]).basis == buchberger(S).basis


def test_filtration_dims_match_ass(ex1_ring, ex1_ideal):
    chain = dimension_filtration(ex1_ideal)
    ass_dims = sorted({ex1_ring.nvars - len(s)
                       for s in associated_primes(ex1_ideal)})
    assert list(chain.dims) == ass_dims


# --- randomized soundness ----------------------------------------------------------------

def test_random_decompositions_sound(qxyz):
    rng = random.Random(23)
    for _ in range(15):
        gens = []
        for _ in range(rng.randint(1, 4)):
            mono = tuple(rng.randint(0, 3) for _ in range(3))
            if sum(mono):
                gens.append(qxyz.monomial(mono))
        if not gens:
            continue
        I = Ideal(qxyz, gens)
        comps = irreducible_decomposition(I)
        assert_decomposition_sound(qxyz, I, comps)
