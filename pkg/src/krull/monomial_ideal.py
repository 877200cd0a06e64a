"""Combinatorics of monomial ideals: irreducible and primary decomposition,
associated primes, the dimension filtration and the unmixed component.

All computations run on exponent tuples; ideals are only wrapped on the way
in and out.  Decompositions are deterministic: generators are split in sorted
order and components are returned in a canonical order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import UnitIdealError, UnsupportedInputError
from .groebner import Ideal, ReducedGB, buchberger, colon, krull_dim, _minimalize
from .poly import Monomial, RingSpec, mono_div, mono_divides, mono_lcm


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """An irreducible monomial ideal: pure variable powers (x_a^{e_a} : a in A)."""

    exponents: Tuple[Tuple[int, int], ...]  # sorted (variable index, exponent >= 1)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.exponents)

    def gens(self, nvars: int) -> Tuple[Monomial, ...]:
        return tuple(tuple(e if j == i else 0 for j in range(nvars))
                     for i, e in self.exponents)

    def ideal(self, ring: RingSpec) -> Ideal:
        return Ideal(ring, [ring.monomial(m) for m in self.gens(ring.nvars)])

    def describe(self, ring: RingSpec) -> str:
        return "(" + ", ".join(
            f"{ring.names[i]}^{e}" if e > 1 else ring.names[i]
            for i, e in self.exponents) + ")"


@dataclass(frozen=True)
class FiltrationChain:
    """K_0 = J ⊆ K_1 ⊆ ... ⊆ K_t = (1) with dims of D_i = K_i/J strictly rising."""

    base: Ideal
    ideals: Tuple[Ideal, ...]
    dims: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.dims)


def is_monomial_ideal(ideal: Ideal) -> bool:
    """True iff the reduced GB consists of monomials (order-independent)."""
    if ideal.has_monomial_gens():
        return True
    return buchberger(ideal).is_monomial()


def minimal_monomial_gens(ideal: Ideal) -> Tuple[Monomial, ...]:
    if ideal.has_monomial_gens():
        return _minimalize(g.leading_monomial() for g in ideal.gens)
    gb = buchberger(ideal)
    if not gb.is_monomial():
        raise UnsupportedInputError("not a monomial ideal")
    return _minimalize(gb.leads)


def _mono_ideal_contains(container: Sequence[Monomial], sub: Sequence[Monomial]) -> bool:
    return all(any(mono_divides(c, m) for c in container) for m in sub)


def _mono_intersect(a: Sequence[Monomial], b: Sequence[Monomial]) -> Tuple[Monomial, ...]:
    return _minimalize(mono_lcm(x, y) for x in a for y in b)


def _split(gens: FrozenSet[Monomial], nvars: int,
           memo: Dict[FrozenSet[Monomial], FrozenSet[IrreducibleComponent]]
           ) -> FrozenSet[IrreducibleComponent]:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    mixed = None
    for m in sorted(gens):
        if sum(1 for e in m if e) >= 2:
            mixed = m
            break
    if mixed is None:
        pairs = sorted((i, m[i]) for m in gens for i in range(nvars) if m[i])
        out = frozenset([IrreducibleComponent(tuple(pairs))])
        memo[gens] = out
        return out
    i = next(j for j, e in enumerate(mixed) if e)
    power = tuple(mixed[i] if j == i else 0 for j in range(nvars))
    rest = tuple(0 if j == i else e for j, e in enumerate(mixed))
    plus = frozenset(_minimalize(list(gens) + [power]))
    other = frozenset(_minimalize([g for g in gens if g != mixed] + [rest]))
    out = _split(plus, nvars, memo) | _split(other, nvars, memo)
    memo[gens] = out
    return out


def _prune_irredundant(comps: List[IrreducibleComponent], nvars: int
                       ) -> List[IrreducibleComponent]:
    comps = sorted(set(comps))
    gens = [c.gens(nvars) for c in comps]
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for idx in range(len(comps)):
            rest = None
            for j, g in enumerate(gens):
                if j == idx:
                    continue
                rest = g if rest is None else _mono_intersect(rest, g)
            if rest is not None and _mono_ideal_contains(gens[idx], rest):
                del comps[idx]
                del gens[idx]
                changed = True
                break
    return comps


def irreducible_decomposition(ideal: Ideal) -> Tuple[IrreducibleComponent, ...]:
    """The irredundant irreducible decomposition of a proper monomial ideal."""
    gens = minimal_monomial_gens(ideal)
    nvars = ideal.ring.nvars
    if any(sum(m) == 0 for m in gens):
        raise UnitIdealError("unit ideal")
    if not gens:
        raise UnsupportedInputError("zero ideal has no irreducible decomposition")
    comps = _split(frozenset(gens), nvars, {})
    return tuple(_prune_irredundant(list(comps), nvars))


def primary_decomposition(ideal: Ideal) -> Tuple[Tuple[Ideal, Ideal], ...]:
    """Irredundant primary decomposition: (primary component, prime radical) pairs."""
    ring = ideal.ring
    if ideal.is_zero:
        zero = Ideal(ring, ())
        return ((zero, zero),)
    comps = irreducible_decomposition(ideal)
    groups: Dict[Tuple[int, ...], List[IrreducibleComponent]] = {}
    for c in comps:
        groups.setdefault(c.support, []).append(c)
    out = []
    for support in sorted(groups, key=lambda s: (len(s), s)):
        inter = None
        for c in groups[support]:
            g = c.gens(ring.nvars)
            inter = g if inter is None else _mono_intersect(inter, g)
        primary = Ideal(ring, [ring.monomial(m) for m in inter])
        radical = Ideal(ring, [ring.var(i) for i in support])
        out.append((primary, radical))
    return tuple(out)


def associated_primes(ideal: Ideal) -> Tuple[Tuple[int, ...], ...]:
    """Ass(S/I) for monomial I, each prime given by its variable index tuple."""
    if ideal.is_zero:
        return ((),)
    comps = irreducible_decomposition(ideal)
    supports = sorted({c.support for c in comps}, key=lambda s: (len(s), s))
    return tuple(supports)


def dimension_filtration(ideal: Ideal) -> FiltrationChain:
    """The chain K_0 = J ⊆ ... ⊆ K_t = (1) realizing the dimension filtration."""
    ring = ideal.ring
    n = ring.nvars
    primaries = primary_decomposition(ideal)
    with_dims = [(n - len(rad.gens), prim) for prim, rad in primaries]
    lam = sorted({d for d, _ in with_dims})
    s = krull_dim(ideal)
    if lam[-1] != s:
        raise AssertionError("Assh dimension mismatch")
    ideals = [Ideal(ring, ideal.gens)]
    for i in range(len(lam) - 1):
        inter = None
        for d, prim in with_dims:
            if d >= lam[i + 1]:
                g = tuple(p.leading_monomial() for p in prim.gens)
                inter = g if inter is None else _mono_intersect(inter, g)
        ideals.append(Ideal(ring, [ring.monomial(m) for m in inter]))
    ideals.append(Ideal(ring, (ring.one(),)))
    chain = FiltrationChain(ideal, tuple(ideals), tuple(lam))
    _verify_chain(chain)
    return chain


def _verify_chain(chain: FiltrationChain):
    """dim D_i = dim S/(J : K_i) must equal the label d_i; chain strictly ascending."""
    base_gens = [g.leading_monomial() for g in chain.base.gens]
    for i in range(1, len(chain.ideals) - 1):
        k_gens = [g.leading_monomial() for g in chain.ideals[i].gens]
        ann = colon(chain.base, chain.ideals[i])
        if krull_dim(ann) != chain.dims[i - 1]:
            raise AssertionError("filtration dimension check failed")
        prev = base_gens if i == 1 else \
            [g.leading_monomial() for g in chain.ideals[i - 1].gens]
        if not _mono_ideal_contains(k_gens, prev):
            raise AssertionError("filtration chain not ascending")
        if _mono_ideal_contains(prev, k_gens):
            raise AssertionError("filtration chain not strict")


def unmixed_component(ideal: Ideal) -> Ideal:
    """K_{t-1}; equals J itself when the module is already unmixed (t = 1)."""
    chain = dimension_filtration(ideal)
    return chain.ideals[-2]
