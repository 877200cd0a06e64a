"""Monomials, monomial orders, ring specifications and exact polynomials.

A monomial is a bare exponent tuple of fixed width.  A polynomial is an
immutable mapping monomial -> nonzero coefficient together with its ring.
All arithmetic is exact; canonical form (no zero coefficients, reduced
residues / lowest-term fractions) is maintained eagerly.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Optional, Tuple

from .errors import RingMismatchError
from .field import FieldElement, PrimeField, QQ, RationalField

Monomial = Tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of the given width and total degree."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


class MonomialOrder:
    """A total, multiplicative well-ordering of monomials.

    ``key`` maps a monomial to a tuple that sorts ascending in the order, so
    ``max(monos, key=order.key)`` is the leading monomial.
    """

    __slots__ = ("name", "block", "_key")

    def __init__(self, name: str, block: Optional[Tuple[int, ...]] = None,
                 nvars: Optional[int] = None):
        self.name = name
        self.block = block
        if name == "grevlex":
            self._key = lambda m: (sum(m), tuple(-e for e in reversed(m)))
        elif name == "lex":
            self._key = lambda m: m
        elif name == "elimination":
            if block is None or nvars is None:
                raise ValueError("elimination order needs block and nvars")
            rest = tuple(i for i in range(nvars) if i not in set(block))
            blk = tuple(block)

            def _key(m, _blk=blk, _rest=rest):
                return (sum(m[i] for i in _blk),
                        tuple(-m[i] for i in reversed(_blk)),
                        sum(m[i] for i in _rest),
                        tuple(-m[i] for i in reversed(_rest)))

            self._key = _key
        else:
            raise ValueError(f"unknown order {name!r}")

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        return self._key

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def elimination(cls, block: Iterable[int], nvars: int) -> "MonomialOrder":
        """Block order: the ``block`` variables come first (grevlex in each block)."""
        return cls("elimination", tuple(block), nvars)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.name == other.name and self.block == other.block)

    def __hash__(self):
        return hash((self.name, self.block))

    def __repr__(self):
        if self.name == "elimination":
            return f"elimination{self.block}"
        return self.name


GREVLEX = MonomialOrder.grevlex()
LEX = MonomialOrder.lex()

_IDENT_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring: coefficient field, ordered variables, default order."""

    field: object
    names: Tuple[str, ...]
    order: MonomialOrder = dc_field(default_factory=MonomialOrder.grevlex)

    def __post_init__(self):
        if len(self.names) < 1:
            raise ValueError("a ring needs at least one variable")
        seen = set()
        for nm in self.names:
            if not nm or nm[0].isdigit() or not set(nm) <= _IDENT_OK:
                raise ValueError(f"bad variable name {nm!r}")
            if nm in seen:
                raise ValueError(f"duplicate variable {nm!r}")
            seen.add(nm)
        object.__setattr__(self, "names", tuple(self.names))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.of(c)
        return Polynomial(self, {} if c == 0 else {(0,) * self.nvars: c})

    def var(self, which) -> "Polynomial":
        i = self.names.index(which) if isinstance(which, str) else which
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {mono: self.field.one})

    @property
    def vars(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        c = self.field.of(coeff)
        return Polynomial(self, {tuple(exps): c} if c != 0 else {})

    def __repr__(self):
        order = "" if self.order == GREVLEX else f" {self.order!r}"
        return f"{self.field!r}[{','.join(self.names)}]{order}"


class Polynomial:
    """Immutable exact multivariate polynomial over the ring's field."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Dict[Monomial, FieldElement]):
        self.ring = ring
        self._terms = terms
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_terms(cls, ring: RingSpec, items: Iterable[Tuple[Monomial, object]]) -> "Polynomial":
        of = ring.field.of
        acc: Dict[Monomial, FieldElement] = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != ring.nvars:
                raise ValueError("monomial width does not match ring")
            v = acc.get(mono, ring.field.zero) + of(c)
            if ring.field.p is not None:
                v %= ring.field.p
            if v:
                acc[mono] = v
            else:
                acc.pop(mono, None)
        return cls(ring, acc)

    # -- queries -----------------------------------------------------------

    def terms(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coeff(self, mono: Monomial) -> FieldElement:
        return self._terms.get(tuple(mono), self.ring.field.zero)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self._terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or self._terms.keys() == {(0,) * self.ring.nvars}

    def leading_term(self, order: Optional[MonomialOrder] = None) -> Tuple[Monomial, FieldElement]:
        """Order-maximal (monomial, coefficient); raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        order = order or self.ring.order
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        return self.leading_term(order)[0]

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands in different rings: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        p = self.ring.field.p
        res = dict(self._terms)
        for m, c in other._terms.items():
            v = res.get(m)
            v = c if v is None else v + c
            if p is not None:
                v %= p
            if v:
                res[m] = v
            else:
                res.pop(m, None)
        return Polynomial(self.ring, res)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        p = self.ring.field.p
        if p is None:
            return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})
        return Polynomial(self.ring, {m: p - c for m, c in self._terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        p = self.ring.field.p
        res: Dict[Monomial, FieldElement] = {}
        small, big = (self._terms, other._terms)
        if len(small) > len(big):
            small, big = big, small
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = res.get(m)
                v = c1 * c2 if v is None else v + c1 * c2
                res[m] = v
        if p is not None:
            res = {m: v % p for m, v in res.items() if v % p}
        else:
            res = {m: v for m, v in res.items() if v}
        return Polynomial(self.ring, res)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        """Multiply by a field scalar."""
        c = self.ring.field.of(c)
        if c == 0:
            return self.ring.zero()
        p = self.ring.field.p
        if p is None:
            return Polynomial(self.ring, {m: v * c for m, v in self._terms.items()})
        return Polynomial(self.ring, {m: v * c % p for m, v in self._terms.items()})

    def shift(self, mono: Monomial) -> "Polynomial":
        """Multiply by a single monomial."""
        mono = tuple(mono)
        return Polynomial(self.ring,
                          {tuple(x + y for x, y in zip(m, mono)): c
                           for m, c in self._terms.items()})

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        if not self._terms:
            return self
        _, lc = self.leading_term(order)
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- printing --------------------------------------------------------------

    def _term_str(self, mono: Monomial, coeff: FieldElement) -> Tuple[str, str]:
        """(sign, body) of one term; sign is '+' or '-'."""
        sign = "+"
        if isinstance(coeff, Fraction) and coeff < 0:
            sign, coeff = "-", -coeff
        factors = []
        for name, e in zip(self.ring.names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            return sign, str(coeff)
        if coeff == 1:
            return sign, "*".join(factors)
        return sign, f"{coeff}*" + "*".join(factors)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        key = self.ring.order.key
        parts = []
        for mono in sorted(self._terms, key=key, reverse=True):
            sign, body = self._term_str(mono, self._terms[mono])
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"<{self} over {self.ring!r}>"
