"""Coefficient fields: the rationals and prime fields F_p.

Elements are plain Python values: ``fractions.Fraction`` over Q, ``int`` in
[0, p) over F_p.  The field object carries the arithmetic; polynomials store
bare elements for speed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

FieldElement = Union[int, Fraction]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3317044064679887385961981."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q; elements are Fractions in lowest terms."""

    p = None
    char = 0

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, value) -> Fraction:
        return Fraction(value)

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime p; elements are ints in [0, p)."""

    char = property(lambda self: self.p)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def of(self, value) -> int:
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} divisible by characteristic {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        return value % self.p

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    def neg(self, a: int) -> int:
        return -a % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"F{self.p}"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
