"""Numerical invariants of cyclic graded modules M = S/J.

Covers the Hilbert-Samuel function ℓ(M/I^{n+1}M) and its binomial-basis
coefficients e_i (e_1 is the Chern coefficient), the socle dimension
ℓ((IM : m)/IM) (the index of reducibility), the eventual polynomial of
ir(I^{n+1}) with coefficients f_i, and the finite-length torsion part
H = (J : m^infinity)/J.

All series entries are exact integers; "eventually polynomial" is made
concrete by windowed stabilization (a fit must reproduce W extra values).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Tuple

from itertools import combinations_with_replacement

from .errors import AlgebraError, NotStabilizedError, UnsupportedInputError
from .groebner import (Ideal, ReducedGB, buchberger, buchberger_lazy_homogeneous,
                       colon, krull_dim, maximal_ideal, normal_form, saturate,
                       vdim_artinian)
from .linalg import left_kernel
from .poly import Polynomial, RingSpec

STABILIZATION_WINDOW = 3
NMAX_START = 8
NMAX_CAP = 64


class QuotientModule:
    """The cyclic module M = S/J for a proper homogeneous ideal J (J = 0 allowed)."""

    def __init__(self, ring: RingSpec, relations: Optional[Ideal] = None):
        relations = relations if relations is not None else Ideal(ring, ())
        if relations.ring != ring:
            raise AlgebraError("relations live in a different ring")
        if not relations.is_homogeneous():
            raise UnsupportedInputError("non-homogeneous relations")
        self.ring = ring
        self.relations = relations
        self.gb = buchberger(relations)
        if self.gb.is_unit():
            raise AlgebraError("relations generate the unit ideal")
        self.dim = krull_dim(self.gb)

    def fingerprint(self) -> str:
        return self.relations.fingerprint()

    def is_monomial(self) -> bool:
        return self.gb.is_monomial()

    def __repr__(self):
        return f"QuotientModule({self.ring!r} / {self.relations!r})"


@dataclass(frozen=True)
class IntegerSeries:
    """Exact integer values h(start), h(start+1), ..., contiguous."""

    start: int
    values: Tuple[int, ...]

    @property
    def end(self) -> int:
        return self.start + len(self.values) - 1

    def value(self, n: int) -> int:
        return self.values[n - self.start]


@dataclass(frozen=True)
class BinomialPolynomial:
    """P(n) = sum_i (-1)^i coeffs[i] * C(n + degree - i, degree - i).

    ``stable_from`` is the least index from which P reproduces its source
    series exactly.
    """

    degree: int
    coeffs: Tuple[int, ...]
    stable_from: int

    def evaluate(self, n: int) -> int:
        s = self.degree
        return sum((-1) ** i * c * comb(n + s - i, s - i)
                   for i, c in enumerate(self.coeffs))


def _diffs(vals: List[int]) -> List[int]:
    return [vals[k + 1] - vals[k] for k in range(len(vals) - 1)]


def fit_binomial(series: IntegerSeries, degree: int,
                 window: int = STABILIZATION_WINDOW) -> BinomialPolynomial:
    """Extract binomial-basis coefficients by iterated finite differences.

    Fits on the last degree+1 points and demands that the ``window``
    preceding values are reproduced exactly; returns the least index from
    which the fit matches the series.
    """
    s = degree
    if s < 0:
        raise AlgebraError("degree must be nonnegative")
    if len(series.values) < s + 1 + window:
        raise NotStabilizedError(
            f"need at least {s + 1 + window} values, have {len(series.values)}")
    n1 = series.end
    base = n1 - s
    vals = list(series.values[-(s + 1):])
    coeffs: List[int] = []
    work = vals[:]
    for i in range(s + 1):
        w = work[:]
        for _ in range(s - i):
            w = _diffs(w)
        ci = (-1) ** i * w[0]
        coeffs.append(ci)
        work = [work[k] - (-1) ** i * ci * comb(base + k + s - i, s - i)
                for k in range(len(work))]
    fit = BinomialPolynomial(s, tuple(coeffs), base)
    for n in range(base - window, base):
        if fit.evaluate(n) != series.value(n):
            raise NotStabilizedError(
                f"fit from window [{base}, {n1}] does not reproduce value at n={n}")
    stable = base - window
    while stable > series.start and fit.evaluate(stable - 1) == series.value(stable - 1):
        stable -= 1
    return BinomialPolynomial(s, tuple(coeffs), stable)


# --- cached per-(module, ideal) power data ------------------------------------------

_LOCK = threading.Lock()
_PRODUCTS: Dict[tuple, Dict[tuple, Polynomial]] = {}  # (mfp, ifp) -> {multiset: product}
_POWER_GBS: Dict[tuple, ReducedGB] = {}               # (mfp, ifp, n) -> GB of J + I^{n+1}
_VALUES: Dict[tuple, int] = {}                        # (mfp, ifp, kind, n) -> int


def clear_invariant_caches():
    with _LOCK:
        _PRODUCTS.clear()
        _POWER_GBS.clear()
        _VALUES.clear()


def trim_bulk_caches():
    """Drop the memory-heavy per-sample data, keeping the integer values."""
    with _LOCK:
        _PRODUCTS.clear()
        _POWER_GBS.clear()


def _product_memo(module: QuotientModule, ideal: Ideal) -> Dict[tuple, Polynomial]:
    key = (module.fingerprint(), ideal.fingerprint())
    with _LOCK:
        memo = _PRODUCTS.get(key)
        if memo is None:
            memo = {(i,): g for i, g in enumerate(ideal.gens)}
            _PRODUCTS[key] = memo
    return memo


def _product_of(memo: Dict[tuple, Polynomial], gens: Tuple[Polynomial, ...],
                ms: tuple) -> Polynomial:
    hit = memo.get(ms)
    if hit is None:
        hit = _product_of(memo, gens, ms[:-1]) * gens[ms[-1]]
        memo[ms] = hit
    return hit


def _power_gb(module: QuotientModule, ideal: Ideal, n: int) -> ReducedGB:
    """GB of J + I^{n+1}; the I^{n+1} generators (all (n+1)-fold products)
    are materialized lazily so that degree-truncated ones are never built."""
    key = (module.fingerprint(), ideal.fingerprint(), n)
    with _LOCK:
        hit = _POWER_GBS.get(key)
    if hit is not None:
        return hit
    ring = module.ring
    gens = ideal.gens
    degs = [g.total_degree() for g in gens]
    memo = _product_memo(module, ideal)
    inputs: List[tuple] = [(g.total_degree(), dict(g.terms()))
                           for g in module.relations.gens]

    def thunk(ms):
        return lambda: dict(_product_of(memo, gens, ms).terms())

    for ms in combinations_with_replacement(range(len(gens)), n + 1):
        inputs.append((sum(degs[i] for i in ms), thunk(ms)))
    gb = buchberger_lazy_homogeneous(ring, inputs)
    with _LOCK:
        _POWER_GBS[key] = gb
    return gb


def _check_series_pre(module: QuotientModule, ideal: Ideal):
    if not ideal.is_homogeneous():
        raise UnsupportedInputError("non-homogeneous ideal")
    if ideal.is_zero:
        raise AlgebraError("series of the zero ideal")


def _prune_against_relations(module: QuotientModule, ideal: Ideal) -> Ideal:
    """Drop generators lying in J: J + I^{n+1} is unchanged and powers shrink."""
    kept = [g for g in ideal.gens if not normal_form(g, module.gb).is_zero()]
    if len(kept) == len(ideal.gens):
        return ideal
    return Ideal(ideal.ring, kept)


def _series(module: QuotientModule, ideal: Ideal, nmax: int, kind: str) -> IntegerSeries:
    _check_series_pre(module, ideal)
    ideal = _prune_against_relations(module, ideal)
    mfp, ifp = module.fingerprint(), ideal.fingerprint()
    out = []
    for n in range(nmax + 1):
        ck = (mfp, ifp, kind, n)
        with _LOCK:
            val = _VALUES.get(ck)
        if val is None:
            gb = _power_gb(module, ideal, n)
            if n == 0 and krull_dim(gb) != 0:
                raise AlgebraError("J + I is not zero-dimensional")
            if kind == "len":
                val = vdim_artinian(gb)
            else:
                val = len(socle_lifts(gb))
            with _LOCK:
                _VALUES[ck] = val
        out.append(val)
    return IntegerSeries(0, tuple(out))


def hs_series(module: QuotientModule, ideal: Ideal, nmax: int) -> IntegerSeries:
    """h(n) = ℓ(M / I^{n+1} M) = vdim S/(J + I^{n+1}) for n = 0..nmax."""
    return _series(module, ideal, nmax, "len")


def ir_series(module: QuotientModule, ideal: Ideal, nmax: int) -> IntegerSeries:
    """h(n) = socle dimension of M/I^{n+1}M for n = 0..nmax."""
    return _series(module, ideal, nmax, "soc")


def socle_lifts(gb: ReducedGB) -> List[Polynomial]:
    """A homogeneous basis of (Q : m)/Q for Artinian homogeneous Q, lifted to S."""
    from .groebner import std_monomials_by_degree
    ring = gb.ring
    field = ring.field
    levels = std_monomials_by_degree(gb)
    lifts: List[Polynomial] = []
    nf_cache: Dict[tuple, Polynomial] = {}
    for d in range(len(levels)):
        level = levels[d]
        target = levels[d + 1] if d + 1 < len(levels) else []
        tindex = {m: i for i, m in enumerate(target)}
        width = len(target)
        rows = []
        for b in level:
            row: Dict[int, object] = {}
            for i in range(ring.nvars):
                mono = b[:i] + (b[i] + 1,) + b[i + 1:]
                hit = nf_cache.get(mono)
                if hit is None:
                    hit = normal_form(ring.monomial(mono), gb)
                    nf_cache[mono] = hit
                for m, c in hit.terms():
                    col = i * width + tindex[m]
                    prev = row.get(col, field.zero) + c
                    if field.p is not None:
                        prev %= field.p
                    if prev:
                        row[col] = prev
                    else:
                        row.pop(col, None)
            rows.append(row)
        for vec in left_kernel(rows, field):
            lifts.append(Polynomial.from_terms(
                ring, [(level[i], c) for i, c in vec.items()]))
    return lifts


def socle_dim(module: QuotientModule, ideal: Ideal) -> int:
    """ℓ(((J+I) : m)/(J+I)): the index of reducibility of I on M."""
    return _series(module, ideal, 0, "soc").value(0)


def _adaptive_fit(module: QuotientModule, ideal: Ideal, degree: int,
                  kind: str) -> Tuple[BinomialPolynomial, IntegerSeries]:
    nmax = NMAX_START
    while True:
        series = _series(module, ideal, nmax, kind)
        try:
            return fit_binomial(series, degree), series
        except NotStabilizedError:
            if nmax >= NMAX_CAP:
                raise
            nmax = min(2 * nmax, NMAX_CAP)


def hilbert_fit(module: QuotientModule, ideal: Ideal) -> Tuple[BinomialPolynomial, IntegerSeries]:
    """Stabilized binomial fit of ℓ(M/I^{n+1}M) of degree dim M."""
    return _adaptive_fit(module, ideal, module.dim, "len")


def hilbert_coeffs(module: QuotientModule, ideal: Ideal) -> Tuple[int, ...]:
    """(e_0, ..., e_s): multiplicity, Chern coefficient, and the rest."""
    return hilbert_fit(module, ideal)[0].coeffs


def irreducible_fit(module: QuotientModule, ideal: Ideal) -> Tuple[BinomialPolynomial, IntegerSeries]:
    """Stabilized binomial fit of the socle series, degree dim M - 1."""
    if module.dim < 1:
        raise UnsupportedInputError("irreducible coefficients need dim M >= 1")
    return _adaptive_fit(module, ideal, module.dim - 1, "soc")


def irreducible_coeffs(module: QuotientModule, ideal: Ideal) -> Tuple[int, ...]:
    """(f_0, ..., f_{s-1}); f_0 is the irreducible multiplicity."""
    return irreducible_fit(module, ideal)[0].coeffs


def h0m(module: QuotientModule) -> Tuple[Ideal, int]:
    """(K, ℓ(K/J)) where K = J : m^infinity; nonzero length certifies depth 0."""
    ring = module.ring
    m = maximal_ideal(ring)
    K, _ = saturate(module.relations, m)
    length = 0
    cur = Ideal(ring, module.relations.gens)
    cur_gb = module.gb
    for k in K.gens:
        if normal_form(k, cur_gb).is_zero():
            continue
        step = colon(cur, Ideal(ring, (k,)))
        length += vdim_artinian(step)
        cur = cur + Ideal(ring, (k,))
        cur_gb = buchberger(cur)
    return K, length
