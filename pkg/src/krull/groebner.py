"""Buchberger's algorithm, reduced Groebner bases and ideal-theoretic operations.

The engine uses the normal selection strategy (smallest lcm degree first) with
Buchberger's coprimality and chain criteria.  For homogeneous input two
additional devices keep large Artinian computations tractable:

* degree truncation: once every monomial of some degree D is divisible by a
  leading term of the current basis, any S-pair with lcm degree >= D and any
  remaining generator of degree >= D reduces to zero (a nonzero remainder
  would be supported on standard monomials of that degree, of which there are
  none) and is discarded;
* dense coefficient rows: over F_p, reductions in a fixed degree run on
  numpy int64 vectors indexed by the sorted monomials of that degree.

Both devices change nothing observable: the result is the unique reduced
Groebner basis.
"""
from __future__ import annotations

import hashlib
import heapq
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (AlgebraError, ResourceLimitError, RingMismatchError,
                     UnitIdealError, UnsupportedInputError)
from .linalg import left_kernel
from .poly import (Monomial, MonomialOrder, Polynomial, RingSpec, mono_div,
                   mono_divides, mono_lcm, monomials_of_degree)

DEFAULT_PAIR_LIMIT = 1_000_000
_SATURATION_CAP = 200
_VECTOR_MIN_DIM = 48
_CACHE_MAX_TERMS = 20_000


class Ideal:
    """A finitely generated ideal: ring plus a tuple of nonzero generators."""

    __slots__ = ("ring", "gens", "_fp")

    def __init__(self, ring: RingSpec, gens: Iterable[Polynomial] = ()):
        self.ring = ring
        out = []
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
            if g:
                out.append(g)
        self.gens = tuple(out)
        self._fp = None

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def has_monomial_gens(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("ideal sum across rings")
        return Ideal(self.ring, self.gens + other.gens)

    def fingerprint(self) -> str:
        if self._fp is None:
            h = hashlib.sha256()
            h.update(repr(self.ring).encode())
            for s in sorted(str(g) for g in self.gens):
                h.update(b"|")
                h.update(s.encode())
            self._fp = h.hexdigest()
        return self._fp

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"


def maximal_ideal(ring: RingSpec) -> Ideal:
    """The irrelevant maximal ideal (all variables)."""
    return Ideal(ring, ring.vars)


class ReducedGB:
    """The unique reduced Groebner basis of an ideal for a fixed order."""

    __slots__ = ("ring", "order", "basis", "source", "_leads", "_levels", "_hf")

    def __init__(self, ring: RingSpec, order: MonomialOrder,
                 basis: Tuple[Polynomial, ...], source: Optional[Ideal] = None):
        self.ring = ring
        self.order = order
        self.basis = basis
        self.source = source
        self._leads = None
        self._levels = None
        self._hf = None

    @property
    def leads(self) -> Tuple[Monomial, ...]:
        if self._leads is None:
            self._leads = tuple(g.leading_monomial(self.order) for g in self.basis)
        return self._leads

    @property
    def fingerprint(self) -> str:
        if self.source is not None:
            return self.source.fingerprint()
        return Ideal(self.ring, self.basis).fingerprint()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.basis)

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.basis)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def __eq__(self, other):
        return (isinstance(other, ReducedGB) and self.ring == other.ring
                and self.order == other.order and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ring, self.order, self.basis))

    def __repr__(self):
        return f"ReducedGB[{', '.join(str(g) for g in self.basis) or '0'}]"


# --- caches --------------------------------------------------------------------

_GB_CACHE: Dict[tuple, ReducedGB] = {}
_GB_LOCK = threading.Lock()


def clear_gb_cache():
    with _GB_LOCK:
        _GB_CACHE.clear()


# --- the Buchberger engine -------------------------------------------------------


class _Engine:
    def __init__(self, ring: RingSpec, inputs: Sequence[tuple],
                 order: MonomialOrder, pair_limit: int, homog: bool):
        """``inputs``: (degree, payload) pairs; payload is a term dict or a
        zero-argument callable producing one (materialized only if the
        generator survives degree truncation)."""
        self.ring = ring
        self.order = order
        self.key = order.key
        self.field = ring.field
        self.p = ring.field.p
        self.pair_limit = pair_limit
        self.homog = homog
        self.n = ring.nvars

        self.G: List[Dict[Monomial, object]] = []   # monic term dicts
        self.leads: List[Monomial] = []
        self.ldeg: List[int] = []

        self.events: List[tuple] = []                # heap (deg, kind, seq, payload)
        self.pending: set = set()                    # queued index pairs
        self.seq = itertools.count()
        self.full_deg: Optional[int] = None
        self.full_mark = -1                          # basis size at last recompute
        self.processed = 0

        # per-degree dense contexts (vector path)
        self.deg_monos: Dict[int, list] = {}
        self.deg_index: Dict[int, dict] = {}
        self.rows: Dict[tuple, tuple] = {}           # (gi, shift) -> (idx arr, val arr)
        self.red_at: Dict[int, list] = {}            # degree -> per-position (gi, watermark)

        for deg, payload in sorted(inputs, key=lambda t: t[0]):
            heapq.heappush(self.events, (deg, 0, next(self.seq), payload))

    # -- degree context ---------------------------------------------------------

    def _ctx(self, d: int):
        monos = self.deg_monos.get(d)
        if monos is None:
            monos = sorted(monomials_of_degree(self.n, d), key=self.key, reverse=True)
            self.deg_monos[d] = monos
            self.deg_index[d] = {m: i for i, m in enumerate(monos)}
            self.red_at[d] = [None] * len(monos)
        return monos, self.deg_index[d]

    def _use_vector(self, d: int) -> bool:
        if not self.homog or self.p is None:
            return False
        monos, _ = self._ctx(d)
        return len(monos) >= _VECTOR_MIN_DIM

    def _find_reducer(self, m: Monomial) -> Optional[int]:
        for i, lm in enumerate(self.leads):
            if mono_divides(lm, m):
                return i
        return None

    def _reducer_at(self, d: int, pos: int) -> Optional[int]:
        cached = self.red_at[d][pos]
        if cached is not None:
            gi, mark = cached
            if gi is not None:
                return gi
            if mark == len(self.G):
                return None
            start = mark
        else:
            start = 0
        m = self.deg_monos[d][pos]
        for i in range(start, len(self.G)):
            if mono_divides(self.leads[i], m):
                self.red_at[d][pos] = (i, len(self.G))
                return i
        self.red_at[d][pos] = (None, len(self.G))
        return None

    def _row(self, gi: int, shift: Monomial, d: int):
        keyr = (gi, shift)
        row = self.rows.get(keyr)
        if row is None:
            index = self.deg_index[d]
            g = self.G[gi]
            idx = np.empty(len(g), dtype=np.int64)
            val = np.empty(len(g), dtype=np.int64)
            for k, (m, c) in enumerate(g.items()):
                idx[k] = index[tuple(a + b for a, b in zip(m, shift))]
                val[k] = c
            ordnung = np.argsort(idx)
            row = (idx[ordnung], val[ordnung])
            if len(self.rows) > 200_000:
                self.rows.clear()
            self.rows[keyr] = row
        return row

    # -- integer normalization (rational case) ------------------------------------

    def _intify(self, terms: Dict[Monomial, object]) -> Dict[Monomial, int]:
        """Scale a Fraction dict to primitive integers with positive lead."""
        if not terms:
            return {}
        den = 1
        for c in terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        ints = {m: int(c * den) for m, c in terms.items()}
        return self._strip_content(ints)

    def _strip_content(self, terms: Dict[Monomial, int]) -> Dict[Monomial, int]:
        g = 0
        for v in terms.values():
            g = gcd(g, v)
            if g == 1:
                break
        if terms and terms[max(terms, key=self.key)] < 0:
            g = -g
        if g not in (0, 1):
            terms = {m: v // g for m, v in terms.items()}
        return terms

    # -- reductions ---------------------------------------------------------------

    def reduce_dict(self, terms: Dict[Monomial, object]) -> Dict[Monomial, object]:
        """Full normal form of a term dict against the current basis.

        Over F_p coefficients stay reduced residues and reducers are monic.
        Over Q everything is primitive-integer; each step cross-multiplies
        (work <- f1*work - f2*shift*g), which also rescales the remainder
        collected so far; content is stripped periodically.
        """
        p = self.p
        key = self.key
        if p is not None:
            work = dict(terms)
            rem: Dict[Monomial, object] = {}
            while work:
                m = max(work, key=key)
                c = work.pop(m)
                gi = self._find_reducer(m)
                if gi is None:
                    rem[m] = c
                    continue
                g = self.G[gi]
                lead = self.leads[gi]
                shift = mono_div(m, lead)
                for m2, c2 in g.items():
                    if m2 == lead:
                        continue
                    mm = tuple(a + b for a, b in zip(shift, m2))
                    v = work.get(mm)
                    v = -c * c2 if v is None else v - c * c2
                    v %= p
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
            return rem
        work = dict(terms)
        rem = {}
        steps = 0
        while work:
            m = max(work, key=key)
            c = work.pop(m)
            gi = self._find_reducer(m)
            if gi is None:
                rem[m] = c
                continue
            g = self.G[gi]
            lead = self.leads[gi]
            lg = g[lead]
            d = gcd(c, lg)
            f1, f2 = lg // d, c // d
            if f1 < 0:
                f1, f2 = -f1, -f2
            shift = mono_div(m, lead)
            if f1 != 1:
                for k in work:
                    work[k] *= f1
                for k in rem:
                    rem[k] *= f1
            for m2, c2 in g.items():
                if m2 == lead:
                    continue
                mm = tuple(a + b for a, b in zip(shift, m2))
                v = work.get(mm, 0) - f2 * c2
                if v:
                    work[mm] = v
                else:
                    work.pop(mm, None)
            steps += 1
            if steps % 16 == 0:
                allv = {**work, **rem}
                stripped = self._strip_content(allv)
                if stripped is not allv:
                    work = {m2: stripped[m2] for m2 in work}
                    rem = {m2: stripped[m2] for m2 in rem}
        return self._strip_content(rem)

    def reduce_vec(self, terms: Dict[Monomial, object], d: int) -> Dict[Monomial, object]:
        monos, index = self._ctx(d)
        p = self.p
        vec = np.zeros(len(monos), dtype=np.int64)
        for m, c in terms.items():
            vec[index[m]] = c
        i = 0
        dim = len(monos)
        while i < dim:
            c = int(vec[i]) % p
            if c == 0:
                vec[i] = 0
                i += 1
                continue
            gi = self._reducer_at(d, i)
            if gi is None:
                vec[i] = c
                i += 1
                continue
            shift = mono_div(monos[i], self.leads[gi])
            idx, val = self._row(gi, shift, d)
            vec[idx] -= c * val
            i += 1
        vec %= p
        nz = np.flatnonzero(vec)
        return {monos[int(k)]: int(vec[int(k)]) for k in nz}

    def reduce_full(self, terms: Dict[Monomial, object]) -> Dict[Monomial, object]:
        if not terms:
            return {}
        if self.homog:
            d = sum(next(iter(terms)))
            if self._use_vector(d):
                return self.reduce_vec(terms, d)
        return self.reduce_dict(terms)

    # -- basis bookkeeping -----------------------------------------------------------

    def _canon(self, terms: Dict[Monomial, object]) -> Dict[Monomial, object]:
        """Engine-internal canonical form: monic mod p; primitive integers over Q."""
        p = self.p
        if p is None:
            return self._strip_content(terms)
        lead = max(terms, key=self.key)
        lc = terms[lead]
        if lc == 1:
            return terms
        inv = pow(lc, -1, p)
        return {m: c * inv % p for m, c in terms.items()}

    def add_basis(self, terms: Dict[Monomial, object]):
        terms = self._canon(terms)
        k = len(self.G)
        lead = max(terms, key=self.key)
        self.G.append(terms)
        self.leads.append(lead)
        self.ldeg.append(sum(lead))
        for i in range(k):
            lcm = mono_lcm(self.leads[i], lead)
            heapq.heappush(self.events, (sum(lcm), 1, next(self.seq), (i, k)))
            self.pending.add((i, k))

    def _recompute_full_degree(self):
        """Tighten the truncation bound from the current leading terms.

        The bound is monotone: leads only grow, standard monomials only
        shrink, so a cached value stays a valid overestimate and discarding
        events of degree >= cached bound stays sound between recomputes.
        """
        self.full_mark = len(self.G)
        pure = [None] * self.n
        for lm in self.leads:
            nz = [i for i, e in enumerate(lm) if e]
            if len(nz) == 1:
                i = nz[0]
                if pure[i] is None or lm[i] < pure[i]:
                    pure[i] = lm[i]
        if any(v is None for v in pure):
            return
        hf = hilbert_function_of_leads(self.leads, self.n)
        if hf is not None:
            self.full_deg = len(hf)

    def _full_degree(self) -> Optional[int]:
        if not self.homog:
            return None
        grown = len(self.G) - self.full_mark
        if (self.full_deg is None and grown > 0) or grown >= 8:
            self._recompute_full_degree()
        return self.full_deg

    def _chain_skip(self, i: int, j: int) -> bool:
        lcm = mono_lcm(self.leads[i], self.leads[j])
        for k in range(len(self.G)):
            if k == i or k == j:
                continue
            if mono_divides(self.leads[k], lcm):
                a = (k, i) if k < i else (i, k)
                b = (k, j) if k < j else (j, k)
                if a not in self.pending and b not in self.pending:
                    return True
        return False

    def _spoly_terms(self, i: int, j: int) -> Dict[Monomial, object]:
        li, lj = self.leads[i], self.leads[j]
        lcm = mono_lcm(li, lj)
        ui = mono_div(lcm, li)
        uj = mono_div(lcm, lj)
        p = self.p
        out: Dict[Monomial, object] = {}
        for m, c in self.G[i].items():
            out[tuple(a + b for a, b in zip(m, ui))] = c
        for m, c in self.G[j].items():
            mm = tuple(a + b for a, b in zip(m, uj))
            v = out.get(mm)
            v = -c if v is None else v - c
            if p is not None:
                v %= p
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        return out

    def run(self) -> List[Dict[Monomial, object]]:
        while self.events:
            deg, kind, _, payload = heapq.heappop(self.events)
            full = self._full_degree()
            if full is not None and deg >= full:
                if kind == 1:
                    self.pending.discard(payload)
                continue
            if kind == 0:
                if callable(payload):
                    payload = payload()
                if payload:
                    r = self.reduce_full(payload)
                    if r:
                        self.add_basis(r)
                continue
            i, j = payload
            self.pending.discard(payload)
            self.processed += 1
            if self.processed > self.pair_limit:
                raise ResourceLimitError(
                    f"S-pair limit {self.pair_limit} exceeded")
            gi, gj = self.leads[i], self.leads[j]
            if mono_lcm(gi, gj) == tuple(a + b for a, b in zip(gi, gj)):
                continue  # coprime leading terms
            if self._chain_skip(i, j):
                continue
            r = self.reduce_full(self._spoly_terms(i, j))
            if r:
                self.add_basis(r)
        return self.G

    def interreduce(self) -> List[Dict[Monomial, object]]:
        by_lead = sorted(range(len(self.G)), key=lambda i: self.key(self.leads[i]))
        kept: List[int] = []
        for i in by_lead:
            if not any(mono_divides(self.leads[k], self.leads[i]) for k in kept):
                kept.append(i)
        kept.sort()
        # Each element was fully reduced when added, so its tail can only be
        # reducible by kept elements added later; process in reverse add order
        # so reducers are already in final form.
        p = self.p
        final: Dict[int, Dict[Monomial, object]] = {}
        for pos in range(len(kept) - 1, -1, -1):
            i = kept[pos]
            later = kept[pos + 1:]
            lead_i = self.leads[i]
            out = {lead_i: self.G[i][lead_i]}
            work = {m: c for m, c in self.G[i].items() if m != lead_i}
            while work:
                m = max(work, key=self.key)
                c = work.pop(m)
                hit = None
                for k in later:
                    if mono_divides(self.leads[k], m):
                        hit = k
                        break
                if hit is None:
                    out[m] = c
                    continue
                red = final[hit]
                shift = mono_div(m, self.leads[hit])
                for m2, c2 in red.items():
                    if m2 == self.leads[hit]:
                        continue
                    mm = tuple(a + b for a, b in zip(shift, m2))
                    v = work.get(mm)
                    v = -c * c2 if v is None else v - c * c2
                    if p is not None:
                        v %= p
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
            final[i] = self._monic(out)
        out_list = [final[i] for i in kept]
        self.G = out_list
        self.leads = [max(g, key=self.key) for g in out_list]
        return out_list


def _run_buchberger(ring: RingSpec, gens: Sequence[Polynomial],
                    order: MonomialOrder, pair_limit: int) -> Tuple[Polynomial, ...]:
    if not gens:
        return ()
    homog = all(g.is_homogeneous() for g in gens)
    inputs = [(g.total_degree(), dict(g.terms())) for g in gens]
    eng = _Engine(ring, inputs, order, pair_limit, homog)
    eng.run()
    basis = eng.interreduce()
    polys = [Polynomial(ring, dict(g)) for g in basis]
    polys.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return tuple(polys)


def buchberger_lazy_homogeneous(ring: RingSpec, inputs: Sequence[tuple],
                                order: Optional[MonomialOrder] = None, *,
                                pair_limit: int = DEFAULT_PAIR_LIMIT) -> ReducedGB:
    """Reduced GB from (degree, dict-or-thunk) homogeneous generators.

    Thunks for generators whose degree falls beyond the Artinian truncation
    bound are never invoked (such generators are members automatically).
    Results are not memoized; callers cache.
    """
    order = order or ring.order
    if not inputs:
        return ReducedGB(ring, order, ())
    eng = _Engine(ring, inputs, order, pair_limit, homog=True)
    eng.run()
    basis = eng.interreduce()
    polys = [Polynomial(ring, dict(g)) for g in basis]
    polys.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return ReducedGB(ring, order, tuple(polys))


def buchberger(ideal: Ideal, order: Optional[MonomialOrder] = None, *,
               pair_limit: int = DEFAULT_PAIR_LIMIT) -> ReducedGB:
    """The unique reduced Groebner basis of the ideal under the given order."""
    order = order or ideal.ring.order
    small = sum(len(g) for g in ideal.gens) <= _CACHE_MAX_TERMS
    cache_key = None
    if small:
        cache_key = (ideal.fingerprint(), order.name, order.block)
        with _GB_LOCK:
            hit = _GB_CACHE.get(cache_key)
        if hit is not None:
            return hit
    basis = _run_buchberger(ideal.ring, ideal.gens, order, pair_limit)
    gb = ReducedGB(ideal.ring, order, basis, source=ideal)
    if cache_key is not None:
        with _GB_LOCK:
            _GB_CACHE[cache_key] = gb
    return gb


def normal_form(f: Polynomial, gb: ReducedGB) -> Polynomial:
    """The unique remainder of f modulo gb (no monomial divisible by a lead)."""
    if f.ring != gb.ring:
        raise RingMismatchError("polynomial and basis from different rings")
    if not gb.basis:
        return f
    field = f.ring.field
    p = field.p
    key = gb.order.key
    basis = gb.basis
    leads = gb.leads
    work = dict(f.terms())
    rem: Dict[Monomial, object] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for i, lm in enumerate(leads):
            if mono_divides(lm, m):
                hit = i
                break
        if hit is None:
            rem[m] = c
            continue
        g = basis[hit]
        lc = g.coeff(leads[hit])
        fac = c * field.inv(lc)
        if p is not None:
            fac %= p
        shift = mono_div(m, leads[hit])
        for m2, c2 in g.terms():
            if m2 == leads[hit]:
                continue
            mm = tuple(a + b for a, b in zip(shift, m2))
            v = work.get(mm, field.zero) - fac * c2
            if p is not None:
                v %= p
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Polynomial(f.ring, rem)


# --- Hilbert counting on monomial data --------------------------------------------


def _minimalize(monos: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    out: List[Monomial] = []
    for m in sorted(set(monos), key=sum):
        if not any(mono_divides(k, m) for k in out):
            out.append(m)
    return tuple(out)


def _hnum(gens: FrozenSet[Monomial], nvars: int, memo: dict) -> Dict[int, int]:
    """Numerator N(t) with HS(S/(gens)) = N(t)/(1-t)^nvars."""
    hit = memo.get(gens)
    if hit is not None:
        return hit
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if not mixed:
        poly = {0: 1}
        for g in gens:  # multiply by (1 - t^deg g)
            d = sum(g)
            nxt: Dict[int, int] = dict(poly)
            for k, v in poly.items():
                nxt[k + d] = nxt.get(k + d, 0) - v
            poly = {k: v for k, v in nxt.items() if v}
        memo[gens] = poly
        return poly
    counts = [0] * nvars
    for g in mixed:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    piv = counts.index(max(counts))
    pivmono = tuple(1 if i == piv else 0 for i in range(nvars))
    plus = _minimalize([g for g in gens if g[piv] == 0] + [pivmono])
    quot = _minimalize([tuple(e - 1 if i == piv and e else e for i, e in enumerate(g))
                        for g in gens])
    np_ = _hnum(frozenset(plus), nvars, memo)
    nq = _hnum(frozenset(quot), nvars, memo)
    out = dict(np_)
    for k, v in nq.items():
        out[k + 1] = out.get(k + 1, 0) + v
    out = {k: v for k, v in out.items() if v}
    memo[gens] = out
    return out


def hilbert_function_of_leads(leads: Sequence[Monomial], nvars: int) -> Optional[List[int]]:
    """For an Artinian monomial ideal, the full list of Hilbert function values
    of the quotient by degree; None if the quotient is not finite dimensional."""
    gens = frozenset(_minimalize(leads))
    num = _hnum(gens, nvars, {})
    if not num:
        dense = [0]
    else:
        dense = [0] * (max(num) + 1)
        for k, v in num.items():
            dense[k] = v
    for _ in range(nvars):
        acc = 0
        nxt = []
        for a in dense:
            acc += a
            nxt.append(acc)
        if nxt and nxt[-1] != 0:
            return None
        while nxt and nxt[-1] == 0:
            nxt.pop()
        dense = nxt
    return dense if dense else [0]


def std_monomials_by_degree(gb: ReducedGB) -> List[List[Monomial]]:
    """Standard monomials of an Artinian quotient, grouped and sorted by degree."""
    if gb._levels is not None:
        return gb._levels
    n = gb.ring.nvars
    leads = _minimalize(gb.leads)
    if any(sum(m) == 0 for m in leads):
        gb._levels = []
        return []
    key = gb.order.key
    levels: List[List[Monomial]] = [[(0,) * n]]
    while levels[-1]:
        seen = set()
        for m in levels[-1]:
            for i in range(n):
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if mm in seen:
                    continue
                if not any(mono_divides(l, mm) for l in leads):
                    seen.add(mm)
        if not seen:
            break
        levels.append(sorted(seen, key=key, reverse=True))
        if len(levels) > 10_000:
            raise AlgebraError("quotient is not finite dimensional")
    gb._levels = levels
    return levels


def hilbert_function(gb: ReducedGB) -> List[int]:
    """Hilbert function values (by degree) of the Artinian quotient by gb."""
    if gb._hf is None:
        hf = hilbert_function_of_leads(gb.leads, gb.ring.nvars)
        if hf is None:
            raise AlgebraError("dimension > 0: quotient is not Artinian")
        gb._hf = hf
    return gb._hf


# --- dimension and length ----------------------------------------------------------


def krull_dim(ideal_or_gb) -> int:
    """Krull dimension of S/I via maximal independent sets of the lead ideal."""
    gb = ideal_or_gb if isinstance(ideal_or_gb, ReducedGB) else buchberger(ideal_or_gb)
    if gb.is_unit():
        raise UnitIdealError("unit ideal")
    n = gb.ring.nvars
    supports = {frozenset(i for i, e in enumerate(m) if e) for m in gb.leads}
    minimal = [s for s in supports if not any(t < s for t in supports)]
    for size in range(n, -1, -1):
        for combo in itertools.combinations(range(n), size):
            u = set(combo)
            if not any(s <= u for s in minimal):
                return size
    raise AssertionError("unreachable")


def vdim_artinian(ideal_or_gb) -> int:
    """k-dimension of S/I (the number of standard monomials); requires dim 0."""
    gb = ideal_or_gb if isinstance(ideal_or_gb, ReducedGB) else buchberger(ideal_or_gb)
    if krull_dim(gb) != 0:
        raise AlgebraError("dimension > 0")
    return sum(hilbert_function(gb))


def is_m_primary(ideal: Ideal) -> bool:
    """For a proper homogeneous ideal: is the quotient Artinian?"""
    if not ideal.is_homogeneous():
        raise UnsupportedInputError("non-homogeneous input")
    return krull_dim(ideal) == 0


# --- ideal operations ---------------------------------------------------------------


def _fresh_var(ring: RingSpec) -> str:
    if "t" not in ring.names:
        return "t"
    i = 0
    while f"t{i}" in ring.names:
        i += 1
    return f"t{i}"


def _extend_ring(ring: RingSpec) -> Tuple[RingSpec, MonomialOrder]:
    """Ring with one auxiliary variable appended, plus an order eliminating it."""
    name = _fresh_var(ring)
    ext = RingSpec(ring.field, ring.names + (name,),
                   MonomialOrder.elimination((ring.nvars,), ring.nvars + 1))
    return ext, ext.order


def _lift(f: Polynomial, ext: RingSpec) -> Polynomial:
    return Polynomial(ext, {m + (0,): c for m, c in f.terms()})


def _drop(f: Polynomial, ring: RingSpec) -> Polynomial:
    return Polynomial(ring, {m[:-1]: c for m, c in f.terms()})


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """Generators of a ∩ b (auxiliary-variable elimination; monomial fast path)."""
    if a.ring != b.ring:
        raise RingMismatchError("intersection across rings")
    ring = a.ring
    if a.is_zero or b.is_zero:
        return Ideal(ring, ())
    if a.has_monomial_gens() and b.has_monomial_gens():
        monos = _minimalize([mono_lcm(g.leading_monomial(), h.leading_monomial())
                             for g in a.gens for h in b.gens])
        return Ideal(ring, [ring.monomial(m) for m in monos])
    ext, order = _extend_ring(ring)
    t = ext.var(ext.nvars - 1)
    gens = [t * _lift(g, ext) for g in a.gens]
    one_minus_t = ext.one() - t
    gens += [one_minus_t * _lift(h, ext) for h in b.gens]
    gb = buchberger(Ideal(ext, gens), order)
    kept = [g for g in gb.basis if all(m[-1] == 0 for m in g.monomials())]
    return Ideal(ring, [_drop(g, ring) for g in kept])


def _exact_div(h: Polynomial, f: Polynomial) -> Polynomial:
    """h / f when f divides h exactly."""
    ring = h.ring
    field = ring.field
    p = field.p
    key = ring.order.key
    lf, cf = f.leading_term(ring.order)
    inv_cf = field.inv(cf)
    work = dict(h.terms())
    quot: Dict[Monomial, object] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not mono_divides(lf, m):
            raise AlgebraError("inexact division")
        shift = mono_div(m, lf)
        fac = c * inv_cf
        if p is not None:
            fac %= p
        quot[shift] = fac
        for m2, c2 in f.terms():
            if m2 == lf:
                continue
            mm = tuple(x + y for x, y in zip(shift, m2))
            v = work.get(mm, field.zero) - fac * c2
            if p is not None:
                v %= p
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Polynomial(ring, quot)


def _colon_single_elim(I: Ideal, f: Polynomial) -> Ideal:
    inter = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [_exact_div(g, f) for g in inter.gens])


def _colon_monomial(I: Ideal, J: Ideal) -> Ideal:
    ring = I.ring
    gens_i = [g.leading_monomial() for g in I.gens]
    result = None
    for h in J.gens:
        m = h.leading_monomial()
        quo = _minimalize([mono_div(g, tuple(min(a, b) for a, b in zip(g, m)))
                           for g in gens_i])
        part = Ideal(ring, [ring.monomial(q) for q in quo])
        result = part if result is None else intersect(result, part)
    return result


def _colon_artinian(I: Ideal, J: Ideal, gb: ReducedGB) -> Ideal:
    """I : J for Artinian homogeneous I: I plus graded kernel lifts."""
    ring = I.ring
    field = ring.field
    levels = std_monomials_by_degree(gb)
    degs = [h.total_degree() for h in J.gens]
    lifts: List[Polynomial] = []
    nf_cache: Dict[Tuple[int, Monomial], Polynomial] = {}

    def nf_of(jidx: int, mono: Monomial) -> Polynomial:
        hit = nf_cache.get((jidx, mono))
        if hit is None:
            hit = normal_form(J.gens[jidx].shift(mono), gb)
            nf_cache[(jidx, mono)] = hit
        return hit

    for d, level in enumerate(levels):
        rows = []
        offs = []
        off = 0
        idx_maps = []
        for jidx, e in enumerate(degs):
            target = levels[d + e] if d + e < len(levels) else []
            idx_maps.append({m: off + i for i, m in enumerate(target)})
            offs.append(off)
            off += len(target)
        for b in level:
            row: Dict[int, object] = {}
            for jidx in range(len(degs)):
                img = nf_of(jidx, b)
                imap = idx_maps[jidx]
                for m, c in img.terms():
                    row[imap[m]] = c
            rows.append(row)
        for vec in left_kernel(rows, field):
            lifts.append(Polynomial.from_terms(
                ring, [(level[i], c) for i, c in vec.items()]))
    return Ideal(ring, I.gens + tuple(lifts))


def colon(I: Ideal, J: Ideal) -> Ideal:
    """The ideal quotient I : J = {f : f*J ⊆ I}."""
    if I.ring != J.ring:
        raise RingMismatchError("colon across rings")
    if J.is_zero:
        raise AlgebraError("colon by the zero ideal")
    if I.is_zero:
        return Ideal(I.ring, ())
    if I.has_monomial_gens() and J.has_monomial_gens():
        return _colon_monomial(I, J)
    if I.is_homogeneous() and J.is_homogeneous():
        gb = buchberger(I)
        if gb.is_unit():
            return Ideal(I.ring, (I.ring.one(),))
        if krull_dim(gb) == 0:
            return _colon_artinian(I, J, gb)
    result = None
    for f in J.gens:
        part = _colon_single_elim(I, f)
        result = part if result is None else intersect(result, part)
    return result


def saturate(I: Ideal, J: Ideal) -> Tuple[Ideal, int]:
    """(I : J^infinity, least N with I : J^N = I : J^(N+1))."""
    if J.is_zero:
        raise AlgebraError("saturation by the zero ideal")
    cur = I
    cur_gb = buchberger(I)
    for count in range(_SATURATION_CAP):
        nxt = colon(cur, J)
        nxt_gb = buchberger(nxt)
        if nxt_gb.basis == cur_gb.basis:
            return Ideal(I.ring, cur_gb.basis), count
        cur, cur_gb = nxt, nxt_gb
    raise ResourceLimitError("saturation did not stabilize")


def eliminate(I: Ideal, keep) -> Ideal:
    """Generators of I ∩ k[keep] (block elimination order)."""
    ring = I.ring
    keep_idx = sorted(ring.names.index(v) if isinstance(v, str) else int(v)
                      for v in keep)
    if not keep_idx:
        raise AlgebraError("empty keep set")
    drop = tuple(i for i in range(ring.nvars) if i not in set(keep_idx))
    if not drop:
        return I
    order = MonomialOrder.elimination(drop, ring.nvars)
    gb = buchberger(I, order)
    kept = [g for g in gb.basis
            if all(all(m[i] == 0 for i in drop) for m in g.monomials())]
    return Ideal(ring, kept)
