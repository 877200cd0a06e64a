"""Parameter systems: sampling, verification, d-sequence / distinguished /
g-system predicates, the Cohen-Macaulay test and the inequality report.

Sampling is deterministic: a seeded generator draws one coefficient per
monomial of the requested degree, monomials in descending ring order.
Coefficients are uniform in {1..min(p-1, 65536)} over F_p and {1..9} over Q
(never zero, so sampled forms are dense).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (AlgebraError, NotStabilizedError, SamplingError,
                     UnsupportedInputError)
from .groebner import (Ideal, buchberger, colon, krull_dim, maximal_ideal,
                       normal_form, vdim_artinian)
from .invariants import (QuotientModule, hilbert_coeffs, irreducible_coeffs,
                         h0m, socle_dim)
from .monomial_ideal import (associated_primes, dimension_filtration,
                             minimal_monomial_gens)
from .poly import Monomial, Polynomial, mono_divides, monomials_of_degree

RETRY_CAP = 64


@dataclass(frozen=True)
class SopCheck:
    """Outcome of the dimension-drop verification."""

    ok: bool
    drops: Tuple[int, ...]          # dim(J + (x_1..x_i)) for i = 1..checked
    failed_at: Optional[int] = None  # 1-based index of the first bad element


@dataclass(frozen=True)
class ParameterSystem:
    """A verified homogeneous system of parameters with its drop certificate."""

    module: QuotientModule
    elements: Tuple[Polynomial, ...]
    degrees: Tuple[int, ...]
    drops: Tuple[int, ...]
    retries: int = 0

    def ideal(self) -> Ideal:
        return Ideal(self.module.ring, self.elements)

    def texts(self) -> Tuple[str, ...]:
        return tuple(str(x) for x in self.elements)


def verify_sop(module: QuotientModule, elements: Sequence[Polynomial]) -> SopCheck:
    """Check dim(J + (x_1..x_i)) = s - i for i = 1..s; failure is a value."""
    s = module.dim
    drops: List[int] = []
    gens: List[Polynomial] = []
    for i, x in enumerate(elements, start=1):
        if x.is_zero() or not x.is_homogeneous() or x.is_constant():
            return SopCheck(False, tuple(drops), i)
        gens.append(x)
        ideal = module.relations + Ideal(module.ring, gens)
        gb = buchberger(ideal)
        if gb.is_unit():
            return SopCheck(False, tuple(drops), i)
        d = krull_dim(gb)
        drops.append(d)
        if d != s - i:
            return SopCheck(False, tuple(drops), i)
    if len(elements) != s:
        return SopCheck(False, tuple(drops), len(elements) + 1)
    return SopCheck(True, tuple(drops))


def _draw_form(module: QuotientModule, degree: int, rng: random.Random,
               allowed: Optional[Sequence[Monomial]] = None) -> Polynomial:
    ring = module.ring
    if allowed is None:
        allowed = sorted(monomials_of_degree(ring.nvars, degree),
                         key=ring.order.key, reverse=True)
    p = ring.field.p
    hi = min(p - 1, 65536) if p is not None else 9
    items = [(m, rng.randint(1, hi)) for m in allowed]
    return Polynomial.from_terms(ring, items)


def _sample_one(module: QuotientModule, degree: int, rng: random.Random,
                allowed_by_pos: Optional[List[Optional[List[Monomial]]]] = None
                ) -> ParameterSystem:
    s = module.dim
    elements: List[Polynomial] = []
    drops: List[int] = []
    retries = 0
    for i in range(1, s + 1):
        allowed = allowed_by_pos[i - 1] if allowed_by_pos else None
        for _ in range(RETRY_CAP + 1):
            x = _draw_form(module, degree, rng, allowed)
            ideal = module.relations + Ideal(module.ring, elements + [x])
            gb = buchberger(ideal)
            if not gb.is_unit() and krull_dim(gb) == s - i:
                elements.append(x)
                drops.append(s - i)
                break
            retries += 1
        else:
            raise SamplingError(
                f"retry cap {RETRY_CAP} exceeded at element {i}")
    return ParameterSystem(module, tuple(elements), (degree,) * s,
                           tuple(drops), retries)


def sample_sop(module: QuotientModule, count: int, seed: int,
               degree: int = 1) -> List[ParameterSystem]:
    """Sample ``count`` verified parameter systems of forms of one degree."""
    if module.dim < 1:
        raise AlgebraError("module must have dimension >= 1")
    if degree not in (1, 2):
        raise AlgebraError("degree must be 1 or 2")
    rng = random.Random(seed)
    return [_sample_one(module, degree, rng) for _ in range(count)]


def _distinguished_constraints(module: QuotientModule, degree: int
                               ) -> List[Optional[List[Monomial]]]:
    """Per-position allowed monomials forcing x_j * K_i ⊆ J for all d_i < j."""
    ring = module.ring
    chain = dimension_filtration(module.relations)
    s = module.dim
    t = chain.length
    out: List[Optional[List[Monomial]]] = []
    all_monos = sorted(monomials_of_degree(ring.nvars, degree),
                       key=ring.order.key, reverse=True)
    for j in range(1, s + 1):
        levels = [i for i in range(1, t) if chain.dims[i - 1] < j]
        if not levels:
            out.append(None)
            continue
        istar = max(levels)
        ann = colon(module.relations, chain.ideals[istar])
        gens = minimal_monomial_gens(ann)
        allowed = [m for m in all_monos
                   if any(mono_divides(g, m) for g in gens)]
        if not allowed:
            raise SamplingError(
                f"no degree-{degree} monomials annihilate the filtration at position {j}")
        out.append(allowed)
    return out


def sample_distinguished_sop(module: QuotientModule, count: int, seed: int,
                             degree: int = 1) -> List[ParameterSystem]:
    """Sample verified distinguished parameter systems (monomial relations only)."""
    if not module.is_monomial():
        raise UnsupportedInputError("unsupported: non-monomial filtration")
    if module.dim < 1:
        raise AlgebraError("module must have dimension >= 1")
    constraints = _distinguished_constraints(module, degree)
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        for _ in range(RETRY_CAP + 1):
            ps = _sample_one(module, degree, rng, constraints)
            if is_distinguished(module, ps.elements):
                out.append(ps)
                break
        else:
            raise SamplingError("could not sample a distinguished system")
    return out


def is_d_sequence(module: QuotientModule, elements: Sequence[Polynomial]
                  ) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Check q_i M : x_{i+1} x_j = q_i M : x_j for 0 <= i < j <= m.

    Returns (True, None) or (False, first failing (i, j)) with x's 1-indexed.
    """
    ring = module.ring
    xs = list(elements)
    m = len(xs)
    for i in range(m):
        base = module.relations + Ideal(ring, xs[:i])
        for j in range(i + 1, m + 1):
            lhs = colon(base, Ideal(ring, (xs[i] * xs[j - 1],)))
            rhs = colon(base, Ideal(ring, (xs[j - 1],)))
            if buchberger(lhs).basis != buchberger(rhs).basis:
                return False, (i, j)
    return True, None


def is_distinguished(module: QuotientModule, elements: Sequence[Polynomial]) -> bool:
    """Check (x_j | d_i < j <= s) D_i = 0 against the dimension filtration."""
    if not module.is_monomial():
        raise UnsupportedInputError("unsupported: non-monomial filtration")
    chain = dimension_filtration(module.relations)
    s = module.dim
    xs = list(elements)
    if len(xs) != s:
        return False
    for i in range(1, chain.length):          # D_t = M is vacuous
        d_i = chain.dims[i - 1]
        for j in range(d_i + 1, s + 1):
            for k in chain.ideals[i].gens:
                if not normal_form(xs[j - 1] * k, module.gb).is_zero():
                    return False
    return True


@dataclass(frozen=True)
class GPredicate:
    """Three-part g-system check; Ass conditions may be unchecked (None)."""

    status: str                                   # "true" | "false" | "partial"
    distinguished: Optional[bool]
    d_sequence: bool
    d_sequence_witness: Optional[Tuple[int, int]]
    ass_conditions: Tuple[Tuple[Tuple[int, int], Optional[bool]], ...]


def g_predicate(module: QuotientModule, elements: Sequence[Polynomial]) -> GPredicate:
    """Distinguished + d-sequence + the Ass condition on C_i/q_j C_i where checkable."""
    ring = module.ring
    xs = list(elements)
    s = module.dim
    try:
        dist = is_distinguished(module, xs)
    except UnsupportedInputError:
        dist = None
    dseq, witness = is_d_sequence(module, xs)
    ass: List[Tuple[Tuple[int, int], Optional[bool]]] = []
    if module.is_monomial():
        chain = dimension_filtration(module.relations)
        t = chain.length
        for i in range(1, t + 1):
            ann = _cyclic_presentation(chain, i)
            for j in range(0, s):
                if ann is None:
                    ass.append(((i, j), None))
                    continue
                if j == 0:
                    q_j = Ideal(ring, ())
                elif all(x.is_monomial() for x in xs[:j]):
                    q_j = Ideal(ring, xs[:j])
                else:
                    ass.append(((i, j), None))
                    continue
                ass.append(((i, j), _ass_condition(ann + q_j)))
    checked = [dist, dseq] + [v for _, v in ass]
    if any(v is False for v in checked):
        status = "false"
    elif all(v is True for v in checked):
        status = "true"
    else:
        status = "partial"
    return GPredicate(status, dist, dseq, witness, tuple(ass))


def _cyclic_presentation(chain, i: int) -> Optional[Ideal]:
    """Ann of C_i = K_i/K_{i-1} when C_i is cyclic (single new generator)."""
    ring = chain.base.ring
    prev = chain.ideals[i - 1]
    cur = chain.ideals[i]
    prev_gens = [g.leading_monomial() for g in prev.gens]
    new = [g for g in cur.gens
           if not any(mono_divides(p, g.leading_monomial()) for p in prev_gens)]
    if len(new) != 1:
        return None
    return colon(prev, Ideal(ring, (new[0],)))


def _ass_condition(ideal: Ideal) -> bool:
    """Ass(S/B) ⊆ Assh(S/B) ∪ {m} for monomial B."""
    ring = ideal.ring
    gb = buchberger(ideal)
    if gb.is_unit():
        return True
    n = ring.nvars
    dim = krull_dim(gb)
    for support in associated_primes(Ideal(ring, gb.basis)):
        if len(support) != n and n - len(support) != dim:
            return False
    return True


@dataclass(frozen=True)
class CMWitness:
    generators: Tuple[str, ...]
    length: int
    e0: int


@dataclass(frozen=True)
class CMVerdict:
    is_cm: bool
    reason: str
    h0_length: int
    samples: Tuple[CMWitness, ...]


def cm_test(module: QuotientModule, samples: int, seed: int) -> CMVerdict:
    """Depth-0 check via m-torsion, then the sampled multiplicity criterion
    ℓ(M/qM) = e_0(q; M) on linear parameter ideals."""
    if module.dim < 1:
        raise AlgebraError("module must have dimension >= 1")
    _, h0len = h0m(module)
    if h0len:
        return CMVerdict(False, "nonzero finite-length torsion (depth 0)", h0len, ())
    rng_seed = seed
    witnesses: List[CMWitness] = []
    for ps in sample_sop(module, samples, rng_seed, degree=1):
        q = ps.ideal()
        length = vdim_artinian(module.relations + q)
        e0 = hilbert_coeffs(module, q)[0]
        witnesses.append(CMWitness(ps.texts(), length, e0))
        if length != e0:
            return CMVerdict(
                False, f"length {length} exceeds multiplicity {e0} for a sampled parameter ideal",
                0, tuple(witnesses))
    return CMVerdict(True, f"length equals multiplicity on {samples} sampled parameter ideals",
                     0, tuple(witnesses))


@dataclass(frozen=True)
class SampleRecord:
    index: int
    generators: Tuple[str, ...]
    ir: Optional[int] = None
    f0: Optional[int] = None
    e1_base: Optional[int] = None
    e1_colon: Optional[int] = None
    e1_diff: Optional[int] = None
    length: Optional[int] = None
    e0: Optional[int] = None
    cm_gap: Optional[int] = None
    g_status: str = "unchecked"
    checks: Tuple[Tuple[str, bool], ...] = ()
    flags: Tuple[str, ...] = ()
    note: str = ""


@dataclass(frozen=True)
class TheoremReport:
    module_fingerprint: str
    dim: int
    seed: int
    samples: int
    degree: int
    cm: CMVerdict
    records: Tuple[SampleRecord, ...]
    max_ir: Optional[int]
    all_checks_hold: bool


def theorem_report(module: QuotientModule, samples: int, seed: int,
                   degree: int = 1) -> TheoremReport:
    """Per-sample socle/coefficient data and the inequality checks relating
    ir(q), f_0(q; M) and e_1(q:m) - e_1(q)."""
    if module.dim < 1:
        raise AlgebraError("module must have dimension >= 1")
    ring = module.ring
    m_ideal = maximal_ideal(ring)
    cm = cm_test(module, samples=max(2, min(samples, 3)), seed=seed * 1000 + 7)
    if module.is_monomial():
        systems = sample_distinguished_sop(module, samples, seed, degree)
    else:
        systems = sample_sop(module, samples, seed, degree)
    records: List[SampleRecord] = []
    max_ir: Optional[int] = None
    all_hold = True
    for k, ps in enumerate(systems):
        q = ps.ideal()
        flags: List[str] = []
        try:
            ir = socle_dim(module, q)
            f0 = irreducible_coeffs(module, q)[0]
            length = vdim_artinian(module.relations + q)
            e0 = hilbert_coeffs(module, q)[0]
            e1_base = e1_colon = e1_diff = None
            if module.dim >= 2:
                e1_base = hilbert_coeffs(module, q)[1]
                colon_ideal = colon(module.relations + q, m_ideal)
                if buchberger(colon_ideal).is_unit():
                    flags.append("colon-is-unit-ideal")
                else:
                    e1_colon = hilbert_coeffs(module, colon_ideal)[1]
                    e1_diff = e1_colon - e1_base
            try:
                g_status = g_predicate(module, ps.elements).status
            except UnsupportedInputError:
                g_status = "unchecked"
            checks: List[Tuple[str, bool]] = []
            if cm.is_cm:
                checks.append(("ir <= f0", ir <= f0))
                if e1_diff is not None:
                    checks.append(("ir <= e1(q:m) - e1(q)", ir <= e1_diff))
            elif degree == 2 and g_status in ("true", "partial") and e1_diff is not None:
                checks.append(("e1(q:m) - e1(q) <= f0", e1_diff <= f0))
            all_hold = all_hold and all(v for _, v in checks)
            max_ir = ir if max_ir is None else max(max_ir, ir)
            records.append(SampleRecord(
                index=k, generators=ps.texts(), ir=ir, f0=f0,
                e1_base=e1_base, e1_colon=e1_colon, e1_diff=e1_diff,
                length=length, e0=e0, cm_gap=length - e0,
                g_status=g_status, checks=tuple(checks), flags=tuple(flags)))
        except NotStabilizedError as exc:
            records.append(SampleRecord(
                index=k, generators=ps.texts(),
                flags=("skipped",), note=f"not stabilized: {exc}"))
        _trim_power_cache()
    return TheoremReport(
        module_fingerprint=module.fingerprint(), dim=module.dim, seed=seed,
        samples=samples, degree=degree, cm=cm, records=tuple(records),
        max_ir=max_ir, all_checks_hold=all_hold)


def _trim_power_cache():
    from .invariants import trim_bulk_caches
    trim_bulk_caches()
