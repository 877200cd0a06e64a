"""Small exact dense/sparse linear algebra over a coefficient field.

Rows are dicts column -> nonzero field element.  Used for graded kernel
computations (socles, colon ideals of Artinian quotients).
"""
from __future__ import annotations

from typing import Dict, List


def _ops(field):
    p = field.p
    if p is None:
        return (lambda a, b: a * b, lambda a, b: a - b, lambda a: 1 / a)
    return (lambda a, b: a * b % p, lambda a, b: (a - b) % p, lambda a: pow(a, -1, p))


def left_kernel(rows: List[Dict[int, object]], field) -> List[Dict[int, object]]:
    """Vectors c (dicts over row indices) with sum_i c_i * rows[i] = 0.

    Returns a basis in echelon form, deterministic for a fixed row order.
    """
    mul, sub, inv = _ops(field)
    pivots: Dict[int, tuple] = {}
    kernel: List[Dict[int, object]] = []
    for i, row in enumerate(rows):
        r = dict(row)
        tr = {i: field.one}
        while r:
            j = min(r)
            if j not in pivots:
                pivots[j] = (r, tr)
                break
            pr, ptr = pivots[j]
            f = mul(r[j], inv(pr[j]))
            for k, v in pr.items():
                nv = sub(r.get(k, field.zero), mul(f, v))
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            for k, v in ptr.items():
                nv = sub(tr.get(k, field.zero), mul(f, v))
                if nv:
                    tr[k] = nv
                else:
                    tr.pop(k, None)
        if not r:
            kernel.append(tr)
    return kernel


def rank(rows: List[Dict[int, object]], field) -> int:
    return len(rows) - len(left_kernel(rows, field))
