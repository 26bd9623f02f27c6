"""Sparse exact linear algebra over Z and Q.

Rows are dicts keyed by hashable column labels.  Rank elimination buckets
rows by their leading column and only ever cancels leading entries, which
is enough for rank and keeps the work proportional to the nonzero
structure.  Kernels and reduced echelon forms run over Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .limits import Limits


def _content(row: dict) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def int_row_rank(rows, key, limits: Limits | None = None) -> int:
    """Rank of integer rows; fraction-free cross-multiplication with content removal."""
    buckets: dict = {}

    def push(r):
        buckets.setdefault(max(r, key=key), []).append(r)

    for r in rows:
        if r:
            push(dict(r))
    rank = 0
    while buckets:
        if limits is not None:
            limits.check_deadline("exact rank elimination")
        col = max(buckets, key=key)
        group = buckets.pop(col)
        group.sort(key=len)
        pivot = group[0]
        a = pivot[col]
        rank += 1
        for r in group[1:]:
            b = r[col]
            g = gcd(a, b)
            fr, fp = a // g, b // g  # r <- fr*r - fp*pivot kills the lead
            new = {k: fr * v for k, v in r.items()}
            for k, v in pivot.items():
                w = new.get(k, 0) - fp * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            if new:
                c = abs(_content(new))
                if c > 1:
                    new = {k: v // c for k, v in new.items()}
                push(new)
    return rank


def frac_row_rank(rows, key, limits: Limits | None = None) -> int:
    """Rank of rows with Fraction (or int) entries."""
    buckets: dict = {}

    def push(r):
        buckets.setdefault(max(r, key=key), []).append(r)

    for r in rows:
        if r:
            push({k: Fraction(v) for k, v in r.items()})
    rank = 0
    while buckets:
        if limits is not None:
            limits.check_deadline("exact rank elimination")
        col = max(buckets, key=key)
        group = buckets.pop(col)
        group.sort(key=len)
        pivot = group[0]
        a = pivot[col]
        rank += 1
        for r in group[1:]:
            f = r[col] / a
            new = dict(r)
            for k, v in pivot.items():
                w = new.get(k, 0) - f * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            if new:
                push(new)
    return rank


def kernel_of_rows(rows, key, limits: Limits | None = None) -> list[dict[int, Fraction]]:
    """Kernel of e_i -> rows[i]: coefficient dicts over the row indices.

    Forward elimination carries identity tags; a row that cancels to zero
    hands its tag over as a kernel vector.
    """
    kernel: list[dict[int, Fraction]] = []
    buckets: dict = {}

    def push(vec, tag):
        if vec:
            buckets.setdefault(max(vec, key=key), []).append((vec, tag))
        else:
            kernel.append(tag)

    for i, r in enumerate(rows):
        push({k: Fraction(v) for k, v in r.items()}, {i: Fraction(1)})
    while buckets:
        if limits is not None:
            limits.check_deadline("kernel elimination")
        col = max(buckets, key=key)
        group = buckets.pop(col)
        pvec, ptag = group[0]
        a = pvec[col]
        for vec, tag in group[1:]:
            f = vec[col] / a
            nv = dict(vec)
            for k, v in pvec.items():
                w = nv.get(k, 0) - f * v
                if w:
                    nv[k] = w
                else:
                    nv.pop(k, None)
            nt = dict(tag)
            for k, v in ptag.items():
                w = nt.get(k, 0) - f * v
                if w:
                    nt[k] = w
                else:
                    nt.pop(k, None)
            push(nv, nt)
    kernel.sort(key=lambda t: min(t))
    return kernel


def rref_indexed(vectors) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form of vectors over integer coordinates.

    Pivot of a vector is its smallest coordinate index.  Returns
    {pivot_index: row} with rows normalized to pivot coefficient 1 and
    zero entries at every other pivot; the RREF of a span is unique.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for vec in vectors:
        row = {k: Fraction(v) for k, v in vec.items()}
        while row:
            lead = min(row)
            if lead not in pivots:
                break
            f = row[lead]
            for k, v in pivots[lead].items():
                w = row.get(k, 0) - f * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
        if not row:
            continue
        lead = min(row)
        a = row[lead]
        row = {k: v / a for k, v in row.items()}
        for other in pivots.values():
            if lead in other:
                f = other[lead]
                for k, v in row.items():
                    w = other.get(k, 0) - f * v
                    if w:
                        other[k] = w
                    else:
                        other.pop(k, None)
        pivots[lead] = row
    return dict(sorted(pivots.items()))
