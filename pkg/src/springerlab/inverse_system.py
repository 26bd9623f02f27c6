"""The derivative span of the cell determinant, computed by apolarity.

The bigraded entry at (a, b) is the rank of the map sending a monomial of
bidegree (a, b) to its derivative of the determinant — a catalecticant
rank, assembled one bidegree block at a time so blocks stay independent
and can be mapped over in parallel.  The pure-X and pure-Y rows of the
table are the graded dimensions of the subalgebras generated by the X and
Y images; their kernels carry the symmetric-group action used for graded
characters and socle support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .characters import ClassFunction, class_representative
from .errors import UsageError
from .limits import DEFAULT_LIMITS, Limits
from .partitions import Partition, all_partitions, degrees
from .polynomials import GREVLEX, Monomial, delta


@dataclass(frozen=True)
class BigradedTable:
    """Dense (d1+1) x (d2+1) dimension table; rows indexed by X-degree."""

    d1: int
    d2: int
    matrix: tuple[tuple[int, ...], ...]

    def entry(self, a: int, b: int) -> int:
        if 0 <= a <= self.d1 and 0 <= b <= self.d2:
            return self.matrix[a][b]
        return 0

    def total(self) -> int:
        return sum(sum(row) for row in self.matrix)

    def to_jsonable(self) -> dict:
        return {"bounds": [self.d1, self.d2], "matrix": [list(r) for r in self.matrix]}


def _compositions(total: int, k: int):
    if k == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def _bidegree_monomials(n: int, a: int, b: int) -> list[Monomial]:
    return [
        x + y for x in _compositions(a, n) for y in _compositions(b, n)
    ]


def _derivative_row(delta_terms, mono: Monomial) -> dict[Monomial, int]:
    """Coefficients of the mono-derivative of the determinant; integer entries."""
    row: dict[Monomial, int] = {}
    for w, c in delta_terms.items():
        if all(t >= s for s, t in zip(mono, w)):
            coeff = int(c)
            for s, t in zip(mono, w):
                if s:
                    coeff *= math.perm(t, s)
            row[tuple(t - s for s, t in zip(mono, w))] = coeff
    return row


def catalecticant_rank(sigma: Partition, a: int, b: int,
                       limits: Limits = DEFAULT_LIMITS) -> int:
    """Rank of the bidegree-(a, b) catalecticant block; exact."""
    n = sigma.n
    deg = degrees(sigma)
    rows_count = math.comb(a + n - 1, n - 1) * math.comb(b + n - 1, n - 1)
    cols_count = (
        math.comb(deg.d1 - a + n - 1, n - 1) * math.comb(deg.d2 - b + n - 1, n - 1)
        if a <= deg.d1 and b <= deg.d2
        else 0
    )
    limits.check_block(rows_count * max(cols_count, 1), f"catalecticant block ({a},{b})")
    dterms = delta(sigma).terms
    rows = []
    for mono in _bidegree_monomials(n, a, b):
        row = _derivative_row(dterms, mono)
        if row:
            rows.append(row)
    return linalg.int_row_rank(rows, GREVLEX.key, limits)


def bigraded_hilbert(sigma: Partition, *, limits: Limits = DEFAULT_LIMITS) -> BigradedTable:
    """Bigraded dimension table of the derivative span of the determinant."""
    deg = degrees(sigma)
    matrix = tuple(
        tuple(catalecticant_rank(sigma, a, b, limits) for b in range(deg.d2 + 1))
        for a in range(deg.d1 + 1)
    )
    return BigradedTable(deg.d1, deg.d2, matrix)


def total_dimension(sigma: Partition, *, limits: Limits = DEFAULT_LIMITS) -> int:
    """Sum of all bigraded dimensions; n! is verified elsewhere, never assumed."""
    return bigraded_hilbert(sigma, limits=limits).total()


# -- pure-side subalgebra models ------------------------------------------

def _side_data(sigma: Partition, side: str):
    if side not in ("X", "Y"):
        raise UsageError(f"side must be 'X' or 'Y', got {side!r}")
    deg = degrees(sigma)
    top = deg.d1 if side == "X" else deg.d2
    return deg, top


def _embed(n: int, side: str, mono: tuple[int, ...]) -> Monomial:
    zeros = (0,) * n
    return mono + zeros if side == "X" else zeros + mono


class SubalgebraModel:
    """Per-degree bases, reduced kernels, and quotient monomials for one side.

    At degree b the basis is the pure-side monomials (n-slot exponent
    tuples, most significant first), the kernel is the reduced echelon
    basis of {f : f annihilates the determinant}, and the quotient basis
    is the non-pivot monomials — the surviving classes.
    """

    def __init__(self, sigma: Partition, side: str = "Y",
                 limits: Limits = DEFAULT_LIMITS):
        self.sigma = sigma
        self.side = side
        self.n = sigma.n
        deg, top = _side_data(sigma, side)
        self.top = top
        dterms = delta(sigma).terms
        n = sigma.n
        self.basis: list[list[tuple[int, ...]]] = []
        self.kernel_rref: list[dict[int, dict[int, Fraction]]] = []
        self.quotient: list[list[tuple[int, ...]]] = []
        self.rank: list[int] = []
        for b in range(top + 1):
            monos = sorted(_compositions(b, n), key=GREVLEX.key, reverse=True)
            comp = (deg.d1 - b, deg.d2) if side == "X" else (deg.d1, deg.d2 - b)
            cols = math.comb(comp[0] + n - 1, n - 1) * math.comb(comp[1] + n - 1, n - 1)
            limits.check_block(len(monos) * max(cols, 1), f"side-{side} degree {b}")
            rows = [_derivative_row(dterms, _embed(n, side, m)) for m in monos]
            kernel = linalg.kernel_of_rows(rows, GREVLEX.key, limits)
            rref = linalg.rref_indexed(kernel)
            pivots = set(rref)
            self.basis.append(monos)
            self.kernel_rref.append(rref)
            self.quotient.append([m for i, m in enumerate(monos) if i not in pivots])
            self.rank.append(len(monos) - len(rref))

    def hilbert(self) -> list[int]:
        dims = list(self.rank)
        while dims and dims[-1] == 0:
            dims.pop()
        return dims

    def _index(self, b: int) -> dict[tuple[int, ...], int]:
        return {m: i for i, m in enumerate(self.basis[b])}

    def reduce_class(self, b: int, mono: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        """Class of a degree-b monomial as coefficients on the quotient basis."""
        if b > self.top:
            return {}
        idx = self._index(b)[mono]
        rref = self.kernel_rref[b]
        if idx not in rref:
            return {mono: Fraction(1)}
        basis = self.basis[b]
        return {
            basis[j]: -c for j, c in rref[idx].items() if j != idx
        }

    def graded_character(self) -> list[ClassFunction]:
        """Trace of one representative per class on each nonzero degree."""
        out = []
        classes = all_partitions(self.n)
        for b in range(self.top + 1):
            quotient = self.quotient[b]
            if not quotient:
                break
            values = {}
            index = self._index(b)
            rref = self.kernel_rref[b]
            basis = self.basis[b]
            for mu in classes:
                w = class_representative(mu)
                trace = Fraction(0)
                for m in quotient:
                    image = tuple(_permute(w, m))
                    i = index[image]
                    if i in rref:
                        trace -= rref[i].get(index[m], 0)
                    elif image == m:
                        trace += 1
                values[mu.parts] = trace
            out.append(ClassFunction(self.n, values))
        return out

    def socle_dimensions(self) -> dict[int, int]:
        """Per-degree dimension of {v : every variable multiplies v into the kernel}."""
        out = {}
        for b in range(self.top + 1):
            free = self.quotient[b]
            if not free:
                continue
            col = {m: i for i, m in enumerate(free)}
            next_free = self.quotient[b + 1] if b + 1 <= self.top else []
            coords = {m: i for i, m in enumerate(next_free)}
            constraints: dict[tuple[int, int], dict[int, Fraction]] = {}
            for m in free:
                for v in range(self.n):
                    shifted = list(m)
                    shifted[v] += 1
                    image = self.reduce_class(b + 1, tuple(shifted))
                    for target, c in image.items():
                        row = constraints.setdefault((v, coords[target]), {})
                        row[col[m]] = c
            rank = linalg.frac_row_rank(constraints.values(), key=lambda c: c)
            dim = len(free) - rank
            if dim:
                out[b] = dim
        return out


def _permute(w, mono):
    out = [0] * len(mono)
    for i, e in enumerate(mono):
        out[w[i]] = e
    return out


def subalgebra_model(sigma: Partition, side: str = "Y", *,
                     limits: Limits = DEFAULT_LIMITS) -> SubalgebraModel:
    return SubalgebraModel(sigma, side, limits)


def subalgebra_hilbert(sigma: Partition, side: str = "Y", *,
                       limits: Limits = DEFAULT_LIMITS) -> list[int]:
    """Graded dimensions of the side-generated subalgebra (pure-side block ranks)."""
    deg, top = _side_data(sigma, side)
    dims = []
    for b in range(top + 1):
        a_deg, b_deg = (b, 0) if side == "X" else (0, b)
        dims.append(catalecticant_rank(sigma, a_deg, b_deg, limits))
    while dims and dims[-1] == 0:
        dims.pop()
    return dims


def subalgebra_graded_character(sigma: Partition, side: str = "Y", *,
                                limits: Limits = DEFAULT_LIMITS,
                                model: SubalgebraModel | None = None) -> list[ClassFunction]:
    if model is None:
        model = SubalgebraModel(sigma, side, limits)
    return model.graded_character()


def socle_degrees(sigma: Partition, side: str = "Y", *,
                  limits: Limits = DEFAULT_LIMITS,
                  model: SubalgebraModel | None = None) -> set[int]:
    """Degrees where the socle of the side model is nonzero."""
    if model is None:
        model = SubalgebraModel(sigma, side, limits)
    return set(model.socle_dimensions())
