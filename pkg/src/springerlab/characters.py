"""Symmetric-group infrastructure: permutations, conjugacy classes, the
border-strip recursion for irreducible characters, and inner products."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .errors import EquivarianceError, UsageError
from .partitions import Partition, all_partitions

MAX_TABLE_N = 8

Perm = tuple[int, ...]  # 0-based images: w[i] is where letter i goes


# -- permutations ---------------------------------------------------------

def identity(n: int) -> Perm:
    return tuple(range(n))


def transposition(n: int, i: int, j: int) -> Perm:
    w = list(range(n))
    w[i], w[j] = w[j], w[i]
    return tuple(w)


def compose(w: Perm, v: Perm) -> Perm:
    """w after v: (w . v)(i) = w(v(i))."""
    return tuple(w[v[i]] for i in range(len(w)))


def sign(w: Perm) -> int:
    seen = [False] * len(w)
    s = 1
    for i in range(len(w)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = w[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def cycle_type(w: Perm) -> tuple[int, ...]:
    seen = [False] * len(w)
    lengths = []
    for i in range(len(w)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = w[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def iter_permutations(n: int):
    return itertools.permutations(range(n))


def class_representative(mu: Partition) -> Perm:
    """Cycles on consecutive blocks {0..k1-1}{k1..k1+k2-1}... of the class type."""
    w = []
    start = 0
    for k in mu.parts:
        w.extend(start + ((r + 1) % k) for r in range(k))
        start += k
    return tuple(w)


def centralizer_order(mu: Partition) -> int:
    counts: dict[int, int] = {}
    for k in mu.parts:
        counts[k] = counts.get(k, 0) + 1
    out = 1
    for k, m in counts.items():
        out *= k**m * math.factorial(m)
    return out


def class_size(mu: Partition) -> int:
    return math.factorial(mu.n) // centralizer_order(mu)


# -- class functions ------------------------------------------------------

class ClassFunction:
    """A rational value on each conjugacy class, keyed by cycle-type parts."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        self.n = n
        self.values = {tuple(k): Fraction(v) for k, v in values.items()}
        expected = {p.parts for p in all_partitions(n)}
        if set(self.values) != expected:
            raise UsageError(f"class function must cover every class of S_{n}")

    def value(self, mu) -> Fraction:
        return self.values[tuple(mu)]

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.n == other.n
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.values.items())))

    def __add__(self, other):
        if not isinstance(other, ClassFunction) or other.n != self.n:
            raise UsageError("can only add class functions on the same group")
        return ClassFunction(
            self.n, {k: v + other.values[k] for k, v in self.values.items()}
        )

    def scale(self, c) -> "ClassFunction":
        return ClassFunction(self.n, {k: Fraction(c) * v for k, v in self.values.items()})

    def to_jsonable(self) -> dict[str, str]:
        return {
            ",".join(map(str, k)): str(v)
            for k, v in sorted(self.values.items(), reverse=True)
        }

    def __repr__(self):
        vals = ", ".join(f"{','.join(map(str, k))}: {v}" for k, v in sorted(self.values.items(), reverse=True))
        return f"<class function S_{self.n} {{{vals}}}>"


def trivial_character(n: int) -> ClassFunction:
    return ClassFunction(n, {p.parts: 1 for p in all_partitions(n)})


# -- irreducible characters (border-strip recursion) ----------------------

@lru_cache(maxsize=None)
def _mn_value(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Character of the irreducible labeled lam on the class mu.

    Strips of length mu[0] are removed via beta-numbers: a removal replaces
    beta b by b - l, and its height parity is the number of betas crossed.
    """
    if not mu:
        return 1 if not lam else 0
    length, rest = mu[0], mu[1:]
    r = len(lam)
    beta = [lam[i] + (r - 1 - i) for i in range(r)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - length
        if nb < 0 or nb in beta_set:
            continue
        crossed = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(
            p for p in (new_beta[j] - (r - 1 - j) for j in range(r)) if p > 0
        )
        total += (-1) ** crossed * _mn_value(new_lam, rest)
    return total


class CharacterTable:
    """All irreducible characters of S_n with class sizes."""

    def __init__(self, n: int, rows, sizes):
        self.n = n
        self.rows: dict[tuple[int, ...], ClassFunction] = rows
        self.class_sizes: dict[tuple[int, ...], int] = sizes

    @property
    def classes(self) -> list[tuple[int, ...]]:
        return [p.parts for p in all_partitions(self.n)]

    def row(self, lam) -> ClassFunction:
        return self.rows[tuple(lam)]

    def dimension(self, lam) -> int:
        return int(self.rows[tuple(lam)].value((1,) * self.n))


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    """Character table of S_n via the border-strip recursion; verified orthonormal."""
    if not 1 <= n <= MAX_TABLE_N:
        raise UsageError(f"character tables are supported for 1 <= n <= {MAX_TABLE_N}")
    labels = [p.parts for p in all_partitions(n)]
    sizes = {p.parts: class_size(p) for p in all_partitions(n)}
    rows = {
        lam: ClassFunction(n, {mu: _mn_value(lam, mu) for mu in labels})
        for lam in labels
    }
    table = CharacterTable(n, rows, sizes)
    _verify_table(table)
    return table


def _verify_table(table: CharacterTable) -> None:
    labels = table.classes
    for a, lam in enumerate(labels):
        for nu in labels[a:]:
            ip = inner_product(table.rows[lam], table.rows[nu])
            want = 1 if lam == nu else 0
            if ip != want:
                raise RuntimeError(f"character table failed orthonormality at ({lam}, {nu}): {ip}")
    if sum(table.dimension(lam) ** 2 for lam in labels) != math.factorial(table.n):
        raise RuntimeError("character table failed the dimension identity")


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    """(1/n!) * sum over classes of size * phi * psi."""
    if phi.n != psi.n:
        raise UsageError("inner product needs class functions on the same group")
    total = Fraction(0)
    for mu, v in phi.values.items():
        total += class_size(Partition(mu)) * v * psi.values[mu]
    return total / math.factorial(phi.n)


def decompose(phi: ClassFunction, *, strict: bool = True) -> dict[tuple[int, ...], Fraction]:
    """Multiplicities of phi against every irreducible.

    With strict=True a non-integer or negative multiplicity raises
    EquivarianceError: such a phi is not the character of a representation.
    """
    table = character_table(phi.n)
    out = {}
    for lam in table.classes:
        m = inner_product(phi, table.rows[lam])
        if m:
            out[lam] = m
        if strict and (m.denominator != 1 or m < 0):
            raise EquivarianceError(
                f"not a genuine character: multiplicity {m} at irreducible {lam}"
            )
    return out
