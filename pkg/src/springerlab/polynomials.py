"""Exact multivariate polynomials over the rationals.

Two public ring flavours: the doubled ring C[X1..Xn, Y1..Yn] (slots 0..n-1
hold the X block, slots n..2n-1 the Y block) and the single ring C[z1..zn].
Polynomials map exponent tuples to nonzero Fractions, so arithmetic,
differentiation and the determinant constructions below are exact.  The
operators +, -, * realize ring addition, multiplication and rational
scaling; all values are immutable once built.

Monomial orders follow the convention that later-indexed variables are the
more significant ones (z_n > ... > z_1), so z1 is the cheapest variable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ContextMismatchError, ResourceLimitError, UsageError
from .partitions import Partition, diagram

Monomial = tuple[int, ...]

DELTA_MAX_N = 7  # the determinant has n! terms


@dataclass(frozen=True)
class RingContext:
    kind: str  # "doubled" | "single" | "elim"
    n: int
    names: tuple[str, ...]

    @property
    def nvars(self) -> int:
        return len(self.names)


def doubled_ring(n: int) -> RingContext:
    """C[X1..Xn, Y1..Yn] with the X block in slots 0..n-1."""
    if n < 1:
        raise UsageError(f"ring needs n >= 1, got {n}")
    names = tuple(f"X{i}" for i in range(1, n + 1)) + tuple(f"Y{i}" for i in range(1, n + 1))
    return RingContext("doubled", n, names)


def single_ring(n: int) -> RingContext:
    """C[z1..zn]."""
    if n < 1:
        raise UsageError(f"ring needs n >= 1, got {n}")
    return RingContext("single", n, tuple(f"z{i}" for i in range(1, n + 1)))


def elim_ring(base: RingContext) -> RingContext:
    """base extended by the auxiliary elimination variable t in slot 0."""
    return RingContext("elim", base.nvars + 1, ("t",) + base.names)


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on exponent tuples, compatible with multiplication.

    kind "elim" compares the first `front` slots (grevlex among themselves)
    before the rest, so it eliminates the front block.
    """

    kind: str  # "grevlex" | "lex" | "elim"
    front: int = 0

    def key(self, m: Monomial):
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "lex":
            return tuple(reversed(m))
        if self.kind == "elim":
            return (_grevlex_key(m[: self.front]), _grevlex_key(m[self.front:]))
        raise UsageError(f"unknown monomial order kind {self.kind!r}")

    def descriptor(self) -> str:
        return self.kind if self.kind != "elim" else f"elim:{self.front}"


def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def order_from_descriptor(text: str) -> MonomialOrder:
    if text == "grevlex":
        return GREVLEX
    if text == "lex":
        return LEX
    if text.startswith("elim:"):
        return MonomialOrder("elim", int(text.split(":", 1)[1]))
    raise UsageError(f"unknown order descriptor {text!r}")


class Polynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms):
        cleaned = {}
        width = ring.nvars
        for mono, c in terms.items():
            if not isinstance(c, Fraction):
                c = Fraction(c)
            if c:
                if len(mono) != width:
                    raise UsageError(f"monomial {mono} does not fit a {width}-variable ring")
                cleaned[tuple(mono)] = c
        self.ring = ring
        self.terms = cleaned

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {(0,) * ring.nvars: Fraction(c)})

    @classmethod
    def variable(cls, ring, slot: int):
        mono = [0] * ring.nvars
        mono[slot] = 1
        return cls(ring, {tuple(mono): Fraction(1)})

    @classmethod
    def monomial(cls, ring, mono, c=1):
        return cls(ring, {tuple(mono): Fraction(c)})

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextMismatchError(
                    f"mixed rings: {self.ring.kind}({self.ring.n}) vs {other.ring.kind}({other.ring.n})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        res = Polynomial.__new__(Polynomial)
        res.ring, res.terms = self.ring, out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = Polynomial.__new__(Polynomial)
        res.ring = self.ring
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.ring)
            res = Polynomial.__new__(Polynomial)
            res.ring = self.ring
            res.terms = {m: v * c for m, v in self.terms.items()}
            return res
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        res = Polynomial.__new__(Polynomial)
        res.ring, res.terms = self.ring, out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise UsageError("negative polynomial powers are not defined")
        result = Polynomial.constant(self.ring, 1)
        for _ in range(k):
            result = result * self
        return result

    # -- structure ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        """Largest term degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise UsageError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        """(monomial, coefficient) pairs, leading term first."""
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"<{self.ring.kind}({self.ring.n}) poly: {poly_to_text(self)}>"


def bidegree(ring: RingContext, mono: Monomial) -> tuple[int, int]:
    """(X-degree, Y-degree) of a doubled-ring monomial."""
    if ring.kind != "doubled":
        raise UsageError("bidegree is defined for doubled rings only")
    n = ring.n
    return (sum(mono[:n]), sum(mono[n:]))


# -- canonical text form ------------------------------------------------

def poly_to_text(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical serialization: terms leading-first, "num/den * X1^a ..."."""
    if not p.terms:
        return "0"
    chunks = []
    for mono, c in p.sorted_terms(order):
        coeff = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        vars_ = " ".join(f"{p.ring.names[i]}^{e}" for i, e in enumerate(mono) if e)
        chunks.append(f"{coeff} * {vars_}" if vars_ else coeff)
    return " + ".join(chunks)


def parse_polynomial(ring: RingContext, text: str) -> Polynomial:
    """Parse the canonical text form back into a polynomial."""
    text = text.strip()
    if text == "0":
        return Polynomial.zero(ring)
    slot = {name: i for i, name in enumerate(ring.names)}
    terms = {}
    for chunk in text.split(" + "):
        coeff_text, _, mono_text = chunk.partition(" * ")
        try:
            c = Fraction(coeff_text.strip())
        except ValueError as exc:
            raise UsageError(f"bad coefficient {coeff_text!r} in {chunk!r}") from exc
        mono = [0] * ring.nvars
        if mono_text:
            for token in mono_text.split():
                name, _, exp = token.partition("^")
                if name not in slot or not exp:
                    raise UsageError(f"bad variable token {token!r} in {chunk!r}")
                mono[slot[name]] += int(exp)
        key = tuple(mono)
        terms[key] = terms.get(key, 0) + c
    return Polynomial(ring, terms)


# -- symmetric-group action ----------------------------------------------

def permute_monomial(ring: RingContext, w: tuple[int, ...], mono: Monomial) -> Monomial:
    n = ring.n
    if ring.kind == "single":
        out = [0] * n
        for i, e in enumerate(mono):
            out[w[i]] = e
        return tuple(out)
    if ring.kind == "doubled":
        out = [0] * (2 * n)
        for i in range(n):
            out[w[i]] = mono[i]
            out[n + w[i]] = mono[n + i]
        return tuple(out)
    raise UsageError(f"no symmetric-group action on {ring.kind} rings")


def act(w: tuple[int, ...], p: Polynomial) -> Polynomial:
    """Permute variables diagonally: X_i -> X_{w(i)}, Y_i -> Y_{w(i)} (z_i -> z_{w(i)}).

    w is a tuple of 0-based images; this is a ring automorphism.
    """
    ring = p.ring
    if ring.kind not in ("single", "doubled"):
        raise UsageError(f"no symmetric-group action on {ring.kind} rings")
    if len(w) != ring.n:
        raise UsageError(f"permutation on {len(w)} letters does not match n={ring.n}")
    return Polynomial(ring, {permute_monomial(ring, w, m): c for m, c in p.terms.items()})


# -- differential operators ----------------------------------------------

def apply_operator(f: Polynomial, target: Polynomial) -> Polynomial:
    """Apply f(d/dv_1, ..., d/dv_k) to target, with m!/(m-k)! factors.

    Linear in f; each monomial of f acts as the composite partial-derivative
    operator, so apply_operator(f*g, t) == apply_operator(f, apply_operator(g, t)).
    """
    if f.ring != target.ring:
        raise ContextMismatchError("operator and target live in different rings")
    out = {}
    for fm, fc in f.terms.items():
        for tm, tc in target.terms.items():
            if all(t >= s for s, t in zip(fm, tm)):
                coeff = fc * tc
                for s, t in zip(fm, tm):
                    if s:
                        coeff *= math.perm(t, s)
                key = tuple(t - s for s, t in zip(fm, tm))
                s2 = out.get(key, 0) + coeff
                if s2:
                    out[key] = s2
                else:
                    del out[key]
    res = Polynomial.__new__(Polynomial)
    res.ring, res.terms = f.ring, out
    return res


# -- the cell determinant and symmetric generators ------------------------

@lru_cache(maxsize=None)
def delta(sigma: Partition) -> Polynomial:
    """The n x n determinant det[X_s^{i_t} Y_s^{j_t}] over the cells of sigma.

    Columns follow the canonical (j, i) cell order, which fixes the sign.
    The expansion recurses row by row over the set of unused columns, so the
    2^n subproblems are shared instead of enumerating n! products directly.
    Exactly n! terms, every coefficient +-1.
    """
    n = sigma.n
    if n > DELTA_MAX_N:
        raise ResourceLimitError(
            f"cell determinant needs n <= {DELTA_MAX_N} (n! terms), got n={n}"
        )
    cells = diagram(sigma).cells
    ring = doubled_ring(n)
    memo: dict[tuple[int, ...], dict[Monomial, int]] = {}

    def expand(avail: tuple[int, ...]) -> dict[Monomial, int]:
        if not avail:
            return {(0,) * (2 * n): 1}
        got = memo.get(avail)
        if got is not None:
            return got
        s = n - len(avail)  # current 0-based row
        total: dict[Monomial, int] = {}
        for pos, col in enumerate(avail):
            i, j = cells[col]
            sub = expand(avail[:pos] + avail[pos + 1:])
            sgn = -1 if pos % 2 else 1
            for mono, c in sub.items():
                lst = list(mono)
                lst[s] += i
                lst[n + s] += j
                key = tuple(lst)
                total[key] = total.get(key, 0) + sgn * c
        memo[avail] = total
        return total

    return Polynomial(ring, expand(tuple(range(n))))


def elementary_symmetric(r: int, var_slots, ring: RingContext) -> Polynomial:
    """e_r of the chosen variable slots: one +1 term per r-subset."""
    slots = sorted(set(var_slots))
    if any(not 0 <= s < ring.nvars for s in slots):
        raise UsageError(f"variable slots {slots} out of range for the ring")
    if not 1 <= r <= len(slots):
        raise UsageError(f"need 1 <= r <= {len(slots)}, got r={r}")
    terms = {}
    for subset in itertools.combinations(slots, r):
        mono = [0] * ring.nvars
        for s in subset:
            mono[s] = 1
        terms[tuple(mono)] = Fraction(1)
    return Polynomial(ring, terms)
