"""Exact homogeneous symmetric functions in the monomial, power-sum,
elementary and Schur bases.

Partitions are plain tuples of positive ints in weakly decreasing order.
Coefficients are Python ints, so no overflow handling is needed.  Every
conversion out of the monomial basis peels off leading terms in reverse
lexicographic order, which extends dominance order; that is all the
unitriangularity of ``e_{λ'}`` and ``s_λ`` over ``m`` requires.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Mapping

Partition = tuple

BASES = ("m", "p", "e", "s")


class SymFunError(ValueError):
    pass


class PeelingError(ArithmeticError):
    """Non-zero remainder after basis peeling; signals a bug, not bad input."""


# -- partitions --------------------------------------------------------------

def partition(parts: Iterable[int]) -> Partition:
    """Normalize to a weakly decreasing tuple of positive ints."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if out and out[-1] <= 0:
        raise SymFunError(f"partition parts must be positive: {out}")
    return out


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise SymFunError("negative weight")
    out = []

    def gen(rest, cap, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rest, cap), 0, -1):
            prefix.append(part)
            gen(rest - part, part, prefix)
            prefix.pop()

    gen(n, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def dominates(lam: Partition, mu: Partition) -> bool:
    """``λ ⊵ μ`` for partitions of equal weight."""
    if sum(lam) != sum(mu):
        raise SymFunError("dominance compares partitions of equal weight")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def multiplicity_factorial(lam: Partition) -> int:
    """``∏ r_i!`` over the multiplicities ``r_i`` of the parts of ``λ``."""
    out = 1
    for r in Counter(lam).values():
        out *= factorial(r)
    return out


# -- the polynomial container ------------------------------------------------

class SymPoly:
    """Sparse homogeneous symmetric function in one basis."""

    __slots__ = ("basis", "coeffs", "degree")

    def __init__(self, basis: str, coeffs: Mapping[Partition, int] | None = None,
                 degree: int | None = None):
        if basis not in BASES:
            raise SymFunError(f"unknown basis {basis!r}")
        clean: dict[Partition, int] = {}
        for key, c in (coeffs or {}).items():
            if c:
                k = partition(key)
                clean[k] = clean.get(k, 0) + int(c)
        clean = {k: c for k, c in clean.items() if c}
        weights = {sum(k) for k in clean}
        if len(weights) > 1:
            raise SymFunError(f"inhomogeneous terms of weights {sorted(weights)}")
        if weights:
            (w,) = weights
            if degree is not None and degree != w:
                raise SymFunError(f"terms have weight {w}, declared degree {degree}")
            degree = w
        self.basis = basis
        self.coeffs = clean
        self.degree = degree

    @classmethod
    def unit(cls, basis: str, lam: Iterable[int]) -> "SymPoly":
        lam = partition(lam)
        return cls(basis, {lam: 1}, sum(lam))

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, lam) -> int:
        return self.coeffs.get(partition(lam), 0)

    def __iter__(self):
        return iter(self.terms())

    def terms(self) -> list[tuple[Partition, int]]:
        """Terms in reverse lexicographic order of their partitions."""
        return sorted(self.coeffs.items(), reverse=True)

    def _same(self, other: "SymPoly"):
        if self.basis != other.basis:
            raise SymFunError(f"basis mismatch {self.basis} vs {other.basis}")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymPoly(self.basis, out, self.degree if self.degree is not None else other.degree)

    def __neg__(self):
        return SymPoly(self.basis, {k: -c for k, c in self.coeffs.items()}, self.degree)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, c: int) -> "SymPoly":
        return SymPoly(self.basis, {k: c * v for k, v in self.coeffs.items()}, self.degree)

    def __rmul__(self, c: int) -> "SymPoly":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._same(other)
        if self.basis == "m":
            return multiply(self, other)
        if self.basis in ("e", "p"):
            # multiplicative bases: products concatenate the index partitions
            out: dict[Partition, int] = {}
            for k1, c1 in self.coeffs.items():
                for k2, c2 in other.coeffs.items():
                    key = partition(k1 + k2)
                    out[key] = out.get(key, 0) + c1 * c2
            deg = None if self.degree is None or other.degree is None else self.degree + other.degree
            return SymPoly(self.basis, out, deg)
        raise SymFunError("products in the Schur basis are not supported; convert to m first")

    def __repr__(self):
        return f"SymPoly({self.basis!r}, {render(self)!r})"

    def __str__(self):
        return render(self)


# -- text rendering ----------------------------------------------------------

def render(f: SymPoly) -> str:
    """E.g. ``"e[4] + 5e[3,1] - 2e[2,2] + e[2,1,1]"``; the zero polynomial is ``"0"``."""
    pieces = []
    for lam, c in f.terms():
        mag = abs(c)
        body = f"{'' if mag == 1 else mag}{f.basis}[{','.join(map(str, lam))}]"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(pieces) if pieces else "0"


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*([mpes])\[([0-9,\s]*)\]\s*")


def parse(text: str, degree: int | None = None) -> SymPoly:
    """Inverse of :func:`render`; accepts terms in any order."""
    text = text.strip()
    if text == "0":
        return SymPoly("m" if degree is None else "m", {}, degree)
    pos = 0
    basis = None
    coeffs: dict[Partition, int] = {}
    first = True
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match or match.end() == pos:
            raise SymFunError(f"cannot parse symmetric function at offset {pos}: {text[pos:pos + 20]!r}")
        sign, num, b, body = match.groups()
        if not sign and not first:
            raise SymFunError(f"missing '+' or '-' before offset {match.start(2)}")
        if basis is None:
            basis = b
        elif b != basis:
            raise SymFunError(f"mixed bases {basis!r} and {b!r}")
        lam = partition(int(t) for t in body.split(",") if t.strip()) if body.strip() else ()
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        coeffs[lam] = coeffs.get(lam, 0) + c
        pos = match.end()
        first = False
    return SymPoly(basis, coeffs, degree)


# -- monomial products ---------------------------------------------------------

@lru_cache(maxsize=None)
def _monomial_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """``m_λ · m_μ`` in the monomial basis.

    Augmented monomials ``ã_λ = (∏ r_i!) m_λ`` multiply by summing over partial
    matchings of the parts of ``λ`` with those of ``μ``.  Matchings are counted
    in bulk: ``N[i][j]`` parts of the i-th distinct value of ``λ`` absorb parts
    of the j-th distinct value of ``μ``.
    """
    A = sorted(Counter(lam).items(), reverse=True)
    B = sorted(Counter(mu).items(), reverse=True)
    rows, cols = len(A), len(B)
    result: dict[Partition, int] = {}
    N = [[0] * cols for _ in range(rows)]
    row_used = [0] * rows
    col_used = [0] * cols

    def emit():
        parts = []
        denom = 1
        for i, (a, r) in enumerate(A):
            parts += [a] * (r - row_used[i])
            denom *= factorial(r - row_used[i])
            for j, (b, _) in enumerate(B):
                if N[i][j]:
                    parts += [a + b] * N[i][j]
                    denom *= factorial(N[i][j])
        for j, (b, s) in enumerate(B):
            parts += [b] * (s - col_used[j])
            denom *= factorial(s - col_used[j])
        nu = tuple(sorted(parts, reverse=True))
        num = multiplicity_factorial(nu)
        assert num % denom == 0
        result[nu] = result.get(nu, 0) + num // denom

    def fill(cell):
        if cell == rows * cols:
            emit()
            return
        i, j = divmod(cell, cols)
        cap = min(A[i][1] - row_used[i], B[j][1] - col_used[j])
        for k in range(cap + 1):
            N[i][j] = k
            row_used[i] += k
            col_used[j] += k
            fill(cell + 1)
            row_used[i] -= k
            col_used[j] -= k
        N[i][j] = 0

    if not A:
        return ((mu, 1),)
    if not B:
        return ((lam, 1),)
    fill(0)
    return tuple(result.items())


def multiply(f: SymPoly, g: SymPoly) -> SymPoly:
    if f.basis != "m" or g.basis != "m":
        raise SymFunError("multiply expects two monomial-basis polynomials")
    out: dict[Partition, int] = {}
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            for nu, c in _monomial_product(lam, mu):
                out[nu] = out.get(nu, 0) + a * b * c
    deg = None if f.degree is None or g.degree is None else f.degree + g.degree
    return SymPoly("m", out, deg)


# -- transition rows into m ----------------------------------------------------

@lru_cache(maxsize=None)
def _e_row(lam: Partition) -> SymPoly:
    if not lam:
        return SymPoly("m", {(): 1}, 0)
    head = _e_row(lam[:-1])
    return multiply(head, SymPoly.unit("m", (1,) * lam[-1]))


def e_to_m(lam: Iterable[int]) -> SymPoly:
    """``e_λ`` in the monomial basis, as the product of ``e_k = m_{(1^k)}``."""
    return _e_row(partition(lam))


@lru_cache(maxsize=None)
def _p_row(lam: Partition) -> SymPoly:
    if not lam:
        return SymPoly("m", {(): 1}, 0)
    return multiply(_p_row(lam[:-1]), SymPoly.unit("m", (lam[-1],)))


def p_to_m(lam: Iterable[int]) -> SymPoly:
    """``p_λ`` in the monomial basis, as the product of ``p_k = m_{(k)}``."""
    return _p_row(partition(lam))


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``λ`` and content ``μ``.

    The cells holding the largest entry form a horizontal strip of size
    ``μ[-1]``; strip it off and recurse on the remaining shape and content.
    """
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    # choose kappa with lam/kappa a horizontal strip: lam[i+1] <= kappa[i] <= lam[i]
    ell = len(lam)

    def choose(i, removed, kappa):
        nonlocal total
        if i == ell:
            if removed == last:
                total += kostka(tuple(p for p in kappa if p), rest)
            return
        low = lam[i + 1] if i + 1 < ell else 0
        for k in range(lam[i], low - 1, -1):
            r = removed + lam[i] - k
            if r > last:
                break
            kappa.append(k)
            choose(i + 1, r, kappa)
            kappa.pop()

    choose(0, 0, [])
    return total


@lru_cache(maxsize=None)
def _s_row(lam: Partition) -> SymPoly:
    n = sum(lam)
    return SymPoly("m", {mu: kostka(lam, mu) for mu in partitions(n)}, n)


def kostka_row(lam: Iterable[int]) -> SymPoly:
    """``s_λ`` in the monomial basis via Kostka numbers."""
    return _s_row(partition(lam))


# -- conversions ----------------------------------------------------------------

def to_m(f: SymPoly) -> SymPoly:
    if f.basis == "m":
        return f
    row = {"e": e_to_m, "p": p_to_m, "s": kostka_row}[f.basis]
    out = SymPoly("m", {}, f.degree)
    for lam, c in f.coeffs.items():
        out = out + row(lam).scale(c)
    return out


def _peel(f: SymPoly, basis: str, row, leading) -> SymPoly:
    if f.basis != "m":
        raise SymFunError(f"expected a monomial-basis polynomial, got basis {f.basis!r}")
    if not f.coeffs:
        return SymPoly(basis, {}, f.degree)
    n = f.degree
    rem = dict(f.coeffs)
    out: dict[Partition, int] = {}
    for lam in partitions(n):
        c = rem.get(lam, 0)
        if not c:
            continue
        key = leading(lam)
        out[key] = c
        for mu, k in row(key).coeffs.items():
            v = rem.get(mu, 0) - c * k
            if v:
                rem[mu] = v
            else:
                rem.pop(mu, None)
    if rem:
        raise PeelingError(f"non-zero remainder after peeling into {basis}: {rem}")
    return SymPoly(basis, out, n)


def expand_in_e(f: SymPoly) -> SymPoly:
    """Elementary coordinates: the ``m_λ`` coefficient fixes ``e_{λ'}``."""
    return _peel(f, "e", e_to_m, conjugate)


def expand_in_s(f: SymPoly) -> SymPoly:
    """Schur coordinates: the ``m_λ`` coefficient fixes ``s_λ``."""
    return _peel(f, "s", kostka_row, lambda lam: lam)


def expand_in_p(f: SymPoly) -> SymPoly:
    """Power-sum coordinates by dense exact elimination (p is not unitriangular
    over m with integer inverse, so this one goes through fractions)."""
    if f.basis != "m":
        raise SymFunError("expand_in_p expects a monomial-basis polynomial")
    if not f.coeffs:
        return SymPoly("p", {}, f.degree)
    n = f.degree
    # p_λ = Σ_{μ ⊵ λ} R[λ][μ] m_μ is triangular in the opposite direction
    rem = {k: Fraction(v) for k, v in f.coeffs.items()}
    out = {}
    for lam in reversed(partitions(n)):
        c = rem.get(lam, 0)
        if not c:
            continue
        row = p_to_m(lam)
        c = c / row[lam]
        out[lam] = c
        for mu, k in row.coeffs.items():
            rem[mu] = rem.get(mu, 0) - c * k
    if any(rem.values()) or any(v.denominator != 1 for v in out.values()):
        raise PeelingError("power-sum expansion is not integral")
    return SymPoly("p", {k: int(v) for k, v in out.items()}, n)


def jacobi_trudi_schur(lam: Iterable[int]) -> SymPoly:
    """``s_λ = det(e_{λ'_i - i + j})`` expanded as a signed sum over permutations."""
    lam = partition(lam)
    conj = conjugate(lam)
    size = len(conj)  # equals λ_1
    n = sum(lam)
    out: dict[Partition, int] = {}
    for perm in permutations(range(size)):
        key = []
        for i, j in enumerate(perm):
            k = conj[i] - i + j
            if k < 0:
                break
            if k:
                key.append(k)
        else:
            sign = _perm_sign(perm)
            kp = partition(key)
            out[kp] = out.get(kp, 0) + sign
    return SymPoly("e", out, n)


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- positivity and evaluation -------------------------------------------------

def is_positive(f: SymPoly) -> tuple[bool, tuple[Partition, int] | None]:
    """``(True, None)`` if every coefficient is non-negative, else ``(False, most negative term)``."""
    if f.basis not in ("e", "s"):
        raise SymFunError(f"positivity is checked in the e or s basis, not {f.basis!r}")
    worst = None
    for lam, c in f.terms():
        if c < 0 and (worst is None or c < worst[1]):
            worst = (lam, c)
    return worst is None, worst


def evaluate_at_ones(f: SymPoly, k: int) -> int:
    """Value with ``x_1 = … = x_k = 1`` and all other variables 0."""
    if f.basis != "m":
        f = to_m(f)
    total = 0
    for lam, c in f.coeffs.items():
        ell = len(lam)
        if ell <= k:
            total += c * (factorial(k) // (factorial(k - ell) * multiplicity_factorial(lam)))
    return total
