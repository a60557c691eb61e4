"""Dimension polynomials from leading-term staircases.

Given the per-generator antichain of leading-term exponent vectors of an
autoreduced Groebner basis, the number of free terms of order <= r is an
inclusion-exclusion over subsets of each antichain; expanding every binomial
C(r+n-f, n) symbolically gives the exact dimension polynomial, valid for all
r beyond a computable threshold.  A brute-force lattice enumeration serves as
the independent counting oracle, and interpolation through oracle values
cross-checks every computed polynomial coefficient-exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .freemodule import Element, TermOrder

__all__ = [
    "DimPolyReport",
    "PolyQ",
    "Staircase",
    "StaircaseTooLarge",
    "ValidationRecord",
    "binomial_poly",
    "binomial_str",
    "compare_strength",
    "dimension_polynomial",
    "expand_binomial_basis",
    "free_module_polynomial",
    "free_term_count_oracle",
    "free_term_counts",
    "lagrange_interpolate",
    "parse_poly",
    "poly_str",
    "staircase_from_basis",
    "to_binomial_basis",
    "validate_polynomial",
]

MAX_STAIRCASE_VECTORS = 25


class StaircaseTooLarge(ValueError):
    """Subset enumeration guard: too many staircase vectors for one generator."""


class PolyQ:
    """Univariate polynomial over Q; coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyQ is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + other.scaled(-1)

    def __mul__(self, other: "PolyQ") -> "PolyQ":
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    def scaled(self, c) -> "PolyQ":
        c = Fraction(c)
        return PolyQ(x * c for x in self.coeffs)

    def __call__(self, r) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"PolyQ({poly_str(self)!r})"


def poly_str(p: PolyQ, var: str = "t") -> str:
    """Descending-power rendering with exact rational coefficients."""
    if not p:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            v = var if k == 1 else f"{var}^{k}"
            body = v if mag == 1 else f"{mag}*{v}"
        parts.append((sign, body))
    text = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
    for sign, body in parts[1:]:
        text += sign + body
    return text


def parse_poly(text: str, var: str = "t") -> PolyQ:
    """Parse the output of :func:`poly_str` back to an exact polynomial."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return PolyQ()
    # split into signed monomials
    pieces: list[str] = []
    start = 0
    for i, ch in enumerate(text):
        if ch in "+-" and i > 0 and text[i - 1] not in "+-*^/":
            pieces.append(text[start:i])
            start = i
    pieces.append(text[start:])
    coeffs: dict[int, Fraction] = {}
    for piece in pieces:
        sign = Fraction(1)
        while piece and piece[0] in "+-":
            if piece[0] == "-":
                sign = -sign
            piece = piece[1:]
        if var in piece:
            head, _, tail = piece.partition(var)
            coeff = Fraction(head.rstrip("*")) if head.rstrip("*") else Fraction(1)
            k = int(tail[1:]) if tail.startswith("^") else 1
        else:
            coeff = Fraction(piece)
            k = 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * coeff
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return PolyQ(out)


@lru_cache(maxsize=None)
def binomial_poly(n: int, shift: int = 0) -> PolyQ:
    """The binomial C(t + n - shift, n) expanded as a polynomial in t."""
    p = PolyQ((1,))
    for j in range(n):
        p = p * PolyQ((n - shift - j, 1))
    return p.scaled(Fraction(1, math.factorial(n)))


@dataclass(frozen=True)
class Staircase:
    """Per-generator minimal antichains of leading-term exponent vectors."""

    per_generator: tuple[tuple[tuple[int, ...], ...], ...]
    n: int

    @classmethod
    def build(cls, vectors_by_gen: Sequence[Iterable[Sequence[int]]], n: int) -> "Staircase":
        gens = []
        for vectors in vectors_by_gen:
            vs = sorted({tuple(v) for v in vectors})
            for v in vs:
                if len(v) != n:
                    raise ValueError(f"staircase vector {v} has length != {n}")
                if any(k < 0 for k in v):
                    raise ValueError(f"staircase vector {v} has negative entries")
            gens.append(tuple(_minimal_antichain(vs)))
        return cls(tuple(gens), n)

    @property
    def num_generators(self) -> int:
        return len(self.per_generator)


def _minimal_antichain(vectors: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    vectors = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept: list[tuple[int, ...]] = []
    for v in vectors:
        if not any(all(a <= b for a, b in zip(u, v)) for u in kept):
            kept.append(v)
    return kept


def staircase_from_basis(
    basis: Iterable[Element], order: TermOrder, q: int, n: int
) -> Staircase:
    """Group leading-term exponent vectors by generator, minimized."""
    by_gen: list[list[tuple[int, ...]]] = [[] for _ in range(q)]
    for g in basis:
        if not g:
            continue
        t, _ = g.leading_term(order)
        by_gen[t.gen].append(t.exps)
    return Staircase.build(by_gen, n)


def dimension_polynomial(
    stair: Staircase, *, kind: str = "difference", m: int | None = None
) -> "DimPolyReport":
    """Exact inclusion-exclusion count of free terms, as a polynomial report.

    Every subset of a generator's antichain contributes a signed binomial
    C(r + n - f, n) where f sums the componentwise maxima of the subset; the
    threshold beyond which the polynomial counts exactly is the largest f.
    """
    n = stair.n
    if kind == "inversive":
        if n % 2:
            raise ValueError("inversive staircases need an even operator count")
        m = n // 2 if m is None else m
    else:
        m = n if m is None else m

    total = PolyQ()
    r0 = 0
    for vectors in stair.per_generator:
        if len(vectors) > MAX_STAIRCASE_VECTORS:
            raise StaircaseTooLarge(
                f"{len(vectors)} staircase vectors for one generator exceeds "
                f"the limit of {MAX_STAIRCASE_VECTORS}"
            )
        if vectors:
            r0 = max(r0, sum(max(v[k] for v in vectors) for k in range(n)))
        for size in range(len(vectors) + 1):
            for subset in itertools.combinations(vectors, size):
                if subset:
                    f = sum(max(v[k] for v in subset) for k in range(n))
                else:
                    f = 0
                term = binomial_poly(n, f)
                total = total + (term if size % 2 == 0 else term.scaled(-1))
    return _build_report(total, stair, kind, m, r0)


@dataclass(frozen=True)
class DimPolyReport:
    """Dimension polynomial with binomial-basis form and invariants."""

    polynomial: PolyQ
    binomial_coeffs: tuple[int, ...]
    degree: int
    delta_type: int
    typical_dimension: int
    delta_dimension: int
    validity_threshold: int
    kind: str
    m: int


def _build_report(p: PolyQ, stair: Staircase, kind: str, m: int, r0: int) -> DimPolyReport:
    coeffs = to_binomial_basis(p)
    d = max(p.degree, 0)
    typical = coeffs[d] if coeffs else 0
    if kind == "inversive":
        if p.degree == m:
            raw = p.leading_coefficient() * math.factorial(m) / (2**m)
            if raw.denominator != 1:
                raise ValueError(
                    f"inversive leading coefficient {p.leading_coefficient()} is not "
                    f"of the form 2^{m}*a/{m}!"
                )
            delta_dim = int(raw)
        else:
            delta_dim = 0
    else:
        delta_dim = coeffs[m] if p.degree == m else 0
    return DimPolyReport(
        polynomial=p,
        binomial_coeffs=coeffs,
        degree=d,
        delta_type=d,
        typical_dimension=typical,
        delta_dimension=delta_dim,
        validity_threshold=r0,
        kind=kind,
        m=m,
    )


def to_binomial_basis(p: PolyQ) -> tuple[int, ...]:
    """Coefficients c_0..c_d with p = sum c_i * C(t+i, i); integers for any
    integer-valued polynomial, by top-down elimination."""
    if not p:
        return ()
    out = [0] * (p.degree + 1)
    work = p
    for i in range(p.degree, -1, -1):
        c = work.coefficient(i) * math.factorial(i)
        if c.denominator != 1:
            raise ValueError(f"{p} is not integer-valued: c_{i} = {c}")
        out[i] = int(c)
        if out[i]:
            work = work - binomial_poly(i).scaled(out[i])
    if work:
        raise AssertionError("binomial elimination left a nonzero remainder")
    return tuple(out)


def expand_binomial_basis(coeffs: Sequence[int]) -> PolyQ:
    total = PolyQ()
    for i, c in enumerate(coeffs):
        if c:
            total = total + binomial_poly(i).scaled(c)
    return total


def binomial_str(coeffs: Sequence[int]) -> str:
    """Render sum c_i*C(t+i,i), highest index first."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{abs(c)}*C(t+{i},{i})"))
    if not parts:
        return "0"
    text = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def free_module_polynomial(s: int, m: int, kind: str) -> PolyQ:
    """Closed-form dimension polynomial of a free module of rank s.

    Differential/difference: s*C(t+m, m).  Inversive: the alternating sum
    s*sum_k (-1)^(m-k) 2^k C(m,k) C(t+k,k), counting Laurent monomials of
    order <= t.
    """
    if s < 0 or m < 0:
        raise ValueError("rank and operator count must be nonnegative")
    if kind in ("differential", "difference"):
        return binomial_poly(m).scaled(s)
    if kind == "inversive":
        total = PolyQ()
        for k in range(m + 1):
            c = Fraction((-1) ** (m - k) * 2**k * math.comb(m, k))
            total = total + binomial_poly(k).scaled(c)
        return total.scaled(s)
    raise ValueError(f"unknown kind {kind!r}")


def compare_strength(p: PolyQ, q: PolyQ) -> str:
    """Eventual comparison: 'stronger' iff p(r) < q(r) for all large r.

    Smaller dimension polynomial means the p-side system leaves fewer free
    values, i.e. constrains the field more strongly.
    """
    top = max(p.degree, q.degree)
    for k in range(top, -1, -1):
        a, b = p.coefficient(k), q.coefficient(k)
        if a != b:
            return "stronger" if a < b else "weaker"
    return "equal"


# -- counting oracle ---------------------------------------------------------


def free_term_count_oracle(stair: Staircase, r: int) -> int:
    """Exhaustive count of terms of order <= r free of every staircase vector."""
    if r < 0:
        return 0
    vectors = list(_exponents_up_to(stair.n, r))
    count = 0
    for antichain in stair.per_generator:
        for v in vectors:
            if not any(all(a <= b for a, b in zip(u, v)) for u in antichain):
                count += 1
    return count


def _exponents_up_to(n: int, r: int):
    if n == 0:
        yield ()
        return
    for k in range(r + 1):
        for rest in _exponents_up_to(n - 1, r - k):
            yield (k,) + rest


def _grid_up_to(n: int, r: int) -> np.ndarray:
    """All exponent vectors of sum <= r as an (N, n) integer array."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int16)
    prev = _grid_up_to(n - 1, r)
    sums = prev.sum(axis=1, dtype=np.int64) if n > 1 else np.zeros(len(prev), dtype=np.int64)
    blocks = []
    for k in range(r + 1):
        sub = prev[sums <= r - k]
        col = np.full((len(sub), 1), k, dtype=np.int16)
        blocks.append(np.hstack([col, sub]))
    return np.vstack(blocks)


def free_term_counts(stair: Staircase, r_max: int) -> list[int]:
    """Oracle counts for every r in 0..r_max, from one shared enumeration."""
    if r_max < 0:
        return []
    grid = _grid_up_to(stair.n, r_max)
    sums = grid.sum(axis=1, dtype=np.int64)
    per_sum = np.zeros(r_max + 1, dtype=np.int64)
    for antichain in stair.per_generator:
        if antichain:
            blocked = np.zeros(len(grid), dtype=bool)
            for v in antichain:
                blocked |= (grid >= np.asarray(v, dtype=np.int16)).all(axis=1)
            free_sums = sums[~blocked]
        else:
            free_sums = sums
        per_sum += np.bincount(free_sums, minlength=r_max + 1)
    return [int(x) for x in np.cumsum(per_sum)]


def lagrange_interpolate(points: Sequence[tuple[int, int]]) -> PolyQ:
    """Exact interpolation through integer points."""
    total = PolyQ()
    xs = [Fraction(x) for x, _ in points]
    for i, (xi, yi) in enumerate(points):
        term = PolyQ((yi,))
        for j, xj in enumerate(xs):
            if j == i:
                continue
            term = term * PolyQ((-xj, 1)).scaled(Fraction(1) / (Fraction(xi) - xj))
        total = total + term
    return total


@dataclass(frozen=True)
class ValidationRecord:
    """Result of checking a dimension polynomial against the counting oracle."""

    checked_range: tuple[int, int]
    ok: bool
    first_mismatch: tuple[int, int, str] | None
    interpolation_ok: bool
    interpolated: PolyQ


def validate_polynomial(
    report: DimPolyReport, stair: Staircase, window: int = 5
) -> ValidationRecord:
    """Check p(r) against the oracle on [r0, r0+window], then interpolate a
    degree-<=n polynomial through n+1 oracle values and require coefficient
    equality."""
    if window < 1:
        raise ValueError("window must be >= 1")
    r0 = report.validity_threshold
    n = stair.n
    r_max = r0 + max(window, n)
    counts = free_term_counts(stair, r_max)
    first_mismatch = None
    for r in range(r0, r0 + window + 1):
        expected = report.polynomial(r)
        if expected != counts[r]:
            first_mismatch = (r, counts[r], str(expected))
            break
    interp = lagrange_interpolate([(r, counts[r]) for r in range(r0, r0 + n + 1)])
    interpolation_ok = interp == report.polynomial
    return ValidationRecord(
        checked_range=(r0, r0 + window),
        ok=first_mismatch is None and interpolation_ok,
        first_mismatch=first_mismatch,
        interpolation_ok=interpolation_ok,
        interpolated=interp,
    )
