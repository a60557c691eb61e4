"""Reduction, S-polynomials, and Buchberger completion in free modules over
commutative operator rings.

The reduction loop rewrites only the leading term; full tail reduction happens
in :func:`autoreduce`, which also makes every element monic and sorts the
basis into a deterministic canonical form.  Pair selection is a normal
strategy: a queue keyed by (lcm total degree, insertion index).
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .coefficients import Coeff, inverse
from .freemodule import Element, Term, TermOrder, apply_monomial, divides, quotient

__all__ = [
    "GroebnerBasis",
    "apply_operator_poly",
    "autoreduce",
    "buchberger",
    "is_groebner_basis",
    "normal_form",
    "reduce_element",
    "s_polynomial",
]

# An operator polynomial: exponent vector -> coefficient.  Used to track how
# basis elements decompose over the original generating set.
OpPoly = dict[tuple, Coeff]


def s_polynomial(g1: Element, g2: Element, order: TermOrder) -> Element:
    """S-polynomial of g1 and g2; zero when the leading generators differ."""
    t1, c1 = g1.leading_term(order)
    t2, c2 = g2.leading_term(order)
    if t1.gen != t2.gen:
        return Element()
    lcm = tuple(max(a, b) for a, b in zip(t1.exps, t2.exps))
    u1 = tuple(l - a for l, a in zip(lcm, t1.exps))
    u2 = tuple(l - b for l, b in zip(lcm, t2.exps))
    return apply_monomial(u1, g1).scaled(inverse(c1)) - apply_monomial(u2, g2).scaled(
        inverse(c2)
    )


def reduce_element(
    f: Element,
    basis: Sequence[Element],
    order: TermOrder,
    chain: list[int] | None = None,
) -> Element:
    """Rewrite the leading term of f modulo ``basis`` until irreducible.

    Divisors are tried in list order (first match).  When ``chain`` is given,
    the index of each divisor used is appended to it.
    """
    cached = [(g,) + g.leading_term(order) for g in basis if g]
    r = f
    while r:
        t, c = r.leading_term(order)
        for i, (g, tg, cg) in enumerate(cached):
            if divides(tg, t):
                lam = quotient(t, tg)
                r = r - apply_monomial(lam, g).scaled(c * inverse(cg))
                if chain is not None:
                    chain.append(i)
                break
        else:
            break
    return r


def normal_form(f: Element, basis: Sequence[Element], order: TermOrder) -> Element:
    """Fully reduce every term of f modulo ``basis`` (tail reduction included)."""
    cached = [(g,) + g.leading_term(order) for g in basis if g]
    done: dict[Term, Coeff] = {}
    work = f
    while work:
        t, c = work.leading_term(order)
        for g, tg, cg in cached:
            if divides(tg, t):
                lam = quotient(t, tg)
                work = work - apply_monomial(lam, g).scaled(c * inverse(cg))
                break
        else:
            done[t] = c
            work = work - Element({t: c})
    return Element(done)


@dataclass(frozen=True)
class GroebnerBasis:
    """Autoreduced monic Groebner basis plus completion statistics.

    ``completed_size`` counts the basis as the completion loop left it
    (inputs plus every nonzero remainder), before redundant elements are
    dropped; published computations often report that larger set.
    ``cofactors``, when tracked, holds for each basis element a vector of
    operator polynomials expressing it over the original input list.
    """

    elements: tuple[Element, ...]
    order: TermOrder
    pairs_processed: int
    reduction_steps: int
    completed_size: int = 0
    cofactors: tuple[tuple[OpPoly, ...], ...] | None = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_terms(self) -> list[Term]:
        return [g.leading_term(self.order)[0] for g in self.elements]


# -- cofactor bookkeeping ----------------------------------------------------


def _unit_cof(n: int, i: int, m: int) -> tuple[OpPoly, ...]:
    zero = (0,) * m
    return tuple({zero: Fraction(1)} if j == i else {} for j in range(n))


def _cof_scale(cof: tuple[OpPoly, ...], c: Coeff) -> tuple[OpPoly, ...]:
    return tuple({e: c * x for e, x in p.items()} for p in cof)


def _cof_shift_scale(cof, lam: tuple, c: Coeff) -> tuple[OpPoly, ...]:
    out = []
    for p in cof:
        out.append({tuple(a + b for a, b in zip(e, lam)): c * x for e, x in p.items()})
    return tuple(out)


def _cof_sub(a: tuple[OpPoly, ...], b: tuple[OpPoly, ...]) -> tuple[OpPoly, ...]:
    out = []
    for pa, pb in zip(a, b):
        merged = dict(pa)
        for e, x in pb.items():
            s = merged.get(e, Fraction(0)) - x
            if s:
                merged[e] = s
            else:
                merged.pop(e, None)
        out.append(merged)
    return tuple(out)


def apply_operator_poly(p: OpPoly, f: Element) -> Element:
    """Apply an operator polynomial to a module element."""
    acc = Element()
    for exps, c in p.items():
        acc = acc + apply_monomial(exps, f).scaled(c)
    return acc


class _Tracked:
    """Working pair of (element, cofactor vector) inside the completion."""

    __slots__ = ("elem", "lt", "lc", "cof")

    def __init__(self, elem: Element, order: TermOrder, cof=None):
        self.elem = elem
        self.lt, self.lc = elem.leading_term(order)
        self.cof = cof


def _s_poly_tracked(a: _Tracked, b: _Tracked, order: TermOrder, track: bool):
    lcm = tuple(max(x, y) for x, y in zip(a.lt.exps, b.lt.exps))
    u1 = tuple(l - x for l, x in zip(lcm, a.lt.exps))
    u2 = tuple(l - x for l, x in zip(lcm, b.lt.exps))
    inv1, inv2 = inverse(a.lc), inverse(b.lc)
    s = apply_monomial(u1, a.elem).scaled(inv1) - apply_monomial(u2, b.elem).scaled(inv2)
    cof = None
    if track:
        cof = _cof_sub(_cof_shift_scale(a.cof, u1, inv1), _cof_shift_scale(b.cof, u2, inv2))
    return s, cof


def _reduce_tracked(elem, cof, basis: list[_Tracked], order, track, chain=None):
    steps = 0
    r = elem
    while r:
        t, c = r.leading_term(order)
        hit = None
        for i, g in enumerate(basis):
            if divides(g.lt, t):
                hit = (i, g)
                break
        if hit is None:
            break
        i, g = hit
        lam = quotient(t, g.lt)
        factor = c * inverse(g.lc)
        r = r - apply_monomial(lam, g.elem).scaled(factor)
        if track:
            cof = _cof_sub(cof, _cof_shift_scale(g.cof, lam, factor))
        if chain is not None:
            chain.append(i)
        steps += 1
    return r, cof, steps


def buchberger(
    generators: Iterable[Element],
    order: TermOrder,
    *,
    use_coprime_criterion: bool = False,
    track_cofactors: bool = False,
    trace: Callable[[str], None] | None = None,
    render: Callable[[Element], str] | None = None,
) -> GroebnerBasis:
    """Complete ``generators`` to a Groebner basis, then autoreduce.

    Deterministic: pairs are processed in (lcm total degree, insertion index)
    order and zero input relations are dropped.  Elements are kept
    unnormalized during the loop and made monic only at the end.
    """
    show = render if render is not None else repr
    inputs = [g for g in generators if g]
    m = len(inputs[0].leading_term(order)[0].exps) if inputs else 0
    basis: list[_Tracked] = []
    for i, g in enumerate(inputs):
        cof = _unit_cof(len(inputs), i, m) if track_cofactors else None
        basis.append(_Tracked(g, order, cof))

    counter = itertools.count()
    heap: list[tuple[int, int, int, int]] = []

    def push_pairs(j: int):
        for i in range(j):
            if basis[i].lt.gen == basis[j].lt.gen:
                lcm_deg = sum(max(a, b) for a, b in zip(basis[i].lt.exps, basis[j].lt.exps))
                heapq.heappush(heap, (lcm_deg, next(counter), i, j))

    for j in range(len(basis)):
        push_pairs(j)

    pairs_processed = 0
    reduction_steps = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pairs_processed += 1
        a, b = basis[i], basis[j]
        if use_coprime_criterion and all(
            min(x, y) == 0 for x, y in zip(a.lt.exps, b.lt.exps)
        ):
            if trace:
                trace(f"pair ({i + 1},{j + 1}): skipped, coprime leading monomials")
            continue
        s, cof = _s_poly_tracked(a, b, order, track_cofactors)
        if not s:
            if trace:
                trace(f"pair ({i + 1},{j + 1}): S = 0")
            continue
        chain: list[int] = []
        r, cof, steps = _reduce_tracked(s, cof, basis, order, track_cofactors, chain)
        reduction_steps += steps
        if trace:
            via = ", ".join(f"g{k + 1}" for k in chain) or "-"
            tail = f"added g{len(basis) + 1}" if r else "reduced to 0"
            trace(f"pair ({i + 1},{j + 1}): S = {show(s)}; via [{via}]; {tail}")
        if r:
            basis.append(_Tracked(r, order, cof))
            push_pairs(len(basis) - 1)

    completed_size = len(basis)
    elements, cofactors = _autoreduce_tracked(basis, order, track_cofactors)
    return GroebnerBasis(
        elements=tuple(elements),
        order=order,
        pairs_processed=pairs_processed,
        reduction_steps=reduction_steps,
        completed_size=completed_size,
        cofactors=tuple(cofactors) if track_cofactors else None,
    )


def _autoreduce_tracked(basis: list[_Tracked], order: TermOrder, track: bool):
    # Minimality: drop elements whose leading term is divisible by another's.
    # Ascending scan guarantees divisors are kept before their multiples.
    kept: list[_Tracked] = []
    for g in sorted(basis, key=lambda w: order.key(w.lt)):
        if not any(divides(h.lt, g.lt) for h in kept):
            kept.append(g)

    reduced: list[tuple[Element, tuple[OpPoly, ...] | None, Term]] = []
    for idx, g in enumerate(kept):
        others = kept[:idx] + kept[idx + 1 :]
        elem, cof = g.elem, g.cof
        # Tail reduction: the head is irreducible modulo the others, so the
        # loop below only rewrites lower terms.
        done: dict[Term, Coeff] = {}
        work = elem
        while work:
            t, c = work.leading_term(order)
            hit = None
            for h in others:
                if divides(h.lt, t):
                    hit = h
                    break
            if hit is None:
                done[t] = c
                work = work - Element({t: c})
                continue
            lam = quotient(t, hit.lt)
            factor = c * inverse(hit.lc)
            work = work - apply_monomial(lam, hit.elem).scaled(factor)
            if track:
                cof = _cof_sub(cof, _cof_shift_scale(hit.cof, lam, factor))
        elem = Element(done)
        lt, lc = elem.leading_term(order)
        inv = inverse(lc)
        elem = elem.scaled(inv)
        if track:
            cof = _cof_scale(cof, inv)
        reduced.append((elem, cof, lt))

    reduced.sort(key=lambda item: (item[2].gen, order.key(item[2])))
    elements = [item[0] for item in reduced]
    cofactors = [item[1] for item in reduced]
    return elements, cofactors


def autoreduce(basis: Sequence[Element], order: TermOrder) -> list[Element]:
    """Minimal monic form of a Groebner basis, deterministically sorted."""
    tracked = [_Tracked(g, order) for g in basis if g]
    elements, _ = _autoreduce_tracked(tracked, order, track=False)
    return elements


def is_groebner_basis(basis: Sequence[Element], order: TermOrder) -> bool:
    """Buchberger criterion: every pairwise S-polynomial reduces to zero."""
    elems = [g for g in basis if g]
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = s_polynomial(elems[i], elems[j], order)
            if s and reduce_element(s, elems, order):
                return False
    return True
