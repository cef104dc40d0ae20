"""Groebner machinery: reduced bases, normal forms, elimination, tangent cones.

The engine is a classic Buchberger loop with the product criterion at pair
creation, the chain criterion at pair selection, and sugar-driven selection.
Over Q all internal arithmetic is fraction-free: polynomials are scaled to
primitive integer form and every reduction step is a pseudo-reduction whose
accumulated multiplier is divided out only when a caller needs the true
(k-linear) normal form.  Over a prime field basis elements are kept monic.

Every Groebner-driven entry point takes an optional step budget and raises
``BudgetExceededError`` instead of running away; budgets count reduction
steps, so failures are deterministic.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    ArityMismatchError,
    BudgetExceededError,
    FieldMismatchError,
    PointNotOnVarietyError,
    ZeroPolynomialError,
)
from .orders import GREVLEX, BlockOrder, MonomialOrder, elimination_order
from .poly import (
    Exponents,
    Field,
    Polynomial,
    dehomogenize,
    graded_pieces,
    homogenize,
    _sorted_terms,
)

DEFAULT_BUDGET = 5_000_000


class Budget:
    """Mutable step counter shared by one top-level computation."""

    __slots__ = ("remaining", "limit")

    def __init__(self, steps: Optional[int] = None):
        self.limit = DEFAULT_BUDGET if steps is None else int(steps)
        self.remaining = self.limit

    def spend(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise BudgetExceededError(
                f"computation budget of {self.limit} steps exceeded", self.limit
            )


def _as_budget(budget) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


# ---------------------------------------------------------------------------
# ideals and bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """Generator list with a write-once Groebner cache per monomial order."""

    arity: int
    field: Field
    generators: Tuple[Polynomial, ...]
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    @staticmethod
    def of(*gens: Polynomial) -> "Ideal":
        gens = tuple(g for g in gens if not g.is_zero)
        if not gens:
            raise ZeroPolynomialError("ideal needs at least one nonzero generator")
        arity = gens[0].arity
        field = gens[0].field
        for g in gens:
            if g.arity != arity:
                raise ArityMismatchError("generators have mixed arities")
            if g.field != field:
                raise FieldMismatchError("generators have mixed coefficient fields")
        return Ideal(arity, field, gens)

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def to_prime_field(self, p: int) -> "Ideal":
        return Ideal.of(*(g.to_prime_field(p) for g in self.generators))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: no leading monomial divides any monomial of another
    element.  Over Q elements are primitive integer polynomials with a
    positive leading coefficient; over a prime field they are monic."""

    order: MonomialOrder
    elements: Tuple[Polynomial, ...]
    leading_exponents: Tuple[Exponents, ...]

    @property
    def field(self) -> Field:
        return self.elements[0].field

    @property
    def arity(self) -> int:
        return self.elements[0].arity


# ---------------------------------------------------------------------------
# fraction-free working form
# ---------------------------------------------------------------------------


def _to_int_items(g: Polynomial) -> List[Tuple[Exponents, int]]:
    """Scale a rational polynomial to primitive integer content."""
    denom = 1
    for _, c in g.terms:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [(e, int(c * denom)) for e, c in g.terms]
    content = 0
    for _, c in ints:
        content = math.gcd(content, c)
    if content > 1:
        ints = [(e, c // content) for e, c in ints]
    return ints


def _normalize(items: Dict[Exponents, int], order: MonomialOrder, p: Optional[int]):
    """Return (sorted item list, lt, lc) in canonical scaling, or None if zero."""
    pairs = [(e, c) for e, c in items.items() if c]
    if not pairs:
        return None
    pairs.sort(key=lambda t: order.key(t[0]), reverse=True)
    lt = pairs[0][0]
    lc = pairs[0][1]
    if p is not None:
        if lc != 1:
            inv = pow(lc, p - 2, p)
            pairs = [(e, c * inv % p) for e, c in pairs]
        return pairs, lt, 1
    content = 0
    for _, c in pairs:
        content = math.gcd(content, c)
    if lc < 0:
        content = -content
    if content != 1:
        pairs = [(e, c // content) for e, c in pairs]
    return pairs, lt, pairs[0][1]


def _divides(a: Exponents, b: Exponents) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _find_reducer(e: Exponents, lts: Sequence[Exponents]) -> int:
    for idx, lt in enumerate(lts):
        ok = True
        for x, y in zip(lt, e):
            if x > y:
                ok = False
                break
        if ok:
            return idx
    return -1


def _reduce_full(
    start: Iterable[Tuple[Exponents, int]],
    sugar: int,
    lts: Sequence[Exponents],
    lcs: Sequence[int],
    tails: Sequence[Sequence[Tuple[Exponents, int]]],
    sugars: Sequence[int],
    order: MonomialOrder,
    budget: Budget,
    p: Optional[int],
):
    """Fully reduce ``start`` against the basis.

    Returns ``(remainder dict, multiplier, sugar)`` where over Z the
    invariant is ``multiplier * input = (combination of basis) + remainder``.
    """
    work: Dict[Exponents, int] = {}
    for e, c in start:
        work[e] = work.get(e, 0) + c
        if not work[e]:
            del work[e]
    heap = [(order.heap_key(e), e) for e in work]
    heapq.heapify(heap)
    remainder: Dict[Exponents, int] = {}
    multiplier = 1
    while heap:
        _, e = heapq.heappop(heap)
        c = work.get(e, 0)
        if not c:
            continue
        idx = _find_reducer(e, lts)
        if idx < 0:
            remainder[e] = c
            del work[e]
            continue
        budget.spend()
        shift = tuple(a - b for a, b in zip(e, lts[idx]))
        deg_shift = sum(shift)
        if sugars[idx] + deg_shift > sugar:
            sugar = sugars[idx] + deg_shift
        if p is None:
            l = lcs[idx]
            g = math.gcd(c, l)
            a = l // g
            b = c // g
            if a != 1:
                if a < 0:
                    a, b = -a, -b
                for k in work:
                    work[k] *= a
                for k in remainder:
                    remainder[k] *= a
                multiplier *= a
            del work[e]
            for eg, cg in tails[idx]:
                t = tuple(x + y for x, y in zip(shift, eg))
                old = work.get(t)
                if old is None:
                    work[t] = -b * cg
                    heapq.heappush(heap, (order.heap_key(t), t))
                else:
                    v = old - b * cg
                    if v:
                        work[t] = v
                    else:
                        del work[t]
        else:
            b = c  # basis is monic mod p
            del work[e]
            for eg, cg in tails[idx]:
                t = tuple(x + y for x, y in zip(shift, eg))
                old = work.get(t)
                if old is None:
                    v = (-b * cg) % p
                    if v:
                        work[t] = v
                        heapq.heappush(heap, (order.heap_key(t), t))
                else:
                    v = (old - b * cg) % p
                    if v:
                        work[t] = v
                    else:
                        del work[t]
    return remainder, multiplier, sugar


def _buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    budget: Budget,
) -> List[Tuple[List[Tuple[Exponents, int]], Exponents, int]]:
    """Core loop; returns normalized (items, lt, lc) triples of a reduced basis."""
    field = gens[0].field
    p = field.prime

    lts: List[Exponents] = []
    lcs: List[int] = []
    items: List[List[Tuple[Exponents, int]]] = []
    tails: List[List[Tuple[Exponents, int]]] = []
    sugars: List[int] = []
    pending: Dict[Tuple[int, int], bool] = {}
    heap: List[Tuple] = []

    def lcm_of(i: int, j: int) -> Exponents:
        return tuple(max(a, b) for a, b in zip(lts[i], lts[j]))

    def add_element(pairs: List[Tuple[Exponents, int]], sugar: int) -> None:
        norm = _normalize(dict(pairs), order, p)
        if norm is None:
            return
        plist, lt, lc = norm
        new_idx = len(lts)
        for i in range(new_idx):
            lcm = tuple(max(a, b) for a, b in zip(lts[i], lt))
            if all(a + b == c for a, b, c in zip(lts[i], lt, lcm)):
                continue  # product criterion: coprime leading monomials
            key = (i, new_idx)
            pending[key] = True
            heapq.heappush(
                heap,
                (
                    max(sugars[i] + sum(lcm) - sum(lts[i]), sugar + sum(lcm) - sum(lt)),
                    order.key(lcm),
                    i,
                    new_idx,
                ),
            )
        lts.append(lt)
        lcs.append(lc)
        items.append(plist)
        tails.append(plist[1:])
        sugars.append(sugar)

    seeds = sorted(
        (g for g in gens if not g.is_zero),
        key=lambda g: (g.total_degree(), len(g.terms), order.key(g.terms[0][0])),
    )
    if not seeds:
        raise ZeroPolynomialError("ideal needs at least one nonzero generator")
    for g in seeds:
        start = _to_int_items(g) if p is None else [(e, c) for e, c in g.terms]
        rem, _, sug = _reduce_full(
            start, g.total_degree(), lts, lcs, tails, sugars, order, budget, p
        )
        add_element(list(rem.items()), sug)

    while heap:
        budget.spend()
        pair_sugar, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        del pending[(i, j)]
        lcm = lcm_of(i, j)
        skip = False
        for k in range(len(lts)):
            if k == i or k == j:
                continue
            if _divides(lts[k], lcm):
                ki = (min(i, k), max(i, k))
                kj = (min(j, k), max(j, k))
                if ki not in pending and kj not in pending:
                    skip = True
                    break
        if skip:
            continue
        shift_i = tuple(a - b for a, b in zip(lcm, lts[i]))
        shift_j = tuple(a - b for a, b in zip(lcm, lts[j]))
        if p is None:
            g = math.gcd(lcs[i], lcs[j])
            ai = lcs[j] // g
            aj = lcs[i] // g
        else:
            ai = aj = 1
        spoly: Dict[Exponents, int] = {}
        for e, c in items[i]:
            t = tuple(x + y for x, y in zip(shift_i, e))
            spoly[t] = spoly.get(t, 0) + ai * c
        for e, c in items[j]:
            t = tuple(x + y for x, y in zip(shift_j, e))
            spoly[t] = spoly.get(t, 0) - aj * c
        if p is not None:
            spoly = {e: c % p for e, c in spoly.items()}
        rem, _, sug = _reduce_full(
            spoly.items(), pair_sugar, lts, lcs, tails, sugars, order, budget, p
        )
        add_element(list(rem.items()), sug)

    # minimalize: drop elements whose leading monomial another one divides
    alive = list(range(len(lts)))
    minimal: List[int] = []
    for i in sorted(alive, key=lambda k: order.key(lts[k])):
        if not any(_divides(lts[j], lts[i]) for j in minimal):
            minimal.append(i)
    # tail-reduce every survivor against the others
    final: List[Tuple[List[Tuple[Exponents, int]], Exponents, int]] = []
    m_lts = [lts[i] for i in minimal]
    m_lcs = [lcs[i] for i in minimal]
    m_items = [items[i] for i in minimal]
    for pos in range(len(minimal)):
        other_lts = m_lts[:pos] + m_lts[pos + 1 :]
        other_lcs = m_lcs[:pos] + m_lcs[pos + 1 :]
        other_tails = [m_items[k][1:] for k in range(len(minimal)) if k != pos]
        rem, _, _ = _reduce_full(
            m_items[pos].items() if isinstance(m_items[pos], dict) else m_items[pos],
            0, other_lts, other_lcs, other_tails, [0] * len(other_lts), order, budget, p
        )
        norm = _normalize(rem, order, p)
        if norm is None:
            continue
        plist, lt, lc = norm
        final.append((plist, lt, lc))
    final.sort(key=lambda t: order.key(t[1]))
    return final


def _to_polynomial(
    plist: List[Tuple[Exponents, int]], arity: int, field: Field
) -> Polynomial:
    if field.prime is None:
        terms = {e: Fraction(c) for e, c in plist}
    else:
        terms = dict(plist)
    return Polynomial(arity, field, _sorted_terms(terms))


def groebner(ideal: Ideal, order: MonomialOrder = GREVLEX, budget=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal; cached per order on the ideal."""
    cached = ideal._cache.get(order)
    if cached is not None:
        return cached
    b = _as_budget(budget)
    triples = _buchberger(ideal.generators, order, b)
    elements = tuple(_to_polynomial(plist, ideal.arity, ideal.field) for plist, _, _ in triples)
    basis = GroebnerBasis(order, elements, tuple(lt for _, lt, _ in triples))
    ideal._cache[order] = basis
    return basis


def normal_form(f: Polynomial, basis: GroebnerBasis, budget=None) -> Polynomial:
    """The unique remainder of f modulo the basis: no monomial of the result
    is divisible by a leading monomial; zero exactly for ideal members."""
    if f.is_zero:
        return f
    if f.arity != basis.arity:
        raise ArityMismatchError("polynomial arity does not match basis")
    if f.field != basis.field:
        raise FieldMismatchError("polynomial field does not match basis")
    b = _as_budget(budget)
    p = f.field.prime
    order = basis.order
    lts = list(basis.leading_exponents)
    prepared = []
    lcs = []
    for g in basis.elements:
        # basis coefficients are integers by construction (primitive or monic)
        pairs = sorted(
            ((e, int(c)) for e, c in g.terms),
            key=lambda t: order.key(t[0]),
            reverse=True,
        )
        prepared.append(pairs)
        lcs.append(pairs[0][1])
    tails = [pairs[1:] for pairs in prepared]
    if p is None:
        denom = 1
        for _, c in f.terms:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
        start = [(e, int(c * denom)) for e, c in f.terms]
        rem, mult, _ = _reduce_full(start, 0, lts, lcs, tails, [0] * len(lts), order, b, None)
        scale = Fraction(1, denom * mult)
        return Polynomial.from_dict(f.arity, {e: Fraction(c) * scale for e, c in rem.items()}, f.field)
    start = [(e, c) for e, c in f.terms]
    rem, _, _ = _reduce_full(start, 0, lts, lcs, tails, [0] * len(lts), order, b, p)
    return Polynomial.from_dict(f.arity, rem, f.field)


def in_ideal(f: Polynomial, ideal: Ideal, order: MonomialOrder = GREVLEX, budget=None) -> bool:
    return normal_form(f, groebner(ideal, order, budget), budget).is_zero


def eliminate(ideal: Ideal, drop_vars: Iterable[int], budget=None) -> Ideal:
    """Generators of the intersection with the subring omitting ``drop_vars``.

    The returned ideal keeps the original arity; its generators simply do
    not involve the dropped variables.
    """
    drop = sorted(set(drop_vars))
    order = elimination_order(ideal.arity, drop)
    basis = groebner(ideal, order, budget)
    kept = [
        g
        for g in basis.elements
        if all(all(e[i] == 0 for i in drop) for e, _ in g.terms)
    ]
    if not kept:
        raise ZeroPolynomialError("elimination produced the zero ideal")
    return Ideal.of(*kept)


def tangent_cone_ideal(ideal: Ideal, budget=None) -> Ideal:
    """Ideal of lowest-degree forms of every element (tangent cone at 0).

    Textbook recipe: take a graded-order basis of the ideal, homogenize each
    element with an auxiliary variable appended last, recompute a basis for
    the block order that makes the auxiliary variable dominant, then read
    off the lowest form of each dehomogenized element.  On homogeneous input
    the block order agrees with the graded order the correctness argument
    needs.
    """
    b = _as_budget(budget)
    origin = (0,) * ideal.arity
    for g in ideal.generators:
        if g.evaluate(origin):
            raise PointNotOnVarietyError("tangent cone needs generators vanishing at 0")
    base = groebner(ideal, GREVLEX, b)
    lifted = [homogenize(g) for g in base.elements]
    aux = ideal.arity  # index of the auxiliary variable
    order = BlockOrder(1, permutation=(aux,) + tuple(range(ideal.arity)))
    triples = _buchberger(lifted, order, b)
    lowest: List[Polynomial] = []
    seen = set()
    for plist, _, _ in triples:
        g = _to_polynomial(plist, ideal.arity + 1, ideal.field)
        affine = dehomogenize(g, aux, 1)
        if affine.is_zero:
            continue
        form = graded_pieces(affine).pieces[0][1]
        if form.terms not in seen:
            seen.add(form.terms)
            lowest.append(form)
    lowest.sort(key=lambda f: GREVLEX.key(f.terms[0][0]))
    # canonical presentation: the reduced basis of the cone ideal
    cone = Ideal.of(*lowest)
    basis = groebner(cone, GREVLEX, b)
    result = Ideal.of(*basis.elements)
    result._cache[GREVLEX] = basis
    return result
