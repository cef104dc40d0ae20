"""Hilbert series, projective dimension and degree from leading-term ideals.

For a homogeneous ideal I the quotient's Hilbert series is
``N(t) / (1-t)^k`` where k is the number of variables.  Writing
``N = (1-t)^r * Q`` with ``Q(1) != 0`` gives the Krull dimension ``k - r``
of the affine cone, hence projective dimension ``k - r - 1`` (``-1`` for an
empty scheme), and the degree ``Q(1)`` whenever the projective dimension is
at least 0.  Dimension and degree are independent of the monomial order used
for the basis.

The numerator of a monomial ideal is computed by the standard recursion
``N(I) = N(I + (x_j)) + t * N(I : x_j)`` with pure-power base cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import ParameterError
from .groebner import Ideal, groebner
from .orders import GREVLEX, MonomialOrder

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class HilbertData:
    """Numerator coefficients plus the invariants read off from them."""

    numerator: Tuple[int, ...]
    dimension: int  # projective dimension; -1 when the scheme is empty
    degree: Optional[int]  # None exactly when dimension is -1


def minimalize_monomials(gens: Iterable[Exponents]) -> List[Exponents]:
    """Keep only the divisibility-minimal exponent tuples."""
    out: List[Exponents] = []
    for m in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(all(x <= y for x, y in zip(g, m)) for g in out):
            out.append(m)
    return out


def _poly_add(a: List[int], b: List[int]) -> List[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_shift(a: List[int], k: int) -> List[int]:
    return [0] * k + a


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def hilbert_numerator(gens: Iterable[Exponents], arity: int) -> List[int]:
    """Numerator of the Hilbert series of k[x]/(monomial ideal)."""
    memo: Dict[FrozenSet[Exponents], Tuple[int, ...]] = {}

    def recurse(key: FrozenSet[Exponents]) -> Tuple[int, ...]:
        cached = memo.get(key)
        if cached is not None:
            return cached
        gens_list = minimalize_monomials(key)
        if not gens_list:
            result: Tuple[int, ...] = (1,)
        elif any(sum(g) == 0 for g in gens_list):
            result = (0,)  # unit ideal: zero ring
        else:
            mixed = [g for g in gens_list if sum(1 for e in g if e) > 1]
            if not mixed:
                # pairwise-coprime pure powers
                acc = [1]
                for g in gens_list:
                    acc = _poly_mul(acc, [1] + [0] * (sum(g) - 1) + [-1])
                result = tuple(acc)
            else:
                counts = [0] * arity
                for g in mixed:
                    for i, e in enumerate(g):
                        if e:
                            counts[i] += 1
                pivot = counts.index(max(counts))
                plus: List[Exponents] = [g for g in gens_list if g[pivot] == 0]
                unit = tuple(1 if i == pivot else 0 for i in range(arity))
                plus.append(unit)
                colon = [
                    tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g))
                    for g in gens_list
                ]
                a = recurse(frozenset(plus))
                b = recurse(frozenset(minimalize_monomials(colon)))
                result = tuple(_poly_add(list(a), _poly_shift(list(b), 1)))
        memo[key] = result
        return result

    return list(recurse(frozenset(gens)))


def _strip_unit_root(num: List[int]) -> Tuple[List[int], int]:
    """Divide the numerator by (1-t) as long as it vanishes at t=1."""
    n = list(num)
    r = 0
    while any(n) and sum(n) == 0:
        # synthetic division by (1-t): q_k = q_{k-1} + n_k
        q = []
        acc = 0
        for c in n[:-1]:
            acc += c
            q.append(acc)
        n = q if q else [0]
        r += 1
    return n, r


def hilbert_data_from_leads(leads: Iterable[Exponents], arity: int) -> HilbertData:
    num = hilbert_numerator(leads, arity)
    if not any(num):
        return HilbertData(tuple(num), -1, None)
    q, r = _strip_unit_root(num)
    affine_dim = arity - r
    proj_dim = affine_dim - 1
    degree = sum(q) if proj_dim >= 0 else None
    return HilbertData(tuple(num), proj_dim, degree)


def hilbert_data(ideal: Ideal, order: MonomialOrder = GREVLEX, budget=None) -> HilbertData:
    """Projective dimension and degree of Proj of the quotient ring."""
    if not ideal.homogeneous:
        raise ParameterError("hilbert data needs a homogeneous ideal")
    basis = groebner(ideal, order, budget)
    return hilbert_data_from_leads(basis.leading_exponents, ideal.arity)


def projective_zero_exists(ideal: Ideal, budget=None) -> bool:
    """True iff V(I) in projective space is nonempty over the closure.

    Decided through the Hilbert dimension of the leading-term ideal: the
    scheme is empty exactly when the quotient is finite-dimensional.
    """
    return hilbert_data(ideal, GREVLEX, budget).dimension >= 0
