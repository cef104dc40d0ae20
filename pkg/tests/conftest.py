"""Shared helpers: independent brute-force oracles used across the suite.

The oracles deliberately avoid the library's Groebner machinery: membership
is truncated linear algebra over the rationals, Hilbert functions come from
counting standard monomials degree by degree.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from seshadri.poly import Polynomial
from seshadri.rng import SeededStream


def all_monomials(arity, degree):
    if arity == 1:
        yield (degree,)
        return
    for head in range(degree + 1):
        for tail in all_monomials(arity - 1, degree - head):
            yield (head,) + tail


def bruteforce_hilbert_function(leads, arity, through):
    """Standard-monomial counts of a monomial ideal, degree 0..through."""
    counts = []
    for s in range(through + 1):
        free = 0
        for mono in all_monomials(arity, s):
            if not any(all(g[i] <= mono[i] for i in range(arity)) for g in leads):
                free += 1
        counts.append(free)
    return counts


def series_counts(numerator, arity, through):
    """Expand N(t)/(1-t)^arity as a power series, degrees 0..through."""
    series = list(numerator) + [0] * (through + 1 - len(numerator))
    series = series[: through + 1]
    for _ in range(arity):
        acc = 0
        out = []
        for c in series:
            acc += c
            out.append(acc)
        series = out
    return series


def _solve_membership(rows, target):
    """Is target in the row span?  Plain Gaussian elimination over Q."""
    mat = [[Fraction(v) for v in row] for row in rows]
    vec = [Fraction(v) for v in target]
    ncols = len(vec)
    rank_col = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        if vec[c]:
            f = vec[c]
            vec = [a - f * b for a, b in zip(vec, mat[r])]
        rank_col.append(c)
        r += 1
    return not any(vec)


def bruteforce_homogeneous_membership(f, generators):
    """f in (generators)?  Valid for homogeneous f and generators: compare
    against the span of monomial multiples in f's degree."""
    assert f.is_homogeneous() and all(g.is_homogeneous() for g in generators)
    if f.is_zero:
        return True
    s = f.total_degree()
    arity = f.arity
    basis = list(all_monomials(arity, s))
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in generators:
        dg = g.total_degree()
        if dg > s:
            continue
        for mono in all_monomials(arity, s - dg):
            row = [0] * len(basis)
            for e, c in g.terms:
                shifted = tuple(a + b for a, b in zip(e, mono))
                row[index[shifted]] = c
            rows.append(row)
    target = [0] * len(basis)
    for e, c in f.terms:
        target[index[e]] = c
    return _solve_membership(rows, target)


def bruteforce_graded_rank(generators, arity, degree):
    """Dimension of the degree-s graded piece of a homogeneous ideal,
    by row reduction of monomial multiples (independent of the engine)."""
    basis = list(all_monomials(arity, degree))
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in generators:
        dg = g.total_degree()
        if dg > degree:
            continue
        for mono in all_monomials(arity, degree - dg):
            row = [Fraction(0)] * len(basis)
            for e, c in g.terms:
                shifted = tuple(a + b for a, b in zip(e, mono))
                row[index[shifted]] = Fraction(c)
            rows.append(row)
    # plain Gaussian elimination rank
    rank = 0
    for col in range(len(basis)):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def random_polynomial(stream: SeededStream, arity, max_degree, max_terms=8, fractional=False):
    """Random sparse polynomial for round-trip and ring-axiom tests."""
    items = {}
    nterms = 1 + stream.next_below(max_terms)
    for _ in range(nterms):
        exps = []
        left = max_degree
        for _ in range(arity):
            e = stream.next_below(left + 1)
            exps.append(e)
            left -= e
        num = stream.next_nonzero(9)
        if fractional and stream.next_below(3) == 0:
            coeff = Fraction(num, 1 + stream.next_below(7))
        else:
            coeff = Fraction(num)
        items[tuple(exps)] = coeff
    return Polynomial.from_dict(arity, items)


@pytest.fixture
def stream():
    return SeededStream(20260809)
