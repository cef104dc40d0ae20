"""Monomial orders on exponent tuples.

An order is exposed as a sort key: ``order.key(e1) > order.key(e2)`` exactly
when the monomial with exponents ``e1`` is larger.  All orders here are
multiplicative total orders with 1 minimal, so they are valid for Groebner
basis computations.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

Exponents = Tuple[int, ...]


def grevlex_key(exps: Exponents):
    """Graded reverse lexicographic key: degree first, then the last
    distinct exponent decides (smaller last exponent wins)."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def _grevlex_heap_key(exps: Exponents):
    return (-sum(exps), tuple(reversed(exps)))


class MonomialOrder:
    """Base class; subclasses define ``key`` and a stable ``name``.

    ``heap_key`` is the mirror image of ``key``: ascending heap keys walk
    monomials from largest to smallest, which is what a min-heap needs when
    polynomial reduction consumes terms top down.
    """

    name: str = "order"

    def key(self, exps: Exponents):
        raise NotImplementedError

    def heap_key(self, exps: Exponents):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def _ident(self):
        return (self.name,)

    def __repr__(self):
        return self.name


class GrevlexOrder(MonomialOrder):
    def __init__(self, permutation: Optional[Sequence[int]] = None):
        self.permutation = tuple(permutation) if permutation is not None else None
        self.name = "grevlex" if self.permutation is None else f"grevlex{self.permutation}"

    def key(self, exps: Exponents):
        if self.permutation is not None:
            exps = tuple(exps[i] for i in self.permutation)
        return grevlex_key(exps)

    def heap_key(self, exps: Exponents):
        if self.permutation is not None:
            exps = tuple(exps[i] for i in self.permutation)
        return _grevlex_heap_key(exps)

    def _ident(self):
        return ("grevlex", self.permutation)


class LexOrder(MonomialOrder):
    def __init__(self, permutation: Optional[Sequence[int]] = None):
        self.permutation = tuple(permutation) if permutation is not None else None
        self.name = "lex" if self.permutation is None else f"lex{self.permutation}"

    def key(self, exps: Exponents):
        if self.permutation is not None:
            exps = tuple(exps[i] for i in self.permutation)
        return exps

    def heap_key(self, exps: Exponents):
        if self.permutation is not None:
            exps = tuple(exps[i] for i in self.permutation)
        return tuple(-e for e in exps)

    def _ident(self):
        return ("lex", self.permutation)


class BlockOrder(MonomialOrder):
    """Elimination order: the first ``split`` variables of the permuted
    tuple form a dominant grevlex block, the rest a second grevlex block.

    Any monomial containing a block-one variable is larger than every
    monomial without one, which is what elimination needs.
    """

    def __init__(self, split: int, permutation: Optional[Sequence[int]] = None):
        if split < 1:
            raise ValueError("block split must be >= 1")
        self.split = split
        self.permutation = tuple(permutation) if permutation is not None else None
        self.name = f"block({split})" if self.permutation is None else f"block({split}){self.permutation}"

    def key(self, exps: Exponents):
        if self.permutation is not None:
            exps = tuple(exps[i] for i in self.permutation)
        head, tail = exps[: self.split], exps[self.split :]
        return (grevlex_key(head), grevlex_key(tail))

    def heap_key(self, exps: Exponents):
        if self.permutation is not None:
            exps = tuple(exps[i] for i in self.permutation)
        head, tail = exps[: self.split], exps[self.split :]
        return (_grevlex_heap_key(head), _grevlex_heap_key(tail))

    def _ident(self):
        return ("block", self.split, self.permutation)


GREVLEX = GrevlexOrder()
LEX = LexOrder()


def elimination_order(arity: int, drop: Sequence[int]) -> BlockOrder:
    """Block order whose dominant block is exactly the variables in ``drop``."""
    drop_sorted = sorted(set(drop))
    if not drop_sorted:
        raise ValueError("nothing to eliminate")
    if drop_sorted[0] < 0 or drop_sorted[-1] >= arity:
        raise ValueError("drop variable out of range")
    keep = [i for i in range(arity) if i not in set(drop_sorted)]
    return BlockOrder(len(drop_sorted), tuple(drop_sorted + keep))
