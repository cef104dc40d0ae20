"""Sparse exact multivariate polynomials over Q and over prime fields.

A polynomial is a tuple of ``(exponents, coefficient)`` terms, sorted in
descending graded reverse lexicographic order, with no zero coefficients and
no duplicate monomials.  That canonical form makes equality a structural
comparison.  Coefficients are ``fractions.Fraction`` over Q and plain
integers in ``[0, p)`` over a prime field; no floating point appears
anywhere.

Monomials are bare exponent tuples, e.g. ``(2, 0, 1)`` for ``x1^2*x3`` in
three variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Optional, Sequence, Tuple, Union

from .errors import (
    ArityMismatchError,
    FieldMismatchError,
    ParameterError,
    PointNotOnVarietyError,
    ZeroPolynomialError,
)
from .orders import grevlex_key
from .primality import is_prime
from .rng import SeededStream

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


class RationalField:
    """Coefficient field Q; a stateless singleton."""

    prime: Optional[int] = None
    name = "QQ"

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """Coefficient field F_p for an odd prime p (fast pre-check mode)."""

    p: int

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ParameterError(f"modulus {self.p} is not an odd prime")

    @property
    def prime(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def __repr__(self):
        return self.name


QQ = RationalField()

Field = Union[RationalField, PrimeField]


def _sorted_terms(mapping: Dict[Exponents, Scalar]) -> Tuple[Tuple[Exponents, Scalar], ...]:
    items = [(e, c) for e, c in mapping.items() if c != 0]
    items.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
    return tuple(items)


@dataclass(frozen=True)
class Polynomial:
    """Immutable sparse polynomial in ``arity`` variables over ``field``."""

    arity: int
    field: Field
    terms: Tuple[Tuple[Exponents, Scalar], ...]

    # -- construction -------------------------------------------------

    @staticmethod
    def from_dict(arity: int, mapping: Dict[Exponents, Scalar], field: Field = QQ) -> "Polynomial":
        clean: Dict[Exponents, Scalar] = {}
        for exps, coeff in mapping.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity or any(e < 0 for e in exps):
                raise ParameterError(f"bad exponent tuple {exps} for arity {arity}")
            c = field.coerce(coeff)
            if c:
                clean[exps] = clean.get(exps, field.coerce(0)) + c
                if isinstance(field, PrimeField):
                    clean[exps] %= field.p
                if not clean[exps]:
                    del clean[exps]
        return Polynomial(arity, field, _sorted_terms(clean))

    @staticmethod
    def zero(arity: int, field: Field = QQ) -> "Polynomial":
        return Polynomial(arity, field, ())

    @staticmethod
    def constant(value, arity: int, field: Field = QQ) -> "Polynomial":
        return Polynomial.from_dict(arity, {(0,) * arity: value}, field)

    @staticmethod
    def variable(index: int, arity: int, field: Field = QQ) -> "Polynomial":
        if not 0 <= index < arity:
            raise ParameterError(f"variable index {index} out of range for arity {arity}")
        exps = tuple(1 if i == index else 0 for i in range(arity))
        return Polynomial.from_dict(arity, {exps: 1}, field)

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def min_total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no minimal degree")
        return min(sum(e) for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e, _ in self.terms}
        return len(degs) == 1

    def leading_term(self) -> Tuple[Exponents, Scalar]:
        """Leading term under the canonical grevlex order."""
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return self.terms[0]

    def coefficient(self, exps: Exponents) -> Scalar:
        for e, c in self.terms:
            if e == exps:
                return c
        return self.field.coerce(0)

    def as_dict(self) -> Dict[Exponents, Scalar]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.arity != other.arity:
            raise ArityMismatchError(f"arity {self.arity} vs {other.arity}")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def _coerce_operand(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.arity, self.field)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "Polynomial":
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        p = self.field.prime
        for e, c in other.terms:
            v = acc.get(e, 0) + c
            if p is not None:
                v %= p
            if v:
                acc[e] = v
            elif e in acc:
                del acc[e]
        return Polynomial(self.arity, self.field, _sorted_terms(acc))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.field.prime
        if p is None:
            items = tuple((e, -c) for e, c in self.terms)
        else:
            items = tuple((e, (-c) % p) for e, c in self.terms)
        return Polynomial(self.arity, self.field, items)

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = self.field.coerce(other)
            if not c:
                return Polynomial.zero(self.arity, self.field)
            p = self.field.prime
            if p is None:
                items = tuple((e, k * c) for e, k in self.terms)
            else:
                items = tuple((e, k * c % p) for e, k in self.terms)
            return Polynomial(self.arity, self.field, items)
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        acc: Dict[Exponents, Scalar] = {}
        p = self.field.prime
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                v = acc.get(e, 0) + c1 * c2
                if p is not None:
                    v %= p
                if v:
                    acc[e] = v
                elif e in acc:
                    del acc[e]
        return Polynomial(self.arity, self.field, _sorted_terms(acc))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ParameterError("polynomial powers take non-negative integer exponents")
        result = Polynomial.constant(1, self.arity, self.field)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- evaluation and substitution ------------------------------------

    def evaluate(self, point: Sequence) -> Scalar:
        if len(point) != self.arity:
            raise ArityMismatchError(f"point has {len(point)} coordinates, need {self.arity}")
        coords = [self.field.coerce(v) for v in point]
        p = self.field.prime
        total = self.field.coerce(0)
        pow_cache: Dict[Tuple[int, int], Scalar] = {}
        for exps, coeff in self.terms:
            v = coeff
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    if key not in pow_cache:
                        pow_cache[key] = pow(coords[i], e, p) if p is not None else coords[i] ** e
                    v = v * pow_cache[key]
                    if p is not None:
                        v %= p
            total = total + v
            if p is not None:
                total %= p
        return total

    def derivative(self, index: int) -> "Polynomial":
        if not 0 <= index < self.arity:
            raise ParameterError(f"variable index {index} out of range")
        acc: Dict[Exponents, Scalar] = {}
        p = self.field.prime
        for exps, coeff in self.terms:
            e = exps[index]
            if e == 0:
                continue
            new = exps[:index] + (e - 1,) + exps[index + 1 :]
            v = coeff * e
            if p is not None:
                v %= p
            if v:
                acc[new] = acc.get(new, 0) + v
                if p is not None:
                    acc[new] %= p
                if not acc[new]:
                    del acc[new]
        return Polynomial(self.arity, self.field, _sorted_terms(acc))

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``images[i]`` for variable ``i``."""
        if len(images) != self.arity:
            raise ArityMismatchError("need one image polynomial per variable")
        if not images:
            raise ParameterError("cannot compose a 0-ary polynomial")
        target_arity = images[0].arity
        for g in images:
            if g.arity != target_arity or g.field != self.field:
                raise FieldMismatchError("images must share arity and field")
        result = Polynomial.zero(target_arity, self.field)
        pow_cache: Dict[Tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in pow_cache:
                pow_cache[key] = images[i] ** e
            return pow_cache[key]

        for exps, coeff in self.terms:
            term = Polynomial.constant(coeff, target_arity, self.field)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def to_prime_field(self, p: int) -> "Polynomial":
        """Reduce an exact rational polynomial modulo an odd prime."""
        gf = PrimeField(p)
        return Polynomial.from_dict(self.arity, dict(self.terms), gf)

    def __repr__(self):
        from .parsing import format_polynomial

        return f"Polynomial({format_polynomial(self)!r}, arity={self.arity}, field={self.field})"


# ---------------------------------------------------------------------------
# point-local decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedDecomposition:
    """Homogeneous components of a polynomial translated to a base point.

    ``pieces`` maps total degree to the (nonzero) homogeneous component;
    the sum of all components equals the translate of the source polynomial
    to the origin.
    """

    point: Tuple[Scalar, ...]
    min_degree: int
    max_degree: int
    pieces: Tuple[Tuple[int, Polynomial], ...]

    def component(self, degree: int) -> Polynomial:
        for d, g in self.pieces:
            if d == degree:
                return g
        arity = self.pieces[0][1].arity
        return Polynomial.zero(arity, self.pieces[0][1].field)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.pieces)

    def recombined(self) -> Polynomial:
        total = Polynomial.zero(self.pieces[0][1].arity, self.pieces[0][1].field)
        for _, g in self.pieces:
            total = total + g
        return total


def translate_to_origin(f: Polynomial, point: Sequence) -> Polynomial:
    """Return f(X + p); vanishes at the origin iff f vanishes at p."""
    if len(point) != f.arity:
        raise ArityMismatchError(f"point has {len(point)} coordinates, need {f.arity}")
    coords = [f.field.coerce(v) for v in point]
    images = [
        Polynomial.variable(i, f.arity, f.field) + Polynomial.constant(coords[i], f.arity, f.field)
        for i in range(f.arity)
    ]
    return f.compose(images)


def graded_pieces(f: Polynomial, point: Optional[Sequence] = None) -> GradedDecomposition:
    """Split f (translated to ``point`` if given) into homogeneous components."""
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial has no graded decomposition")
    base = tuple(f.field.coerce(v) for v in point) if point is not None else (f.field.coerce(0),) * f.arity
    local = translate_to_origin(f, base) if any(base) else f
    buckets: Dict[int, Dict[Exponents, Scalar]] = {}
    for exps, coeff in local.terms:
        buckets.setdefault(sum(exps), {})[exps] = coeff
    degrees = sorted(buckets)
    pieces = tuple(
        (d, Polynomial(f.arity, f.field, _sorted_terms(buckets[d]))) for d in degrees
    )
    return GradedDecomposition(base, degrees[0], degrees[-1], pieces)


def order_at_origin(f: Polynomial) -> int:
    """Least total degree with a nonzero component; the multiplicity of V(f) at 0."""
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial has no order")
    if f.evaluate((0,) * f.arity):
        raise PointNotOnVarietyError("point not on hypersurface")
    return f.min_total_degree()


def restrict_to_line(f: Polynomial, direction: Sequence) -> Polynomial:
    """Univariate restriction f(a1*t, ..., an*t).

    Identically zero exactly when the line through the origin with the
    given direction lies inside V(f).
    """
    coords = [f.field.coerce(v) for v in direction]
    if all(c == 0 for c in coords):
        raise ParameterError("direction must be nonzero")
    t = Polynomial.variable(0, 1, f.field)
    images = [t * c for c in coords]
    return f.compose(images)


def jacobian(f: Polynomial) -> Tuple[Polynomial, ...]:
    """All formal partial derivatives of f."""
    return tuple(f.derivative(i) for i in range(f.arity))


def homogenize(f: Polynomial) -> Polynomial:
    """Homogenize with one extra variable appended last."""
    if f.is_zero:
        return Polynomial.zero(f.arity + 1, f.field)
    d = f.total_degree()
    items = {e + (d - sum(e),): c for e, c in f.terms}
    return Polynomial(f.arity + 1, f.field, _sorted_terms(items))


def dehomogenize(f: Polynomial, index: int, value=1) -> Polynomial:
    """Substitute ``value`` for variable ``index`` and drop it."""
    if not 0 <= index < f.arity:
        raise ParameterError("variable index out of range")
    v = f.field.coerce(value)
    p = f.field.prime
    acc: Dict[Exponents, Scalar] = {}
    for exps, coeff in f.terms:
        e = exps[index]
        c = coeff * (pow(v, e, p) if p is not None else v**e)
        if p is not None:
            c %= p
        new = exps[:index] + exps[index + 1 :]
        if c:
            acc[new] = acc.get(new, 0) + c
            if p is not None:
                acc[new] %= p
            if not acc[new]:
                del acc[new]
    return Polynomial(f.arity - 1, f.field, _sorted_terms(acc))


# ---------------------------------------------------------------------------
# random dense forms
# ---------------------------------------------------------------------------


def _exponent_tuples(degree: int, arity: int) -> Iterator[Exponents]:
    if arity == 1:
        yield (degree,)
        return
    for head in range(degree, -1, -1):
        for tail in _exponent_tuples(degree - head, arity - 1):
            yield (head,) + tail


def monomial_count(degree: int, arity: int) -> int:
    return math.comb(degree + arity - 1, arity - 1)


def random_form(degree: int, arity: int, seed: int, coeff_bound: int = 10) -> Polynomial:
    """Dense homogeneous form with full monomial support.

    Every monomial of the given degree appears with a nonzero integer
    coefficient drawn uniformly from [-coeff_bound, coeff_bound] \\ {0};
    the output is a deterministic function of the seed.
    """
    if degree < 0:
        raise ParameterError("degree must be >= 0")
    if arity < 1:
        raise ParameterError("arity must be >= 1")
    if coeff_bound < 1:
        raise ParameterError("coeff_bound must be >= 1")
    stream = SeededStream(seed)
    items: Dict[Exponents, Scalar] = {}
    for exps in _exponent_tuples(degree, arity):
        items[exps] = Fraction(stream.next_nonzero(coeff_bound))
    return Polynomial(arity, QQ, _sorted_terms(items))
