"""Counting absolutely irreducible factors of bivariate polynomials.

The count is the dimension of the solution space of the first-order system

    d/dy (g/f) = d/dx (h/f),   deg_x g <= n-1, deg_y g <= m,
                               deg_x h <= n,   deg_y h <= m-1,

for a squarefree f of bidegree (n, m): one solution per absolutely
irreducible factor over the algebraic closure (valid in characteristic 0
and over F_p once p exceeds the degree bound below).  Only the count is
produced; no factors are extracted.

Also here: exact squarefreeness tests (univariate contents plus an
interpolated resultant), univariate resultants, and the plane-projection
pipeline used to certify that a space curve is irreducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import NotSquarefreeError, ParameterError
from .linalg import modp_rank, qq_rank
from .poly import Polynomial, PrimeField
from .rng import SeededStream

# ---------------------------------------------------------------------------
# univariate helpers on coefficient lists (index = exponent)
# ---------------------------------------------------------------------------


def _trim(a: List) -> List:
    while a and not a[-1]:
        a.pop()
    return a


def _udeg(a: List) -> int:
    return len(a) - 1


def _umod(a: List, b: List, p: Optional[int]) -> List:
    a = list(a)
    db = _udeg(b)
    lb = b[-1]
    if p is not None:
        lb_inv = pow(lb, p - 2, p)
    while _udeg(a) >= db and a:
        da = _udeg(a)
        if p is None:
            factor = Fraction(a[-1], 1) / lb if not isinstance(a[-1], Fraction) else a[-1] / lb
        else:
            factor = a[-1] * lb_inv % p
        for i in range(db + 1):
            idx = da - db + i
            v = a[idx] - factor * b[i]
            a[idx] = v % p if p is not None else v
        _trim(a)
        if not a:
            break
    return a


def _ugcd(a: List, b: List, p: Optional[int]) -> List:
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, _umod(a, b, p)
        _trim(b)
    if not a:
        return []
    lead = a[-1]
    if p is None:
        return [Fraction(c) / lead for c in a]
    inv = pow(lead, p - 2, p)
    return [c * inv % p for c in a]


def _udiv_exact(a: List, b: List, p: Optional[int]) -> List:
    """Exact quotient a / b; raises если a is not a multiple."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    out = [0] * (max(_udeg(a) - _udeg(b) + 1, 0))
    lb = b[-1]
    if p is not None:
        lb_inv = pow(lb, p - 2, p)
    while a and _udeg(a) >= _udeg(b):
        shift = _udeg(a) - _udeg(b)
        q = a[-1] * lb_inv % p if p is not None else Fraction(a[-1]) / lb
        out[shift] = q
        for i in range(_udeg(b) + 1):
            v = a[shift + i] - q * b[i]
            a[shift + i] = v % p if p is not None else v
        _trim(a)
    if a:
        raise ArithmeticError("division was not exact")
    return _trim(out)


def _uderiv(a: List, p: Optional[int]) -> List:
    out = []
    for i in range(1, len(a)):
        v = a[i] * i
        out.append(v % p if p is not None else v)
    return _trim(out)


def uni_resultant(a: Sequence, b: Sequence, p: Optional[int]):
    """Resultant of two univariate polynomials via the Euclidean chain."""
    A = _trim(list(a))
    B = _trim(list(b))
    if not A or not B:
        return 0
    res = 1 if p is None else 1
    if _udeg(A) < _udeg(B):
        if (_udeg(A) * _udeg(B)) % 2:
            res = -res
        A, B = B, A
    while _udeg(B) > 0:
        R = _umod(A, B, p)
        if not R:
            return 0
        da, db, dr = _udeg(A), _udeg(B), _udeg(R)
        lead = B[-1]
        powv = pow(lead, da - dr, p) if p is not None else lead ** (da - dr)
        res = res * powv
        if (da * db) % 2:
            res = -res
        if p is not None:
            res %= p
        A, B = B, R
    final = pow(B[0], _udeg(A), p) if p is not None else B[0] ** _udeg(A)
    res = res * final
    return res % p if p is not None else res


# ---------------------------------------------------------------------------
# bivariate plumbing
# ---------------------------------------------------------------------------


def _coeff_grid(f: Polynomial) -> Tuple[int, int, Dict[Tuple[int, int], object]]:
    if f.arity != 2:
        raise ParameterError("expected a polynomial in 2 variables")
    grid = {(e[0], e[1]): c for e, c in f.terms}
    n = max((a for a, _ in grid), default=0)
    m = max((b for _, b in grid), default=0)
    return n, m, grid


def _x_coefficients_of_y(f: Polynomial) -> List[List]:
    """List over y-exponent of univariate x-coefficient lists."""
    n, m, grid = _coeff_grid(f)
    zero = 0
    out = []
    for b in range(m + 1):
        coeffs = [grid.get((a, b), zero) for a in range(n + 1)]
        out.append(_trim(coeffs))
    return out


def _content_in(f: Polynomial, var: int) -> List:
    """Univariate content of f with respect to the other variable."""
    p = f.field.prime
    if var == 0:
        slices = _x_coefficients_of_y(f)
    else:
        flipped = Polynomial.from_dict(2, {(e[1], e[0]): c for e, c in f.terms}, f.field)
        slices = _x_coefficients_of_y(flipped)
    content: List = []
    for s in slices:
        if s:
            content = _ugcd(content, s, p) if content else _ugcd(s, s, p)
        if content and _udeg(content) == 0:
            break
    return content


def _divide_out_univariate(f: Polynomial, content: List, var: int) -> Polynomial:
    p = f.field.prime
    if _udeg(content) == 0:
        return f
    # group terms by the other variable's exponent, divide each slice
    other = 1 - var
    buckets: Dict[int, List] = {}
    maxdeg = 0
    for e, c in f.terms:
        buckets.setdefault(e[other], [])
        lst = buckets[e[other]]
        while len(lst) <= e[var]:
            lst.append(0)
        lst[e[var]] = c
        maxdeg = max(maxdeg, e[var])
    items: Dict[Tuple[int, int], object] = {}
    for ob, lst in buckets.items():
        q = _udiv_exact(lst, content, p)
        for a, c in enumerate(q):
            if c:
                exps = (a, ob) if var == 0 else (ob, a)
                items[exps] = c
    return Polynomial.from_dict(2, items, f.field)


def is_squarefree_bivariate(f: Polynomial) -> bool:
    """Exact squarefreeness over the coefficient field (char 0 or large p)."""
    if f.arity != 2:
        raise ParameterError("expected a polynomial in 2 variables")
    if f.is_zero:
        return False
    p = f.field.prime
    n, m, _ = _coeff_grid(f)
    if n == 0 and m == 0:
        return True
    if m == 0 or n == 0:
        var = 0 if m == 0 else 1
        slices = _x_coefficients_of_y(
            f
            if var == 0
            else Polynomial.from_dict(2, {(e[1], e[0]): c for e, c in f.terms}, f.field)
        )
        uni = slices[0]
        g = _ugcd(uni, _uderiv(uni, p), p)
        return _udeg(g) == 0
    # repeated factors free of y hide in the x-content, and symmetrically
    cx = _content_in(f, 0)
    gx = _ugcd(cx, _uderiv(cx, p), p) if _udeg(cx) > 0 else []
    if gx and _udeg(gx) > 0:
        return False
    core = _divide_out_univariate(f, cx, 0)
    cy = _content_in(core, 1)
    gy = _ugcd(cy, _uderiv(cy, p), p) if _udeg(cy) > 0 else []
    if gy and _udeg(gy) > 0:
        return False
    core = _divide_out_univariate(core, cy, 1)
    n2, m2, _ = _coeff_grid(core)
    if m2 == 0:
        return True
    # Res_y(core, core_y) as a polynomial in x vanishes identically exactly
    # when core has a repeated factor of positive y-degree; test it at
    # enough points, skipping those where the leading y-coefficient drops.
    slices = _x_coefficients_of_y(core)
    lead = slices[-1]
    dy = core.derivative(1)
    bound = 2 * max(n2, 1) * m2 + 1
    seen = 0
    x0 = 0
    zero_everywhere = True
    while seen < bound:
        lv = _ueval(lead, x0, p)
        if lv:
            seen += 1
            a = _specialize_x(core, x0)
            b = _specialize_x(dy, x0)
            if uni_resultant(a, b, p):
                zero_everywhere = False
                break
        x0 += 1
        if p is not None and x0 >= p:
            raise ParameterError("field too small for squarefreeness sampling")
    return not zero_everywhere


def _ueval(a: List, x0: int, p: Optional[int]):
    acc = 0
    for c in reversed(a):
        acc = acc * x0 + c
        if p is not None:
            acc %= p
    return acc


def _specialize_x(f: Polynomial, x0: int) -> List:
    p = f.field.prime
    out: List = []
    for e, c in f.terms:
        while len(out) <= e[1]:
            out.append(0)
        v = c * (pow(x0, e[0], p) if p is not None else x0 ** e[0])
        out[e[1]] = out[e[1]] + v
        if p is not None:
            out[e[1]] %= p
    return _trim(out)


# ---------------------------------------------------------------------------
# the factor count itself
# ---------------------------------------------------------------------------


def _pde_kernel_dimension(f: Polynomial) -> int:
    n, m, grid = _coeff_grid(f)
    p = f.field.prime
    if p is not None and p <= max((2 * n - 1) * m, (2 * m - 1) * n):
        raise ParameterError("modulus too small for the factor-count criterion")
    fx = f.derivative(0)
    fy = f.derivative(1)
    g_cols = [(a, b) for a in range(n) for b in range(m + 1)]
    h_cols = [(a, b) for a in range(n + 1) for b in range(m)]
    columns: List[Dict[Tuple[int, int], int]] = []

    def shift_into(dst: Dict, src: Polynomial, da: int, db: int, scale: int) -> None:
        for e, c in src.terms:
            key = (e[0] + da, e[1] + db)
            v = dst.get(key, 0) + scale * c
            if p is not None:
                v %= p
            if v:
                dst[key] = v
            elif key in dst:
                del dst[key]

    for a, b in g_cols:
        col: Dict[Tuple[int, int], int] = {}
        if b:
            shift_into(col, f, a, b - 1, b)  # f * d/dy(x^a y^b)
        shift_into(col, fy, a, b, -1)  # -f_y * x^a y^b
        columns.append(col)
    for a, b in h_cols:
        col = {}
        if a:
            shift_into(col, f, a - 1, b, -a)  # -f * d/dx(x^a y^b)
        shift_into(col, fx, a, b, 1)  # f_x * x^a y^b
        columns.append(col)

    support = sorted({key for col in columns for key in col})
    row_index = {key: i for i, key in enumerate(support)}
    nrows = len(support)
    ncols = len(columns)
    if p is None:
        rows = [[0] * ncols for _ in range(nrows)]
        for j, col in enumerate(columns):
            for key, v in col.items():
                rows[row_index[key]][j] = v
        rank = qq_rank(rows)
    else:
        mat = np.zeros((nrows, ncols), dtype=np.int64)
        for j, col in enumerate(columns):
            for key, v in col.items():
                mat[row_index[key], j] = v
        rank = modp_rank(mat, p)
    return ncols - rank


def absolutely_irreducible_factor_count(f: Polynomial) -> int:
    """Number of absolutely irreducible factors of a squarefree bivariate
    polynomial; 1 certifies irreducibility over the algebraic closure."""
    if f.arity != 2:
        raise ParameterError("factor counting works on 2 variables")
    if f.is_zero or f.total_degree() == 0:
        raise ParameterError("factor counting needs positive degree")
    if not is_squarefree_bivariate(f):
        raise NotSquarefreeError("input has a repeated factor")
    p = f.field.prime
    n, m, _ = _coeff_grid(f)
    if m == 0 or n == 0:
        return f.total_degree()  # squarefree univariate: distinct linear factors
    count = 0
    cx = _content_in(f, 0)
    if _udeg(cx) > 0:
        count += _udeg(cx)
        f = _divide_out_univariate(f, cx, 0)
    cy = _content_in(f, 1)
    if _udeg(cy) > 0:
        count += _udeg(cy)
        f = _divide_out_univariate(f, cy, 1)
    n, m, _ = _coeff_grid(f)
    if n == 0 and m == 0:
        return count
    if n == 0 or m == 0:
        return count + f.total_degree()
    return count + _pde_kernel_dimension(f)


# ---------------------------------------------------------------------------
# plane projection of a space curve (irreducibility surrogate)
# ---------------------------------------------------------------------------


def _interpolate_1d(values: List[int], p: int) -> List[int]:
    """Newton interpolation at nodes 0..len(values)-1 over F_p."""
    k = len(values)
    coeffs = list(values)
    for j in range(1, k):
        inv = pow(j, p - 2, p)
        for i in range(k - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) * inv % p
    # expand Newton form into monomial coefficients
    poly = [0] * k
    acc = [1] + [0] * (k - 1)  # product (x)(x-1)... built incrementally
    for j in range(k):
        for i in range(j + 1):
            poly[i] = (poly[i] + coeffs[j] * acc[i]) % p
        if j + 1 < k:
            nxt = [0] * k
            for i in range(j + 1):
                nxt[i + 1] = (nxt[i + 1] + acc[i]) % p
                nxt[i] = (nxt[i] - acc[i] * j) % p
            acc = nxt
    return poly


def plane_projection_modp(
    gens: Sequence[Polynomial], p: int, seed: int, max_tries: int = 8
) -> Tuple[Polynomial, int]:
    """Equation of a generic plane projection of the curve cut by two
    trivariate polynomials, computed over F_p by a resultant on a grid.

    Returns the bivariate image equation and the number of coordinate
    changes tried.  Raises ParameterError when no tried change is generic.
    """
    if len(gens) != 2 or any(g.arity != 3 for g in gens):
        raise ParameterError("projection expects exactly two trivariate polynomials")
    gf = PrimeField(p)
    f1 = gens[0] if gens[0].field.prime == p else gens[0].to_prime_field(p)
    f2 = gens[1] if gens[1].field.prime == p else gens[1].to_prime_field(p)
    d1, d2 = f1.total_degree(), f2.total_degree()
    target = d1 * d2
    stream = SeededStream(seed)
    for attempt in range(1, max_tries + 1):
        mat = [[stream.next_nonzero(5) for _ in range(3)] for _ in range(3)]
        det = (
            mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1])
            - mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0])
            + mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0])
        )
        if det % p == 0:
            continue
        xs = [Polynomial.variable(i, 3, gf) for i in range(3)]
        images = [
            xs[0] * mat[i][0] + xs[1] * mat[i][1] + xs[2] * mat[i][2] for i in range(3)
        ]
        g1 = f1.compose(images)
        g2 = f2.compose(images)
        # the coefficient of s^deg must be a nonzero constant for the
        # specialized resultants to glue into the projection equation
        top1 = g1.coefficient((0, 0, d1))
        top2 = g2.coefficient((0, 0, d2))
        if not top1 or not top2:
            continue
        vals: List[List[int]] = []
        ok = True
        for u0 in range(target + 1):
            row = []
            for v0 in range(target + 1):
                a = _specialize_uv(g1, u0, v0, p)
                b = _specialize_uv(g2, u0, v0, p)
                row.append(uni_resultant(a, b, p))
            vals.append(row)
        # interpolate rows over u, then coefficients over v
        per_v = [_interpolate_1d([vals[i][j] for i in range(target + 1)], p) for j in range(target + 1)]
        items: Dict[Tuple[int, int], int] = {}
        for a in range(target + 1):
            col = [per_v[j][a] for j in range(target + 1)]
            cb = _interpolate_1d(col, p)
            for b, c in enumerate(cb):
                if c:
                    items[(a, b)] = c
        q = Polynomial.from_dict(2, items, gf)
        if q.total_degree() == target:
            return q, attempt
    raise ParameterError("no generic projection found")


def _specialize_uv(g: Polynomial, u0: int, v0: int, p: int) -> List[int]:
    out: List[int] = []
    for e, c in g.terms:
        v = c * pow(u0, e[0], p) % p * pow(v0, e[1], p) % p
        while len(out) <= e[2]:
            out.append(0)
        out[e[2]] = (out[e[2]] + v) % p
    return _trim(out)
