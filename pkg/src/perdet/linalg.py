"""Exact linear algebra over Z and Z[q, 1/q].

Matrices are plain lists of row lists.  Nothing here ever rounds: the
determinant uses Bareiss elimination, the Pfaffian its skew-symmetric
analogue, and every division is checked for exactness.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .laurent import Laurent, RingElement, exact_div, is_unit, normalize

__all__ = [
    "Matrix",
    "shape",
    "identity",
    "transpose",
    "matmul",
    "det",
    "pfaffian",
    "det_interpolated",
    "pfaffian_interpolated",
    "pivot",
    "pivot_with_sign",
    "smith_normal_form",
    "nontrivial_factors",
    "gf2_affine_solve",
]

Matrix = List[List[RingElement]]


def shape(m: Sequence[Sequence]) -> Tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for r in m:
        if len(r) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = 0
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            out_row.append(normalize(s))
        out.append(out_row)
    return out


def _is_zero(x: RingElement) -> bool:
    return x == 0


def det(m: Matrix) -> RingElement:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n, c = shape(m)
    if n != c:
        raise ValueError(f"determinant of non-square {n}x{c} matrix")
    if n == 0:
        return 1
    a = [[normalize(x) for x in row] for row in m]
    sign = 1
    prev: RingElement = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        p = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                num = p * row_i[j] - aik * row_k[j]
                row_i[j] = exact_div(num, prev) if prev != 1 else normalize(num)
            row_i[k] = 0
        prev = p
    return normalize(sign * a[n - 1][n - 1])


def _check_antisymmetric(m: Matrix) -> int:
    n, c = shape(m)
    if n != c:
        raise ValueError("Pfaffian of non-square matrix")
    for i in range(n):
        if not _is_zero(m[i][i]):
            raise ValueError("matrix is not antisymmetric (nonzero diagonal)")
        for j in range(i + 1, n):
            if normalize(m[i][j] + m[j][i]) != 0:
                raise ValueError(f"matrix is not antisymmetric at ({i}, {j})")
    return n


def pfaffian(m: Matrix) -> RingElement:
    """Pfaffian by fraction-free skew elimination.

    Sign convention: the term of the row matching {(i1, j1), (i2, j2), ...}
    carries the sign of the permutation (i1 j1 i2 j2 ...) of (0 1 2 ...).
    Odd order gives 0.  ``pfaffian(m) ** 2 == det(m)``.
    """
    n = _check_antisymmetric(m)
    if n % 2:
        return 0
    if n == 0:
        return 1
    a = [[normalize(x) for x in row] for row in m]
    sign = 1
    prev: RingElement = 1
    for k in range(0, n, 2):
        k1 = k + 1
        if _is_zero(a[k][k1]):
            for j in range(k + 2, n):
                if not _is_zero(a[k][j]):
                    a[k1], a[j] = a[j], a[k1]
                    for row in a:
                        row[k1], row[j] = row[j], row[k1]
                    sign = -sign
                    break
            else:
                return 0
        p = a[k][k1]
        if k + 2 < n:
            for i in range(k + 2, n):
                ri = a[i]
                aik, aik1 = ri[k], ri[k1]
                for j in range(i + 1, n):
                    rj = a[j]
                    num = p * ri[j] + aik1 * rj[k] - aik * rj[k1]
                    val = exact_div(num, prev) if prev != 1 else normalize(num)
                    ri[j] = val
                    rj[i] = normalize(-val)
        prev = p
    return normalize(sign * prev)


# -- evaluation / interpolation ---------------------------------------------

def _exp_range(x: RingElement) -> Optional[Tuple[int, int]]:
    if isinstance(x, int):
        return None if x == 0 else (0, 0)
    if not x.coeffs:
        return None
    return x.low, x.high


def _substitute(x: RingElement, value: int, shift: int) -> int:
    """Integer value of ``q^shift * x`` at ``q = value`` (exponents must be >= 0)."""
    if isinstance(x, int):
        return x * value ** shift if x else 0
    total = 0
    for e, c in x.terms().items():
        total += c * value ** (e + shift)
    return total


def _interpolate(points: List[int], values: List[int]) -> List[int]:
    """Integer coefficients of the polynomial through ``(points, values)``."""
    n = len(points)
    coef = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - points[i]) + coef[i]
        new = [Fraction(0)] * n
        for d in range(n - 1):
            new[d + 1] += poly[d]
            new[d] -= points[i] * poly[d]
        new[0] += coef[i]
        poly = new
    out = []
    for c in poly:
        if c.denominator != 1:
            raise ArithmeticError("interpolated polynomial is not integral")
        out.append(int(c))
    return out


def _from_coeffs(coeffs: List[int], low: int) -> RingElement:
    return normalize(Laurent(low=low, coeffs=coeffs))


def det_interpolated(m: Matrix) -> RingElement:
    """Determinant of a Laurent-polynomial matrix by evaluation at integer points."""
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of non-square matrix")
    rshift, cshift = [0] * n, [0] * n
    for i in range(n):
        lows = [r[0] for r in map(_exp_range, m[i]) if r]
        rshift[i] = max(0, -min(lows)) if lows else 0
    for j in range(n):
        lows = [r[0] + rshift[i] for i in range(n) if (r := _exp_range(m[i][j]))]
        cshift[j] = max(0, -min(lows)) if lows else 0
    degree = 0
    for i in range(n):
        highs = [r[1] + rshift[i] + cshift[j] for j in range(n) if (r := _exp_range(m[i][j]))]
        if not highs:
            return 0
        degree += max(highs)
    points = list(range(degree + 1))
    values = []
    for x in points:
        num = [[_substitute(m[i][j], x, rshift[i] + cshift[j]) for j in range(n)] for i in range(n)]
        values.append(det(num))
    return _from_coeffs(_interpolate(points, values), -(sum(rshift) + sum(cshift)))


def pfaffian_interpolated(m: Matrix) -> RingElement:
    """Pfaffian of a Laurent-polynomial matrix by evaluation at integer points."""
    n = _check_antisymmetric(m)
    if n % 2:
        return 0
    shift = [0] * n
    top = [0] * n
    for i in range(n):
        rngs = [r for r in map(_exp_range, m[i]) if r]
        if not rngs:
            return 0
        shift[i] = max(0, -min(r[0] for r in rngs))
        top[i] = max(r[1] for r in rngs)
    # each term uses entry (i, j) once per matched pair; bound its exponent by
    # the average of the two row bounds
    degree = -(-sum(top[i] + 2 * shift[i] for i in range(n)) // 2)
    points = list(range(degree + 1))
    values = []
    for x in points:
        num = [[_substitute(m[i][j], x, shift[i] + shift[j]) for j in range(n)] for i in range(n)]
        values.append(pfaffian(num))
    return _from_coeffs(_interpolate(points, values), -sum(shift))


# -- pivoting ---------------------------------------------------------------

def pivot_with_sign(m: Matrix, r: int, c: int) -> Tuple[Matrix, int]:
    """Pivot on the unit entry ``m[r][c]`` (0-based).

    Returns ``(m', s)``: ``m'`` drops row ``r`` and column ``c`` and subtracts
    ``m[i][c] * m[r][j] / m[r][c]`` from the rest, and ``det(m) == s * det(m')``
    with ``s = (-1)**(r + c) * m[r][c]``.
    """
    n, k = shape(m)
    p = normalize(m[r][c])
    if not is_unit(p):
        raise ValueError(f"pivot entry {p} is not a unit")
    inv = normalize(p ** -1) if isinstance(p, Laurent) else p
    rows = [i for i in range(n) if i != r]
    cols = [j for j in range(k) if j != c]
    out = []
    for i in rows:
        vi = m[i][c]
        row = []
        for j in cols:
            x = m[i][j]
            if vi != 0 and m[r][j] != 0:
                x = x - vi * m[r][j] * inv
            row.append(normalize(x))
        out.append(row)
    sign = (-1) ** (r + c)
    return out, normalize(sign * p)


def pivot(m: Matrix, r: int, c: int) -> Matrix:
    """Pivot reduction; see :func:`pivot_with_sign` for the determinant factor."""
    return pivot_with_sign(m, r, c)[0]


# -- Smith normal form ------------------------------------------------------

def smith_normal_form(m: Matrix) -> List[int]:
    """Invariant factors ``d1 | d2 | ...`` of an integer matrix (min(rows, cols) of them)."""
    n, k = shape(m)
    a = []
    for row in m:
        new = []
        for x in row:
            x = normalize(x)
            if not isinstance(x, int):
                raise TypeError("Smith normal form needs integer entries")
            new.append(x)
        a.append(new)
    diag: List[int] = []
    t = 0
    while t < min(n, k):
        # smallest nonzero |entry| in the active block
        best = None
        for i in range(t, n):
            for j in range(t, k):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            diag.extend([0] * (min(n, k) - t))
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, k):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
                        break
            if not done:
                continue
            for j in range(t + 1, k):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        done = False
                        break
            if not done:
                continue
            # divisibility: p must divide the rest of the block
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, k):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                rt, rb = a[t], a[bad]
                for j in range(t, k):
                    rt[j] += rb[j]
                done = False
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def nontrivial_factors(factors: Sequence[int]) -> List[int]:
    """Drop the unit factors: the cokernel is the sum of Z/d over the rest."""
    return [d for d in factors if d != 1]


# -- GF(2) ------------------------------------------------------------------

def gf2_affine_solve(rows: Sequence[Sequence[int]], rhs: Sequence[int], ncols: Optional[int] = None,
                     free_values: Optional[Sequence[int]] = None):
    """Solve ``A x = b`` over GF(2).

    Returns ``(consistent, rank, dimension, solution)``.  ``dimension`` is
    ``ncols - rank``; ``solution`` is ``None`` when inconsistent.  Free
    variables take the values in ``free_values`` (default all zero), which is
    how callers pick a different member of the solution coset.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    packed = []
    for row, b in zip(rows, rhs):
        mask = 0
        for j, v in enumerate(row):
            if v & 1:
                mask |= 1 << j
        packed.append((mask, b & 1))
    return _gf2_solve_packed(packed, ncols, free_values)


def _gf2_solve_packed(packed, ncols, free_values=None):
    rank = 0
    work = list(packed)
    pivot_rows = []
    for col in range(ncols):
        bit = 1 << col
        found = None
        for idx in range(rank, len(work)):
            if work[idx][0] & bit:
                found = idx
                break
        if found is None:
            continue
        work[rank], work[found] = work[found], work[rank]
        pm, pb = work[rank]
        for idx in range(len(work)):
            if idx != rank and work[idx][0] & bit:
                m, b = work[idx]
                work[idx] = (m ^ pm, b ^ pb)
        pivot_rows.append(col)
        rank += 1
    for idx in range(rank, len(work)):
        if work[idx][0] == 0 and work[idx][1]:
            return False, rank, ncols - rank, None
    pivot_set = set(pivot_rows)
    x = [0] * ncols
    free = [j for j in range(ncols) if j not in pivot_set]
    if free_values is not None:
        for j, v in zip(free, free_values):
            x[j] = v & 1
    for idx, col in enumerate(pivot_rows):
        m, b = work[idx]
        val = b
        rest = m & ~(1 << col)
        j = 0
        while rest:
            if rest & 1:
                val ^= x[j]
            rest >>= 1
            j += 1
        x[col] = val
    return True, rank, ncols - rank, x
