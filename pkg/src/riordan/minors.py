"""Exact leading principal minor sequences.

values[n] is the determinant of the leading (n+1) x (n+1) submatrix.  The
workhorse is a single fraction-free (Bareiss) elimination sweep over an
integer copy of the matrix: after k steps the next pivot equals the (k+1)-st
leading minor, so one O(N^3) pass yields the whole sequence.  Rational
entries are handled by scaling each row to integers and dividing each minor
by the accumulated row scales.

A zero pivot means that leading minor is genuinely zero.  The sweep then
swaps row and column k symmetrically with a later index whose diagonal entry
is nonzero; such a swap maps bordered minors to bordered minors, so the
elimination state stays a valid Bareiss state and the sweep continues.  Only
the block sizes strictly between the swapped indices see a different
"leading" submatrix afterwards, and those few minors are recomputed
independently (cofactor expansion up to 8 x 8, row-pivoted elimination
beyond).  When no symmetric pivot exists at all, every remaining minor is
computed independently.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .bivar import CoeffMatrix, DimensionError


class MinorSequence(list):
    """Leading principal minors; entry n is the (n+1) x (n+1) determinant."""

    def __repr__(self):
        return f"MinorSequence({list.__repr__(self)})"


def det_cofactor(rows) -> Fraction:
    """Determinant by cofactor expansion along the first row (test oracle)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        c = rows[0][j]
        if not c:
            continue
        sub = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * c * det_cofactor(sub)
    return total


def _det_int(rows) -> int:
    """Exact determinant of an integer matrix: Bareiss with row pivoting."""
    a = [row[:] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for t in range(k + 1, n):
                if a[t][k] != 0:
                    a[k], a[t] = a[t], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def _block_det_int(rows, m: int) -> int:
    block = [row[:m] for row in rows[:m]]
    if m <= 8:
        return int(det_cofactor([[Fraction(c) for c in row] for row in block]))
    return _det_int(block)


def _bareiss_minor_sweep(rows, count: int):
    """Integer minors of the leading blocks, from one elimination sweep."""
    a = [row[:count] for row in rows[:count]]
    minors = [0] * count
    fix = set()
    prev = 1
    for k in range(count):
        if a[k][k] == 0:
            minors[k] = 0
            t = next((i for i in range(k + 1, count) if a[i][i] != 0), None)
            if t is None:
                fix.update(range(k + 1, count))
                break
            a[k], a[t] = a[t], a[k]
            for row in a:
                row[k], row[t] = row[t], row[k]
            fix.update(range(k + 1, t))
        else:
            minors[k] = a[k][k]
        piv = a[k][k]
        for i in range(k + 1, count):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, count):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    for m in fix:
        minors[m] = _block_det_int(rows, m + 1)
    return minors


def principal_minors(M: CoeffMatrix, count: int) -> MinorSequence:
    """First `count` leading principal minors, exactly."""
    if count < 0 or count > M.n:
        raise DimensionError(f"requested {count} minors of a {M.n}x{M.n} matrix")
    scales = []
    int_rows = []
    for row in M.rows[:count]:
        mult = lcm(*(c.denominator for c in row[:count]))
        scales.append(mult)
        int_rows.append([int(c * mult) for c in row[:count]])
    raw = _bareiss_minor_sweep(int_rows, count)
    values = []
    scale_prod = 1
    for m in range(count):
        scale_prod *= scales[m]
        v = Fraction(raw[m], scale_prod)
        values.append(int(v) if v.denominator == 1 else v)
    return MinorSequence(values)


def det(M: CoeffMatrix):
    """Exact determinant of the whole matrix."""
    scale = 1
    int_rows = []
    for row in M.rows:
        mult = lcm(*(c.denominator for c in row))
        scale *= mult
        int_rows.append([int(c * mult) for c in row])
    v = Fraction(_det_int(int_rows), scale)
    return int(v) if v.denominator == 1 else v
