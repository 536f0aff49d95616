"""
Exact elimination over fields (Q, Q(zeta_N), Q(q)) and fraction-free
elimination over Z[q, 1/q].

Matrices are lists of rows.  Field entries only need +, -, *, / and a truthiness
test for nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .laurent import LaurentPoly


def rref(mat, ncols=None):
    """Reduced row echelon form.

    Returns (rows, pivots): the nonzero rows of the RREF, each with leading
    coefficient 1, and their pivot columns in increasing order.
    """
    rows = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in mat]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        p = None
        for i in range(r, nrows):
            if rows[i][col]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        inv = piv[col].inverse() if hasattr(piv[col], "inverse") else 1 / piv[col]
        if not _is_one(piv[col]):
            for j in range(col, ncols):
                if piv[j]:
                    piv[j] = piv[j] * inv
        nz = [j for j in range(col, ncols) if piv[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][col]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] = row[j] - f * piv[j]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def _is_one(x):
    if hasattr(x, "is_one"):
        return x.is_one()
    return x == 1


def kernel_from_rref(rows, pivots, ncols, zero, one):
    """Right kernel basis of an RREF matrix, itself brought to RREF."""
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(rows, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    if not basis:
        return []
    kern, _ = rref(basis, ncols)
    return kern


def exact_rank_and_kernel(mat, ncols=None, zero=None, one=None):
    """Rank and kernel basis (RREF, pivots left-to-right, leading 1)."""
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    if zero is None:
        sample = next((x for r in mat for x in r), None)
        if sample is None:
            zero, one = Fraction(0), Fraction(1)
        else:
            if isinstance(sample, int):
                sample = Fraction(sample)
            zero, one = sample * 0, sample * 0 + 1
    rows, pivots = rref(mat, ncols)
    return len(pivots), kernel_from_rref(rows, pivots, ncols, zero, one)


def matvec(mat, vec):
    out = []
    for row in mat:
        acc = None
        for a, b in zip(row, vec):
            if a and b:
                t = a * b
                acc = t if acc is None else acc + t
        out.append(acc if acc is not None else vec[0] * 0 if vec else 0)
    return out


# --- fraction-free elimination over Z[q, 1/q] ------------------------------

def _lp(x):
    return x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x)


def normalize_row(row):
    """Divide a Laurent row by its integer content and lowest common q-power."""
    nz = [x for x in row if x]
    if not nz:
        return row
    g = 0
    for x in nz:
        for c in x.terms.values():
            g = gcd(g, int(c))
    shift = min(x.low() for x in nz)
    lead = next(x for x in row if x)
    sign = -1 if lead.terms[lead.high()] < 0 else 1
    g *= sign
    if g == 1 and shift == 0:
        return row
    return [LaurentPoly({k - shift: c // g for k, c in x.terms.items()}) if x else x for x in row]


def bareiss_echelon(mat, ncols=None, normalize=False):
    """Fraction-free (Bareiss) row echelon form with column skipping.

    Returns (rows, pivots).  Every division by the previous pivot is exact.
    With ``normalize`` the surviving rows are divided by content and q-shift
    (this keeps the row space and rank but not the determinantal entries).
    """
    rows = [[_lp(x) for x in r] for r in mat]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    nrows = len(rows)
    prev = LaurentPoly.constant(1)
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        p = None
        best = None
        for i in range(r, nrows):
            x = rows[i][col]
            if x:
                size = len(x.terms)
                if best is None or size < best:
                    p, best = i, size
                    if size == 1:
                        break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][col]
        for i in range(r + 1, nrows):
            a = rows[i][col]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(col + 1, ncols):
                v = piv * row_i[j]
                if a and row_r[j]:
                    v = v - a * row_r[j]
                row_i[j] = v.exact_div(prev) if not prev.is_one() else v
            row_i[col] = LaurentPoly()
        prev = piv
        pivots.append(col)
        r += 1
    out = rows[:r]
    if normalize:
        out = [normalize_row(row) for row in out]
    return out, pivots


def generic_rank(mat, ncols=None) -> int:
    """Rank over Q(q) of a matrix of Laurent polynomials, by Bareiss elimination."""
    _, pivots = bareiss_echelon(mat, ncols)
    return len(pivots)


def laurent_row_basis(mat, ncols=None):
    """A row basis over Q(q) with entries kept in Z[q, 1/q].

    Uses elimination of the form row_i <- p*row_i - a*row_piv followed by
    content/shift normalization; not determinantal, but the row space is
    preserved and coefficient growth stays small.
    """
    rows = [normalize_row([_lp(x) for x in r]) for r in mat]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    nrows = len(rows)
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        p = None
        best = None
        for i in range(r, nrows):
            x = rows[i][col]
            if x:
                size = len(x.terms)
                if best is None or size < best:
                    p, best = i, size
                    if size == 1:
                        break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv_row = rows[r]
        piv = piv_row[col]
        for i in range(r + 1, nrows):
            a = rows[i][col]
            if not a:
                continue
            row_i = rows[i]
            for j in range(col + 1, ncols):
                v = piv * row_i[j] if row_i[j] else LaurentPoly()
                if piv_row[j]:
                    v = v - a * piv_row[j]
                row_i[j] = v
            row_i[col] = LaurentPoly()
            rows[i] = normalize_row(row_i)
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def specialize_matrix(mat, order, power=1):
    from .laurent import specialize
    return [[specialize(_lp(x), order, power) for x in row] for row in mat]
