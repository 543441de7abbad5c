"""Exact integer and rational linear algebra.

Everything here runs over Python's arbitrary-precision ``int`` and
``fractions.Fraction``; no floating point is used anywhere.  Vectors are
tuples of ints (or Fractions), matrices are tuples of row tuples.

The routines cover what the geometric layers need: exact solving,
determinants by fraction-free (Bareiss) elimination, Sylvester-style
negative-definiteness via leading principal minors, Smith normal form,
integer kernels in a canonical (column Hermite form) basis, and the
inertia of a symmetric form.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import NotSymmetricError, SingularMatrixError, ZeroVectorError

IntVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]
RatVector = tuple[Fraction, ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]


def as_vector(v) -> IntVector:
    return tuple(int(x) for x in v)


def as_matrix(rows) -> IntMatrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("matrix rows have unequal lengths")
    return out


def is_symmetric(a) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n)
    )


def vector_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v) -> IntVector:
    """v divided by the gcd of its entries.  Raises ZeroVectorError on 0."""
    v = as_vector(v)
    g = vector_gcd(v)
    if g == 0:
        raise ZeroVectorError("the zero vector has no primitive representative")
    return tuple(x // g for x in v)


def dot(u, v):
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum(x * y for x, y in zip(u, v))


def mat_vec(a, x):
    return tuple(dot(row, x) for row in a)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def solve_exact(a, b) -> RatVector:
    """Solve A x = b exactly over the rationals.

    A must be square and nonsingular; entries may be ints or Fractions.
    Raises SingularMatrixError when det(A) = 0.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if len(b) != n:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] / m[i][i] for i in range(n))


def solve_possibly_singular(a, b):
    """Solve A x = b allowing rectangular / singular systems.

    Returns (solution, unique) where free variables are set to 0, or None
    when the system is inconsistent.
    """
    rows, cols = len(a), (len(a[0]) if a else 0)
    if any(len(row) != cols for row in a):
        raise ValueError("matrix rows have unequal lengths")
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][col]
        for i in range(rows):
            if i != r and m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append((r, col))
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if m[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for row, col in pivots:
        x[col] = m[row][cols] / m[row][col]
    return tuple(x), len(pivots) == cols


def matrix_rank(a) -> int:
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    m = [[Fraction(x) for x in row] for row in a]
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, rows):
            if m[i][col] != 0:
                f = m[i][col] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def det_bareiss(a) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def leading_principal_minors(a) -> list[int]:
    return [det_bareiss([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def is_negative_definite(a) -> bool:
    """Sylvester test: (-1)^k * (k-th leading principal minor) > 0 for all k."""
    if not is_symmetric(a):
        raise NotSymmetricError("negative-definiteness test needs a symmetric matrix")
    for k, minor in enumerate(leading_principal_minors(a), start=1):
        if (-1) ** k * minor <= 0:
            return False
    return True


def smith_normal_form(a) -> list[int]:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    Only the nonzero factors are returned, so the zero matrix yields [].
    """
    rows = [list(r) for r in a]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    factors: list[int] = []
    t = 0
    while t < nr and t < nc:
        # locate a nonzero entry of smallest magnitude in the trailing block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = rows[i][j]
                if v != 0 and (best is None or abs(v) < abs(rows[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        rows[t], rows[bi] = rows[bi], rows[t]
        for row in rows:
            row[t], row[bj] = row[bj], row[t]
        while True:
            # clear the pivot column with unimodular row operations; plain
            # subtraction when the pivot divides keeps the pivot row clean,
            # and the gcd combination otherwise strictly shrinks the pivot
            for i in range(t + 1, nr):
                b = rows[i][t]
                if b == 0:
                    continue
                p = rows[t][t]
                if b % p == 0:
                    q = b // p
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[t])]
                else:
                    g, x, y = xgcd(p, b)
                    u, v = p // g, b // g
                    rt, ri = rows[t], rows[i]
                    for j in range(nc):
                        rt[j], ri[j] = x * rt[j] + y * ri[j], -v * rt[j] + u * ri[j]
            # clear the pivot row with unimodular column operations
            for j in range(t + 1, nc):
                b = rows[t][j]
                if b == 0:
                    continue
                p = rows[t][t]
                if b % p == 0:
                    q = b // p
                    for row in rows:
                        row[j] -= q * row[t]
                else:
                    g, x, y = xgcd(p, b)
                    u, v = p // g, b // g
                    for row in rows:
                        row[t], row[j] = x * row[t] + y * row[j], -v * row[t] + u * row[j]
            if all(rows[i][t] == 0 for i in range(t + 1, nr)):
                # pivot must divide the whole trailing block
                offender = None
                piv = rows[t][t]
                for i in range(t + 1, nr):
                    for j in range(t + 1, nc):
                        if rows[i][j] % piv != 0:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                for j in range(nc):
                    rows[t][j] += rows[offender][j]
        factors.append(abs(rows[t][t]))
        t += 1
    # enforce the divisibility chain
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if factors[j] % factors[i] != 0:
                g = gcd(factors[i], factors[j])
                factors[i], factors[j] = g, factors[i] * factors[j] // g
    return factors


def _combine_columns(cols, j0, j, row):
    """Unimodular combination putting gcd at (row, j0) and 0 at (row, j)."""
    a, b = cols[j0][row], cols[j][row]
    g, x, y = xgcd(a, b)
    u, v = a // g, b // g
    c0, c1 = cols[j0], cols[j]
    for k in range(len(c0)):
        c0[k], c1[k] = x * c0[k] + y * c1[k], -v * c0[k] + u * c1[k]


def column_hermite_form(columns) -> list[IntVector]:
    """Canonical column Hermite form of an independent set of columns.

    Pivot rows strictly increase left to right, pivots are positive, and in
    each pivot row the entries of earlier columns are reduced into
    [0, pivot).  The result depends only on the lattice the columns span.
    """
    cols = [list(c) for c in columns]
    if not cols:
        return []
    nrows = len(cols[0])
    c = 0
    for row in range(nrows):
        if c >= len(cols):
            break
        nz = [j for j in range(c, len(cols)) if cols[j][row] != 0]
        if not nz:
            continue
        j0 = nz[0]
        for j in nz[1:]:
            _combine_columns(cols, j0, j, row)
        cols[c], cols[j0] = cols[j0], cols[c]
        if cols[c][row] < 0:
            cols[c] = [-x for x in cols[c]]
        piv = cols[c][row]
        for j in range(c):
            q = cols[j][row] // piv
            if q:
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[c])]
        c += 1
    return [tuple(col) for col in cols]


def integer_kernel(a) -> list[IntVector]:
    """Basis of { x in Z^n : A x = 0 }, in canonical column Hermite form."""
    nr = len(a)
    nc = len(a[0]) if nr else 0
    work = [[a[i][j] for i in range(nr)] for j in range(nc)]  # columns of A
    trans = [[1 if i == j else 0 for i in range(nc)] for j in range(nc)]
    r = 0
    for row in range(nr):
        nz = [j for j in range(r, nc) if work[j][row] != 0]
        if not nz:
            continue
        j0 = nz[0]
        for j in nz[1:]:
            aj0, aj = work[j0][row], work[j][row]
            g, x, y = xgcd(aj0, aj)
            u, v = aj0 // g, aj // g
            w0, w1 = work[j0], work[j]
            t0, t1 = trans[j0], trans[j]
            for k in range(nr):
                w0[k], w1[k] = x * w0[k] + y * w1[k], -v * w0[k] + u * w1[k]
            for k in range(nc):
                t0[k], t1[k] = x * t0[k] + y * t1[k], -v * t0[k] + u * t1[k]
        work[r], work[j0] = work[j0], work[r]
        trans[r], trans[j0] = trans[j0], trans[r]
        r += 1
        if r == nc:
            break
    kernel = [tuple(trans[j]) for j in range(r, nc)]
    return column_hermite_form(kernel)


def coordinates_in_basis(columns, v) -> IntVector:
    """Integer coordinates of v in an echelon (column Hermite form) basis.

    Raises ValueError when v is not in the lattice the columns span.
    """
    work = list(v)
    coeffs = []
    for col in columns:
        pivot_row = next((i for i, x in enumerate(col) if x != 0), None)
        if pivot_row is None:
            raise ValueError("zero column in basis")
        q, rem = divmod(work[pivot_row], col[pivot_row])
        if rem != 0:
            raise ValueError("vector is not in the lattice spanned by the basis")
        coeffs.append(q)
        work = [w - q * c for w, c in zip(work, col)]
    if any(w != 0 for w in work):
        raise ValueError("vector is not in the lattice spanned by the basis")
    return tuple(coeffs)


def inertia(a) -> tuple[int, int, int]:
    """Signature (n_plus, n_minus, n_zero) of a symmetric matrix.

    Computed by exact symmetric congruence reduction over the rationals.
    """
    if not is_symmetric(a):
        raise NotSymmetricError("inertia needs a symmetric matrix")
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    remaining = list(range(n))
    pos = neg = zero = 0
    while remaining:
        piv = next((i for i in remaining if m[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in remaining for j in remaining if i < j and m[i][j] != 0),
                None,
            )
            if pair is None:
                zero += len(remaining)
                break
            i, j = pair
            # congruence: add row/col j to row/col i, making m[i][i] = 2 m[i][j]
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        others = [k for k in remaining if k != piv]
        for i in others:
            f = m[i][piv] / d
            if f:
                for j in others:
                    m[i][j] -= f * m[piv][j]
                m[i][piv] = Fraction(0)
        for j in others:
            m[piv][j] = Fraction(0)
        remaining.remove(piv)
    return pos, neg, zero


def cross_normal(rows, dim) -> IntVector:
    """Generalized cross product: an integer normal to dim-1 row vectors."""
    if len(rows) != dim - 1:
        raise ValueError("need exactly dim-1 vectors")
    normal = []
    for i in range(dim):
        minor = [[row[j] for j in range(dim) if j != i] for row in rows]
        normal.append((-1) ** i * det_bareiss(minor))
    return tuple(normal)


def ceil_sqrt(value: Fraction) -> int:
    """Smallest nonnegative integer n with n*n >= value."""
    if value <= 0:
        return 0
    from math import isqrt

    n = isqrt(value.numerator // value.denominator)
    while n * n < value:
        n += 1
    return n
