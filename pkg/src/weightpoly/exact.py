"""Exact rational linear algebra and integer lattice utilities.

All arithmetic runs over Python ints and fractions.Fraction, so every result
is exact at arbitrary size.  Floats are rejected at the boundary; rationals
cross process boundaries as "p/q" (or "p") strings.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def frac(value: int | str | Fraction) -> Fraction:
    """Parse an exact rational from an int, Fraction, or "p/q" string."""
    if isinstance(value, bool):
        raise TypeError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        # Fraction("p/0") raises ZeroDivisionError, as required.
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r} (floats are not accepted)")


def frac_str(value: Fraction | int) -> str:
    return str(Fraction(value))


def vec(values: Sequence) -> Vec:
    return tuple(frac(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Sequence[Fraction]) -> Vec:
    return tuple(c * a for a in u)


def mat_vec(rows: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vec:
    return tuple(dot(row, x) for row in rows)


def transpose(rows: Sequence[Sequence]) -> tuple[tuple, ...]:
    return tuple(zip(*rows)) if rows else ()


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals, by exact Gaussian elimination."""
    work = [[frac(v) for v in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r][c]
        work[r] = [a / pv for a in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> tuple[str, Vec | None]:
    """Solve A x = b exactly.

    Returns ("unique", x), ("no solution", None), or ("underdetermined", None).
    """
    m = len(rows)
    if len(rhs) != m:
        raise ValueError("right-hand side length does not match row count")
    ncols = len(rows[0]) if m else 0
    aug = []
    for row, b in zip(rows, rhs):
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        aug.append([frac(v) for v in row] + [frac(b)])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [a / pv for a in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][ncols] != 0:
            return ("no solution", None)
    if len(pivots) < ncols:
        return ("underdetermined", None)
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return ("unique", tuple(x))


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[Vec]:
    """Basis of {x : A x = 0} over the rationals (reduced row echelon form)."""
    if ncols is None:
        if not rows:
            raise ValueError("nullspace of an empty matrix needs an explicit width")
        ncols = len(rows[0])
    work = [[frac(v) for v in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pv = work[r][c]
        work[r] = [a / pv for a in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -work[i][fc]
        basis.append(tuple(v))
    return basis


def mat_inverse(rows: Sequence[Sequence]) -> Mat:
    n = len(rows)
    aug = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("matrix is not square")
        aug.append([frac(v) for v in row] + [Fraction(int(i == j)) for j in range(n)])
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [a / pv for a in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def det_bareiss(rows: Sequence[Sequence]) -> Fraction:
    """Determinant via fraction-free (Bareiss) elimination.

    Rational input is cleared to integers row by row; the scaling is divided
    back out at the end, so the result is exact.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = 1
    m: list[list[int]] = []
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
        fr = [frac(v) for v in row]
        den = lcm(*(f.denominator for f in fr))
        scale *= den
        m.append([int(f * den) for f in fr])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], scale)


def primitive_vector(v: Sequence) -> tuple[int, ...]:
    """The primitive integer vector on the same ray (positive scaling only)."""
    fr = [frac(x) for x in v]
    if all(x == 0 for x in fr):
        raise ValueError("zero vector has no primitive representative")
    den = lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        ints = []
        for x in row:
            f = frac(x)
            if f.denominator != 1:
                raise ValueError("lattice data must be integral")
            ints.append(f.numerator)
        out.append(ints)
    return out


def hnf_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Row-style Hermite normal form.

    Pivots are positive, entries above each pivot are reduced into [0, pivot),
    zero rows are dropped.  Row operations are unimodular throughout.
    """
    m_rows = _int_rows(rows)
    if not m_rows:
        return []
    _int_row_echelon(m_rows, len(m_rows[0]))
    return [row for row in m_rows if any(row)]


def _int_row_echelon(work: list[list[int]], ncols: int) -> list[tuple[int, int]]:
    """In-place unimodular row reduction to HNF on the first ncols columns.

    Rows may be longer than ncols (carrying a transform block); full rows are
    swapped/combined.  Returns the (row, col) pivot positions.
    """
    m = len(work)
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, m) if work[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(work[i][c]))
            if i0 != r:
                work[r], work[i0] = work[i0], work[r]
            done = True
            for i in range(r + 1, m):
                if work[i][c] != 0:
                    q = work[i][c] // work[r][c]
                    if q:
                        work[i] = [a - q * b for a, b in zip(work[i], work[r])]
                    if work[i][c] != 0:
                        done = False
            if done:
                break
        if not nz:
            continue
        if work[r][c] < 0:
            work[r] = [-a for a in work[r]]
        for i in range(r):
            q = work[i][c] // work[r][c]
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    return pivots


def integer_kernel_basis(rows: Sequence[Sequence], width: int) -> list[tuple[int, ...]]:
    """Basis of the kernel lattice {x in Z^width : A x = 0} of an integer matrix."""
    a = _int_rows(rows)
    m = len(a)
    if m == 0:
        return [tuple(int(i == j) for j in range(width)) for i in range(width)]
    # Unimodular row reduction of [A^T | I]; transform rows opposite zero
    # echelon rows form a kernel lattice basis.
    aug = [[a[j][i] for j in range(m)] + [int(i == j) for j in range(width)]
           for i in range(width)]
    _int_row_echelon(aug, m)
    return [tuple(row[m:]) for row in aug if all(v == 0 for v in row[:m])]


def solve_integer(rows: Sequence[Sequence], rhs: Sequence) -> tuple[int, ...] | None:
    """One integer solution of A x = b (integer data), or None if none exists."""
    a = _int_rows(rows)
    b = [frac(v) for v in rhs]
    if any(x.denominator != 1 for x in b):
        return None
    bi = [int(x) for x in b]
    m = len(a)
    if m != len(bi):
        raise ValueError("right-hand side length does not match row count")
    if m == 0:
        return ()
    width = len(a[0])
    # Column-style HNF via the reduced transpose: V A^T = E with V unimodular,
    # so A (V^T) = E^T is column echelon; forward-substitute with divisibility.
    aug = [[a[j][i] for j in range(m)] + [int(i == j) for j in range(width)]
           for i in range(width)]
    pivots = _int_row_echelon(aug, m)
    y = [0] * width
    x = [0] * width
    for r, c in pivots:
        # Column r of the echelon matrix has its leading entry in row c of A.
        acc = sum(aug[k][c] * y[k] for k in range(r))
        num = bi[c] - acc
        if num % aug[r][c] != 0:
            return None
        y[r] = num // aug[r][c]
    for r, _ in pivots:
        if y[r]:
            for j in range(width):
                x[j] += y[r] * aug[r][m + j]
    for i in range(m):
        if sum(a[i][j] * x[j] for j in range(width)) != bi[i]:
            return None
    return tuple(x)


def lattice_index(rays: Sequence[Sequence], dim: int | None = None) -> int:
    """Index in Z^d of the sublattice generated by integer rays.

    For d independent rays this is |det|; with more generators the HNF pivot
    product is used.  Raises if the rays do not span rank d.
    """
    ints = _int_rows(rays)
    if dim is None:
        if not ints:
            raise ValueError("lattice_index of no rays needs an explicit dim")
        dim = len(ints[0])
    if dim == 0:
        return 1
    if len(ints) == dim:
        d = det_bareiss(ints)
        if d == 0:
            raise ValueError("rays are not full rank")
        return abs(int(d))
    h = hnf_rows(ints)
    if len(h) < dim:
        raise ValueError("rays are not full rank")
    prod = 1
    pivots = []
    for row in h:
        lead = next(j for j in range(len(row)) if row[j] != 0)
        pivots.append(lead)
        prod *= row[lead]
    if len(set(pivots)) < dim:
        raise ValueError("rays are not full rank")
    return abs(prod)


def floor_div(a: int, b: int) -> int:
    """floor(a/b) for positive b."""
    return a // b


def ceil_div(a: int, b: int) -> int:
    """ceil(a/b) for positive b."""
    return -((-a) // b)
