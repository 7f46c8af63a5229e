"""Exact integer and rational linear algebra on small dense matrices.

Vectors are tuples of Python ints, matrices are sequences of row vectors.
Everything is exact arbitrary-precision arithmetic; there is no floating
point anywhere in this module.
"""

from fractions import Fraction
from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries.

    The zero vector is returned unchanged.
    """
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_vec(A, v):
    return tuple(dot(row, v) for row in A)


def mat_mul(A, B):
    Bt = list(zip(*B))
    return [[dot(row, col) for col in Bt] for row in A]


def det(A):
    """Exact determinant of a square integer matrix (Bareiss elimination).

    The 0x0 matrix has determinant 1.
    """
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_rank(rows):
    """Rank of a matrix with integer or Fraction entries."""
    M = [[Fraction(x) for x in row] for row in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(M)):
            if M[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        pr = M[rank]
        inv = 1 / pr[col]
        M[rank] = [x * inv for x in pr]
        for r in range(len(M)):
            if r != rank and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
        if rank == len(M):
            break
    return rank


def integer_rank(rows):
    """Rank of an integer matrix by fraction-free forward elimination.

    Rows are combined by cross-multiplication and re-divided by their gcd,
    so all intermediate values stay integers of moderate size. Same result
    as rational_rank, much faster on the larger multiplication-map
    matrices.
    """
    M = [list(row) for row in rows if any(row)]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(M)):
            if M[r][col] != 0 and (pivot is None or abs(M[r][col]) < abs(M[pivot][col])):
                pivot = r
                if abs(M[r][col]) == 1:
                    break
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        prow = M[rank]
        p = prow[col]
        for r in range(rank + 1, len(M)):
            f = M[r][col]
            if f == 0:
                continue
            row = [p * a - f * b for a, b in zip(M[r], prow)]
            g = 0
            for x in row:
                g = gcd(g, x)
            if g > 1:
                row = [x // g for x in row]
            M[r] = row
        rank += 1
        if rank == len(M) or rank == ncols:
            break
    return rank


def kernel_primitive_vector(rows, n):
    """Primitive integer spanning vector of a one-dimensional kernel.

    Args:
      rows: integer row vectors of length n (possibly none).
      n: ambient dimension.

    Returns:
      A primitive integer n-vector spanning ker(rows) if that kernel is
      exactly one-dimensional, else None. The sign is normalized so the
      first nonzero entry is positive.
    """
    M = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, len(M)):
            if M[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = 1 / M[rank][col]
        M[rank] = [x * inv for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        pivots.append(col)
        rank += 1
    if n - rank != 1:
        return None
    free = next(c for c in range(n) if c not in pivots)
    sol = [Fraction(0)] * n
    sol[free] = Fraction(1)
    for r, col in enumerate(pivots):
        sol[col] = -M[r][free]
    denom = 1
    for x in sol:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    vec = tuple(int(x * denom) for x in sol)
    vec = primitive(vec)
    for x in vec:
        if x != 0:
            return vec if x > 0 else tuple(-y for y in vec)
    return None


def row_hnf(A):
    """Row-style Hermite normal form.

    The unique representative of the orbit of A under left multiplication
    by unimodular matrices: row echelon, positive pivots, entries above a
    pivot reduced into [0, pivot).
    """
    H = [list(row) for row in A]
    m = len(H)
    n = len(H[0]) if m else 0
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        # Euclid on the entries of this column at or below pivot_row.
        while True:
            nonzero = [r for r in range(pivot_row, m) if H[r][col] != 0]
            if not nonzero:
                break
            r0 = min(nonzero, key=lambda r: abs(H[r][col]))
            H[pivot_row], H[r0] = H[r0], H[pivot_row]
            if len(nonzero) == 1:
                break
            p = H[pivot_row][col]
            for r in range(pivot_row + 1, m):
                if H[r][col] != 0:
                    q = H[r][col] // p
                    H[r] = [a - q * b for a, b in zip(H[r], H[pivot_row])]
        if H[pivot_row][col] == 0:
            continue
        if H[pivot_row][col] < 0:
            H[pivot_row] = [-x for x in H[pivot_row]]
        p = H[pivot_row][col]
        for r in range(pivot_row):
            q = H[r][col] // p
            if q:
                H[r] = [a - q * b for a, b in zip(H[r], H[pivot_row])]
        pivot_row += 1
    return tuple(tuple(row) for row in H)


def column_hnf(A):
    """Column-style Hermite normal form (canonical under column operations)."""
    return tuple(tuple(col) for col in zip(*row_hnf(list(zip(*A)))))


def saturated_span_basis(rows, n):
    """Basis of the saturation of the row span of an integer matrix.

    Returns a list of r integer n-vectors (r = rank) that form a lattice
    basis of span_Q(rows) intersected with Z^n. Implemented by integer
    diagonalization while tracking the inverse of the column transform;
    the first r rows of that inverse are part of a basis of Z^n and span
    the saturated lattice.
    """
    M = [list(row) for row in rows]
    m = len(M)
    vinv = identity(n)
    t = 0
    while t < min(m, n):
        # locate the nonzero entry of smallest magnitude in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] != 0 and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            M[t], M[bi] = M[bi], M[t]
        if bj != t:
            for row in M:
                row[t], row[bj] = row[bj], row[t]
            vinv[t], vinv[bj] = vinv[bj], vinv[t]
        while True:
            dirty = False
            for i in range(t + 1, m):
                if M[i][t] != 0:
                    q = M[i][t] // M[t][t]
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    if M[i][t] != 0:
                        M[t], M[i] = M[i], M[t]
                        dirty = True
            for j in range(t + 1, n):
                if M[t][j] != 0:
                    q = M[t][j] // M[t][t]
                    for row in M:
                        row[j] -= q * row[t]
                    # column op col_j -= q*col_t  <=>  vinv row_t += q*row_j
                    vinv[t] = [a + q * b for a, b in zip(vinv[t], vinv[j])]
                    if M[t][j] != 0:
                        for row in M:
                            row[t], row[j] = row[j], row[t]
                        vinv[t], vinv[j] = vinv[j], vinv[t]
                        dirty = True
            if not dirty:
                break
        t += 1
    rank = sum(1 for i in range(min(m, n)) if i < len(M) and M[i][i] != 0)
    return [tuple(vinv[i]) for i in range(rank)]


def solve_integer_combination(basis, target):
    """Solve c * basis = target for an integer coefficient vector c.

    Args:
      basis: r linearly independent integer n-vectors.
      target: integer n-vector inside the lattice they span.

    Returns:
      Tuple of r ints. Raises ValueError if the system is inconsistent or
      the solution is not integral.
    """
    r = len(basis)
    n = len(target)
    # augmented system basis^T * c = target^T solved over Q
    M = [[Fraction(basis[j][i]) for j in range(r)] + [Fraction(target[i])] for i in range(n)]
    pivots = []
    rank = 0
    for col in range(r):
        pivot = None
        for row in range(rank, n):
            if M[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        inv = 1 / M[rank][col]
        M[rank] = [x * inv for x in M[rank]]
        for row in range(n):
            if row != rank and M[row][col] != 0:
                f = M[row][col]
                M[row] = [a - f * b for a, b in zip(M[row], M[rank])]
        pivots.append(col)
        rank += 1
    if rank != r:
        raise ValueError("basis rows are linearly dependent")
    for row in range(rank, n):
        if M[row][r] != 0:
            raise ValueError("target is outside the spanned subspace")
    sol = [Fraction(0)] * r
    for row, col in enumerate(pivots):
        sol[col] = M[row][r]
    if any(x.denominator != 1 for x in sol):
        raise ValueError("target is not in the integer lattice of the basis")
    return tuple(int(x) for x in sol)
