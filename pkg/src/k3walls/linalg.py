"""Exact linear algebra over the integers and rationals.

Everything in this module works on plain lists/tuples of ``int`` and
``fractions.Fraction``; there is no floating point anywhere.  Matrices are
lists of row lists.  These are the primitives the lattice layer is built on:
integer kernels (always saturated), rational Gaussian elimination, and the
inertia (signature) of a symmetric matrix by rational symmetric reduction.
"""

from fractions import Fraction
from math import gcd, isqrt


def vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x):
    return tuple(c * a for a in x)


def vec_is_zero(x):
    return all(a == 0 for a in x)


def vec_is_integral(x):
    return all(a == int(a) for a in x)


def normalize_number(q):
    """Return an ``int`` when ``q`` is an integer-valued rational, else ``q``."""
    if isinstance(q, Fraction):
        if q.denominator == 1:
            return int(q)
        return q
    return q


def normalize_vector(x):
    return tuple(normalize_number(Fraction(a)) for a in x)


def content(x):
    """gcd of the entries of an integer vector (0 for the zero vector)."""
    g = 0
    for a in x:
        g = gcd(g, int(a))
    return g


def primitive_part(x):
    """Divide an integer vector by its content; zero vector is returned as is."""
    g = content(x)
    if g == 0:
        return tuple(x)
    return tuple(int(a) // g for a in x)


def mat_mul_vec(m, x):
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in m)


def transpose(m):
    return [list(col) for col in zip(*m)]


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _euclid_sweep(rows, aux, col, start):
    """Zero out column ``col`` below ``start`` by integer row operations.

    Mirrors every operation on ``aux``.  Returns True when a nonzero pivot
    ended up at ``rows[start][col]``.
    """
    while True:
        pivot = None
        for r in range(start, len(rows)):
            if rows[r][col] != 0 and (pivot is None or abs(rows[r][col]) < abs(rows[pivot][col])):
                pivot = r
        if pivot is None:
            return False
        if pivot != start:
            rows[start], rows[pivot] = rows[pivot], rows[start]
            aux[start], aux[pivot] = aux[pivot], aux[start]
        done = True
        p = rows[start][col]
        for r in range(start + 1, len(rows)):
            if rows[r][col] != 0:
                q = rows[r][col] // p
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[start])]
                aux[r] = [a - q * b for a, b in zip(aux[r], aux[start])]
                if rows[r][col] != 0:
                    done = False
        if done:
            return True


def integer_kernel(a_rows, n_cols):
    """Basis of ``{x in Z^n : A x = 0}`` for an integer matrix ``A``.

    The basis is produced by unimodular row operations on ``[A^T | I]``, so it
    generates a saturated (primitive) sublattice of Z^n.  Rows of the result
    are the kernel vectors; the list is empty for a trivial kernel.
    """
    m = len(a_rows)
    t = [[int(a_rows[i][j]) for i in range(m)] for j in range(n_cols)]
    u = identity_matrix(n_cols)
    row = 0
    for col in range(m):
        if row >= n_cols:
            break
        if _euclid_sweep(t, u, col, row):
            row += 1
    basis = [tuple(u[r]) for r in range(row, n_cols) if all(v == 0 for v in t[r])]
    # Canonical sign/order so callers get deterministic output.
    basis = [sign_normalize(b) for b in basis]
    basis.sort()
    return basis


def sign_normalize(x):
    for a in x:
        if a != 0:
            return tuple(-v for v in x) if a < 0 else tuple(x)
    return tuple(x)


def solve_integer(a_rows, b):
    """One integer solution of ``A x = b``, or None when none exists.

    Row-reduces ``A^T`` with unimodular operations and forward-substitutes
    with divisibility checks.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    t = [[int(a_rows[i][j]) for i in range(m)] for j in range(n)]
    u = identity_matrix(n)
    row = 0
    pivots = []
    for col in range(m):
        if row >= n:
            break
        if _euclid_sweep(t, u, col, row):
            pivots.append((row, col))
            row += 1
    z = [0] * n
    residual = [int(v) for v in b]
    for rr, cc in pivots:
        piv = t[rr][cc]
        if residual[cc] % piv:
            return None
        q = residual[cc] // piv
        z[rr] = q
        for col in range(m):
            residual[col] -= q * t[rr][col]
    if any(residual):
        return None
    return tuple(sum(u[j][i] * z[j] for j in range(n)) for i in range(n))


def solve_rational(a_rows, b):
    """Solve ``A x = b`` exactly over Q; returns a tuple or None if unsolvable.

    ``A`` need not be square; when underdetermined one solution is returned
    (free variables set to 0).
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    mat = [[Fraction(a_rows[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    piv_cols = []
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, m):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        p = mat[row][col]
        mat[row] = [v / p for v in mat[row]]
        for r in range(m):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[row])]
        piv_cols.append(col)
        row += 1
    for r in range(row, m):
        if mat[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(piv_cols):
        x[col] = mat[r][n]
    return normalize_vector(x)


def invert_rational(a_rows):
    """Exact inverse of a nonsingular rational matrix, or None if singular."""
    n = len(a_rows)
    mat = [[Fraction(a_rows[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        sel = None
        for r in range(col, n):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            return None
        mat[col], mat[sel] = mat[sel], mat[col]
        p = mat[col][col]
        mat[col] = [v / p for v in mat[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[col])]
    return [row[n:] for row in mat]


def signature(gram):
    """Inertia ``(pos, neg, null)`` of a symmetric rational matrix.

    Rational symmetric Gaussian reduction; a zero diagonal with a nonzero
    off-diagonal entry is repaired by the standard row+column addition trick,
    which is valid in characteristic 0.
    """
    n = len(gram)
    a = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    pos = neg = null = 0
    for k in range(n):
        sel = None
        for i in range(k, n):
            if a[i][i] != 0:
                sel = i
                break
        if sel is None:
            off = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                null += n - k
                break
            i, j = off
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            sel = i
        if sel != k:
            a[k], a[sel] = a[sel], a[k]
            for r in range(n):
                a[r][k], a[r][sel] = a[r][sel], a[r][k]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / p
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
        # The matching column operations only clear the k-th row tail.
        for i in range(k + 1, n):
            a[k][i] = Fraction(0)
            a[i][k] = Fraction(0)
    return (pos, neg, null)


def ldlt(gram):
    """LDL^T of a positive definite symmetric rational matrix.

    Returns ``(diag, lower)`` with unit lower-triangular ``lower`` so that
    ``Q(x) = sum_i d_i (x_i + sum_{j>i} lower[j][i] x_j)^2``.  Raises
    ValueError when a non-positive pivot shows up.
    """
    n = len(gram)
    lower = [[Fraction(0)] * n for _ in range(n)]
    diag = [Fraction(0)] * n
    for i in range(n):
        d = Fraction(gram[i][i]) - sum(diag[k] * lower[i][k] * lower[i][k] for k in range(i))
        if d <= 0:
            raise ValueError("matrix is not positive definite")
        diag[i] = d
        lower[i][i] = Fraction(1)
        for j in range(i + 1, n):
            v = Fraction(gram[j][i]) - sum(diag[k] * lower[j][k] * lower[i][k] for k in range(i))
            lower[j][i] = v / d
    return diag, lower


def floor_sqrt_fraction(q):
    """floor(sqrt(q)) for a rational q >= 0."""
    if q < 0:
        raise ValueError("negative radicand")
    num, den = q.numerator, q.denominator
    return isqrt(num * den) // den


def short_vectors(gram, bound):
    """All integer x with 0 < x^T Q x <= bound for positive definite Q.

    Yields ``(x, norm)`` pairs; both x and -x appear, the zero vector does
    not.  Plain recursive bound propagation on the exact LDL^T factors; no
    basis reduction, which is unnecessary at the ranks this library targets.
    """
    n = len(gram)
    if n == 0 or bound < 0:
        return
    diag, lower = ldlt(gram)
    total = Fraction(bound)
    x = [0] * n
    centers = [Fraction(0)] * n

    def descend(i, remaining):
        c = centers[i]
        ratio = remaining / diag[i]
        # Over-approximate sqrt(ratio); candidates are filtered exactly below.
        s_up = Fraction(isqrt(ratio.numerator * ratio.denominator) + 1, ratio.denominator)
        lo_i = (-c - s_up).__ceil__()
        hi_i = (-c + s_up).__floor__()
        for xi in range(lo_i, hi_i + 1):
            term = diag[i] * (xi + c) ** 2
            if term > remaining:
                continue
            x[i] = xi
            if i == 0:
                if any(v != 0 for v in x):
                    yield tuple(x), total - (remaining - term)
            else:
                for k in range(i):
                    centers[k] += lower[i][k] * xi
                yield from descend(i - 1, remaining - term)
                for k in range(i):
                    centers[k] -= lower[i][k] * xi
        x[i] = 0

    yield from descend(n - 1, total)


def coset_vectors(gram, center, bound):
    """All integer x with ``Q(x + center) <= bound`` for positive definite Q.

    ``center`` may be rational.  Yields ``(x, value)`` pairs including, when
    the center is integral, the point ``x = -center``.  This is the shifted
    (closest-vector style) variant of :func:`short_vectors`.
    """
    n = len(gram)
    bound = Fraction(bound)
    if bound < 0:
        return
    if n == 0:
        yield (), Fraction(0)
        return
    diag, lower = ldlt(gram)
    shift = [Fraction(c) for c in center]
    base = [shift[i] + sum(lower[j][i] * shift[j] for j in range(i + 1, n))
            for i in range(n)]
    x = [0] * n
    centers = list(base)

    def descend(i, remaining):
        c = centers[i]
        ratio = remaining / diag[i]
        s_up = Fraction(isqrt(ratio.numerator * ratio.denominator) + 1, ratio.denominator)
        lo_i = (-c - s_up).__ceil__()
        hi_i = (-c + s_up).__floor__()
        for xi in range(lo_i, hi_i + 1):
            term = diag[i] * (xi + c) ** 2
            if term > remaining:
                continue
            x[i] = xi
            if i == 0:
                yield tuple(x), bound - (remaining - term)
            else:
                for k in range(i):
                    centers[k] += lower[i][k] * xi
                yield from descend(i - 1, remaining - term)
                for k in range(i):
                    centers[k] -= lower[i][k] * xi
        x[i] = 0

    yield from descend(n - 1, bound)
