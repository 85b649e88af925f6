"""Exact linear algebra over the rationals (dense, Fraction-based)."""

from __future__ import annotations

from fractions import Fraction


def _rref(rows, ncols):
    """Reduced row echelon form in place; returns pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(matrix, ncols=None):
    rows = [[Fraction(v) for v in row] for row in matrix if any(row)]
    if not rows:
        return 0
    n = ncols if ncols is not None else len(rows[0])
    return len(_rref(rows, n))


def nullspace(matrix, ncols):
    """Basis of the right kernel; each vector scaled to primitive integers."""
    rows = [[Fraction(v) for v in row] for row in matrix if any(row)]
    if not rows:
        return [_unit(ncols, j) for j in range(ncols)]
    pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(_primitive(v))
    return basis


def _unit(n, j):
    v = [Fraction(0)] * n
    v[j] = Fraction(1)
    return v


def _primitive(vec):
    import math

    lcm = 1
    for v in vec:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in vec]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        return [Fraction(0)] * len(vec)
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return [Fraction(v // g) for v in ints]


def solve(matrix, rhs):
    """One solution of A v = rhs over Q, or None when inconsistent."""
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0])
    pivots = _rref(rows, ncols + 1)
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = rows[r][ncols]
    return sol


def in_span(vectors, target):
    """Whether ``target`` lies in the rational span of ``vectors``."""
    if not any(target):
        return True
    if not vectors:
        return False
    cols = list(zip(*vectors))
    return solve([list(c) for c in cols], list(target)) is not None


def mat_mul_vec(m, v):
    return [sum(a * b for a, b in zip(row, v)) for row in m]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_inverse(m):
    """Inverse of a 3x3 rational matrix via the adjugate; None if singular."""
    (a, b, c), (d, e, f), (g, h, i) = [[Fraction(v) for v in row] for row in m]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if not det:
        return None
    adj = [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]
    return [[v / det for v in row] for row in adj]


def projectivity_from_frames(src, dst):
    """3x3 rational matrix sending four source points to four targets.

    Both quadruples must be projective frames (no three collinear in the
    usual applications; operationally, the scaling systems must be
    solvable).  Returns None when either quadruple is degenerate.
    """
    m_src = _frame_matrix(src)
    m_dst = _frame_matrix(dst)
    if m_src is None or m_dst is None:
        return None
    inv = mat_inverse(m_src)
    return mat_mul(m_dst, inv)


def _frame_matrix(points):
    """Matrix taking the standard frame e1, e2, e3, e1+e2+e3 to the points."""
    cols = [list(p.coords) for p in points[:3]]
    m = [[cols[j][i] for j in range(3)] for i in range(3)]
    inv = mat_inverse(m)
    if inv is None:
        return None
    lam = mat_mul_vec(inv, list(points[3].coords))
    if not all(lam):
        return None
    return [[m[i][j] * lam[j] for j in range(3)] for i in range(3)]
