"""Dense univariate polynomial helpers over exact rationals and integers.

Coefficient lists are ordered by ascending exponent (``c[i]`` multiplies
``x**i``) and carry no trailing zeros; the zero polynomial is ``[]``.
These are internal building blocks for the trivariate layer: modular gcd
interpolation, Sylvester resultants, and rational root extraction.
"""

from __future__ import annotations

import math
from fractions import Fraction


def trim(c):
    """Strip trailing zero coefficients."""
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return list(c[:n])


def degree(c):
    """Degree, with the zero polynomial mapped to -1."""
    return len(c) - 1


def add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] += v
    return trim(out)


def neg(a):
    return [-v for v in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, s):
    if not s:
        return []
    return [v * s for v in a]


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, va in enumerate(a):
        if not va:
            continue
        for j, vb in enumerate(b):
            if vb:
                out[i + j] += va * vb
    return trim(out)


def pow_(a, n):
    out = [1]
    base = list(a)
    while n:
        if n & 1:
            out = mul(out, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return out


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def derivative(a):
    return trim([i * a[i] for i in range(1, len(a))])


def divmod_q(a, b):
    """Quotient and remainder over the rationals."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = [Fraction(v) for v in a]
    lb = Fraction(b[-1])
    db = degree(b)
    q = [Fraction(0)] * max(len(a) - db, 0)
    r = list(a)
    while degree(r) >= db:
        k = degree(r) - db
        c = r[-1] / lb
        q[k] = c
        for i in range(db + 1):
            r[i + k] -= c * Fraction(b[i])
        r = trim(r)
    return trim(q), r


def content_int(a):
    g = 0
    for v in a:
        g = math.gcd(g, v if v >= 0 else -v)
    return g


def primitive_int(a):
    """Primitive part of an integer polynomial, positive leading coefficient."""
    a = trim(a)
    if not a:
        return []
    g = content_int(a)
    if a[-1] < 0:
        g = -g
    return [v // g for v in a]


def clear_denominators(a):
    """Integer polynomial proportional to ``a``; scalar is discarded."""
    a = trim(a)
    if not a:
        return []
    lcm = 1
    for v in a:
        d = Fraction(v).denominator
        lcm = lcm * d // math.gcd(lcm, d)
    return primitive_int([int(Fraction(v) * lcm) for v in a])


def _pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a mod b."""
    da, db = degree(a), degree(b)
    lb = b[-1]
    r = list(a)
    for _ in range(da - db + 1):
        dr = degree(r)
        if dr < db:
            r = [v * lb for v in r]
            continue
        lr = r[-1]
        r = [v * lb for v in r]
        k = dr - db
        for i in range(db + 1):
            r[i + k] -= lr * b[i]
        r = trim(r)
    return r


def gcd_q(a, b):
    """Gcd over the rationals, returned as a primitive integer polynomial.

    Primitive-PRS Euclid on integer clearings; keeps coefficient growth
    polynomial instead of the exponential blow-up of naive remainders.
    """
    a = clear_denominators(a)
    b = clear_denominators(b)
    if not a:
        return b
    if not b:
        return a
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, primitive_int(r)
    return primitive_int(a)


def squarefree_part(a):
    a = clear_denominators(a)
    if degree(a) <= 0:
        return a
    g = gcd_q(a, derivative(a))
    if degree(g) <= 0:
        return a
    q, r = divmod_q(a, g)
    assert not r
    return clear_denominators(q)


def interpolate(points):
    """Newton interpolation through exact (x, y) pairs with distinct x."""
    xs = [Fraction(x) for x, _ in points]
    coeffs = [Fraction(y) for _, y in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    poly = []
    for i in reversed(range(n)):
        poly = add(mul(poly, [-xs[i], Fraction(1)]), [coeffs[i]])
    return trim(poly)


def sylvester_resultant(a, b):
    """Resultant of two univariate polynomials with exact coefficients.

    Fraction-free Bareiss elimination on the Sylvester matrix; exact value
    including sign and scalar.
    """
    a, b = trim(a), trim(b)
    if not a or not b:
        return Fraction(0)
    da, db = degree(a), degree(b)
    if da == 0:
        return Fraction(a[0]) ** db
    if db == 0:
        return Fraction(b[0]) ** da
    n = da + db
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(db):
        for j, v in enumerate(reversed(a)):
            m[i][i + j] = Fraction(v)
    for i in range(da):
        for j, v in enumerate(reversed(b)):
            m[db + i][i + j] = Fraction(v)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


_ROOT_PRIMES = (10007, 10009, 10037, 10039, 10061, 10067, 10079, 10091)


def _gcd_mod(a, b, p):
    a = [v % p for v in a]
    b = [v % p for v in b]
    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        db = len(b) - 1
        r = list(a)
        while len(r) - 1 >= db and r:
            c = r[-1] * inv % p
            k = len(r) - 1 - db
            for i in range(db + 1):
                r[i + k] = (r[i + k] - c * b[i]) % p
            r = trim(r)
        a, b = b, r
    return a


def _rational_reconstruct(r, m):
    """(num, den) with num/den == r mod m and |num|, den <= sqrt(m/2)."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, r % m
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    if math.gcd(r1, t1) != 1:
        return None
    return r1, t1


def rational_roots(a):
    """All rational roots of an integer polynomial, without multiplicity.

    Roots are found modulo a small prime, Hensel-lifted, reconstructed and
    then verified exactly, so huge coefficients never force a divisor
    enumeration.
    """
    a = clear_denominators(a)
    if not a:
        raise ValueError("zero polynomial has every root")
    roots = []
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        a = a[k:]
    if degree(a) == 0:
        return roots
    a = squarefree_part(a)
    if degree(a) == 1:
        r = Fraction(-a[0], a[1])
        if r != 0:
            roots.append(r)
        return sorted(set(roots))
    bound = max(abs(a[0]), abs(a[-1]))
    target = 2 * bound * bound + 1
    da = derivative(a)
    for p in _ROOT_PRIMES:
        if a[-1] % p == 0:
            continue
        if degree(_gcd_mod(a, da, p)) != 0:
            continue
        residues = [r for r in range(p) if evaluate(a, r) % p == 0]
        break
    else:
        raise ArithmeticError("no usable prime for root lifting")
    for r in residues:
        modulus = p
        x = r
        while modulus < target:
            modulus = modulus * modulus
            fx = evaluate(a, x) % modulus
            dfx = evaluate(da, x) % modulus
            x = (x - fx * pow(dfx, -1, modulus)) % modulus
        rec = _rational_reconstruct(x, modulus)
        if rec is None:
            continue
        num, den = rec
        cand = Fraction(num, den)
        if evaluate(a, cand) == 0:
            roots.append(cand)
    return sorted(set(roots))
