"""Sparse bivariate polynomials as dicts (i, j) -> coefficient.

Exponent key (i, j) means x^i * y^j.  Used two ways: as the affine chart
of the homogeneous trivariate layer (gcd computation) and as the carrier
for affine birational maps of the plane.  Coefficients are ints or
Fractions; operations are exact.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import _univariate as uni
from .errors import NotDivisible


class UnluckyPoints(Exception):
    """Evaluation points collided with a vanishing locus; caller retries."""


ZERO = {}


def const(c):
    c = Fraction(c)
    return {(0, 0): c} if c else {}


def variable(name):
    return {(1, 0) if name == "x" else (0, 1): Fraction(1)}


def is_zero(a):
    return not a


def total_degree(a):
    return max((i + j for i, j in a), default=-1)


def add(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def neg(a):
    return {m: -c for m, c in a.items()}


def sub(a, b):
    return add(a, neg(b))


def scale(a, s):
    if not s:
        return {}
    return {m: c * s for m, c in a.items()}


def mul(a, b):
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    out = {}
    for (ax, ay), ca in a.items():
        for (bx, by), cb in b.items():
            m = (ax + bx, ay + by)
            s = out.get(m, 0) + ca * cb
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def pow_(a, n):
    out = const(1)
    base = a
    while n:
        if n & 1:
            out = mul(out, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return out


def evaluate(a, x, y):
    acc = Fraction(0)
    for (i, j), c in a.items():
        acc += Fraction(c) * Fraction(x) ** i * Fraction(y) ** j
    return acc


def _key(m):
    return (m[0] + m[1], m)


def exact_div(a, b):
    """Exact quotient under the graded-lex order, or NotDivisible."""
    if not b:
        raise ZeroDivisionError("bivariate division by zero")
    if not a:
        return {}
    lead_b = max(b, key=_key)
    cb = Fraction(b[lead_b])
    rem = {m: Fraction(c) for m, c in a.items()}
    quot = {}
    while rem:
        lead_r = max(rem, key=_key)
        e = (lead_r[0] - lead_b[0], lead_r[1] - lead_b[1])
        if e[0] < 0 or e[1] < 0:
            raise NotDivisible("bivariate leading term not divisible")
        c = rem[lead_r] / cb
        quot[e] = c
        for m, cm in b.items():
            mm = (m[0] + e[0], m[1] + e[1])
            s = rem.get(mm, Fraction(0)) - c * Fraction(cm)
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return quot


def divides(b, a):
    try:
        exact_div(a, b)
        return True
    except NotDivisible:
        return False


def primitive(a):
    """Integer-primitive representative with positive graded-lex leading."""
    if not a:
        return {}
    lcm = 1
    for c in a.values():
        d = Fraction(c).denominator
        lcm = lcm * d // math.gcd(lcm, d)
    ints = {m: int(Fraction(c) * lcm) for m, c in a.items()}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    if ints[max(ints, key=_key)] < 0:
        g = -g
    return {m: v // g for m, v in ints.items()}


# -- Brown-style gcd ----------------------------------------------------------


def _as_x_coeffs(biv):
    dx = max(i for (i, _j) in biv)
    cols = [[] for _ in range(dx + 1)]
    for (i, j), c in biv.items():
        col = cols[i]
        if len(col) <= j:
            col.extend([0] * (j + 1 - len(col)))
        col[j] = c
    return [uni.trim(c) for c in cols]


def _from_x_coeffs(cols):
    out = {}
    for i, col in enumerate(cols):
        for j, c in enumerate(col):
            if c:
                out[(i, j)] = c
    return out


def _content_y(cols):
    g = []
    for col in cols:
        if col:
            g = uni.gcd_q(g, col) if g else uni.clear_denominators(col)
            if uni.degree(g) == 0:
                return [1]
    return g if g else [1]


def _divide_cols(cols, d):
    out = []
    for col in cols:
        if not col:
            out.append([])
            continue
        q, r = uni.divmod_q(col, d)
        if r:
            raise UnluckyPoints
        out.append(q)
    return out


def _eval_cols(cols, t):
    return uni.trim([uni.evaluate(col, t) for col in cols])


def _gcd_attempt(pa, pb, rng):
    ca = _as_x_coeffs(pa)
    cb = _as_x_coeffs(pb)
    cont_a = _content_y(ca)
    cont_b = _content_y(cb)
    cont_g = uni.gcd_q(cont_a, cont_b)
    ppa = _divide_cols(ca, cont_a)
    ppb = _divide_cols(cb, cont_b)
    if len(ppa) - 1 < len(ppb) - 1:
        ppa, ppb = ppb, ppa
    if len(ppb) == 1:
        return {(0, j): c for j, c in enumerate(cont_g) if c}
    gamma = uni.gcd_q(ppa[-1], ppb[-1])
    ybound = uni.degree(gamma) + max(
        0,
        min(
            max((uni.degree(c) for c in ppa), default=0),
            max((uni.degree(c) for c in ppb), default=0),
        ),
    )
    npoints = ybound + 1
    dmin = None
    samples = []
    tried = set()
    budget = 8 * npoints + 32
    while len(samples) < npoints and budget:
        budget -= 1
        t = rng.randint(-(4 * npoints + 8), 4 * npoints + 8)
        if t in tried:
            continue
        tried.add(t)
        if not uni.evaluate(ppa[-1], t) or not uni.evaluate(ppb[-1], t):
            continue
        fa = _eval_cols(ppa, t)
        fb = _eval_cols(ppb, t)
        g = uni.gcd_q(fa, fb)
        d = uni.degree(g)
        if dmin is None or d < dmin:
            dmin = d
            samples = []
        if d == dmin:
            monic = [Fraction(v, g[-1]) for v in g]
            s = uni.evaluate(gamma, t)
            samples.append((t, [s * v for v in monic]))
    if dmin is None or not budget:
        raise UnluckyPoints
    if dmin == 0:
        return {(0, j): c for j, c in enumerate(cont_g) if c}
    cols = []
    for k in range(dmin + 1):
        pts = [(t, img[k] if k < len(img) else Fraction(0)) for t, img in samples]
        cols.append(uni.interpolate(pts))
    cont = _content_y(cols)
    cols = _divide_cols(cols, cont)
    return _from_x_coeffs([uni.mul(c, cont_g) if c else [] for c in cols])


def gcd(a, b, seed=0):
    """Certified bivariate gcd (primitive): modular evaluation-interpolation
    with exact-division certification of both inputs; fresh points on failure.
    """
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    pa, pb = primitive(a), primitive(b)
    rng = random.Random(seed)
    for _ in range(12):
        try:
            cand = primitive(_gcd_attempt(pa, pb, rng))
        except UnluckyPoints:
            continue
        if not cand:
            continue
        if total_degree(cand) == 0:
            return const(1)
        if divides(cand, pa) and divides(cand, pb):
            return cand
    raise ArithmeticError("bivariate gcd failed to certify after retries")


def reduce_fraction(num, den, seed=0):
    """(num/g, den/g) with g = gcd; denominator normalised primitive."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, const(1)
    g = gcd(num, den, seed=seed)
    if total_degree(g) > 0:
        num = exact_div(num, g)
        den = exact_div(den, g)
    den_p = primitive(den)
    # carry the scalar into the numerator so den is primitive-integer
    lead = max(den, key=_key)
    s = Fraction(den[lead]) / Fraction(den_p[lead])
    num = {m: Fraction(c) / s for m, c in num.items()}
    return num, den_p
