"""Sparse homogeneous polynomials in x, y, z over exact rationals.

The carriers here are:

* ``Rat`` -- arbitrary-precision rationals (``fractions.Fraction``),
* ``HomPoly`` -- a sparse homogeneous trivariate polynomial,
* ``Point`` -- a point of the projective plane with rational coordinates,
* ``BinaryForm`` -- the restriction of a form to a rational line.

Arithmetic is exact.  Every ``HomPoly`` has a canonical representative
(primitive integer coefficients, positive leading coefficient under
graded-lex x > y > z) used wherever values are only meaningful up to a
nonzero scalar: gcds, parsed input, curve equations, map components.

Only rational coefficients are supported, so every root-finding helper
sees rational points only; algebraic conjugates are invisible throughout
the package.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import _univariate as uni
from .errors import (
    CremonaError,
    DegreeMismatch,
    DivisionByZeroPoly,
    NotDivisible,
)

Rat = Fraction

VARS = ("x", "y", "z")
DEFAULT_SEED = 0x5EED


def _as_rat(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"not an exact rational: {v!r}")


class HomPoly:
    """Sparse homogeneous polynomial in three variables.

    ``terms`` maps exponent triples ``(ex, ey, ez)`` to nonzero exact
    coefficients; all triples share the same total degree.  Instances are
    immutable: no method mutates ``terms`` after construction.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms, _validated=False):
        if not _validated:
            clean = {}
            deg = None
            for mono, coeff in terms.items():
                if isinstance(coeff, float):
                    raise TypeError("floating-point coefficients are not supported")
                if not coeff:
                    continue
                e = tuple(int(v) for v in mono)
                if len(e) != 3 or any(v < 0 for v in e):
                    raise ValueError(f"bad exponent triple {mono!r}")
                d = sum(e)
                if deg is None:
                    deg = d
                elif d != deg:
                    raise DegreeMismatch(
                        f"inhomogeneous term data: degrees {deg} and {d}"
                    )
                clean[e] = coeff if isinstance(coeff, int) else _as_rat(coeff)
            if deg is None:
                deg = int(degree) if degree is not None else 0
            terms = clean
            degree = deg
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("HomPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(0, {}, _validated=True)

    @classmethod
    def constant(cls, c):
        c = c if isinstance(c, int) else _as_rat(c)
        if not c:
            return cls.zero()
        return cls(0, {(0, 0, 0): c}, _validated=True)

    @classmethod
    def variable(cls, name):
        i = VARS.index(name)
        e = [0, 0, 0]
        e[i] = 1
        return cls(1, {tuple(e): 1}, _validated=True)

    @classmethod
    def monomial(cls, exponents, coeff=1):
        return cls(None, {tuple(exponents): coeff})

    @classmethod
    def from_terms(cls, terms):
        return cls(None, dict(terms))

    # -- predicates and accessors ---------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        return self.degree == 0

    def coeff(self, exponents):
        return self.terms.get(tuple(exponents), 0)

    def leading(self):
        """(monomial, coefficient) for the graded-lex leading term."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def var_degree(self, var):
        i = VARS.index(var)
        return max((m[i] for m in self.terms), default=-1)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return HomPoly(self.degree, terms, _validated=True)

    def __neg__(self):
        return HomPoly(
            self.degree, {m: -c for m, c in self.terms.items()}, _validated=True
        )

    def __sub__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return HomPoly.zero()
            return HomPoly(
                self.degree,
                {m: c * other for m, c in self.terms.items()},
                _validated=True,
            )
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return HomPoly.zero()
        a, b = self.terms, other.terms
        if len(b) < len(a):
            a, b = b, a
        out = {}
        for (ax, ay, az), ca in a.items():
            for (bx, by, bz), cb in b.items():
                m = (ax + bx, ay + by, az + bz)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return HomPoly(self.degree + other.degree, out, _validated=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = HomPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.degree == other.degree and _terms_equal(self.terms, other.terms)

    def __hash__(self):
        return hash((self.degree, frozenset((m, _as_rat(c)) for m, c in self.terms.items())))

    def __repr__(self):
        from .exprio import format_poly

        return f"HomPoly({format_poly(self)!r})"

    # -- calculus ---------------------------------------------------------

    def partial(self, var):
        i = VARS.index(var)
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                e = list(m)
                k = e[i]
                e[i] = k - 1
                out[tuple(e)] = c * k
        return HomPoly(max(self.degree - 1, 0), out, _validated=True)

    # -- normal form -------------------------------------------------------

    def canonical(self):
        """Primitive integer coefficients, positive graded-lex leading one."""
        if self.is_zero:
            return self
        lcm = 1
        for c in self.terms.values():
            d = c.denominator if isinstance(c, Fraction) else 1
            lcm = lcm * d // math.gcd(lcm, d)
        ints = {m: int(c * lcm) for m, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        if ints[max(ints)] < 0:
            g = -g
        return HomPoly(self.degree, {m: v // g for m, v in ints.items()}, _validated=True)

    def proportional(self, other):
        """True when the two forms agree up to a nonzero rational scalar."""
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.canonical() == other.canonical()


def _terms_equal(a, b):
    if len(a) != len(b):
        return False
    for m, c in a.items():
        if m not in b or b[m] != c:
            return False
    return True


# -- points ---------------------------------------------------------------


class Point:
    """Projective plane point, canonicalised so its last nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, X, Y, Z):
        c = (_as_rat(X), _as_rat(Y), _as_rat(Z))
        last = None
        for i in (2, 1, 0):
            if c[i]:
                last = i
                break
        if last is None:
            raise ValueError("(0:0:0) is not a projective point")
        s = c[last]
        object.__setattr__(self, "coords", tuple(v / s for v in c))

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + " : ".join(str(v) for v in self.coords) + ")"


# -- binary forms (line restrictions) --------------------------------------


class BinaryForm:
    """Homogeneous form in line parameters (s, t) with exact coefficients.

    ``coeffs[k]`` multiplies ``s**k * t**(degree-k)``.  Not normalised:
    restriction must evaluate exactly, e.g. at (1, 0) it returns the value
    of the restricted form at the first spanning point.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        coeffs = [_as_rat(c) for c in coeffs]
        if len(coeffs) != degree + 1:
            raise ValueError("coefficient count must be degree + 1")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def evaluate(self, s, t):
        s, t = _as_rat(s), _as_rat(t)
        acc = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if c:
                acc += c * s**k * t ** (self.degree - k)
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"BinaryForm(deg={self.degree}, {list(self.coeffs)})"

    def univariate(self):
        """Coefficient list in s after setting t = 1 (ascending powers)."""
        return uni.trim(list(self.coeffs))


# -- spec operations -------------------------------------------------------


def poly_add(a: HomPoly, b: HomPoly) -> HomPoly:
    """Sum of two forms of equal degree (either may be zero)."""
    return a + b


def poly_mul(a: HomPoly, b: HomPoly) -> HomPoly:
    return a * b


def evaluate(f: HomPoly, p: Point) -> Fraction:
    """Value of ``f`` at the canonical representative of ``p``."""
    X, Y, Z = p.coords
    acc = Fraction(0)
    for (a, b, c), coeff in f.terms.items():
        acc += coeff * X**a * Y**b * Z**c
    return acc


def exact_div(a: HomPoly, b: HomPoly) -> HomPoly:
    """Exact quotient a / b, or ``NotDivisible``.

    Leading-term elimination under graded-lex; sound as a divisibility
    test because the order is multiplicative.
    """
    if b.is_zero:
        raise DivisionByZeroPoly("division by the zero polynomial")
    if a.is_zero:
        return HomPoly.zero()
    if a.degree < b.degree:
        raise NotDivisible("degree of divisor exceeds degree of dividend")
    lead_b = max(b.terms)
    cb = _as_rat(b.terms[lead_b])
    rem = {m: _as_rat(c) for m, c in a.terms.items()}
    quot = {}
    while rem:
        lead_r = max(rem)
        e = tuple(lead_r[i] - lead_b[i] for i in range(3))
        if any(v < 0 for v in e):
            raise NotDivisible("leading term not divisible")
        c = rem[lead_r] / cb
        quot[e] = c
        for m, cm in b.terms.items():
            mm = (m[0] + e[0], m[1] + e[1], m[2] + e[2])
            s = rem.get(mm, Fraction(0)) - c * _as_rat(cm)
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return HomPoly(a.degree - b.degree, quot, _validated=True)


def divides(b: HomPoly, a: HomPoly) -> bool:
    try:
        exact_div(a, b)
        return True
    except NotDivisible:
        return False


def substitute(f: HomPoly, triple) -> HomPoly:
    """Compose ``f`` with a triple of equal-degree forms (f(g0, g1, g2)).

    Nested Horner evaluation; the result has degree deg(f) * d or is zero.
    """
    g0, g1, g2 = triple
    degs = {g.degree for g in (g0, g1, g2) if not g.is_zero}
    if len(degs) > 1:
        raise DegreeMismatch("substitution components must share one degree")
    if f.is_zero:
        return HomPoly.zero()
    n = f.degree
    if n == 0:
        return f
    # rows[a][b] is the coefficient of x^a y^b z^(n-a-b)
    rows = {}
    for (a, b, _c), coeff in f.terms.items():
        rows.setdefault(a, {})[b] = coeff
    pow2 = [HomPoly.constant(1)]
    for _ in range(n):
        pow2.append(pow2[-1] * g2)
    acc = HomPoly.zero()
    for a in range(n, -1, -1):
        if not acc.is_zero:
            acc = acc * g0
        row = rows.get(a)
        if not row:
            continue
        inner = HomPoly.zero()
        top = max(row)
        for b in range(top, -1, -1):
            if not inner.is_zero:
                inner = inner * g1
            c = row.get(b)
            if c:
                term = pow2[n - a - b] * c
                inner = inner + term if not inner.is_zero else term
        acc = acc + inner if not acc.is_zero else inner
    return acc


def poly_gcd(a: HomPoly, b: HomPoly, seed: int = DEFAULT_SEED) -> HomPoly:
    """Greatest common divisor in canonical form.

    Modular evaluation-interpolation on a dehomogenised bivariate pair,
    certified by exact division of both inputs; fresh evaluation points on
    failure.  Deterministic for a fixed ``seed``.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.canonical()
    if b.is_zero:
        return a.canonical()
    a = a.canonical()
    b = b.canonical()
    if a.degree == 0 or b.degree == 0:
        return HomPoly.constant(1)
    mono_a = _monomial_content(a)
    mono_b = _monomial_content(b)
    shared = tuple(min(u, v) for u, v in zip(mono_a, mono_b))
    a1 = _shift_down(a, mono_a)
    b1 = _shift_down(b, mono_b)
    core = _gcd_core(a1, b1, seed)
    g = _shift_up(core, shared).canonical()
    return g


def _monomial_content(f):
    mins = [None, None, None]
    for m in f.terms:
        for i in range(3):
            v = m[i]
            if mins[i] is None or v < mins[i]:
                mins[i] = v
    return tuple(mins)


def _shift_down(f, shift):
    if shift == (0, 0, 0):
        return f
    terms = {
        (m[0] - shift[0], m[1] - shift[1], m[2] - shift[2]): c
        for m, c in f.terms.items()
    }
    return HomPoly(f.degree - sum(shift), terms, _validated=True)


def _shift_up(f, shift):
    if shift == (0, 0, 0) or f.is_zero:
        return f
    terms = {
        (m[0] + shift[0], m[1] + shift[1], m[2] + shift[2]): c
        for m, c in f.terms.items()
    }
    return HomPoly(f.degree + sum(shift), terms, _validated=True)


def _dehomogenize(f):
    """Bivariate dict (i, j) -> coeff for f(x, y, 1); faithful when z ∤ f."""
    return {(m[0], m[1]): c for m, c in f.terms.items()}


def _homogenize(biv, degree):
    terms = {}
    for (i, j), c in biv.items():
        if c:
            terms[(i, j, degree - i - j)] = c
    return HomPoly(degree, terms, _validated=True)


def _gcd_core(a, b, seed):
    """Gcd of two monomial-content-free canonical forms."""
    from . import _bivar

    if a.degree == 0 or b.degree == 0:
        return HomPoly.constant(1)
    pa = _dehomogenize(a)
    pb = _dehomogenize(b)
    g = _bivar.gcd(pa, pb, seed=seed)
    cand = _homogenize(g, _bivar.total_degree(g)).canonical()
    if cand.degree == 0:
        return HomPoly.constant(1)
    if not (divides(cand, a) and divides(cand, b)):
        raise CremonaError("gcd certification failed")
    return cand


def poly_gcd_many(polys, seed: int = DEFAULT_SEED) -> HomPoly:
    """Gcd of a sequence of forms (zeros skipped)."""
    acc = None
    for p in polys:
        if p.is_zero:
            continue
        acc = p.canonical() if acc is None else poly_gcd(acc, p, seed=seed)
        if acc.degree == 0:
            return acc
    if acc is None:
        raise ValueError("gcd of all-zero family is undefined")
    return acc


# -- resultants -------------------------------------------------------------


def _coeffs_in_var(f, var):
    """Coefficient forms of f seen as a polynomial in ``var`` (ascending)."""
    i = VARS.index(var)
    d = f.var_degree(var)
    buckets = [dict() for _ in range(d + 1)]
    for m, c in f.terms.items():
        e = list(m)
        k = e[i]
        e[i] = 0
        buckets[k][tuple(e)] = c
    return [
        HomPoly(f.degree - k, b, _validated=True) if b else HomPoly.zero()
        for k, b in enumerate(buckets)
    ]


def leading_coeff_vanishes(f: HomPoly, var: str) -> bool:
    """True when deg_var(f) < deg(f): the full-degree coefficient is absent."""
    return f.var_degree(var) < f.degree


def resultant(a: HomPoly, b: HomPoly, var: str = "z") -> HomPoly:
    """Sylvester resultant eliminating ``var``; a form in the other two.

    Polynomials are taken with their actual degrees in ``var``; callers
    that care whether the ``var``-leading coefficient dropped (the
    projection centre lies on the curve) must check
    ``leading_coeff_vanishes`` on each input.
    """
    if a.is_zero or b.is_zero:
        raise DivisionByZeroPoly("resultant of the zero polynomial")
    da, db = a.var_degree(var), b.var_degree(var)
    if da <= 0 or db <= 0:
        raise ValueError(f"inputs must have positive degree in {var}")
    others = [v for v in VARS if v != var]
    d_total = da * b.degree + db * a.degree - da * db
    ca = _coeffs_in_var(a, var)
    cb = _coeffs_in_var(b, var)
    u, v = others
    iu, iv = VARS.index(u), VARS.index(v)

    def specialise(coeffs, t):
        out = []
        for form in coeffs:
            acc = Fraction(0)
            for m, c in form.terms.items():
                acc += _as_rat(c) * Fraction(t) ** m[iu]
            out.append(acc)
        return uni.trim(out)

    points = []
    t = 0
    guard = 0
    while len(points) < d_total + 1:
        guard += 1
        if guard > 8 * (d_total + 2) + 64:
            raise CremonaError("resultant interpolation ran out of sample points")
        sa = specialise(ca, t)
        sb = specialise(cb, t)
        if uni.degree(sa) == da and uni.degree(sb) == db:
            points.append((Fraction(t), uni.sylvester_resultant(sa, sb)))
        t = -t if t > 0 else -t + 1
    coeffs = uni.interpolate(points)
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0, 0, 0]
            e[iu] = k
            e[iv] = d_total - k
            terms[tuple(e)] = c
    return HomPoly(d_total, terms, _validated=True)


# -- line restriction --------------------------------------------------------


def restrict_to_line(f: HomPoly, p: Point, q: Point) -> BinaryForm:
    """The binary form f(s*p + t*q); identically zero when the line lies in f."""
    if p == q:
        raise ValueError("restriction line needs two distinct points")
    n = f.degree
    out = [Fraction(0)] * (n + 1)
    P = p.coords
    Q = q.coords
    binom = [[math.comb(i, j) for j in range(i + 1)] for i in range(n + 1)]

    def expand(a, cp, cq):
        # (cp*s + cq*t)^a as list indexed by s-power
        return [binom[a][k] * cp**k * cq ** (a - k) for k in range(a + 1)]

    for (a, b, c), coeff in f.terms.items():
        ex = expand(a, P[0], Q[0])
        ey = expand(b, P[1], Q[1])
        ez = expand(c, P[2], Q[2])
        exy = [Fraction(0)] * (a + b + 1)
        for i, vi in enumerate(ex):
            if vi:
                for j, vj in enumerate(ey):
                    if vj:
                        exy[i + j] += vi * vj
        for i, vi in enumerate(exy):
            if vi:
                for j, vj in enumerate(ez):
                    if vj:
                        out[i + j] += coeff * vi * vj
    return BinaryForm(n, out)


# -- local analysis ----------------------------------------------------------


def _complete_to_frame(p: Point):
    """Two coordinate vectors completing ``p`` to a projective frame."""
    coords = p.coords
    unit = [
        Point(1, 0, 0),
        Point(0, 1, 0),
        Point(0, 0, 1),
    ]
    pivot = max(range(3), key=lambda i: bool(coords[i]))
    for i in (2, 1, 0):
        if coords[i]:
            pivot = i
            break
    others = [u for i, u in enumerate(unit) if i != pivot]
    return others[0], others[1]


def local_expansion(f: HomPoly, p: Point):
    """Terms of f(w*p + s*u + t*v) grouped by (s, t)-order.

    Returns a dict order -> {(s_exp, t_exp): coeff}; order 0 holds the
    value, order m the degree-m tangent-cone data at ``p``.
    """
    u, v = _complete_to_frame(p)
    lin = []
    for i in range(3):
        lin.append(
            HomPoly(
                1,
                {
                    m: c
                    for m, c in (
                        ((1, 0, 0), p.coords[i]),
                        ((0, 1, 0), u.coords[i]),
                        ((0, 0, 1), v.coords[i]),
                    )
                    if c
                },
                _validated=True,
            )
        )
    g = substitute(f, lin)
    layers = {}
    for (_w, s, t), c in g.terms.items():
        layers.setdefault(s + t, {})[(s, t)] = c
    return layers


def vanishing_order(f: HomPoly, p: Point) -> int:
    """Order of vanishing of f at p (0 when f(p) != 0)."""
    if f.is_zero:
        raise ValueError("vanishing order of the zero polynomial")
    layers = local_expansion(f, p)
    return min(layers)


def tangent_cone(f: HomPoly, p: Point):
    """(multiplicity, binary form of the tangent cone at p)."""
    layers = local_expansion(f, p)
    m = min(layers)
    coeffs = [Fraction(0)] * (m + 1)
    for (s, t), c in layers[m].items():
        coeffs[s] = _as_rat(c)
    return m, BinaryForm(m, coeffs)


def binary_is_squarefree(form: BinaryForm) -> bool:
    """No repeated linear factor over the complex numbers."""
    coeffs = list(form.coeffs)
    if not any(coeffs):
        return False
    # strip t^k | form (coeffs indexed by s-power)
    lo = 0
    while not coeffs[lo]:
        lo += 1
    hi = len(coeffs) - 1
    while not coeffs[hi]:
        hi -= 1
    t_mult = lo
    s_mult = form.degree - hi
    if t_mult > 1 or s_mult > 1:
        return False
    core = uni.trim(coeffs[lo : hi + 1])
    if uni.degree(core) <= 0:
        return True
    g = uni.gcd_q(core, uni.derivative(core))
    return uni.degree(g) == 0


def _split_binary(form):
    """(s_mult, t_mult, core list in s with t = 1) for a nonzero form."""
    coeffs = list(form.coeffs)
    lo = 0
    while not coeffs[lo]:
        lo += 1
    hi = len(coeffs) - 1
    while not coeffs[hi]:
        hi -= 1
    return lo, form.degree - hi, uni.trim(coeffs[lo : hi + 1])


def binary_gcd(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """Gcd of two binary forms, including shared s- and t-power factors."""
    if a.is_zero or b.is_zero:
        raise ValueError("gcd with the zero form")
    s_a, t_a, core_a = _split_binary(a)
    s_b, t_b, core_b = _split_binary(b)
    g = uni.gcd_q(core_a, core_b)
    s_shared = min(s_a, s_b)
    t_shared = min(t_a, t_b)
    d = s_shared + t_shared + uni.degree(g)
    coeffs = [Fraction(0)] * (d + 1)
    for k, c in enumerate(g):
        coeffs[k + s_shared] = Fraction(c)
    return BinaryForm(d, coeffs)


def binary_rational_roots(form: BinaryForm):
    """All rational projective roots (s:t) of the form, deduplicated."""
    coeffs = list(form.coeffs)
    if not any(coeffs):
        raise ValueError("zero form has every root")
    roots = []
    lo = 0
    while not coeffs[lo]:
        lo += 1
    if lo:
        roots.append((Fraction(0), Fraction(1)))  # s = 0
    hi = len(coeffs) - 1
    while not coeffs[hi]:
        hi -= 1
    if hi < form.degree:
        roots.append((Fraction(1), Fraction(0)))  # t = 0
    core = uni.trim([c for c in coeffs[lo : hi + 1]])
    if uni.degree(core) >= 1:
        for r in uni.rational_roots(uni.clear_denominators(core)):
            roots.append((r, Fraction(1)))
    return roots
