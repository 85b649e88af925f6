"""Plane Cremona transformations: composition, iteration, base loci.

A map is a coprime triple of equal-degree forms up to a joint scalar.
Triples are stored jointly normalised (integer coefficients, joint
content 1, first nonzero component with positive leading coefficient),
so projective equality of maps is plain structural equality.

Base-point extraction sees proper rational points only; infinitely near
and non-rational base points are invisible, and every report downstream
carries that caveat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg, _univariate as uni
from .arith import (
    DEFAULT_SEED,
    HomPoly,
    Point,
    binary_rational_roots,
    evaluate,
    exact_div,
    poly_gcd,
    poly_gcd_many,
    resultant,
    substitute,
    vanishing_order,
)
from .errors import (
    CremonaError,
    DegenerateComposition,
    DegenerateMap,
    DegreeMismatch,
    IdentityMap,
    IndeterminateAt,
)

BASE_POINT_CAVEAT = (
    "only proper rational base points are listed; non-rational or "
    "infinitely near base points are not detected"
)


class CremonaMap:
    """Birational plane transformation given by its component triple."""

    __slots__ = ("components", "degree")

    def __init__(self, components, degree):
        object.__setattr__(self, "components", tuple(components))
        object.__setattr__(self, "degree", degree)

    def __setattr__(self, name, value):
        raise AttributeError("CremonaMap is immutable")

    def __eq__(self, other):
        if not isinstance(other, CremonaMap):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(tuple(frozenset(c.terms.items()) for c in self.components))

    def __repr__(self):
        from .exprio import format_map

        return f"CremonaMap({format_map(self.components)!r})"

    @property
    def is_linear(self):
        return self.degree == 1


@dataclass(frozen=True)
class BasePointRecord:
    point: Point
    multiplicity: int


def _normalize_triple(components):
    """Joint scaling: integer coefficients, joint content 1, canonical sign."""
    lcm = 1
    for f in components:
        for c in f.terms.values():
            d = c.denominator if isinstance(c, Fraction) else 1
            lcm = lcm * d // math.gcd(lcm, d)
    ints = [{m: int(c * lcm) for m, c in f.terms.items()} for f in components]
    g = 0
    for terms in ints:
        for v in terms.values():
            g = math.gcd(g, v)
    first = next(t for t in ints if t)
    if first[max(first)] < 0:
        g = -g
    return tuple(
        HomPoly(f.degree, {m: v // g for m, v in terms.items()}, _validated=True)
        for f, terms in zip(components, ints)
    )


def make_map(raw, seed: int = DEFAULT_SEED) -> CremonaMap:
    """Normalise a polynomial triple into a Cremona map.

    Cancels the common factor, then enforces: three nonzero equal-degree
    components that are not all proportional (the image is not a point).
    """
    if len(raw) != 3:
        raise DegenerateMap("a plane map needs exactly 3 components")
    if any(f.is_zero for f in raw):
        raise DegenerateMap("zero component")
    degrees = {f.degree for f in raw}
    if len(degrees) != 1:
        raise DegreeMismatch(f"component degrees differ: {sorted(degrees)}")
    g = poly_gcd_many(raw, seed=seed)
    if g.degree > 0:
        raw = [exact_div(f, g) for f in raw]
    mono_basis = sorted({m for f in raw for m in f.terms}, reverse=True)
    rows = [[Fraction(f.terms.get(m, 0)) for m in mono_basis] for f in raw]
    if _linalg.rank(rows) < 2:
        raise DegenerateMap("components are proportional: the image is a point")
    comps = _normalize_triple(raw)
    return CremonaMap(comps, comps[0].degree)


def identity_map() -> CremonaMap:
    return CremonaMap(
        (HomPoly.variable("x"), HomPoly.variable("y"), HomPoly.variable("z")), 1
    )


def is_identity(phi: CremonaMap) -> bool:
    return phi == identity_map()


def maps_equal(phi: CremonaMap, psi: CremonaMap) -> bool:
    """Projective equality (normalised triples compare structurally)."""
    return phi == psi


def compose_with_witness(phi: CremonaMap, psi: CremonaMap, seed: int = DEFAULT_SEED):
    """phi after psi, plus the cancelled common factor as a certificate."""
    raw = [substitute(f, psi.components) for f in phi.components]
    if all(f.is_zero for f in raw):
        raise DegenerateComposition(
            "image of the inner map lies inside the outer map's indeterminacy"
        )
    if any(f.is_zero for f in raw):
        raise DegenerateComposition("composition has a zero component")
    g = poly_gcd_many(raw, seed=seed)
    if g.degree > 0:
        raw = [exact_div(f, g) for f in raw]
    mono_basis = sorted({m for f in raw for m in f.terms}, reverse=True)
    rows = [[Fraction(f.terms.get(m, 0)) for m in mono_basis] for f in raw]
    if _linalg.rank(rows) < 2:
        raise DegenerateComposition("composition collapses to a constant map")
    comps = _normalize_triple(raw)
    return CremonaMap(comps, comps[0].degree), g


def compose(phi: CremonaMap, psi: CremonaMap, seed: int = DEFAULT_SEED) -> CremonaMap:
    return compose_with_witness(phi, psi, seed=seed)[0]


def power(phi: CremonaMap, n: int, seed: int = DEFAULT_SEED) -> CremonaMap:
    """n-fold composition by binary exponentiation; power(phi, 0) = id."""
    if n < 0:
        raise ValueError("negative power")
    if n == 0 or is_identity(phi):
        return identity_map() if n == 0 else phi
    out = None
    base = phi
    while n:
        if n & 1:
            out = base if out is None else compose(out, base, seed=seed)
        n >>= 1
        if n:
            base = compose(base, base, seed=seed)
    return out


def apply_map(phi: CremonaMap, p: Point) -> Point:
    vals = [evaluate(f, p) for f in phi.components]
    if not any(vals):
        raise IndeterminateAt(p)
    return Point(*vals)


def fixed_curve(phi: CremonaMap, seed: int = DEFAULT_SEED):
    """Divisorial part of the pointwise-fixed locus, or None.

    Gcd of the 2x2 minors of [[x, y, z], [f0, f1, f2]].  Isolated fixed
    points are deliberately not computed.
    """
    if is_identity(phi):
        raise IdentityMap("fixed curve of the identity is the whole plane")
    x, y, z = (HomPoly.variable(v) for v in "xyz")
    f0, f1, f2 = phi.components
    minors = [x * f1 - y * f0, x * f2 - z * f0, y * f2 - z * f1]
    nonzero = [m for m in minors if not m.is_zero]
    if not nonzero:
        raise IdentityMap("all minors vanish")
    g = poly_gcd_many(nonzero, seed=seed)
    return g if g.degree > 0 else None


def jacobian(phi: CremonaMap) -> HomPoly:
    """Determinant of the matrix of partials; degree 3(d-1)."""
    rows = [[f.partial(v) for v in "xyz"] for f in phi.components]
    (a, b, c), (d, e, f), (g, h, i) = rows
    return (
        a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    )


# -- rational common zeros ---------------------------------------------------


def _binary_factor_points(form: HomPoly, vars_pair):
    """Rational roots (u:v) of a form supported on two variables."""
    iu, iv = vars_pair
    coeffs = {}
    d = form.degree
    for m, c in form.terms.items():
        coeffs[m[iu]] = Fraction(c)
    from .arith import BinaryForm

    bf = BinaryForm(d, [coeffs.get(k, Fraction(0)) for k in range(d + 1)])
    return binary_rational_roots(bf)


def _solve_on_pencil_line(forms, u, v, axis):
    """Rational points with fixed ratio on the two axis coordinates.

    axis 'z': points (u : v : t); axis 'x': points (t : u : v).
    Returns candidates where all restrictions share a rational root,
    plus the coordinate vertex when every form kills it.
    """
    restrictions = []
    for f in forms:
        coeffs = {}
        for (a, b, c), coef in f.terms.items():
            if axis == "z":
                k = c
                val = Fraction(coef) * u**a * v**b
            else:
                k = a
                val = Fraction(coef) * u**b * v**c
            if val:
                coeffs[k] = coeffs.get(k, Fraction(0)) + val
        restrictions.append(uni.trim([coeffs.get(k, 0) for k in range(f.degree + 1)]))
    cands = []
    if all(not r for r in restrictions):
        return cands  # line inside all curves: infinite locus, handled upstream
    g = []
    for r in restrictions:
        if r:
            g = uni.gcd_q(g, r) if g else uni.clear_denominators(r)
            if uni.degree(g) == 0:
                break
    if uni.degree(g) >= 1:
        for t in uni.rational_roots(g):
            cands.append(
                Point(u, v, t) if axis == "z" else Point(t, u, v)
            )
    # the point at the far end of the line (t -> infinity)
    far = Point(0, 0, 1) if axis == "z" else Point(1, 0, 0)
    cands.append(far)
    return cands


def _coprime_pair_candidates(a: HomPoly, b: HomPoly, seed):
    cands = []
    for var, axis_pair in (("z", (0, 1)), ("x", (1, 2))):
        da, db = a.var_degree(var), b.var_degree(var)
        if da > 0 and db > 0:
            r = resultant(a, b, var)
            if r.is_zero:
                continue
            if r.degree == 0:
                continue
            roots = _binary_factor_points(r, axis_pair)
        elif da <= 0:
            if a.var_degree(var) < 0:
                continue
            roots = _binary_factor_points(a, axis_pair)
        else:
            roots = _binary_factor_points(b, axis_pair)
        for u, v in roots:
            cands.extend(_solve_on_pencil_line([a, b], u, v, "z" if var == "z" else "x"))
        cands.append(Point(0, 0, 1) if var == "z" else Point(1, 0, 0))
    return cands


def rational_common_zeros(forms, seed: int = DEFAULT_SEED):
    """All rational points annihilating every form in the family.

    The family must cut out a finite set (no common factor).  Pairwise
    gcds are split off recursively so each candidate search runs on a
    coprime pair; every candidate is verified by evaluation against the
    full family.
    """
    forms = [f.canonical() for f in forms if not f.is_zero]
    if len(forms) < 2:
        raise ValueError("need at least two nonzero forms")
    if any(f.degree == 0 for f in forms):
        return []
    g_all = poly_gcd_many(forms, seed=seed)
    if g_all.degree > 0:
        raise ValueError("forms share a common factor: zero locus is infinite")

    verified = set()

    def verify(p):
        if all(evaluate(f, p) == 0 for f in forms):
            verified.add(p)

    def handle(family):
        if any(f.degree == 0 for f in family):
            return  # a nonzero constant in the branch: empty zero set
        a = family[0]
        best = None
        for b in family[1:]:
            d = poly_gcd(a, b, seed=seed)
            if d.degree == 0:
                best = b
                break
        if best is not None:
            for p in _coprime_pair_candidates(a, best, seed):
                verify(p)
            return
        # a shares a factor with every other form; split on the first pair
        b = family[1]
        d = poly_gcd(a, b, seed=seed)
        rest = family[2:]
        if not rest:
            raise ValueError("pair with common factor and nothing to cut it")
        handle([d] + rest)
        handle([exact_div(a, d), exact_div(b, d)] + rest)

    handle(forms)
    return sorted(verified, key=lambda p: tuple(map(str, p.coords)))


def rational_base_points(phi: CremonaMap, seed: int = DEFAULT_SEED):
    """Proper rational base points with their multiplicities.

    Multiplicity is the minimum vanishing order over the components.  The
    caveat string in module scope applies: nothing non-rational and
    nothing infinitely near is found.
    """
    if phi.is_linear:
        raise ValueError("linear maps have no base points")
    points = rational_common_zeros(list(phi.components), seed=seed)
    records = []
    for p in points:
        m = min(vanishing_order(f, p) for f in phi.components)
        records.append(BasePointRecord(p, m))
    return records


@dataclass(frozen=True)
class HomaloidalReport:
    degree: int
    multiplicities: tuple
    linear_identity: bool  # sum a_i = 3(d-1)
    quadratic_identity: bool  # sum a_i^2 = d^2 - 1
    passed: bool
    caveat: str = BASE_POINT_CAVEAT


def homaloidal_check(phi: CremonaMap, declared) -> HomaloidalReport:
    """Check the two numerical identities of a complete proper base scheme."""
    mults = tuple(r.multiplicity for r in declared)
    if any(m < 1 for m in mults):
        raise ValueError("declared multiplicities must be at least 1")
    d = phi.degree
    lin = sum(mults) == 3 * (d - 1)
    quad = sum(m * m for m in mults) == d * d - 1
    return HomaloidalReport(d, mults, lin, quad, lin and quad)


def verify_inverse(phi: CremonaMap, psi: CremonaMap, seed: int = DEFAULT_SEED) -> bool:
    """True iff both compositions are the identity."""
    try:
        if not is_identity(compose(phi, psi, seed=seed)):
            return False
        return is_identity(compose(psi, phi, seed=seed))
    except DegenerateComposition:
        return False


# -- linear maps --------------------------------------------------------------


def linear_map(matrix) -> CremonaMap:
    """Projective linear map from a rational 3x3 matrix (rows -> components)."""
    if _linalg.mat_inverse(matrix) is None:
        raise DegenerateMap("singular matrix")
    vars_ = [HomPoly.variable(v) for v in "xyz"]
    comps = []
    for row in matrix:
        acc = HomPoly.zero()
        for c, v in zip(row, vars_):
            if c:
                acc = acc + v * Fraction(c)
        comps.append(acc)
    return make_map(comps)


def linear_matrix(phi: CremonaMap):
    """3x3 coefficient matrix of a linear map."""
    if not phi.is_linear:
        raise ValueError("not a linear map")
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    return [[Fraction(f.terms.get(m, 0)) for m in basis] for f in phi.components]


def inverse_linear(phi: CremonaMap) -> CremonaMap:
    inv = _linalg.mat_inverse(linear_matrix(phi))
    if inv is None:
        raise DegenerateMap("linear map is singular")
    return linear_map(inv)
