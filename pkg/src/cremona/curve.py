"""Plane curves with ordinary singularities and their linear systems.

Everything here works with declared singular data: a curve is an
(asserted irreducible) form together with the list of its ordinary
singular points at proper rational points.  Genus, adjoint systems and
the base-point checker are exact under that declaration; curves with
non-ordinary or infinitely near singularities are rejected up front.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import _bivar, _linalg
from .arith import (
    DEFAULT_SEED,
    HomPoly,
    Point,
    binary_is_squarefree,
    binary_rational_roots,
    evaluate,
    exact_div,
    poly_gcd,
    restrict_to_line,
    substitute,
    tangent_cone,
    vanishing_order,
)
from .errors import (
    CremonaError,
    CurveError,
    DimensionMismatch,
    MultiplicityError,
    NonOrdinarySingularity,
    NotDivisible,
)
from .maps import CremonaMap, jacobian, rational_base_points, verify_inverse

BASE_POINT_CAVEAT = (
    "base-point analysis covers proper rational points only; non-rational "
    "or infinitely near base points are outside this checker"
)


class PlaneCurve:
    """Irreducible plane curve with declared ordinary singular points."""

    __slots__ = ("F", "degree", "sing")

    def __init__(self, F, degree, sing):
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "sing", tuple(sing))

    def __setattr__(self, name, value):
        raise AttributeError("PlaneCurve is immutable")

    def multiplicity_at(self, p: Point) -> int:
        """Declared multiplicity; 1 for other points on the curve, else 0."""
        for q, m in self.sing:
            if q == p:
                return m
        return 1 if evaluate(self.F, p) == 0 else 0

    def __repr__(self):
        return f"PlaneCurve(degree={self.degree}, nodes={len(self.sing)})"


def _spot_check_irreducible(F: HomPoly, seed: int) -> None:
    """Probabilistic reducibility probe; an assertion aid, never a proof.

    Rejects when F has a repeated factor (derivative gcd) or when every
    restriction to several random rational lines picks up a rational
    root, which is the signature of a rational line or point-rich low
    degree component.
    """
    if F.degree <= 1:
        return
    for v in "xyz":
        partial = F.partial(v)
        if not partial.is_zero:
            g = poly_gcd(F, partial, seed=seed)
            if g.degree > 0:
                raise CurveError(
                    "curve polynomial has a repeated factor; not irreducible"
                )
            break
    rng = random.Random(seed)
    hits = 0
    lines = 0
    while lines < 4:
        p = Point(rng.randint(-19, 19), rng.randint(-19, 19), 1)
        q = Point(rng.randint(-19, 19), rng.randint(-19, 19), rng.randint(1, 7))
        if p == q:
            continue
        r = restrict_to_line(F, p, q)
        if r.is_zero:
            raise CurveError("a random line lies inside the curve; reducible")
        lines += 1
        if binary_rational_roots(r):
            hits += 1
    if hits == 4:
        raise CurveError(
            "every sampled line restriction has a rational root; "
            "curve looks reducible (spot check)"
        )


def make_curve(F: HomPoly, sing, seed: int = DEFAULT_SEED, check_irreducible=True) -> PlaneCurve:
    """Verify declared ordinary singular data and build the curve.

    For each declared (p, m): all lower-order derivatives vanish at p,
    some order-m one does not, and the tangent cone is squarefree.
    """
    if F.is_zero:
        raise CurveError("zero polynomial is not a curve")
    F = F.canonical()
    if F.degree < 1:
        raise CurveError("constants do not define curves")
    seen = set()
    cleaned = []
    for p, m in sing:
        if p in seen:
            raise CurveError(f"duplicate declared singular point {p}")
        seen.add(p)
        if m < 2:
            raise MultiplicityError(f"declared multiplicity {m} at {p}; need >= 2")
        actual, cone = tangent_cone(F, p)
        if actual != m:
            raise MultiplicityError(
                f"declared multiplicity {m} at {p}, found {actual}"
            )
        if not binary_is_squarefree(cone):
            raise NonOrdinarySingularity(
                f"tangent cone at {p} has repeated directions"
            )
        cleaned.append((p, m))
    if check_irreducible:
        _spot_check_irreducible(F, seed)
    return PlaneCurve(F, F.degree, cleaned)


def genus_ordinary(c: PlaneCurve) -> int:
    """(n-1)(n-2)/2 - sum m(m-1)/2 for the declared ordinary singularities."""
    n = c.degree
    g = (n - 1) * (n - 2) // 2 - sum(m * (m - 1) // 2 for _p, m in c.sing)
    if g < 0:
        raise CurveError(
            f"declared singularities force negative genus {g}; data inconsistent"
        )
    return g


# -- linear systems -----------------------------------------------------------


def monomial_basis(d: int):
    """Degree-d monomial exponents in descending graded-lex order."""
    out = []
    for a in range(d, -1, -1):
        for b in range(d - a, -1, -1):
            out.append((a, b, d - a - b))
    out.sort(reverse=True)
    return out


@dataclass(frozen=True)
class LinearSystem:
    degree: int
    conditions: tuple
    basis: tuple

    @property
    def projective_dimension(self) -> int:
        return len(self.basis) - 1

    @property
    def vector_dimension(self) -> int:
        return len(self.basis)


def _condition_rows(d: int, p: Point, m: int, basis):
    """Rows expressing: all order-(m-1) partials vanish at p."""
    rows = []
    X, Y, Z = p.coords
    for ax in range(m):
        for ay in range(m - ax):
            az = m - 1 - ax - ay
            row = []
            for (ex, ey, ez) in basis:
                if ex < ax or ey < ay or ez < az:
                    row.append(Fraction(0))
                    continue
                coef = Fraction(1)
                for e, a in ((ex, ax), (ey, ay), (ez, az)):
                    for k in range(a):
                        coef *= e - k
                row.append(
                    coef
                    * X ** (ex - ax)
                    * Y ** (ey - ay)
                    * Z ** (ez - az)
                )
            rows.append(row)
    return rows


def linear_system(d: int, conditions) -> LinearSystem:
    """All degree-d forms with the assigned base multiplicities.

    Exact rational nullspace of the condition matrix; each basis element
    is re-verified against every condition on construction.
    """
    if d < 1:
        raise ValueError("system degree must be >= 1")
    pts = [p for p, _m in conditions]
    if len(set(pts)) != len(pts):
        raise ValueError("condition points must be distinct")
    basis_monos = monomial_basis(d)
    rows = []
    for p, m in conditions:
        if m < 1:
            raise ValueError("condition multiplicities must be >= 1")
        rows.extend(_condition_rows(d, p, m, basis_monos))
    vectors = _linalg.nullspace(rows, len(basis_monos)) if rows else [
        _linalg._unit(len(basis_monos), j) for j in range(len(basis_monos))
    ]
    basis = []
    for v in vectors:
        terms = {m: c for m, c in zip(basis_monos, v) if c}
        poly = HomPoly(d, terms, _validated=True).canonical()
        basis.append(poly)
    for poly in basis:
        for p, m in conditions:
            if vanishing_order(poly, p) < m:
                raise CremonaError("nullspace element violates a condition")
    return LinearSystem(d, tuple((p, m) for p, m in conditions), tuple(basis))


def coefficient_vector(f: HomPoly, d: int):
    if not f.is_zero and f.degree != d:
        raise ValueError("degree mismatch")
    return [Fraction(f.terms.get(m, 0)) for m in monomial_basis(d)]


# -- adjoint systems ------------------------------------------------------------


def adjoint(c: PlaneCurve) -> LinearSystem:
    """Adjoint system: degree n-3 with multiplicity m_p - 1 at each node.

    The projective dimension must equal g - 1; any disagreement signals
    undeclared singularities and raises DimensionMismatch.
    """
    n = c.degree
    if n < 3:
        raise CurveError("adjoint needs curve degree >= 3")
    g = genus_ordinary(c)
    conds = [(p, m - 1) for p, m in c.sing if m - 1 >= 1]
    if n - 3 == 0:
        basis = () if conds else (HomPoly.constant(1),)
        system = LinearSystem(0, tuple(conds), basis)
    else:
        system = linear_system(n - 3, conds)
    if system.projective_dimension != g - 1:
        raise DimensionMismatch(
            f"adjoint projective dimension {system.projective_dimension} "
            f"!= g - 1 = {g - 1}; undeclared singularities or non-generic data"
        )
    return system


@dataclass(frozen=True)
class TowerStep:
    degree: int
    conditions: tuple
    basis_size: int
    genus_proxy: int


def _genus_proxy(d, conds):
    return (d - 1) * (d - 2) // 2 - sum(m * (m - 1) // 2 for _p, m in conds)


def adjoint_tower(c: PlaneCurve):
    """Iterated assigned-condition adjoints down to genus proxy <= 1.

    Each step maps (d, {m}) to (d-3, {m-1}), dropping spent conditions;
    this uses the declared data only, never a resolution of a general
    member, so a disagreement between proxy and dimension is possible
    and intentionally visible in the returned steps.
    """
    steps = []
    d = c.degree
    conds = list(c.sing)
    while True:
        d = d - 3
        conds = [(p, m - 1) for p, m in conds if m - 1 >= 1]
        if d < 1:
            break
        system = linear_system(d, conds)
        proxy = _genus_proxy(d, conds)
        steps.append(TowerStep(d, tuple(conds), system.vector_dimension, proxy))
        if proxy <= 1 or system.vector_dimension == 0:
            break
    return steps


# -- membership tests ------------------------------------------------------------


def preserves(phi: CremonaMap, c: PlaneCurve):
    """Exceptional cofactor E with F o phi = E * F, or None.

    For irreducible C and birational phi, divisibility of the pullback is
    equivalent to phi(C) = C; deg E = n(d-1) always holds on success.
    """
    G = substitute(c.F, phi.components)
    try:
        E = exact_div(G, c.F)
    except NotDivisible:
        return None
    assert E.degree == c.degree * (phi.degree - 1)
    return E


def fixes(phi: CremonaMap, c: PlaneCurve) -> bool:
    """Whether phi restricts to the identity on the curve.

    True iff F divides each 2x2 minor of [[x, y, z], [f0, f1, f2]]; zero
    minors are trivially divisible, so the identity fixes everything.
    """
    x, y, z = (HomPoly.variable(v) for v in "xyz")
    f0, f1, f2 = phi.components
    for minor in (x * f1 - y * f0, x * f2 - z * f0, y * f2 - z * f1):
        if minor.is_zero:
            continue
        try:
            exact_div(minor, c.F)
        except NotDivisible:
            return False
    return True


# -- affine maps -------------------------------------------------------------------


class AffineMap2:
    """Birational map of the affine plane with rational-function entries.

    Each component is a reduced fraction of bivariate polynomials in
    (x, y); denominators are nonzero polynomials.
    """

    __slots__ = ("nx", "dx", "ny", "dy")

    def __init__(self, nx, dx, ny, dy, seed: int = DEFAULT_SEED):
        if _bivar.is_zero(dx) or _bivar.is_zero(dy):
            raise ZeroDivisionError("affine map with zero denominator")
        nx, dx = _bivar.reduce_fraction(nx, dx, seed=seed)
        ny, dy = _bivar.reduce_fraction(ny, dy, seed=seed)
        object.__setattr__(self, "nx", nx)
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "ny", ny)
        object.__setattr__(self, "dy", dy)

    def __setattr__(self, name, value):
        raise AttributeError("AffineMap2 is immutable")

    @classmethod
    def identity(cls):
        return cls(_bivar.variable("x"), _bivar.const(1), _bivar.variable("y"), _bivar.const(1))

    def components(self):
        return (self.nx, self.dx), (self.ny, self.dy)

    def apply(self, x, y):
        dx = _bivar.evaluate(self.dx, x, y)
        dy = _bivar.evaluate(self.dy, x, y)
        if not dx or not dy:
            raise ZeroDivisionError(f"affine map undefined at ({x}, {y})")
        return (
            _bivar.evaluate(self.nx, x, y) / dx,
            _bivar.evaluate(self.ny, x, y) / dy,
        )

    def __eq__(self, other):
        if not isinstance(other, AffineMap2):
            return NotImplemented
        return _bivar.sub(
            _bivar.mul(self.nx, other.dx), _bivar.mul(other.nx, self.dx)
        ) == {} and _bivar.sub(
            _bivar.mul(self.ny, other.dy), _bivar.mul(other.ny, self.dy)
        ) == {}

    def __repr__(self):
        return f"AffineMap2(nx={self.nx}, dx={self.dx}, ny={self.ny}, dy={self.dy})"


def _subst_fraction(poly, fx, fy):
    """poly(fx, fy) for fractions fx = (n, d): returns (num, den)."""
    (nx, dx), (ny, dy) = fx, fy
    degs_x = max((i for (i, _j) in poly), default=0)
    degs_y = max((j for (_i, j) in poly), default=0)
    num = {}
    for (i, j), c in poly.items():
        term = _bivar.const(c)
        term = _bivar.mul(term, _bivar.pow_(nx, i))
        term = _bivar.mul(term, _bivar.pow_(dx, degs_x - i))
        term = _bivar.mul(term, _bivar.pow_(ny, j))
        term = _bivar.mul(term, _bivar.pow_(dy, degs_y - j))
        num = _bivar.add(num, term)
    den = _bivar.mul(_bivar.pow_(dx, degs_x), _bivar.pow_(dy, degs_y))
    return num, den


def affine_compose(f: AffineMap2, g: AffineMap2, seed: int = DEFAULT_SEED) -> AffineMap2:
    """f after g, cleared and reduced exactly."""
    gx, gy = g.components()
    n1, d1 = _subst_fraction(f.nx, gx, gy)
    e1, c1 = _subst_fraction(f.dx, gx, gy)
    n2, d2 = _subst_fraction(f.ny, gx, gy)
    e2, c2 = _subst_fraction(f.dy, gx, gy)
    # f.nx/f.dx composed: (n1/d1) / (e1/c1) = n1*c1 / (d1*e1)
    return AffineMap2(
        _bivar.mul(n1, c1),
        _bivar.mul(d1, e1),
        _bivar.mul(n2, c2),
        _bivar.mul(d2, e2),
        seed=seed,
    )


def affine_preserves(psi: AffineMap2, f, seed: int = DEFAULT_SEED) -> bool:
    """Whether f divides the cleared numerator of f o psi."""
    f = dict(f)
    if _bivar.is_zero(f):
        raise ValueError("zero polynomial")
    for den in (psi.dx, psi.dy):
        if _bivar.divides(f, den):
            raise ZeroDivisionError("denominator of the map vanishes on the curve")
    num, _den = _subst_fraction(f, (psi.nx, psi.dx), (psi.ny, psi.dy))
    return _bivar.divides(f, num)


def affine_fixes(psi: AffineMap2, f, seed: int = DEFAULT_SEED) -> bool:
    """Whether psi restricts to the identity on f = 0.

    f must divide the cleared numerators of x o psi - x and y o psi - y.
    """
    f = dict(f)
    if _bivar.is_zero(f):
        raise ValueError("zero polynomial")
    for den in (psi.dx, psi.dy):
        if _bivar.divides(f, den):
            raise ZeroDivisionError("denominator of the map vanishes on the curve")
    nx_minus = _bivar.sub(psi.nx, _bivar.mul(_bivar.variable("x"), psi.dx))
    ny_minus = _bivar.sub(psi.ny, _bivar.mul(_bivar.variable("y"), psi.dy))
    return _bivar.divides(f, nx_minus) and _bivar.divides(f, ny_minus)


# -- base-point theorem -------------------------------------------------------------


@dataclass(frozen=True)
class BasePointTheoremReport:
    curve_degree: int
    checked: tuple
    violations: tuple
    passed: bool
    caveat: str = BASE_POINT_CAVEAT


def basepoint_theorem_check(
    c: PlaneCurve, phi: CremonaMap, image_degree_bound: int, seed: int = DEFAULT_SEED
) -> BasePointTheoremReport:
    """Verify 3 m_q = n at every proper rational base point of phi.

    Hypotheses: every declared multiplicity satisfies 3 m_p <= n, and the
    caller asserts deg phi(C) <= image_degree_bound <= n.  A base point
    off the curve (m_q = 0) is an immediate violation.
    """
    n = c.degree
    for p, m in c.sing:
        if 3 * m > n:
            raise CurveError(f"hypothesis 3*m <= n fails at {p}: 3*{m} > {n}")
    if image_degree_bound > n:
        raise ValueError("image degree bound must not exceed the curve degree")
    if phi.is_linear:
        return BasePointTheoremReport(n, (), (), True)
    checked = []
    violations = []
    for rec in rational_base_points(phi, seed=seed):
        q = rec.point
        mq = c.multiplicity_at(q)
        checked.append((q, mq))
        if mq == 0:
            violations.append((q, "base point off the curve"))
        elif 3 * mq != n:
            violations.append((q, f"3*m_q = {3 * mq} != n = {n}"))
    return BasePointTheoremReport(
        n, tuple(checked), tuple(violations), not violations
    )


# -- image curves ---------------------------------------------------------------------


def image_curve(
    phi: CremonaMap, psi_inverse: CremonaMap, c: PlaneCurve, seed: int = DEFAULT_SEED
) -> HomPoly:
    """Strict transform phi(C), computed through the verified inverse.

    Saturates F o psi by the Jacobian of psi: the exceptional factors of
    the pullback are supported on the Jacobian, so dividing out common
    factors until coprime leaves the image equation.  When phi preserves
    C the result must be F itself, and any disagreement is an error
    rather than a silent wrong answer.
    """
    if not verify_inverse(phi, psi_inverse, seed=seed):
        raise CremonaError("psi_inverse failed the inverse verification")
    G = substitute(c.F, psi_inverse.components).canonical()
    if G.is_zero:
        raise CremonaError("pullback vanished; curve contracted by the inverse")
    J = jacobian(psi_inverse).canonical()
    if J.degree > 0:
        while True:
            g = poly_gcd(G, J, seed=seed)
            if g.degree == 0:
                break
            G = exact_div(G, g).canonical()
            if G.degree == 0:
                raise CremonaError(
                    "saturation consumed the whole pullback; image undefined"
                )
    E = preserves(phi, c)
    if E is not None:
        if not G.proportional(c.F):
            raise CremonaError(
                "saturation over-divided: preserved curve did not return itself"
            )
        return c.F
    if G.degree < 1:
        raise CremonaError("image degenerated to a constant")
    return G


# -- Halphen / Coble detectors -----------------------------------------------------------


@dataclass(frozen=True)
class HalphenReport:
    index: int
    projective_dimension: int
    system: LinearSystem
    is_pencil: bool
    description: str = field(default="")


def halphen_check(points9, n: int) -> HalphenReport:
    """Dimension of the degree-3n system with multiplicity n at 9 points."""
    if len(points9) != 9 or len(set(points9)) != 9:
        raise ValueError("need 9 distinct points")
    if n < 1:
        raise ValueError("index must be >= 1")
    system = linear_system(3 * n, [(p, n) for p in points9])
    dim = system.projective_dimension
    desc = f"Halphen pencil of index {n}" if dim == 1 else ""
    return HalphenReport(n, dim, system, dim == 1, desc)


def coble_check(c: PlaneCurve) -> bool:
    """Irreducible sextic with exactly ten ordinary double points."""
    return (
        c.degree == 6
        and len(c.sing) == 10
        and all(m == 2 for _p, m in c.sing)
    )


# -- adjoint stability ----------------------------------------------------------------------


def adjoint_stability(
    phi: CremonaMap, psi_inverse: CremonaMap, c: PlaneCurve, seed: int = DEFAULT_SEED
) -> bool:
    """Whether the transform of each adjoint basis element stays in the system."""
    if preserves(phi, c) is None:
        raise CremonaError("adjoint stability requires a curve preserved by the map")
    adj = adjoint(c)
    if not adj.basis:
        raise CremonaError("adjoint system is empty")
    J = jacobian(psi_inverse).canonical()
    target = [coefficient_vector(b, adj.degree) for b in adj.basis]
    for b in adj.basis:
        G = substitute(b, psi_inverse.components).canonical()
        if J.degree > 0:
            while not G.is_zero:
                g = poly_gcd(G, J, seed=seed)
                if g.degree == 0:
                    break
                G = exact_div(G, g).canonical()
        if G.is_zero or G.degree != adj.degree:
            return False
        if not _linalg.in_span(target, coefficient_vector(G, adj.degree)):
            return False
    return True
