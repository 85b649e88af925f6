"""Classical transformation families: de Jonquieres torus elements, the
cross-ratio extension of hyperelliptic automorphisms, the chord-tangent
group law, ninth-point extraction, Geiser and Bertini involutions, and
quadratic elements of the decomposition group of a smooth cubic.

Constructions that rest on calibration (Geiser, quadratic cubic
preservers) verify themselves on extra samples or by an exact
divisibility certificate and abort instead of returning an uncertified
map.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import _bivar, _linalg, _univariate as uni
from .arith import (
    DEFAULT_SEED,
    HomPoly,
    Point,
    evaluate,
    exact_div,
    restrict_to_line,
    substitute,
)
from .curve import AffineMap2, linear_system
from .errors import (
    CalibrationError,
    CremonaError,
    DegenerateElement,
    MultipleRoots,
    NonPencil,
    NotDivisible,
    SingularMember,
)
from .maps import (
    CremonaMap,
    apply_map,
    compose,
    identity_map,
    linear_map,
    make_map,
    rational_common_zeros,
)
from .ratfunc import RatFunc1, is_squarefree_poly


# -- the torus of a hyperelliptic curve ----------------------------------------


class JhElement:
    """Element (a1, a2) of the twisted torus attached to squarefree h.

    Represents the matrix [[a1, h*a2], [a2, a1]] modulo rational-function
    scalars; normalised so a1 = 1 when a1 != 0, else a2 = 1.
    """

    __slots__ = ("h", "a1", "a2")

    def __init__(self, h: RatFunc1, a1: RatFunc1, a2: RatFunc1):
        if not is_squarefree_poly(h):
            raise MultipleRoots("h must be a squarefree nonconstant polynomial")
        norm = a1 * a1 - h * a2 * a2
        if norm.is_zero:
            raise DegenerateElement("a1^2 - h*a2^2 vanishes")
        if not a1.is_zero:
            a2 = a2 / a1
            a1 = RatFunc1.constant(1)
        else:
            a1 = RatFunc1.constant(0)
            a2 = RatFunc1.constant(1)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)

    def __setattr__(self, name, value):
        raise AttributeError("JhElement is immutable")

    @property
    def is_identity(self):
        return not self.a1.is_zero and self.a2.is_zero

    def __eq__(self, other):
        if not isinstance(other, JhElement):
            return NotImplemented
        return self.h == other.h and self.a1 == other.a1 and self.a2 == other.a2

    def __hash__(self):
        return hash((self.h, self.a1, self.a2))

    def __repr__(self):
        return f"JhElement(a1={self.a1!r}, a2={self.a2!r})"


def jh_make(h: RatFunc1, a1: RatFunc1, a2: RatFunc1) -> JhElement:
    return JhElement(h, a1, a2)


def jh_identity(h: RatFunc1) -> JhElement:
    return JhElement(h, RatFunc1.constant(1), RatFunc1.constant(0))


def jh_sigma(h: RatFunc1) -> JhElement:
    """The involution with a1 = 0: affine model (x, h/y)."""
    return JhElement(h, RatFunc1.constant(0), RatFunc1.constant(1))


def jh_mul(e1: JhElement, e2: JhElement) -> JhElement:
    if e1.h != e2.h:
        raise ValueError("elements live over different h")
    h = e1.h
    a1 = e1.a1 * e2.a1 + h * e1.a2 * e2.a2
    a2 = e1.a1 * e2.a2 + e1.a2 * e2.a1
    return JhElement(h, a1, a2)


def jh_inv(e: JhElement) -> JhElement:
    return JhElement(e.h, e.a1, -e.a2)


def jh_to_affine(e: JhElement) -> AffineMap2:
    """(x, (a1*y + h*a2)/(a2*y + a1)) as an exact affine map."""
    p1, q1 = list(e.a1.num), list(e.a1.den)
    p2, q2 = list(e.a2.num), list(e.a2.den)
    hp = list(e.h.num)
    # common denominator q1*q2: a1 -> p1*q2, a2 -> p2*q1
    u1 = uni.mul(p1, q2)
    u2 = uni.mul(p2, q1)

    def as_bivar(coeffs, ypow):
        return {(i, ypow): Fraction(c) for i, c in enumerate(coeffs) if c}

    ny = _bivar.add(as_bivar(u1, 1), as_bivar(uni.mul(hp, u2), 0))
    dy = _bivar.add(as_bivar(u2, 1), as_bivar(u1, 0))
    return AffineMap2(_bivar.variable("x"), _bivar.const(1), ny, dy)


def hyperelliptic_affine_equation(h: RatFunc1):
    """y^2 - h(x) as a bivariate polynomial."""
    out = {(0, 2): Fraction(1)}
    for i, c in enumerate(h.num):
        if c:
            out[(i, 0)] = out.get((i, 0), Fraction(0)) - Fraction(c)
    return out


def affine_to_cremona(psi: AffineMap2, seed: int = DEFAULT_SEED) -> CremonaMap:
    """Homogenise an affine plane map to a Cremona map on the chart z = 1."""
    nx, dx = psi.nx, psi.dx
    ny, dy = psi.ny, psi.dy
    cx = _bivar.mul(nx, dy)
    cy = _bivar.mul(ny, dx)
    cz = _bivar.mul(dx, dy)
    d = max(_bivar.total_degree(c) for c in (cx, cy, cz))

    def homog(biv):
        terms = {}
        for (i, j), c in biv.items():
            terms[(i, j, d - i - j)] = c
        return HomPoly(d, terms, _validated=True)

    return make_map([homog(cx), homog(cy), homog(cz)], seed=seed)


def jh_homogenize(e: JhElement, seed: int = DEFAULT_SEED) -> CremonaMap:
    """Plane model of the torus element; verified against the affine chart."""
    aff = jh_to_affine(e)
    phi = affine_to_cremona(aff, seed=seed)
    rng = random.Random(seed)
    checked = 0
    guard = 0
    while checked < 5:
        guard += 1
        if guard > 400:
            raise CalibrationError("could not find enough chart sample points")
        xv, yv = rng.randint(-30, 30), rng.randint(-30, 30)
        try:
            ax, ay = aff.apply(xv, yv)
        except ZeroDivisionError:
            continue
        try:
            img = apply_map(phi, Point(xv, yv, 1))
        except CremonaError:
            continue
        if img != Point(ax, ay, 1):
            raise CalibrationError("homogenised map disagrees with the chart")
        checked += 1
    return phi


# -- cross-ratio extension -----------------------------------------------------


def extend_hyperelliptic_auto(
    h: RatFunc1, mu: RatFunc1, c: RatFunc1, eps: int
) -> AffineMap2:
    """Lift x -> mu(x) on the base to (mu(x), eps*c(x)*y) over y^2 = h(x).

    Requires h(mu(x)) = c(x)^2 * h(x) exactly; the returned map then
    preserves y^2 - h by construction, which is re-checked symbolically.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if max(uni.degree(list(mu.num)), uni.degree(list(mu.den))) > 1:
        raise ValueError("mu must be a Moebius map (degree <= 1)")
    lhs = h.compose(mu)
    if lhs != c * c * h:
        raise CremonaError("mu does not normalise h: h(mu) != c^2 h")

    def as_bivar(coeffs, ypow):
        return {(i, ypow): Fraction(v) for i, v in enumerate(coeffs) if v}

    nx = as_bivar(list(mu.num), 0)
    dx = as_bivar(list(mu.den), 0)
    ny = as_bivar([eps * Fraction(v) for v in c.num], 1)
    dy = as_bivar(list(c.den), 0)
    out = AffineMap2(nx, dx, ny, dy)
    from .curve import affine_preserves

    if not affine_preserves(out, hyperelliptic_affine_equation(h)):
        raise CremonaError("lifted map fails to preserve y^2 - h")
    return out


# -- chord-tangent group law ----------------------------------------------------


@dataclass(frozen=True)
class CubicWithOrigin:
    E: HomPoly
    o: Point

    def __post_init__(self):
        if self.E.degree != 3:
            raise ValueError("need a cubic")
        if evaluate(self.E, self.o) != 0:
            raise ValueError("origin must lie on the cubic")
        if all(evaluate(self.E.partial(v), self.o) == 0 for v in "xyz"):
            raise ValueError("origin must be a smooth point")


def _tangent_partner(e: HomPoly, p: Point) -> Point:
    grad = [evaluate(e.partial(v), p) for v in "xyz"]
    if not any(grad):
        raise CremonaError(f"cubic is singular at {p}")
    # a point on the tangent line independent from p
    candidates = [
        Point(grad[1] - grad[2], grad[2] - grad[0], grad[0] - grad[1])
        if any((grad[1] - grad[2], grad[2] - grad[0], grad[0] - grad[1]))
        else None,
        Point(-grad[1], grad[0], 0) if grad[0] or grad[1] else None,
        Point(0, -grad[2], grad[1]) if grad[1] or grad[2] else None,
        Point(-grad[2], 0, grad[0]) if grad[0] or grad[2] else None,
    ]
    for u in candidates:
        if u is not None and u != p:
            return u
    raise CremonaError("could not span the tangent line")


def cubic_third(e: HomPoly, p: Point, q: Point) -> Point:
    """Third intersection of the chord (or tangent when p = q) with the cubic."""
    if e.degree != 3:
        raise ValueError("need a cubic")
    if evaluate(e, p) != 0 or evaluate(e, q) != 0:
        raise ValueError("chord endpoints must lie on the cubic")
    if p == q:
        u = _tangent_partner(e, p)
        r = restrict_to_line(e, p, u)
        if r.is_zero:
            raise CremonaError("tangent line lies inside the cubic; reducible")
        c = r.coeffs  # c[k] multiplies s^k t^(3-k); s along p
        if c[3] != 0 or c[2] != 0:
            raise CremonaError("tangency data inconsistent")
        if c[1] == 0 and c[0] == 0:
            raise CremonaError("tangent line lies inside the cubic")
        s, t = c[0], -c[1]
        base, other = p, u
    else:
        r = restrict_to_line(e, p, q)
        if r.is_zero:
            raise CremonaError("chord lies inside the cubic; reducible")
        c = r.coeffs
        if c[3] != 0 or c[0] != 0:
            raise CremonaError("chord endpoints inconsistent")
        if c[1] == 0 and c[2] == 0:
            raise CremonaError("chord lies inside the cubic")
        s, t = c[1], -c[2]
        base, other = p, q
    return Point(
        s * base[0] + t * other[0],
        s * base[1] + t * other[1],
        s * base[2] + t * other[2],
    )


def cubic_neg(e: HomPoly, o: Point, q: Point) -> Point:
    return cubic_third(e, q, cubic_third(e, o, o))


def cubic_add(e: HomPoly, o: Point, p: Point, q: Point) -> Point:
    return cubic_third(e, cubic_third(e, p, q), o)


def cubic_mul(e: HomPoly, o: Point, n: int, p: Point) -> Point:
    if n < 0:
        return cubic_mul(e, o, -n, cubic_neg(e, o, p))
    acc = o
    for _ in range(n):
        acc = cubic_add(e, o, acc, p)
    return acc


# -- pencils of cubics and the ninth point ---------------------------------------


class _ProjectionCollision(Exception):
    pass


def _linear_form(a, b):
    """The form a*y - b*x? no: the line of points with (x : y) = (a : b)."""
    # points (x : y : *) proportional to (a : b): b*x - a*y = 0
    terms = {}
    if b:
        terms[(1, 0, 0)] = Fraction(b)
    if a:
        terms[(0, 1, 0)] = -Fraction(a)
    return HomPoly(1, terms, _validated=True)


def _ninth_core(c1: HomPoly, c2: HomPoly, known):
    from .arith import resultant

    for c in (c1, c2):
        if evaluate(c, Point(0, 0, 1)) == 0:
            raise _ProjectionCollision("projection centre lies on a generator")
    projections = []
    for p in known:
        if p == Point(0, 0, 1):
            raise _ProjectionCollision("a base point is the projection centre")
        projections.append((p[0], p[1]))
    for i in range(len(projections)):
        for j in range(i + 1, len(projections)):
            a, b = projections[i], projections[j]
            if a[0] * b[1] == a[1] * b[0]:
                raise _ProjectionCollision("two base points share a projection")
    r = resultant(c1, c2, "z")
    if r.is_zero or r.degree != 9:
        raise _ProjectionCollision("degenerate resultant")
    for (a, b) in projections:
        try:
            r = exact_div(r, _linear_form(a, b))
        except NotDivisible:
            raise _ProjectionCollision("known root division failed") from None
    if r.degree != 1:
        raise _ProjectionCollision("unexpected residual degree")
    # residual linear form u*x + v*y vanishes at (x : y) = (v : -u)
    u = Fraction(r.terms.get((1, 0, 0), 0))
    v = Fraction(r.terms.get((0, 1, 0), 0))
    x9, y9 = v, -u
    rest1 = uni.trim(
        [evaluate_along(c1, x9, y9, k) for k in range(4)]
    )
    rest2 = uni.trim(
        [evaluate_along(c2, x9, y9, k) for k in range(4)]
    )
    if not rest1 or not rest2:
        raise _ProjectionCollision("fibre line lies inside a generator")
    g = uni.gcd_q(rest1, rest2)
    candidates = []
    if uni.degree(g) >= 1:
        for t in uni.rational_roots(g):
            candidates.append(Point(x9, y9, t))
    far = Point(x9, y9, 0)
    if evaluate(c1, far) == 0 and evaluate(c2, far) == 0:
        candidates.append(far)
    fresh = [
        p
        for p in candidates
        if p not in known and evaluate(c1, p) == 0 and evaluate(c2, p) == 0
    ]
    fresh = sorted(set(fresh), key=lambda p: tuple(map(str, p.coords)))
    if len(fresh) != 1:
        raise _ProjectionCollision(f"{len(fresh)} candidate ninth points")
    return fresh[0]


def evaluate_along(f: HomPoly, x0, y0, zpow: int):
    """Coefficient of z^zpow in f(x0, y0, z)."""
    acc = Fraction(0)
    for (a, b, c), coeff in f.terms.items():
        if c == zpow:
            acc += Fraction(coeff) * Fraction(x0) ** a * Fraction(y0) ** b
    return acc


def pencil_ninth_point(points8, seed: int = DEFAULT_SEED) -> Point:
    """The ninth base point of the pencil of cubics through eight points.

    Resultant projection from a coordinate centre with all eight known
    roots divided out; retried through a random linear change of
    coordinates whenever projections collide.  The extracted point is
    verified against both generators.
    """
    if len(points8) != 8 or len(set(points8)) != 8:
        raise ValueError("need 8 distinct points")
    system = linear_system(3, [(p, 1) for p in points8])
    if system.vector_dimension != 2:
        raise NonPencil(
            f"cubics through the points have dimension {system.vector_dimension}, not 2"
        )
    c1, c2 = system.basis
    rng = random.Random(seed)
    for attempt in range(24):
        if attempt == 0:
            mat = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        else:
            mat = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        if _linalg.mat_inverse(mat) is None:
            continue
        t_map = linear_map(mat)
        t_inv = linear_map(_linalg.mat_inverse(mat))
        moved = [apply_map(t_map, p) for p in points8]
        m1 = substitute(c1, t_inv.components)
        m2 = substitute(c2, t_inv.components)
        try:
            ninth_moved = _ninth_core(m1, m2, moved)
        except _ProjectionCollision:
            continue
        ninth = apply_map(t_inv, ninth_moved)
        if evaluate(c1, ninth) != 0 or evaluate(c2, ninth) != 0:
            raise CremonaError("extracted ninth point fails verification")
        return ninth
    raise CremonaError("no usable projection found for the ninth point")


# -- Geiser ------------------------------------------------------------------------


def geiser_point(points7, q: Point, seed: int = DEFAULT_SEED) -> Point:
    """Image of q under the Geiser involution of seven general points."""
    if len(points7) != 7 or len(set(points7)) != 7:
        raise ValueError("need 7 distinct points")
    if q in points7:
        raise ValueError("q must differ from the seven base points")
    net = linear_system(3, [(p, 1) for p in points7])
    if net.vector_dimension != 3:
        raise NonPencil("cubics through the seven points do not form a net")
    return pencil_ninth_point(list(points7) + [q], seed=seed)


def _sample_grid(rng, bound=12):
    while True:
        yield Point(rng.randint(-bound, bound), rng.randint(-bound, bound), 1)


def geiser_map(points7, seed: int = DEFAULT_SEED) -> CremonaMap:
    """Degree-8 Geiser involution of seven rational points in general position.

    The octic net with triple points gives the involution up to a linear
    automorphism; the automorphism is calibrated on four samples of the
    pointwise involution and verified on four more, aborting on any
    mismatch.
    """
    octics = linear_system(8, [(p, 3) for p in points7])
    if octics.vector_dimension != 3:
        raise NonPencil(
            f"octic system has dimension {octics.vector_dimension}; "
            "points not in general position"
        )
    rho = make_map(list(octics.basis), seed=seed)
    if rho.degree != 8:
        raise CremonaError("octic net degenerated after cancellation")
    rng = random.Random(seed)
    samples = []
    gen = _sample_grid(rng)
    guard = 0
    while len(samples) < 8:
        guard += 1
        if guard > 600:
            raise CalibrationError("not enough usable calibration samples")
        q = next(gen)
        if q in points7 or any(q == s[0] for s in samples):
            continue
        try:
            img = geiser_point(points7, q, seed=seed)
            via_rho = apply_map(rho, q)
        except (CremonaError, NonPencil, ValueError):
            continue
        samples.append((q, via_rho, img))
    cal, check = samples[:4], samples[4:]
    a_mat = _linalg.projectivity_from_frames(
        [s[1] for s in cal], [s[2] for s in cal]
    )
    if a_mat is None:
        raise CalibrationError("calibration quadruples are degenerate")
    a_map = linear_map(a_mat)
    g = compose(a_map, rho, seed=seed)
    for q, _via, img in check:
        if apply_map(g, q) != img:
            raise CalibrationError("verification samples disagree; aborting")
    return g


# -- Bertini -------------------------------------------------------------------------


def _pencil_member_through(points8, q: Point, seed: int):
    system = linear_system(3, [(p, 1) for p in points8])
    if system.vector_dimension != 2:
        raise NonPencil("cubics through the points do not form a pencil")
    c1, c2 = system.basis
    v1, v2 = evaluate(c1, q), evaluate(c2, q)
    if v1 == 0 and v2 == 0:
        return None  # q is a base point of the pencil
    member = c1 * v2 - c2 * v1
    return member.canonical()


def _rational_singular_points(f: HomPoly, seed: int):
    partials = [f.partial(v) for v in "xyz"]
    nonzero = [p for p in partials if not p.is_zero]
    if len(nonzero) < 2:
        raise SingularMember("degenerate member: too few nonzero partials")
    return rational_common_zeros(nonzero, seed=seed)


def bertini_point(points8, q: Point, seed: int = DEFAULT_SEED) -> Point:
    """Image of q under the Bertini involution of eight general points.

    Fiberwise inversion: q lies on a unique member of the cubic pencil,
    and the image is the group-law negative with the ninth base point as
    origin.  Points on singular members are refused.
    """
    if len(points8) != 8 or len(set(points8)) != 8:
        raise ValueError("need 8 distinct points")
    if q in points8:
        raise ValueError("q must differ from the eight base points")
    p9 = pencil_ninth_point(points8, seed=seed)
    if q == p9:
        return p9  # neg(o) = o: the ninth base point is fixed
    member = _pencil_member_through(points8, q, seed)
    if member is None:
        raise CremonaError("q is an unexpected base point of the pencil")
    try:
        singular = _rational_singular_points(member, seed)
    except ValueError:
        raise SingularMember("pencil member through q is singular") from None
    if singular:
        raise SingularMember(
            f"pencil member through q is singular at {singular[0]}"
        )
    return cubic_neg(member, p9, q)


def bertini_point_net_oracle(points8, q: Point, seed: int = DEFAULT_SEED) -> Point:
    """Independent tenth-base-point computation through the sextic net.

    Builds the net of sextics with double points at the eight points and
    passing through q, then extracts the rational base locus directly;
    the unique extra point is the Bertini image of q.
    """
    net = linear_system(6, [(p, 2) for p in points8] + [(q, 1)])
    if net.vector_dimension != 3:
        raise NonPencil(
            f"sextic net has dimension {net.vector_dimension}, expected 3"
        )
    locus = rational_common_zeros(list(net.basis), seed=seed)
    known = set(points8) | {q}
    extra = [p for p in locus if p not in known]
    if len(extra) != 1:
        raise CremonaError(
            f"sextic-net base locus has {len(extra)} extra rational points"
        )
    return extra[0]


# -- quadratic elements of Dec(smooth cubic) --------------------------------------


def quadratic_dec_element(
    cubic: CubicWithOrigin,
    p: Point,
    q: Point,
    anchor: Point,
    seed: int = DEFAULT_SEED,
) -> CremonaMap:
    """Quadratic transformation preserving a smooth cubic.

    Base points are p, q and r = 3*anchor - p - q in the group law of the
    curve, which makes the image cubic linearly equivalent to the curve
    over the rationals.  The linear correction is calibrated from point
    samples and certified by exact divisibility of the pullback; the
    restriction of the returned map to the cubic is the translation by
    ``anchor`` (or its inverse composed with negation, whichever
    certifies first).
    """
    e, o = cubic.E, cubic.o
    for w in (p, q, anchor):
        if evaluate(e, w) != 0:
            raise ValueError(f"{w} does not lie on the cubic")
    three_a = cubic_mul(e, o, 3, anchor)
    r = cubic_add(e, o, three_a, cubic_neg(e, o, cubic_add(e, o, p, q)))
    base = [p, q, r]
    if len(set(base)) != 3:
        raise CremonaError("degenerate base triple; vary p, q or anchor")
    det = _det3([list(w.coords) for w in base])
    if det == 0:
        raise CremonaError("base points are collinear; choose other inputs")
    # frame completion: a fourth point off the three lines
    rng = random.Random(seed)
    frame_mat = None
    for _ in range(200):
        s = Point(rng.randint(-9, 9), rng.randint(-9, 9), 1)
        frame_mat = _linalg.projectivity_from_frames(
            base + [s], [Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1), Point(1, 1, 1)]
        )
        if frame_mat is not None:
            break
    if frame_mat is None:
        raise CremonaError("could not complete the base triple to a frame")
    t_map = linear_map(frame_mat)
    tau = make_map(
        [
            HomPoly.from_terms({(0, 1, 1): 1}),
            HomPoly.from_terms({(1, 0, 1): 1}),
            HomPoly.from_terms({(1, 1, 0): 1}),
        ]
    )
    phi0 = compose(tau, t_map, seed=seed)
    # sample points on the cubic through the group law
    pool = []
    seen = {p, q, r}
    combos = [
        (1, 0, 1), (0, 1, 1), (1, 1, 1), (2, 0, 0), (0, 2, 0), (1, -1, 1),
        (-1, 1, 1), (2, 1, 0), (1, 2, 0), (-1, 0, 2), (0, -1, 2), (2, 0, 1),
        (0, 2, 1), (-2, 1, 1), (1, 1, -1), (3, 0, 0), (0, 3, 0), (1, 0, -1),
    ]
    for (np_, nq, na) in combos:
        w = cubic_add(
            e,
            o,
            cubic_add(e, o, cubic_mul(e, o, np_, p), cubic_mul(e, o, nq, q)),
            cubic_mul(e, o, na, anchor),
        )
        if w not in seen:
            seen.add(w)
            pool.append(w)
        if len(pool) >= 10:
            break
    if len(pool) < 8:
        raise CalibrationError("not enough distinct sample points on the cubic")

    laws = [
        lambda w: cubic_add(e, o, w, anchor),
        lambda w: cubic_neg(e, o, cubic_add(e, o, w, anchor)),
        lambda w: cubic_add(e, o, w, cubic_neg(e, o, anchor)),
        lambda w: cubic_neg(e, o, cubic_add(e, o, w, cubic_neg(e, o, anchor))),
    ]
    for law in laws:
        try:
            sources = [apply_map(phi0, w) for w in pool[:8]]
            targets = [law(w) for w in pool[:8]]
        except CremonaError:
            continue
        a_mat = _linalg.projectivity_from_frames(sources[:4], targets[:4])
        if a_mat is None:
            continue
        psi = compose(linear_map(a_mat), phi0, seed=seed)
        if any(apply_map(psi, s) != t for s, t in zip(pool[4:8], targets[4:])):
            continue
        try:
            exact_div(substitute(e, psi.components), e)
        except NotDivisible:
            continue
        if psi.degree != 2:
            continue
        return psi
    raise CalibrationError("no restriction law certified; inputs too special")


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
