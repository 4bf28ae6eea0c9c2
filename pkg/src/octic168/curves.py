"""Plane-curve computations on the two symmetry planes.

Restrictions of the surface to E_0 / E_1, divisor decompositions of the
plane-product part, reduction of the even octic curves to quartics in
squared coordinates, and the exact enumeration machinery on quartics:
singular points, axis contacts, component splitting, conic degeneracy
and irreducibility by projection from a node.

Enumeration strategy: pairwise resultants of the partials bound the
candidate first coordinates; candidates are identified exactly in
Q(sqrt2) (fibers then live in at most quadratic tower extensions), and
leftover eliminant roots are dismissed only through rational interval
certificates.  Anything that cannot be identified or dismissed raises
UnidentifiedSingularityError: completeness failures are loud.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import QSqrt2, sig, sqrt_or_extend
from .boxcert import no_common_zero_over_interval
from .mpoly import MPoly, NotDivisibleError, resultant
from .realroots import qsqrt2_roots, sturm_isolate
from .upoly import UPoly

VARS_E0 = ("x", "z", "w")
VARS_E1 = ("y", "z", "w")
VARS_QUARTIC = ("X", "Z", "W")


class UnidentifiedSingularityError(ArithmeticError):
    """An enumeration root could be neither identified nor dismissed."""

    def __init__(self, message, intervals=()):
        super().__init__(message)
        self.intervals = tuple(intervals)


class RepeatedComponentError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneCurve:
    poly: MPoly  # 3 variables, homogeneous
    plane: str   # "E0" or "E1"

    def __post_init__(self):
        if self.poly.is_homogeneous() is None:
            raise ValueError("plane curve must be homogeneous")


@dataclass(frozen=True)
class DivisorDecomposition:
    components: tuple  # ((linear form MPoly, multiplicity), ...)
    scalar: QSqrt2
    residual: MPoly

    def reassemble(self) -> MPoly:
        acc = self.residual.scale(self.scalar)
        for form, mult in self.components:
            acc = acc * form ** mult
        return acc

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.components)


@dataclass(frozen=True)
class QuarticCurve:
    poly: MPoly       # degree 4 in (X, Z, W) over Q(sqrt2)
    source_plane: str  # "E0" or "E1"

    def __post_init__(self):
        if self.poly.is_homogeneous() != 4:
            raise ValueError("quartic curve must be homogeneous of degree 4")


@dataclass(frozen=True)
class SpecialPoint:
    kind: str            # "node" or "contact"
    coords: tuple        # projective (X : Z : W), exact scalars
    axis: str | None = None   # for contacts: "Z" or "W" (the line {axis = 0})
    label: str | None = None

    def normalized(self) -> tuple:
        from .surface import normalize_projective

        return normalize_projective(self.coords)

    def with_label(self, label: str) -> "SpecialPoint":
        return SpecialPoint(self.kind, self.coords, self.axis, label)


@dataclass
class SingularEnumeration:
    points: list
    complex_pairs: int = 0
    notes: list = field(default_factory=list)


@dataclass
class ContactEnumeration:
    contacts: list
    vertex_contacts: list = field(default_factory=list)
    higher_tangency: list = field(default_factory=list)
    complex_pairs: int = 0


# ---------------------------------------------------------------------------
# restriction, divisors, Segre reduction


def restrict(surface_poly: MPoly, plane: str) -> PlaneCurve:
    """Restrict a 4-variable form to a symmetry plane.

    E0 is y = 0 with coordinates (x : z : w); E1 is x = (1+sqrt2) y with
    coordinates (y : z : w).
    """
    if surface_poly.arity != 4:
        raise ValueError("expected a polynomial in (x, y, z, w)")
    if plane == "E0":
        cut = surface_poly.substitute(1, MPoly.zero(4)).drop_var(1)
        return PlaneCurve(MPoly(3, cut.terms, VARS_E0), "E0")
    if plane == "E1":
        y = MPoly.variable(1, 4)
        img = MPoly.constant(4, QSqrt2(1, 1)) * y
        cut = surface_poly.substitute(0, img).drop_var(0)
        return PlaneCurve(MPoly(3, cut.terms, VARS_E1), "E1")
    raise ValueError(f"unknown plane {plane!r}")


def divisor_decompose(curve, expected_forms: list[MPoly]) -> DivisorDecomposition:
    """Exact multiplicities of the expected linear factors.

    Divides each expected form out as often as it goes; a form that does
    not divide at all is an error naming it.  The residual after all
    factors must be a constant for the plane-product restrictions.
    """
    poly = curve.poly if isinstance(curve, PlaneCurve) else curve
    rem = poly
    comps = []
    for form in expected_forms:
        mult = 0
        while True:
            try:
                rem = rem.exact_div(form)
                mult += 1
            except NotDivisibleError:
                break
        if mult == 0:
            raise NotDivisibleError(f"expected factor {form.to_text()} does not divide")
        comps.append((form, mult))
    if rem.total_degree() == 0:
        scalar = QSqrt2.of(next(iter(rem.terms.values())))
        residual = MPoly.constant(poly.arity, QSqrt2(1), poly.names)
    else:
        scalar = QSqrt2(1)
        residual = rem
    deco = DivisorDecomposition(tuple(comps), scalar, residual)
    if deco.reassemble() != poly:
        raise ArithmeticError("divisor decomposition does not reassemble")
    return deco


def segre_reduce(curve: PlaneCurve) -> QuarticCurve:
    """Halve all exponents of an even curve: G(X, Z, W) with
    G(x^2, z^2, w^2) equal to the input."""
    poly = curve.poly
    for v in range(3):
        if any(e[v] % 2 for e in poly.terms):
            raise ValueError(
                f"curve is not even in {poly.var_name(v)}; "
                "the z-odd parameters (c, f, h) must vanish"
            )
    terms = {tuple(e // 2 for e in exps): c for exps, c in poly.terms.items()}
    return QuarticCurve(MPoly(3, terms, VARS_QUARTIC), curve.plane)


def segre_expand(q: QuarticCurve) -> MPoly:
    """Substitute squared coordinates back; round-trip partner of
    segre_reduce."""
    terms = {tuple(e * 2 for e in exps): c for exps, c in q.poly.terms.items()}
    names = VARS_E0 if q.source_plane == "E0" else VARS_E1
    return MPoly(3, terms, names)


# ---------------------------------------------------------------------------
# root solving over Q(sqrt2) with quadratic tower fallback


def solve_quadratic(c0, c1, c2):
    """Roots of c2 t^2 + c1 t + c0 over Q(sqrt2), extending to a tower
    when the discriminant is a positive non-square.

    Returns (real_roots, complex_pair_count).
    """
    c0, c1, c2 = QSqrt2.of(c0), QSqrt2.of(c1), QSqrt2.of(c2)
    disc = c1 * c1 - 4 * c2 * c0
    s = disc.sign()
    if s < 0:
        return [], 1
    if s == 0:
        return [-c1 / (2 * c2)], 0
    root, fld = sqrt_or_extend(disc)
    if fld.depth == 0:
        r = root if isinstance(root, QSqrt2) else root.as_qsqrt2()
        return [(-c1 + r) / (2 * c2), (-c1 - r) / (2 * c2)], 0
    c1e = fld.element(c1)
    c2e = fld.element(c2)
    return [(-c1e + root) / (2 * c2e), (-c1e - root) / (2 * c2e)], 0


def solve_upoly_roots(h: UPoly):
    """All real roots of a Q(sqrt2)-polynomial in towers of depth <= 1,
    with multiplicities; counts complex conjugate pairs.

    Raises UnidentifiedSingularityError when a factor of degree >= 3
    with real roots survives identification (tower depth cap).
    """
    roots = []
    complex_pairs = 0
    for factor, mult in h.map_coeffs(QSqrt2.of).squarefree_decomposition():
        if factor.degree == 1:
            roots.append((-factor.coeffs[0] / factor.coeffs[1], mult))
            continue
        if factor.degree == 2:
            rr, cp = solve_quadratic(*factor.coeffs)
            roots.extend((r, mult) for r in rr)
            complex_pairs += cp * mult
            continue
        found, residual = qsqrt2_roots(factor)
        roots.extend((r, mult) for r, _ in found)
        if residual.degree == 2:
            rr, cp = solve_quadratic(*residual.coeffs)
            roots.extend((r, mult) for r in rr)
            complex_pairs += cp * mult
        elif residual.degree > 0:
            iso = sturm_isolate(residual)
            if iso:
                raise UnidentifiedSingularityError(
                    "real root beyond supported quadratic towers",
                    [(r.lo, r.hi) for r in iso],
                )
            complex_pairs += (residual.degree // 2) * mult
    return roots, complex_pairs


# ---------------------------------------------------------------------------
# singular point enumeration on a quartic


def _line_restriction(poly: MPoly, base, direction) -> UPoly:
    point = [UPoly((QSqrt2.of(a), QSqrt2.of(b))) for a, b in zip(base, direction)]
    return poly.evaluate(point)


def _squarefree_precheck(g: MPoly):
    lines = [
        ((1, 0, 1), (0, 1, 2)),
        ((0, 1, 1), (1, 2, 0)),
    ]
    bad = 0
    for base, direction in lines:
        u = _line_restriction(g, base, direction)
        if u.is_zero() or u.degree <= 0:
            bad += 1
            continue
        if u.gcd(u.derivative()).degree > 0:
            bad += 1
    if bad == len(lines):
        raise RepeatedComponentError("curve appears to carry a repeated component")


def _fiber_upoly(p: MPoly, x_value) -> UPoly:
    """p(x_value, z) as a dense polynomial in z (p has variables x, z)."""
    return p.evaluate((x_value, UPoly.x()))


def _upoly_gcd_many(polys: list[UPoly]) -> UPoly:
    acc = None
    for p in polys:
        if p.is_zero():
            continue
        acc = p if acc is None else acc.gcd(p)
    if acc is None:
        raise RepeatedComponentError("all polynomials vanish identically")
    return acc.monic()


def _finite_singulars(partials_chart: list[MPoly]) -> SingularEnumeration:
    """Common zeros of the three dehomogenized partials (variables x, z)."""
    eliminants: list[UPoly] = []
    zdeg = [p.degree_in(1) for p in partials_chart]
    for i in range(3):
        for j in range(i + 1, 3):
            if zdeg[i] >= 1 and zdeg[j] >= 1:
                r = resultant(partials_chart[i], partials_chart[j], 1)
                eliminants.append(r.to_upoly(0))
    for p, d in zip(partials_chart, zdeg):
        if d <= 0 and not p.is_zero():
            eliminants.append(p.to_upoly(0))
        elif p.is_zero():
            raise RepeatedComponentError("a partial derivative vanishes identically")
    nonzero = [e for e in eliminants if not e.is_zero()]
    if not nonzero:
        raise RepeatedComponentError("all pairwise eliminants vanish identically")
    g = _upoly_gcd_many(nonzero)
    out = SingularEnumeration(points=[])
    if g.degree <= 0:
        return out
    identified, residual = qsqrt2_roots(g)
    if residual.degree > 0:
        spurious = sturm_isolate(residual)
        for iso in spurious:
            iso = iso.refine(Fraction(1, 1 << 16))
            if not no_common_zero_over_interval(partials_chart, iso.lo, iso.hi):
                raise UnidentifiedSingularityError(
                    "eliminant root outside Q(sqrt2) could not be dismissed",
                    [(iso.lo, iso.hi)],
                )
        if spurious:
            out.notes.append(f"dismissed {len(spurious)} spurious eliminant roots")
    for x_star, _ in identified:
        fibers = [_fiber_upoly(p, x_star) for p in partials_chart]
        if all(f.is_zero() for f in fibers):
            raise RepeatedComponentError("one-dimensional singular fiber")
        h = _upoly_gcd_many(fibers)
        if h.degree <= 0:
            continue
        roots, cp = solve_upoly_roots(h)
        out.complex_pairs += cp
        for z_star, _ in roots:
            out.points.append(SpecialPoint("node", (x_star, z_star, QSqrt2(1))))
    return out


def _infinite_singulars(quartic: MPoly) -> SingularEnumeration:
    """Singular points on the line W = 0."""
    forms = []
    for v in range(3):
        b = quartic.partial(v).substitute(2, MPoly.zero(3)).drop_var(2)
        forms.append(b)
    if all(f.is_zero() for f in forms):
        raise RepeatedComponentError("curve is singular along the whole line W = 0")
    out = SingularEnumeration(points=[])
    charted = []
    for f in forms:
        if f.is_zero():
            charted.append(UPoly())
        else:
            charted.append(f.evaluate((UPoly.x(), QSqrt2(1))))
    nonzero = [u for u in charted if not u.is_zero()]
    if nonzero:
        g = _upoly_gcd_many(nonzero)
        if g.degree > 0:
            roots, cp = solve_upoly_roots(g)
            out.complex_pairs += cp
            for x_star, _ in roots:
                out.points.append(SpecialPoint("node", (x_star, QSqrt2(1), QSqrt2(0))))
    else:
        raise RepeatedComponentError("partials vanish along W = 0 chart")
    # the remaining point of the line: (1 : 0 : 0)
    vertex = (QSqrt2(1), QSqrt2(0), QSqrt2(0))
    if all(not quartic.partial(v).evaluate(vertex) for v in range(3)):
        out.points.append(SpecialPoint("node", vertex))
    return out


def singular_points(quartic: QuarticCurve) -> SingularEnumeration:
    """The complete real singular locus of a squarefree quartic.

    Complex singular points are only counted (through fiber quadratics
    with negative discriminant); coordinates beyond depth-2 towers fail
    loudly instead of degrading silently.
    """
    g = quartic.poly
    _squarefree_precheck(g)
    chart = [g.partial(v).dehomogenize(2) for v in range(3)]
    finite = _finite_singulars(chart)
    infinite = _infinite_singulars(g)
    pts = finite.points + infinite.points
    for p in pts:
        for v in range(3):
            if g.partial(v).evaluate(p.coords):
                raise ArithmeticError("enumerated point fails the gradient test")
    return SingularEnumeration(
        points=pts,
        complex_pairs=finite.complex_pairs + infinite.complex_pairs,
        notes=finite.notes + infinite.notes,
    )


# ---------------------------------------------------------------------------
# contact points with the coordinate axes


def contact_points(quartic: QuarticCurve, axis: str) -> ContactEnumeration:
    """Tangency points of the quartic with the line {axis = 0}.

    Contacts are the multiplicity-exactly-2 roots of the restricted
    binary quartic away from the coordinate vertices; vertices and
    higher tangencies are reported separately.
    """
    g = quartic.poly
    if axis == "W":
        r = g.substitute(2, MPoly.zero(3)).drop_var(2)     # binary in (X, Z)
        make_point = lambda rho: (rho, QSqrt2(1), QSqrt2(0))
        vertex_far = (QSqrt2(1), QSqrt2(0), QSqrt2(0))     # Z = 0 on the axis
        vertex_zero = (QSqrt2(0), QSqrt2(1), QSqrt2(0))    # X = 0
    elif axis == "Z":
        r = g.substitute(1, MPoly.zero(3)).drop_var(1)     # binary in (X, W)
        make_point = lambda rho: (rho, QSqrt2(0), QSqrt2(1))
        vertex_far = (QSqrt2(1), QSqrt2(0), QSqrt2(0))     # W = 0
        vertex_zero = (QSqrt2(0), QSqrt2(0), QSqrt2(1))    # X = 0
    else:
        raise ValueError("axis must be 'Z' or 'W'")
    if r.is_zero():
        raise ValueError(f"the axis {{{axis} = 0}} is contained in the curve")
    u = r.evaluate((UPoly.x(), QSqrt2(1)))
    out = ContactEnumeration(contacts=[])
    deg_drop = 4 - u.degree
    if deg_drop == 2:
        out.vertex_contacts.append(SpecialPoint("contact", vertex_far, axis))
    elif deg_drop > 2:
        out.higher_tangency.append(SpecialPoint("contact", vertex_far, axis))
    for factor, mult in u.map_coeffs(QSqrt2.of).squarefree_decomposition():
        if mult == 1:
            continue
        roots, cp = solve_upoly_roots(factor)
        if mult == 2:
            out.complex_pairs += cp
        for rho, _ in roots:
            pt = SpecialPoint("contact", make_point(rho), axis)
            if not rho:
                target = out.vertex_contacts if mult == 2 else out.higher_tangency
                target.append(SpecialPoint("contact", vertex_zero, axis))
            elif mult == 2:
                out.contacts.append(pt)
            else:
                out.higher_tangency.append(pt)
    return out


# ---------------------------------------------------------------------------
# component splitting


@dataclass(frozen=True)
class ComponentSplit:
    components: tuple  # ((MPoly factor, multiplicity), ...)
    scalar: QSqrt2

    def reassemble(self, arity=3, names=VARS_QUARTIC) -> MPoly:
        acc = MPoly.constant(arity, self.scalar, names)
        for f, m in self.components:
            acc = acc * f ** m
        return acc

    def degrees(self) -> tuple[int, ...]:
        out = []
        for f, m in self.components:
            out.extend([f.total_degree()] * m)
        return tuple(sorted(out))


def _cross(p, q):
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def _line_from_coeffs(coeffs) -> MPoly | None:
    if not any(coeffs):
        return None
    lead = next(v for v in coeffs if v)
    inv = 1 / lead
    norm = tuple(inv * c for c in coeffs)
    terms = {}
    for i, c in enumerate(norm):
        if c:
            e = [0, 0, 0]
            e[i] = 1
            terms[tuple(e)] = c
    return MPoly(3, terms, VARS_QUARTIC)


def hessian3_at(g: MPoly, point):
    """3x3 matrix of second partials evaluated at a point."""
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            row.append(g.partial(i).partial(j).evaluate(point))
        rows.append(row)
    return rows


def _quad_form(h, v):
    acc = None
    for i in range(3):
        for j in range(3):
            term = h[i][j] * v[i] * v[j]
            acc = term if acc is None else acc + term
    return acc


def _to_qsqrt2_scalar(v) -> QSqrt2:
    if isinstance(v, (int, Fraction, QSqrt2)):
        return QSqrt2.of(v)
    d = v.descend()
    if isinstance(d, QSqrt2):
        return d
    raise TypeError("value does not descend to Q(sqrt2)")


def _tangent_cone_lines(g: MPoly, p) -> list[MPoly]:
    """Tangent lines of the curve at a singular point: directions where
    the Hessian quadratic form vanishes.

    Directions are parametrized as a + t b with (p, a, b) a projective
    frame, plus the direction b itself when the t^2 coefficient dies.
    Cones whose quadratic leaves Q(sqrt2) are skipped (candidates only).
    """
    h = hessian3_at(g, p)
    a, b = _projection_frame(p)
    c2 = _quad_form(h, b)
    c0 = _quad_form(h, a)
    c1 = None
    for i in range(3):
        for j in range(3):
            term = h[i][j] * (a[i] * b[j] + b[i] * a[j])
            c1 = term if c1 is None else c1 + term
    try:
        poly = UPoly([_to_qsqrt2_scalar(c) for c in (c0, c1, c2)])
    except TypeError:
        return []
    directions = []
    if poly.is_zero():
        return []
    if poly.degree >= 1:
        roots, _ = solve_upoly_roots(poly)
        directions = [tuple(a[i] + t * b[i] for i in range(3)) for t, _ in roots]
    if not c2:
        directions.append(b)
    lines = []
    for d in directions:
        line = _line_from_coeffs(_cross(p, d))
        if line is not None:
            lines.append(line)
    return lines


def _try_divide_out(g: MPoly, factor: MPoly):
    mult = 0
    while True:
        try:
            g = g.exact_div(factor)
            mult += 1
        except NotDivisibleError:
            break
    return g, mult


def split_components(quartic: QuarticCurve, singulars=None) -> ComponentSplit:
    """Factor a quartic into lines, conics and a possible irreducible rest.

    Linear factors come from tangent-cone directions at singular points
    and lines through singular-point pairs; a residual quartic is split
    into two conics through the pencil over four base points when such a
    split exists.  An inconclusive residual is returned whole (the
    projection-based irreducibility check is the authoritative verdict).
    """
    g = quartic.poly
    if singulars is None:
        singulars = singular_points(quartic).points
    pts = [s.coords for s in singulars]
    comps = []
    candidates: list[MPoly] = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            line = _line_from_coeffs(_cross(pts[i], pts[j]))
            if line is not None:
                candidates.append(line)
    for p in pts:
        candidates.extend(_tangent_cone_lines(g, p))
    seen = []
    for line in candidates:
        if any(line == s for s in seen):
            continue
        seen.append(line)
        g, mult = _try_divide_out(g, line)
        if mult:
            comps.append((line, mult))
    deg = g.total_degree()
    if deg == 0:
        scalar = QSqrt2.of(next(iter(g.terms.values()))) if g.terms else QSqrt2(0)
        return ComponentSplit(tuple(comps), scalar)
    lead, prim = g.content_scaled_primitive()
    if deg == 1:
        comps.append((prim, 1))
        return _finish_split(quartic, comps, QSqrt2.of(lead))
    if deg == 2:
        det = conic_nondegenerate(prim)
        if det:
            comps.append((prim, 1))
            return _finish_split(quartic, comps, QSqrt2.of(lead))
        for part in _split_degenerate_conic(prim):
            g2, mult = _try_divide_out(prim, part)
            comps.append((part, mult))
            prim = g2
        if prim.total_degree() != 0:
            raise ArithmeticError("degenerate conic did not split into lines")
        extra = next(iter(prim.terms.values()))
        return _finish_split(quartic, comps, QSqrt2.of(lead) * extra)
    if deg == 4:
        pair = _conic_pencil_split(prim, pts)
        if pair is not None:
            comps.extend(((pair[0], 1), (pair[1], 1)))
            return _finish_split(quartic, comps, QSqrt2.of(lead) * pair[2])
    comps.append((prim, 1))
    return _finish_split(quartic, comps, QSqrt2.of(lead))


def _finish_split(quartic, comps, scalar) -> ComponentSplit:
    split = ComponentSplit(tuple(comps), scalar)
    if split.reassemble() != quartic.poly:
        raise ArithmeticError("component split does not reassemble")
    return split


def _split_degenerate_conic(conic: MPoly) -> list[MPoly]:
    """Split a rank-<=2 conic into lines through its singular point."""
    sing = _conic_singular_point(conic)
    lines = _tangent_cone_lines(conic, sing)
    if not lines:
        # rank 1: a double line, proportional to any nonzero partial
        for v in range(3):
            pv = conic.partial(v)
            if not pv.is_zero():
                _, line = pv.content_scaled_primitive()
                if (line * line).divides(conic):
                    return [line]
        raise ArithmeticError("cannot split degenerate conic")
    return lines


def _conic_singular_point(conic: MPoly):
    """Solve the 3x3 linear gradient system of a degenerate conic."""
    m = conic_matrix(conic)
    # kernel vector of the symmetric matrix by cross products of two rows
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            v = _cross(tuple(m[i]), tuple(m[j]))
            if any(v):
                if all(not e for e in _mat_vec(m, v)):
                    return tuple(QSqrt2.of(c) if isinstance(c, (int, Fraction)) else c for c in v)
    raise ArithmeticError("degenerate conic without computable singular point")


def _mat_vec(m, v):
    return [sum((m[i][k] * v[k] for k in range(3)), QSqrt2(0) * v[0]) for i in range(3)]


def _conic_pencil_split(g: MPoly, sing_pts):
    """Try to write a quartic as a product of two conics in the pencil
    through four of its singular points."""
    if len(sing_pts) < 4:
        return None
    from itertools import combinations

    for quad in combinations(range(len(sing_pts)), 4):
        p1, p2, p3, p4 = (sing_pts[k] for k in quad)
        c_a = _line_poly(p1, p2) * _line_poly(p3, p4)
        c_b = _line_poly(p1, p3) * _line_poly(p2, p4)
        if c_a is None or c_b is None:
            continue
        found = _pencil_member_dividing(g, c_a, c_b)
        if found is not None:
            conic1, quot, scale = found
            return conic1, quot, scale
    return None


def _line_poly(p, q) -> MPoly | None:
    return _line_from_coeffs(_cross(p, q))


def _pencil_member_dividing(g: MPoly, c_a: MPoly, c_b: MPoly):
    """A member c_a + t c_b of the pencil dividing g.

    The division runs once with t symbolic over the rational-function
    field Q(sqrt2)(t); the remainder's coefficient numerators cut out the
    valid parameter values exactly.
    """
    from .upoly import FunFrac

    t_sym = FunFrac(UPoly((QSqrt2(0), QSqrt2(1))))

    def lift(p: MPoly) -> MPoly:
        return MPoly(
            p.arity,
            {e: FunFrac(UPoly((QSqrt2.of(c),))) for e, c in p.terms.items()},
            p.names,
        )

    member_sym = lift(c_a) + _scale_mixed(lift(c_b), t_sym)
    _, rem = _divmod_lt(lift(g), member_sym)
    numerators = [c.num for c in rem.terms.values() if c]
    if not numerators:
        return c_a, g.exact_div(c_a), QSqrt2(1)
    acc = numerators[0]
    for p in numerators[1:]:
        if acc.degree <= 0:
            break
        acc = acc.gcd(p)
    if acc.degree <= 0:
        return None
    roots, _ = solve_upoly_roots(acc)
    for t_star, _ in roots:
        member = c_a + _scale_mixed(c_b, t_star)
        try:
            quot = g.exact_div(member)
        except NotDivisibleError:
            continue
        return member, quot, QSqrt2(1)
    return None


def _scale_mixed(p: MPoly, s) -> MPoly:
    return MPoly(p.arity, {e: s * c for e, c in p.terms.items()}, p.names)


def _divmod_lt(p: MPoly, d: MPoly):
    """Leading-term division with remainder (graded lex)."""
    quot = MPoly.zero(p.arity, p.names)
    rem = MPoly.zero(p.arity, p.names)
    work = p
    dexps, dcoeff = d.leading_term()
    while work.terms:
        rexps, rcoeff = work.leading_term()
        texps = tuple(r - e for r, e in zip(rexps, dexps))
        if any(e < 0 for e in texps):
            t = MPoly(p.arity, {rexps: rcoeff}, p.names)
            rem = rem + t
            work = work - t
            continue
        t = MPoly(p.arity, {texps: rcoeff / dcoeff}, p.names)
        quot = quot + t
        work = work - t * d
    return quot, rem


# ---------------------------------------------------------------------------
# conics


def conic_matrix(conic: MPoly):
    """Symmetric 3x3 matrix; off-diagonal entries are half the mixed
    coefficients (this fixes the determinant scaling convention)."""
    if conic.total_degree() != 2:
        raise ValueError("expected a conic")
    m = [[QSqrt2(0)] * 3 for _ in range(3)]
    for exps, coeff in conic.terms.items():
        idx = [i for i, e in enumerate(exps) for _ in range(e)]
        i, j = idx[0], idx[1]
        if i == j:
            m[i][i] = coeff
        else:
            half = coeff * Fraction(1, 2)
            m[i][j] = half
            m[j][i] = half
    return m


def conic_nondegenerate(conic: MPoly):
    """Determinant of the symmetric matrix; nonzero iff nondegenerate."""
    m = conic_matrix(conic)
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return det


# ---------------------------------------------------------------------------
# irreducibility by projection from a node


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    line_through_node: bool
    discriminant_is_square: bool
    discriminant_profile: tuple


def irreducibility_check(quartic: QuarticCurve, node: SpecialPoint) -> IrreducibilityVerdict:
    """Project from a node: each line through it meets the quartic in two
    residual points; the curve splits iff the double cover splits, i.e.
    iff the fiber discriminant is a square (all odd multiplicities
    vanish), or a line through the node divides.
    """
    g = quartic.poly
    if g.total_degree() != 4:
        raise ValueError("projection method is specific to quartics")
    p = node.coords
    for v in range(3):
        if g.partial(v).evaluate(p):
            raise ValueError("supplied point is not singular on the quartic")
    a_pt, b_pt = _projection_frame(p)
    s, t = MPoly.variables(2, ("s", "t"))
    coords = [
        s.scale(_as_scalar(p[i]))
        + MPoly.constant(2, _as_scalar(a_pt[i]))
        + t.scale(_as_scalar(b_pt[i]))
        for i in range(3)
    ]
    phi = g.evaluate(coords)
    rows = phi.coeffs_wrt(0)
    while len(rows) < 5:
        rows.append(MPoly.zero(1))
    c0, c1, c2, c3, c4 = (r.to_upoly(0) if not r.is_zero() else UPoly() for r in rows)
    if not c4.is_zero() or not c3.is_zero():
        raise ValueError("supplied point is not a double point of the quartic")
    if c2.is_zero():
        raise ValueError("projection frame degenerate: choose different frame")
    disc = c1 * c1 - 4 * c2 * c0
    profile = tuple(
        (f.degree, m) for f, m in disc.squarefree_decomposition()
    )
    is_square = bool(disc.is_zero()) or all(m % 2 == 0 for _, m in disc.squarefree_decomposition())
    cone_lines = _tangent_cone_lines(g, p)
    line_divides = any(line.divides(g) for line in cone_lines)
    return IrreducibilityVerdict(
        irreducible=not line_divides and not is_square,
        line_through_node=line_divides,
        discriminant_is_square=is_square,
        discriminant_profile=profile,
    )


def _as_scalar(v):
    if isinstance(v, (int, Fraction)):
        return QSqrt2.of(v)
    return v


def _projection_frame(p):
    """Two rational points completing the node to a projective frame."""
    basis = [
        (QSqrt2(1), QSqrt2(0), QSqrt2(0)),
        (QSqrt2(0), QSqrt2(1), QSqrt2(0)),
        (QSqrt2(0), QSqrt2(0), QSqrt2(1)),
    ]
    from itertools import combinations

    for a_pt, b_pt in combinations(basis, 2):
        d = _det3_rows(p, a_pt, b_pt)
        if d:
            return a_pt, b_pt
    raise ArithmeticError("no projective frame found")


def _det3_rows(r0, r1, r2):
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


# ---------------------------------------------------------------------------
# the factorization oracle (undetermined coefficients over Q(sqrt2))


@dataclass(frozen=True)
class OracleReport:
    linear_factors: tuple
    conic_split_excluded: bool
    witness_line: int | None

    def came_up_empty(self) -> bool:
        return not self.linear_factors and self.conic_split_excluded


def factorization_oracle(quartic: QuarticCurve) -> OracleReport:
    """Independent search for deg1 x deg3 and deg2 x deg2 factorizations
    over Q(sqrt2).

    The linear search is complete (elimination over the two unknown line
    coefficients in each normalization).  The conic search restricts the
    curve to test lines: a single line whose restricted binary quartic
    admits no Q(sqrt2) quadratic-pair split excludes any conic x conic
    factorization over Q(sqrt2).
    """
    g = quartic.poly
    lines = tuple(_qsqrt2_linear_factors(g))
    split_excluded = False
    witness = None
    for idx, (base, direction) in enumerate(
        [((0, 1, 0), (1, 0, 0)), ((0, 1, 1), (1, 0, 0)), ((0, 1, 2), (1, 0, 0)),
         ((0, 0, 1), (1, 1, 0))]
    ):
        u = _line_restriction(g, base, direction)
        if u.degree != 4:
            continue
        if not _quartic_splits_two_quadratics(u):
            split_excluded = True
            witness = idx
            break
    return OracleReport(
        linear_factors=lines,
        conic_split_excluded=split_excluded,
        witness_line=witness,
    )


def _qsqrt2_linear_factors(g: MPoly) -> list[MPoly]:
    found = []
    # case W: the line W = 0
    w_line = MPoly.variable(2, 3, VARS_QUARTIC)
    if w_line.divides(g):
        found.append(w_line)
    # case Z + gamma W
    found.extend(_solve_single_unknown(g))
    # case X + beta Z + gamma W: full two-unknown elimination
    found.extend(_solve_double_unknown(g))
    uniq = []
    seen = set()
    for line in found:
        key = tuple(sorted((e, str(QSqrt2.of(c))) for e, c in line.terms.items()))
        if key not in seen and line.divides(g):
            seen.add(key)
            uniq.append(line)
    return uniq


def _solve_single_unknown(g: MPoly) -> list[MPoly]:
    """Lines Z + c W = 0: substitute Z -> -c W with c an unknown."""
    # build h(X, W; c) = g(X, -c W, W) as polynomial in (c, X, W)
    out = []
    conds: list[UPoly] = []
    zdeg = g.degree_in(1)
    rows = g.coeffs_wrt(1)  # coefficients of Z^k, polys in (X, W)
    # coefficient of X^a W^b in h is sum_k rows[k][X^a W^(b-k)] * (-c)^k
    monos = {}
    for k, row in enumerate(rows):
        for exps, coeff in row.terms.items():
            a, b = exps
            key = (a, b + k)
            monos.setdefault(key, []).append((k, coeff))
    for key, entries in monos.items():
        coeffs = [QSqrt2(0)] * (zdeg + 1)
        for k, coeff in entries:
            coeffs[k] = coeffs[k] + QSqrt2.of(coeff) * QSqrt2((-1) ** k)
        poly = UPoly(coeffs)
        if not poly.is_zero():
            conds.append(poly)
    if not conds:
        return out
    acc = conds[0]
    for p in conds[1:]:
        if acc.degree <= 0:
            break
        acc = acc.gcd(p)
    if acc.degree <= 0:
        return out
    roots, _ = qsqrt2_roots(acc)
    zvar = MPoly.variable(1, 3, VARS_QUARTIC)
    wvar = MPoly.variable(2, 3, VARS_QUARTIC)
    for c, _ in roots:
        out.append(zvar + wvar.scale(c))
    return out


def _solve_double_unknown(g: MPoly) -> list[MPoly]:
    """Lines X + b Z + c W = 0 via elimination in the two unknowns."""
    # substitute X -> -(b Z + c W); unknowns live as extra variables
    # coefficients of the resulting binary quartic in (Z, W) are
    # polynomials in (b, c): collect them as 2-variable MPolys
    rows = g.coeffs_wrt(0)  # coefficients of X^k, polys in (Z, W)
    cond_terms: dict[tuple, dict] = {}
    for k, row in enumerate(rows):
        # (-(b Z + c W))^k = (-1)^k sum_j C(k, j) b^j c^(k-j) Z^j W^(k-j)
        from math import comb

        for j in range(k + 1):
            coeff_bc = (-1) ** k * comb(k, j)
            for exps, coeff in row.terms.items():
                zz, ww = exps
                target = (zz + j, ww + (k - j))
                bc_exps = (j, k - j)
                bucket = cond_terms.setdefault(target, {})
                cur = bucket.get(bc_exps)
                add = QSqrt2.of(coeff) * QSqrt2(coeff_bc)
                bucket[bc_exps] = add if cur is None else cur + add
    conds = []
    for target, bucket in cond_terms.items():
        poly = MPoly(2, bucket, ("b", "c"))
        if not poly.is_zero():
            conds.append(poly)
    if not conds:
        return []
    # eliminate c pairwise against the first condition with c-degree >= 1
    pivot = next((p for p in conds if p.degree_in(1) >= 1), None)
    b_candidates: set = set()
    if pivot is None:
        # all conditions free of c: solve in b alone
        acc = None
        for p in conds:
            u = p.to_upoly(0)
            acc = u if acc is None else acc.gcd(u)
        if acc is None or acc.degree <= 0:
            return []
        roots, _ = qsqrt2_roots(acc)
        b_candidates = {r for r, _ in roots}
        c_for_b = lambda b: [QSqrt2(0)]
    else:
        acc = None
        for p in conds:
            if p is pivot:
                continue
            if p.degree_in(1) >= 1:
                r = resultant(pivot, p, 1).to_upoly(0)
            else:
                r = p.to_upoly(0)
            if r.is_zero():
                continue
            acc = r if acc is None else acc.gcd(r)
            if acc.degree <= 0:
                break
        if acc is None:
            acc = pivot.coeffs_wrt(1)[-1].to_upoly(0)
        if acc.is_zero() or acc.degree <= 0:
            return []
        roots, _ = qsqrt2_roots(acc)
        b_candidates = {r for r, _ in roots}

        def c_for_b(b):
            fibers = []
            for p in conds:
                u = p.evaluate((b, UPoly.x()))
                if not u.is_zero():
                    fibers.append(u)
            if not fibers:
                return []
            h = fibers[0]
            for u in fibers[1:]:
                if h.degree <= 0:
                    break
                h = h.gcd(u)
            if h.degree <= 0:
                return []
            cr, _ = qsqrt2_roots(h)
            return [r for r, _ in cr]

    xvar, zvar, wvar = MPoly.variables(3, VARS_QUARTIC)
    out = []
    for b in b_candidates:
        for c in c_for_b(b):
            out.append(xvar + zvar.scale(b) + wvar.scale(c))
    return out


def _quartic_splits_two_quadratics(u: UPoly) -> bool:
    """Whether a degree-4 polynomial over Q(sqrt2) factors into two
    quadratics over Q(sqrt2) (resolvent cubic criterion)."""
    u = u.map_coeffs(QSqrt2.of).monic()
    a3 = u.coeffs[3]
    shift = UPoly((-a3 * Fraction(1, 4), QSqrt2(1)))
    dep = u.compose(shift)
    p = dep.coeffs[2]
    q = dep.coeffs[1]
    r = dep.coeffs[0]
    resolvent = UPoly([-(q * q), p * p - 4 * r, 2 * p, QSqrt2(1)])
    roots, _ = qsqrt2_roots(resolvent)
    for y, _ in roots:
        if y == QSqrt2(0):
            if q:
                continue
            disc = p * p - 4 * r
            if disc.sqrt() is not None:
                return True
            continue
        if y.sqrt() is not None:
            return True
    return False
