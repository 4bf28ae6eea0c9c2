"""Node certification and assembly of the surface certificate.

Quartic-level special points are lifted to surface points through square
roots of coordinate ratios (towers of depth at most 2 over Q(sqrt2)),
certified one representative per orbit (gradient zero, Hessian rank 3),
expanded to orbits by the symmetry group, and cross-checked against the
base-locus structure, per-plane exhaustive enumeration, and the
distinguished line.

Hessian convention: dehomogenize at w (at z when w = 0) with the chart
coordinate scaled to 1; the determinant of the 3x3 Hessian block there
is the certified value.  All thirteen determinants land in Q(sqrt2) even
when the point coordinates need a deeper tower (asserted).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .arith import (
    QSqrt2,
    TowerElem,
    common_field,
    separated,
    sqrt_or_extend,
    value_to_json,
)
from .curves import (
    ContactEnumeration,
    QuarticCurve,
    SpecialPoint,
    UnidentifiedSingularityError,
    conic_nondegenerate,
    contact_points,
    divisor_decompose,
    factorization_oracle,
    irreducibility_check,
    restrict,
    segre_reduce,
    singular_points,
    split_components,
    solve_upoly_roots,
)
from .mpoly import MPoly, resultant
from .realroots import sturm_isolate
from .boxcert import no_common_zero_over_interval
from .surface import (
    GroupElement,
    OcticParams,
    AuxParams,
    build_F,
    build_P,
    build_q,
    closed_form_P,
    dihedral_group,
    endrass_params,
    is_invariant,
    normalize_projective,
    plane_form,
    solve_aux,
    substitution_chain,
)
from .upoly import UPoly

CERT_SCHEMA = "octic168-cert/1"

LEMMA_NOTE = (
    "Off-plane exhaustiveness rests on a proof, not a machine check: a "
    "dihedrally symmetric surface of degree n has no orbit of 2n nodes, "
    "so a singularity off all eight mirror planes and off the joint line "
    "would force a non-node singularity on a mirror plane, contradicting "
    "the certified per-plane enumeration."
)

# The thirteen determinant values printed in the source table.  Two of
# them disagree with the table's own family-level formulas; the exact
# relationship is recorded in the certificate (see _PAPER_NOTES).
PAPER_DET_TABLE = {
    "s1": QSqrt2(128),
    "s2": QSqrt2(1152),
    "s3": QSqrt2(-128 * 239, 128 * 169),
    "t1": QSqrt2(Fraction(1, 4)),
    "t2": QSqrt2(Fraction(9, 4), Fraction(3, 2)),
    "t3": QSqrt2(Fraction(9, 512)),
    "u1": QSqrt2(512 * 1451, 512 * 1026),
    "u2": QSqrt2(512 * 99, -512 * 70),
    "u3": QSqrt2(512 * 11243, 512 * 7950),
    "u4": QSqrt2(4608 * 331, 4608 * 234),
    "u5": QSqrt2(2 * 1451, -2 * 1026),
    "v1": QSqrt2(512 * 3363, 512 * 2378),
    "v2": QSqrt2(Fraction(2979, 128), Fraction(2106, 128)),
}

_PAPER_NOTES = {
    "t1": "table normalizes the w=0 representative to first coordinate 1 "
    "(ratio is the 18th power of the rescaling)",
    "t2": "table entry is 3x the value consistent with the table's own "
    "family formula det(t2)/det(t1) = 3+2*sqrt2",
    "u1": "table entry is the sqrt2-conjugate of the value consistent "
    "with the family formula det(u1)/det(u2) = 9-4*sqrt2",
    "v1": "table uses the y=1 representative and the y-chart minor "
    "(ratio (1+sqrt2)^16)",
}


class CertificationError(ArithmeticError):
    pass


class DegenerateSampleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# lifting quartic points to the surface


@dataclass(frozen=True)
class NodeCandidate:
    plane: str                 # "E0" or "E1"
    quartic_point: SpecialPoint
    chart: str                 # "w" or "z"
    point: tuple               # projective representative in P3, chart coord 1


def lift(sp: SpecialPoint, plane: str) -> list[NodeCandidate]:
    """Lift a quartic-level point to its all-nonnegative surface
    representative; the orbit machinery generates the rest.

    Coordinates are square roots of the chart ratios, built in a tower
    of depth at most 2.  Raises ValueError on negative radicands (no
    real lift) and on the coordinate vertex W = Z = 0.
    """
    first, zc, wc = sp.coords
    if wc:
        chart = "w"
        r1 = _q(first) / wc
        r2 = _q(zc) / wc
        fld = common_field(r1, r2)
        root1, fld = sqrt_or_extend(r1, fld)
        root2, fld = sqrt_or_extend(r2, fld)
        x_or_y = _plain(fld.element(root1))
        z_val = _plain(root2)
        w_val = QSqrt2(1)
    elif zc:
        chart = "z"
        r1 = _q(first) / zc
        fld = common_field(r1)
        root1, fld = sqrt_or_extend(r1, fld)
        x_or_y = _plain(root1)
        z_val = QSqrt2(1)
        w_val = QSqrt2(0)
    else:
        raise ValueError("W = Z = 0 is a coordinate vertex, not in general position")
    if fld.depth > 2:
        raise CertificationError("lift needs a tower deeper than two extensions")
    if plane == "E0":
        point = (x_or_y, QSqrt2(0), z_val, w_val)
    elif plane == "E1":
        point = (QSqrt2(1, 1) * x_or_y, x_or_y, z_val, w_val)
    else:
        raise ValueError(f"unknown plane {plane!r}")
    return [NodeCandidate(plane, sp, chart, point)]


def _q(v):
    if isinstance(v, (int, Fraction)):
        return QSqrt2.of(v)
    return v


def _plain(v):
    """Minimal-level representation of a scalar."""
    if isinstance(v, TowerElem):
        return v.descend()
    return v


# ---------------------------------------------------------------------------
# pointwise certification


def verify_singular(surface: MPoly, point) -> tuple:
    """The four exact partial derivative values at the point."""
    return tuple(surface.partial(i).evaluate(point) for i in range(4))


def hessian_certificate(surface: MPoly, point):
    """(det3, rank3, chart) under the fixed chart convention.

    Also asserts that the full 4x4 Hessian annihilates the point (Euler
    consistency at singular points) and that det3 descends at least one
    tower level below the point's coordinates (the minor is invariant
    under the rotation to the plane frame, where evenness kills the odd
    part - so it lives in the quartic-level coordinate field).
    """
    if any(verify_singular(surface, point)):
        raise CertificationError("hessian certificate requires a singular point")
    if point[3]:
        chart_var, chart = 3, "w"
    elif point[2]:
        chart_var, chart = 2, "z"
    else:
        raise CertificationError("representative has z = w = 0; unsupported chart")
    inv = 1 / point[chart_var]
    rep = tuple(inv * c for c in point)
    second = [[surface.partial(i).partial(j) for j in range(4)] for i in range(4)]
    h4 = [[second[i][j].evaluate(rep) for j in range(4)] for i in range(4)]
    for i in range(4):
        acc = None
        for j in range(4):
            term = h4[i][j] * rep[j]
            acc = term if acc is None else acc + term
        if acc:
            raise CertificationError("homogeneous Hessian does not annihilate the point")
    rest = [i for i in range(4) if i != chart_var]
    h3 = [[h4[i][j] for j in rest] for i in rest]
    det3 = (
        h3[0][0] * (h3[1][1] * h3[2][2] - h3[1][2] * h3[2][1])
        - h3[0][1] * (h3[1][0] * h3[2][2] - h3[1][2] * h3[2][0])
        + h3[0][2] * (h3[1][0] * h3[2][1] - h3[1][1] * h3[2][0])
    )
    det3 = _plain(det3) if isinstance(det3, TowerElem) else QSqrt2.of(det3)
    if isinstance(det3, TowerElem):
        det3 = det3.descend()
        point_depth = _depth_of(point)
        det_depth = det3.field.depth if isinstance(det3, TowerElem) else 0
        if det_depth >= max(point_depth, 1):
            raise CertificationError(
                "Hessian determinant does not descend below the point's tower"
            )
    return det3, bool(det3), chart


def _descend_qsqrt2(value) -> QSqrt2:
    if isinstance(value, (int, Fraction, QSqrt2)):
        return QSqrt2.of(value)
    d = value.descend()
    if isinstance(d, QSqrt2):
        return d
    raise CertificationError("value does not descend to Q(sqrt2)")


@dataclass(frozen=True)
class NodeCertificate:
    candidate: NodeCandidate
    partials: tuple
    det3: QSqrt2
    rank3: bool
    chart: str
    orbit_size: int
    label: str | None = None

    def is_node(self) -> bool:
        return all(not v for v in self.partials) and self.rank3


def certify_candidate(
    surface: MPoly, cand: NodeCandidate, group, require_qsqrt2: bool = False
) -> NodeCertificate:
    partials = verify_singular(surface, cand.point)
    if any(partials):
        raise CertificationError(
            f"lifted point of {cand.quartic_point} is not singular on the surface"
        )
    det3, rank3, chart = hessian_certificate(surface, cand.point)
    if not rank3:
        raise CertificationError("Hessian rank drops below 3: not a node")
    if require_qsqrt2:
        det3 = _descend_qsqrt2(det3)
    orbit = orbit_points(cand.point, group)
    return NodeCertificate(cand, partials, det3, rank3, chart, len(orbit))


def orbit_points(point, group) -> list:
    seen = {}
    for g in group:
        img = normalize_projective(g.apply_point(point))
        seen.setdefault(img, None)
    return list(seen.keys())


# ---------------------------------------------------------------------------
# the Endrass pipeline: labeled points on both planes


@dataclass
class PlanePipeline:
    plane: str
    curve_octic: MPoly
    quartic: QuarticCurve
    singular: list
    contacts_w: ContactEnumeration
    contacts_z: ContactEnumeration
    split: object | None = None
    conic: MPoly | None = None
    conic_det: QSqrt2 | None = None


def run_plane_pipeline(surface: MPoly, plane: str, need_split: bool) -> PlanePipeline:
    curve = restrict(surface, plane)
    quartic = segre_reduce(curve)
    sing = singular_points(quartic)
    cw = contact_points(quartic, "W")
    cz = contact_points(quartic, "Z")
    pp = PlanePipeline(plane, curve.poly, quartic, sing.points, cw, cz)
    if need_split:
        pp.split = split_components(quartic, sing.points)
        conics = [f for f, m in pp.split.components if f.total_degree() == 2]
        if len(conics) == 1:
            pp.conic = conics[0]
            pp.conic_det = _descend_qsqrt2(conic_nondegenerate(pp.conic))
    return pp


def _on_line(point, a, b, c) -> bool:
    """Whether the quartic point lies on a X + b Z + c W = 0."""
    x, z, w = point.coords
    return not (a * x + b * z + c * w)


def label_endrass_points(p0: PlanePipeline, p1: PlanePipeline) -> dict:
    """Assign the thirteen classical labels.

    s3, t3, u5, v1, v2 are pinned by their published coordinates; the
    remaining pairs are distinguished by which structural line carries
    them, ordered by their Hessian values downstream.
    """
    labels: dict[str, SpecialPoint] = {}
    # E0 singulars: two on {X = 2W}, one extra (s3)
    on_line = [p for p in p0.singular if _on_line(p, QSqrt2(1), QSqrt2(0), QSqrt2(-2))]
    extra = [p for p in p0.singular if p not in on_line]
    if len(on_line) != 2 or len(extra) != 1:
        raise CertificationError("E0 quartic singular structure is not 2+1")
    s3 = extra[0]
    if normalize_projective(s3.coords) != normalize_projective(
        (QSqrt2(-8, 8), QSqrt2(1), QSqrt2(4))
    ):
        raise CertificationError("extra E0 node is not at (8(sqrt2-1) : 1 : 4)")
    labels["s3"] = s3
    sA, sB = sorted(on_line, key=lambda p: _sort_key(p.coords))
    labels["s1"], labels["s2"] = sA, sB
    # E0 contacts
    if len(p0.contacts_w.contacts) != 2:
        raise CertificationError("expected two contacts of C~0 with {W=0}")
    tA, tB = sorted(p0.contacts_w.contacts, key=lambda p: _sort_key(p.coords), reverse=True)
    labels["t1"], labels["t2"] = tA, tB
    if len(p0.contacts_z.contacts) != 1:
        raise CertificationError("expected one contact of C~0 with {Z=0}")
    t3 = p0.contacts_z.contacts[0]
    if normalize_projective(t3.coords) != normalize_projective(
        (QSqrt2(1), QSqrt2(0), QSqrt2(2))
    ):
        raise CertificationError("extra E0 contact is not at (1 : 0 : 2)")
    labels["t3"] = t3
    # E1 singulars: pairs on {Y = (3-2sqrt2) W} and {Y = W}, plus u5
    line_i = [p for p in p1.singular if _on_line(p, QSqrt2(1), QSqrt2(0), QSqrt2(-3, 2))]
    line_d = [p for p in p1.singular if _on_line(p, QSqrt2(1), QSqrt2(0), QSqrt2(-1))]
    rest = [p for p in p1.singular if p not in line_i + line_d]
    if len(line_i) != 2 or len(line_d) != 2 or len(rest) != 1:
        raise CertificationError("E1 quartic singular structure is not 2+2+1")
    u5 = rest[0]
    if normalize_projective(u5.coords) != normalize_projective(
        (QSqrt2(6, -4), QSqrt2(3, -2), QSqrt2(4))
    ):
        raise CertificationError("extra E1 node is not at (2(3-2sqrt2) : 3-2sqrt2 : 4)")
    labels["u5"] = u5
    uA, uB = sorted(line_i, key=lambda p: _sort_key(p.coords), reverse=True)
    labels["u1"], labels["u2"] = uA, uB
    uC, uD = sorted(line_d, key=lambda p: _sort_key(p.coords), reverse=True)
    labels["u3"], labels["u4"] = uC, uD
    # K contacts
    if p1.conic is None:
        raise CertificationError("C~1 did not split into two lines and a conic")
    kw = [p for p in p1.contacts_w.contacts if not p1.conic.evaluate(p.coords)]
    kz = [p for p in p1.contacts_z.contacts if not p1.conic.evaluate(p.coords)]
    if len(kw) != 1 or len(kz) != 1:
        raise CertificationError("conic K does not have exactly one contact per axis")
    v1, v2 = kw[0], kz[0]
    if normalize_projective(v1.coords) != normalize_projective(
        (QSqrt2(1), QSqrt2(3, 2), QSqrt2(0))
    ):
        raise CertificationError("K contact with {W=0} is not at (1 : 3+2sqrt2 : 0)")
    if normalize_projective(v2.coords) != normalize_projective(
        (QSqrt2(1), QSqrt2(0), QSqrt2(4))
    ):
        raise CertificationError("K contact with {Z=0} is not at (1 : 0 : 4)")
    labels["v1"] = v1
    labels["v2"] = v2
    return labels


def _sort_key(coords):
    out = []
    for c in coords:
        lo, hi = (c, c) if isinstance(c, Fraction) else c.interval(Fraction(1, 1 << 40))
        out.append((lo + hi) / 2)
    return tuple(out)


LABEL_ORDER = ("s1", "s2", "s3", "t1", "t2", "t3", "u1", "u2", "u3", "u4", "u5", "v1", "v2")
BASE_LABELS = ("s1", "s2", "t1", "t2", "u1", "u2", "u3", "u4")
EXTRA_LABELS = ("s3", "t3", "u5", "v1", "v2")


# ---------------------------------------------------------------------------
# orbit table and global distinctness


@dataclass
class OrbitEntry:
    label: str
    plane: str
    kind: str
    quartic_point: tuple
    representative: tuple
    tower_depth: int
    orbit_size: int
    det3: QSqrt2
    chart: str
    paper_det: QSqrt2 | None
    paper_match: bool
    paper_note: str | None
    points: list

    def to_json(self):
        return {
            "label": self.label,
            "plane": self.plane,
            "kind": self.kind,
            "quartic_point": [value_to_json(c) for c in self.quartic_point],
            "representative": [value_to_json(c) for c in self.representative],
            "tower_depth": self.tower_depth,
            "orbit_size": self.orbit_size,
            "det3": self.det3.to_json(),
            "chart": self.chart,
            "paper_det": self.paper_det.to_json() if self.paper_det else None,
            "paper_match": self.paper_match,
            "paper_note": self.paper_note,
        }


def assemble_orbits(surface: MPoly, certs: dict) -> list[OrbitEntry]:
    """Orbit table from labeled certificates; sizes are computed, never
    assumed, and all orbit points must be pairwise distinct globally."""
    from .surface import ReflectionPlane, orbit_length_formula

    group = dihedral_group(8, include_z2=True)
    d8 = dihedral_group(8, include_z2=False)
    entries = []
    for label in LABEL_ORDER:
        cert = certs[label]
        pts = orbit_points(cert.candidate.point, group)
        expected = 8 if cert.candidate.quartic_point.kind == "contact" else 16
        if len(pts) != expected:
            raise CertificationError(
                f"orbit of {label} has size {len(pts)}, expected {expected}"
            )
        plane_idx = 0 if cert.candidate.plane == "E0" else 1
        formula = orbit_length_formula(cert.candidate.point, ReflectionPlane(plane_idx, 8))
        d8_len = len(orbit_points(cert.candidate.point, d8))
        if formula != d8_len:
            raise CertificationError(
                f"D8 orbit of {label} has size {d8_len}, formula says {formula}"
            )
        paper = PAPER_DET_TABLE.get(label)
        entries.append(
            OrbitEntry(
                label=label,
                plane=cert.candidate.plane,
                kind=cert.candidate.quartic_point.kind,
                quartic_point=cert.candidate.quartic_point.coords,
                representative=cert.candidate.point,
                tower_depth=_depth_of(cert.candidate.point),
                orbit_size=len(pts),
                det3=cert.det3,
                chart=cert.chart,
                paper_det=paper,
                paper_match=(paper == cert.det3),
                paper_note=_PAPER_NOTES.get(label),
                points=pts,
            )
        )
    _assert_globally_distinct(entries)
    return entries


def _depth_of(point) -> int:
    depth = 0
    for c in point:
        if isinstance(c, TowerElem):
            depth = max(depth, c.field.depth)
    return depth


def _assert_globally_distinct(entries):
    buckets: dict[tuple, list] = {}
    for e in entries:
        for p in e.points:
            key = tuple(round(float(c), 6) for c in p)
            buckets.setdefault(key, []).append(p)
    for key, pts in buckets.items():
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                same = True
                for a, b in zip(pts[i], pts[j]):
                    if separated(a, b):
                        same = False
                        break
                if same:
                    raise CertificationError("two orbit points coincide projectively")


# ---------------------------------------------------------------------------
# base-locus crosscheck


def base_nodes_crosscheck(entries: list[OrbitEntry], q_poly: MPoly) -> dict:
    """Every base node lies on exactly two of the eight planes and on
    {q = 0}; each of the 28 plane-pair lines carries exactly 4 nodes."""
    planes = [plane_form(j) for j in range(8)]
    incidence: dict[tuple, int] = {}
    count = 0
    for e in entries:
        if e.label not in BASE_LABELS:
            continue
        for p in e.points:
            on = [j for j in range(8) if not planes[j].evaluate(p)]
            if len(on) != 2:
                raise CertificationError(
                    f"base node of {e.label} lies on {len(on)} planes, not 2"
                )
            if q_poly.evaluate(p):
                raise CertificationError("base node is off the quartic {q = 0}")
            incidence[tuple(on)] = incidence.get(tuple(on), 0) + 1
            count += 1
    if count != 112:
        raise CertificationError(f"base node count {count} != 112")
    if len(incidence) != 28 or any(v != 4 for v in incidence.values()):
        raise CertificationError("line incidence is not 28 lines x 4 nodes")
    return {"nodes": count, "lines": len(incidence), "per_line": 4}


# ---------------------------------------------------------------------------
# exhaustiveness on a symmetry plane (octic level, no Segre shortcut)


def plane_exhaustiveness(surface: MPoly, plane: str, known_points: list) -> dict:
    """Enumerate all real singular points of the octic plane section and
    match them one-for-one against the known lifted nodes.

    known_points are plane-coordinate projective triples.  Any eliminant
    root that is neither matched nor certified spurious, and any fiber
    root beyond the known set, is a certification failure.
    """
    curve = restrict(surface, plane).poly
    partials = [curve.partial(v) for v in range(3)]
    chart = [p.dehomogenize(2) for p in partials]
    known_funcs = [_normalize_chart_w(p) for p in known_points if p[2]]
    known_w0 = [p for p in known_points if not p[2]]
    found_finite = _exhaustive_finite(chart, known_funcs)
    found_infinite = _exhaustive_infinite(partials, known_w0)
    return {
        "plane": plane,
        "finite": found_finite,
        "infinite": found_infinite,
        "total": found_finite + found_infinite,
    }


def _normalize_chart_w(p):
    inv = 1 / p[2]
    return (inv * p[0], inv * p[1])


def _exhaustive_finite(chart, known_xy) -> int:
    p_first, p_z, p_w = chart
    r = resultant(p_first, p_z, 1).to_upoly(0)
    if r.is_zero():
        raise CertificationError("plane eliminant vanishes identically")
    known_x: list = []
    for x, _ in known_xy:
        if not any(not separated(x, kx) for kx in known_x):
            known_x.append(x)
    for kx in known_x:
        if r(kx):
            raise CertificationError("known singular x-coordinate is not an eliminant root")
    roots = _isolate_via_norm(r)
    matched: dict[int, object] = {}
    for kx in known_x:
        hits = [i for i, iso in enumerate(roots) if iso.contains_root(kx)]
        if len(hits) != 1:
            raise CertificationError("known coordinate failed to match one isolating interval")
        if hits[0] in matched:
            raise CertificationError("two known coordinates share an isolating interval")
        matched[hits[0]] = kx
    for i, iso in enumerate(roots):
        if i in matched:
            continue
        iso = iso.refine(Fraction(1, 1 << 12))
        if not no_common_zero_over_interval([p_first, p_z, p_w], iso.lo, iso.hi):
            raise CertificationError(
                f"unmatched eliminant root near [{iso.lo}, {iso.hi}] could not be dismissed"
            )
    # fibers over each known x: the gcd roots are honest singular points
    count = 0
    for i, kx in matched.items():
        fibers = []
        for p in chart:
            f = p.evaluate((kx, UPoly.x()))
            if not f.is_zero():
                fibers.append(f)
        if not fibers:
            raise CertificationError("all partials vanish along a fiber")
        h = fibers[0]
        for f in fibers[1:]:
            if h.degree <= 0:
                break
            h = h.gcd(f)
        known_z = [z for (x, z) in known_xy if not separated(x, kx)]
        if h.degree <= 0:
            if known_z:
                raise CertificationError("known singular point has empty fiber")
            continue
        iso_z = sturm_isolate(h)
        if len(iso_z) != len(known_z):
            raise CertificationError(
                f"fiber over a known coordinate has {len(iso_z)} real roots, "
                f"expected {len(known_z)}"
            )
        for kz in known_z:
            hits = [iso for iso in iso_z if iso.contains_root(kz)]
            if len(hits) != 1:
                raise CertificationError("known fiber coordinate unmatched")
        count += len(known_z)
    return count


def _isolate_via_norm(r: UPoly):
    """Isolating intervals for a superset of the real roots of a
    Q(sqrt2)-polynomial, via its rational norm."""
    from .realroots import qsqrt2_parts, _as_int_poly, zx_squarefree_part, zx_isolate_squarefree
    from .realroots import IsolatedRoot

    a, b = qsqrt2_parts(r)
    norm = a * a - (b * b).scale(Fraction(2))
    ints = _as_int_poly(norm)
    sf_ints = zx_squarefree_part(ints)
    sf = UPoly([Fraction(c) for c in sf_ints])
    return [IsolatedRoot(sf, lo, hi) for lo, hi in zx_isolate_squarefree(sf_ints)]


def _exhaustive_infinite(partials, known_w0) -> int:
    forms = [p.substitute(2, MPoly.zero(3)).drop_var(2) for p in partials]
    if all(f.is_zero() for f in forms):
        raise CertificationError("curve singular along w = 0")
    charted = [f.evaluate((UPoly.x(), QSqrt2(1))) for f in forms if not f.is_zero()]
    h = charted[0]
    for f in charted[1:]:
        if h.degree <= 0:
            break
        h = h.gcd(f)
    knowns = []
    for p in known_w0:
        if not p[1]:
            knowns.append(None)  # the vertex (1 : 0 : 0)
        else:
            inv = 1 / p[1]
            knowns.append(inv * p[0])
    vertex_known = any(k is None for k in knowns)
    finite_knowns = [k for k in knowns if k is not None]
    count = 0
    if h.degree > 0:
        iso = sturm_isolate(h)
        if len(iso) != len(set_dedupe(finite_knowns)):
            raise CertificationError(
                f"w=0 sweep found {len(iso)} roots, expected {len(set_dedupe(finite_knowns))}"
            )
        for k in set_dedupe(finite_knowns):
            if not any(r.contains_root(k) for r in iso):
                raise CertificationError("known w=0 singular point unmatched")
        count += len(set_dedupe(finite_knowns))
    elif finite_knowns:
        raise CertificationError("known w=0 singular points but empty sweep")
    vertex = (QSqrt2(1), QSqrt2(0), QSqrt2(0))
    vertex_singular = all(not p.evaluate(vertex) for p in partials)
    if vertex_singular != vertex_known:
        raise CertificationError("vertex (1:0:0) singularity mismatch")
    if vertex_singular:
        count += 1
    return count


def set_dedupe(values):
    out = []
    for v in values:
        if not any(not separated(v, u) for u in out):
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# the distinguished line L = {(x : y : 0 : 0)}


def line_L_check(surface: MPoly) -> dict:
    """No point of L is singular on the surface: the four restricted
    partials share no common root (including complex ones, via the gcd),
    and the chart vertex (1:0:0:0) is checked directly."""
    restricted = []
    for i in range(4):
        u = surface.partial(i).evaluate((UPoly.x(), QSqrt2(1), QSqrt2(0), QSqrt2(0)))
        if not u.is_zero():
            restricted.append(u)
    f_on_line = surface.evaluate((UPoly.x(), QSqrt2(1), QSqrt2(0), QSqrt2(0)))
    if not f_on_line.is_zero():
        restricted.append(f_on_line)
    if not restricted:
        raise CertificationError("surface contains the line L")
    g = restricted[0]
    for u in restricted[1:]:
        if g.degree <= 0:
            break
        g = g.gcd(u)
    if g.degree > 0:
        raise CertificationError("line L carries a surface-singular point")
    vertex = (QSqrt2(1), QSqrt2(0), QSqrt2(0), QSqrt2(0))
    grad = verify_singular(surface, vertex)
    if all(not v for v in grad):
        raise CertificationError("vertex (1:0:0:0) is singular on the surface")
    return {"gcd_degree": int(g.degree), "vertex_smooth": True}


# ---------------------------------------------------------------------------
# full certification


@dataclass
class SurfaceCertificate:
    schema: str
    params: OcticParams
    passed: bool
    total: int
    base_total: int
    extra_total: int
    orbits: list
    checks: dict
    diagnostics: list
    lemma_note: str = LEMMA_NOTE

    def to_json(self):
        return {
            "schema": self.schema,
            "params": self.params.to_json(),
            "passed": self.passed,
            "totals": {
                "base": self.base_total,
                "additional": self.extra_total,
                "total": self.total,
            },
            "orbits": [o.to_json() for o in self.orbits],
            "checks": self.checks,
            "diagnostics": self.diagnostics,
            "lemma_note": self.lemma_note,
        }

    def to_text(self) -> str:
        lines = [
            f"certificate schema: {self.schema}",
            f"verdict: {'PASS' if self.passed else 'FAIL'}",
            f"nodes: {self.base_total} base + {self.extra_total} additional = {self.total}",
            "",
            "orbit table:",
            f"  {'label':5} {'plane':5} {'kind':8} {'size':4} {'depth':5} "
            f"{'det3':34} {'paper':7}",
        ]
        for o in self.orbits:
            match = "exact" if o.paper_match else "delta"
            lines.append(
                f"  {o.label:5} {o.plane:5} {o.kind:8} {o.orbit_size:<4} "
                f"{o.tower_depth:<5} {str(o.det3):34} {match:7}"
            )
        lines.append("")
        lines.append("checks:")
        for name in sorted(self.checks):
            entry = self.checks[name]
            status = "ok" if entry.get("passed") else "FAIL"
            lines.append(f"  {name:24} {status}")
        if self.diagnostics:
            lines.append("")
            lines.append("diagnostics:")
            for d in self.diagnostics:
                lines.append(f"  - {d}")
        lines.append("")
        lines.append(f"note: {self.lemma_note}")
        return "\n".join(lines)


def build_certificate(params: OcticParams | None = None) -> SurfaceCertificate:
    """Run every check; a failed sub-check yields a failed certificate
    with diagnostics, never an exception or a silent pass."""
    if params is None:
        params = endrass_params()
    checks: dict = {}
    diagnostics: list[str] = []
    orbits: list[OrbitEntry] = []
    total = base_total = extra_total = 0

    def run(name, fn):
        try:
            detail = fn()
            checks[name] = {"passed": True, "detail": _jsonable(detail)}
            return detail
        except Exception as exc:  # noqa: BLE001 - diagnostics, never silent
            checks[name] = {"passed": False, "detail": str(exc)}
            diagnostics.append(f"{name}: {exc}")
            return None

    surface = build_F(params)

    run("p_identity", lambda: _check_p_identity())
    run("invariance_32", lambda: _check_invariance(surface))
    run("divisors_E0", lambda: _check_divisors_e0())
    run("divisors_E1", lambda: _check_divisors_e1())

    state: dict = {}

    def pipeline():
        if not params.is_even_family():
            raise CertificationError("certification needs the even family c = f = h = 0")
        p0 = run_plane_pipeline(surface, "E0", need_split=False)
        p1 = run_plane_pipeline(surface, "E1", need_split=True)
        labels = label_endrass_points(p0, p1)
        state.update(p0=p0, p1=p1, labels=labels)
        return {"labels": sorted(labels)}

    run("plane_pipelines", pipeline)

    if "labels" in state:
        labels = state["labels"]
        group = dihedral_group(8, include_z2=True)

        def certify_all():
            certs = {}
            for label, sp in labels.items():
                plane = "E0" if label[0] in "st" else "E1"
                cands = lift(sp, plane)
                certs[label] = certify_candidate(
                    surface, cands[0], group, require_qsqrt2=True
                )
            state["certs"] = certs
            return {"certified": len(certs)}

        run("node_certificates", certify_all)

    if "certs" in state:
        def orbits_fn():
            entries = assemble_orbits(surface, state["certs"])
            state["orbits"] = entries
            base = sum(e.orbit_size for e in entries if e.label in BASE_LABELS)
            extra = sum(e.orbit_size for e in entries if e.label in EXTRA_LABELS)
            if base != 112:
                raise CertificationError(f"base orbit total {base} != 112")
            if extra != 56:
                raise CertificationError(f"additional orbit total {extra} != 56")
            if base + extra != 168:
                raise CertificationError("totals do not add to 168")
            return {"base": base, "additional": extra, "total": base + extra}

        run("orbit_totals", orbits_fn)

    if "orbits" in state:
        orbits = state["orbits"]
        base_total = sum(e.orbit_size for e in orbits if e.label in BASE_LABELS)
        extra_total = sum(e.orbit_size for e in orbits if e.label in EXTRA_LABELS)
        total = base_total + extra_total

        run(
            "hessian_table",
            lambda: _check_hessian_table(state["certs"]),
        )
        run(
            "base_nodes_crosscheck",
            lambda: base_nodes_crosscheck(orbits, build_q(params)),
        )
        run(
            "exhaustive_E0",
            lambda: _check_exhaustive(surface, "E0", orbits, expected=18),
        )
        run(
            "exhaustive_E1",
            lambda: _check_exhaustive(surface, "E1", orbits, expected=24),
        )
        run(
            "conic_K",
            lambda: _check_conic(state["p1"]),
        )
        run(
            "irreducibility_C0",
            lambda: _check_irreducibility(state["p0"], state["labels"]),
        )

    run("line_L", lambda: line_L_check(surface))

    passed = bool(checks) and all(c["passed"] for c in checks.values()) and total == 168
    return SurfaceCertificate(
        schema=CERT_SCHEMA,
        params=params,
        passed=passed,
        total=total,
        base_total=base_total,
        extra_total=extra_total,
        orbits=orbits,
        checks=checks,
        diagnostics=diagnostics,
    )


def _jsonable(detail):
    if detail is None or isinstance(detail, (bool, int, str)):
        return detail
    if isinstance(detail, dict):
        return {k: _jsonable(v) for k, v in detail.items()}
    if isinstance(detail, (list, tuple)):
        return [_jsonable(v) for v in detail]
    return str(detail)


def _check_p_identity():
    prod = build_P()
    if prod != closed_form_P():
        raise CertificationError("plane product differs from the closed form")
    return {"terms": len(prod.terms)}


def _check_invariance(surface: MPoly):
    group = dihedral_group(8, include_z2=True)
    if len(group) != 32:
        raise CertificationError("wrong group order")
    if not is_invariant(surface, group):
        raise CertificationError("surface is not invariant under all 32 elements")
    return {"elements": 32}


def _check_divisors_e0():
    x, z, w = MPoly.variables(3, ("x", "z", "w"))
    s2 = MPoly.constant(3, QSqrt2(0, 1))
    forms = [x - w, x + w, x - s2 * w, x + s2 * w, w]
    deco = divisor_decompose(restrict(build_P(), "E0"), forms)
    if deco.multiplicities() != (1, 1, 2, 2, 2):
        raise CertificationError(f"E0 multiplicities {deco.multiplicities()}")
    if deco.residual.total_degree() != 0:
        raise CertificationError("E0 residual is not constant")
    return {"multiplicities": list(deco.multiplicities()), "scalar": str(deco.scalar)}


def _check_divisors_e1():
    y, z, w = MPoly.variables(3, ("y", "z", "w"))
    r = MPoly.constant(3, QSqrt2(-1, 1))
    forms = [y - w, y + w, y - r * w, y + r * w]
    deco = divisor_decompose(restrict(build_P(), "E1"), forms)
    if deco.multiplicities() != (2, 2, 2, 2):
        raise CertificationError(f"E1 multiplicities {deco.multiplicities()}")
    if deco.residual.total_degree() != 0:
        raise CertificationError("E1 residual is not constant")
    return {"multiplicities": list(deco.multiplicities()), "scalar": str(deco.scalar)}


def _check_hessian_table(certs: dict):
    """All thirteen determinants nonzero; comparison against the paper
    table with the two documented anomalies pinned exactly."""
    exact = []
    deltas = {}
    for label in LABEL_ORDER:
        det = certs[label].det3
        if not det:
            raise CertificationError(f"det3 of {label} vanishes")
        paper = PAPER_DET_TABLE[label]
        if det == paper:
            exact.append(label)
        else:
            deltas[label] = str(paper / det)
    expected_exact = {"s1", "s2", "s3", "t3", "u2", "u3", "u4", "u5", "v2"}
    if set(exact) != expected_exact:
        raise CertificationError(f"unexpected exact-match set: {sorted(exact)}")
    # t1: paper value is ours at the x = 1 representative (scale (1/sqrt2)^18)
    if PAPER_DET_TABLE["t1"] != certs["t1"].det3 * QSqrt2(Fraction(1, 512)):
        raise CertificationError("t1 delta is not the x=1 renormalization")
    # v1: paper value is ours times (1+sqrt2)^16 (y=1 representative, y-chart)
    if PAPER_DET_TABLE["v1"] != certs["v1"].det3 * (QSqrt2(1, 1) ** 16):
        raise CertificationError("v1 delta is not the y=1 renormalization")
    # t2: after the same x=1 renormalization as t1, the family formula
    # det(t2)/det(t1) = 3+2sqrt2 must hold; the paper's entry is 3x that
    t1n = certs["t1"].det3 * QSqrt2(Fraction(1, 512))
    t2n = certs["t2"].det3 * (QSqrt2(-2, 2) ** 9).inverse()
    if t2n != t1n * QSqrt2(3, 2):
        raise CertificationError("t2/t1 does not satisfy the family formula ratio")
    if PAPER_DET_TABLE["t2"] != t2n * 3:
        raise CertificationError("t2 anomaly is not the documented factor 3")
    # u1: the family formula ratio holds for our values; the paper entry
    # is the sqrt2-conjugate
    if certs["u1"].det3 != certs["u2"].det3 * QSqrt2(9, -4):
        raise CertificationError("u1/u2 does not satisfy the family formula ratio")
    if PAPER_DET_TABLE["u1"] != certs["u1"].det3.conj():
        raise CertificationError("u1 anomaly is not the documented conjugation")
    return {"exact": sorted(exact), "deltas": deltas}


def _check_exhaustive(surface, plane, orbits, expected):
    known = _known_points_on_plane(orbits, plane)
    if len(known) != expected:
        raise CertificationError(
            f"{plane} carries {len(known)} known singular points, expected {expected}"
        )
    report = plane_exhaustiveness(surface, plane, known)
    if report["total"] != expected:
        raise CertificationError(f"{plane} enumeration found {report['total']}")
    return report


def _known_points_on_plane(orbits, plane):
    ratio = QSqrt2(1, 1)
    out = []
    for e in orbits:
        for p in e.points:
            if plane == "E0" and not p[1]:
                out.append((p[0], p[2], p[3]))
            elif plane == "E1":
                if not (p[0] - ratio * p[1]) and p[1]:
                    out.append((p[1], p[2], p[3]))
    return out


def _check_conic(p1: PlanePipeline):
    if p1.conic_det is None:
        raise CertificationError("no conic component found on E1")
    if not p1.conic_det:
        raise CertificationError("conic K is degenerate")
    degs = p1.split.degrees()
    if degs != (1, 1, 2):
        raise CertificationError(f"C~1 split degrees {degs} != (1, 1, 2)")
    return {"det": str(p1.conic_det), "split": list(degs)}


def _check_irreducibility(p0: PlanePipeline, labels):
    verdict = irreducibility_check(p0.quartic, labels["s1"])
    if not verdict.irreducible:
        raise CertificationError("projection method did not certify irreducibility")
    oracle = factorization_oracle(p0.quartic)
    if not oracle.came_up_empty():
        raise CertificationError("factorization oracle found a factor or was inconclusive")
    split = split_components(p0.quartic, p0.singular)
    if split.degrees() != (4,):
        raise CertificationError("component splitting found a proper factor of C~0")
    return {
        "projection": True,
        "oracle_empty": True,
        "discriminant_profile": list(verdict.discriminant_profile),
    }


# ---------------------------------------------------------------------------
# generic family sampling


@dataclass
class FamilySample:
    seed: int
    params: OcticParams
    rejected: list
    plane_counts: dict
    total: int
    certified: bool

    def to_json(self):
        return {
            "seed": self.seed,
            "params": self.params.to_json(),
            "rejected": self.rejected,
            "plane_counts": self.plane_counts,
            "total": self.total,
            "certified": self.certified,
        }


def _draw_rat(rng: random.Random) -> Fraction:
    num = rng.randint(-20, 20)
    den = rng.randint(1, 20)
    return Fraction(num, den)


def family_sample_check(seed: int, max_attempts: int = 64) -> FamilySample:
    """Draw generic parameters (c = f = h = 0, e = -1) until a member
    certifies; a generic member carries exactly 112 nodes in 8 orbits."""
    rng = random.Random(seed)
    rejected = []
    for _ in range(max_attempts):
        params = OcticParams.make(
            a=_draw_rat(rng), b=_draw_rat(rng), d=_draw_rat(rng),
            e=-1, g=_draw_rat(rng), i=_draw_rat(rng),
        )
        try:
            counts = certify_generic_member(params)
        except (DegenerateSampleError, UnidentifiedSingularityError, ValueError,
                CertificationError, ArithmeticError) as exc:
            rejected.append({"params": params.to_json(), "reason": str(exc)})
            continue
        return FamilySample(
            seed=seed,
            params=params,
            rejected=rejected,
            plane_counts=counts,
            total=counts["total"],
            certified=True,
        )
    raise CertificationError(f"no generic sample accepted after {max_attempts} draws")


def certify_generic_member(params: OcticParams) -> dict:
    """Certify that a generic even-family member has exactly 112 nodes:
    the full pipeline minus the five extra Endrass orbits."""
    if not params.is_even_family():
        raise DegenerateSampleError("family sampling requires c = f = h = 0")
    surface = build_F(params)
    p0 = run_plane_pipeline(surface, "E0", need_split=False)
    p1 = run_plane_pipeline(surface, "E1", need_split=False)
    if len(p0.singular) != 2:
        raise DegenerateSampleError(f"C~0 has {len(p0.singular)} nodes, want 2")
    if len(p0.contacts_w.contacts) != 2 or p0.contacts_w.vertex_contacts or p0.contacts_w.higher_tangency:
        raise DegenerateSampleError("C~0 contacts with {W=0} are not two in general position")
    if p0.contacts_z.contacts or p0.contacts_z.vertex_contacts or p0.contacts_z.higher_tangency:
        raise DegenerateSampleError("C~0 has unexpected contact with {Z=0}")
    if len(p1.singular) != 4:
        raise DegenerateSampleError(f"C~1 has {len(p1.singular)} nodes, want 4")
    if p1.contacts_w.contacts or p1.contacts_z.contacts:
        raise DegenerateSampleError("C~1 has unexpected axis contacts")
    group = dihedral_group(8, include_z2=True)
    certs = []
    for sp in p0.singular + p0.contacts_w.contacts:
        certs.append(certify_candidate(surface, lift(sp, "E0")[0], group))
    for sp in p1.singular:
        certs.append(certify_candidate(surface, lift(sp, "E1")[0], group))
    sizes = sorted(c.orbit_size for c in certs)
    if sizes != [8, 8, 16, 16, 16, 16, 16, 16]:
        raise DegenerateSampleError(f"orbit sizes {sizes}")
    total = sum(sizes)
    if total != 112:
        raise DegenerateSampleError(f"total {total} != 112")
    all_points = []
    for c in certs:
        all_points.extend(orbit_points(c.candidate.point, group))
    # exhaustiveness at the octic level on both planes
    e0_known = _points_on_plane_from(all_points, "E0")
    e1_known = _points_on_plane_from(all_points, "E1")
    r0 = plane_exhaustiveness(surface, "E0", e0_known)
    r1 = plane_exhaustiveness(surface, "E1", e1_known)
    if r0["total"] != 12:
        raise DegenerateSampleError(f"C_0 singular count {r0['total']} != 12")
    if r1["total"] != 16:
        raise DegenerateSampleError(f"C_1 singular count {r1['total']} != 16")
    line_L_check(surface)
    return {"E0": r0["total"], "E1": r1["total"], "total": total}


def _points_on_plane_from(points, plane):
    ratio = QSqrt2(1, 1)
    out = []
    for p in points:
        if plane == "E0" and not p[1]:
            out.append((p[0], p[2], p[3]))
        elif plane == "E1" and p[1] and not (p[0] - ratio * p[1]):
            out.append((p[1], p[2], p[3]))
    return out


# ---------------------------------------------------------------------------
# family-level Hessian formulas


def family_formula_check(seeds=(101, 102)) -> dict:
    """At two samples with chosen auxiliaries, the s-pair determinants
    match 8 a1^2 (4b + 2g +- a1) exactly; the t- and u-family bracket
    ratios are constant within a sample and across samples."""
    results = []
    for seed in seeds:
        results.append(_formula_sample(seed))
    out = {"samples": []}
    for r in results:
        out["samples"].append(
            {
                "seed": r["seed"],
                "s_exact": r["s_exact"],
                "u_i_ratio": str(r["u_i_ratio"]),
                "u_d_ratio": str(r["u_d_ratio"]),
                "t_ratio": str(r["t_ratio"]),
            }
        )
    if results[0]["u_i_ratio"] != results[1]["u_i_ratio"]:
        raise CertificationError("u-family (i1) ratio differs across samples")
    if results[0]["u_d_ratio"] != results[1]["u_d_ratio"]:
        raise CertificationError("u-family (d1) ratio differs across samples")
    if results[0]["t_ratio"] != results[1]["t_ratio"]:
        raise CertificationError("t-family ratio differs across samples")
    out["u_i_ratio"] = str(results[0]["u_i_ratio"])
    out["u_d_ratio"] = str(results[0]["u_d_ratio"])
    out["t_ratio"] = str(results[0]["t_ratio"])
    return out


def _formula_sample(seed: int, max_attempts: int = 128) -> dict:
    """Deterministic aux-driven sample; draws are biased toward the
    region where all special points are real and liftable (b dominant
    positive, small auxiliaries)."""
    rng = random.Random(seed)
    for _ in range(max_attempts):
        b = Fraction(rng.randint(2, 9), rng.randint(1, 2))
        g = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        a1 = Fraction(rng.randint(1, 6), rng.randint(1, 3))
        d1 = Fraction(rng.randint(1, 6), rng.randint(1, 3))
        i1 = Fraction(rng.randint(1, 6), rng.randint(1, 3))
        aux = AuxParams.from_roots(a1, d1, i1)
        params = substitution_chain(aux, b, g)
        try:
            return _formula_values(seed, params, aux, QSqrt2.of(b), QSqrt2.of(g))
        except (DegenerateSampleError, ValueError, ArithmeticError):
            continue
    raise CertificationError("no usable formula sample found")


def _formula_values(seed, params, aux, b, g) -> dict:
    surface = build_F(params)
    p0 = run_plane_pipeline(surface, "E0", need_split=False)
    p1 = run_plane_pipeline(surface, "E1", need_split=False)
    if len(p0.singular) != 2 or len(p1.singular) != 4:
        raise DegenerateSampleError("sample is not in general position")
    group = dihedral_group(8, include_z2=True)
    a1 = aux.a1
    # s-pair: exact match, no free constant
    s_dets = set()
    for sp in p0.singular:
        cert = certify_candidate(surface, lift(sp, "E0")[0], group)
        s_dets.add(cert.det3)
    predicted = {
        _q8(aux.a1_sq) * (4 * b + 2 * g + a1) * 8,
        _q8(aux.a1_sq) * (4 * b + 2 * g - a1) * 8,
    }
    if s_dets != predicted:
        raise CertificationError(f"s-pair determinants {s_dets} != {predicted}")
    # u-families: ratio to the displayed brackets, constant inside a family
    two_p = QSqrt2(2, 1)
    two_m = QSqrt2(2, -1)
    i_line = QSqrt2(3, -2)   # Y = (3-2sqrt2) W
    d_line = QSqrt2(1)       # Y = W
    u_i = _u_family_ratio(surface, p1, group, i_line,
                          [(4 * b + two_p * g + two_p * aux.i1) * aux.i1_sq,
                           (4 * b + two_p * g - two_p * aux.i1) * aux.i1_sq])
    u_d = _u_family_ratio(surface, p1, group, d_line,
                          [(4 * b + two_m * g + two_m * aux.d1) * aux.d1_sq,
                           (4 * b + two_m * g - two_m * aux.d1) * aux.d1_sq])
    # t-pair: x=1-normalized determinants against the displayed brackets
    t_ratio = _t_family_ratio(surface, p0, group, params, aux, b)
    return {
        "seed": seed,
        "s_exact": True,
        "u_i_ratio": u_i,
        "u_d_ratio": u_d,
        "t_ratio": t_ratio,
    }


def _q8(v):
    return QSqrt2.of(v)


def _u_family_ratio(surface, p1, group, y_over_w, brackets):
    pts = [p for p in p1.singular if not (p.coords[0] - y_over_w * p.coords[2])]
    if len(pts) != 2:
        raise DegenerateSampleError("u-family points not on the expected line")
    dets = []
    for sp in pts:
        cert = certify_candidate(surface, lift(sp, "E1")[0], group)
        dets.append(cert.det3)
    for da, db in ((dets[0], dets[1]), (dets[1], dets[0])):
        if not brackets[0] or not brackets[1]:
            raise DegenerateSampleError("degenerate u-bracket")
        r1 = da / brackets[0]
        r2 = db / brackets[1]
        if r1 == r2:
            return r1
    raise CertificationError("u-family ratios do not pair consistently")


def _t_family_ratio(surface, p0, group, params, aux, b):
    if len(p0.contacts_w.contacts) != 2:
        raise DegenerateSampleError("t-pair absent")
    radicand = -aux.a1_sq + QSqrt2(2, -1) * aux.d1_sq + QSqrt2(2, 1) * aux.i1_sq
    if radicand.sign() < 0:
        raise DegenerateSampleError("t-bracket radicand negative")
    root, fld = sqrt_or_extend(radicand)
    first = fld.element(aux.a1_sq - QSqrt2(2, -1) * aux.d1_sq - QSqrt2(2, 1) * aux.i1_sq)
    b_e = fld.element(4 * b)
    brackets = [first * (b_e + root) ** 2, first * (b_e - root) ** 2]
    dets = []
    for sp in p0.contacts_w.contacts:
        cert = certify_candidate(surface, lift(sp, "E0")[0], group)
        # renormalize to the first-coordinate-1 representative; x0^18 is a
        # 9th power of the chart ratio, so it descends below the lift level
        x0 = cert.candidate.point[0]
        scale18 = _plain(x0 ** 18)
        det_x1 = fld.element(_plain(cert.det3)) / fld.element(scale18)
        dets.append(det_x1)
    for da, db in ((dets[0], dets[1]), (dets[1], dets[0])):
        if not brackets[0] or not brackets[1]:
            raise DegenerateSampleError("degenerate t-bracket")
        r1 = da / brackets[0]
        r2 = db / brackets[1]
        if r1 == r2:
            return _descend_qsqrt2(r1)
    raise CertificationError("t-family ratios do not pair consistently")
