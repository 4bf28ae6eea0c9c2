"""The dihedrally symmetric octic family: polynomials, parameters, group.

Coordinates are always (x, y, z, w) on P3.  The symmetry group of order
16 is generated by the eighth-order rotation in the (x, y)-plane and the
reflection y -> -y; setting three odd parameters to zero upgrades the
symmetry by the extra involution z -> -z.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import HALF_SQRT2, QSqrt2, Q_ONE, Q_ZERO, sig
from .mpoly import MPoly

VARS = ("x", "y", "z", "w")


def _const(c) -> MPoly:
    return MPoly.constant(4, QSqrt2.of(c), VARS)


def variables() -> list[MPoly]:
    return MPoly.variables(4, VARS)


# cos(j*pi/4), sin(j*pi/4) for j = 0..7, exact in Q(sqrt2)
_COS = (
    Q_ONE, HALF_SQRT2, Q_ZERO, -HALF_SQRT2, -Q_ONE, -HALF_SQRT2, Q_ZERO, HALF_SQRT2,
)
_SIN = (
    Q_ZERO, HALF_SQRT2, Q_ONE, HALF_SQRT2, Q_ZERO, -HALF_SQRT2, -Q_ONE, -HALF_SQRT2,
)


def plane_form(j: int) -> MPoly:
    """The plane H_j: cos(j*pi/4) x + sin(j*pi/4) y - w."""
    x, y, _, w = variables()
    return _const(_COS[j % 8]) * x + _const(_SIN[j % 8]) * y - w


def build_P() -> MPoly:
    """Product of the eight plane forms; equals the closed product form.

    The identity against the expanded closed form is asserted here, so a
    bad table of cosines cannot slip through silently.
    """
    prod = _const(1)
    for j in range(8):
        prod = prod * plane_form(j)
    closed = closed_form_P()
    if prod != closed:
        raise ArithmeticError("plane product does not match the closed form of P")
    return prod


def closed_form_P() -> MPoly:
    x, y, _, w = variables()
    w2 = w * w
    return (
        _const(Fraction(1, 4))
        * (x * x - w2)
        * (y * y - w2)
        * ((x + y) ** 2 - 2 * w2)
        * ((x - y) ** 2 - 2 * w2)
    )


@dataclass(frozen=True)
class OcticParams:
    """The nine family parameters, all in Q(sqrt2)."""

    a: QSqrt2
    b: QSqrt2
    c: QSqrt2
    d: QSqrt2
    e: QSqrt2
    f: QSqrt2
    g: QSqrt2
    h: QSqrt2
    i: QSqrt2

    @classmethod
    def make(cls, a=0, b=0, c=0, d=0, e=0, f=0, g=0, h=0, i=0) -> "OcticParams":
        return cls(*(QSqrt2.of(v) for v in (a, b, c, d, e, f, g, h, i)))

    def is_even_family(self) -> bool:
        """True when c = f = h = 0, i.e. the z -> -z symmetry holds."""
        return not (self.c or self.f or self.h)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in "abcdefghi"}

    def to_json(self):
        return {k: v.to_json() for k, v in self.as_dict().items()}

    @classmethod
    def from_json(cls, data) -> "OcticParams":
        return cls.make(**{k: QSqrt2.from_json(data[k]) for k in "abcdefghi"})


@dataclass(frozen=True)
class AuxParams:
    """Auxiliary quantities: the squares are what the equations fix;
    the roots themselves are kept when they were chosen first."""

    a1_sq: QSqrt2
    d1_sq: QSqrt2
    i1_sq: QSqrt2
    a1: QSqrt2 | None = None
    d1: QSqrt2 | None = None
    i1: QSqrt2 | None = None

    @classmethod
    def from_roots(cls, a1, d1, i1) -> "AuxParams":
        a1, d1, i1 = QSqrt2.of(a1), QSqrt2.of(d1), QSqrt2.of(i1)
        return cls(a1 * a1, d1 * d1, i1 * i1, a1, d1, i1)


def build_q(params: OcticParams) -> MPoly:
    """The inner quartic q; Q = q^2."""
    x, y, z, w = variables()
    r = x * x + y * y
    return (
        _const(params.a) * r * r
        + r * (_const(params.b) * z * z + _const(params.c) * z * w + _const(params.d) * w * w)
        + _const(params.e) * z ** 4
        + _const(params.f) * z ** 3 * w
        + _const(params.g) * z * z * w * w
        + _const(params.h) * z * w ** 3
        + _const(params.i) * w ** 4
    )


def build_Q(params: OcticParams) -> MPoly:
    q = build_q(params)
    return q * q


def build_F(params: OcticParams) -> MPoly:
    return build_P() - build_Q(params)


def endrass_params() -> OcticParams:
    """The parameter values of the 168-node member."""
    quarter = Fraction(1, 4)
    return OcticParams.make(
        a=QSqrt2(-quarter, -quarter),                      # -(1+sqrt2)/4
        b=QSqrt2(1, Fraction(1, 2)),                       # (2+sqrt2)/2
        c=0,
        d=QSqrt2(quarter, Fraction(7, 8)),                 # (2+7sqrt2)/8
        e=QSqrt2(-1),
        f=0,
        g=QSqrt2(Fraction(1, 2), -1),                      # (1-2sqrt2)/2
        h=0,
        i=QSqrt2(Fraction(-1, 16), Fraction(-3, 4)),       # -(1+12sqrt2)/16
    )


def substitution_chain(aux: AuxParams, b, g) -> OcticParams:
    """Parameters from auxiliaries: a first, then d, then i.

    The displayed relations read top-down (i, d, a) but depend bottom-up:
    d needs a, i needs a, b, d, g.
    """
    b = QSqrt2.of(b)
    g = QSqrt2.of(g)
    a1s, d1s, i1s = aux.a1_sq, aux.d1_sq, aux.i1_sq
    two_m = QSqrt2(2, -1)   # 2 - sqrt2
    two_p = QSqrt2(2, 1)    # 2 + sqrt2
    a = QSqrt2(Fraction(-1, 64)) * (16 * b * b + a1s - two_m * d1s - two_p * i1s)
    d = QSqrt2(Fraction(-1, 32)) * (
        256 * a + 64 * b * b + 16 * b * g - QSqrt2(0, 1) * d1s + QSqrt2(0, 1) * i1s
    )
    i = QSqrt2(Fraction(-1, 4)) * (
        8 * QSqrt2(3, -2) * (4 * a + b * b)
        + 4 * two_m * (b * g + 2 * d)
        + g * g
        - i1s
    )
    return OcticParams.make(a=a, b=b, c=0, d=d, e=-1, f=0, g=g, h=0, i=i)


def solve_aux(params: OcticParams) -> AuxParams:
    """Invert the substitution chain; the system is triangular in the
    squared auxiliaries (i first, then d, then a)."""
    if not params.is_even_family():
        raise ValueError("substitution chain requires c = f = h = 0")
    if params.e != QSqrt2(-1):
        raise ValueError("substitution chain requires e = -1")
    a, b, d, g, i = params.a, params.b, params.d, params.g, params.i
    two_m = QSqrt2(2, -1)
    two_p = QSqrt2(2, 1)
    i1s = 4 * i + 8 * QSqrt2(3, -2) * (4 * a + b * b) + 4 * two_m * (b * g + 2 * d) + g * g
    d1s = i1s + (256 * a + 64 * b * b + 16 * b * g + 32 * d) * HALF_SQRT2
    a1s = -64 * a - 16 * b * b + two_m * d1s + two_p * i1s
    return AuxParams(a1s, d1s, i1s)


# ---------------------------------------------------------------------------
# the symmetry group


@dataclass(frozen=True)
class GroupElement:
    """4x4 matrix over Q(sqrt2) with a (rotation, reflection, z-flip) label."""

    matrix: tuple
    rot: int
    refl: bool
    zflip: bool

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        m = _mat_mul(self.matrix, other.matrix)
        # recover the label from the matrix action rather than composing
        # flags; used only for closure tests
        return GroupElement(m, -1, False, False)

    def apply_point(self, point):
        return tuple(
            sum_products(row, point) for row in self.matrix
        )

    def apply_poly(self, p: MPoly) -> MPoly:
        """p composed with the matrix: (g . p)(v) = p(M v)."""
        if p.arity != 4:
            raise ValueError("group acts on 4-variable polynomials")
        xs = variables()
        images = []
        for row in self.matrix:
            form = MPoly.zero(4, VARS)
            for c, v in zip(row, xs):
                if c:
                    form = form + _const(c) * v
            images.append(form)
        powers: list[list[MPoly]] = [[_const(1)] for _ in range(4)]
        for i in range(4):
            deg = p.degree_in(i)
            for _ in range(deg):
                powers[i].append(powers[i][-1] * images[i])
        acc = MPoly.zero(4, VARS)
        for exps, coeff in p.terms.items():
            term = _const(coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * powers[i][e]
            acc = acc + term
        return acc

    def __hash__(self):
        return hash(self.matrix)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix


def sum_products(row, point):
    acc = None
    for c, v in zip(row, point):
        if c:
            term = c * v
            acc = term if acc is None else acc + term
    if acc is None:
        first = 0 * point[0]
        return first
    return acc


def _mat_mul(m1, m2):
    return tuple(
        tuple(
            sum((m1[i][k] * m2[k][j] for k in range(4)), Q_ZERO)
            for j in range(4)
        )
        for i in range(4)
    )


def _rotation_matrix(k: int) -> tuple:
    c = _COS[k % 8]
    s = _SIN[k % 8]
    return (
        (c, -s, Q_ZERO, Q_ZERO),
        (s, c, Q_ZERO, Q_ZERO),
        (Q_ZERO, Q_ZERO, Q_ONE, Q_ZERO),
        (Q_ZERO, Q_ZERO, Q_ZERO, Q_ONE),
    )


def _diag(d0, d1, d2, d3) -> tuple:
    vals = [QSqrt2.of(v) for v in (d0, d1, d2, d3)]
    return tuple(
        tuple(vals[i] if i == j else Q_ZERO for j in range(4)) for i in range(4)
    )


def dihedral_group(n: int = 8, include_z2: bool = False) -> list[GroupElement]:
    """The dihedral group of order 2n acting on P3, optionally times the
    z-flip; matrix entries must be representable in Q(sqrt2)."""
    if n not in (1, 2, 4, 8):
        raise ValueError(f"rotation entries for n={n} are not in Q(sqrt2)")
    step = 8 // n
    out = []
    zflips = (False, True) if include_z2 else (False,)
    for zf in zflips:
        for refl in (False, True):
            for k in range(n):
                m = _rotation_matrix(step * k)
                if refl:
                    m = _mat_mul(m, _diag(1, -1, 1, 1))
                if zf:
                    m = _mat_mul(m, _diag(1, 1, -1, 1))
                out.append(GroupElement(m, k, refl, zf))
    return out


def act(g: GroupElement, p: MPoly) -> MPoly:
    return g.apply_poly(p)


def is_invariant(p: MPoly, group: list[GroupElement]) -> bool:
    return all(act(g, p) == p for g in group)


# ---------------------------------------------------------------------------
# reflection planes and orbits


@dataclass(frozen=True)
class ReflectionPlane:
    """E_j = { sin(j*pi/n) x = cos(j*pi/n) y }; form over Q(sqrt2)."""

    index: int
    n: int

    def form(self) -> MPoly:
        # For n = 8 only E_0 and E_1 carry exact Q(sqrt2) forms used here:
        # E_0 is y = 0, E_1 is x = (1+sqrt2) y  (tan(pi/8) = sqrt2 - 1).
        x, y, _, _ = variables()
        if self.index % self.n == 0:
            return y
        if self.n == 8 and self.index % 8 == 1:
            return x - _const(QSqrt2(1, 1)) * y
        raise ValueError("only E_0 and E_1 have rational-over-Q(sqrt2) forms here")

    def contains(self, point) -> bool:
        x, y = point[0], point[1]
        if self.index % self.n == 0:
            return not y
        if self.n == 8 and self.index % 8 == 1:
            return not (x - QSqrt2(1, 1) * y)
        raise ValueError("unsupported plane index")


def normalize_projective(point):
    """Scale so the first nonzero coordinate is 1; exact."""
    for v in point:
        if v:
            inv = 1 / v
            return tuple(inv * u for u in point)
    raise ValueError("the zero vector is not a projective point")


def projective_equal(p, q) -> bool:
    return normalize_projective(p) == normalize_projective(q)


def orbit_of_point(point, group: list[GroupElement]) -> list[tuple]:
    """Distinct projective images of a point under the group."""
    seen = {}
    for g in group:
        img = normalize_projective(g.apply_point(point))
        seen.setdefault(img, None)
    return list(seen.keys())


def orbit_length_formula(point, plane: ReflectionPlane, n: int = 8) -> int:
    """Dihedral orbit length of a singular point on a reflection plane:
    1 on the axis, n/2 for n even on the (x, y)-circle at infinity,
    n otherwise."""
    if not plane.contains(point):
        raise ValueError(f"point is not on plane E_{plane.index}")
    x, y, z, w = point
    if not x and not y:
        return 1
    if n % 2 == 0 and not z and not w:
        return n // 2
    return n
