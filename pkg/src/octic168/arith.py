"""Exact arithmetic: rationals, Q(sqrt2), and real quadratic towers.

All values are immutable and all operations are exact.  The real embedding
fixes sqrt2 > 0 and every tower radicand positive, so every element has a
well-defined sign, a decidable ordering and an isolating rational interval
of any requested width.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Rat = Fraction


class FieldMismatchError(ValueError):
    """Raised when two elements live in incompatible fields."""


# ---------------------------------------------------------------------------
# rationals


def rat_to_str(r: Fraction) -> str:
    """Serialize a rational as ``p/q`` with q > 0 (canonical zero: 0/1)."""
    return f"{r.numerator}/{r.denominator}"


def rat_from_str(s: str) -> Fraction:
    num, _, den = s.partition("/")
    if not den:
        den = "1"
    value = Fraction(int(num), int(den))
    return value


def rat_sign(r: Fraction) -> int:
    return (r > 0) - (r < 0)


def rat_sqrt(r: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if r is not a square."""
    if r < 0:
        return None
    if r == 0:
        return Fraction(0)
    pn = isqrt(r.numerator)
    pd = isqrt(r.denominator)
    if pn * pn == r.numerator and pd * pd == r.denominator:
        return Fraction(pn, pd)
    return None


def _sqrt_bounds(r: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    # Rational lower/upper bounds for sqrt(r), r >= 0, within 2^-prec.
    if r < 0:
        raise ValueError("negative radicand has no real square root")
    if r == 0:
        return Fraction(0), Fraction(0)
    num, den = r.numerator, r.denominator
    scale = 1 << prec
    s = isqrt(num * den * scale * scale)
    lo = Fraction(s, den * scale)
    hi = Fraction(s + 1, den * scale)
    return lo, hi


# ---------------------------------------------------------------------------
# Q(sqrt2)


class QSqrt2:
    """a + b*sqrt2 with rational a, b; unique representation."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt2 is immutable")

    # -- construction helpers

    @classmethod
    def of(cls, value) -> "QSqrt2":
        if isinstance(value, QSqrt2):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to QSqrt2")

    # -- ring structure

    def __add__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt2(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt2(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt2(other.a - self.a, other.b - self.b)

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __mul__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSqrt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt2":
        n = self.norm_q()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return QSqrt2(self.a / n, -self.b / n)

    def __truediv__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QSqrt2(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- field-specific

    def conj(self) -> "QSqrt2":
        """Galois conjugate sqrt2 -> -sqrt2."""
        return QSqrt2(self.a, -self.b)

    def norm_q(self) -> Fraction:
        """Rational norm a^2 - 2 b^2."""
        return self.a * self.a - 2 * self.b * self.b

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return rat_sign(a)
        if a == 0:
            return rat_sign(b)
        sa = rat_sign(a)
        if sa == rat_sign(b):
            return sa
        # opposite signs: compare a^2 against 2 b^2
        n = a * a - 2 * b * b
        if n == 0:  # pragma: no cover - sqrt2 is irrational
            raise ArithmeticError("impossible: a^2 = 2 b^2 with a, b nonzero")
        return sa if n > 0 else -sa

    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def sqrt(self) -> "QSqrt2 | None":
        """Nonnegative square root inside Q(sqrt2), or None."""
        if self.sign() < 0:
            return None
        if not self:
            return QSqrt2(0)
        a, b = self.a, self.b
        if b == 0:
            c = rat_sqrt(a)
            if c is not None:
                return QSqrt2(c)
            d = rat_sqrt(a / 2)
            if d is not None:
                return QSqrt2(0, d)
            return None
        n = rat_sqrt(a * a - 2 * b * b)
        if n is None:
            return None
        for s in (n, -n):
            c2 = (a + s) / 2
            c = rat_sqrt(c2)
            if c is not None and c != 0:
                root = QSqrt2(c, b / (2 * c))
                if root.sign() < 0:
                    root = -root
                if root * root == self:
                    return root
        return None

    def interval(self, width: Fraction) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value, of width <= width."""
        if self.b == 0:
            return self.a, self.a
        prec = 1
        while True:
            lo2, hi2 = _sqrt_bounds(Fraction(2), prec)
            if self.b > 0:
                lo, hi = self.a + self.b * lo2, self.a + self.b * hi2
            else:
                lo, hi = self.a + self.b * hi2, self.a + self.b * lo2
            if hi - lo <= width:
                return lo, hi
            prec *= 2

    def __float__(self):
        return float(self.a) + float(self.b) * 1.4142135623730951

    # -- comparisons

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = _q_coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    # -- rendering / serialization

    def __repr__(self):
        return f"QSqrt2({self.a!r}, {self.b!r})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*r2"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*r2"

    def to_json(self):
        return {"a": rat_to_str(self.a), "b": rat_to_str(self.b)}

    @classmethod
    def from_json(cls, data) -> "QSqrt2":
        return cls(rat_from_str(data["a"]), rat_from_str(data["b"]))


def _q_coerce(value):
    if isinstance(value, QSqrt2):
        return value
    if isinstance(value, (int, Fraction)):
        return QSqrt2(value)
    return NotImplemented


Q_ZERO = QSqrt2(0)
Q_ONE = QSqrt2(1)
SQRT2 = QSqrt2(0, 1)
HALF_SQRT2 = QSqrt2(0, Fraction(1, 2))


# ---------------------------------------------------------------------------
# quadratic towers over Q(sqrt2)
#
# A depth-k element is a nested pair tree with QSqrt2 leaves:
#   depth 0: QSqrt2
#   depth k: (lo, hi) meaning lo + hi*sqrt(r_k), lo and hi of depth k-1.


def _rep_const(value: QSqrt2, depth: int):
    rep = value
    for _ in range(depth):
        rep = (rep, _rep_zero(_rep_depth(rep)))
    return rep


def _rep_depth(rep) -> int:
    d = 0
    while isinstance(rep, tuple):
        d += 1
        rep = rep[0]
    return d


def _rep_zero(depth: int):
    return _rep_const(Q_ZERO, depth)


def _rep_add(r1, r2):
    if isinstance(r1, tuple):
        return (_rep_add(r1[0], r2[0]), _rep_add(r1[1], r2[1]))
    return r1 + r2


def _rep_neg(r):
    if isinstance(r, tuple):
        return (_rep_neg(r[0]), _rep_neg(r[1]))
    return -r


def _rep_mul(r1, r2, rads):
    if not isinstance(r1, tuple):
        return r1 * r2
    u1, v1 = r1
    u2, v2 = r2
    sub = rads[:-1]
    rad = rads[-1]
    a = _rep_mul(u1, u2, sub)
    b = _rep_mul(v1, v2, sub)
    c = _rep_mul(_rep_add(u1, v1), _rep_add(u2, v2), sub)
    rb = _rep_mul(b, rad, sub)
    lo = _rep_add(a, rb)
    hi = _rep_add(c, _rep_neg(_rep_add(a, b)))
    return (lo, hi)


def _rep_is_zero(rep) -> bool:
    if isinstance(rep, tuple):
        return _rep_is_zero(rep[0]) and _rep_is_zero(rep[1])
    return not rep


def _rep_inv(rep, rads):
    if not isinstance(rep, tuple):
        return rep.inverse()
    u, v = rep
    sub = rads[:-1]
    rad = rads[-1]
    # (u + v*sqrt(r))^-1 = (u - v*sqrt(r)) / (u^2 - v^2 r)
    n = _rep_add(_rep_mul(u, u, sub), _rep_neg(_rep_mul(_rep_mul(v, v, sub), rad, sub)))
    if _rep_is_zero(n):
        raise ZeroDivisionError("division by zero in tower field")
    ninv = _rep_inv(n, sub)
    return (_rep_mul(u, ninv, sub), _rep_neg(_rep_mul(v, ninv, sub)))


def _rep_sign(rep, rads) -> int:
    if not isinstance(rep, tuple):
        return rep.sign()
    u, v = rep
    sub = rads[:-1]
    su = _rep_sign(u, sub)
    sv = _rep_sign(v, sub)
    if sv == 0:
        return su
    if su == 0:
        return sv
    if su == sv:
        return su
    n = _rep_add(_rep_mul(u, u, sub), _rep_neg(_rep_mul(_rep_mul(v, v, sub), rads[-1], sub)))
    sn = _rep_sign(n, sub)
    if sn == 0:  # pragma: no cover - radicand would be a square below
        raise ArithmeticError("tower invariant violated: radicand is a square")
    return su if sn > 0 else -su


def _rep_interval(rep, rads, prec: int) -> tuple[Fraction, Fraction]:
    if not isinstance(rep, tuple):
        return rep.interval(Fraction(1, 1 << prec))
    u, v = rep
    sub = rads[:-1]
    ulo, uhi = _rep_interval(u, sub, prec)
    vlo, vhi = _rep_interval(v, sub, prec)
    rlo, rhi = _rep_interval(rads[-1], sub, prec)
    if rlo < 0:
        rlo = Fraction(0)
    slo, _ = _sqrt_bounds(rlo, prec)
    _, shi = _sqrt_bounds(rhi, prec)
    products = (vlo * slo, vlo * shi, vhi * slo, vhi * shi)
    return ulo + min(products), uhi + max(products)


def _rep_to_json(rep):
    if isinstance(rep, tuple):
        return [_rep_to_json(rep[0]), _rep_to_json(rep[1])]
    return rep.to_json()


def _rep_from_json(data):
    if isinstance(data, list):
        return (_rep_from_json(data[0]), _rep_from_json(data[1]))
    return QSqrt2.from_json(data)


class TowerField:
    """Q(sqrt2) extended by an ordered chain of square roots.

    Each radicand is a positive non-square element of the field below it;
    both conditions are enforced at construction so that zero tests and
    signs stay decidable.
    """

    __slots__ = ("radicands",)

    def __init__(self, radicands: tuple = ()):
        object.__setattr__(self, "radicands", tuple(radicands))

    def __setattr__(self, name, value):
        raise AttributeError("TowerField is immutable")

    @property
    def depth(self) -> int:
        return len(self.radicands)

    def degree_over_q(self) -> int:
        return 2 << self.depth

    def extend(self, radicand) -> "TowerField":
        rad = self.element(radicand)
        if rad.sign() <= 0:
            raise ValueError("tower radicand must be positive under the real embedding")
        if rad.sqrt() is not None:
            raise ValueError("tower radicand is already a square in the base field")
        return TowerField(self.radicands + (rad.rep,))

    def element(self, value) -> "TowerElem":
        if isinstance(value, TowerElem):
            if value.field == self:
                return value
            if value.field.is_prefix_of(self):
                pad = _rep_const_from(value.rep, self.depth)
                return TowerElem(self, pad)
            raise FieldMismatchError("no canonical embedding between these towers")
        return TowerElem(self, _rep_const(QSqrt2.of(value), self.depth))

    def zero(self) -> "TowerElem":
        return self.element(0)

    def one(self) -> "TowerElem":
        return self.element(1)

    def sqrt_gen(self, level: int = -1) -> "TowerElem":
        """The adjoined square root sqrt(r_level) as an element."""
        if not self.radicands:
            raise ValueError("base tower has no adjoined roots")
        level = range(self.depth)[level]
        rep = (_rep_zero(level), _rep_const(Q_ONE, level))
        return TowerElem(self, _rep_const_from(rep, self.depth))

    def is_prefix_of(self, other: "TowerField") -> bool:
        return self.radicands == other.radicands[: self.depth]

    def __eq__(self, other):
        return isinstance(other, TowerField) and self.radicands == other.radicands

    def __hash__(self):
        return hash(self.radicands)

    def __repr__(self):
        return f"TowerField(depth={self.depth})"

    def radicand_values(self) -> list["TowerElem"]:
        return [
            TowerElem(TowerField(self.radicands[:i]), rep)
            for i, rep in enumerate(self.radicands)
        ]


BASE_FIELD = TowerField()


def _rep_const_from(rep, depth: int):
    d = _rep_depth(rep)
    for _ in range(depth - d):
        rep = (rep, _rep_zero(_rep_depth(rep)))
    return rep


class TowerElem:
    """Element of a TowerField; exact, immutable, totally ordered."""

    __slots__ = ("field", "rep")

    def __init__(self, field: TowerField, rep):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("TowerElem is immutable")

    # -- coercion

    def _pair(self, other):
        if isinstance(other, TowerElem):
            if other.field == self.field:
                return self, other
            if other.field.is_prefix_of(self.field):
                return self, self.field.element(other)
            if self.field.is_prefix_of(other.field):
                return other.field.element(self), other
            raise FieldMismatchError("no canonical embedding between these towers")
        if isinstance(other, (int, Fraction, QSqrt2)):
            return self, self.field.element(other)
        return None

    # -- arithmetic

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElem(x.field, _rep_add(x.rep, y.rep))

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElem(x.field, _rep_add(x.rep, _rep_neg(y.rep)))

    def __rsub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElem(x.field, _rep_add(y.rep, _rep_neg(x.rep)))

    def __neg__(self):
        return TowerElem(self.field, _rep_neg(self.rep))

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElem(x.field, _rep_mul(x.rep, y.rep, x.field.radicands))

    __rmul__ = __mul__

    def inverse(self) -> "TowerElem":
        return TowerElem(self.field, _rep_inv(self.rep, self.field.radicands))

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x * y.inverse()

    def __rtruediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return y * x.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order and predicates

    def sign(self) -> int:
        return _rep_sign(self.rep, self.field.radicands)

    def __bool__(self):
        return not _rep_is_zero(self.rep)

    def __eq__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x.rep == y.rep

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __hash__(self):
        d = self.descend()
        if isinstance(d, TowerElem):
            return hash((d.field, d.rep))
        return hash(d)

    # -- structure

    def descend(self):
        """Minimal-level representation: QSqrt2 if all root parts vanish."""
        rep = self.rep
        depth = self.field.depth
        while isinstance(rep, tuple) and _rep_is_zero(rep[1]):
            rep = rep[0]
            depth -= 1
        if not isinstance(rep, tuple):
            return rep
        return TowerElem(TowerField(self.field.radicands[:depth]), rep)

    def as_qsqrt2(self) -> QSqrt2:
        d = self.descend()
        if isinstance(d, QSqrt2):
            return d
        raise ValueError("value does not descend to Q(sqrt2)")

    def sqrt(self) -> "TowerElem | None":
        """Nonnegative square root within the same field, or None."""
        rep = _rep_sqrt(self.rep, self.field.radicands)
        if rep is None:
            return None
        root = TowerElem(self.field, rep)
        if root.sign() < 0:
            root = -root
        return root

    def interval(self, width: Fraction) -> tuple[Fraction, Fraction]:
        prec = 4
        while True:
            lo, hi = _rep_interval(self.rep, self.field.radicands, prec)
            if hi - lo <= width:
                return lo, hi
            prec *= 2

    def __float__(self):
        lo, hi = self.interval(Fraction(1, 1 << 60))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"TowerElem({float(self):.9g}, depth={self.field.depth})"

    # -- serialization

    def to_json(self):
        d = self.descend()
        if isinstance(d, QSqrt2):
            return {"tower": ["2/1"], "coeffs": d.to_json()}
        rads = ["2/1"]
        for rep in d.field.radicands:
            rads.append(_rep_to_json(rep))
        return {"tower": rads, "coeffs": _rep_to_json(d.rep)}

    @classmethod
    def from_json(cls, data):
        rads = tuple(_rep_from_json(r) for r in data["tower"][1:])
        field = TowerField(rads)
        rep = _rep_from_json(data["coeffs"])
        if not rads and isinstance(rep, QSqrt2):
            return rep
        return cls(field, rep)


def _rep_sqrt(rep, rads):
    if not isinstance(rep, tuple):
        return rep.sqrt()
    u, v = rep
    sub = rads[:-1]
    rad = rads[-1]
    if _rep_is_zero(v):
        t = _rep_sqrt(u, sub)
        if t is not None:
            return (t, _rep_zero(_rep_depth(u)))
        quot = _rep_mul(u, _rep_inv(rad, sub), sub)
        s = _rep_sqrt(quot, sub)
        if s is not None:
            return (_rep_zero(_rep_depth(u)), s)
        return None
    # y = c + d*sqrt(r): c^2 + d^2 r = u, 2 c d = v
    n = _rep_add(_rep_mul(u, u, sub), _rep_neg(_rep_mul(_rep_mul(v, v, sub), rad, sub)))
    s = _rep_sqrt(n, sub)
    if s is None:
        return None
    for signed in (s, _rep_neg(s)):
        c2 = _rep_mul(_rep_add(u, signed), _rep_const(QSqrt2(Fraction(1, 2)), _rep_depth(u)), sub)
        c = _rep_sqrt(c2, sub)
        if c is None or _rep_is_zero(c):
            continue
        d = _rep_mul(v, _rep_inv(_rep_add(c, c), sub), sub)
        cand = (c, d)
        if _rep_is_zero(_rep_add(_rep_mul(cand, cand, rads), _rep_neg(rep))):
            return cand
    return None


# ---------------------------------------------------------------------------
# helpers generic over all scalar types used in this package


def sig(value) -> int:
    """Exact sign of an int / Fraction / QSqrt2 / TowerElem."""
    if isinstance(value, (int, Fraction)):
        return (value > 0) - (value < 0)
    return value.sign()


def compare(x, y) -> int:
    """Total order under the real embedding: -1, 0 or +1."""
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        return (x > y) - (x < y)
    if isinstance(x, (int, Fraction)):
        return -sig(y - x)
    return sig(x - y)


def value_interval(value, width: Fraction) -> tuple[Fraction, Fraction]:
    """Rational interval of width <= width certified to contain value."""
    if width <= 0:
        raise ValueError("interval width must be positive")
    if isinstance(value, (int, Fraction)):
        f = Fraction(value)
        return f, f
    return value.interval(width)


def abs_upper(value) -> Fraction:
    """A rational upper bound for |value|."""
    lo, hi = value_interval(value, Fraction(1, 4))
    return max(abs(lo), abs(hi))


def is_square(value):
    """Exact square-root test.

    Returns the nonnegative square root in the same field, or None.
    Accepts Fraction (Q), QSqrt2 and TowerElem values.
    """
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return rat_sqrt(value)
    return value.sqrt()


def _rep_fractions(rep):
    if isinstance(rep, tuple):
        yield from _rep_fractions(rep[0])
        yield from _rep_fractions(rep[1])
    else:
        yield rep.a
        yield rep.b


def _rep_scale(rep, factor: Fraction):
    if isinstance(rep, tuple):
        return (_rep_scale(rep[0], factor), _rep_scale(rep[1], factor))
    return QSqrt2(rep.a * factor, rep.b * factor)


def _square_content(n: int) -> int:
    """A large s with s^2 dividing n (n > 0).

    Complete for small prime squares and for a perfect-square cofactor;
    a square of a single huge prime times a nonsquare rest stays
    undetected, which only costs canonicality, never correctness.
    """
    s = 1
    d = 2
    while d <= 10_000 and d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            s *= d
        d += 1 if d == 2 else 2
    r = isqrt(n)
    if r * r == n:
        s *= r
    return s


def canonical_radicand(elem: TowerElem) -> tuple[TowerElem, Fraction]:
    """Scale a positive radicand by a rational square into a canonical
    form: integer coefficient data with squarefree content.

    Returns (canonical, t) with canonical = elem * t^2, so that
    sqrt(elem) = sqrt(canonical) / t.  Mathematically equal extensions
    then share one TowerField object.
    """
    fractions = list(_rep_fractions(elem.rep))
    den = 1
    for f in fractions:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den * den) for f in fractions]
    g = 0
    for v in ints:
        g = gcd(g, v)
    s = _square_content(g) if g > 1 else 1
    t = Fraction(den, s)
    canon = TowerElem(elem.field, _rep_scale(elem.rep, t * t))
    return canon, t


def sqrt_or_extend(value, field: TowerField | None = None):
    """Square root of a nonnegative value, extending the tower if needed.

    Returns (root, field).  ``field`` defaults to the value's own field
    (BASE_FIELD for QSqrt2 / rational input).  Radicands are
    canonicalized up to rational squares so equal extensions share one
    TowerField.  Raises ValueError on negative input.
    """
    if field is None:
        field = value.field if isinstance(value, TowerElem) else BASE_FIELD
    elem = field.element(value)
    if elem.sign() < 0:
        raise ValueError("negative radicand: no real square root")
    root = elem.sqrt()
    if root is not None:
        return root, field
    canon, t = canonical_radicand(elem)
    bigger = field.extend(canon)
    return bigger.sqrt_gen() / bigger.element(t), bigger


def common_field(*values) -> TowerField:
    """The deepest field among the values; all must embed into it."""
    best = BASE_FIELD
    for v in values:
        if isinstance(v, TowerElem):
            if best.is_prefix_of(v.field):
                best = v.field
            elif not v.field.is_prefix_of(best):
                raise FieldMismatchError("values live in incompatible towers")
    return best


def separated(x, y, max_prec: int = 512) -> bool:
    """True if x != y, certified by interval separation.

    Tries exact comparison when the values are field-compatible; falls
    back to interval refinement and raises if the cap is reached without
    a decision (never silently reports equality or distinctness).
    """
    try:
        return bool(compare(x, y))
    except FieldMismatchError:
        pass
    width = Fraction(1, 16)
    while width >= Fraction(1, 1 << max_prec):
        xlo, xhi = value_interval(x, width)
        ylo, yhi = value_interval(y, width)
        if xhi < ylo or yhi < xlo:
            return True
        width = width * width
    raise ArithmeticError("cannot separate values across incompatible towers")


def value_to_json(value):
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return rat_to_str(value)
    return value.to_json()


def value_from_json(data):
    if isinstance(data, str):
        return rat_from_str(data)
    if "tower" in data:
        return TowerElem.from_json(data)
    return QSqrt2.from_json(data)
