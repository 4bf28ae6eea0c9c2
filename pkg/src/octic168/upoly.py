"""Dense univariate polynomials over any of the exact scalar types.

Coefficients may be Fraction, QSqrt2 or TowerElem; the code only relies
on the arithmetic dunders, so mixed towers coerce through the scalars'
own rules.  The zero polynomial is the empty coefficient tuple.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import sig


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(tuple(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "UPoly":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UPoly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "UPoly":
        if not c:
            return UPoly()
        return UPoly(tuple(coef * c for coef in self.coeffs))

    def __pow__(self, n: int) -> "UPoly":
        result = UPoly.const(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_up(self, k: int) -> "UPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UPoly((0,) * k + self.coeffs)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "UPoly":
        return UPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def divmod(self, other) -> tuple["UPoly", "UPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num = list(self.coeffs)
        dden = other.degree
        lc_inv = 1 / other.lc
        quot = [0] * max(0, len(num) - dden)
        for i in range(len(num) - 1, dden - 1, -1):
            c = num[i]
            if not c:
                continue
            q = c * lc_inv
            quot[i - dden] = q
            for j, dc in enumerate(other.coeffs):
                num[i - dden + j] = num[i - dden + j] - q * dc
        return UPoly(quot), UPoly(num[:dden])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def gcd(self, other) -> "UPoly":
        """Monic gcd; gcd(0, 0) is an error."""
        a, b = self, other
        if a.is_zero() and b.is_zero():
            raise ValueError("gcd(0, 0) is undefined")
        while not b.is_zero():
            a, b = b, (a % b)
            if not b.is_zero():
                b = b.monic()
        return a.monic()

    def squarefree_part(self) -> "UPoly":
        if self.degree <= 0:
            return self.monic()
        g = self.gcd(self.derivative())
        return self.exact_div(g).monic()

    def squarefree_decomposition(self) -> list[tuple["UPoly", int]]:
        """Yun's algorithm: [(factor_i, multiplicity_i)] with factors monic,
        squarefree, pairwise coprime; product of factor^mult recovers the
        monic part of self."""
        p = self.monic()
        if p.degree <= 0:
            return []
        out = []
        dp = p.derivative()
        a = p.gcd(dp)
        b = p.exact_div(a)
        c = dp.exact_div(a)
        i = 1
        while b.degree > 0:
            d = c - b.derivative()
            f = b.gcd(d) if not d.is_zero() else b.monic()
            if f.degree > 0:
                out.append((f, i))
            b, c = b.exact_div(f), d.exact_div(f) if not d.is_zero() else d
            if d.is_zero():
                break
            i += 1
        return out

    def resultant(self, other):
        """Resultant via the Euclidean remainder sequence."""
        p, q = self, other
        if p.is_zero() or q.is_zero():
            return Fraction(0)
        sign_flip = False
        acc = Fraction(1)
        acc_num = None
        while q.degree > 0:
            dp, dq = p.degree, q.degree
            r = p % q
            dr = r.degree
            factor = q.lc ** (dp - (dr if dr >= 0 else 0))
            acc_num = factor if acc_num is None else acc_num * factor
            if (dp * dq) % 2 == 1:
                sign_flip = not sign_flip
            if r.is_zero():
                if dq > 0:
                    return 0 * acc_num
                break
            p, q = q, r
        tail = q.lc ** p.degree if q.degree == 0 else 1
        result = (acc_num if acc_num is not None else Fraction(1)) * tail
        return -result if sign_flip else result

    def discriminant(self):
        """(-1)^(n(n-1)/2) * Res(p, p') / lc(p)."""
        n = self.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        res = self.resultant(self.derivative())
        d = res / self.lc
        return -d if (n * (n - 1) // 2) % 2 else d

    def compose(self, inner: "UPoly") -> "UPoly":
        acc = UPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + UPoly.const(c)
        return acc

    def map_coeffs(self, fn) -> "UPoly":
        return UPoly(tuple(fn(c) for c in self.coeffs))

    def sign_at(self, x) -> int:
        return sig(self(x)) if self.coeffs else 0

    def __repr__(self):
        if not self.coeffs:
            return "UPoly(0)"
        parts = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "UPoly(" + " + ".join(parts) + ")"


def det_bareiss(matrix: list[list]):
    """Fraction-free determinant over an integral domain (exact division).

    Works for scalar entries (Fraction, QSqrt2, TowerElem) and for UPoly /
    MPoly entries, since Bareiss divisions are exact minors.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            pivot_row = next((r for r in range(k + 1, n) if m[r][k]), None)
            if pivot_row is None:
                return 0 * m[0][0] if not isinstance(m[0][0], UPoly) else UPoly()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_quot(num, prev) if prev is not None else num
            m[i][k] = 0 * m[i][k] if not isinstance(m[i][k], UPoly) else UPoly()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _exact_quot(num, den):
    if isinstance(num, UPoly):
        return num.exact_div(den)
    if hasattr(num, "exact_div"):
        return num.exact_div(den)
    return num / den


class FunFrac:
    """Univariate rational function num/den over an exact field.

    Just enough of a field to let the generic polynomial code run with a
    symbolic parameter: reduced by gcd, denominator monic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: UPoly, den: UPoly | None = None):
        if den is None:
            den = UPoly.const(Fraction(1))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not num.is_zero():
            g = num.gcd(den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            lc = den.lc
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        else:
            den = UPoly.const(Fraction(1))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("FunFrac is immutable")

    @classmethod
    def of(cls, value) -> "FunFrac":
        if isinstance(value, FunFrac):
            return value
        if isinstance(value, UPoly):
            return cls(value)
        return cls(UPoly.const(value))

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = FunFrac.of(other) if not isinstance(other, FunFrac) else other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = FunFrac.of(other)
        return FunFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-FunFrac.of(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FunFrac(-self.num, self.den)

    def __mul__(self, other):
        other = FunFrac.of(other)
        return FunFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = FunFrac.of(other)
        if not other:
            raise ZeroDivisionError("division by the zero rational function")
        return FunFrac(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return FunFrac.of(other) / self

    def __repr__(self):
        return f"FunFrac({self.num!r} / {self.den!r})"


def interpolate(points: list, values: list) -> UPoly:
    """Newton interpolation through (points[i], values[i]); exact."""
    n = len(points)
    if n == 0:
        return UPoly()
    coeffs = list(values)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (points[i] - points[i - level])
    poly = UPoly.const(coeffs[n - 1])
    for i in range(n - 2, -1, -1):
        poly = poly * UPoly((-Fraction(points[i]), Fraction(1))) + UPoly.const(coeffs[i])
    return poly
