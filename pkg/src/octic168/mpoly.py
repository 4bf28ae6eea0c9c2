"""Sparse multivariate polynomials and elimination primitives.

Terms live in a dict keyed by exponent vectors; the canonical order for
iteration and serialization is graded lexicographic with earlier
variables ranked higher (x > y > z > w).  Coefficients are Fraction,
QSqrt2 or TowerElem and follow the scalars' own coercion rules.

Resultants are Sylvester determinants.  When at most one variable
remains after elimination the determinant is computed by exact
evaluation and Newton interpolation (with a fraction-free integer-pair
fast path over Z[sqrt2]); otherwise fraction-free Bareiss runs directly
on the polynomial entries.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .arith import QSqrt2, value_to_json, value_from_json
from .upoly import UPoly, det_bareiss, interpolate


class ArityMismatchError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


def _term_key(exps):
    return (sum(exps), exps)


class MPoly:
    __slots__ = ("arity", "terms", "names")

    def __init__(self, arity: int, terms=None, names=None):
        clean = {}
        for exps, coeff in (terms or {}).items():
            if coeff:
                clean[tuple(exps)] = coeff
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "names", tuple(names) if names else None)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors

    @classmethod
    def zero(cls, arity: int, names=None) -> "MPoly":
        return cls(arity, {}, names)

    @classmethod
    def constant(cls, arity: int, c, names=None) -> "MPoly":
        return cls(arity, {(0,) * arity: c}, names)

    @classmethod
    def variable(cls, index: int, arity: int, names=None) -> "MPoly":
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): Fraction(1)}, names)

    @classmethod
    def variables(cls, arity: int, names=None) -> list["MPoly"]:
        return [cls.variable(i, arity, names) for i in range(arity)]

    # -- bookkeeping

    def _names_for(self, other: "MPoly"):
        return self.names or other.names

    def _check(self, other: "MPoly"):
        if self.arity != other.arity:
            raise ArityMismatchError(f"arity {self.arity} != {other.arity}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.arity == other.arity and self._normalized() == other._normalized()

    def _normalized(self):
        return {e: QSqrt2.of(c) if isinstance(c, (int, Fraction)) else c for e, c in self.terms.items()}

    def __hash__(self):
        return hash((self.arity, frozenset(self._normalized().items())))

    # -- ring operations

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.arity, other)
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            cur = out.get(exps)
            out[exps] = coeff if cur is None else cur + coeff
        return MPoly(self.arity, out, self._names_for(other))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.arity, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MPoly(self.arity, {e: -c for e, c in self.terms.items()}, self.names)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
        return MPoly(self.arity, out, self._names_for(other))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "MPoly":
        if not c:
            return MPoly.zero(self.arity, self.names)
        return MPoly(self.arity, {e: coeff * c for e, coeff in self.terms.items()}, self.names)

    def __pow__(self, n: int) -> "MPoly":
        result = MPoly.constant(self.arity, Fraction(1), self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def is_homogeneous(self):
        """Total degree if homogeneous (0 counts as homogeneous), else None."""
        degs = {sum(e) for e in self.terms}
        if len(degs) <= 1:
            return degs.pop() if degs else 0
        return None

    def partial(self, var: int) -> "MPoly":
        out = {}
        for exps, coeff in self.terms.items():
            k = exps[var]
            if k:
                e = list(exps)
                e[var] = k - 1
                key = tuple(e)
                add = coeff * k
                cur = out.get(key)
                out[key] = add if cur is None else cur + add
        return MPoly(self.arity, out, self.names)

    def evaluate(self, point):
        if len(point) != self.arity:
            raise ArityMismatchError("point length must match arity")
        acc = None
        max_deg = [self.degree_in(i) for i in range(self.arity)]
        powers = []
        for i, v in enumerate(point):
            row = [Fraction(1)]
            for _ in range(max_deg[i] if max_deg[i] > 0 else 0):
                row.append(row[-1] * v)
            powers.append(row)
        for exps, coeff in self.terms.items():
            term = coeff
            for i, k in enumerate(exps):
                if k:
                    term = term * powers[i][k]
            acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)

    def substitute(self, var: int, replacement) -> "MPoly":
        """Substitute a polynomial (same arity) or scalar for a variable."""
        if not isinstance(replacement, MPoly):
            replacement = MPoly.constant(self.arity, replacement, self.names)
        self._check(replacement)
        by_deg: dict[int, MPoly] = {}
        for exps, coeff in self.terms.items():
            k = exps[var]
            e = list(exps)
            e[var] = 0
            part = by_deg.setdefault(k, MPoly.zero(self.arity, self.names))
            by_deg[k] = part + MPoly(self.arity, {tuple(e): coeff}, self.names)
        # Horner in the substituted variable
        acc = MPoly.zero(self.arity, self.names)
        for k in range(max(by_deg, default=0), -1, -1):
            acc = acc * replacement
            if k in by_deg:
                acc = acc + by_deg[k]
        return acc

    def dehomogenize(self, var: int) -> "MPoly":
        """Set var = 1 and drop it from the variable list."""
        out: dict = {}
        for exps, coeff in self.terms.items():
            key = tuple(e for i, e in enumerate(exps) if i != var)
            cur = out.get(key)
            out[key] = coeff if cur is None else cur + coeff
        names = None
        if self.names:
            names = tuple(n for i, n in enumerate(self.names) if i != var)
        return MPoly(self.arity - 1, out, names)

    def drop_var(self, var: int) -> "MPoly":
        if self.degree_in(var) > 0:
            raise ValueError("variable still occurs; cannot drop it")
        return self.dehomogenize(var)

    def insert_var(self, position: int, name: str | None = None) -> "MPoly":
        out = {}
        for exps, coeff in self.terms.items():
            e = list(exps)
            e.insert(position, 0)
            out[tuple(e)] = coeff
        names = None
        if self.names:
            ns = list(self.names)
            ns.insert(position, name or f"v{position}")
            names = tuple(ns)
        return MPoly(self.arity + 1, out, names)

    def coeffs_wrt(self, var: int) -> list["MPoly"]:
        """Coefficient polynomials of var^0 .. var^deg (var removed)."""
        deg = self.degree_in(var)
        rows: list[dict] = [dict() for _ in range(deg + 1)]
        for exps, coeff in self.terms.items():
            key = tuple(e for i, e in enumerate(exps) if i != var)
            row = rows[exps[var]]
            cur = row.get(key)
            row[key] = coeff if cur is None else cur + coeff
        names = None
        if self.names:
            names = tuple(n for i, n in enumerate(self.names) if i != var)
        return [MPoly(self.arity - 1, r, names) for r in rows]

    def to_upoly(self, var: int = 0) -> UPoly:
        """Convert to a dense univariate polynomial; all other variables
        must be absent."""
        coeffs = [Fraction(0)] * (self.degree_in(var) + 1)
        for exps, coeff in self.terms.items():
            if any(e for i, e in enumerate(exps) if i != var):
                raise ValueError("polynomial is not univariate in the given variable")
            coeffs[exps[var]] = coeff
        return UPoly(coeffs)

    @classmethod
    def from_upoly(cls, p: UPoly, var: int, arity: int, names=None) -> "MPoly":
        terms = {}
        for i, c in enumerate(p.coeffs):
            if c:
                e = [0] * arity
                e[var] = i
                terms[tuple(e)] = c
        return cls(arity, terms, names)

    # -- leading-term division (graded lex)

    def leading_term(self):
        exps = max(self.terms, key=_term_key)
        return exps, self.terms[exps]

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Exact division; raises NotDivisibleError if it fails."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        quot: dict = {}
        rem = self
        dexps, dcoeff = divisor.leading_term()
        while rem.terms:
            rexps, rcoeff = rem.leading_term()
            texps = tuple(r - d for r, d in zip(rexps, dexps))
            if any(e < 0 for e in texps):
                raise NotDivisibleError("leading term does not divide")
            tcoeff = rcoeff / dcoeff
            quot[texps] = tcoeff
            t = MPoly(self.arity, {texps: tcoeff}, self.names)
            rem = rem - t * divisor
        return MPoly(self.arity, quot, self._names_for(divisor))

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisibleError:
            return False

    def content_scaled_primitive(self):
        """(scalar, primitive) with primitive having leading coefficient 1."""
        if self.is_zero():
            return Fraction(1), self
        _, lead = self.leading_term()
        return lead, self.scale(1 / lead)

    # -- canonical order, rendering, serialization

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]), reverse=True)

    def var_name(self, i: int) -> str:
        if self.names:
            return self.names[i]
        return f"x{i}"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            monos = [
                self.var_name(i) + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            ]
            cs = str(coeff)
            if any(op in cs[1:] for op in "+-") or "/" in cs:
                cs = f"({cs})"
            if monos and cs == "1":
                parts.append("*".join(monos))
            else:
                parts.append("*".join([cs] + monos) if monos else cs)
        return " + ".join(parts)

    def to_json(self):
        return {
            "arity": self.arity,
            "names": list(self.names) if self.names else None,
            "terms": [
                [list(exps), value_to_json(coeff)] for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "MPoly":
        terms = {tuple(e): value_from_json(c) for e, c in data["terms"]}
        return cls(data["arity"], terms, data.get("names"))

    def __repr__(self):
        return f"MPoly({self.to_text()})"


# ---------------------------------------------------------------------------
# resultants


def sylvester_matrix(p_coeffs: list, q_coeffs: list):
    """Sylvester matrix rows from coefficient lists (low degree first)."""
    m = len(p_coeffs) - 1
    n = len(q_coeffs) - 1
    size = m + n
    rows = []
    pdesc = list(reversed(p_coeffs))
    qdesc = list(reversed(q_coeffs))
    for i in range(n):
        rows.append([_zero_like(p_coeffs)] * i + pdesc + [_zero_like(p_coeffs)] * (n - 1 - i))
    for i in range(m):
        rows.append([_zero_like(q_coeffs)] * i + qdesc + [_zero_like(q_coeffs)] * (m - 1 - i))
    return rows


def _zero_like(coeffs):
    sample = coeffs[0]
    if isinstance(sample, MPoly):
        return MPoly.zero(sample.arity, sample.names)
    if isinstance(sample, UPoly):
        return UPoly()
    return 0 * sample


def resultant(p: MPoly, q: MPoly, var: int) -> MPoly:
    """Resultant of p and q with respect to one variable.

    Vanishes at a point of the remaining variables iff the two
    polynomials share a root above it or both leading coefficients
    vanish there.  Errors if both inputs are constant in the variable.
    """
    p._check(q)
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    dp = p.degree_in(var)
    dq = q.degree_in(var)
    if dp <= 0 and dq <= 0:
        raise ValueError("both polynomials are constant in the eliminated variable")
    if dp <= 0:
        return p.drop_var(var) ** dq
    if dq <= 0:
        return q.drop_var(var) ** dp
    pc = p.coeffs_wrt(var)
    qc = q.coeffs_wrt(var)
    live = [i for i in range(p.arity - 1) if any(c.degree_in(i) > 0 for c in pc + qc)]
    if len(live) <= 1:
        kept = live[0] if live else 0
        upolys_p = [_mp_to_upoly_in(c, kept) for c in pc]
        upolys_q = [_mp_to_upoly_in(c, kept) for c in qc]
        res = _resultant_interpolated(upolys_p, upolys_q)
        names = pc[0].names
        return MPoly.from_upoly(res, kept, p.arity - 1, names)
    rows = sylvester_matrix(pc, qc)
    det = det_bareiss(rows)
    if not isinstance(det, MPoly):
        det = MPoly.constant(p.arity - 1, det, pc[0].names)
    return det


def _mp_to_upoly_in(c: MPoly, var: int) -> UPoly:
    coeffs = [Fraction(0)] * (max(c.degree_in(var), 0) + 1)
    for exps, coeff in c.terms.items():
        coeffs[exps[var]] = coeff
    return UPoly(coeffs)


def _resultant_interpolated(pc: list[UPoly], qc: list[UPoly]) -> UPoly:
    """det of the Sylvester matrix with univariate entries, by evaluation
    at integers and Newton interpolation."""
    m = len(pc) - 1
    n = len(qc) - 1
    bound = n * max(c.degree for c in pc) + m * max(c.degree for c in qc)
    bound = max(bound, 0)
    points: list[int] = []
    values = []
    t = 0
    while len(points) < bound + 1:
        rows = _sylvester_rows_at(pc, qc, t)
        values.append(_det_scalar(rows))
        points.append(t)
        t = -t + (0 if t > 0 else 1)
    return interpolate(points, values)


def _sylvester_rows_at(pc, qc, t):
    pv = [c(Fraction(t)) for c in pc]
    qv = [c(Fraction(t)) for c in qc]
    m = len(pv) - 1
    n = len(qv) - 1
    rows = []
    pdesc = list(reversed(pv))
    qdesc = list(reversed(qv))
    for i in range(n):
        rows.append([Fraction(0)] * i + pdesc + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qdesc + [Fraction(0)] * (m - 1 - i))
    return rows


def _det_scalar(rows):
    """Determinant of a scalar matrix, fast path over Q and Q(sqrt2)."""
    flat = [e for row in rows for e in row]
    if all(isinstance(e, (int, Fraction)) for e in flat):
        den = 1
        for e in flat:
            d = Fraction(e).denominator
            den = den * d // math.gcd(den, d)
        ints = [[int(Fraction(e) * den) for e in row] for row in rows]
        det = _det_int(ints)
        return Fraction(det, den ** len(rows))
    if all(isinstance(e, (int, Fraction, QSqrt2)) for e in flat):
        den = 1
        for e in flat:
            q = QSqrt2.of(e)
            d = q.a.denominator
            den = den * d // math.gcd(den, d)
            d = q.b.denominator
            den = den * d // math.gcd(den, d)
        pairs = [
            [
                (int(QSqrt2.of(e).a * den), int(QSqrt2.of(e).b * den))
                for e in row
            ]
            for row in rows
        ]
        a, b = _det_zsqrt2(pairs)
        scale = Fraction(1, den ** len(rows))
        return QSqrt2(a * scale, b * scale)
    return det_bareiss(rows)


def _det_int(m: list[list[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def _det_zsqrt2(m: list[list[tuple[int, int]]]) -> tuple[int, int]:
    """Fraction-free determinant over Z[sqrt2] on (a, b) integer pairs."""
    n = len(m)
    sign = 1
    prev = (1, 0)
    for k in range(n - 1):
        if m[k][k] == (0, 0):
            piv = next((r for r in range(k + 1, n) if m[r][k] != (0, 0)), None)
            if piv is None:
                return (0, 0)
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pa, pb = m[k][k]
        qa, qb = prev
        nrm = qa * qa - 2 * qb * qb
        for i in range(k + 1, n):
            ia, ib = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                xa, xb = row_i[j]
                ya, yb = row_k[j]
                # (x * pivot - m[i][k] * m[k][j]) / prev, all in Z[sqrt2]
                na = xa * pa + 2 * xb * pb - (ia * ya + 2 * ib * yb)
                nb = xa * pb + xb * pa - (ia * yb + ib * ya)
                if nrm == 1 and qb == 0:
                    row_i[j] = (na, nb)
                else:
                    da = (na * qa - 2 * nb * qb) // nrm
                    db = (nb * qa - na * qb) // nrm
                    row_i[j] = (da, db)
            row_i[k] = (0, 0)
        prev = (pa, pb)
    a, b = m[n - 1][n - 1]
    return (sign * a, sign * b)
