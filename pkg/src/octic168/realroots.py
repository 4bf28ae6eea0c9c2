"""Certified real root isolation.

Two engines share one interface:

* integer Descartes bisection (VCA) for rational polynomials, used on the
  large eliminants coming out of resultant computations;
* Sturm sequences over Q(sqrt2) / tower coefficients for the small fiber
  polynomials, where exact signs are available.

Both return disjoint isolating intervals with non-root rational endpoints
(or degenerate [m, m] intervals for roots hit exactly), refinable to any
width.  Multiplicities come from Yun's squarefree decomposition.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import QSqrt2, SQRT2, sig, abs_upper
from .upoly import UPoly, interpolate


# ---------------------------------------------------------------------------
# integer polynomial helpers


def _as_int_poly(p: UPoly) -> list[int]:
    """Primitive integer coefficient list (constant first) of a Q-poly."""
    den = 1
    for c in p.coeffs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _zx_eval(f: list[int], x: Fraction):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _zx_eval_int(f: list[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _zx_derivative(f: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(f) if i]


def _zx_primitive(f: list[int]) -> list[int]:
    g = 0
    for v in f:
        g = math.gcd(g, v)
    if g > 1:
        f = [v // g for v in f]
    if f and f[-1] < 0:
        f = [-v for v in f]
    return f


def _zx_maxnorm(f: list[int]) -> int:
    return max(abs(v) for v in f) if f else 0


def zx_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd over Z[x] via the heuristic evaluation method.

    Evaluates at a large integer, takes an integer gcd and reconstructs
    from balanced digits; a candidate that divides both inputs at a
    sufficiently large evaluation point is the gcd (Char-Geddes-Gonnet).
    Falls back to a monic rational Euclid on repeated failure.
    """
    f = _zx_primitive([v for v in f])
    g = _zx_primitive([v for v in g])
    if not f:
        return g
    if not g:
        return f
    xi = 2 * min(_zx_maxnorm(f), _zx_maxnorm(g)) + 2
    for _ in range(8):
        fv = _zx_eval_int(f, xi)
        gv = _zx_eval_int(g, xi)
        if fv and gv:
            h = math.gcd(fv, gv)
            cand = []
            while h:
                d = ((h + xi // 2) % xi) - xi // 2
                cand.append(d)
                h = (h - d) // xi
            cand = _zx_primitive(cand)
            if cand and _zx_divides(cand, f) and _zx_divides(cand, g):
                return cand
        xi = xi * xi + 1
    pf = UPoly([Fraction(c) for c in f])
    pg = UPoly([Fraction(c) for c in g])
    return _as_int_poly(pf.gcd(pg))


def _zx_divides(d: list[int], f: list[int]) -> bool:
    num = [Fraction(c) for c in f]
    dd = len(d) - 1
    lc = Fraction(d[-1])
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            q = c / lc
            for j in range(dd + 1):
                num[i - dd + j] -= q * d[j]
    return all(c == 0 for c in num[:dd])


def zx_squarefree_part(f: list[int]) -> list[int]:
    f = _zx_primitive(list(f))
    if len(f) <= 2:
        return f
    g = zx_gcd(f, _zx_derivative(f))
    if len(g) == 1:
        return f
    pf = UPoly([Fraction(c) for c in f])
    pg = UPoly([Fraction(c) for c in g])
    return _as_int_poly(pf.exact_div(pg))


# ---------------------------------------------------------------------------
# Descartes / VCA isolation for squarefree integer polynomials


def _descartes_bound_01(f: list[int]) -> int:
    """Sign variation bound for the root count of f in the open (0, 1)."""
    n = len(f) - 1
    work = list(reversed(f))
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            work[j] += work[j + 1]
    # work now holds (x+1)^n f(1/(x+1)) coefficients, constant first after
    # the reversal; count sign changes ignoring zeros.
    count = 0
    last = 0
    for v in work:
        s = (v > 0) - (v < 0)
        if s and last and s != last:
            count += 1
        if s:
            last = s
    return count


def _vca(f: list[int], lo: Fraction, hi: Fraction, out: list):
    """Isolate roots of the original polynomial inside open (lo, hi).

    ``f`` is the image polynomial whose roots in open (0, 1) correspond to
    the original's roots in (lo, hi).
    """
    v = _descartes_bound_01(f)
    if v == 0:
        return
    if v == 1:
        out.append((lo, hi))
        return
    n = len(f) - 1
    # left half: 2^n f(x/2); right half: shift left-half by 1
    left = [c << (n - i) for i, c in enumerate(f)]
    right = list(left)
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            right[j] += right[j + 1]
    mid = (lo + hi) / 2
    if right[0] == 0:
        out.append((mid, mid))
        right = right[1:]
        # strip the matching root of the left image at x = 1
        left = _strip_root_at_one(left)
    _vca(_zx_primitive(left), lo, mid, out)
    _vca(_zx_primitive(right), mid, hi, out)


def _strip_root_at_one(f: list[int]) -> list[int]:
    # synthetic division by (x - 1), highest coefficient first
    coeffs = list(reversed(f))
    res = [coeffs[0]]
    for c in coeffs[1:-1]:
        res.append(res[-1] + c)
    return list(reversed(res))


def zx_isolate_squarefree(f: list[int]) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for all real roots of squarefree f."""
    f = _zx_primitive(list(f))
    if len(f) <= 1:
        return []
    out: list[tuple[Fraction, Fraction]] = []
    if f[0] == 0:
        out.append((Fraction(0), Fraction(0)))
        k = next(i for i, c in enumerate(f) if c)
        f = f[k:]
    if len(f) <= 1:
        return out
    n = len(f) - 1
    bound = 1 + max(abs(c) for c in f[:-1]) // abs(f[-1]) + 1
    b = 1
    while b < bound:
        b <<= 1
    # positive roots: g(x) = f(b*x) has matching roots in (0, 1)
    pos = [c * b**i for i, c in enumerate(f)]
    _vca(_zx_primitive(pos), Fraction(0), Fraction(b), out)
    neg_poly = [(-1) ** i * c * b**i for i, c in enumerate(f)]
    neg: list[tuple[Fraction, Fraction]] = []
    _vca(_zx_primitive(neg_poly), Fraction(0), Fraction(b), neg)
    for nlo, nhi in neg:
        out.append((-nhi, -nlo))
    out.sort(key=lambda iv: iv[0])
    return out


# ---------------------------------------------------------------------------
# isolated roots with refinement


@dataclass(frozen=True)
class IsolatedRoot:
    """One real root: open interval (lo, hi) or exact point lo == hi."""

    poly: UPoly  # squarefree polynomial vanishing at the root
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, width: Fraction) -> "IsolatedRoot":
        if self.is_exact or self.width <= width:
            return self
        lo, hi = refine_bisect(self.poly, self.lo, self.hi, width)
        return IsolatedRoot(self.poly, lo, hi, self.multiplicity)

    def contains_root(self, value) -> bool:
        """True iff ``value`` is the root isolated here.

        Decided exactly: the polynomial must vanish at the value and the
        value must lie inside the interval (endpoints are never roots).
        """
        if self.poly(value):
            return False
        if self.is_exact:
            return sig(value - self.lo) == 0
        return sig(value - self.lo) > 0 and sig(value - self.hi) < 0


def refine_bisect(p: UPoly, lo: Fraction, hi: Fraction, width: Fraction):
    """Bisect an isolating interval down to the requested width.

    (lo, hi) must isolate exactly one simple root of squarefree p; the
    endpoints themselves may be roots (they are excluded by openness), in
    which case the sign just inside comes from the derivative.
    """
    if lo == hi:
        return lo, hi
    slo = p.sign_at(lo)
    if slo == 0:
        slo = p.derivative().sign_at(lo)
    shi = p.sign_at(hi)
    if shi == 0:
        shi = -p.derivative().sign_at(hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def isolate_real_roots(p) -> list[IsolatedRoot]:
    """All real roots of a rational polynomial with multiplicities.

    Every real root lies in exactly one returned interval; intervals are
    pairwise disjoint and refinable.  Errors on the zero polynomial.
    """
    if not isinstance(p, UPoly):
        p = UPoly([Fraction(c) for c in p])
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    p = p.map_coeffs(Fraction)
    roots: list[IsolatedRoot] = []
    for factor, mult in p.squarefree_decomposition():
        ints = _as_int_poly(factor)
        for lo, hi in zx_isolate_squarefree(ints):
            roots.append(IsolatedRoot(factor, lo, hi, mult))
    return _make_disjoint(roots)


def _overlaps(a: IsolatedRoot, b: IsolatedRoot) -> bool:
    # precondition: a.lo <= b.lo
    if a.is_exact and b.is_exact:
        if a.lo == b.lo:
            raise ArithmeticError("duplicate exact root across factors")
        return False
    if a.is_exact:
        return b.lo < a.lo < b.hi
    if b.is_exact:
        return a.lo < b.lo < a.hi
    return b.lo < a.hi


def _make_disjoint(roots: list[IsolatedRoot]) -> list[IsolatedRoot]:
    changed = True
    while changed:
        changed = False
        roots.sort(key=lambda r: (r.lo, r.hi))
        for i in range(len(roots) - 1):
            a, b = roots[i], roots[i + 1]
            if not _overlaps(a, b):
                continue
            roots[i] = a.refine(a.width / 4) if not a.is_exact else a
            roots[i + 1] = b.refine(b.width / 4) if not b.is_exact else b
            changed = True
    return roots


# ---------------------------------------------------------------------------
# Sturm isolation over exact ordered fields (Q(sqrt2), towers)


def sturm_chain(p: UPoly) -> list[UPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        s = -r
        # normalize by a positive factor only: signs are the whole point
        lc = s.lc
        s = s.scale(1 / lc if sig(lc) > 0 else -(1 / lc))
        chain.append(s)
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _variations(chain: list[UPoly], x: Fraction) -> int:
    count = 0
    last = 0
    for q in chain:
        s = q.sign_at(x)
        if s and last and s != last:
            count += 1
        if s:
            last = s
    return count


def cauchy_bound(p: UPoly) -> Fraction:
    lc_abs = abs_upper(p.lc)
    best = Fraction(0)
    for c in p.coeffs[:-1]:
        if c:
            best = max(best, abs_upper(c))
    # |root| <= 1 + max|c_i| / |lc|; use a safe rational lower bound on |lc|
    lo_lc = _abs_lower(p.lc)
    return 2 + best / lo_lc


def _abs_lower(value) -> Fraction:
    from .arith import value_interval

    width = Fraction(1, 4)
    while True:
        lo, hi = value_interval(value, width)
        if lo > 0:
            return lo
        if hi < 0:
            return -hi
        width = width / 16
        if width < Fraction(1, 1 << 512):
            raise ZeroDivisionError("leading coefficient is zero")


def sturm_isolate(p: UPoly) -> list[IsolatedRoot]:
    """Isolating intervals for the real roots of p over an exact field.

    The input is made squarefree internally; returned roots carry
    multiplicity 1 relative to the squarefree part.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = p.squarefree_part()
    if sf.degree <= 0:
        return []
    exact: list[Fraction] = []
    while True:
        chain = sturm_chain(sf)
        bound = cauchy_bound(sf)
        lo, hi = -bound, bound
        if sf.sign_at(lo) == 0 or sf.sign_at(hi) == 0:  # pragma: no cover
            bound += 1
            lo, hi = -bound, bound
        stack = [(lo, hi, _variations(chain, lo), _variations(chain, hi))]
        out: list[IsolatedRoot] = []
        restart = False
        while stack:
            a, b, va, vb = stack.pop()
            n = va - vb
            if n == 0:
                continue
            if n == 1:
                out.append(IsolatedRoot(sf, a, b))
                continue
            m = (a + b) / 2
            if sf.sign_at(m) == 0:
                exact.append(m)
                sf = sf.exact_div(UPoly((-m, Fraction(1))))
                restart = True
                break
            vm = _variations(chain, m)
            stack.append((a, m, va, vm))
            stack.append((m, b, vm, vb))
        if not restart:
            break
        if sf.degree <= 0:
            out = []
            break
    roots = [IsolatedRoot(sf, m, m) for m in exact] + out
    return _make_disjoint(roots)


# ---------------------------------------------------------------------------
# exact rational and Q(sqrt2) root extraction


def simplest_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in the closed [lo, hi]."""
    if hi < lo:
        lo, hi = hi, lo
    if lo == hi:
        return lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_in_interval(-hi, -lo)
    if math.ceil(lo) <= hi:
        return Fraction(math.ceil(lo))
    fl = math.floor(lo)
    inner = simplest_in_interval(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def rational_roots(p: UPoly) -> list[tuple[Fraction, int]]:
    """All rational roots of a rational polynomial, with multiplicities.

    A rational root p/q of a primitive integer polynomial has q dividing
    the leading coefficient, so inside an isolating interval refined to
    width below 1/lc^2 the root is the unique rational with denominator
    at most |lc|, hence the simplest rational there.
    """
    p = p.map_coeffs(Fraction)
    if p.is_zero():
        raise ValueError("zero polynomial")
    found: list[tuple[Fraction, int]] = []
    for factor, mult in p.squarefree_decomposition():
        ints = _as_int_poly(factor)
        if len(ints) <= 1:
            continue
        lc = abs(ints[-1])
        fpoly = UPoly([Fraction(c) for c in ints])
        width = Fraction(1, 2 * lc * lc)
        for lo, hi in zx_isolate_squarefree(ints):
            if lo == hi:
                cand = lo
            else:
                lo2, hi2 = refine_bisect(fpoly, lo, hi, width)
                cand = simplest_in_interval(lo2, hi2)
                if cand.denominator > lc:
                    continue
            if fpoly(cand) == 0:
                found.append((cand, mult))
    return sorted(set(found))


def qsqrt2_parts(p: UPoly) -> tuple[UPoly, UPoly]:
    """Split a Q(sqrt2)-polynomial as A + sqrt2*B with rational A, B."""
    a = []
    b = []
    for c in p.coeffs:
        c = QSqrt2.of(c) if not isinstance(c, QSqrt2) else c
        a.append(c.a)
        b.append(c.b)
    return UPoly(a), UPoly(b)


def qsqrt2_conj_poly(p: UPoly) -> UPoly:
    return p.map_coeffs(lambda c: QSqrt2.of(c).conj())


def _trace_resultant(f: UPoly) -> UPoly:
    """T(t) = Res_x(f(x), conj(f)(2t - x)) as a rational polynomial.

    If alpha = r + s*sqrt2 is a root of f then t = r is a root of T, so
    rational roots of T enumerate all candidate traces.
    """
    d = f.degree
    fc = qsqrt2_conj_poly(f)
    npts = d * d + 1
    points = []
    values = []
    t0 = 0
    while len(points) < npts:
        t = Fraction(t0)
        inner = UPoly((QSqrt2(2 * t), QSqrt2(-1)))
        res = f.resultant(fc.compose(inner))
        res = QSqrt2.of(res)
        if res.b != 0:
            raise ArithmeticError("trace resultant must be rational")
        points.append(t)
        values.append(res.a)
        t0 = -t0 + (0 if t0 > 0 else 1)
    return interpolate(points, values)


def qsqrt2_roots(p: UPoly) -> tuple[list[tuple[QSqrt2, int]], UPoly]:
    """All Q(sqrt2) roots of a Q(sqrt2)-polynomial, with multiplicities.

    Returns (roots, residual) where residual is the monic cofactor after
    dividing the found roots out; its real roots are exactly the real
    roots of p outside Q(sqrt2).
    """
    p = p.map_coeffs(QSqrt2.of)
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots: list[tuple[QSqrt2, int]] = []
    residual = UPoly.const(QSqrt2(1))
    for factor, mult in p.squarefree_decomposition():
        froots = _qsqrt2_roots_squarefree(factor)
        for r in froots:
            factor = factor.exact_div(UPoly((-r, QSqrt2(1))))
            roots.append((r, mult))
        residual = residual * factor**mult
    return roots, residual


def _qsqrt2_roots_squarefree(f: UPoly) -> list[QSqrt2]:
    found: list[QSqrt2] = []
    a, b = qsqrt2_parts(f)
    # rational roots: common roots of the two rational parts
    if b.is_zero():
        g = a
    elif a.is_zero():
        g = b
    else:
        g = a.gcd(b)
    if g.degree > 0:
        for r, _ in rational_roots(g):
            if not f(QSqrt2(r)):
                found.append(QSqrt2(r))
    work = f
    for r in found:
        work = work.exact_div(UPoly((-r, QSqrt2(1))))
    if work.degree < 2:
        if work.degree == 1:
            r = QSqrt2.of(-work.coeffs[0] / work.coeffs[1])
            if r not in found and not f(r):
                found.append(r)
        return found
    # irrational candidates via the trace resultant
    trace = _trace_resultant(work)
    if trace.is_zero():
        raise ArithmeticError("degenerate trace resultant")
    for r, _ in rational_roots(trace):
        shifted = work.compose(UPoly((QSqrt2(r), SQRT2)))
        sa, sb = qsqrt2_parts(shifted)
        if sa.is_zero():
            g = sb
        elif sb.is_zero():
            g = sa
        else:
            g = sa.gcd(sb)
        if g.degree <= 0:
            continue
        for s, _ in rational_roots(g):
            if s == 0:
                continue
            cand = QSqrt2(r, s)
            if not f(cand) and cand not in found:
                found.append(cand)
    return found
