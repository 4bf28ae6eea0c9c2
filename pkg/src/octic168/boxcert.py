"""Rational interval arithmetic for emptiness certificates.

Used to certify that a polynomial system has no real common zero above
an isolating interval of an eliminant root: intervals are exact rational
pairs, so every exclusion is a proof, never a float heuristic.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import value_interval
from .mpoly import MPoly
from .upoly import UPoly

Interval = tuple[Fraction, Fraction]


def imul(a: Interval, b: Interval) -> Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


def iadd(a: Interval, b: Interval) -> Interval:
    return a[0] + b[0], a[1] + b[1]


def excludes_zero(a: Interval) -> bool:
    return a[0] > 0 or a[1] < 0


def ipoly_eval(coeffs: list[Interval], x: Interval) -> Interval:
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = iadd(imul(acc, x), c)
    return acc


def _upoly_interval_coeffs(p: UPoly, width: Fraction) -> list[Interval]:
    return [value_interval(c, width) for c in p.coeffs]


def _eval_coeff_rows(rows: list[list[UPoly]], x: Interval, width: Fraction):
    """Evaluate z-coefficient polynomials (UPoly in x) over the x-interval."""
    out = []
    for row in rows:
        out.append([ipoly_eval(_upoly_interval_coeffs(c, width), x) for c in row])
    return out


def _z_bound(coeff_intervals: list[list[Interval]]) -> Fraction | None:
    """Cauchy-type bound on |z| for common zeros.

    Only a polynomial whose true z-leading coefficient interval excludes
    zero can bound the root locus; anything weaker would be unsound.
    Returns 0 when some polynomial provably never vanishes (empty system),
    None when no polynomial qualifies.
    """
    best = None
    for coeffs in coeff_intervals:
        if len(coeffs) == 1:
            if excludes_zero(coeffs[0]):
                return Fraction(0)
            continue
        lc = coeffs[-1]
        if not excludes_zero(lc):
            continue
        lc_low = min(abs(lc[0]), abs(lc[1]))
        top = max(max(abs(lo), abs(hi)) for lo, hi in coeffs[:-1])
        cand = 1 + top / lc_low
        if best is None or cand < best:
            best = cand
    return best


def _clear_z_range(coeff_intervals, zlo: Fraction, zhi: Fraction, budget: list[int]) -> bool:
    if budget[0] <= 0:
        return False
    budget[0] -= 1
    z = (zlo, zhi)
    for coeffs in coeff_intervals:
        if excludes_zero(ipoly_eval(coeffs, z)):
            return True
    if zhi - zlo < Fraction(1, 1 << 40):
        return False
    mid = (zlo + zhi) / 2
    return _clear_z_range(coeff_intervals, zlo, mid, budget) and _clear_z_range(
        coeff_intervals, mid, zhi, budget
    )


def no_common_zero_over_interval(
    polys: list[MPoly],
    xlo: Fraction,
    xhi: Fraction,
    max_splits: int = 6,
    cell_budget: int = 4096,
) -> bool:
    """Certify that the system of bivariate polynomials (variables x, z)
    has no real common zero with x in [xlo, xhi].

    Sound but incomplete: True is a proof of emptiness, False only means
    the certificate attempt gave up.
    """
    rows = [[_mp_to_upoly(c) for c in p.coeffs_wrt(1)] for p in polys]
    return _empty_rec(rows, xlo, xhi, max_splits, cell_budget)


def _mp_to_upoly(c: MPoly) -> UPoly:
    coeffs = [0] * (max(c.degree_in(0), 0) + 1)
    for exps, coeff in c.terms.items():
        coeffs[exps[0]] = coeff
    return UPoly(coeffs)


def _empty_rec(rows, xlo, xhi, splits_left, cell_budget) -> bool:
    width = (xhi - xlo) / 16 if xhi > xlo else Fraction(1, 1 << 20)
    width = min(width, Fraction(1, 1 << 10))
    x = (xlo, xhi)
    coeff_intervals = _eval_coeff_rows(rows, x, width)
    bound = _z_bound(coeff_intervals)
    if bound == 0:
        return True
    if bound is not None:
        budget = [cell_budget]
        if _clear_z_range(coeff_intervals, -bound, bound, budget):
            return True
    if splits_left <= 0:
        return False
    mid = (xlo + xhi) / 2
    return _empty_rec(rows, xlo, mid, splits_left - 1, cell_budget) and _empty_rec(
        rows, mid, xhi, splits_left - 1, cell_budget
    )
