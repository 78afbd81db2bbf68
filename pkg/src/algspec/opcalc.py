"""Bijection between exponential polynomials and strictly proper rationals.

A signal sum(P_i(t) * e^(a_i t)) corresponds term by term to an element of
C(s): the monomial c*t^k at rate a maps to c*k!/(s-a)^(k+1), and the Dirac
impulse to the constant 1.  The algebraic derivative d/ds on the rational
side corresponds to multiplication by -t on the signal side.

Rates and coefficients are exact scalars; sin and cos enter through Euler's
formula, so a real trigonometric signal becomes a conjugate pair of complex
exponential terms and its rational image has real coefficients again.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .ratfield import CPoly, Qi, RatFunc, partial_fractions
from .sigexpr import (Add, Const, Cos, Dirac, Exp, Mul, Pow, Sin, SignalClass,
                      SignalExpr, TimeVar, ExpressionError, classify,
                      diff_time, evaluate)

__all__ = ["ExpPoly", "from_signal", "to_rational", "to_exppoly",
           "dirac_image", "mult_by_minus_t", "taylor_truncate"]


@dataclass(frozen=True)
class ExpPoly:
    """Finite sum of polynomial-times-exponential terms.

    terms is a tuple of (rate, poly) pairs with pairwise distinct rates,
    nonzero polynomials, and canonical (Re, Im) rate order; the empty tuple
    is the zero signal.
    """

    terms: tuple = ()

    def __post_init__(self):
        merged: dict[Qi, CPoly] = {}
        for rate, poly in self.terms:
            rate = Qi.coerce(rate)
            if not isinstance(poly, CPoly):
                poly = CPoly(poly)
            if rate in merged:
                merged[rate] = merged[rate] + poly
            else:
                merged[rate] = poly
        out = [(r, p) for r, p in merged.items() if not p.is_zero]
        out.sort(key=lambda rp: (rp[0].re, rp[0].im))
        object.__setattr__(self, "terms", tuple(out))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, t: float) -> complex:
        acc = 0j
        for rate, poly in self.terms:
            acc += poly(complex(t)) * cmath.exp(complex(rate) * t)
        return acc

    def isclose(self, other: "ExpPoly", tol: float = 1e-9) -> bool:
        """Agreement of rates and coefficients within tol.

        Terms are paired by nearest rate rather than by list position, so
        rate values that differ only by roundoff may order differently in
        the two operands without spoiling the comparison; negligible
        unmatched terms are ignored.
        """
        def norm(p: CPoly) -> float:
            return max((abs(complex(c)) for c in p.coeffs), default=0.0)

        remaining = list(other.terms)
        for ra, pa in self.terms:
            za = complex(ra)
            best, dist = None, None
            for k, (rb, _) in enumerate(remaining):
                d = abs(za - complex(rb))
                if dist is None or d < dist:
                    best, dist = k, d
            if best is None or dist > tol * (1 + abs(za)):
                if norm(pa) <= tol:
                    continue
                return False
            _, pb = remaining.pop(best)
            width = max(len(pa.coeffs), len(pb.coeffs))
            ca = list(pa.coeffs) + [Qi(0)] * (width - len(pa.coeffs))
            cb = list(pb.coeffs) + [Qi(0)] * (width - len(pb.coeffs))
            for a, b in zip(ca, cb):
                if abs(complex(a) - complex(b)) > tol * (1 + abs(complex(a))):
                    return False
        return all(norm(p) <= tol for _, p in remaining)

    def format(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for rate, poly in self.terms:
            ptxt = poly.format("t")
            if poly.degree > 0:
                ptxt = f"({ptxt})"
            if not rate:
                parts.append(ptxt)
            else:
                parts.append(f"{ptxt}*exp({rate}t)")
        return " + ".join(parts)


_QI_I = Qi(0, 1)
_QI_HALF = Qi(Fraction(1, 2))


def _phase_factor(phase: Fraction) -> Qi:
    # e^(i*phase); exact 1 when the phase is zero
    if phase == 0:
        return Qi(1)
    f = float(phase)
    return Qi(Fraction(math.cos(f)), Fraction(math.sin(f)))


def _terms_of(e: SignalExpr) -> dict[Qi, CPoly]:
    if isinstance(e, Const):
        return {Qi(0): CPoly([e.value])}
    if isinstance(e, TimeVar):
        return {Qi(0): CPoly([0, 1])}
    if isinstance(e, Exp):
        return {e.rate: CPoly.ONE}
    if isinstance(e, (Sin, Cos)):
        w = Qi(0, e.omega)
        ph = _phase_factor(e.phase)
        if isinstance(e, Sin):
            c_plus = ph / (2 * _QI_I)
            c_minus = -(ph.conjugate()) / (2 * _QI_I)
        else:
            c_plus = ph * _QI_HALF
            c_minus = ph.conjugate() * _QI_HALF
        out: dict[Qi, CPoly] = {}
        for rate, c in ((w, c_plus), (-w, c_minus)):
            out[rate] = out.get(rate, CPoly.ZERO) + CPoly([c])
        return out
    if isinstance(e, Add):
        out = {}
        for term in e.terms:
            for rate, poly in _terms_of(term).items():
                out[rate] = out.get(rate, CPoly.ZERO) + poly
        return out
    if isinstance(e, Mul):
        acc = {Qi(0): CPoly.ONE}
        for factor in e.factors:
            acc = _convolve(acc, _terms_of(factor))
        return acc
    if isinstance(e, Pow):
        acc = {Qi(0): CPoly.ONE}
        base = _terms_of(e.base)
        for _ in range(e.k):
            acc = _convolve(acc, base)
        return acc
    raise ExpressionError(
        "expression is not an exponential polynomial")


def _convolve(a: dict[Qi, CPoly], b: dict[Qi, CPoly]) -> dict[Qi, CPoly]:
    out: dict[Qi, CPoly] = {}
    for ra, pa in a.items():
        for rb, pb in b.items():
            rate = ra + rb
            out[rate] = out.get(rate, CPoly.ZERO) + pa * pb
    return out


def from_signal(e: SignalExpr) -> ExpPoly:
    """Expand an exponential-polynomial expression to canonical terms."""
    if classify(e) != SignalClass.EXP_POLYNOMIAL:
        raise ExpressionError("expression is not an exponential polynomial")
    return ExpPoly(tuple(_terms_of(e).items()))


def to_rational(x: ExpPoly) -> RatFunc:
    """Operational image in C(s): c*t^k at rate a -> c*k!/(s-a)^(k+1)."""
    acc = RatFunc.ZERO
    for rate, poly in x.terms:
        base = RatFunc(CPoly.ONE, CPoly([-rate, 1]))
        for k, c in enumerate(poly.coeffs):
            if not c:
                continue
            acc = acc + RatFunc(c * Qi(math.factorial(k))) * base ** (k + 1)
    return acc


def to_exppoly(r: RatFunc) -> ExpPoly:
    """Inverse image of a strictly proper rational function."""
    if not r.is_strictly_proper:
        raise ValueError("inverse image requires a strictly proper input")
    pf = partial_fractions(r)
    terms: dict[Qi, CPoly] = {}
    for pole, order, coeff in pf.terms:
        rate = Qi.coerce(pole)
        k = order - 1
        mono = [Qi(0)] * k + [Qi.coerce(coeff) / Qi(math.factorial(k))]
        terms[rate] = terms.get(rate, CPoly.ZERO) + CPoly(mono)
    return ExpPoly(tuple(terms.items()))


def dirac_image() -> RatFunc:
    """The impulse corresponds to the constant 1; its spectrum is empty."""
    return RatFunc.ONE


def mult_by_minus_t(x: ExpPoly) -> ExpPoly:
    """Time-domain counterpart of d/ds: each P(t) becomes -t*P(t)."""
    shift = CPoly([0, -1])
    return ExpPoly(tuple((rate, poly * shift) for rate, poly in x.terms))


def taylor_truncate(e: SignalExpr, t0: float, order: int) -> ExpPoly:
    """Truncated Taylor expansion of e at t0, as a pure polynomial signal.

    The result has the single rate 0, hence an empty spectrum, regardless
    of the spectrum of e; coefficients come from iterated symbolic
    differentiation, so polynomial inputs reproduce exactly.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    base = CPoly([Qi.coerce(-Fraction(t0)), Qi(1)])   # (t - t0)
    acc = CPoly.ZERO
    d = e
    for k in range(order + 1):
        value = evaluate(d, t0)
        coeff = Qi.coerce(value) / Qi(math.factorial(k))
        if coeff:
            acc = acc + base ** k * coeff
        if k < order:
            d = diff_time(d)
    return ExpPoly(((Qi(0), acc),))
