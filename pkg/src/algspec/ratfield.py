"""Exact arithmetic in C(s) and the pole-based spectrum.

Polynomials and rational functions carry exact coefficients: each scalar is
a pair of `fractions.Fraction` values (real and imaginary part), so gcd
cancellation and reduction are exact and no spurious poles appear.  Floats
enter only at root finding, which runs a square-free decomposition first
(restoring multiplicities exactly) and then an Aberth-style simultaneous
iteration on each square-free factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

__all__ = [
    "Qi", "CPoly", "RatFunc", "Pole", "SingularitySource", "Spectrum",
    "RootFindingError", "reduce", "poles", "spectrum_of_rational",
    "partial_fractions", "PartialFractions", "alg_deriv", "snap_axes",
]

# Relative tolerance for merging conjugate-symmetric float noise in
# frequency sets and for deciding that a singularity sits on the real axis.
FREQ_TOL = 1e-9


class RootFindingError(ArithmeticError):
    """Simultaneous root iteration failed to converge within its budget."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, float, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Qi:
    """Exact complex scalar: rational real and imaginary parts.

    Elements of Q(i).  Floats convert via their exact binary expansion, so
    values observed numerically can still take part in exact arithmetic.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "Qi":
        if isinstance(x, Qi):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(_frac(x))

    @classmethod
    def _try(cls, x):
        try:
            return cls.coerce(x)
        except TypeError:
            return None

    def conjugate(self) -> "Qi":
        return Qi(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        other = Qi._try(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return Qi(-self.re, -self.im)

    def __add__(self, other):
        other = Qi._try(other)
        if other is None:
            return NotImplemented
        return Qi(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Qi._try(other)
        if other is None:
            return NotImplemented
        return Qi(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = Qi._try(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = Qi._try(other)
        if other is None:
            return NotImplemented
        return Qi(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Qi._try(other)
        if other is None:
            return NotImplemented
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Qi((self.re * other.re + self.im * other.im) / d,
                  (self.im * other.re - self.re * other.im) / d)

    def __rtruediv__(self, other):
        other = Qi._try(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return _QI_ONE / (self ** (-k))
        out, base = _QI_ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def _key(self):
        return (self.re, self.im)

    def __repr__(self):
        return f"Qi({self.re!r}, {self.im!r})"

    def __str__(self):
        # display form: "3", "-1/2", "i", "2i", "(1+2i)"; components whose
        # denominators betray float origins render at 12 significant digits
        if self.im == 0:
            return _frac_str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{_frac_str(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imtxt = "i" if mag == 1 else f"{_frac_str(mag)}i"
        return f"({_frac_str(self.re)}{sign}{imtxt})"


def _frac_str(f: Fraction) -> str:
    if f.denominator > 1_000_000_000:
        return format(float(f), ".12g")
    return str(f)


_QI_ZERO = Qi(0)
_QI_ONE = Qi(1)


class CPoly:
    """Polynomial with exact complex-rational coefficients, ascending degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Qi.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def scalar(cls, c) -> "CPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1   # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Qi:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return CPoly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return CPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CPoly):
            scalar = Qi._try(other)
            if scalar is None:
                return NotImplemented
            return CPoly([c * scalar for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return CPoly()
        out = [_QI_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if not a:
                continue
            for k, b in enumerate(other.coeffs):
                out[j + k] = out[j + k] + a * b
        return CPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = CPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "CPoly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        if dn < dd:
            return CPoly(), self
        lead = other.coeffs[-1]
        quot = [_QI_ZERO] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * oc
        return CPoly(quot), CPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def deriv(self) -> "CPoly":
        return CPoly([c * Qi(k) for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "CPoly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        return CPoly([c / lead for c in self.coeffs])

    def eval_qi(self, x: Qi) -> Qi:
        acc = _QI_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def to_complex(self) -> list[complex]:
        return [complex(c) for c in self.coeffs]

    def reverse(self, degree: int | None = None) -> "CPoly":
        """z^d * p(1/z) for d >= deg(p); used for the point at infinity."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        out = [_QI_ZERO] * (d + 1)
        for k, c in enumerate(self.coeffs):
            out[d - k] = c
        return CPoly(out)

    def format(self, var: str = "s") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            txt = _term_str(c, var, k)
            if parts and not txt.startswith("-"):
                parts.append("+ " + txt)
            elif parts:
                parts.append("- " + txt[1:])
            else:
                parts.append(txt)
        return " ".join(parts)

    def __repr__(self):
        return f"CPoly({self.format()!r})"


def _coeff_str(c: Qi) -> str:
    s = str(c)
    if "/" in s and not s.startswith("("):
        return f"({s})"
    return s


def _term_str(c: Qi, var: str, k: int) -> str:
    if k == 0:
        return _coeff_str(c)
    vtxt = var if k == 1 else f"{var}^{k}"
    if c == _QI_ONE:
        return vtxt
    if c == Qi(-1):
        return "-" + vtxt
    return f"{_coeff_str(c)}{vtxt}"


CPoly.ZERO = CPoly()
CPoly.ONE = CPoly([1])
CPoly.S = CPoly([0, 1])


def poly_gcd(a: CPoly, b: CPoly) -> CPoly:
    """Monic gcd by the Euclidean algorithm on exact coefficients."""
    while not b.is_zero:
        r = a % b
        a, b = b, r.monic()
    return a.monic() if not a.is_zero else a


def square_free_factors(p: CPoly) -> list[tuple[CPoly, int]]:
    """Yun's decomposition: [(factor, multiplicity)], factors monic."""
    p = p.monic()
    if p.degree <= 0:
        return []
    g = poly_gcd(p, p.deriv())
    if g.degree == 0:
        return [(p, 1)]
    out = []
    b = p // g
    d = (p.deriv() // g) - b.deriv()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        d = (d // a) - b.deriv()
        i += 1
    return out


class RatFunc:
    """Element of C(s): reduced numerator over monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, float, Fraction, Qi, complex)):
            num = CPoly.scalar(Qi.coerce(num))
        if den is None:
            den = CPoly.ONE
        elif isinstance(den, (int, float, Fraction, Qi, complex)):
            den = CPoly.scalar(Qi.coerce(den))
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num, self.den = CPoly.ZERO, CPoly.ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading()
        self.num = num * (_QI_ONE / lead)
        self.den = den * (_QI_ONE / lead)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_strictly_proper(self) -> bool:
        return self.num.degree < self.den.degree

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __add__(self, other):
        other = _coerce_rat(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce_rat(other))

    def __rsub__(self, other):
        return _coerce_rat(other) - self

    def __mul__(self, other):
        other = _coerce_rat(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rat(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rat(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc(CPoly.ONE) / (self ** (-k))
        out = RatFunc(CPoly.ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def deriv(self) -> "RatFunc":
        """Algebraic derivative d/ds, by the quotient rule, reduced."""
        return RatFunc(self.num.deriv() * self.den - self.num * self.den.deriv(),
                       self.den * self.den)

    def __call__(self, z: complex) -> complex:
        return self.num(z) / self.den(z)

    def subst_reciprocal(self) -> "RatFunc":
        """r(1/z) as an element of C(z), exact."""
        d = max(self.num.degree, self.den.degree, 0)
        return RatFunc(self.num.reverse(d), self.den.reverse(d))

    def format(self, var: str = "s") -> str:
        if self.is_polynomial:
            return self.num.format(var)
        ntxt = self.num.format(var)
        dtxt = self.den.format(var)
        if self.num.degree > 0:
            ntxt = f"({ntxt})"
        return f"{ntxt} / ({dtxt})"

    def __repr__(self):
        return f"RatFunc({self.format()!r})"


def _coerce_rat(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    return RatFunc(x)


RatFunc.ZERO = RatFunc(CPoly.ZERO)
RatFunc.ONE = RatFunc(CPoly.ONE)
RatFunc.S = RatFunc(CPoly.S)


def reduce(num: CPoly, den: CPoly) -> RatFunc:
    """Exact gcd cancellation and monic-denominator normalization."""
    return RatFunc(num, den)


def alg_deriv(r: RatFunc) -> RatFunc:
    """The algebraic derivative d/ds on C(s)."""
    return r.deriv()


# ---------------------------------------------------------------------------
# Root finding


def _aberth(coeffs: list[complex], max_iter: int = 120) -> list[complex]:
    """Roots of a square-free polynomial: eigenvalue estimates refined by
    simultaneous (Aberth-style) iteration to residual <= 1e-12 * ||coeffs||."""
    c = np.asarray(coeffs, dtype=complex)
    deg = len(c) - 1
    if deg == 1:
        return [complex(-c[0] / c[1])]
    tol = 1e-12 * max(1.0, float(np.max(np.abs(c))))
    dc = c[1:] * np.arange(1, deg + 1)
    z = np.roots(c[::-1]).astype(complex)
    for _ in range(max_iter):
        p = np.polynomial.polynomial.polyval(z, c)
        if float(np.max(np.abs(p))) <= tol:
            return [complex(v) for v in z]
        dp = np.polynomial.polynomial.polyval(z, dc)
        stale = np.abs(dp) == 0.0
        if np.any(stale):
            z[stale] += 1e-8 * (1.0 + np.abs(z[stale]))
            continue
        w = p / dp
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        diff[diff == 0] = np.inf
        coupling = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - w * coupling
        denom[np.abs(denom) < 1e-300] = 1.0
        z = z - w / denom
    p = np.polynomial.polynomial.polyval(z, c)
    raise RootFindingError(
        f"root iteration stalled: residual {float(np.max(np.abs(p))):.3e} "
        f"above tolerance {tol:.3e} after {max_iter} iterations")


@dataclass(frozen=True)
class Pole:
    location: complex
    multiplicity: int


def poly_roots(p: CPoly) -> list[Pole]:
    """All complex roots with exact multiplicities, sorted by (re, im)."""
    if p.degree <= 0:
        return []
    out = []
    for factor, mult in square_free_factors(p):
        if factor.degree == 1:
            root = complex(-(factor.coeffs[0] / factor.coeffs[1]))
            out.append(Pole(root, mult))
        else:
            for root in _aberth(factor.to_complex()):
                out.append(Pole(root, mult))
    # Rounded leading key so conjugate pairs with 1e-16 real-part noise
    # still order deterministically; raw parts break genuine near-ties.
    out.sort(key=lambda q: (round(q.location.real, 9),
                            round(q.location.imag, 9),
                            q.location.real, q.location.imag))
    return out


def poles(r: RatFunc) -> list[Pole]:
    """Poles of a reduced rational function, with multiplicities."""
    return poly_roots(r.den)


# ---------------------------------------------------------------------------
# Spectrum


@dataclass(frozen=True)
class SingularitySource:
    """One singular point feeding a spectrum: a pole of the rational image,
    or a classified singularity of a defining equation."""
    location: complex
    kind: str          # "pole" | "logarithmic" | "none"
    order: int = 0     # pole multiplicity; 0 when not a pole


@dataclass(frozen=True)
class Spectrum:
    """Finite frequency set plus the singularities that produced it.

    Frequencies are the nonzero imaginary parts of the source locations;
    real-located sources contribute nothing, and 0 is never listed.
    """
    frequencies: tuple[float, ...]
    sources: tuple[SingularitySource, ...]
    infinite_singularity: bool = False

    def to_json(self) -> str:
        freqs = ",".join(_g15(f) for f in self.frequencies)
        srcs = ",".join(
            '{"re":%s,"im":%s,"kind":"%s","order":%d}'
            % (_g15(s.location.real), _g15(s.location.imag), s.kind, s.order)
            for s in self.sources)
        flag = "true" if self.infinite_singularity else "false"
        return ('{"frequencies":[%s],"sources":[%s],"infinite_singularity":%s}'
                % (freqs, srcs, flag))


def _g15(x: float) -> str:
    if x == 0:
        return "0"
    return format(float(x), ".15g")


def snap_axes(z: complex, tol: float = FREQ_TOL) -> complex:
    """Zero a real or imaginary part that is pure roundoff at the point's
    own scale, so reported locations sit on an axis when the exact point
    does.  Used at reporting boundaries only; raw roots stay untouched for
    numerical work."""
    re, im = z.real, z.imag
    scale = max(1.0, abs(re), abs(im))
    if re != 0 and abs(re) <= tol * scale:
        re = 0.0
    if im != 0 and abs(im) <= tol * scale:
        im = 0.0
    return complex(re, im)


def clean_frequencies(values) -> tuple[float, ...]:
    """Sorted distinct nonzero frequencies; conjugate-symmetric float noise
    is merged at FREQ_TOL relative tolerance."""
    vals = [float(v) for v in values if abs(v) > FREQ_TOL * max(1.0, abs(v))]
    vals.sort()
    merged: list[float] = []
    for v in vals:
        if merged and abs(v - merged[-1]) <= FREQ_TOL * max(1.0, abs(v), abs(merged[-1])):
            merged[-1] = 0.5 * (merged[-1] + v)
        else:
            merged.append(v)
    # snap +/- pairs that differ only by float noise to exact symmetry
    for j, v in enumerate(merged):
        if v >= 0:
            continue
        for k in range(len(merged) - 1, j, -1):
            w = merged[k]
            if w > 0 and abs(v + w) <= FREQ_TOL * max(1.0, abs(w)):
                m = 0.5 * (w - v)
                merged[j], merged[k] = -m, m
                break
    return tuple(merged)


def spectrum_of_rational(r: RatFunc) -> Spectrum:
    """Frequencies of an element of C(s): imaginary parts of its poles.

    All-real-pole inputs (Laurent polynomials and the rest of the real-pole
    subring) yield an empty frequency set, as does any polynomial part.
    """
    ps = poles(r)
    sources = tuple(SingularitySource(snap_axes(p.location), "pole",
                                      p.multiplicity) for p in ps)
    freqs = clean_frequencies(p.location.imag for p in ps)
    return Spectrum(freqs, sources, infinite_singularity=False)


# ---------------------------------------------------------------------------
# Partial fractions


class PFTerm(NamedTuple):
    pole: complex
    order: int
    coefficient: complex


class PartialFractions(NamedTuple):
    terms: tuple[PFTerm, ...]
    poly_part: CPoly


def _taylor_coeffs(coeffs: list[complex], p: complex, k: int) -> list[complex]:
    # first k Taylor coefficients of the polynomial at p, via repeated
    # synthetic division by (s - p)
    c = list(coeffs)
    out = []
    for _ in range(k):
        if not c:
            out.append(0j)
            continue
        r = 0j
        for j in range(len(c) - 1, -1, -1):
            r = r * p + c[j]
            c[j] = r
        out.append(c[0])
        c = c[1:]
    return out


def _series_div(a: list[complex], b: list[complex]) -> list[complex]:
    out = []
    for l in range(len(a)):
        acc = a[l]
        for j in range(1, l + 1):
            acc -= b[j] * out[l - j]
        out.append(acc / b[0])
    return out


def _float_local_terms(rem_c, ps) -> list[PFTerm]:
    terms: list[PFTerm] = []
    for j, p in enumerate(ps):
        rest = np.array([1.0 + 0j])
        for k, q in enumerate(ps):
            if k == j:
                continue
            lin = np.array([-q.location, 1.0 + 0j])
            for _ in range(q.multiplicity):
                rest = np.convolve(rest, lin)
        a = _taylor_coeffs(rem_c, p.location, p.multiplicity)
        b = _taylor_coeffs(list(rest), p.location, p.multiplicity)
        c = _series_div(a, b)
        for l, cl in enumerate(c):
            terms.append(PFTerm(p.location, p.multiplicity - l, cl))
    return terms


def _exact_shift(coeffs, pq: Qi, count: int) -> list:
    # first `count` Taylor coefficients at pq by repeated synthetic
    # division, carried out in exact rational arithmetic
    c = list(coeffs)
    out = []
    for _ in range(count):
        if not c:
            out.append(Qi(0))
            continue
        r = Qi(0)
        for j in range(len(c) - 1, -1, -1):
            r = r * pq + c[j]
            c[j] = r
        out.append(c[0])
        c = c[1:]
    return out


def _exact_local_terms(rem: CPoly, den: CPoly, ps) -> list[PFTerm]:
    # Float pole components are dyadic rationals, so the shifted series can
    # be computed without rounding; the only residual error is the distance
    # from the float pole to the true root.  The den series starts at index
    # multiplicity because the low coefficients vanish there up to that
    # same distance, so dropping them is what division by (s-p)^m means.
    terms: list[PFTerm] = []
    for p in ps:
        m = p.multiplicity
        pq = Qi.coerce(p.location)
        a = _exact_shift(rem.coeffs, pq, m)
        b = _exact_shift(den.coeffs, pq, 2 * m)[m:]
        if b[0] == Qi(0):
            raise RootFindingError(
                "degenerate local series at pole {0}".format(p.location))
        c: list[Qi] = []
        for l in range(m):
            acc = a[l]
            for j in range(1, l + 1):
                acc = acc - b[j] * c[l - j]
            c.append(acc / b[0])
        for l, cl in enumerate(c):
            terms.append(PFTerm(p.location, m - l, complex(cl)))
    return terms


def partial_fractions(r: RatFunc) -> PartialFractions:
    """Decompose r as poly_part + sum coefficient/(s-pole)^order.

    The polynomial part comes from exact division.  Pole-wise coefficients
    come from local Taylor expansions around each (float) pole, computed in
    floating point first and recomputed in exact rational arithmetic when
    the float pass cannot be certified.  The result is always verified by
    reconstruction to 1e-9 in coefficient norm.
    """
    quot, rem = divmod(r.num, r.den)
    terms: list[PFTerm] = []
    if not rem.is_zero:
        ps = poles(r)
        rem_c = rem.to_complex()
        terms = _float_local_terms(rem_c, ps)
        if _reconstruction_error(rem_c, ps, terms) > 1e-12:
            terms = _exact_local_terms(rem, r.den, ps)
        err = _reconstruction_error(rem_c, ps, terms)
        if err > 1e-9:
            raise RootFindingError(
                f"partial-fraction reconstruction error {err:.3e} "
                f"exceeds 1e-9")
    terms = [t for t in terms if t.coefficient != 0]
    terms.sort(key=lambda t: (t.pole.real, t.pole.imag, t.order))
    return PartialFractions(tuple(terms), quot)


def _reconstruction_error(rem_c, ps, terms) -> float:
    # rem(s) must equal sum over poles of (local series) * (den / local factor)
    deg = sum(p.multiplicity for p in ps)
    acc = np.zeros(max(deg, 1), dtype=complex)
    for t in terms:
        rest = np.array([1.0 + 0j])
        for q in ps:
            power = q.multiplicity - (t.order if q.location == t.pole else 0)
            lin = np.array([-q.location, 1.0 + 0j])
            for _ in range(power):
                rest = np.convolve(rest, lin)
        acc[:len(rest)] += t.coefficient * rest
    ref = np.zeros(max(deg, 1), dtype=complex)
    ref[:len(rem_c)] = rem_c
    scale = max(1.0, float(np.max(np.abs(ref))))
    return float(np.max(np.abs(acc - ref))) / scale
