"""Univariate polynomial arithmetic.

ExactPoly carries Gaussian-rational coefficients and supports the exact
operations the rest of the pipeline relies on: derivative, gcd by
content-stripped pseudo-remainder sequences, and square-free decomposition
(Yun), which determines the multiplicity structure of the roots.

NumericPoly carries complex floating coefficients at a stated precision; it
exists as an input mode and offers Horner evaluation with a certified
rounding radius relative to its stored coefficients.

The zero polynomial is a dedicated state (empty coefficient tuple, is_zero
flag); asking for its degree is an error rather than a sentinel value.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mpc

from .balls import CBall, ball_horner, working_precision
from .errors import ValidationError
from .gaussian import GR_ONE, GR_ZERO, GaussianRational, rational_content


def _coerce_scalar(c) -> GaussianRational:
    if isinstance(c, GaussianRational):
        return c
    if isinstance(c, (int, Fraction)):
        return GaussianRational.of(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


@dataclass(frozen=True)
class ExactPoly:
    """Polynomial over the Gaussian rationals, coefficients lowest degree first.

    An empty coefficient tuple represents the zero polynomial. For nonzero
    polynomials the leading coefficient is guaranteed nonzero.
    """

    coeffs: tuple[GaussianRational, ...]

    @staticmethod
    def from_coeffs(seq) -> "ExactPoly":
        cs = [_coerce_scalar(c) for c in seq]
        while cs and cs[-1].is_zero:
            cs.pop()
        return ExactPoly(tuple(cs))

    @staticmethod
    def zero() -> "ExactPoly":
        return ExactPoly(())

    @staticmethod
    def constant(c) -> "ExactPoly":
        return ExactPoly.from_coeffs([c])

    @staticmethod
    def x() -> "ExactPoly":
        return ExactPoly((GR_ZERO, GR_ONE))

    @staticmethod
    def from_roots(roots, multiplicities=None, lead=1) -> "ExactPoly":
        """lead * prod (X - root_i)^{m_i}, expanded exactly."""
        p = ExactPoly.constant(lead)
        if multiplicities is None:
            multiplicities = [1] * len(roots)
        for root, m in zip(roots, multiplicities):
            factor = ExactPoly.from_coeffs([-_coerce_scalar(root), GR_ONE])
            for _ in range(m):
                p = p * factor
        return p

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading(self) -> GaussianRational:
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GR_ZERO

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly.from_coeffs(
            [self.coeff(k) + other.coeff(k) for k in range(n)]
        )

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly.from_coeffs(
            [self.coeff(k) - other.coeff(k) for k in range(n)]
        )

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        if self.is_zero or other.is_zero:
            return ExactPoly.zero()
        out = [GR_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ExactPoly.from_coeffs(out)

    def scale(self, c) -> "ExactPoly":
        c = _coerce_scalar(c)
        if c.is_zero:
            return ExactPoly.zero()
        return ExactPoly(tuple(a * c for a in self.coeffs))

    def shift_up(self, k: int) -> "ExactPoly":
        """Multiply by X^k."""
        if self.is_zero or k == 0:
            return self
        return ExactPoly((GR_ZERO,) * k + self.coeffs)

    def monic(self) -> "ExactPoly":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.leading
        if lc == GR_ONE:
            return self
        return ExactPoly(tuple(a / lc for a in self.coeffs))

    def divmod(self, other: "ExactPoly") -> "tuple[ExactPoly, ExactPoly]":
        """Field division: self = q * other + r with deg r < deg other."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return ExactPoly.zero(), ExactPoly.zero()
        if self.degree < other.degree:
            return ExactPoly.zero(), self
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        q = [GR_ZERO] * (dq + 1)
        lc = other.leading
        for k in range(dq, -1, -1):
            c = rem[other.degree + k] / lc
            q[k] = c
            if not c.is_zero:
                for i, b in enumerate(other.coeffs):
                    rem[i + k] = rem[i + k] - c * b
        return ExactPoly.from_coeffs(q), ExactPoly.from_coeffs(rem[: other.degree])

    def __floordiv__(self, other: "ExactPoly") -> "ExactPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> "ExactPoly":
        if self.is_zero or self.degree == 0:
            return ExactPoly.zero()
        return ExactPoly.from_coeffs(
            [self.coeffs[k] * k for k in range(1, len(self.coeffs))]
        )

    def eval_exact(self, z) -> GaussianRational:
        z = _coerce_scalar(z)
        acc = GR_ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def primitive(self) -> "ExactPoly":
        """Strip the positive rational content (keeps coefficients small in
        pseudo-remainder sequences)."""
        if self.is_zero:
            return self
        c = rational_content(list(self.coeffs))
        if c == 1:
            return self
        inv = 1 / c
        return ExactPoly(tuple(a * inv for a in self.coeffs))

    def max_coeff_abs_upper(self) -> Fraction:
        """Cheap upper bound on max |coefficient| (|re| + |im|)."""
        best = Fraction(0)
        for c in self.coeffs:
            v = abs(c.re) + abs(c.im)
            if v > best:
                best = v
        return best

    def __str__(self) -> str:
        from .parsing import render_exact_poly

        return render_exact_poly(self)


def pseudo_rem(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced mod b."""
    if b.is_zero:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    if a.is_zero or a.degree < b.degree:
        return a
    lc = b.leading
    rem = a
    steps = a.degree - b.degree + 1
    for _ in range(steps):
        if rem.is_zero or rem.degree < b.degree:
            rem = rem.scale(lc)
            continue
        k = rem.degree - b.degree
        rem = rem.scale(lc) - b.shift_up(k).scale(rem.leading)
    return rem


def gcd_exact(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Monic gcd over the Gaussian rationals, computed with a content-stripped
    pseudo-remainder sequence."""
    if a.is_zero and b.is_zero:
        raise ValidationError("gcd of two zero polynomials is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    x, y = a.primitive(), b.primitive()
    if x.degree < y.degree:
        x, y = y, x
    while not y.is_zero:
        r = pseudo_rem(x, y).primitive()
        x, y = y, r
    if x.degree == 0:
        return ExactPoly.constant(1)
    return x.monic()


def square_free_decomposition(p: ExactPoly) -> list[tuple[ExactPoly, int]]:
    """Yun decomposition: p = lc * prod factor_i^{mult_i} with monic, pairwise
    coprime, square-free factors. Output ordered by increasing multiplicity."""
    if p.is_zero or p.degree == 0:
        raise ValidationError("square-free decomposition needs degree >= 1")
    pm = p.monic()
    dp = pm.derivative()
    g = gcd_exact(pm, dp)
    if g.degree == 0:
        return [(pm, 1)]
    out: list[tuple[ExactPoly, int]] = []
    w = pm // g
    y = dp // g
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        gi = gcd_exact(w, z)
        if gi.degree > 0:
            out.append((gi.monic(), i))
        w = w // gi
        if w.degree == 0:
            break
        y = z // gi
        z = y - w.derivative()
        i += 1
    return out


def distinct_root_count(p: ExactPoly) -> int:
    """r = number of distinct complex roots, computed exactly."""
    return sum(f.degree for f, _ in square_free_decomposition(p))


@dataclass(frozen=True)
class NumericPoly:
    """Polynomial with complex floating coefficients at a stated precision."""

    coeffs: tuple[mpc, ...]
    precision: int

    def __post_init__(self):
        if not self.coeffs:
            raise ValidationError("numeric polynomial needs at least one coefficient")
        if abs(self.coeffs[-1]) == 0:
            raise ValidationError("numeric polynomial has zero leading coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> mpc:
        return self.coeffs[-1]

    def derivative(self) -> "NumericPoly":
        if self.degree == 0:
            raise ValidationError("derivative of a numeric constant is the zero polynomial")
        return NumericPoly(
            tuple(self.coeffs[k] * k for k in range(1, len(self.coeffs))),
            self.precision,
        )


def eval_poly(p, z, precision: int | None = None) -> CBall:
    """Horner evaluation returning a ball whose radius covers all rounding.

    Exact polynomials contribute only conversion ulps; numeric polynomials are
    evaluated relative to their stored coefficients. With `precision` set the
    evaluation runs at that precision, otherwise at the ambient one.
    """
    if precision is not None:
        with working_precision(precision):
            return eval_poly(p, z)
    zb = z if isinstance(z, CBall) else CBall.exact(z)
    if isinstance(p, ExactPoly):
        if p.is_zero:
            return CBall.exact(0)
        cs = [CBall.from_gaussian(c) for c in p.coeffs]
    elif isinstance(p, NumericPoly):
        cs = [CBall(c) for c in p.coeffs]
    else:
        raise TypeError(f"cannot evaluate {type(p).__name__}")
    return ball_horner(cs, zb)
