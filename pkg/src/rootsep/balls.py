"""Midpoint-radius arithmetic over mpmath arbitrary-precision floats.

Every operation propagates the exact interval term and then pads the radius
with a small multiple of the midpoint's ulp, so the enclosure also absorbs
the rounding of the midpoint computation itself. All arithmetic happens at
the ambient mpmath precision; callers set it once per pipeline run via
`working_precision`.

Real balls (RBall) and complex balls (CBall) are immutable value objects.
A radius of exactly zero marks a value known to be an exact binary number.
"""
from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf

from .errors import BallDomainError
from .gaussian import GaussianRational

#: extra bits carried internally above the user-requested precision
GUARD_BITS = 24

_ZERO = mpf(0)


@contextmanager
def working_precision(bits: int):
    """Set the ambient mpmath precision (plus guard bits) for a pipeline run."""
    with mp.workprec(bits + GUARD_BITS):
        yield


def _slack(mid) -> mpf:
    # 2^6 ulp cushion for the rounding of `mid` at the current precision
    a = abs(mid)
    if a == 0:
        return _ZERO
    return mpmath.ldexp(a, 8 - mp.prec)


def _as_mpf_pair(q: Fraction) -> tuple[mpf, mpf]:
    """Round a Fraction to the current precision; return (value, radius)."""
    if q.denominator == 1:
        v = mpf(q.numerator)
        if v == q.numerator:
            return v, _ZERO
        return v, _slack(v)
    v = mpf(q.numerator) / mpf(q.denominator)
    return v, 2 * _slack(v)


class RBall:
    """Real interval [mid - rad, mid + rad]."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        self.mid = mpf(mid) if not isinstance(mid, mpf) else mid
        r = mpf(rad) if not isinstance(rad, mpf) else rad
        if r < 0:
            raise ValueError("negative radius")
        self.rad = r

    @staticmethod
    def exact(x) -> "RBall":
        if isinstance(x, Fraction):
            v, r = _as_mpf_pair(x)
            return RBall(v, r)
        if isinstance(x, int):
            v = mpf(x)
            return RBall(v, _ZERO if v == x else _slack(v))
        return RBall(mpf(x), _ZERO)

    @staticmethod
    def one() -> "RBall":
        return RBall(mpf(1), _ZERO)

    @property
    def lo(self) -> mpf:
        if self.rad == 0:
            return self.mid
        return self.mid - self.rad - _slack(self.mid)

    @property
    def hi(self) -> mpf:
        if self.rad == 0:
            return self.mid
        return self.mid + self.rad + _slack(self.mid)

    def _coerce(self, other) -> "RBall | None":
        if isinstance(other, RBall):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, mpf):
            return RBall.exact(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.mid + o.mid
        return RBall(m, self.rad + o.rad + _slack(m))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.mid - o.mid
        return RBall(m, self.rad + o.rad + _slack(m))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.mid * o.mid
        r = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
        return RBall(m, r + _slack(m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        lb = abs(o.mid) - o.rad - _slack(o.mid)
        if lb <= 0:
            raise BallDomainError("division by a ball containing zero")
        m = self.mid / o.mid
        r = (self.rad + abs(m) * o.rad) / lb
        return RBall(m, r + _slack(m))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RBall(-self.mid, self.rad)

    def abs(self) -> "RBall":
        return RBall(abs(self.mid), self.rad)

    def sqrt(self) -> "RBall":
        lo = self.mid - self.rad
        if lo < 0:
            lo = _ZERO
        hi = self.mid + self.rad
        if hi < 0:
            raise BallDomainError("sqrt of a negative ball")
        slo = mpmath.sqrt(lo)
        shi = mpmath.sqrt(hi)
        m = (slo + shi) / 2
        return RBall(m, (shi - slo) / 2 + 2 * _slack(m))

    def root(self, k: int) -> "RBall":
        """k-th root of a nonnegative ball."""
        if k == 1:
            return self
        lo = self.mid - self.rad
        if lo < 0:
            lo = _ZERO
        hi = self.mid + self.rad
        if hi < 0:
            raise BallDomainError("root of a negative ball")
        slo = mpmath.root(lo, k) if lo > 0 else _ZERO
        shi = mpmath.root(hi, k) if hi > 0 else _ZERO
        m = (slo + shi) / 2
        return RBall(m, (shi - slo) / 2 + 2 * _slack(m))

    def powi(self, n: int) -> "RBall":
        """Integer power by binary exponentiation."""
        if n == 0:
            return RBall.one()
        if n < 0:
            return RBall.one() / self.powi(-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def powr(self, e) -> "RBall":
        """Real power of a strictly positive ball (monotone endpoints)."""
        e = mpf(e) if not isinstance(e, mpf) else e
        if e == 0:
            return RBall.one()
        lo = self.mid - self.rad
        if lo <= 0:
            raise BallDomainError("real power of a ball touching zero")
        hi = self.mid + self.rad
        a = lo**e
        b = hi**e
        if a > b:
            a, b = b, a
        m = (a + b) / 2
        return RBall(m, (b - a) / 2 + 4 * _slack(m))

    def max1(self) -> "RBall":
        """Enclosure of max(1, x)."""
        if self.mid - self.rad >= 1:
            return self
        hi = self.mid + self.rad
        if hi <= 1:
            return RBall.one()
        m = (1 + hi) / 2
        return RBall(m, (hi - 1) / 2 + _slack(m))

    def contains(self, x) -> bool:
        x = mpf(x) if not isinstance(x, mpf) else x
        return self.lo <= x <= self.hi

    def overlaps(self, other: "RBall") -> bool:
        return abs(self.mid - other.mid) <= self.rad + other.rad + _slack(self.mid) + _slack(other.mid)

    def __repr__(self):
        return f"RBall({mpmath.nstr(self.mid, 17)} +/- {mpmath.nstr(self.rad, 5)})"

    def to_json(self) -> dict:
        return {"mid": float(self.mid), "rad": float(self.rad)}


class CBall:
    """Complex disk {z : |z - mid| <= rad}."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        self.mid = mid if isinstance(mid, mpc) else mpc(mid)
        r = mpf(rad) if not isinstance(rad, mpf) else rad
        if r < 0:
            raise ValueError("negative radius")
        self.rad = r

    @staticmethod
    def exact(x) -> "CBall":
        if isinstance(x, GaussianRational):
            return CBall.from_gaussian(x)
        if isinstance(x, Fraction):
            v, r = _as_mpf_pair(x)
            return CBall(mpc(v), r)
        if isinstance(x, int):
            v = mpf(x)
            return CBall(mpc(v), _ZERO if v == x else _slack(v))
        return CBall(mpc(x), _ZERO)

    @staticmethod
    def from_gaussian(g: GaussianRational) -> "CBall":
        re, rr = _as_mpf_pair(g.re)
        im, ri = _as_mpf_pair(g.im)
        return CBall(mpc(re, im), rr + ri)

    @staticmethod
    def one() -> "CBall":
        return CBall(mpc(1), _ZERO)

    def _coerce(self, other) -> "CBall | None":
        if isinstance(other, CBall):
            return other
        if isinstance(other, RBall):
            return CBall(mpc(other.mid), other.rad)
        if isinstance(other, (int, Fraction, GaussianRational)) or isinstance(other, (mpf, mpc, complex)):
            return CBall.exact(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.mid + o.mid
        return CBall(m, self.rad + o.rad + _slack(m))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.mid - o.mid
        return CBall(m, self.rad + o.rad + _slack(m))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self.mid * o.mid
        r = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
        return CBall(m, r + 2 * _slack(m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        lb = abs(o.mid) - o.rad - _slack(o.mid)
        if lb <= 0:
            raise BallDomainError("division by a ball containing zero")
        m = self.mid / o.mid
        r = (self.rad + abs(m) * o.rad) / lb
        return CBall(m, r + 2 * _slack(m))

    def __neg__(self):
        return CBall(-self.mid, self.rad)

    def abs(self) -> RBall:
        a = abs(self.mid)
        return RBall(a, self.rad + _slack(a))

    def conj(self) -> "CBall":
        return CBall(mpc(self.mid.real, -self.mid.imag), self.rad)

    def powi(self, n: int) -> "CBall":
        if n == 0:
            return CBall.one()
        if n < 0:
            return CBall.one() / self.powi(-n)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad + _slack(self.mid)

    def overlaps(self, other: "CBall") -> bool:
        return abs(self.mid - other.mid) <= self.rad + other.rad + _slack(self.mid) + _slack(other.mid)

    def __repr__(self):
        return f"CBall({mpmath.nstr(self.mid, 17)} +/- {mpmath.nstr(self.rad, 5)})"

    def to_json(self) -> dict:
        return {
            "re": float(self.mid.real),
            "im": float(self.mid.imag),
            "rad": float(self.rad),
        }


def ball_sum(items) -> "CBall | RBall":
    total = None
    for x in items:
        total = x if total is None else total + x
    if total is None:
        raise ValueError("empty sum")
    return total


def ball_product(items, one=None):
    total = one
    for x in items:
        total = x if total is None else total * x
    if total is None:
        return RBall.one() if one is None else one
    return total


def ball_horner(coeffs: "list[CBall]", z: CBall) -> CBall:
    """Evaluate sum coeffs[k] z^k by Horner's rule in ball arithmetic."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def ball_row_norm(row: "list[CBall]") -> RBall:
    """Euclidean norm of a complex ball vector."""
    total = RBall.exact(0)
    for z in row:
        a = z.abs()
        total = total + a * a
    return total.sqrt()


def ball_det(matrix: "list[list[CBall]]") -> CBall:
    """Determinant by LU elimination with partial pivoting on |midpoint|.

    Raises BallDomainError when a pivot ball contains zero, which callers
    treat as a certification failure at the current precision.
    """
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = CBall.one()
    sign = 1
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(m[i][k].mid))
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        if pivot.contains_zero():
            raise BallDomainError("singular-to-precision pivot in ball determinant")
        det = det * pivot
        for i in range(k + 1, n):
            if m[i][k].mid == 0 and m[i][k].rad == 0:
                continue
            f = m[i][k] / pivot
            for j in range(k + 1, n):
                m[i][j] = m[i][j] - f * m[k][j]
    if sign < 0:
        det = -det
    return det
