"""High-precision root finding and the canonical root set.

Exact inputs go through square-free decomposition first, so every factor has
simple roots; each factor is then solved by Aberth-Ehrlich simultaneous
iteration. Each approximation z gets a rigorous inclusion radius
n * |f(z) / f'(z)| (the disk of that radius around z contains at least one
root of f); pairwise disjoint disks then certify a bijection between disks
and roots. Certification failures trigger doubled-precision retries before
an error is raised.

Numeric inputs are solved directly and clustered into multiplicity groups by
a precision-derived tolerance; their radii are tolerance-based rather than
residual-based, matching the accuracy actually carried by the coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpc, mpf

from .balls import CBall, GUARD_BITS, RBall
from .errors import IndistinguishableRootsError, PreconditionError, ValidationError
from .poly import ExactPoly, NumericPoly, square_free_decomposition

#: doubled-precision certification retries before giving up
MAX_ESCALATIONS = 4
_MAX_ABERTH_ITERS = 600


@dataclass(frozen=True)
class RootEntry:
    value: CBall
    multiplicity: int


@dataclass(frozen=True)
class RootSet:
    """Distinct roots with multiplicities in canonical order.

    Canonical order is ascending by (modulus, real part, imaginary part) of
    the certified midpoints; the error disks are pairwise disjoint.
    """

    entries: tuple[RootEntry, ...]
    leading_coeff: CBall
    total_degree: int
    precision_bits: int

    @property
    def r(self) -> int:
        return len(self.entries)

    def values(self) -> list[CBall]:
        return [e.value for e in self.entries]

    def multiplicities(self) -> list[int]:
        return [e.multiplicity for e in self.entries]

    def distance(self, i: int, j: int) -> RBall:
        return (self.entries[i].value - self.entries[j].value).abs()

    def nearest_partner(self, j: int) -> tuple[int, RBall]:
        """Index of the closest different root (ties broken by smallest
        canonical index) and the distance."""
        if self.r < 2:
            raise PreconditionError("no different root: the root set has a single entry")
        best_i = -1
        best: RBall | None = None
        for i in range(self.r):
            if i == j:
                continue
            d = self.distance(i, j)
            if best is None or d.mid < best.mid:
                best, best_i = d, i
        return best_i, best

    def to_json(self) -> list[dict]:
        return [
            {**e.value.to_json(), "multiplicity": e.multiplicity}
            for e in self.entries
        ]


def sep(roots: RootSet, j: int) -> RBall:
    """Distance from root j to its closest different root."""
    if not 0 <= j < roots.r:
        raise ValidationError(f"root index {j} out of range 0..{roots.r - 1}")
    _, d = roots.nearest_partner(j)
    return d


def min_pairwise_distance(roots: RootSet) -> RBall:
    if roots.r < 2:
        raise PreconditionError("no different root: the root set has a single entry")
    best = None
    for j in range(roots.r):
        for i in range(j):
            d = roots.distance(i, j)
            if best is None or d.mid < best.mid:
                best = d
    return best


def _canonical_key(z: mpc):
    return (abs(z), z.real, z.imag)


def _horner2(coeffs: list[mpc], z: mpc) -> tuple[mpc, mpc]:
    """Value and derivative in one pass."""
    p = coeffs[-1]
    dp = mpc(0)
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(coeffs: list[mpc], tol_bits: int, warm: list[mpc] | None = None) -> list[mpc]:
    """Aberth-Ehrlich iteration on a polynomial given by mpc coefficients.

    Runs until the corrections reach the tolerance or stagnate near the
    rounding floor (ill-conditioned clusters stagnate well above any preset
    tolerance); the caller's certification step is the arbiter of success.
    Deterministic for fixed inputs and precision.
    """
    n = len(coeffs) - 1
    if n == 1:
        return [-coeffs[0] / coeffs[1]]
    if warm is not None:
        zs = [mpc(z) for z in warm]
    else:
        radius = 1 + max(abs(c) for c in coeffs[:-1]) / abs(coeffs[-1])
        zs = [
            mpf("0.7")
            * radius
            * mpmath.exp(mpc(0, 2 * mpmath.pi * (k + mpf("0.25")) / n + mpf("0.5") / n))
            for k in range(n)
        ]
    tol = mpmath.ldexp(mpf(1), -tol_bits)
    best = mpf("inf")
    stalled = 0
    for _ in range(_MAX_ABERTH_ITERS):
        worst = mpf(0)
        for k in range(n):
            z = zs[k]
            p, dp = _horner2(coeffs, z)
            if p == 0:
                continue
            if dp == 0:
                zs[k] = z * (1 + mpmath.ldexp(mpf(1), -12)) + mpmath.ldexp(mpf(1), -12)
                worst = mpf("inf")
                continue
            newton = p / dp
            s = mpc(0)
            for j in range(n):
                if j != k:
                    diff = z - zs[j]
                    if diff == 0:
                        diff = mpmath.ldexp(mpf(1), -mp.prec // 2)
                    s += 1 / diff
            denom = 1 - newton * s
            w = newton if denom == 0 else newton / denom
            zs[k] = z - w
            rel = abs(w) / (1 + abs(zs[k]))
            if rel > worst:
                worst = rel
        if worst <= tol:
            return zs
        if worst > mpf("1e-6"):
            # global phase: corrections may hover before convergence sets in
            stalled = 0
            best = worst
        elif worst < best / 2:
            best = worst
            stalled = 0
        else:
            stalled += 1
            if stalled >= 12:
                return zs
    return zs


def _certified_radius(factor: ExactPoly, z: mpc) -> mpf | None:
    """Upper bound on the distance from z to the nearest root of `factor`."""
    n = factor.degree
    zb = CBall(z)
    cs = [CBall.from_gaussian(c) for c in factor.coeffs]
    val = cs[-1]
    dval = CBall.exact(0)
    for c in reversed(cs[:-1]):
        dval = dval * zb + val
        val = val * zb + c
    dlo = dval.abs().lo
    if dlo <= 0:
        return None
    return n * val.abs().hi / dlo


def _solve_factor(factor: ExactPoly, p_bits: int, work_bits: int, warm=None) -> list[tuple[mpc, mpf]] | None:
    """Roots of one square-free factor with certified radii, or None."""
    with mp.workprec(work_bits):
        coeffs = [CBall.from_gaussian(c).mid for c in factor.coeffs]
        # the tolerance follows the working precision, so escalated retries
        # genuinely separate closer roots
        zs = _aberth(coeffs, max(p_bits + 12, work_bits - 24), warm=warm)
        out = []
        for z in zs:
            rad = _certified_radius(factor, z)
            if rad is None:
                return None
            target = mpmath.ldexp(max(mpf(1), abs(z)), -(p_bits // 2))
            if rad > target:
                return None
            out.append((z, rad))
        # disjoint disks within the factor certify one simple root per disk
        for i in range(len(out)):
            for j in range(i):
                gap = abs(out[i][0] - out[j][0]) * (1 - mpmath.ldexp(mpf(1), 8 - mp.prec))
                if gap <= out[i][1] + out[j][1]:
                    return None
        return out


def _find_roots_exact(p: ExactPoly, precision: int) -> RootSet:
    decomposition = square_free_decomposition(p)
    work = precision + GUARD_BITS
    cluster: list[str] = [str(f) for f, _ in decomposition]
    for _ in range(MAX_ESCALATIONS + 1):
        factor_roots: list[tuple[mpc, mpf, int]] = []
        ok = True
        for factor, mult in decomposition:
            solved = _solve_factor(factor, precision, work)
            if solved is None:
                ok = False
                cluster = [f"factor {factor}"]
                break
            factor_roots.extend((z, rad, mult) for z, rad in solved)
        if ok:
            # roots of distinct coprime factors are distinct; their disks must
            # still separate at this precision for downstream certificates
            bad_pair = None
            with mp.workprec(work):
                for i in range(len(factor_roots)):
                    for j in range(i):
                        zi, ri, _ = factor_roots[i]
                        zj, rj, _ = factor_roots[j]
                        gap = abs(zi - zj) * (1 - mpmath.ldexp(mpf(1), 8 - mp.prec))
                        if gap <= ri + rj:
                            bad_pair = (j, i)
                            cluster = [mpmath.nstr(zj, 8), mpmath.nstr(zi, 8)]
                            break
                    if bad_pair:
                        break
            if bad_pair is None:
                with mp.workprec(work):
                    factor_roots.sort(key=lambda t: _canonical_key(t[0]))
                    entries = tuple(
                        RootEntry(CBall(z, rad), mult) for z, rad, mult in factor_roots
                    )
                    lead = CBall.from_gaussian(p.leading)
                return RootSet(entries, lead, p.degree, precision)
        work *= 2
    raise IndistinguishableRootsError(precision, cluster)


def _find_roots_numeric(p: NumericPoly, precision: int) -> RootSet:
    work = precision + GUARD_BITS
    d = p.degree
    cluster: list[str] = []
    for _ in range(MAX_ESCALATIONS + 1):
        with mp.workprec(work):
            coeffs = [mpc(c) for c in p.coeffs]
            zs = _aberth(coeffs, precision // 2 + 8)
            maxc = max(abs(c) for c in coeffs)
            tau = mpmath.ldexp(1 + maxc, -(precision // 4))
            zs = sorted(zs, key=_canonical_key)
            clusters: list[list[mpc]] = []
            for z in zs:
                placed = False
                for cl in clusters:
                    if any(abs(z - w) <= tau for w in cl):
                        cl.append(z)
                        placed = True
                        break
                if not placed:
                    clusters.append([z])
            entries = []
            for cl in clusters:
                center = sum(cl) / len(cl)
                spread = max((abs(z - center) for z in cl), default=mpf(0))
                entries.append(RootEntry(CBall(center, spread + tau / 2), len(cl)))
            # clusters must be mutually separated beyond their radii
            bad = None
            for i in range(len(entries)):
                for j in range(i):
                    gap = abs(entries[i].value.mid - entries[j].value.mid)
                    if gap <= entries[i].value.rad + entries[j].value.rad:
                        bad = (j, i)
                        cluster = [
                            mpmath.nstr(entries[j].value.mid, 8),
                            mpmath.nstr(entries[i].value.mid, 8),
                        ]
                        break
                if bad:
                    break
            if bad is not None:
                work *= 2
                continue
            entries.sort(key=lambda e: _canonical_key(e.value.mid))
            return RootSet(tuple(entries), CBall(p.leading), d, precision)
    raise IndistinguishableRootsError(precision, cluster)


def find_roots(p, precision: int = 128) -> RootSet:
    """Find all distinct roots with multiplicities and certified error disks.

    Exact polynomials get multiplicities from the square-free decomposition;
    numeric polynomials are clustered by a tolerance derived from the stated
    precision.
    """
    if isinstance(p, ExactPoly):
        if p.is_zero or p.degree < 1:
            raise ValidationError("root finding needs degree >= 1")
        return _find_roots_exact(p, precision)
    if isinstance(p, NumericPoly):
        if p.degree < 1:
            raise ValidationError("root finding needs degree >= 1")
        return _find_roots_numeric(p, precision)
    raise TypeError(f"cannot find roots of {type(p).__name__}")
