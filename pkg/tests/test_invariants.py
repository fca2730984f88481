"""Mahler measure, discriminant, subdiscriminants: examples and two-route checks."""
import random
from fractions import Fraction

import pytest

from rootsep import (
    ExactPoly,
    GaussianRational,
    JensenUnavailableError,
    ValidationError,
    compute_invariants,
    discriminant,
    find_roots,
    mahler_measure,
    mahler_measure_jensen,
    parse_polynomial,
    sdisc_abs_from_roots,
    sdisc_abs_from_subresultants,
    subdiscriminant,
)
from rootsep.balls import working_precision
from rootsep.invariants import principal_subresultant


class TestMahler:
    def test_unit_roots(self):
        roots = find_roots(parse_polynomial("x^2 - 1"), 128)
        with working_precision(128):
            m = mahler_measure(roots)
        assert abs(m.mid - 1) < 1e-30

    def test_leading_coefficient(self):
        roots = find_roots(parse_polynomial("2*x^2 - 2"), 128)
        with working_precision(128):
            m = mahler_measure(roots)
        assert abs(m.mid - 2) < 1e-30

    def test_mixed_radii(self):
        # (x-2)(x-1/2): max(1,2) * max(1,1/2) = 2
        roots = find_roots(parse_polynomial("(x-2)*(x-1/2)"), 128)
        with working_precision(128):
            m = mahler_measure(roots)
        assert abs(m.mid - 2) < 1e-30


class TestJensen:
    def test_single_root_at_origin(self):
        value, gap = mahler_measure_jensen(parse_polynomial("x"), 64)
        assert abs(value - 1) < 1e-12
        assert gap < 1e-12

    def test_linear(self):
        value, _ = mahler_measure_jensen(parse_polynomial("2*x - 4"), 128)
        assert abs(value - 4) < 1e-9

    def test_imaginary_pair(self):
        value, _ = mahler_measure_jensen(parse_polynomial("x^2 + 4"), 128)
        assert abs(value - 4) < 1e-9

    def test_near_circle_rejected(self):
        with pytest.raises(JensenUnavailableError):
            mahler_measure_jensen(parse_polynomial("x^2 - 1"), 64)

    def test_two_route_agreement(self):
        rng = random.Random(7)
        for _ in range(12):
            # roots kept well away from the unit circle so the quadrature converges
            n = rng.randint(1, 4)
            roots = []
            while len(roots) < n:
                q = GaussianRational.of(
                    Fraction(rng.choice([-7, -5, -4, -3, 3, 4, 5, 7]), rng.choice([1, 10]))
                )
                if q not in roots and abs(abs(float(q.re)) - 1) > 0.15:
                    roots.append(q)
            p = ExactPoly.from_roots(roots, lead=rng.choice([1, 2]))
            rs = find_roots(p, 128)
            with working_precision(128):
                product_route = mahler_measure(rs)
            nodes = 256
            while True:
                value, gap = mahler_measure_jensen(p, nodes, roots=rs)
                if gap < 1e-8 * abs(value) or nodes >= 1 << 14:
                    break
                nodes *= 2
            assert abs(value - product_route.mid) / product_route.mid < 1e-6


class TestDiscriminant:
    def test_quadratics(self):
        assert discriminant(parse_polynomial("x^2 - 1")) == GaussianRational.of(4)
        assert discriminant(parse_polynomial("x^2 + x + 1")) == GaussianRational.of(-3)

    def test_repeated_root(self):
        assert discriminant(parse_polynomial("(x-1)^2")).is_zero

    def test_degree_one_rejected(self):
        with pytest.raises(ValidationError):
            discriminant(parse_polynomial("x - 1"))

    def test_zero_iff_multiple_root(self):
        rng = random.Random(31)
        for _ in range(25):
            n = rng.randint(2, 4)
            roots = []
            while len(roots) < n:
                q = GaussianRational.of(Fraction(rng.randint(-5, 5), rng.randint(1, 2)))
                if q not in roots:
                    roots.append(q)
            mults = [rng.randint(1, 2) for _ in roots]
            p = ExactPoly.from_roots(roots, mults)
            disc = discriminant(p)
            assert disc.is_zero == any(m >= 2 for m in mults)


class TestSubresultantRoute:
    def test_square_free_equals_disc(self):
        b = sdisc_abs_from_subresultants(parse_polynomial("x^2 - 1"))
        assert b.mid == 4 and b.rad == 0

    def test_multiple_root_instance(self):
        b = sdisc_abs_from_subresultants(parse_polynomial("(x-1)^2*x"))
        assert b.mid == 2 and b.rad == 0

    def test_r_equal_one_convention(self):
        b = sdisc_abs_from_subresultants(parse_polynomial("x^2 - 2*x + 1"))
        assert b.mid == 1 and b.rad == 0
        rb = sdisc_abs_from_roots(find_roots(parse_polynomial("(x-1)^3"), 128))
        assert rb.mid == 1 and rb.rad == 0

    def test_exact_values(self):
        k, v = subdiscriminant(parse_polynomial("(x-1)^2*x"))
        assert k == 1 and v == GaussianRational.of(-2)
        k0, v0 = subdiscriminant(parse_polynomial("x^2 - 1"))
        assert k0 == 0 and v0.norm() == 16

    def test_resultant_via_index_zero(self):
        p = parse_polynomial("x^2 - 1")
        res = principal_subresultant(p, p.derivative(), 0)
        assert res == GaussianRational.of(-4)


class TestRootsRoute:
    def test_quadratic(self):
        rb = sdisc_abs_from_roots(find_roots(parse_polynomial("x^2 - 1"), 128))
        assert abs(rb.mid - 4) < 1e-30

    def test_multiplicity(self):
        rb = sdisc_abs_from_roots(find_roots(parse_polynomial("(x-1)^2*x"), 128))
        assert abs(rb.mid - 2) < 1e-30


def _forced_multiplicity_poly(rng):
    n = rng.randint(1, 4)
    roots = []
    while len(roots) < n:
        q = GaussianRational(
            Fraction(rng.randint(-6, 6), rng.randint(1, 3)),
            Fraction(rng.randint(-2, 2)) if rng.random() < 0.35 else Fraction(0),
        )
        if q not in roots:
            roots.append(q)
    mults = [rng.randint(1, 3) for _ in roots]
    if all(m == 1 for m in mults):
        mults[0] = 2
    lead = rng.choice([GaussianRational.of(1), GaussianRational.of(2),
                       GaussianRational.of(-1), GaussianRational.of(0, 1)])
    return ExactPoly.from_roots(roots, mults, lead)


def test_two_route_agreement_random():
    rng = random.Random(2024)
    for _ in range(40):
        p = _forced_multiplicity_poly(rng)
        roots = find_roots(p, 256)
        with working_precision(256):
            via_roots = sdisc_abs_from_roots(roots)
            via_subres = sdisc_abs_from_subresultants(p, 256)
            assert via_subres.overlaps(via_roots)


def test_scaling_covariance():
    rng = random.Random(81)
    for _ in range(15):
        p = _forced_multiplicity_poly(rng)
        c = GaussianRational.of(Fraction(rng.choice([2, 3, -2]), rng.choice([1, 5])))
        scaled = p.scale(c)
        r1 = find_roots(p, 128)
        r2 = find_roots(scaled, 128)
        with working_precision(128):
            from rootsep.balls import RBall

            m1, m2 = mahler_measure(r1), mahler_measure(r2)
            s1, s2 = sdisc_abs_from_roots(r1), sdisc_abs_from_roots(r2)
            cabs = RBall.exact(abs(c.re))  # scale factors in the test are real
            r = r1.r
            assert abs(m2.mid - (cabs * m1).mid) / m2.mid < 1e-25
            if s1.mid > 0:
                expected = (cabs.powi(2 * (r - 1)) * s1).mid
                assert abs(s2.mid - expected) / expected < 1e-20


def test_bundle_invariants():
    rng = random.Random(8)
    for _ in range(10):
        p = _forced_multiplicity_poly(rng)
        roots = find_roots(p, 128)
        bundle = compute_invariants(p, 128, roots=roots)
        with working_precision(128):
            lead_abs = roots.leading_coeff.abs().mid
            if lead_abs >= 1:
                assert bundle.mahler.hi >= lead_abs - 1e-25
            assert bundle.sdisc_abs.mid > 0
            assert bundle.sdisc_index == p.degree - roots.r
