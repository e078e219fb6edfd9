import random
from fractions import Fraction

import mpmath
import pytest

from frobtriples import algebraic as alg
from frobtriples.algebraic import Side, Threshold, compare_ratio, count_roots, homogeneous_sign
from frobtriples.errors import InvalidInput

CATALOG = [v for v in vars(alg).values() if isinstance(v, Threshold)]


def test_catalog_nonempty():
    assert len(CATALOG) >= 25


class TestExamples:
    def test_below_one_plus_sqrt2(self):
        assert compare_ratio(9, 4, alg.ONE_SQRT2) is Side.LESS

    def test_rational_boundary(self):
        assert compare_ratio(2, 1, alg.TWO) is Side.BOUNDARY
        assert compare_ratio(4, 2, alg.TWO) is Side.BOUNDARY

    def test_above_quartic_root(self):
        assert compare_ratio(18, 5, alg.R3_35163) is Side.GREATER

    def test_side_names(self):
        assert [str(x) for x in Side] == ["Less", "Boundary", "Greater"]

    def test_irrational_never_boundary(self):
        for s in range(1, 200):
            for t in range(1, 60):
                assert compare_ratio(s, t, alg.SQRT3) is not Side.BOUNDARY

    def test_bad_args(self):
        with pytest.raises(InvalidInput):
            compare_ratio(0, 1, alg.TWO)


def _root(th: Threshold) -> mpmath.mpf:
    with mpmath.workdps(60):
        coeffs = [int(c) for c in th.poly]
        f = lambda x: mpmath.polyval(coeffs, x)  # noqa: E731
        return mpmath.findroot(f, (mpmath.mpf(th.iso_lo.numerator) / th.iso_lo.denominator,
                                   mpmath.mpf(th.iso_hi.numerator) / th.iso_hi.denominator),
                               solver="anderson")


def test_matches_high_precision_float():
    rng = random.Random(7)
    roots = {th.label: _root(th) for th in CATALOG}
    with mpmath.workdps(60):
        for _ in range(10_000):
            th = rng.choice(CATALOG)
            rho = roots[th.label]
            # Half the samples land right next to the root.
            t = rng.randint(1, 10**6)
            if rng.random() < 0.5:
                s = max(1, int(rho * t) + rng.randint(-2, 2))
            else:
                s = rng.randint(1, 8 * t)
            got = compare_ratio(s, t, th)
            diff = mpmath.mpf(s) / t - rho
            if th.is_rational and Fraction(s, t) == th.iso_lo + (th.iso_hi - th.iso_lo) / 2:
                assert got is Side.BOUNDARY
            else:
                assert got is (Side.LESS if diff < 0 else Side.GREATER), (s, t, th.label)


@pytest.mark.parametrize("th", CATALOG, ids=lambda th: th.label)
def test_interval_validated(th):
    assert count_roots(th.poly, th.iso_lo, th.iso_hi) == 1
    assert th.iso_lo < th.approx() < th.iso_hi


class TestBuild:
    def test_no_sign_change(self):
        with pytest.raises(InvalidInput):
            Threshold.build((1, 0, -2), 2, 3, "bad")

    def test_two_roots(self):
        with pytest.raises(InvalidInput):
            # (x-1)(x-2)(x-3) on (0.5, 3.5): sign change, three roots.
            Threshold.build((1, -6, 11, -6), Fraction(1, 2), Fraction(7, 2), "bad")

    def test_empty_interval(self):
        with pytest.raises(InvalidInput):
            Threshold.build((1, -2), 3, 1, "bad")

    def test_leading_coefficient(self):
        with pytest.raises(InvalidInput):
            Threshold.build((-1, 2), 1, 3, "bad")

    def test_endpoint_root(self):
        with pytest.raises(InvalidInput):
            Threshold.build((1, -2), 2, 3, "bad")

    def test_rational(self):
        th = Threshold.rational(7, 4)
        assert th.is_rational and th.degree == 1
        assert compare_ratio(7, 4, th) is Side.BOUNDARY
        assert compare_ratio(175, 100, th) is Side.BOUNDARY
        assert compare_ratio(176, 100, th) is Side.GREATER

    def test_approx(self):
        assert abs(float(alg.SQRT3.approx(15)) - 3 ** 0.5) < 1e-14


class TestMirror:
    def test_reciprocal(self):
        m = alg.ONE_SQRT2.mirror("m")
        assert abs(float(m.approx()) - 1 / (1 + 2 ** 0.5)) < 1e-10

    @pytest.mark.parametrize("s,t", [(1, 4), (3, 10), (10, 31), (28, 87), (2, 7)])
    def test_swap_symmetry(self, s, t):
        assert compare_ratio(s, t, alg.R5_03215) is {
            Side.LESS: Side.GREATER, Side.GREATER: Side.LESS
        }[compare_ratio(t, s, alg.R5_31098)]


def test_homogeneous_sign_large_arguments():
    s, t = 10**6 - 1, 10**6 - 7
    for th in CATALOG:
        expect = Fraction(0)
        for c in th.poly:
            expect = expect * Fraction(s, t) + c
        sign = (expect > 0) - (expect < 0)
        assert homogeneous_sign(th.poly, s, t) == sign


class TestDomain:
    @pytest.mark.parametrize("r", [2, 3, 4, 5])
    def test_matches_positivity(self, r):
        for s in range(1, 80):
            for t in range(1, 80):
                x, y, _ = alg_xyz(s, t, r)
                assert alg.in_domain(s, t, r) == (x > 0 and y > 0), (s, t, r)

    def test_unknown_r(self):
        with pytest.raises(InvalidInput):
            alg.in_domain(3, 1, 6)


def alg_xyz(s, t, r):
    from frobtriples.triples import xyz_values

    return xyz_values(s, t, r)
