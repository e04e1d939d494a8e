import numpy as np
import numpy.testing as npt
import pytest

from etea.penalty import KINDS, Penalty


def all_penalties(a=2.0, eps=1e-10):
    return [Penalty(kind=k, a=a, eps=eps) for k in KINDS]


class TestValidation:
    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            Penalty(kind="huber")

    def test_nonpositive_shape(self):
        with pytest.raises(ValueError):
            Penalty(kind="log", a=0.0)

    def test_zero_eps_rejected(self):
        with pytest.raises(ValueError):
            Penalty(eps=0.0)


class TestValue:
    def test_abs_at_half(self):
        p = Penalty(kind="abs", eps=0.05)
        npt.assert_allclose(p.value(0.5), np.sqrt(0.30), rtol=1e-12)

    def test_abs_at_origin(self):
        p = Penalty(kind="abs", eps=0.05)
        npt.assert_allclose(p.value(0.0), np.sqrt(0.05), rtol=1e-12)

    def test_log_frozen_value(self):
        # 0.5 * log(1 + 2*sqrt(1 + 1e-10)), evaluated at 40 decimal digits
        p = Penalty(kind="log", a=2.0, eps=1e-10)
        npt.assert_allclose(p.value(1.0), 0.5493061443507215, rtol=1e-14)

    def test_even(self):
        u = np.linspace(-3, 3, 101)
        for p in all_penalties(eps=0.05):
            npt.assert_allclose(p.value(u), p.value(-u), rtol=1e-14)

    def test_converges_to_nonsmooth(self):
        # value - nonsmooth <= deriv(|u|) * eps / (2|u|) for |u| >= 0.1
        u = np.concatenate([np.linspace(0.1, 4, 80), -np.linspace(0.1, 4, 80)])
        for eps in (1e-4, 1e-8):
            for p in all_penalties(eps=eps):
                gap = p.value(u) - p.nonsmooth(u)
                bound = p._raw_deriv(np.abs(u)) * eps / (2 * np.abs(u))
                assert np.all(gap <= bound * (1 + 1e-9) + 1e-15)
                assert np.all(gap >= 0)


class TestDeriv:
    def test_zero_at_origin(self):
        for p in all_penalties():
            assert p.deriv(0.0) == 0.0

    def test_abs_saturation(self):
        p = Penalty(kind="abs", eps=1e-10)
        npt.assert_allclose(p.deriv(3.0), 0.9999999999944444, rtol=1e-14)

    def test_matches_finite_difference(self):
        rng = np.random.default_rng(12)
        u = rng.uniform(-4, 4, size=200)
        h = 1e-6
        for p in all_penalties(eps=0.05):
            fd = (p.value(u + h) - p.value(u - h)) / (2 * h)
            npt.assert_allclose(p.deriv(u), fd, atol=1e-6)

    def test_odd_and_bounded(self):
        u = np.linspace(-5, 5, 201)
        for p in all_penalties(eps=1e-4):
            npt.assert_allclose(p.deriv(u), -p.deriv(-u), atol=1e-15)
            bound = p._raw_deriv(np.sqrt(p.eps))
            assert np.all(np.abs(p.deriv(u)) < bound)

    def test_continuous_across_zero(self):
        # finite-difference continuity of the derivative at the origin
        for p in all_penalties(eps=1e-8):
            left = p.deriv(-1e-9)
            right = p.deriv(1e-9)
            assert abs(left - right) < 2.1e-4  # slope at 0 is ~1/sqrt(eps)


class TestWeight:
    def test_sqrt_eps_at_origin(self):
        p = Penalty(kind="abs", eps=1e-10)
        npt.assert_allclose(p.weight(0.0), 1e-5, rtol=1e-12)

    def test_log_frozen_value(self):
        # sqrt(0.30) * (1 + 2*sqrt(0.30)), evaluated at 40 decimal digits
        p = Penalty(kind="log", a=2.0, eps=0.05)
        npt.assert_allclose(p.weight(0.5), 1.1477225575051661, rtol=1e-14)

    def test_defining_identity(self):
        rng = np.random.default_rng(13)
        v = rng.uniform(0.1, 5, size=50) * rng.choice([-1, 1], size=50)
        for p in all_penalties(eps=0.05):
            npt.assert_allclose(p.weight(v), v / p.deriv(v), rtol=1e-12)

    def test_positive_and_even(self):
        v = np.linspace(-10, 10, 401)
        for p in all_penalties():
            w = p.weight(v)
            assert np.all(w > 0)
            npt.assert_allclose(w, p.weight(-v), rtol=1e-14)


class TestMajorizer:
    def test_tangency(self):
        for p in all_penalties(eps=0.05):
            npt.assert_allclose(p.majorizer(0.7, 0.7), p.value(0.7), atol=1e-12)

    def test_abs_worked_example(self):
        # g(0, 0.5) = sqrt(0.30) - 0.25 * (0.5 / sqrt(0.30)), 40-digit value
        p = Penalty(kind="abs", eps=0.05)
        g = p.majorizer(0.0, 0.5)
        npt.assert_allclose(g, 0.3195048252113469, rtol=1e-12)
        assert g >= p.value(0.0)  # 0.31950 >= sqrt(0.05) = 0.22360

    def test_grid_majorization(self):
        u = np.arange(-2.0, 2.0 + 1e-9, 0.1)[:, None]
        v = np.arange(-2.0, 2.0 + 1e-9, 0.1)[None, :]
        for p in all_penalties(a=2.0, eps=0.05):
            gap = p.majorizer(u, v) - p.value(u)
            assert gap.min() >= -1e-12
            diag = np.abs(p.majorizer(v, v) - p.value(v))
            assert diag.max() <= 1e-12
