import numpy as np
import numpy.testing as npt
import pytest

from etea.filters import design_highpass, impulse_response_cascade, inverse_recursion
from etea.operators import SparsifyingOperator


class TestDesign:
    def test_simplest_case_at_symmetric_cutoff(self):
        f = design_highpass(1, 0.25)
        npt.assert_allclose(f.b_taps, [2.0, -1.0], atol=1e-15)
        npt.assert_allclose(f.a_taps, [4.0, 0.0], atol=1e-15)
        npt.assert_allclose(
            f.frequency_response(np.array([0.0, np.pi, np.pi / 2])),
            [0.0, 1.0, 0.5],
            atol=1e-15,
        )

    def test_half_power_at_cutoff_d2(self):
        f = design_highpass(2, 0.013)
        npt.assert_allclose(f.frequency_response(2 * np.pi * 0.013), 0.5, atol=1e-10)

    def test_response_pins_on_design_grid(self):
        for d in (1, 2, 3):
            for fc in (0.01, 0.013, 0.1, 0.25, 0.4):
                f = design_highpass(d, fc)
                npt.assert_allclose(f.frequency_response(0.0), 0.0, atol=1e-12)
                npt.assert_allclose(f.frequency_response(np.pi), 1.0, rtol=1e-12)
                npt.assert_allclose(
                    f.frequency_response(2 * np.pi * fc), 0.5, atol=1e-10
                )

    def test_parameter_errors(self):
        with pytest.raises(ValueError):
            design_highpass(1, 0.0)
        with pytest.raises(ValueError):
            design_highpass(1, 0.5)
        with pytest.raises(ValueError):
            design_highpass(0, 0.1)


class TestApply:
    def test_dc_rejection(self):
        # at fc = 0.25 the denominator is diagonal, so rejection away from
        # the 2d edge samples is exact
        f = design_highpass(1, 0.25)
        v = np.full(64, 7.0)
        out = f.apply(v)
        assert np.abs(out[2:-2]).max() <= 1e-10 * np.abs(v).max()

    def test_zero_in_zero_out(self):
        f = design_highpass(2, 0.1)
        npt.assert_array_equal(f.apply(np.zeros(50)), np.zeros(50))

    def test_matches_dense_computation(self):
        rng = np.random.default_rng(20)
        f = design_highpass(1, 0.25)
        v = rng.standard_normal(128)
        dense = f.b_matrix(128).toarray() @ np.linalg.solve(f.a_matrix(128).toarray(), v)
        npt.assert_allclose(f.apply(v), dense, atol=1e-10)

    def test_linearity(self):
        rng = np.random.default_rng(21)
        f = design_highpass(1, 0.05)
        u, v = rng.standard_normal((2, 200))
        lhs = f.apply(1.7 * u - 0.3 * v)
        rhs = 1.7 * f.apply(u) - 0.3 * f.apply(v)
        npt.assert_allclose(lhs, rhs, atol=1e-10)

    def test_too_short_input(self):
        f = design_highpass(2, 0.1)
        with pytest.raises(ValueError):
            f.apply(np.zeros(5))

    def test_impulse_response_symmetry(self):
        n = 2001
        for d, fc in ((1, 0.013), (1, 0.1), (2, 0.1)):
            f = design_highpass(d, fc)
            u = np.zeros(n)
            c = n // 2
            u[c] = 1.0
            h = f.apply(u)
            win = h[c - 400:c + 401]
            assert np.abs(win - win[::-1]).max() <= 1e-10


class TestInverseRecursion:
    def test_geometric_from_impulse(self):
        # a unit impulse through the bare recursion (the identity-filter
        # limit of the cascade) gives the geometric sequence
        u = np.zeros(30)
        u[0] = 1.0
        npt.assert_allclose(inverse_recursion(u, 0.5, 1), 0.5 ** np.arange(30), rtol=1e-14)

    def test_order_two_gives_ramped_geometric(self):
        u = np.zeros(30)
        u[0] = 1.0
        k = np.arange(30)
        npt.assert_allclose(
            inverse_recursion(u, 0.8, 2), (k + 1) * 0.8 ** k, rtol=1e-12
        )


class TestCascade:
    def test_rate_zero_reduces_to_squared_filter(self):
        n = 512
        f = design_highpass(1, 0.1)
        op = SparsifyingOperator(1, 0.0)
        h = impulse_response_cascade(f, op, n)
        u = np.zeros(n)
        u[n // 2] = 1.0
        npt.assert_array_equal(h, f.apply(f.apply(u)))

    def test_undecayed_tail_raises(self):
        f = design_highpass(1, 0.1)
        op = SparsifyingOperator(1, 0.95)
        with pytest.raises(ValueError, match="increase n"):
            impulse_response_cascade(f, op, 64)

    def test_norm_matches_dense_oracle(self):
        # dense column of the transposed-inverse image of the squared
        # filter; the cascade is its time reverse, so the norms agree
        n = 4096
        r = 0.94
        f = design_highpass(1, 0.013)
        op = SparsifyingOperator(1, r)
        h = impulse_response_cascade(f, op, n)
        a = f.a_matrix(n).toarray()
        b = f.b_matrix(n).toarray()
        ec = np.zeros(n)
        ec[n // 2] = 1.0
        t = b @ np.linalg.solve(a, ec)
        u = np.linalg.solve(a, b @ t)
        idx = np.arange(n)
        powers = idx[:, None] - 1 - idx[None, :n - 1]
        g = np.where(powers >= 0, r ** np.clip(powers, 0, None), 0.0)
        npt.assert_allclose(np.linalg.norm(h), np.linalg.norm(g.T @ u), rtol=1e-6)
