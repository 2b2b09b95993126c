import math

import pytest

from graphenergy.errors import NumericalError
from graphenergy.quadrature import adaptive_simpson, sqrt_band_integral


class TestAdaptiveSimpson:
    def test_polynomial(self):
        assert adaptive_simpson(lambda x: x * x, 0.0, 1.0, tol=1e-12) == pytest.approx(
            1 / 3, abs=1e-12
        )

    def test_transcendental(self):
        assert adaptive_simpson(math.sin, 0.0, math.pi, tol=1e-12) == pytest.approx(
            2.0, abs=1e-11
        )
        assert adaptive_simpson(math.exp, 0.0, 1.0, tol=1e-12) == pytest.approx(
            math.e - 1.0, abs=1e-11
        )

    def test_empty_interval(self):
        assert adaptive_simpson(math.sin, 1.0, 1.0) == 0.0

    def test_reversed_interval_rejected(self):
        with pytest.raises(ValueError):
            adaptive_simpson(math.sin, 1.0, 0.0)

    def test_integrable_sqrt_endpoint(self):
        got = adaptive_simpson(math.sqrt, 0.0, 1.0, tol=1e-10)
        assert got == pytest.approx(2 / 3, abs=1e-9)

    def test_kink_in_the_interior(self):
        got = adaptive_simpson(abs, -1.0, 2.0, tol=1e-11)
        assert got == pytest.approx(2.5, abs=1e-10)

    def test_oscillatory_not_aliased(self):
        # zero at every initial Simpson node unless forced to subdivide
        got = adaptive_simpson(lambda x: math.sin(8 * x) ** 2, 0.0, math.pi, tol=1e-11)
        assert got == pytest.approx(math.pi / 2, abs=1e-9)

    def test_infinite_endpoint_fails_loudly(self):
        with pytest.raises(NumericalError):
            adaptive_simpson(lambda x: 1.0 / math.sqrt(x) if x > 0 else math.inf, 0.0, 1.0)


class TestSqrtBandIntegral:
    def test_semicircle_area(self):
        got = sqrt_band_integral(lambda x: math.sqrt(max(1 - x * x, 0.0)), -1.0, 1.0, tol=1e-12)
        assert got == pytest.approx(math.pi / 2, abs=1e-11)

    def test_plain_smooth_integrand(self):
        got = sqrt_band_integral(lambda x: x * x, 0.0, 1.0, tol=1e-12)
        assert got == pytest.approx(1 / 3, abs=1e-11)

    def test_empty_band(self):
        assert sqrt_band_integral(lambda x: 1.0, 1.0, 1.0) == 0.0
