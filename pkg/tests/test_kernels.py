"""Parity between the compiled kernels and the numpy fallback."""

import numpy as np
import pytest

from logcap._kernels import BACKEND, pure

native = pytest.importorskip(
    "logcap._kernels._native", reason="compiled kernels not built"
)


def random_endpoints(rng, n):
    pts = np.sort(rng.uniform(-1, 1, size=2 * n))
    while np.min(np.diff(pts)) < 1e-3:
        pts = np.sort(rng.uniform(-1, 1, size=2 * n))
    return pts


def test_backend_is_reported():
    assert BACKEND in ("native", "pure")


def test_gap_moment_sums_parity():
    rng = np.random.default_rng(7)
    for n in (2, 3, 4, 6):
        ep = random_endpoints(rng, n)
        for gap in range(n - 1):
            for m in (8, 64, 257):
                a = pure.gap_moment_sums(ep, gap, m, n - 1)
                b = native.gap_moment_sums(ep, gap, m, n - 1)
                assert np.allclose(a, b, rtol=1e-13, atol=1e-14)


def test_poly_over_sqrt_q_parity():
    rng = np.random.default_rng(11)
    for n in (1, 2, 4):
        ep = random_endpoints(rng, n)
        coeffs = rng.standard_normal(max(0, n - 1))
        t = np.linspace(ep[-1] + 0.05, ep[-1] + 50.0, 401)
        a = pure.poly_over_sqrt_q(ep, coeffs, t)
        b = native.poly_over_sqrt_q(ep, coeffs, t)
        assert np.allclose(a, b, rtol=1e-13, atol=1e-15)


def test_skip_product_parity():
    rng = np.random.default_rng(13)
    for n in (2, 3, 5):
        ep = random_endpoints(rng, n)
        for skip in (0, 2 * n - 1):
            t = np.linspace(-3.0, 3.0, 101)
            a = pure.skip_product(ep, skip, t)
            b = native.skip_product(ep, skip, t)
            assert np.allclose(a, b, rtol=1e-12, atol=1e-14)


def test_gap_moments_against_generic_rule():
    # the specialized kernel agrees with the generic Chebyshev-Gauss rule
    from logcap import chebyshev_gauss

    rng = np.random.default_rng(17)
    ep = random_endpoints(rng, 3)
    gap = 1
    lo, hi = ep[2 * gap + 1], ep[2 * gap + 2]
    mask = np.ones(6, dtype=bool)
    mask[[2 * gap + 1, 2 * gap + 2]] = False

    def smooth(j):
        def g(t):
            w = -np.prod(t[:, None] - ep[mask], axis=1)
            return t ** j / np.sqrt(w)

        return g

    m = 128
    sums = pure.gap_moment_sums(ep, gap, m, 2)
    for j in range(3):
        want = chebyshev_gauss(smooth(j), lo, hi, m)
        assert sums[j] == pytest.approx(want, rel=1e-13)
