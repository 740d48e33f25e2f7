import numpy as np
import pytest

from wnr.ensembles import EnsembleSpec, generate, haar_unitary
from wnr.linalg import adjoint, spectral_norm
from wnr.radius import (
    aluthge,
    numerical_radius,
    weighted_combination,
    weighted_imag_part,
    weighted_norm,
    weighted_numerical_radius,
    weighted_radius_definitions_gap,
    weighted_real_part,
)
from wnr.search import ToleranceNotReached

from conftest import dense_radius_oracle, random_complex

NILP = np.array([[0, 1], [0, 0]], dtype=complex)


def test_weighted_parts_examples(rng):
    T = random_complex(rng, (4, 4))
    assert np.allclose(weighted_real_part(T, 0.5), (T + adjoint(T)) / 2)
    assert np.allclose(weighted_imag_part(T, 0.5), (T - adjoint(T)) / 2j)
    assert np.allclose(weighted_real_part(np.eye(3), 0.3), np.eye(3))
    assert np.allclose(weighted_real_part(NILP, 0.0), adjoint(NILP))
    assert np.allclose(weighted_imag_part(np.array([[1j]]), 0.0), np.array([[1.0]]))
    H = (T + adjoint(T)) / 2
    assert np.allclose(weighted_imag_part(H, 0.5), np.zeros((4, 4)), atol=1e-14)


def test_weighted_parts_combination_identity(rng):
    T = random_complex(rng, (5, 5))
    for t in (0.0, 0.2, 0.5, 0.9, 1.0):
        lhs = weighted_real_part(T, t) + 1j * weighted_imag_part(T, t)
        rhs = weighted_combination(T, t)
        assert spectral_norm(lhs - rhs) <= 1e-12 * spectral_norm(T)


def test_weight_validation():
    with pytest.raises(ValueError):
        weighted_real_part(NILP, 1.5)
    with pytest.raises(ValueError):
        weighted_numerical_radius(NILP, -0.1)


def test_radius_nilpotent_disk():
    res = numerical_radius(NILP)
    assert res.value == pytest.approx(0.5, abs=1e-10)
    assert res.certified_error <= 1e-10


def test_radius_hermitian_is_top_modulus_eigenvalue():
    res = numerical_radius(np.diag([3.0, -1.0]).astype(complex))
    assert res.value == pytest.approx(3.0, abs=1e-10)


def test_radius_zero_matrix():
    res = numerical_radius(np.zeros((3, 3)))
    assert res.value == 0.0
    assert res.theta_star == 0.0
    assert res.certified_error == 0.0


def test_radius_matches_dense_oracle(rng):
    for _ in range(3):
        T = random_complex(rng, (5, 5))
        res = numerical_radius(T)
        brute = dense_radius_oracle(T)
        assert abs(res.value - brute) < 1e-6 * spectral_norm(T)


def test_certification_on_finer_grid(rng):
    # a 10x finer fresh grid never exceeds value + certified_error
    for n in (2, 3, 5):
        T = random_complex(rng, (n, n))
        res = numerical_radius(T)
        K = 10 * max(64, 16 * n)
        thetas = np.linspace(0.0, 2 * np.pi, K, endpoint=False)
        re = (T + adjoint(T)) / 2
        im = (T - adjoint(T)) / 2j
        H = np.cos(thetas)[:, None, None] * re - np.sin(thetas)[:, None, None] * im
        fine = np.linalg.eigvalsh(H)[..., -1].max()
        assert fine <= res.value + res.certified_error


def test_tolerance_not_reached_carries_partial_result():
    T = np.array([[0, 2], [0, 0]], dtype=complex)
    with pytest.raises(ToleranceNotReached) as exc:
        numerical_radius(T, tol=1e-13, max_evals=300)
    partial = exc.value.result
    assert partial.value == pytest.approx(1.0, abs=1e-3)
    assert partial.certified_error > 1e-13


def test_weighted_radius_examples():
    for n in (2, 4):
        for t in (0.0, 0.25, 0.5, 1.0):
            res = weighted_numerical_radius(np.eye(n, dtype=complex), t)
            assert res.value == pytest.approx(2 * (1 - t), abs=1e-10)
    assert weighted_numerical_radius(NILP, 0.5).value == pytest.approx(0.5, abs=1e-10)
    # t = 0 doubles the Hermitian part: w(T* + T) on the nilpotent shift
    assert weighted_numerical_radius(NILP, 0.0).value == pytest.approx(1.0, abs=1e-10)


def test_weighted_radius_half_reduces_to_radius(rng):
    for _ in range(5):
        T = random_complex(rng, (4, 4))
        a = weighted_numerical_radius(T, 0.5).value
        b = numerical_radius(T).value
        assert abs(a - b) <= 1e-10 * max(spectral_norm(T), 1.0)


def test_weighted_norm_examples(rng):
    T = random_complex(rng, (4, 4))
    assert weighted_norm(T, 0.5) == pytest.approx(spectral_norm(T), rel=1e-12)
    assert weighted_norm(np.eye(3, dtype=complex), 0.0) == pytest.approx(2.0)
    G = random_complex(rng, (4, 4))
    H = (G + adjoint(G)) / 2
    for t in (0.0, 0.3, 0.7):
        assert weighted_norm(H, t) == pytest.approx(
            2 * (1 - t) * spectral_norm(H), rel=1e-12, abs=1e-12
        )


def test_aluthge_examples(rng):
    U = haar_unitary(np.random.default_rng(5), 4)
    assert spectral_norm(aluthge(U) - U) < 1e-10
    G = random_complex(rng, (4, 4))
    A = G @ adjoint(G)
    assert spectral_norm(aluthge(A) - A) < 1e-8 * spectral_norm(A)
    assert spectral_norm(aluthge(NILP)) < 1e-12


def test_sandwich_and_kittaneh(rng):
    for kind in ("ginibre", "hermitian", "psd", "unitary", "nilpotent", "normal"):
        T = generate(EnsembleSpec(kind, 4, 1.0, seed=11))
        nrm = spectral_norm(T)
        w = numerical_radius(T).value
        scale = max(nrm, 1.0)
        assert nrm / 2 <= w + 1e-8 * scale
        assert w <= nrm + 1e-8 * scale
        k = spectral_norm(adjoint(T) @ T + T @ adjoint(T))
        assert k / 4 <= w**2 + 1e-8 * scale**2
        assert w**2 <= k / 2 + 1e-8 * scale**2
    # lower Kittaneh equality at the nilpotent shift: both sides 1/4
    w = numerical_radius(NILP).value
    k = spectral_norm(adjoint(NILP) @ NILP + NILP @ adjoint(NILP))
    assert w**2 == pytest.approx(0.25, abs=1e-10)
    assert k / 4 == pytest.approx(0.25, abs=1e-12)


def test_triangle_inequality(rng):
    X = random_complex(rng, (4, 4))
    Y = random_complex(rng, (4, 4))
    scale = max(spectral_norm(X) + spectral_norm(Y), 1.0)
    for t in np.linspace(0.0, 1.0, 6):
        wxy = weighted_numerical_radius(X + Y, t).value
        wx = weighted_numerical_radius(X, t).value
        wy = weighted_numerical_radius(Y, t).value
        assert wxy <= wx + wy + 1e-8 * scale


def test_unitary_invariance(rng):
    T = random_complex(rng, (5, 5))
    U = haar_unitary(np.random.default_rng(3), 5)
    for t in (0.0, 0.3, 0.5, 0.8):
        a = weighted_numerical_radius(adjoint(U) @ T @ U, t).value
        b = weighted_numerical_radius(T, t).value
        assert abs(a - b) <= 1e-8 * spectral_norm(T)


def test_normal_matrices_radius_is_spectral_radius(rng):
    T = generate(EnsembleSpec("normal", 5, 1.0, seed=9))
    lam = np.linalg.eigvals(T)
    assert numerical_radius(T).value == pytest.approx(np.abs(lam).max(), abs=1e-8)


def test_yamazaki_bound(rng):
    for seed in range(5):
        T = generate(EnsembleSpec("ginibre", 4, 1.0, seed=seed))
        w = numerical_radius(T).value
        rhs = 0.5 * (spectral_norm(T) + numerical_radius(aluthge(T)).value)
        assert w <= rhs + 1e-8 * spectral_norm(T)
    # equality at the nilpotent shift: both sides 1/2
    w = numerical_radius(NILP).value
    rhs = 0.5 * (spectral_norm(NILP) + numerical_radius(aluthge(NILP)).value)
    assert w == pytest.approx(0.5, abs=1e-10)
    assert rhs == pytest.approx(0.5, abs=1e-10)


def test_refined_lower_bound(rng):
    for seed in range(5):
        T = generate(EnsembleSpec("ginibre", 4, 1.0, seed=100 + seed))
        w = numerical_radius(T).value
        re = (T + adjoint(T)) / 2
        im = (T - adjoint(T)) / 2j
        lower = 0.5 * spectral_norm(T) + 0.5 * abs(spectral_norm(re) - spectral_norm(im))
        assert w >= lower - 1e-8 * spectral_norm(T)


def test_definitions_gap_on_scalars():
    # the two published definitions disagree on scalars away from t = 1/2
    gap = weighted_radius_definitions_gap(np.array([[2.0 + 0j]]), 0.0)
    assert gap.operative == pytest.approx(4.0, abs=1e-9)
    assert gap.sup_form == pytest.approx(2.0, abs=1e-9)
    assert gap.gap == pytest.approx(2.0, abs=1e-9)
    agree = weighted_radius_definitions_gap(np.array([[2.0 + 0j]]), 0.5)
    assert agree.gap == pytest.approx(0.0, abs=1e-9)
