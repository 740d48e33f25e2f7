import numpy as np
import pytest

from wnr.linalg import (
    NotHermitian,
    NotPSD,
    NotSquare,
    abs_op,
    adjoint,
    as_operator,
    hermitian_eigen,
    polar,
    psd_power,
    spectral_norm,
    svd,
)

from conftest import random_complex


def charpoly_roots(A):
    """Eigenvalues via Leverrier-Faddeev coefficients and companion roots.

    Independent of the Hermitian eigensolver under test: the
    characteristic polynomial comes from trace recursions and the roots
    from the (general, non-symmetric) companion-matrix solver.
    """
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    coeffs = [1.0 + 0j]
    M = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        AM = A @ M
        c = -np.trace(AM) / k
        coeffs.append(c)
        M = AM + c * np.eye(n)
    return np.roots(coeffs)


def test_adjoint_examples():
    I = np.eye(3, dtype=complex)
    assert np.array_equal(adjoint(I), I)
    assert np.array_equal(
        adjoint(np.array([[0, 1], [0, 0]], dtype=complex)),
        np.array([[0, 0], [1, 0]], dtype=complex),
    )
    assert np.array_equal(adjoint(np.array([[1j]])), np.array([[-1j]]))


def test_adjoint_involution(rng):
    A = random_complex(rng, (5, 5))
    assert np.array_equal(adjoint(adjoint(A)), A)


def test_as_operator_rejects_bad_inputs():
    with pytest.raises(NotSquare):
        as_operator(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        as_operator(np.array([[np.nan, 0], [0, 1]]))


def test_hermitian_eigen_examples():
    dec = hermitian_eigen(np.diag([3.0, -1.0]).astype(complex))
    assert np.allclose(dec.eigenvalues, [3.0, -1.0])
    pauli_x = np.array([[0, 1], [1, 0]], dtype=complex)
    assert np.allclose(hermitian_eigen(pauli_x).eigenvalues, [1.0, -1.0])


def test_hermitian_eigen_matches_companion_roots(rng):
    G = random_complex(rng, (6, 6))
    A = (G + adjoint(G)) / 2
    got = hermitian_eigen(A).eigenvalues
    want = np.sort(charpoly_roots(A).real)[::-1]
    assert np.max(np.abs(got - want)) < 1e-8


def test_hermitian_eigen_residuals_and_phase(rng):
    G = random_complex(rng, (7, 7))
    A = (G + adjoint(G)) / 2
    dec = hermitian_eigen(A)
    V, lam = dec.eigenvectors, dec.eigenvalues
    scale = spectral_norm(A)
    assert spectral_norm(A @ V - V * lam) < 1e-10 * scale
    assert spectral_norm(adjoint(V) @ V - np.eye(7)) < 1e-10
    assert np.all(np.diff(lam) <= 0)
    # phase convention: first nonnegligible component real and nonnegative
    for j in range(7):
        col = V[:, j]
        idx = np.argmax(np.abs(col) > 1e-12 * np.abs(col).max())
        assert abs(col[idx].imag) < 1e-12
        assert col[idx].real >= 0


def test_hermitian_eigen_rejects_asymmetric():
    with pytest.raises(NotHermitian):
        hermitian_eigen(np.array([[0, 1], [0, 0]], dtype=complex))
    with pytest.raises(NotSquare):
        hermitian_eigen(np.zeros((2, 3)))


def test_svd_examples(rng):
    _, s, _ = svd(np.diag([2.0, 0.0]))
    assert np.allclose(s, [2.0, 0.0])
    _, s, _ = svd(np.array([[0, 1], [0, 0]], dtype=complex))
    assert np.allclose(s, [1.0, 0.0])

    A = random_complex(rng, (5, 5))
    U, s, V = svd(A)
    assert spectral_norm(A - (U * s) @ adjoint(V)) < 1e-10 * s[0]
    # sigma^2 against the independent Hermitian path on A*A
    lam = hermitian_eigen(adjoint(A) @ A).eigenvalues
    assert np.max(np.abs(s**2 - lam)) < 1e-9 * max(s[0] ** 2, 1.0)


def test_spectral_norm_examples(rng):
    assert spectral_norm(np.eye(3)) == pytest.approx(1.0)
    assert spectral_norm(np.array([[0, 2], [0, 0]])) == pytest.approx(2.0)

    # random probe: ||Ax|| never exceeds the norm and approaches it; two
    # power-iteration steps per draw are needed because bare samples in
    # CP^3 land within 1e-3 of the top direction far too rarely
    A = random_complex(rng, (4, 4))
    nrm = spectral_norm(A)
    X = random_complex(rng, (10_000, 4))
    G = A.conj().T @ A
    for _ in range(2):
        X = X @ G.T
        X /= np.linalg.norm(X, axis=1)[:, None]
    probes = np.linalg.norm(X @ A.T, axis=1)
    assert probes.max() <= nrm + 1e-12 * nrm
    assert probes.max() > nrm * (1 - 1e-3)


def test_psd_power_examples():
    assert np.allclose(psd_power(np.diag([4.0, 1.0]), 0.5), np.diag([2.0, 1.0]))
    assert np.allclose(psd_power(np.diag([9.0, 0.0]), 0.5), np.diag([3.0, 0.0]))
    A = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=complex)
    assert np.allclose(psd_power(A, 1.0), A)
    # 0^0 = 1 convention: zeroth power is the identity
    assert np.array_equal(psd_power(np.diag([5.0, 0.0]), 0.0), np.eye(2))


def test_psd_power_clamps_and_rejects():
    eps = 1e-12
    A = np.diag([1.0, -eps])
    # rounding-level negative eigenvalue is forgiven
    B = psd_power(A, 0.5)
    assert B[1, 1] == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(NotPSD):
        psd_power(np.diag([1.0, -1e-3]), 0.5)


def test_psd_power_roundtrip(rng):
    G = random_complex(rng, (5, 5))
    A = G @ adjoint(G)
    nrm = spectral_norm(A)
    for p in (0.5, 2.0):
        back = psd_power(psd_power(A, p), 1.0 / p)
        assert spectral_norm(back - A) < 1e-8 * nrm


def test_abs_op_examples(rng):
    N = np.array([[0, 1], [0, 0]], dtype=complex)
    assert np.allclose(abs_op(N), np.diag([0.0, 1.0]), atol=1e-12)
    G = random_complex(rng, (4, 4))
    A = G @ adjoint(G)
    assert spectral_norm(abs_op(A) - A) < 1e-9 * spectral_norm(A)
    Q, _ = np.linalg.qr(random_complex(rng, (4, 4)))
    assert spectral_norm(abs_op(Q) - np.eye(4)) < 1e-10
    assert abs(spectral_norm(abs_op(G)) - spectral_norm(G)) < 1e-10 * spectral_norm(G)


def test_polar_examples():
    parts = polar(np.diag([2.0, 0.0]))
    assert np.allclose(parts.isometry, np.diag([1.0, 0.0]), atol=1e-12)
    assert np.allclose(parts.modulus, np.diag([2.0, 0.0]), atol=1e-12)

    N = np.array([[0, 1], [0, 0]], dtype=complex)
    parts = polar(N)
    assert np.allclose(parts.isometry, N, atol=1e-12)
    assert np.allclose(parts.modulus, np.diag([0.0, 1.0]), atol=1e-12)


def test_polar_full_rank_unitary(rng):
    A = random_complex(rng, (5, 5)) + 3 * np.eye(5)
    parts = polar(A)
    U = parts.isometry
    assert spectral_norm(adjoint(U) @ U - np.eye(5)) < 1e-10


def test_polar_invariants_on_seeded_matrices():
    # 500 seeded matrices, n in 2..8, with rank-deficient cases mixed in
    count = 0
    for seed in range(500):
        gen = np.random.default_rng(seed)
        n = 2 + seed % 7
        T = random_complex(gen, (n, n))
        if seed % 3 == 0:
            T[:, : 1 + seed % n] = 0.0  # force rank deficiency
        parts = polar(T)
        nrm = spectral_norm(T)
        scale = max(nrm, 1e-30)
        assert spectral_norm(parts.isometry @ parts.modulus - T) < 1e-10 * scale
        # modulus Hermitian PSD within tolerance
        assert spectral_norm(parts.modulus - adjoint(parts.modulus)) < 1e-10 * scale
        lam = np.linalg.eigvalsh((parts.modulus + adjoint(parts.modulus)) / 2)
        assert lam.min() > -1e-10 * scale
        # U*U is the orthogonal projection onto range(|T|)
        P = adjoint(parts.isometry) @ parts.isometry
        assert spectral_norm(P @ P - P) < 1e-10
        assert spectral_norm(P @ parts.modulus - parts.modulus) < 1e-10 * scale
        count += 1
    assert count == 500
