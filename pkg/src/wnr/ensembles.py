"""Seeded random-matrix ensembles.

Generation is a pure function of (kind, n, scale, seed): the seed feeds a
PCG64 bit generator and the draw order inside each kind is fixed, so an
identical spec reproduces a bit-identical matrix.  Trial seeds are derived
with a splitmix64-style hash of (base seed, kind, n, trial), which makes
sweep trials order-independent.

Complex Gaussian entries are (g1 + i g2) / sqrt(2) with g1, g2 drawn as
two consecutive ``standard_normal((n, n))`` blocks; reimplementations that
want to match bits must follow the same order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

KINDS = (
    "ginibre",
    "hermitian",
    "psd",
    "unitary",
    "nilpotent",
    "normal",
    "scalar",
)


class UnknownKind(ValueError):
    """Raised for an ensemble kind outside the supported set."""


@dataclass(frozen=True)
class EnsembleSpec:
    """A seeded random-matrix distribution."""

    kind: str
    n: int
    scale: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnknownKind(f"unknown ensemble kind {self.kind!r}; pick one of {KINDS}")
        if self.n < 1:
            raise ValueError("dimension n must be >= 1")
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def splitmix64(state: int) -> int:
    """One splitmix64 output step for the given state."""
    z = (state + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def derive_seed(*parts: int) -> int:
    """Fold integer parts into one 64-bit seed, splitmix-style."""
    state = 0
    for p in parts:
        state = splitmix64((state ^ (int(p) & MASK64)) & MASK64)
    return state


def kind_index(kind: str) -> int:
    try:
        return KINDS.index(kind)
    except ValueError:
        raise UnknownKind(f"unknown ensemble kind {kind!r}; pick one of {KINDS}") from None


def trial_seed(base_seed: int, kind: str, n: int, trial: int) -> int:
    """Seed for one (trial, kind, n) cell of a sweep."""
    return derive_seed(base_seed, kind_index(kind), n, trial)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    """iid standard complex normals: (g1 + i g2) / sqrt(2)."""
    re = rng.standard_normal(shape)
    im = rng.standard_normal(shape)
    return (re + 1j * im) / np.sqrt(2.0)


def haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed unitary via QR of a Ginibre draw with phase fix."""
    G = complex_gaussian(rng, (n, n))
    Q, R = np.linalg.qr(G)
    d = np.diagonal(R).copy()
    d[d == 0] = 1.0
    return Q * (d / np.abs(d))


def generate(spec: EnsembleSpec) -> np.ndarray:
    """Draw the matrix described by `spec`."""
    rng = _rng(spec.seed)
    n = spec.n
    kind = spec.kind
    if kind == "ginibre":
        M = complex_gaussian(rng, (n, n))
    elif kind == "hermitian":
        G = complex_gaussian(rng, (n, n))
        M = (G + G.conj().T) / 2
    elif kind == "psd":
        G = complex_gaussian(rng, (n, n))
        B = G @ G.conj().T / n
        M = (B + B.conj().T) / 2
    elif kind == "unitary":
        M = haar_unitary(rng, n)
    elif kind == "nilpotent":
        M = np.triu(complex_gaussian(rng, (n, n)), k=1)
    elif kind == "normal":
        U = haar_unitary(rng, n)
        d = complex_gaussian(rng, n)
        M = (U * d) @ U.conj().T
    elif kind == "scalar":
        z = complex(complex_gaussian(rng, ()))
        M = z * np.eye(n, dtype=complex)
    else:  # pragma: no cover - guarded by EnsembleSpec
        raise UnknownKind(kind)
    return spec.scale * M


def random_vector(rng: np.random.Generator, dim: int, unit: bool = False) -> np.ndarray:
    """Complex Gaussian vector, optionally normalized to unit length."""
    v = complex_gaussian(rng, dim)
    if unit:
        nrm = np.linalg.norm(v)
        if nrm == 0.0:
            v = np.zeros(dim, dtype=complex)
            v[0] = 1.0
            return v
        v = v / nrm
    return v
