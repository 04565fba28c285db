"""Generators for the state families used by the detection criteria and tests."""

from __future__ import annotations

from enum import Enum

import numpy as np

from .linalg import MAX_QUBITS, DensityOperator, density_from_bloch, tensor


class Bell(Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"


def bell_ket(bell: Bell) -> np.ndarray:
    """One of (|00> +- |11>)/sqrt(2), (|01> +- |10>)/sqrt(2)."""
    v = np.zeros(4, dtype=np.complex128)
    if bell is Bell.PHI_PLUS:
        v[0] = v[3] = 1
    elif bell is Bell.PHI_MINUS:
        v[0], v[3] = 1, -1
    elif bell is Bell.PSI_PLUS:
        v[1] = v[2] = 1
    elif bell is Bell.PSI_MINUS:
        v[1], v[2] = 1, -1
    else:
        raise TypeError(f"unknown Bell state {bell!r}")
    return v / np.sqrt(2)


def bell_state(bell: Bell) -> DensityOperator:
    v = bell_ket(bell)
    return DensityOperator(np.outer(v, v.conj()), 2)


def horodecki_b(b: float) -> DensityOperator:
    """The three-qubit b-family: PSD, trace one, and PPT on qubit 1 for 0 < b < 1.

    The normalized matrix has diagonal (b,b,b,b,(1+b)/2,b,b,(1+b)/2)/(7b+1),
    b/(7b+1) at (0,5), (1,6), (2,7) and mirrors, and sqrt(1-b^2)/(14b+2) at
    (4,7) and (7,4).
    """
    if not 0 < b < 1:
        raise ValueError(f"b must be in (0, 1), got {b}")
    m = np.zeros((8, 8))
    for i in (0, 1, 2, 3, 5, 6):
        m[i, i] = b
    m[4, 4] = m[7, 7] = (1 + b) / 2
    m[4, 7] = m[7, 4] = np.sqrt(1 - b * b) / 2
    for i, j in ((0, 5), (1, 6), (2, 7)):
        m[i, j] = m[j, i] = b
    return DensityOperator(m / (7 * b + 1), 3)


def isotropic(s: float, bell: Bell = Bell.PHI_PLUS) -> DensityOperator:
    """Two-qubit isotropic state (|phi><phi| + s*I/4)/(1+s), s <= -4 or s >= 0."""
    if -4 < s < 0:
        raise ValueError(f"s must satisfy s <= -4 or s >= 0, got {s}")
    proj = bell_state(bell).matrix
    return DensityOperator((proj + s * np.eye(4) / 4) / (1 + s), 2)


def pure_superposition(p: float) -> DensityOperator:
    """Projector onto sqrt(p)|00> + sqrt(1-p)|11>, 0 < p < 1."""
    if not 0 < p < 1:
        raise ValueError(f"p must be in (0, 1), got {p}")
    v = np.zeros(4, dtype=np.complex128)
    v[0] = np.sqrt(p)
    v[3] = np.sqrt(1 - p)
    return DensityOperator(np.outer(v, v.conj()), 2)


def ghz(n: int) -> DensityOperator:
    """Projector onto (|0...0> + |1...1>)/sqrt(2); antidiagonal corners are 1/2."""
    if n < 2:
        raise ValueError(f"GHZ needs at least 2 qubits, got {n}")
    if n > MAX_QUBITS:
        raise ValueError(f"{n} qubits exceeds the cap of {MAX_QUBITS}")
    d = 1 << n
    v = np.zeros(d, dtype=np.complex128)
    v[0] = v[d - 1] = 1 / np.sqrt(2)
    return DensityOperator(np.outer(v, v.conj()), n)


def product_state(blochs) -> DensityOperator:
    """Tensor product of single-qubit states given by their Bloch vectors."""
    blochs = list(blochs)
    if not blochs:
        raise ValueError("need at least one Bloch vector")
    out = density_from_bloch(blochs[0])
    for v in blochs[1:]:
        out = tensor(out, density_from_bloch(v))
    return DensityOperator(out.matrix, out.n_qubits)


def mixture_rng(seed: int) -> np.random.Generator:
    """The package's reproducible generator: Philox (counter-based), raw key."""
    return np.random.Generator(np.random.Philox(key=seed))


def random_bloch(rng: np.random.Generator) -> tuple[float, float, float]:
    """Uniform point in the radius-1/2 Bloch ball by rejection sampling."""
    while True:
        x, y, z = rng.uniform(-0.5, 0.5, 3)
        if x * x + y * y + z * z <= 0.25:
            return float(x), float(y), float(z)


def random_multiseparable(n: int, terms: int, seed: int) -> DensityOperator:
    """Convex mixture of `terms` random n-fold product states.

    Weights are normalized uniform(0,1) draws; every single-qubit factor is
    drawn uniformly from the Bloch ball. Deterministic given the seed.
    """
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"n must be in 1..{MAX_QUBITS}, got {n}")
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    rng = mixture_rng(seed)
    weights = rng.uniform(0, 1, terms)
    weights /= weights.sum()
    d = 1 << n
    acc = np.zeros((d, d), dtype=np.complex128)
    for w in weights:
        acc += w * product_state(random_bloch(rng) for _ in range(n)).matrix
    return DensityOperator(acc, n)
