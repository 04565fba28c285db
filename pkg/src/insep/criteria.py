"""One-sided inseparability checks and their numeric witnesses.

Every check either returns an INSEPARABLE verdict backed by concrete numeric
evidence (an off-diagonal element exceeding its product-state bound, or a
negative eigenvalue after a positive-map application) or INCONCLUSIVE.
Inconclusive never asserts separability.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import (
    TOL_PSD,
    DensityOperator,
    HermitianOperator,
    hamming,
    hermitian_eigensystem,
)
from .maps import MapKind, MapSpec, apply_product

# Strict-inequality margin: elements within TOL_CRIT of a bound are treated
# as not exceeding it, so the checks never over-claim.
TOL_CRIT = 1e-9

# The all-pairs scan is O(4^n); cap the dense scan well below the package's
# qubit cap.
FULL_SCAN_MAX_QUBITS = 8


class Verdict(Enum):
    INSEPARABLE = "inseparable"
    INCONCLUSIVE = "inconclusive"


class Criterion(Enum):
    LZ_ANTIDIAGONAL = "lz-antidiagonal"
    HAMMING_OFFDIAGONAL = "hamming-offdiagonal"
    MAP_NEGATIVITY = "map-negativity"


@dataclass(frozen=True)
class OffDiagonalWitness:
    """Element (a, b) whose modulus exceeds the product-state bound 1/2^h(a,b)."""

    a: int
    b: int
    value: complex
    hamming_distance: int
    bound: float

    @property
    def margin(self) -> float:
        return abs(self.value) - self.bound


@dataclass(frozen=True)
class EigenvalueWitness:
    """Negative minimum eigenvalue with its eigenvector."""

    min_eigenvalue: float
    eigenvector: np.ndarray


@dataclass(frozen=True)
class DetectionReport:
    verdict: Verdict
    criterion: Criterion
    witness: OffDiagonalWitness | EigenvalueWitness | None = None
    map_spec: MapSpec | None = None

    def __post_init__(self):
        if self.verdict is Verdict.INSEPARABLE and self.witness is None:
            raise ValueError("an inseparability verdict requires a witness")


def _popcount_table(n: int) -> np.ndarray:
    return np.array([v.bit_count() for v in range(1 << n)])


def _best_offdiagonal(matrix: np.ndarray, n: int, antidiagonal_only: bool) -> OffDiagonalWitness | None:
    """Largest bound violation over the lower triangle, ties broken by (a, b).

    Scans pairs a > b only; Hermiticity makes the upper triangle redundant.
    np.argwhere is row-major, so the first maximal entry is the
    lexicographically smallest pair, which keeps witnesses deterministic.
    """
    d = 1 << n
    idx = np.arange(d)
    h = _popcount_table(n)[idx[:, None] ^ idx[None, :]]
    margins = np.abs(matrix) - 0.5**h
    mask = idx[:, None] > idx[None, :]
    if antidiagonal_only:
        mask &= idx[:, None] + idx[None, :] == d - 1
    margins = np.where(mask, margins, -np.inf)
    best = margins.max()
    if best <= TOL_CRIT:
        return None
    a, b = np.argwhere(margins == best)[0]
    a, b = int(a), int(b)
    return OffDiagonalWitness(
        a=a,
        b=b,
        value=complex(matrix[a, b]),
        hamming_distance=int(h[a, b]),
        bound=float(0.5 ** h[a, b]),
    )


def lz_antidiagonal_check(rho: DensityOperator) -> DetectionReport:
    """Full-split antidiagonal criterion.

    Inseparable if some antidiagonal element (a, 2^n-1-a) has modulus above
    (1/2)^n; product mixtures cannot exceed that bound.
    """
    witness = _best_offdiagonal(rho.matrix, rho.n_qubits, antidiagonal_only=True)
    if witness is None:
        return DetectionReport(Verdict.INCONCLUSIVE, Criterion.LZ_ANTIDIAGONAL)
    return DetectionReport(Verdict.INSEPARABLE, Criterion.LZ_ANTIDIAGONAL, witness)


def hamming_offdiagonal_check(rho: DensityOperator) -> DetectionReport:
    """General off-diagonal criterion, bound 1/2^h(a,b) per element.

    Subsumes lz_antidiagonal_check (its h = n case). Reports the witness
    maximizing |c_ab| - 1/2^h(a,b) when any margin exceeds TOL_CRIT.
    """
    if rho.n_qubits > FULL_SCAN_MAX_QUBITS:
        raise ValueError(
            f"dense all-pairs scan is capped at {FULL_SCAN_MAX_QUBITS} qubits, got {rho.n_qubits}"
        )
    witness = _best_offdiagonal(rho.matrix, rho.n_qubits, antidiagonal_only=False)
    if witness is None:
        return DetectionReport(Verdict.INCONCLUSIVE, Criterion.HAMMING_OFFDIAGONAL)
    return DetectionReport(Verdict.INSEPARABLE, Criterion.HAMMING_OFFDIAGONAL, witness)


def map_negativity_check(
    rho: DensityOperator, spec: MapSpec, tol: float = TOL_PSD
) -> DetectionReport:
    """Inseparable if the mapped operator has an eigenvalue below -tol.

    Positive single-qubit maps keep product mixtures positive, so negativity
    after partial application rules out a product decomposition.
    """
    sigma = apply_product(rho, spec)
    w, v = hermitian_eigensystem(sigma)
    if w[0] < -tol:
        witness = EigenvalueWitness(min_eigenvalue=float(w[0]), eigenvector=v[:, 0].copy())
        return DetectionReport(Verdict.INSEPARABLE, Criterion.MAP_NEGATIVITY, witness, spec)
    return DetectionReport(Verdict.INCONCLUSIVE, Criterion.MAP_NEGATIVITY, map_spec=spec)


def lemma2_witness_value(sigma: HermitianOperator, a: int, b: int) -> float:
    """Quadratic form <v|sigma|v> for |v> = |a> - (s_ab*/|s_ab|)|b>.

    Equals s_aa + s_bb - 2|s_ab|; when all diagonal entries are 1/2^n this is
    2(1/2^n - |s_ab|), negative as soon as the element beats 1/2^n.
    """
    if a == b:
        raise ValueError("witness needs two distinct basis indices")
    m = sigma.matrix
    d = m.shape[0]
    if not (0 <= a < d and 0 <= b < d):
        raise ValueError(f"indices ({a}, {b}) out of range for dimension {d}")
    s_ab = m[a, b]
    if s_ab == 0:
        raise ValueError(f"element ({a}, {b}) is zero; witness vector undefined")
    return float((m[a, a] + m[b, b]).real - 2 * abs(s_ab))


def equal_argument_check(
    rho: HermitianOperator, tol_arg: float = 1e-9, zero_tol: float = 1e-12
) -> bool:
    """True iff all nonzero lower-triangle elements share one complex argument.

    Elements with modulus <= zero_tol are exempt (their argument is
    undefined). Phases are compared as angles between complex numbers, so the
    +-pi wraparound is handled.
    """
    m = rho.matrix
    d = m.shape[0]
    ref = None
    for i in range(1, d):
        for j in range(i):
            c = m[i, j]
            if abs(c) <= zero_tol:
                continue
            if ref is None:
                ref = c
            elif abs(np.angle(c * np.conj(ref))) > tol_arg:
                return False
    return True


def lemma1_bound_check(rho: HermitianOperator, a: int, b: int) -> bool:
    """Check |c~_ab| >= |c_ab| / 2^(n - h(a,b)) under the all-qubit P map.

    Requires an equal-argument input: each partial application then shrinks
    a bit-matched element by at most a factor of two and bit-mismatched
    elements are untouched.
    """
    if a == b:
        raise ValueError("bound is about off-diagonal elements; need a != b")
    if not equal_argument_check(rho):
        raise ValueError("input does not satisfy the equal-argument precondition")
    n = rho.n_qubits
    h = hamming(a, b, n)
    mapped = apply_product(rho, MapSpec.all_qubits(n, MapKind.P))
    lower = abs(rho.matrix[a, b]) / 2 ** (n - h)
    return abs(mapped.matrix[a, b]) >= lower - TOL_CRIT
