"""Dense complex linear algebra for n-qubit Hermitian operators.

Conventions used throughout the package:

* Basis indices are binary strings read with qubit 1 as the MOST significant
  bit, so an n-qubit basis state |i1 i2 ... in> has index
  i1*2^(n-1) + i2*2^(n-2) + ... + in.
* Matrices are numpy complex128 arrays, row-major.
* A single-qubit state is written I/2 + x*sigma_X + y*sigma_Y + z*sigma_Z,
  so Bloch coordinates live in the ball of radius 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# All quantities handled here are O(1), which leaves several digits of
# double-precision headroom under these tolerances.
TOL_HERM = 1e-12
TOL_TRACE = 1e-10
TOL_PSD = 1e-9
TOL_EIG = 1e-10

# Dense 2^n x 2^n storage; 12 qubits (4096^2 complex doubles) is the
# practical desk-scale limit.
MAX_QUBITS = 12


class HermitianOperator:
    """A 2^n x 2^n complex Hermitian matrix tagged with its qubit count.

    The wrapped array is a read-only complex128 copy; instances are immutable
    values and safe to share across threads. Outputs of the positive maps in
    :mod:`insep.maps` live here and may be non-positive.
    """

    __slots__ = ("matrix", "n_qubits")

    def __init__(self, matrix, n_qubits: int | None = None):
        m = np.array(matrix, dtype=np.complex128, order="C")
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        dim = m.shape[0]
        if n_qubits is None:
            n_qubits = dim.bit_length() - 1
        if n_qubits < 1 or dim != 1 << n_qubits:
            raise ValueError(f"dimension {dim} is not 2^n for n >= 1 qubits")
        if n_qubits > MAX_QUBITS:
            raise ValueError(f"{n_qubits} qubits exceeds the cap of {MAX_QUBITS}")
        dev = float(np.max(np.abs(m - m.conj().T)))
        if dev > TOL_HERM:
            raise ValueError(f"matrix is not Hermitian (max deviation {dev:.3e})")
        m.setflags(write=False)
        self.matrix = m
        self.n_qubits = n_qubits

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def trace(self) -> float:
        return float(self.matrix.trace().real)

    def __repr__(self):
        return f"{type(self).__name__}(n_qubits={self.n_qubits})"


class DensityOperator(HermitianOperator):
    """A HermitianOperator additionally validated trace-one and PSD."""

    __slots__ = ()

    def __init__(self, matrix, n_qubits: int | None = None):
        super().__init__(matrix, n_qubits)
        tr = self.trace()
        if abs(tr - 1.0) > TOL_TRACE:
            raise ValueError(f"trace {tr!r} is not 1 within {TOL_TRACE}")
        lo = float(np.linalg.eigvalsh(self.matrix)[0])
        if lo < -TOL_PSD:
            raise ValueError(f"minimum eigenvalue {lo:.3e} is below -{TOL_PSD}")


@dataclass(frozen=True)
class BlochVector:
    """Coordinates (x, y, z) of a single-qubit state in the radius-1/2 ball."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        r2 = self.x * self.x + self.y * self.y + self.z * self.z
        if r2 > 0.25 + TOL_PSD:
            raise ValueError(f"point ({self.x}, {self.y}, {self.z}) is outside the Bloch ball")

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def tensor(a: HermitianOperator, b: HermitianOperator) -> HermitianOperator:
    """Kronecker product; qubit 1 of ``a`` becomes qubit 1 of the result."""
    return HermitianOperator(np.kron(a.matrix, b.matrix), a.n_qubits + b.n_qubits)


def partial_trace(rho: HermitianOperator, k: int) -> HermitianOperator:
    """Trace out qubit k (1-based): <ac|out|bd> = sum_m <amc|rho|bmd>."""
    n = rho.n_qubits
    if n < 2:
        raise ValueError("need at least two qubits to trace one out")
    if not 1 <= k <= n:
        raise ValueError(f"qubit index {k} out of range 1..{n}")
    hi = 1 << (k - 1)
    lo = 1 << (n - k)
    r = rho.matrix.reshape(hi, 2, lo, hi, 2, lo)
    out = r[:, 0, :, :, 0, :] + r[:, 1, :, :, 1, :]
    return HermitianOperator(out.reshape(hi * lo, hi * lo), n - 1)


def hermitian_eigenvalues(op: HermitianOperator) -> np.ndarray:
    """Real eigenvalues in ascending order."""
    return np.linalg.eigvalsh(op.matrix)


def hermitian_eigensystem(op: HermitianOperator) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and the matrix of eigenvectors as columns."""
    return np.linalg.eigh(op.matrix)


def min_eigenvalue(op: HermitianOperator) -> float:
    return float(np.linalg.eigvalsh(op.matrix)[0])


def hamming(a: int, b: int, n: int) -> int:
    """Number of differing bits between the n-bit expansions of a and b."""
    top = 1 << n
    if not 0 <= a < top:
        raise ValueError(f"index {a} out of range for {n} qubits")
    if not 0 <= b < top:
        raise ValueError(f"index {b} out of range for {n} qubits")
    return (a ^ b).bit_count()


def bloch_from_density(sigma: HermitianOperator) -> BlochVector:
    """Bloch coordinates of a single-qubit operator, rho = I/2 + x X + y Y + z Z."""
    if sigma.n_qubits != 1:
        raise ValueError("Bloch coordinates are defined for a single qubit")
    m = sigma.matrix
    return BlochVector(
        x=float(m[1, 0].real),
        y=float(m[1, 0].imag),
        z=float((m[0, 0] - m[1, 1]).real / 2),
    )


def density_from_bloch(v) -> DensityOperator:
    """Single-qubit density operator at Bloch point v = (x, y, z)."""
    x, y, z = BlochVector(*v)
    m = np.array([[0.5 + z, x - 1j * y], [x + 1j * y, 0.5 - z]])
    return DensityOperator(m, 1)
