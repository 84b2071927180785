"""Dense complex matrix primitives shared by the whole package.

All operations are pure functions of explicit inputs; matrices are plain
``numpy`` complex arrays.  Eigen- and singular-value problems are delegated
to LAPACK through numpy, which meets the residual contracts at the matrix
sizes used here (<= 10).  The matrix exponential is a scaling-and-squaring
Pade-13 evaluation.
"""

import numpy as np

from .errors import DomainError

# Pade-13 coefficients and the norm threshold below which a single
# degree-13 approximant keeps the backward error at double precision.
_PADE13_B = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0,
    670442572800.0, 33522128640.0, 1323241920.0, 40840800.0,
    960960.0, 16380.0, 182.0, 1.0,
)
_PADE13_THETA = 5.371920351148152


def _as_square(x, name="matrix"):
    x = np.asarray(x, dtype=complex)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise DomainError(f"{name} must be square, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise DomainError(f"{name} has non-finite entries")
    return x


def mat_exp(x):
    """Matrix exponential by Pade-13 with scaling and squaring.

    The scaling power is chosen so that the scaled 1-norm is below 5.372,
    the standard threshold for the degree-13 approximant.
    """
    a = _as_square(x, "mat_exp input")
    n = a.shape[0]
    norm = np.linalg.norm(a, 1)
    squarings = 0
    if norm > _PADE13_THETA:
        squarings = int(np.ceil(np.log2(norm / _PADE13_THETA)))
        a = a / (2.0 ** squarings)
    b = _PADE13_B
    ident = np.eye(n, dtype=complex)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a4 @ a2
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
             + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
         + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident)
    r = np.linalg.solve(v - u, v + u)
    for _ in range(squarings):
        r = r @ r
    return r


def mat_log_hpd(p, tol=1e-12):
    """Principal logarithm of a Hermitian positive-definite matrix.

    Computed from the Hermitian eigendecomposition; the result is Hermitian
    and satisfies ``mat_exp(result) = p`` to relative 1e-11.
    """
    p = _as_square(p, "mat_log_hpd input")
    scale = max(np.linalg.norm(p), 1.0)
    if np.linalg.norm(p - p.conj().T) > tol * scale:
        raise DomainError("mat_log_hpd input is not Hermitian")
    w, v = np.linalg.eigh(p)
    if w.min() <= 0.0:
        raise DomainError(
            f"mat_log_hpd input is not positive definite (min eigenvalue {w.min():.3e})")
    x = (v * np.log(w)) @ v.conj().T
    return 0.5 * (x + x.conj().T)


def svd(b):
    """Singular value decomposition ``b = u @ diag(s) @ vh``.

    Returns ``(u, s, vh)`` with full unitary factors and descending
    nonnegative singular values.
    """
    b = np.asarray(b, dtype=complex)
    if b.ndim != 2:
        raise DomainError(f"svd input must be a matrix, got shape {b.shape}")
    if not np.all(np.isfinite(b)):
        raise DomainError("svd input has non-finite entries")
    return np.linalg.svd(b)


def eig_hermitian(h, tol=1e-12):
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    h = _as_square(h, "eig_hermitian input")
    scale = max(np.linalg.norm(h), 1.0)
    if np.linalg.norm(h - h.conj().T) > tol * scale:
        raise DomainError("eig_hermitian input is not Hermitian")
    return np.linalg.eigh(0.5 * (h + h.conj().T))


def haar_unitary(k, rng):
    """Haar-distributed ``k x k`` unitary matrix.

    QR of a standard complex Gaussian matrix with the R diagonal phase
    absorbed into Q, which makes the distribution exactly Haar.
    """
    if k < 1:
        raise DomainError(f"haar_unitary needs k >= 1, got {k}")
    z = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
