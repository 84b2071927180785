"""Regular decomposition g = g_plus e^{q} h_plus of SU(m,n) elements.

The decomposition is read off one singular value decomposition of g.  For
pseudo-unitary g the SVD has the exact structure

    g = (g_plus R) Sigma (R^T conj) h_plus,   Sigma = diag(e^q, 1_{m-n}, e^{-q}),

where R is the fixed orthogonal matrix that rotates each coupled index
pair (k, m+k) onto the Cartan eigenbasis.  Consequently q_k = log s_k of
the leading n singular values, and the compact factors come from the
singular vectors.  The columns belonging to the small singular values
e^{-q_k} are recomputed from the well-conditioned large-value columns via
the pseudo-unitarity pairing  W_{m+k} ~ I W_k,  Z_{m+k} ~ I Z_k;  without
this repair the factors lose all accuracy once e^{2 q_1} approaches 1/eps.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import embed_cartan, chamber_margin
from .errors import FactorizationError, RegularityError

__all__ = [
    "KAKFactors", "RegularityReport", "polar_split", "kak_decompose",
    "is_regular", "regularity_report", "group_residual", "assert_group",
    "random_compact_element", "random_m_element", "random_regular_element",
]


def group_residual(sig, g):
    """Relative violation of g^dag I g = I and det g = 1."""
    g = np.asarray(g, dtype=complex)
    i_mn = sig.metric
    scale = max(1.0, float(np.abs(g).max()) ** 2)
    r = np.abs(g.conj().T @ i_mn @ g - i_mn).max() / scale
    return max(r, abs(np.linalg.det(g) - 1.0))


def assert_group(sig, g, tol=1e-11, name="matrix"):
    r = group_residual(sig, g)
    if r > tol:
        raise FactorizationError(
            f"{name} is not in SU({sig.m},{sig.n}): residual {r:.3e}")


def _pair_rotation(sig):
    """Orthogonal R with embed_cartan(q) = R diag(q, 0, -q) R^T."""
    m, n, dim = sig.m, sig.n, sig.dim
    r = np.zeros((dim, dim))
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for k in range(n):
        r[k, k] = inv_sqrt2
        r[m + k, k] = inv_sqrt2
        r[k, m + k] = inv_sqrt2
        r[m + k, m + k] = -inv_sqrt2
    for d in range(n, m):
        r[d, d] = 1.0
    return r.astype(complex)


def _repaired_svd(sig, g):
    """SVD of a pseudo-unitary matrix with the small-value singular
    vectors rebuilt from their large-value partners."""
    m, n = sig.m, sig.n
    w, s, zh = np.linalg.svd(g)
    z = zh.conj().T
    i_mn = sig.metric
    for k in range(n):
        w[:, m + k] = i_mn @ w[:, k]
        z[:, m + k] = i_mn @ z[:, k]
    return w, s, z


@dataclass(frozen=True)
class RegularityReport:
    is_regular: bool
    margin: float
    worst_root: str

    def __bool__(self):
        return self.is_regular


def regularity_report(q, rsd, eps_reg=1e-6):
    margin, worst = chamber_margin(q, rsd)
    return RegularityReport(margin >= eps_reg, margin, worst)


def is_regular(q, rsd, eps_reg=1e-6):
    """True iff every restricted root stays >= eps_reg in magnitude on q."""
    return regularity_report(q, rsd, eps_reg).is_regular


@dataclass
class KAKFactors:
    """Factors of g = g_plus e^{embed(q)} h_plus with q in the closed
    chamber q^1 >= ... >= q^n >= 0."""

    g_plus: np.ndarray
    q: np.ndarray
    h_plus: np.ndarray

    def reconstruct(self, sig):
        return self.g_plus @ linalg.mat_exp(embed_cartan(sig, self.q)) @ self.h_plus


def polar_split(sig, g, tol=1e-9):
    """Split g = e^X k with X Hermitian block-off-diagonal and k compact.

    X is half the principal logarithm of g g^dag; k = e^{-X} g is returned
    as the unitary polar factor, which avoids forming the exponentially
    ill-conditioned product explicitly.
    """
    g = np.asarray(g, dtype=complex)
    r = group_residual(sig, g)
    if r > tol:
        raise FactorizationError(
            f"polar_split input is not pseudo-unitary (residual {r:.3e})")
    w, s, z = _repaired_svd(sig, g)
    logs = np.empty_like(s)
    n, m = sig.n, sig.m
    logs[:n] = np.log(s[:n])
    logs[n:m] = np.log(s[n:m])
    logs[m:] = -logs[:n]
    x = (w * logs) @ w.conj().T
    x = 0.5 * (x + x.conj().T)
    k = w @ z.conj().T
    return x, k


def kak_decompose(g, rsd, eps_reg=1e-6, phase_rng=None):
    """Regular decomposition of g with canonical descending chamber q.

    A non-regular input (any root value of q below ``eps_reg``) raises a
    regularity error naming the offending root.  ``phase_rng`` randomizes
    the residual centralizer freedom of the factors; every reduced
    observable must be invariant under it.
    """
    sig = rsd.sig
    g = np.asarray(g, dtype=complex)
    r = group_residual(sig, g)
    if r > 1e-8:
        raise FactorizationError(
            f"kak_decompose input is not in SU({sig.m},{sig.n}) (residual {r:.3e})")
    m, n = sig.m, sig.n
    w, s, z = _repaired_svd(sig, g)
    q = np.log(s[:n])
    rep = regularity_report(q, rsd, eps_reg)
    if not rep:
        raise RegularityError(
            f"group element is not regular: |{rep.worst_root}(q)| = {rep.margin:.3e}",
            root=rep.worst_root, margin=rep.margin)
    if phase_rng is not None:
        w, z = _randomize_phases(sig, w, z, phase_rng)
    rot = _pair_rotation(sig)
    g_plus = w @ rot.conj().T
    # absorb the determinant phase into one centralizer direction
    d = np.linalg.det(g_plus)
    if m > n:
        ph = np.exp(-1j * np.angle(d))
        w[:, n] *= ph
        z[:, n] *= ph
    else:
        ph = np.exp(-0.5j * np.angle(d))
        w[:, 0] *= ph
        z[:, 0] *= ph
        w[:, m] *= ph
        z[:, m] *= ph
    g_plus = w @ rot.conj().T
    h_plus = rot @ z.conj().T
    return KAKFactors(g_plus, q, h_plus)


def _randomize_phases(sig, w, z, rng):
    """Right-multiply the singular vector pairs by a random centralizer
    phase pattern; exercises the gauge ambiguity of the decomposition."""
    m, n = sig.m, sig.n
    w = w.copy()
    z = z.copy()
    for k in range(n):
        ph = np.exp(1j * rng.uniform(-np.pi, np.pi))
        for col in (k, m + k):
            w[:, col] *= ph
            z[:, col] *= ph
    if m > n:
        theta = linalg.haar_unitary(m - n, rng)
        w[:, n:m] = w[:, n:m] @ theta
        z[:, n:m] = z[:, n:m] @ theta
    return w, z


# ---------------------------------------------------------------------------
# samplers used in tests and the verification suite

def random_compact_element(sig, rng):
    """Random element of S(U(m) x U(n)) (block unitaries, det fixed to 1)."""
    m, n, dim = sig.m, sig.n, sig.dim
    g = np.zeros((dim, dim), dtype=complex)
    g[:m, :m] = linalg.haar_unitary(m, rng)
    g[m:, m:] = linalg.haar_unitary(n, rng)
    g *= np.exp(-1j * np.angle(np.linalg.det(g)) / dim)
    return g


def random_m_element(sig, rng):
    """Random centralizer group element diag(e^{i chi}, Gamma, e^{i chi})."""
    m, n, dim = sig.m, sig.n, sig.dim
    s = m - n
    chi = rng.uniform(-np.pi, np.pi, n)
    if s == 0:
        chi[-1] -= chi.sum()
        gamma = None
    else:
        gamma = linalg.haar_unitary(s, rng)
        gamma *= np.exp(-1j * (np.angle(np.linalg.det(gamma)) + 2 * chi.sum()) / s)
    out = np.zeros((dim, dim), dtype=complex)
    for k in range(n):
        out[k, k] = np.exp(1j * chi[k])
        out[m + k, m + k] = np.exp(1j * chi[k])
    if s > 0:
        out[n:m, n:m] = gamma
    return out


def random_regular_element(sig, rsd, rng, q_low=0.25, q_high=2.5, min_margin=0.05):
    """Random regular group element k1 e^{embed(q)} k2 with a safe chamber
    margin; returns (g, q, k1, k2)."""
    while True:
        q = np.sort(rng.uniform(q_low, q_high, sig.n))[::-1]
        if chamber_margin(q, rsd)[0] >= min_margin:
            break
    k1 = random_compact_element(sig, rng)
    k2 = random_compact_element(sig, rng)
    g = k1 @ linalg.mat_exp(embed_cartan(sig, q)) @ k2
    return g, q, k1, k2
