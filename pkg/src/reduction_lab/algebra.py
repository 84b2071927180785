"""Structure of su(m,n): involution, decompositions, restricted roots.

Conventions
-----------
The algebra su(m,n) consists of traceless complex matrices ``X`` with
``X^dag I + I X = 0``, ``I = diag(1_m, -1_n)``, ``m >= n >= 1``.  The Cartan
involution is ``theta(X) = -X^dag``; its +1 eigenspace (block diagonal
matrices) is the compact part, the -1 eigenspace (block off-diagonal
Hermitian matrices) the noncompact part.

The maximal Abelian subspace consists of matrices carrying a real diagonal
``Q = diag(q^1..q^n)`` in the two corner blocks that couple the first n
rows with the last n rows.  The restricted-root system is BC_n for m > n
and C_n for m = n, with root values on ``q``:

    e_j - e_k, e_j + e_k (multiplicity 2),  2e_k (1),  e_k (2(m-n)).

Root-vector basis matrices are normalized against the trace form
``<X, Y> = tr(XY)``, which is negative definite on the compact part and
positive definite on the noncompact part.  Each compact root vector
``E+`` has ``<E+, E+> = -1``, each noncompact partner ``E- = [q, E+] /
alpha(q)`` has ``<E-, E-> = +1``, and ``[q, E-] = alpha(q) E+``.  Residual
sign freedom is pinned by requiring a positive coefficient for the
``2e_k`` vectors in the compact central character.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, RegularityError

__all__ = [
    "Signature", "RestrictedRoot", "RootSystemData", "build_root_system",
    "embed_cartan", "cartan_involution", "split_pm", "split_four",
    "central_character", "centralizer_basis", "apply_spectral_function",
    "pairing", "algebra_residual", "assert_algebra", "random_algebra_element",
    "chamber_margin", "SPECTRAL_FUNCTIONS",
]


@dataclass(frozen=True)
class Signature:
    """Block signature (m, n) of su(m,n), with m >= n >= 1."""

    m: int
    n: int

    def __post_init__(self):
        if self.n < 1 or self.m < self.n:
            raise DomainError(f"signature needs m >= n >= 1, got ({self.m}, {self.n})")

    @property
    def dim(self):
        return self.m + self.n

    @property
    def metric(self):
        d = np.ones(self.dim)
        d[self.m:] = -1.0
        return np.diag(d).astype(complex)


def _unit(dim, i, j):
    e = np.zeros((dim, dim), dtype=complex)
    e[i, j] = 1.0
    return e


def pairing(x, y):
    """Trace form <x, y> = tr(xy); real on algebra pairs."""
    return float(np.trace(x @ y).real)


def algebra_residual(sig, x):
    """Max-norm violation of su(m,n) membership (pseudo anti-Hermiticity
    plus tracelessness), relative to the matrix scale."""
    x = np.asarray(x, dtype=complex)
    i_mn = sig.metric
    scale = max(1.0, float(np.abs(x).max()))
    r = np.abs(x.conj().T @ i_mn + i_mn @ x).max() / scale
    return max(r, abs(np.trace(x)) / scale)


def assert_algebra(sig, x, tol=1e-12, name="matrix"):
    r = algebra_residual(sig, x)
    if r > tol:
        raise DomainError(f"{name} is not in su({sig.m},{sig.n}): residual {r:.3e}")


def cartan_involution(x):
    """theta(X) = -X^dag; squares to the identity."""
    return -np.asarray(x, dtype=complex).conj().T


def split_pm(x):
    """Split into compact (+) and noncompact (-) parts of the involution."""
    x = np.asarray(x, dtype=complex)
    th = cartan_involution(x)
    return 0.5 * (x + th), 0.5 * (x - th)


def embed_cartan(sig, q):
    """Embed coordinates q^1..q^n as the corner-block Cartan matrix.

    Satisfies ``<embed(q), embed(q')> = 2 sum_k q^k q'^k``.
    """
    q = np.asarray(q, dtype=float)
    if q.shape != (sig.n,):
        raise DomainError(f"expected {sig.n} Cartan coordinates, got shape {q.shape}")
    out = np.zeros((sig.dim, sig.dim), dtype=complex)
    for k in range(sig.n):
        out[k, sig.m + k] = q[k]
        out[sig.m + k, k] = q[k]
    return out


def central_character(sig):
    """The compact central element diag(i n 1_m, -i m 1_n).

    Spans the characters of S(U(m) x U(n)); traceless and invariant under
    conjugation by every block-diagonal group element.
    """
    d = np.concatenate([np.full(sig.m, 1j * sig.n), np.full(sig.n, -1j * sig.m)])
    return np.diag(d)


def centralizer_basis(sig):
    """Orthonormal basis (against -tr(XY)) of the centralizer of the
    Cartan subspace inside the compact part.

    Elements have the form diag(i chi, gamma, i chi) in (n, m-n, n) blocks
    with chi real diagonal, gamma anti-Hermitian and the total trace zero;
    the dimension is n + (m-n)^2 - 1.
    """
    m, n, dim = sig.m, sig.n, sig.dim
    s = m - n
    mids = list(range(n, m))
    out = []
    # traceless diagonal chain over the n matched (k, m+k) pairs
    for k in range(1, n):
        v = np.zeros((dim, dim), dtype=complex)
        for j in range(k):
            v[j, j] = 1j
            v[m + j, m + j] = 1j
        v[k, k] = -1j * k
        v[m + k, m + k] = -1j * k
        out.append(v / np.sqrt(2.0 * k * (k + 1)))
    if s > 0:
        # pair-constant vs middle-block balance direction
        v = np.zeros((dim, dim), dtype=complex)
        for k in range(n):
            v[k, k] = 1j * s
            v[m + k, m + k] = 1j * s
        for d in mids:
            v[d, d] = -2j * n
        out.append(v / np.sqrt(2.0 * n * s * (s + 2 * n)))
        # su(m-n) inside the middle block
        for a in range(s):
            for b in range(a + 1, s):
                ia, ib = mids[a], mids[b]
                out.append((_unit(dim, ia, ib) - _unit(dim, ib, ia)) / np.sqrt(2.0))
                out.append(1j * (_unit(dim, ia, ib) + _unit(dim, ib, ia)) / np.sqrt(2.0))
        for d in range(1, s):
            v = np.zeros((dim, dim), dtype=complex)
            for j in range(d):
                v[mids[j], mids[j]] = 1j
            v[mids[d], mids[d]] = -1j * d
            out.append(v / np.sqrt(1.0 * d * (d + 1)))
    return out


@dataclass(frozen=True)
class RestrictedRoot:
    """One positive restricted root with its multiplicity.

    ``kind`` is one of ``"e_j-e_k"``, ``"e_j+e_k"``, ``"2e_k"``, ``"e_k"``;
    indices are 1-based as in the labels; ``alpha`` holds the coefficients
    of the root functional so that ``alpha @ q`` is the root value.
    """

    kind: str
    j: int
    k: int
    alpha: tuple
    multiplicity: int

    @property
    def label(self):
        if self.kind == "e_j-e_k":
            return f"e{self.j}-e{self.k}"
        if self.kind == "e_j+e_k":
            return f"e{self.j}+e{self.k}"
        if self.kind == "2e_k":
            return f"2e{self.k}"
        return f"e{self.k}"

    def value(self, q):
        return float(np.dot(self.alpha, q))


@dataclass
class RootSystemData:
    """Restricted roots of su(m,n) with explicit basis matrices.

    ``eplus[i]`` / ``eminus[i]`` are the compact / noncompact root vectors
    of slot ``i``; ``slot_root[i]`` indexes into ``roots`` and
    ``slot_alpha[i]`` repeats the root coefficients per slot so that
    coefficient-space operators vectorize.  ``m_basis`` and ``a_basis``
    complete the four-way decomposition.
    """

    sig: Signature
    roots: list
    eplus: np.ndarray
    eminus: np.ndarray
    slot_root: np.ndarray
    slot_alpha: np.ndarray
    slot_label: list
    m_basis: np.ndarray
    a_basis: np.ndarray
    _slot_index: dict = field(default_factory=dict, repr=False)

    @property
    def n_slots(self):
        return self.eplus.shape[0]

    def slot(self, root_label, slot_label):
        """Index of the basis slot for e.g. ("2e2", "i") or ("e1", "i1")."""
        return self._slot_index[(root_label, slot_label)]

    def plus_vector(self, root_label, slot_label):
        return self.eplus[self.slot(root_label, slot_label)]

    def root_values(self, q):
        """alpha(q) for every positive root, in storage order."""
        return np.array([r.value(q) for r in self.roots])

    def slot_values(self, q):
        """alpha(q) repeated per basis slot."""
        return self.slot_alpha @ np.asarray(q, dtype=float)


def _reference_chamber_point(n):
    # descending powers of two: all root values are distinct, nonzero,
    # and the E- normalization divisions are exact in binary
    return np.array([2.0 ** (-k) for k in range(n)])


def build_root_system(sig):
    """Construct the restricted-root data of su(m,n).

    Roots are stored in the fixed order (e_j-e_k lexicographic,
    e_j+e_k lexicographic, 2e_k ascending, e_k ascending) so coefficient
    vectors are reproducible across runs.
    """
    m, n, dim = sig.m, sig.n, sig.dim
    s = m - n
    roots = []
    slots = []   # (root_index, slot_label, E+ matrix)

    def alpha_vec(c):
        a = np.zeros(n)
        for idx, w in c.items():
            a[idx] = w
        return tuple(a)

    for j in range(n):
        for k in range(j + 1, n):
            roots.append(RestrictedRoot("e_j-e_k", j + 1, k + 1,
                                        alpha_vec({j: 1.0, k: -1.0}), 2))
            er = 0.5 * ((_unit(dim, j, k) - _unit(dim, k, j))
                        + (_unit(dim, m + j, m + k) - _unit(dim, m + k, m + j)))
            ei = 0.5j * ((_unit(dim, j, k) + _unit(dim, k, j))
                         + (_unit(dim, m + j, m + k) + _unit(dim, m + k, m + j)))
            ri = len(roots) - 1
            slots += [(ri, "r", er), (ri, "i", ei)]
    for j in range(n):
        for k in range(j + 1, n):
            roots.append(RestrictedRoot("e_j+e_k", j + 1, k + 1,
                                        alpha_vec({j: 1.0, k: 1.0}), 2))
            er = 0.5 * ((_unit(dim, j, k) - _unit(dim, k, j))
                        - (_unit(dim, m + j, m + k) - _unit(dim, m + k, m + j)))
            ei = 0.5j * ((_unit(dim, j, k) + _unit(dim, k, j))
                         - (_unit(dim, m + j, m + k) + _unit(dim, m + k, m + j)))
            ri = len(roots) - 1
            slots += [(ri, "r", er), (ri, "i", ei)]
    for k in range(n):
        roots.append(RestrictedRoot("2e_k", k + 1, k + 1, alpha_vec({k: 2.0}), 1))
        ei = (1j / np.sqrt(2.0)) * (_unit(dim, k, k) - _unit(dim, m + k, m + k))
        slots.append((len(roots) - 1, "i", ei))
    if s > 0:
        for k in range(n):
            roots.append(RestrictedRoot("e_k", k + 1, k + 1, alpha_vec({k: 1.0}), 2 * s))
            ri = len(roots) - 1
            for d in range(s):
                mid = n + d
                er = (_unit(dim, k, mid) - _unit(dim, mid, k)) / np.sqrt(2.0)
                ei = 1j * (_unit(dim, k, mid) + _unit(dim, mid, k)) / np.sqrt(2.0)
                slots += [(ri, f"r{d + 1}", er), (ri, f"i{d + 1}", ei)]

    qref = _reference_chamber_point(n)
    qmat = embed_cartan(sig, qref)
    eplus = np.stack([e for _, _, e in slots])
    eminus = np.empty_like(eplus)
    for i, (ri, _, e) in enumerate(slots):
        eminus[i] = (qmat @ e - e @ qmat) / roots[ri].value(qref)

    slot_root = np.array([ri for ri, _, _ in slots])
    slot_alpha = np.array([roots[ri].alpha for ri, _, _ in slots])
    slot_label = [(roots[ri].label, lbl) for ri, lbl, _ in slots]
    index = {key: i for i, key in enumerate(slot_label)}
    m_basis_list = centralizer_basis(sig)
    m_basis = (np.stack(m_basis_list) if m_basis_list
               else np.zeros((0, dim, dim), dtype=complex))
    a_basis = np.stack([embed_cartan(sig, e) / np.sqrt(2.0) for e in np.eye(n)])
    return RootSystemData(sig, roots, eplus, eminus, slot_root, slot_alpha,
                          slot_label, m_basis, a_basis, index)


# ---------------------------------------------------------------------------
# component extraction and the four-way split

def coeff_plus(x, rsd):
    """Coefficients of the compact root-vector part (the E+ span)."""
    return -np.einsum("kij,ji->k", rsd.eplus, x).real


def coeff_minus(x, rsd):
    """Coefficients of the noncompact root-vector part (the E- span)."""
    return np.einsum("kij,ji->k", rsd.eminus, x).real


def coeff_m(x, rsd):
    """Coefficients in the centralizer basis."""
    if rsd.m_basis.shape[0] == 0:
        return np.zeros(0)
    return -np.einsum("kij,ji->k", rsd.m_basis, x).real


def coeff_a(x, rsd):
    """Coefficients in the orthonormal Cartan basis."""
    return np.einsum("kij,ji->k", rsd.a_basis, x).real


def assemble(coeffs, basis):
    if basis.shape[0] == 0:
        return np.zeros(basis.shape[1:], dtype=complex)
    return np.einsum("k,kij->ij", np.asarray(coeffs, dtype=float), basis)


def split_four(x, rsd):
    """Orthogonal split into Cartan, noncompact-root, centralizer and
    compact-root components, in that order; the four parts sum to x."""
    x = np.asarray(x, dtype=complex)
    xa = assemble(coeff_a(x, rsd), rsd.a_basis)
    xap = assemble(coeff_minus(x, rsd), rsd.eminus)
    xm = assemble(coeff_m(x, rsd), rsd.m_basis)
    xmp = assemble(coeff_plus(x, rsd), rsd.eplus)
    return xa, xap, xm, xmp


def chamber_margin(q, rsd):
    """Smallest |alpha(q)| over the positive roots, with the arg-min label."""
    vals = np.abs(rsd.root_values(q))
    i = int(np.argmin(vals))
    return float(vals[i]), rsd.roots[i].label


# ---------------------------------------------------------------------------
# analytic functions of ad_q on the root part

SPECTRAL_FUNCTIONS = {
    "coth": (lambda z: 1.0 / np.tanh(z), "odd"),
    "w": (lambda z: 1.0 / np.sinh(z), "odd"),
    "w_sq": (lambda z: 1.0 / np.sinh(z) ** 2, "even"),
    "w_sq_half": (lambda z: 1.0 / np.sinh(0.5 * z) ** 2, "even"),
    "wf": (lambda z: np.cosh(z) / np.sinh(z) ** 2, "even"),
}


def apply_spectral_function(tag, q, x, rsd, eps_reg=1e-6):
    """Apply an analytic function of ad_q to a root-part element.

    ``ad_q`` maps each pair (E+, E-) to alpha(q) times the swapped pair, so
    an odd function sends ``sum c E+`` to ``sum c f(alpha(q)) E-`` (and
    vice versa) while an even function preserves the +/- type.  ``x`` must
    lie in the span of the root vectors; a Cartan or centralizer component
    raises a domain error, a non-regular ``q`` a regularity error.
    """
    try:
        f, parity = SPECTRAL_FUNCTIONS[tag]
    except KeyError:
        raise DomainError(f"unknown spectral function tag {tag!r}; "
                          f"choose from {sorted(SPECTRAL_FUNCTIONS)}") from None
    q = np.asarray(q, dtype=float)
    margin, worst = chamber_margin(q, rsd)
    if margin < eps_reg:
        raise RegularityError(
            f"q is not regular: |{worst}(q)| = {margin:.3e} < {eps_reg:.1e}",
            root=worst, margin=margin)
    x = np.asarray(x, dtype=complex)
    cp = coeff_plus(x, rsd)
    cm = coeff_minus(x, rsd)
    recon = assemble(cp, rsd.eplus) + assemble(cm, rsd.eminus)
    scale = max(1.0, float(np.abs(x).max()))
    if np.abs(x - recon).max() > 1e-10 * scale:
        raise DomainError("input has components outside the root-vector span")
    vals = f(rsd.slot_values(q))
    if parity == "odd":
        return assemble(cp * vals, rsd.eminus) + assemble(cm * vals, rsd.eplus)
    return assemble(cp * vals, rsd.eplus) + assemble(cm * vals, rsd.eminus)


# ---------------------------------------------------------------------------
# sampling helpers

def random_algebra_element(sig, rng, scale=1.0):
    """Random element of su(m,n) with independent Gaussian components."""
    m, n = sig.m, sig.n
    za = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    zd = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    a = 0.5 * (za - za.conj().T)
    d = 0.5 * (zd - zd.conj().T)
    shift = np.trace(a + d) / (m + n)
    a -= shift * np.eye(m)
    d -= shift * np.eye(n)
    b = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    x = np.zeros((sig.dim, sig.dim), dtype=complex)
    x[:m, :m] = a
    x[:m, m:] = b
    x[m:, :m] = b.conj().T
    x[m:, m:] = d
    return scale * x
