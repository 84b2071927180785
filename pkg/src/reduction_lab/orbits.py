"""Coadjoint orbit data, the momentum-map constraint and its solution,
the reduced Hamiltonian, and the three one-point-orbit case setups.

Each setup returns representative spin matrices (xi_l, xi_r) on the
constraint surface together with the coupling constants (g^2, g_1^2,
g_2^2) and additive energy shift s for which half the reduced Hamiltonian
equals the BC_n Sutherland Hamiltonian plus s.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import (apply_spectral_function, assemble, central_character,
                      coeff_m, coeff_plus, embed_cartan, pairing, split_pm)
from .errors import ConsistencyError, ConstraintViolation, DomainError, RegularityError
from .kak import regularity_report

__all__ = [
    "CouplingConstants", "OrbitSpec", "OrbitSetup", "ReducedPoint",
    "minimal_orbit_point", "sample_orbit_point", "orbit_spectrum_residual",
    "momentum_map", "solve_constraint", "constraint_residual",
    "reduced_hamiltonian", "bcn_hamiltonian", "bcn_gradient",
    "sunn_setup", "sun1n_setup", "sumn_setup", "make_setup", "shift_orbits",
    "random_spin_pair",
]


@dataclass(frozen=True)
class CouplingConstants:
    """Signed coupling squares of the BC_n Hamiltonian plus the constant
    offset between half the reduced Hamiltonian and the model."""

    g_sq: float
    g1_sq: float
    g2_sq: float
    energy_shift: float = 0.0


@dataclass(frozen=True)
class OrbitSpec:
    """Description of one compact-group coadjoint orbit: an optional
    minimal orbit of the designated unitary block plus a character shift."""

    sig: object
    block: str = "upper"           # "upper" (u(m) factor) or "lower" (u(n))
    kappa: float = None
    sign: int = +1
    char_shift: float = 0.0

    def __post_init__(self):
        if self.block not in ("upper", "lower"):
            raise DomainError(f"unknown block {self.block!r}")
        if self.kappa is not None and self.kappa <= 0:
            raise DomainError(f"orbit radius kappa must be positive, got {self.kappa}")
        if self.sign not in (+1, -1):
            raise DomainError("orbit sign must be +1 or -1")

    @property
    def block_dim(self):
        return self.sig.m if self.block == "upper" else self.sig.n

    @property
    def block_offset(self):
        return 0 if self.block == "upper" else self.sig.m


def minimal_orbit_point(sig, block, u, sign=+1):
    """Rank-one traceless anti-Hermitian point +-i (u u^dag - |u|^2/k) of
    the chosen unitary block, zero-padded to the full matrix size."""
    u = np.asarray(u, dtype=complex)
    spec = OrbitSpec(sig, block, kappa=None, sign=sign)
    k = spec.block_dim
    if u.shape != (k,):
        raise DomainError(f"expected a {k}-vector for the {block} block, got {u.shape}")
    uu = float(np.vdot(u, u).real)
    if uu == 0.0:
        raise DomainError("minimal orbit point needs a nonzero vector")
    eta = sign * 1j * (np.outer(u, u.conj()) - (uu / k) * np.eye(k))
    out = np.zeros((sig.dim, sig.dim), dtype=complex)
    o = spec.block_offset
    out[o:o + k, o:o + k] = eta
    return out


def sample_orbit_point(spec, rng):
    """Random point of the orbit: u uniform on the sphere u^dag u = k kappa
    plus the character shift; a character-only spec is returned exactly."""
    shift = spec.char_shift * central_character(spec.sig)
    if spec.kappa is None:
        return shift
    k = spec.block_dim
    u = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    u *= np.sqrt(k * spec.kappa) / np.linalg.norm(u)
    return minimal_orbit_point(spec.sig, spec.block, u, spec.sign) + shift


def orbit_spectrum_residual(spec, xi):
    """Distance of eig(xi - shift*C) from the minimal-orbit spectrum
    {i kappa (k-1), -i kappa x (k-1), 0 x rest}; zero iff xi sits on the
    orbit described by spec."""
    sig = spec.sig
    x = xi - spec.char_shift * central_character(sig)
    vals = np.sort(np.linalg.eigvalsh(-1j * x))
    if spec.kappa is None:
        expected = np.zeros(sig.dim)
    else:
        k = spec.block_dim
        expected = np.sort(np.concatenate([
            np.full(k - 1, -spec.kappa * spec.sign),
            [spec.kappa * (k - 1) * spec.sign],
            np.zeros(sig.dim - k),
        ]))
    return float(np.abs(vals - expected).max())


def momentum_map(sig, g, jl, xi_l, xi_r):
    """Conserved pair (J^l_+ + xi_l, -(g^-1 J^l g)_+ + xi_r); both vanish
    on the constraint surface of the reduction."""
    psi_l = split_pm(jl)[0] + xi_l
    conj = np.linalg.solve(g, jl @ g)
    psi_r = -split_pm(conj)[0] + xi_r
    return psi_l, psi_r


@dataclass
class ReducedPoint:
    """Chamber coordinates, momenta, and the two compact spin matrices."""

    q: np.ndarray
    p: np.ndarray
    xi_l: np.ndarray
    xi_r: np.ndarray

    def __post_init__(self):
        self.q = np.asarray(self.q, dtype=float)
        self.p = np.asarray(self.p, dtype=float)


def constraint_residual(pt, rsd):
    """Norm of the centralizer part of xi_l + xi_r (must vanish)."""
    c = coeff_m(pt.xi_l + pt.xi_r, rsd)
    return float(np.linalg.norm(c))


def solve_constraint(pt, rsd, eps_reg=1e-6, constraint_tol=1e-9):
    """Unique momentum matrix with vanishing momentum map over the gauge
    slice point (e^q, ., xi_l, xi_r):

        L = embed(p) - coth(ad_q) xi_l_perp - (1/sinh)(ad_q) xi_r_perp - xi_l.
    """
    res = constraint_residual(pt, rsd)
    if res > constraint_tol:
        raise ConstraintViolation(
            f"spin pair violates the centralizer constraint: residual {res:.3e}")
    rep = regularity_report(pt.q, rsd, eps_reg)
    if not rep:
        raise RegularityError(
            f"q is not regular: |{rep.worst_root}(q)| = {rep.margin:.3e}",
            root=rep.worst_root, margin=rep.margin)
    vals = rsd.slot_values(pt.q)
    cl = coeff_plus(pt.xi_l, rsd)
    cr = coeff_plus(pt.xi_r, rsd)
    coef = cl / np.tanh(vals) + cr / np.sinh(vals)
    return embed_cartan(rsd.sig, pt.p) - assemble(coef, rsd.eminus) - pt.xi_l


def reduced_hamiltonian(pt, rsd, eps_reg=1e-6):
    """Spin Calogero Hamiltonian of the reduced system, evaluated term by
    term (kinetic, three inverse-sinh-squared quadratic forms, centralizer
    norm, and the half-argument cross term); equals 0.5 <L, L> for L from
    solve_constraint."""
    res = constraint_residual(pt, rsd)
    if res > 1e-9:
        raise ConstraintViolation(
            f"spin pair violates the centralizer constraint: residual {res:.3e}")
    q = pt.q
    pm = embed_cartan(rsd.sig, pt.p)
    xl_perp = assemble(coeff_plus(pt.xi_l, rsd), rsd.eplus)
    xr_perp = assemble(coeff_plus(pt.xi_r, rsd), rsd.eplus)
    xl_m = assemble(coeff_m(pt.xi_l, rsd), rsd.m_basis)
    w2_l = apply_spectral_function("w_sq", q, xl_perp, rsd, eps_reg)
    w2_r = apply_spectral_function("w_sq", q, xr_perp, rsd, eps_reg)
    w2h_l = apply_spectral_function("w_sq_half", q, xl_perp, rsd, eps_reg)
    return (0.5 * pairing(pm, pm)
            - 0.5 * pairing(xl_perp, w2_l)
            - 0.5 * pairing(xr_perp, w2_r)
            + 0.5 * pairing(xl_m, xl_m)
            + pairing(xr_perp, w2_l)
            - 0.5 * pairing(xr_perp, w2h_l))


# ---------------------------------------------------------------------------
# the BC_n Sutherland model

def _check_bcn_regular(q):
    n = len(q)
    for k in range(n):
        if q[k] == 0.0:
            raise DomainError(f"coordinate q[{k}] vanishes")
    for j in range(n):
        for k in range(j + 1, n):
            if q[j] == q[k] or q[j] == -q[k]:
                raise DomainError(f"coordinates q[{j}], q[{k}] coincide up to sign")


def bcn_hamiltonian(q, p, cc):
    """BC_n Sutherland Hamiltonian with hyperbolic pair, reflection and
    half-period potentials; coupling squares may be negative."""
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    _check_bcn_regular(q)
    n = len(q)
    h = 0.5 * float(p @ p)
    for j in range(n):
        for k in range(j + 1, n):
            h += cc.g_sq * (1.0 / np.sinh(q[j] - q[k]) ** 2
                            + 1.0 / np.sinh(q[j] + q[k]) ** 2)
    for k in range(n):
        h += cc.g1_sq / np.sinh(q[k]) ** 2 + cc.g2_sq / np.sinh(2.0 * q[k]) ** 2
    return h


def bcn_gradient(q, cc):
    """Configuration gradient of the BC_n potential."""
    q = np.asarray(q, dtype=float)
    _check_bcn_regular(q)
    n = len(q)

    def d_inv_sinh_sq(z):
        return -2.0 * np.cosh(z) / np.sinh(z) ** 3

    grad = np.zeros(n)
    for j in range(n):
        for k in range(j + 1, n):
            a = d_inv_sinh_sq(q[j] - q[k])
            b = d_inv_sinh_sq(q[j] + q[k])
            grad[j] += cc.g_sq * (a + b)
            grad[k] += cc.g_sq * (-a + b)
    for k in range(n):
        grad[k] += (cc.g1_sq * d_inv_sinh_sq(q[k])
                    + 2.0 * cc.g2_sq * d_inv_sinh_sq(2.0 * q[k]))
    return grad


# ---------------------------------------------------------------------------
# the three one-point-orbit setups

@dataclass(frozen=True)
class OrbitSetup:
    """Representative spin pair on the constraint surface plus the
    matching Sutherland couplings."""

    xi_l: np.ndarray
    xi_r: np.ndarray
    couplings: CouplingConstants


def _sum_plus(rsd, entries):
    """Weighted sum of labeled compact root vectors."""
    out = np.zeros((rsd.sig.dim, rsd.sig.dim), dtype=complex)
    for root_label, slot_label, weight in entries:
        out += weight * rsd.plus_vector(root_label, slot_label)
    return out


def _pair_sum(rsd, weight):
    n = rsd.sig.n
    entries = []
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            entries.append((f"e{j}+e{k}", "i", weight))
            entries.append((f"e{j}-e{k}", "i", weight))
    return entries


def _long_sum(n, weight):
    return [(f"2e{k}", "i", weight) for k in range(1, n + 1)]


def sunn_setup(rsd, kappa, x, y):
    """SU(n,n): minimal orbit of the upper block shifted by x times the
    character against a pure character y; yields all three couplings
    g^2 = kappa^2/4, g1^2 = x y n^2/2, g2^2 = (x-y)^2 n^2/2."""
    sig = rsd.sig
    if sig.m != sig.n:
        raise DomainError(f"sunn setup needs m = n, got ({sig.m}, {sig.n})")
    if kappa <= 0:
        raise DomainError(f"kappa must be positive, got {kappa}")
    n = sig.n
    xi_l = _sum_plus(rsd, _pair_sum(rsd, kappa) + _long_sum(n, np.sqrt(2.0) * x * n))
    xi_r = _sum_plus(rsd, _long_sum(n, np.sqrt(2.0) * y * n))
    cc = CouplingConstants(kappa ** 2 / 4.0, x * y * n ** 2 / 2.0,
                           (x - y) ** 2 * n ** 2 / 2.0, 0.0)
    _post_check(rsd, xi_l, xi_r,
                OrbitSpec(sig, "upper", kappa=kappa, char_shift=x))
    return OrbitSetup(xi_l, xi_r, cc)


def sun1n_setup(rsd, kappa, x, y):
    """SU(n+1,n): minimal orbit of the (n+1)-block with both character
    shifts; consistency requires kappa + x + y >= 0 and
    kappa - n(x+y) >= 0."""
    sig = rsd.sig
    n = sig.n
    if sig.m != n + 1:
        raise DomainError(f"sun1n setup needs m = n + 1, got ({sig.m}, {n})")
    if kappa <= 0:
        raise DomainError(f"kappa must be positive, got {kappa}")
    if kappa + x + y < 0:
        raise ConsistencyError(
            f"consistency requires kappa + x + y >= 0, got {kappa + x + y:.6g}")
    if kappa - n * (x + y) < 0:
        raise ConsistencyError(
            f"consistency requires kappa - n(x+y) >= 0, got {kappa - n * (x + y):.6g}")
    g = (kappa + x + y) / 2.0
    h1 = np.sqrt((kappa + x + y) * (kappa - n * (x + y))) / np.sqrt(2.0)
    h2 = (2.0 * (n + 1) * x + y) / np.sqrt(8.0)
    h2t = y * (2.0 * n + 1.0) / np.sqrt(8.0)
    xi_r = y * central_character(sig)
    xi_r_m = np.zeros((sig.dim, sig.dim), dtype=complex)
    for k in range(n):
        xi_r_m[k, k] = -0.5j * y
        xi_r_m[sig.m + k, sig.m + k] = -0.5j * y
    xi_r_m[n, n] = 1j * y * n
    entries = (_pair_sum(rsd, 2.0 * g)
               + [(f"e{k}", "i1", 2.0 * h1) for k in range(1, n + 1)]
               + _long_sum(n, 2.0 * h2))
    xi_l = -xi_r_m + _sum_plus(rsd, entries)
    cc = CouplingConstants(g ** 2, h1 ** 2 + h2 * h2t, (h2 - h2t) ** 2,
                           -y ** 2 * (2.0 * n ** 2 + n) / 8.0)
    # the stated centralizer part must match the character decomposition
    if np.abs(assemble(coeff_m(xi_r, rsd), rsd.m_basis) - xi_r_m).max() > 1e-11:
        raise ConsistencyError("character centralizer part mismatch")
    _post_check(rsd, xi_l, xi_r,
                OrbitSpec(sig, "upper", kappa=kappa, char_shift=x))
    return OrbitSetup(xi_l, xi_r, cc)


def sumn_setup(rsd, kappa, y):
    """SU(m,n) with m >= n+1: minimal orbit of the lower block; the
    constraint forces x = -y, leaving two independent couplings with
    g1^2 = -g2^2/4 <= 0."""
    sig = rsd.sig
    m, n = sig.m, sig.n
    if m < n + 1:
        raise DomainError(f"sumn setup needs m >= n + 1, got ({m}, {n})")
    if kappa <= 0:
        raise DomainError(f"kappa must be positive, got {kappa}")
    x = -y
    u = np.sqrt(kappa) * np.ones(n)
    xi_l = minimal_orbit_point(sig, "lower", u) + x * central_character(sig)
    xi_r = y * central_character(sig)
    cc = CouplingConstants(kappa ** 2 / 4.0,
                           -y ** 2 * (m + n) ** 2 / 8.0,
                           y ** 2 * (m + n) ** 2 / 2.0,
                           -y ** 2 * (m ** 2 - n ** 2) * n / 8.0)
    _post_check(rsd, xi_l, xi_r,
                OrbitSpec(sig, "lower", kappa=kappa, char_shift=x))
    return OrbitSetup(xi_l, xi_r, cc)


def _post_check(rsd, xi_l, xi_r, left_spec, tol=1e-10):
    pt = ReducedPoint(np.ones(rsd.sig.n), np.zeros(rsd.sig.n), xi_l, xi_r)
    res = constraint_residual(pt, rsd)
    if res > tol:
        raise ConsistencyError(f"setup violates the constraint: residual {res:.3e}")
    spec_res = orbit_spectrum_residual(left_spec, xi_l)
    if spec_res > 1e-9 * max(1.0, left_spec.kappa or 1.0):
        raise ConsistencyError(
            f"left spin is not on the stated orbit: spectral residual {spec_res:.3e}")


_CASES = {"sunn": sunn_setup, "sun1n": sun1n_setup}


def make_setup(case, rsd, kappa, x, y):
    """Dispatch a named case; for 'sumn' the x parameter must equal -y."""
    if case == "sumn":
        if x != -y:
            raise ConsistencyError(
                f"the sumn constraint forces x = -y, got x = {x}, y = {y}")
        return sumn_setup(rsd, kappa, y)
    try:
        fn = _CASES[case]
    except KeyError:
        raise DomainError(f"unknown case {case!r}; choose sunn, sun1n or sumn") from None
    return fn(rsd, kappa, x, y)


def shift_orbits(xi_l, xi_r, y, sig):
    """Character deformation (xi_l - yC, xi_r + yC); leaves the
    centralizer constraint untouched."""
    c = central_character(sig)
    return xi_l - y * c, xi_r + y * c


def random_spin_pair(rsd, rng, scale=1.0):
    """Generic compact spin pair satisfying the centralizer constraint."""
    from .algebra import random_algebra_element

    sig = rsd.sig
    xi_l = split_pm(random_algebra_element(sig, rng, scale))[0]
    xi_r = split_pm(random_algebra_element(sig, rng, scale))[0]
    xi_r = xi_r - assemble(coeff_m(xi_r, rsd), rsd.m_basis) \
        - assemble(coeff_m(xi_l, rsd), rsd.m_basis)
    return xi_l, xi_r
