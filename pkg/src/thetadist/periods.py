"""Riemann theta evaluation and the translation-invariant theta norm.

The theta series is summed over a box ``||m||_inf <= R`` with R chosen from a
geometric-majorant tail bound, after reducing the argument to the fundamental
cell of the lattice spanned by the columns of [Id, tau].  High-precision paths
run on mpmath at a configurable bit count; a vectorized double-precision batch
evaluator backs the quadrature and grid-search consumers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import mpmath as mp
import numpy as np

from .errors import BudgetExceeded, InvalidInput, InvalidPeriodMatrix, PrecisionTooLow

_SYMMETRY_RTOL = 1e-10
_LAMBDA_MIN_TOL = 1e-20


@dataclass(frozen=True)
class PrecisionConfig:
    """Working precision (bits) and the absolute error target for theta sums."""

    working_precision_bits: int = 128
    target_abs_error: float = 1e-25

    def __post_init__(self):
        if self.working_precision_bits < 53:
            raise InvalidInput("working_precision_bits must be >= 53")
        if self.target_abs_error <= 0:
            raise InvalidInput("target_abs_error must be positive")
        floor = mp.mpf(2) ** (-self.working_precision_bits + 8)
        if mp.mpf(self.target_abs_error) <= floor:
            raise PrecisionTooLow(
                f"target_abs_error {self.target_abs_error} is at or below the "
                f"precision floor 2^{-self.working_precision_bits + 8}"
            )


class PeriodMatrix:
    """A g x g symmetric complex matrix with positive-definite imaginary part.

    Validation happens at construction: symmetry up to a relative tolerance of
    1e-10 and positive definiteness of Im(tau) via a Cholesky factorization,
    with the smallest eigenvalue additionally required to exceed 1e-20.
    """

    def __init__(self, entries, bits: int = 128):
        with mp.workprec(bits):
            rows = [[mp.mpc(x) for x in row] for row in entries]
            g = len(rows)
            if g < 1 or any(len(r) != g for r in rows):
                raise InvalidPeriodMatrix("tau must be a square matrix")
            tau = mp.matrix(rows)
            maxabs = max(abs(tau[i, j]) for i in range(g) for j in range(g))
            for i in range(g):
                for j in range(g):
                    if abs(tau[i, j] - tau[j, i]) > _SYMMETRY_RTOL * maxabs:
                        raise InvalidPeriodMatrix("tau is not symmetric")
            # symmetrize so downstream linear algebra sees an exactly symmetric Y
            tau = (tau + tau.T) / 2
            Y = mp.matrix(g, g)
            X = mp.matrix(g, g)
            for i in range(g):
                for j in range(g):
                    Y[i, j] = tau[i, j].imag
                    X[i, j] = tau[i, j].real
            try:
                mp.cholesky(Y)
            except ValueError as exc:
                raise InvalidPeriodMatrix("Im(tau) is not positive definite") from exc
            eigs = mp.eigsy(Y, eigvals_only=True)
            lam_min = min(eigs)
            if lam_min <= _LAMBDA_MIN_TOL:
                raise InvalidPeriodMatrix(
                    f"smallest eigenvalue of Im(tau) is {lam_min}, below tolerance"
                )
            self.g = g
            self.bits = bits
            self.tau = tau
            self.X = X
            self.Y = Y
            self.Yinv = Y**-1
            self.detY = mp.det(Y)
            self.lambda_min = lam_min

    @property
    def tau_np(self) -> np.ndarray:
        return np.array(
            [[complex(self.tau[i, j]) for j in range(self.g)] for i in range(self.g)]
        )

    def __repr__(self):
        return f"PeriodMatrix(g={self.g}, bits={self.bits})"


@dataclass(frozen=True)
class ThetaPoint:
    """An argument z in C^g, carried as a tuple of mpmath complex numbers."""

    z: tuple

    def __post_init__(self):
        # Coerce at elevated precision so entries already carried as
        # high-precision mpmath numbers are not re-rounded to the ambient
        # (possibly 53-bit) context precision.
        with mp.workprec(max(mp.mp.prec, 384)):
            zt = tuple(mp.mpc(w) for w in self.z)
        for w in zt:
            if not (mp.isfinite(w.real) and mp.isfinite(w.imag)):
                raise InvalidInput("theta argument has a non-finite entry")
        object.__setattr__(self, "z", zt)

    @property
    def x(self):
        return tuple(w.real for w in self.z)

    @property
    def y(self):
        return tuple(w.imag for w in self.z)


def reduce_to_fundamental(tau: PeriodMatrix, z: ThetaPoint):
    """Translate z by the lattice [Id, tau] into the fundamental cell.

    Returns ``(z0, m, n, log_multiplier)`` with ``z = z0 + tau*m + n``, the
    lattice coordinates of z0 in [0,1)^{2g}, and
    ``theta(z) = exp(log_multiplier) * theta(z0)`` where
    ``log_multiplier = -2*pi*i*(m' tau m / 2 + m' z0)``.
    """
    g = tau.g
    with mp.workprec(tau.bits):
        zv = mp.matrix([list(z.z)]).T
        y = mp.matrix([[w.imag] for w in z.z])
        x = mp.matrix([[w.real] for w in z.z])
        # Coordinates within `snap` of an integer are treated as exact.  Any
        # integer m yields a valid reduction, so a generous tolerance only
        # affects which cell representative is returned, never correctness;
        # it must simply exceed the rounding error of double-precision input.
        snap = mp.mpf("1e-9")

        def floor_snapped(v):
            r = mp.nint(v)
            if abs(v - r) < snap:
                return int(r)
            return int(mp.floor(v))

        m_real = tau.Yinv * y
        m = [floor_snapped(m_real[i]) for i in range(g)]
        mv = mp.matrix([[mp.mpf(k)] for k in m])
        n_real = x - tau.X * mv
        n = [floor_snapped(n_real[i]) for i in range(g)]
        nv = mp.matrix([[mp.mpf(k)] for k in n])
        z0v = zv - tau.tau * mv - nv
        z0 = ThetaPoint(tuple(z0v[i] for i in range(g)))
        quad = (mv.T * tau.tau * mv)[0] / 2
        lin = sum(mv[i] * z0v[i] for i in range(g))
        log_mult = -2j * mp.pi * (quad + lin)
    return z0, tuple(m), tuple(n), log_mult


def _truncation_radius(g: int, lam_min: float, y_norm: float, target: float) -> int:
    """Smallest box radius whose geometric-majorant tail is below target.

    Each shell ||m||_inf = k contributes at most 2g*(2k+1)^(g-1) terms, each of
    modulus <= exp(-pi*lam*k^2 + 2*pi*||y||*k); once consecutive shell bounds
    decay by at least 1/2 the tail is at most twice the first neglected shell.
    """
    log_target = math.log(target)
    R = 1
    while True:
        k = R + 1
        log_shell = (
            math.log(2 * g) + (g - 1) * math.log(2 * k + 1)
            - math.pi * lam_min * k * k + 2 * math.pi * y_norm * k
        )
        k2 = k + 1
        log_next = (
            math.log(2 * g) + (g - 1) * math.log(2 * k2 + 1)
            - math.pi * lam_min * k2 * k2 + 2 * math.pi * y_norm * k2
        )
        if log_next - log_shell <= math.log(0.5) and math.log(2) + log_shell < log_target:
            return R
        R += 1
        if R > 10_000:
            raise BudgetExceeded("truncation radius search did not terminate")


def _theta_reduced(tau: PeriodMatrix, z0: ThetaPoint, cfg: PrecisionConfig, extra_R: int = 0):
    """Theta sum at an already-reduced argument, truncated at the tail radius."""
    g = tau.g
    with mp.workprec(cfg.working_precision_bits):
        y_norm = float(mp.sqrt(sum(w.imag**2 for w in z0.z)))
        R = _truncation_radius(g, float(tau.lambda_min), y_norm, float(cfg.target_abs_error))
        R += extra_R
        total = mp.mpc(0)
        two_pi_i = 2j * mp.pi
        zt = list(z0.z)
        for m in itertools.product(range(-R, R + 1), repeat=g):
            quad = mp.mpc(0)
            lin = mp.mpc(0)
            for i in range(g):
                if m[i]:
                    lin += m[i] * zt[i]
                    for j in range(g):
                        if m[j]:
                            quad += m[i] * m[j] * tau.tau[i, j]
            total += mp.exp(two_pi_i * (quad / 2 + lin))
        return total


def theta(tau: PeriodMatrix, z: ThetaPoint, cfg: PrecisionConfig | None = None, extra_R: int = 0):
    """Riemann theta function theta(z, tau) with absolute error <= the target.

    The argument is first reduced to the fundamental cell; the quasi-periodicity
    multiplier is reapplied to the truncated sum.
    """
    cfg = cfg or PrecisionConfig()
    with mp.workprec(cfg.working_precision_bits):
        z0, m, n, log_mult = reduce_to_fundamental(tau, z)
        val = _theta_reduced(tau, z0, cfg, extra_R=extra_R)
        return mp.exp(log_mult) * val


def theta_norm(tau: PeriodMatrix, z: ThetaPoint, cfg: PrecisionConfig | None = None):
    """Moret-Bailly norm det(Im tau)^(1/2) exp(-2 pi y' (Im tau)^-1 y) |theta|^2.

    Computed after fundamental-cell reduction; the value is invariant under
    lattice translation of z.
    """
    cfg = cfg or PrecisionConfig()
    with mp.workprec(cfg.working_precision_bits):
        z0, _, _, _ = reduce_to_fundamental(tau, z)
        th = _theta_reduced(tau, z0, cfg)
        y0 = mp.matrix([[w.imag] for w in z0.z])
        quad = (y0.T * tau.Yinv * y0)[0]
        return mp.sqrt(tau.detY) * mp.exp(-2 * mp.pi * quad) * abs(th) ** 2


# ---------------------------------------------------------------------------
# Vectorized double-precision batch path (quadrature / grid search backend)
# ---------------------------------------------------------------------------

def _lattice_box(g: int, R: int) -> np.ndarray:
    return np.array(list(itertools.product(range(-R, R + 1), repeat=g)))


def norm_batch(tau: PeriodMatrix, coords: np.ndarray, chunk: int = 20000) -> np.ndarray:
    """<s,s> at lattice coordinates ``coords`` (N x 2g, layout (n, m)), doubles.

    Coordinates are recentred to [-1/2, 1/2) before summation; the norm is
    lattice invariant so the recentring does not change the values.
    """
    g = tau.g
    coords = np.asarray(coords, dtype=float)
    if coords.ndim != 2 or coords.shape[1] != 2 * g:
        raise InvalidInput("coords must have shape (N, 2g)")
    taun = tau.tau_np
    Y = taun.imag
    Yinv = np.linalg.inv(Y)
    detY = float(tau.detY)
    nc = coords[:, :g] - np.round(coords[:, :g])
    mc = coords[:, g:] - np.round(coords[:, g:])
    lam = float(tau.lambda_min)
    y_norm = float(np.linalg.norm(np.abs(Y) @ np.full(g, 0.5)))
    R = _truncation_radius(g, lam, y_norm, 1e-18)
    M = _lattice_box(g, R)
    quad = 0.5 * np.einsum("li,ij,lj->l", M, taun, M)
    out = np.empty(len(coords))
    for i in range(0, len(coords), chunk):
        nn = nc[i : i + chunk]
        mm = mc[i : i + chunk]
        zb = nn + mm @ taun.T
        yb = mm @ Y.T
        phases = np.exp(2j * np.pi * (quad[:, None] + M @ zb.T))
        th2 = np.abs(phases.sum(axis=0)) ** 2
        gauss = np.exp(-2 * np.pi * np.einsum("ni,ij,nj->n", yb, Yinv, yb))
        out[i : i + chunk] = math.sqrt(detY) * gauss * th2
    return out


def _sobol_points(dim: int, count: int) -> np.ndarray:
    from scipy.stats import qmc

    n = 2 ** int(math.floor(math.log2(count)))
    return qmc.Sobol(d=dim, scramble=False).random(n)


def theta_norm_normalization_check(
    tau: PeriodMatrix, sample_budget: int, cfg: PrecisionConfig | None = None
):
    """Average of the theta norm over the torus against the reference 2^(-g/2).

    Uses a midpoint tensor-product grid for g = 1 and an unscrambled Sobol
    sequence for g >= 2, both deterministic.
    """
    if sample_budget < 10**3:
        raise InvalidInput("sample_budget must be at least 10^3")
    g = tau.g
    if g == 1:
        n = int(math.isqrt(sample_budget))
        axis = (np.arange(n) + 0.5) / n
        coords = np.array(list(itertools.product(axis, repeat=2)))
    else:
        coords = _sobol_points(2 * g, sample_budget)
    estimate = float(norm_batch(tau, coords).mean())
    return estimate, 2.0 ** (-g / 2)
