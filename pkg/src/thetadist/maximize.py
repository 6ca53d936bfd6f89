"""Global maximization of the square-root theta norm over the Jacobian torus.

Deterministic two-stage search: a full tensor grid in lattice coordinates
(vectorized, double precision) followed by derivative-free simplex refinement
of the best cells at working precision.  No global-optimality certificate is
produced; the probe and grid-monotonicity properties in the test suite are the
practical guard.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import mpmath as mp
import numpy as np
from scipy.optimize import minimize

from .errors import ConfigRejected, InvalidInput
from .periods import PeriodMatrix, PrecisionConfig, ThetaPoint, norm_batch, theta_norm

_GRID_BUDGET = 10**8


@dataclass(frozen=True)
class OptimizerConfig:
    grid_points_per_dim: int = 32
    refine_starts: int = 8
    coord_tolerance: float = 1e-9
    value_tolerance: float = 1e-12

    def __post_init__(self):
        if self.grid_points_per_dim < 8:
            raise InvalidInput("grid_points_per_dim must be >= 8")
        if self.refine_starts < 4:
            raise InvalidInput("refine_starts must be >= 4")
        if self.coord_tolerance <= 0 or self.value_tolerance <= 0:
            raise InvalidInput("tolerances must be positive")


@dataclass(frozen=True)
class ThetaMaxResult:
    value: object          # mpf, the maximum of sqrt(<s,s>)
    argmax_coords: tuple   # lattice coordinates in [0,1)^{2g}
    grid_best: float


def default_optimizer_config(g: int) -> OptimizerConfig:
    return OptimizerConfig(grid_points_per_dim=256 if g == 1 else 32)


def _sqrt_norm_mp(tau: PeriodMatrix, coords, cfg: PrecisionConfig):
    """sqrt(<s,s>) at lattice coordinates, mpmath path."""
    g = tau.g
    with mp.workprec(cfg.working_precision_bits):
        nc = [mp.mpf(c) for c in coords[:g]]
        mc = [mp.mpf(c) for c in coords[g:]]
        z = tuple(
            nc[i] + sum(tau.tau[i, j] * mc[j] for j in range(g)) for i in range(g)
        )
        return mp.sqrt(theta_norm(tau, ThetaPoint(z), cfg))


def _nelder_mead_mp(f, x0, step, coord_tol, value_tol, max_iter=400):
    """Minimize f over mpf vectors with a standard Nelder-Mead simplex."""
    dim = len(x0)
    simplex = [list(x0)]
    for i in range(dim):
        v = list(x0)
        v[i] = v[i] + step
        simplex.append(v)
    vals = [f(v) for v in simplex]
    for _ in range(max_iter):
        order = sorted(range(dim + 1), key=lambda k: vals[k])
        simplex = [simplex[k] for k in order]
        vals = [vals[k] for k in order]
        diam = max(
            max(abs(simplex[i][d] - simplex[0][d]) for d in range(dim))
            for i in range(1, dim + 1)
        )
        if diam < coord_tol and abs(vals[-1] - vals[0]) < value_tol:
            break
        centroid = [sum(simplex[i][d] for i in range(dim)) / dim for d in range(dim)]
        worst = simplex[-1]
        refl = [centroid[d] + (centroid[d] - worst[d]) for d in range(dim)]
        fr = f(refl)
        if fr < vals[0]:
            exp_ = [centroid[d] + 2 * (centroid[d] - worst[d]) for d in range(dim)]
            fe = f(exp_)
            if fe < fr:
                simplex[-1], vals[-1] = exp_, fe
            else:
                simplex[-1], vals[-1] = refl, fr
        elif fr < vals[-2]:
            simplex[-1], vals[-1] = refl, fr
        else:
            contr = [centroid[d] + (worst[d] - centroid[d]) / 2 for d in range(dim)]
            fc = f(contr)
            if fc < vals[-1]:
                simplex[-1], vals[-1] = contr, fc
            else:
                for i in range(1, dim + 1):
                    simplex[i] = [
                        simplex[0][d] + (simplex[i][d] - simplex[0][d]) / 2
                        for d in range(dim)
                    ]
                    vals[i] = f(simplex[i])
    best = min(range(dim + 1), key=lambda k: vals[k])
    return simplex[best], vals[best]


def theta_max(
    tau: PeriodMatrix,
    ocfg: OptimizerConfig | None = None,
    cfg: PrecisionConfig | None = None,
    grid_offset: float = 0.0,
) -> ThetaMaxResult:
    """Maximum of sqrt(<s,s>) over the torus, with argmax coordinates.

    Grid scan over {(k + grid_offset)/Nd}^{2g}, then simplex refinement from
    the best cells: first in double precision, then polished with mpmath at
    the working precision.  Deterministic for fixed configs (ties broken by
    lowest lexicographic coordinate).
    """
    ocfg = ocfg or default_optimizer_config(tau.g)
    cfg = cfg or PrecisionConfig()
    g = tau.g
    dim = 2 * g
    nd = ocfg.grid_points_per_dim
    if nd**dim > _GRID_BUDGET:
        raise ConfigRejected(f"grid budget exceeded: {nd}^{dim} > {_GRID_BUDGET}")

    axis = (np.arange(nd) + grid_offset) / nd
    grid_best = -np.inf
    best_starts: list[tuple[float, tuple]] = []
    chunk = 20000
    grid_iter = itertools.product(axis, repeat=dim)
    while True:
        block = np.array(list(itertools.islice(grid_iter, chunk)))
        if block.size == 0:
            break
        vals = np.sqrt(norm_batch(tau, block))
        grid_best = max(grid_best, float(vals.max()))
        k = max(1, ocfg.refine_starts)
        top = np.argsort(-vals)[: k]
        best_starts.extend((float(vals[i]), tuple(block[i])) for i in top)
    best_starts.sort(key=lambda t: (-t[0], t[1]))
    starts = [c for _, c in best_starts[: ocfg.refine_starts]]

    def neg_sqrt_norm_np(c):
        return -float(np.sqrt(norm_batch(tau, np.asarray(c)[None, :] % 1.0)[0]))

    candidates = []
    for start in starts:
        res = minimize(
            neg_sqrt_norm_np,
            np.array(start),
            method="Nelder-Mead",
            options=dict(xatol=1e-10, fatol=1e-14, maxiter=4000, maxfev=8000),
        )
        x = res.x % 1.0
        with mp.workprec(cfg.working_precision_bits):
            x_mp = [mp.mpf(float(v)) for v in x]
            xs, fv = _nelder_mead_mp(
                lambda c: -_sqrt_norm_mp(tau, c, cfg),
                x_mp,
                step=mp.mpf("1e-7"),
                coord_tol=mp.mpf(ocfg.coord_tolerance),
                value_tol=mp.mpf(ocfg.value_tolerance),
            )
            coords = tuple(v - mp.floor(v) for v in xs)
            candidates.append((-fv, coords))
    candidates.sort(key=lambda t: (-t[0], tuple(float(c) for c in t[1])))
    value, argmax = candidates[0]
    if value < grid_best:
        value = mp.mpf(grid_best)
    return ThetaMaxResult(value=value, argmax_coords=argmax, grid_best=grid_best)


def theta_max_over_embeddings(
    taus, ocfg: OptimizerConfig | None = None, cfg: PrecisionConfig | None = None
):
    """Maximum of theta_max over a nonempty list of period matrices."""
    taus = list(taus)
    if not taus:
        raise InvalidInput("list of period matrices must be nonempty")
    return max(theta_max(t, ocfg, cfg).value for t in taus)
