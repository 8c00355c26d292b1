"""Nelder-Mead minimization and the end-to-end QAOA solve loop.

The simplex method is self-contained (reflection / expansion /
contraction / shrink with standard coefficients) and supports random
restarts drawn from the parameter box.  Restarts share a global
evaluation budget; the best restart wins, ties broken by lowest restart
index.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .circuit import bind, build_ansatz
from .engine import (
    DEFAULT_SHOTS,
    Distribution,
    NoiseModel,
    expectation,
    qaoa_state,
    sample,
    simulate_noisy,
)
from .hamiltonian import DiagonalHamiltonian, Spectrum, full_spectrum
from .qubo import IsingModel

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class OptimizerConfig:
    method: str = "nelder-mead"
    max_evals: int = 4000
    xtol: float = 1e-6
    ftol: float = 1e-9
    restarts: int = 3
    seed: int = 0
    bounds: tuple[float, float] = (0.0, TWO_PI)

    def __post_init__(self):
        if self.method != "nelder-mead":
            raise ValueError(f"unsupported method {self.method!r}")
        if self.max_evals < 1:
            raise ValueError("max_evals must be >= 1")
        if self.xtol <= 0 or self.ftol <= 0:
            raise ValueError("tolerances must be > 0")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


@dataclass
class OptimizationResult:
    best_params: np.ndarray
    best_value: float
    trace: list[tuple[int, float]]
    evals_used: int
    converged: bool


class _BudgetExhausted(Exception):
    pass


def _nelder_mead(f, x0, budget, xtol, ftol):
    """One simplex run; returns (best_x, best_f, evals, converged, history)."""
    alpha, gamma, rho, sigma = 1.0, 2.0, 0.5, 0.5
    d = len(x0)
    history = []
    evals = 0
    best_x, best_f = None, np.inf

    def call(x):
        nonlocal evals, best_x, best_f
        if evals >= budget:
            raise _BudgetExhausted
        evals += 1
        v = float(f(x))
        history.append(v)
        if v < best_f:
            best_x, best_f = np.array(x), v
        return v

    step = np.where(np.abs(x0) > 1e-12, 0.1 * np.abs(x0) + 0.25, 0.25)
    simplex = [np.asarray(x0, dtype=float)]
    for i in range(d):
        x = simplex[0].copy()
        x[i] += step[i]
        simplex.append(x)
    converged = False

    try:
        values = [call(x) for x in simplex]
        while True:
            order = np.argsort(values)
            simplex = [simplex[i] for i in order]
            values = [values[i] for i in order]
            spread = max(np.max(np.abs(x - simplex[0])) for x in simplex[1:])
            if spread < xtol and values[-1] - values[0] < ftol:
                converged = True
                break
            centroid = np.mean(simplex[:-1], axis=0)
            reflected = centroid + alpha * (centroid - simplex[-1])
            fr = call(reflected)
            if values[0] <= fr < values[-2]:
                simplex[-1], values[-1] = reflected, fr
            elif fr < values[0]:
                expanded = centroid + gamma * (reflected - centroid)
                fe = call(expanded)
                if fe < fr:
                    simplex[-1], values[-1] = expanded, fe
                else:
                    simplex[-1], values[-1] = reflected, fr
            else:
                contracted = centroid + rho * (simplex[-1] - centroid)
                fc = call(contracted)
                if fc < values[-1]:
                    simplex[-1], values[-1] = contracted, fc
                else:
                    for i in range(1, d + 1):
                        simplex[i] = simplex[0] + sigma * (simplex[i] - simplex[0])
                        values[i] = call(simplex[i])
    except _BudgetExhausted:
        pass

    return best_x, best_f, evals, converged, history


def minimize(f, x0, cfg: OptimizerConfig) -> OptimizationResult:
    """Minimize f over real vectors, with random restarts from the box.

    Restart 0 starts at x0; further restarts draw uniform points from
    cfg.bounds using cfg.seed, so results are deterministic.
    """
    x0 = np.asarray(x0, dtype=float)
    d = len(x0)
    if d < 1:
        raise ValueError("need at least one parameter")
    lo, hi = cfg.bounds
    starts = [x0]
    for r in range(1, cfg.restarts):
        rng = np.random.default_rng((cfg.seed, r))
        starts.append(lo + (hi - lo) * rng.random(d))

    per_restart = max(d + 2, cfg.max_evals // cfg.restarts)
    trace: list[tuple[int, float]] = []
    best_x, best_f, best_converged = None, np.inf, False
    total = 0
    for start in starts:
        if total >= cfg.max_evals:
            break
        budget = min(per_restart, cfg.max_evals - total)
        x, fx, used, conv, history = _nelder_mead(f, start, budget, cfg.xtol, cfg.ftol)
        trace.extend((total + i + 1, v) for i, v in enumerate(history))
        total += used
        if fx < best_f:
            best_x, best_f, best_converged = x, fx, conv
    return OptimizationResult(
        best_params=np.asarray(best_x),
        best_value=best_f,
        trace=trace,
        evals_used=total,
        converged=best_converged,
    )


@dataclass
class SolveReport:
    optimization: OptimizationResult
    final_distribution: Distribution
    ground_state_mass: float
    expectation_final: float
    ground_energy: float
    ground_states: frozenset[str]
    p: int
    mixer: str
    shots: int
    seed: int
    noise: NoiseModel | None = None
    manifest: dict = field(default_factory=dict)

    def to_json(self, indent: int | None = 2) -> str:
        obj = {
            "p": self.p,
            "mixer": self.mixer,
            "shots": self.shots,
            "seed": self.seed,
            "noise": None
            if self.noise is None
            else {
                "p1": self.noise.p1,
                "p2": self.noise.p2,
                "readout_flip": self.noise.readout_flip,
            },
            "best_params": [float(v) for v in self.optimization.best_params],
            "best_value": self.optimization.best_value,
            "evals_used": self.optimization.evals_used,
            "converged": self.optimization.converged,
            "expectation_final": self.expectation_final,
            "ground_energy": self.ground_energy,
            "ground_states": sorted(self.ground_states),
            "ground_state_mass": self.ground_state_mass,
            "counts": dict(sorted(self.final_distribution.counts.items())),
            "manifest": self.manifest,
        }
        return json.dumps(obj, indent=indent, sort_keys=False)


def _uniform_report(
    h: DiagonalHamiltonian, spec: Spectrum, mixer, shots, seed, nm, manifest
) -> SolveReport:
    # p = 0: the ansatz is a Hadamard row; nothing to optimize.
    state = qaoa_state(h, [], [], mixer)
    dist = sample(state, shots, seed)
    return SolveReport(
        optimization=OptimizationResult(np.zeros(0), spec.mean_energy(), [], 0, True),
        final_distribution=dist,
        ground_state_mass=dist.mass(spec.ground_states),
        expectation_final=spec.mean_energy(),
        ground_energy=spec.ground_energy,
        ground_states=spec.ground_states,
        p=0,
        mixer=mixer,
        shots=shots,
        seed=seed,
        noise=nm,
        manifest=manifest or {},
    )


def qaoa_solve(
    m: IsingModel,
    p: int,
    mixer: str = "RX",
    nm: NoiseModel | None = None,
    cfg: OptimizerConfig | None = None,
    shots: int = DEFAULT_SHOTS,
    sampled_objective: bool = False,
    manifest: dict | None = None,
) -> SolveReport:
    """Optimize a QAOA ansatz for the model and report the final sampling.

    Objective: exact expectation of the ansatz state when noiseless
    (unless sampled_objective is set), or the sampled mean energy of
    trajectory runs when a noise model is given.  Initial parameters are
    drawn uniformly from [0, 2pi) using cfg.seed.
    """
    cfg = cfg or OptimizerConfig()
    mixer = mixer.upper()
    h = DiagonalHamiltonian.from_ising(m)
    spec = full_spectrum(h)
    noisy = nm is not None and not nm.is_trivial
    if manifest is None:
        manifest = {}

    if p == 0:
        return _uniform_report(h, spec, mixer, shots, cfg.seed, nm, manifest)

    circuit = build_ansatz(m, p, mixer)
    eval_counter = [0]

    def objective(params):
        gammas, betas = params[:p], params[p:]
        if noisy or sampled_objective:
            eval_counter[0] += 1
            bound = bind(circuit, gammas, betas)
            if noisy:
                dist = simulate_noisy(bound, nm, shots, (cfg.seed, eval_counter[0]))
            else:
                dist = sample(
                    qaoa_state(h, gammas, betas, mixer),
                    shots,
                    (cfg.seed, eval_counter[0]),
                )
            return dist.mean_energy(h)
        return expectation(qaoa_state(h, gammas, betas, mixer), h)

    x0 = TWO_PI * np.random.default_rng((cfg.seed, 0)).random(2 * p)
    result = minimize(objective, x0, cfg)

    gammas, betas = result.best_params[:p], result.best_params[p:]
    if noisy:
        bound = bind(circuit, gammas, betas)
        dist = simulate_noisy(bound, nm, shots, cfg.seed)
        exp_final = dist.mean_energy(h)
    else:
        state = qaoa_state(h, gammas, betas, mixer)
        dist = sample(state, shots, cfg.seed)
        exp_final = expectation(state, h)

    return SolveReport(
        optimization=result,
        final_distribution=dist,
        ground_state_mass=dist.mass(spec.ground_states),
        expectation_final=exp_final,
        ground_energy=spec.ground_energy,
        ground_states=spec.ground_states,
        p=p,
        mixer=mixer,
        shots=shots,
        seed=cfg.seed,
        noise=nm,
        manifest=manifest,
    )
