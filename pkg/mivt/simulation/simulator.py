"""
Grid simulation of MIVT processes from the compound Poisson slice representation.

Every compound Poisson block of the seed contributes independent jumps (t_j, U_j, C_j)
on [0, T + bi] x [0, 1]. Component i at grid time k Delta counts C_j^(i) for each jump
whose height U_j lies below d^(i)(t_j - k Delta). Grid accumulation is jump-major:
for monotone trawls a jump is active on the interval [t_j, t_j + exit_time(U_j)]
and is added with a difference array; other trawls are evaluated on a per-jump
window bounded by their envelope.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from mivt.exceptions import SimulationResourceError
from mivt.interfaces.trawl_function import TrawlFunction
from mivt.models.count_series import CountSeries
from mivt.models.mivt_model import MivtModel
from mivt.models.sim_config import SimConfig

from .burnin import default_burnin
from .rng import stream_rng

logger = logging.getLogger(__name__)

MAX_EXPECTED_JUMPS = 2**31
_WINDOW_CHUNK = 4_000_000

Jumps = Tuple[np.ndarray, np.ndarray, np.ndarray]


def resolve_config(model: MivtModel, cfg: SimConfig) -> SimConfig:
    """Fill in the default burn-in when none is configured."""
    if cfg.burnin is not None:
        return cfg
    return cfg.with_burnin(default_burnin(model, cfg.burnin_eps))


def draw_jumps(model: MivtModel, cfg: SimConfig, span: float) -> Jumps:
    """
    Jump times, heights and marks of all compound Poisson blocks on [0, span].

    Each block draws from its own stream derived from ``cfg.seed``.

    Raises:
        SimulationResourceError: If a block expects more than 2^31 jumps
    """
    times, heights, marks = [], [], []
    for index, block in enumerate(model.seed.cp_representation().blocks):
        expected = block.rate * span
        if expected > MAX_EXPECTED_JUMPS:
            raise SimulationResourceError(
                f"block {index} expects {expected:.3g} jumps on [0, {span:g}], limit is {MAX_EXPECTED_JUMPS}"
            )
        rng = stream_rng(cfg.seed, (index,))
        count = int(rng.poisson(expected))
        times.append(np.sort(rng.uniform(0.0, span, count)))
        heights.append(rng.random(count))
        marks.append(block.sample_jumps(count, rng))
        logger.debug("block %d (%s): %d jumps", index, block.kind, count)
    return np.concatenate(times), np.concatenate(heights), np.concatenate(marks)


def accumulate_jumps(
    trawls: Sequence[TrawlFunction],
    times: np.ndarray,
    heights: np.ndarray,
    marks: np.ndarray,
    n_grid: int,
    delta: float,
    eps_cut: float,
) -> np.ndarray:
    """
    Evaluate X_{k Delta} = sum_j C_j 1{U_j <= d(t_j - k Delta)} on grid points k = 1..n_grid.

    Args:
        trawls: One trawl function per component
        times: Jump times in (0, n_grid * Delta]
        heights: Uniform heights U_j
        marks: Integer jump vectors, shape (N, n)
        n_grid: Number of grid points
        delta: Grid step
        eps_cut: Trawl level below which contributions are dropped; 0 keeps all

    Returns:
        Integer matrix of shape (n, n_grid)
    """
    out = np.zeros((len(trawls), n_grid), dtype=np.int64)
    span = n_grid * delta
    for i, trawl in enumerate(trawls):
        active = marks[:, i] > 0
        t, u, c = times[active], heights[active], marks[active, i]
        if t.size == 0:
            continue
        if trawl.is_monotone:
            out[i] = _accumulate_monotone(trawl, t, u, c, n_grid, delta, eps_cut, span)
        else:
            out[i] = _accumulate_windowed(trawl, t, u, c, n_grid, delta, eps_cut, span)
    return out


def _accumulate_monotone(trawl, t, u, c, n_grid, delta, eps_cut, span) -> np.ndarray:
    stay = trawl.exit_time(u)
    if eps_cut > 0:
        stay = np.minimum(stay, float(trawl.exit_time(eps_cut)))
    stay = np.minimum(stay, span)
    first = np.maximum(np.ceil(t / delta), 1).astype(np.int64)
    last = np.minimum(np.floor((t + stay) / delta), n_grid).astype(np.int64)
    live = last >= first
    diff = np.zeros(n_grid + 2, dtype=np.int64)
    np.add.at(diff, first[live], c[live])
    np.add.at(diff, last[live] + 1, -c[live])
    return np.cumsum(diff)[1:n_grid + 1]


def _accumulate_windowed(trawl, t, u, c, n_grid, delta, eps_cut, span) -> np.ndarray:
    window = trawl.envelope_cutoff(eps_cut) if eps_cut > 0 else span
    window = min(window, span)
    width = int(math.floor(window / delta)) + 2
    series = np.zeros(n_grid + 1, dtype=np.int64)
    first = np.maximum(np.ceil(t / delta), 1).astype(np.int64)
    step = max(1, _WINDOW_CHUNK // width)
    offsets = np.arange(width)
    for start in range(0, t.size, step):
        stop = start + step
        k = first[start:stop, None] + offsets[None, :]
        lag = t[start:stop, None] - k * delta
        valid = (k <= n_grid) & (lag >= -window)
        inside = np.zeros(k.shape, dtype=bool)
        heights = np.broadcast_to(u[start:stop, None], k.shape)
        inside[valid] = trawl.eval(np.minimum(lag[valid], 0.0)) >= heights[valid]
        weights = np.broadcast_to(c[start:stop, None], k.shape)
        np.add.at(series, k[inside], weights[inside])
    return series[1:]


def _grid_shape(cfg: SimConfig) -> Tuple[int, int, float]:
    burnin_steps = cfg.burnin_steps(cfg.burnin or 0.0)
    n_grid = burnin_steps + cfg.n_obs
    return burnin_steps, n_grid, n_grid * cfg.delta


def simulate_mivt(model: MivtModel, cfg: SimConfig, labels: Optional[List[str]] = None) -> CountSeries:
    """
    Simulate a path of ``model`` on the grid described by ``cfg``.

    The first burn-in / Delta grid points are discarded; the result holds
    K = T / Delta points and is a deterministic function of (model, cfg).

    Args:
        model: Model to simulate
        cfg: Grid, horizon, burn-in, pruning level and master seed
        labels: Optional component labels

    Returns:
        CountSeries of shape n x K

    Raises:
        SimulationResourceError: If the horizon and jump rate need too many jumps
    """
    cfg = resolve_config(model, cfg)
    burnin_steps, n_grid, span = _grid_shape(cfg)
    times, heights, marks = draw_jumps(model, cfg, span)
    counts = accumulate_jumps(model.trawls, times, heights, marks, n_grid, cfg.delta, cfg.eps_cut)
    logger.info(
        "simulated %d components x %d points (burn-in %d steps, %d jumps)",
        model.dimension, cfg.n_obs, burnin_steps, times.size,
    )
    return CountSeries(delta=cfg.delta, counts=counts[:, burnin_steps:], labels=labels or [])


def simulate_reference(model: MivtModel, cfg: SimConfig) -> CountSeries:
    """
    Brute-force simulation evaluating every jump at every grid point.

    Uses the same jumps as :func:`simulate_mivt` and no pruning; cost is
    O(jumps x grid points), so it is meant for short horizons and testing.
    """
    cfg = resolve_config(model, cfg)
    burnin_steps, n_grid, span = _grid_shape(cfg)
    times, heights, marks = draw_jumps(model, cfg, span)
    counts = np.zeros((model.dimension, n_grid), dtype=np.int64)
    for k in range(1, n_grid + 1):
        arrived = times <= k * cfg.delta
        lag = times[arrived] - k * cfg.delta
        for i, trawl in enumerate(model.trawls):
            inside = heights[arrived] <= trawl.eval(lag)
            counts[i, k - 1] = marks[arrived, i][inside].sum()
    return CountSeries(delta=cfg.delta, counts=counts[:, burnin_steps:])
