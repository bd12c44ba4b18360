import logging
from typing import Sequence

import numpy as np

from dosfdr.core.errors import BadBootstrapError, BadGridError
from dosfdr.core.estimators.proportion_estimate import (ProportionEstimate,
                                                        clamp_pi0)
from dosfdr.core.pvalue_sample import PValueSample

log = logging.getLogger(__name__)

DEFAULT_LAMBDA_GRID = tuple(np.round(np.arange(0.05, 0.951, 0.05), 2))
DEFAULT_NUM_BOOTSTRAPS = 100


def check_grid(lambda_grid: Sequence[float]) -> np.ndarray:
    grid = np.array(lambda_grid, dtype=float).ravel()
    if grid.size == 0:
        raise BadGridError('lambda grid is empty')
    if np.any(np.isnan(grid)) or np.any((grid <= 0) | (grid >= 1)):
        raise BadGridError(
            'lambda grid values must be in (0, 1), got {}'.format(
                grid.tolist()))
    return np.unique(grid)


def bootstrap_below_counts(sample: PValueSample, grid: np.ndarray,
                           num_bootstraps: int,
                           rng: np.random.Generator) -> np.ndarray:
    """Count resampled p-values <= each lambda over bootstrap resamples.

    Drawing n values with replacement and counting them per lambda only
    depends on how many draws land in each bin between consecutive grid
    values, so the resamples are generated as multinomial bin counts.

    Args:
        grid: ascending lambda values

    Returns:
        array of shape (num_bootstraps, len(grid))
    """
    n = sample.n
    k = np.searchsorted(sample.values, grid, side='right')
    bin_probs = np.diff(np.concatenate([[0], k, [n]])) / n
    counts = rng.multinomial(n, bin_probs, size=num_bootstraps)
    return np.cumsum(counts, axis=1)[:, :-1]


def storey_pi0_grid(below: np.ndarray, n: int,
                    grid: np.ndarray) -> np.ndarray:
    """Storey's pi0 per lambda from counts of p-values <= lambda.

    Values are clamped to [1/n, 1] exactly as storey_at clamps them. below may
    hold one row of counts per bootstrap resample.
    """
    return np.clip((1.0 - below / n) / (1.0 - grid), 1.0 / n, 1.0)


def jd_bootstrap(sample: PValueSample,
                 lambda_grid: Sequence[float] = DEFAULT_LAMBDA_GRID,
                 num_bootstraps: int = DEFAULT_NUM_BOOTSTRAPS,
                 rng: np.random.Generator = None) -> ProportionEstimate:
    """Bootstrap-averaged Storey estimator.

    For each lambda in the grid the mean squared error of Storey's clamped
    estimator over bootstrap resamples is measured against the mean clamped
    plug-in estimate across the grid. The plug-in estimates of the lambdas
    whose error is at most the median error are averaged.

    Args:
        lambda_grid: lambda values in (0, 1)
        num_bootstraps: number of resamples B, at least 1
        rng: source of the resamples

    Raises:
        BadGridError, BadBootstrapError
    """
    grid = check_grid(lambda_grid)
    if num_bootstraps < 1:
        raise BadBootstrapError(
            'number of bootstraps must be >= 1, got {}'.format(num_bootstraps))
    if rng is None:
        rng = np.random.default_rng()

    n = sample.n
    plugin = storey_pi0_grid(
        np.searchsorted(sample.values, grid, side='right'), n, grid)
    target = plugin.mean()

    below = bootstrap_below_counts(sample, grid, num_bootstraps, rng)
    boot_pi0 = storey_pi0_grid(below, n, grid)
    mse = np.mean((boot_pi0 - target)**2, axis=0)
    chosen = mse <= np.median(mse)
    log.debug('JD chose lambdas {}'.format(grid[chosen].tolist()))

    pi0 = float(np.mean(plugin[chosen]))
    return ProportionEstimate.from_pi0(clamp_pi0(pi0, n), n, 'JD')
