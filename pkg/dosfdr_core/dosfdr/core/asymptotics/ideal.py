"""Large-sample limits of the DOS change-point.

As n grows, k_hat / n converges to the maximizer t_tilde of

    h(t) = (F^-1(2t) - 2 F^-1(t)) / t**alpha,    0 < t <= 1/2,

and the DOS-Storey estimate converges to the estimable proportion
(t_tilde - F^-1(t_tilde)) / (1 - F^-1(t_tilde)), which never exceeds pi1.
The limit only exists when h has a unique interior maximum; check_a2
diagnoses when it does not.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from dosfdr.core.asymptotics.golden_section import golden_section_max
from dosfdr.core.asymptotics.quantile_model import (QuantileModel,
                                                    model_quantile)
from dosfdr.core.errors import A2ViolatedError, BadGridError, BadTError
from dosfdr.core.estimators.dos import check_alpha

log = logging.getLogger(__name__)

T_MIN = 1e-4
T_MAX = 0.5
DEFAULT_GRID_SIZE = 2000
MIN_GRID_SIZE = 100
PLATEAU_TOL = 1e-9
PLATEAU_MIN_POINTS = 3
T_TOL = 1e-8

A2_OK = 'ok'
A2_INCREASING = 'increasing_throughout'
A2_PLATEAU = 'plateau_at_max'
A2_BOUNDARY = 'boundary_max'


@dataclass
class A2Report:
    """Shape of h on a grid.

    Attributes:
        status: one of ok, increasing_throughout, plateau_at_max,
            boundary_max
        argmax_index: index of the first grid maximum
    """
    status: str
    argmax_index: int
    t_grid: np.ndarray = field(repr=False)
    h_grid: np.ndarray = field(repr=False)

    @property
    def ok(self) -> bool:
        return self.status == A2_OK

    @property
    def t_at_max(self) -> float:
        return float(self.t_grid[self.argmax_index])


@dataclass
class IdealQuantities:
    """The limits of the DOS estimators for a model.

    Attributes:
        t_tilde: limit of k_hat / n
        quantile_at_t: F^-1(t_tilde), the limit of lambda
        pi1_estimable: limit of the DOS-Storey estimate
        h_at_max: h(t_tilde)
        alpha: the DOS exponent
    """
    t_tilde: float
    quantile_at_t: float
    pi1_estimable: float
    h_at_max: float
    alpha: float


def h_value(model: QuantileModel, alpha: float, t):
    """Evaluate h(t) = (F^-1(2t) - 2 F^-1(t)) / t**alpha.

    t may be a scalar or an array with values in (0, 1/2].

    Raises:
        BadTError, BadAlphaError
    """
    check_alpha(alpha)
    arr = np.asarray(t, dtype=float)
    if np.any(np.isnan(arr)) or np.any((arr <= 0) | (arr > T_MAX)):
        raise BadTError('t must be in (0, 0.5], got {}'.format(t))
    q2 = np.asarray(model_quantile(model, 2 * arr))
    q1 = np.asarray(model_quantile(model, arr))
    h = (q2 - 2 * q1) / arr**alpha
    return float(h) if np.ndim(t) == 0 else h


def _plateau_length(h: np.ndarray, ind: int) -> int:
    near = np.abs(h - h[ind]) <= PLATEAU_TOL
    lo = ind
    while lo > 0 and near[lo - 1]:
        lo -= 1
    hi = ind
    while hi < len(h) - 1 and near[hi + 1]:
        hi += 1
    return hi - lo + 1


def check_a2(model: QuantileModel,
             alpha: float,
             grid_size: int = DEFAULT_GRID_SIZE) -> A2Report:
    """Classify the shape of h on an even grid over [1e-4, 1/2].

    The statuses are checked in order: plateau_at_max when at least 3
    adjacent grid points are within 1e-9 of the maximum,
    increasing_throughout when h never decreases and peaks at 1/2,
    boundary_max when the maximum is at either end, and ok otherwise.

    Raises:
        BadGridError: if grid_size < 100
    """
    if grid_size < MIN_GRID_SIZE:
        raise BadGridError('grid_size must be >= {}, got {}'.format(
            MIN_GRID_SIZE, grid_size))
    t_grid = np.linspace(T_MIN, T_MAX, grid_size)
    h_grid = h_value(model, alpha, t_grid)
    ind = int(np.argmax(h_grid))

    if _plateau_length(h_grid, ind) >= PLATEAU_MIN_POINTS:
        status = A2_PLATEAU
    elif ind == grid_size - 1 and np.all(np.diff(h_grid) >= -PLATEAU_TOL):
        status = A2_INCREASING
    elif ind == 0 or ind == grid_size - 1:
        status = A2_BOUNDARY
    else:
        status = A2_OK
    log.debug('h for {} at alpha={} is {}'.format(model, alpha, status))
    return A2Report(
        status=status, argmax_index=ind, t_grid=t_grid, h_grid=h_grid)


def ideal_changepoint(model: QuantileModel,
                      alpha: float,
                      check: bool = True,
                      grid_size: int = DEFAULT_GRID_SIZE) -> IdealQuantities:
    """Compute t_tilde and the estimable proportion of a model.

    The maximum of h found on the grid is refined by golden-section search
    between the neighbouring grid points.

    Args:
        check: if True, raise A2ViolatedError unless check_a2 reports ok.
            If False, the grid maximum is refined whatever the shape of h.

    Raises:
        A2ViolatedError
    """
    report = check_a2(model, alpha, grid_size)
    if check and not report.ok:
        raise A2ViolatedError(report)

    t_grid, ind = report.t_grid, report.argmax_index
    a = t_grid[max(ind - 1, 0)]
    b = t_grid[min(ind + 1, len(t_grid) - 1)]
    t_tilde, h_max = golden_section_max(
        lambda t: h_value(model, alpha, t), a, b, xtol=T_TOL)
    if h_max < report.h_grid[ind]:
        t_tilde, h_max = report.t_at_max, float(report.h_grid[ind])

    q = model_quantile(model, t_tilde)
    return IdealQuantities(
        t_tilde=t_tilde,
        quantile_at_t=q,
        pi1_estimable=(t_tilde - q) / (1 - q),
        h_at_max=h_max,
        alpha=alpha)
