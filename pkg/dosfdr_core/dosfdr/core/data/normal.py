from typing import Union

import numpy as np
from scipy.special import ndtr, ndtri

from dosfdr.core.errors import BadQuantileInputError

ArrayLike = Union[float, np.ndarray]


def std_normal_cdf(x: ArrayLike) -> ArrayLike:
    """The standard Gaussian CDF Phi(x)."""
    return ndtr(x)


def std_normal_quantile(q: ArrayLike) -> ArrayLike:
    """The standard Gaussian quantile function Phi^-1(q).

    Raises:
        BadQuantileInputError: if any q is outside the open interval (0, 1)
    """
    arr = np.asarray(q, dtype=float)
    if np.any(np.isnan(arr)) or np.any((arr <= 0) | (arr >= 1)):
        raise BadQuantileInputError(
            'quantile input must be in (0, 1), got {}'.format(q))
    return ndtri(q)


def one_sided_pvalues(stats: np.ndarray) -> np.ndarray:
    """Return 1 - Phi(T) for upper-tailed z-tests.

    Computed as Phi(-T), which keeps precision for large T.
    """
    return ndtr(-np.asarray(stats, dtype=float))
