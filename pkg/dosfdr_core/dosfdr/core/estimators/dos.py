"""The Difference-of-Slopes (DOS) change-point estimators.

The DOS sequence compares the slope of the p-value plot over the index block
[i, 2i] with the slope over [0, i]:

    d(i) = (p_(2i) - 2 p_(i)) / i**alpha,    i = 1..floor(n/2)

Its argmax k_hat locates the change-point between the steep initial part of
the plot (mostly false nulls) and the linear part (true nulls). p_(k_hat) is
then used as the threshold of Storey's estimator (DOS-Storey), or k_hat / n
is used directly (uDOS) when true null p-values are superuniform.
"""
import math
from typing import Tuple

import numpy as np

from dosfdr.core.errors import (BadAlphaError, BadCValueError,
                                DegenerateLambdaError, EmptySearchRangeError)
from dosfdr.core.estimators.proportion_estimate import (DosEstimate,
                                                        ProportionEstimate)
from dosfdr.core.pvalue_sample import PValueSample

# Absorbs representation error in n * c, eg. 1000 * 0.011.
_SEARCH_START_EPS = 1e-9


class DosParams():
    """Tuning of the DOS change-point search.

    Args:
        alpha: exponent of the index normalization, in [1/2, 1]
        c: fraction of leading DOS indices excluded from the search, in
            [0, 1/2)
    """

    def __init__(self, alpha: float = 1.0, c: float = 0.0):
        check_alpha(alpha)
        if not (0 <= c < 0.5):
            raise BadCValueError('c must be in [0, 0.5), got {}'.format(c))
        self.alpha = alpha
        self.c = c

    def __repr__(self):
        return 'DosParams(alpha={}, c={})'.format(self.alpha, self.c)


def check_alpha(alpha: float):
    if not (0.5 <= alpha <= 1):
        raise BadAlphaError('alpha must be in [0.5, 1], got {}'.format(alpha))


def search_range(n: int, c: float) -> Tuple[int, int]:
    """Return the inclusive 1-based index range searched for the argmax."""
    lo = max(1, math.ceil(n * c - _SEARCH_START_EPS))
    return lo, n // 2


def dos_sequence(sample: PValueSample, alpha: float) -> np.ndarray:
    """Compute d(i) = (p_(2i) - 2 p_(i)) / i**alpha for i = 1..floor(n/2).

    Raises:
        TooSmallError: if the sample has fewer than 4 values
        BadAlphaError: if alpha is outside [1/2, 1]
    """
    sample.check_dos_size()
    check_alpha(alpha)
    p = sample.values
    m = sample.n // 2
    i = np.arange(1, m + 1)
    return (p[2 * i - 1] - 2 * p[i - 1]) / i.astype(float)**alpha


def _argmax_in_range(seq: np.ndarray, n: int, c: float) -> int:
    lo, hi = search_range(n, c)
    if lo > hi:
        raise EmptySearchRangeError(
            'c={} excludes every DOS index for n={}'.format(c, n))
    # np.argmax returns the first maximum, ie. ties go to the smallest index.
    return lo + int(np.argmax(seq[lo - 1:hi]))


def dos_changepoint(sample: PValueSample,
                    params: DosParams) -> Tuple[int, float]:
    """Return the DOS change-point k_hat and lambda = p_(k_hat).

    k_hat maximizes d(i) over ceil(max(1, n c)) <= i <= floor(n/2), with ties
    broken by the smallest index.

    Raises:
        TooSmallError, BadAlphaError, EmptySearchRangeError
    """
    seq = dos_sequence(sample, params.alpha)
    k_hat = _argmax_in_range(seq, sample.n, params.c)
    return k_hat, sample.order_statistic(k_hat)


def dos_storey(sample: PValueSample, params: DosParams) -> DosEstimate:
    """The DOS-Storey estimator: Storey's estimator at lambda = p_(k_hat).

    pi1_raw = (k_hat / n - p_(k_hat)) / (1 - p_(k_hat)), and pi1 is pi1_raw
    clamped to [0, 1].

    Raises:
        DegenerateLambdaError: if p_(k_hat) == 1
    """
    seq = dos_sequence(sample, params.alpha)
    k_hat = _argmax_in_range(seq, sample.n, params.c)
    lambda_ = sample.order_statistic(k_hat)
    if lambda_ >= 1:
        raise DegenerateLambdaError(
            'p_(k_hat) = 1 at k_hat={}; Storey threshold is degenerate'.format(
                k_hat))
    n = sample.n
    pi1_raw = (k_hat / n - lambda_) / (1 - lambda_)
    return DosEstimate(
        k_hat=k_hat,
        lambda_=lambda_,
        pi1_raw=pi1_raw,
        pi1=min(1.0, max(0.0, pi1_raw)),
        n=n,
        dos_sequence=seq)


def udos(sample: PValueSample,
         params: DosParams,
         method_tag: str = 'uDOS') -> ProportionEstimate:
    """The uncorrected DOS estimator pi1 = k_hat / n.

    Suited to superuniform true null p-values, where Storey's correction
    for uniform nulls does not apply.
    """
    k_hat, lambda_ = dos_changepoint(sample, params)
    pi1 = k_hat / sample.n
    return ProportionEstimate(
        pi1=pi1,
        pi0=1.0 - pi1,
        lambda_used=lambda_,
        method_tag=method_tag,
        pi1_raw=pi1,
        k_hat=k_hat)
