from dataclasses import dataclass

import numpy as np

from dosfdr.core.errors import BadLevelError, BadPi0Error
from dosfdr.core.pvalue_sample import PValueSample

# Cap on the adaptive level so that a tiny pi0 cannot ask for level >= 1.
MAX_EFFECTIVE_LEVEL = 1 - 1e-9
_PI0_TOL = 1e-12


@dataclass
class RejectionSet:
    """Hypotheses rejected by a step-up procedure.

    Attributes:
        rejected_count: number of rejections, equal to threshold_rank
        rejected_original_indices: original indices of the threshold_rank
            smallest p-values, in ascending p-value order
        threshold_rank: the step-up index k, 0 if nothing is rejected
        effective_level: the level the step-up rule was run at
        n_tests: total number of hypotheses
    """
    rejected_count: int
    rejected_original_indices: np.ndarray
    threshold_rank: int
    effective_level: float
    n_tests: int


def check_level(level: float):
    if not (0 < level < 1):
        raise BadLevelError('level must be in (0, 1), got {}'.format(level))


def _step_up(sample: PValueSample, level: float) -> RejectionSet:
    n = sample.n
    critical = level * np.arange(1, n + 1) / n
    below = np.flatnonzero(sample.values <= critical)
    k = int(below[-1]) + 1 if below.size > 0 else 0
    return RejectionSet(
        rejected_count=k,
        rejected_original_indices=sample.order[:k].copy(),
        threshold_rank=k,
        effective_level=level,
        n_tests=n)


def bh_rejections(sample: PValueSample, level: float) -> RejectionSet:
    """The Benjamini-Hochberg step-up procedure.

    Rejects the hypotheses with the k smallest p-values, where
    k = max{k : p_(k) <= level * k / n}, or none if no such k exists.

    Raises:
        BadLevelError: if level is not in (0, 1)
    """
    check_level(level)
    return _step_up(sample, level)


def adaptive_bh(sample: PValueSample, level: float,
                pi0_hat: float) -> RejectionSet:
    """BH run at the adapted level min(1 - 1e-9, level / pi0_hat).

    Raises:
        BadLevelError: if level is not in (0, 1)
        BadPi0Error: if pi0_hat is not in [1/n, 1]
    """
    check_level(level)
    n = sample.n
    if not (1.0 / n - _PI0_TOL <= pi0_hat <= 1 + _PI0_TOL):
        raise BadPi0Error('pi0_hat must be in [{}, 1], got {}'.format(
            1.0 / n, pi0_hat))
    if pi0_hat >= 1:
        return _step_up(sample, level)
    return _step_up(sample, min(MAX_EFFECTIVE_LEVEL, level / pi0_hat))
