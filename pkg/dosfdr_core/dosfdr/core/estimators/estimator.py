from abc import ABC, abstractmethod
from typing import Optional, Sequence, TYPE_CHECKING

import numpy as np

from dosfdr.core.errors import BadPi0Error, EstimationError
from dosfdr.core.estimators.dos import DosParams, dos_storey, udos
from dosfdr.core.estimators.jd import (DEFAULT_LAMBDA_GRID,
                                       DEFAULT_NUM_BOOTSTRAPS, jd_bootstrap)
from dosfdr.core.estimators.lsl import lsl
from dosfdr.core.estimators.proportion_estimate import (ProportionEstimate,
                                                        clamp_pi0)
from dosfdr.core.estimators.storey import st_alpha, st_med, storey_at
from dosfdr.core.pvalue_sample import PValueSample

if TYPE_CHECKING:
    from dosfdr.core.data.labeled_sample import TruthLabels  # noqa


def format_param(x: float) -> str:
    """Format a parameter for use in an estimator name, eg. 0.5 -> '05'."""
    return '{:g}'.format(x).replace('.', '')


class Estimator(ABC):
    """Estimates the true and false null proportions of a p-value sample.

    Attributes:
        name: short label used as a report column
    """

    def __init__(self, name: str):
        self.name = name

    @abstractmethod
    def estimate(self,
                 sample: PValueSample,
                 rng: Optional[np.random.Generator] = None,
                 truth: Optional['TruthLabels'] = None) -> ProportionEstimate:
        """Estimate the proportions.

        Args:
            sample: the p-values
            rng: random source, used by randomized estimators only
            truth: ground truth, used by the oracle only
        """
        pass

    def __repr__(self):
        return '{}(name={!r})'.format(type(self).__name__, self.name)


class DosEstimator(Estimator):
    def __init__(self, alpha: float = 1.0, c: float = 0.0,
                 name: Optional[str] = None):
        self.params = DosParams(alpha=alpha, c=c)
        super().__init__(name or 'DOS' + format_param(alpha))

    def estimate(self, sample, rng=None, truth=None):
        return dos_storey(sample, self.params).to_proportion(self.name)


class UDosEstimator(Estimator):
    def __init__(self, alpha: float = 1.0, c: float = 0.0,
                 name: Optional[str] = None):
        self.params = DosParams(alpha=alpha, c=c)
        super().__init__(name or 'uDOS' + format_param(alpha))

    def estimate(self, sample, rng=None, truth=None):
        return udos(sample, self.params, method_tag=self.name)


class StoreyEstimator(Estimator):
    def __init__(self, lambda_: float = 0.5, name: Optional[str] = None):
        self.lambda_ = lambda_
        default_name = 'ST-1/2' if lambda_ == 0.5 else 'ST-{:g}'.format(
            lambda_)
        super().__init__(name or default_name)

    def estimate(self, sample, rng=None, truth=None):
        return storey_at(sample, self.lambda_, method_tag=self.name)


class StMedEstimator(Estimator):
    def __init__(self, name: Optional[str] = None):
        super().__init__(name or 'ST-MED')

    def estimate(self, sample, rng=None, truth=None):
        est = st_med(sample)
        est.method_tag = self.name
        return est


class StAlphaEstimator(Estimator):
    def __init__(self, level: float = 0.05, name: Optional[str] = None):
        self.level = level
        super().__init__(name or 'ST-alpha')

    def estimate(self, sample, rng=None, truth=None):
        est = st_alpha(sample, self.level)
        est.method_tag = self.name
        return est


class LslEstimator(Estimator):
    def __init__(self, name: Optional[str] = None):
        super().__init__(name or 'LSL')

    def estimate(self, sample, rng=None, truth=None):
        est = lsl(sample)
        est.method_tag = self.name
        return est


class JdEstimator(Estimator):
    def __init__(self,
                 lambda_grid: Sequence[float] = DEFAULT_LAMBDA_GRID,
                 num_bootstraps: int = DEFAULT_NUM_BOOTSTRAPS,
                 name: Optional[str] = None):
        self.lambda_grid = tuple(lambda_grid)
        self.num_bootstraps = num_bootstraps
        super().__init__(name or 'JD')

    def estimate(self, sample, rng=None, truth=None):
        est = jd_bootstrap(
            sample,
            lambda_grid=self.lambda_grid,
            num_bootstraps=self.num_bootstraps,
            rng=rng)
        est.method_tag = self.name
        return est


class FixedEstimator(Estimator):
    """Returns the same pi0 for every sample."""

    def __init__(self, pi0: float, name: Optional[str] = None):
        if not (0 < pi0 <= 1):
            raise BadPi0Error('pi0 must be in (0, 1], got {}'.format(pi0))
        self.pi0 = pi0
        super().__init__(name or 'FIXED-{:g}'.format(pi0))

    def estimate(self, sample, rng=None, truth=None):
        pi0 = clamp_pi0(self.pi0, sample.n)
        return ProportionEstimate(
            pi1=1.0 - pi0, pi0=pi0, lambda_used=None, method_tag=self.name)


class OracleEstimator(Estimator):
    """Returns the true pi0 of a simulated sample."""

    def __init__(self, name: Optional[str] = None):
        super().__init__(name or 'ORACLE')

    def estimate(self, sample, rng=None, truth=None):
        if truth is None:
            raise EstimationError('The oracle estimator needs truth labels.')
        pi0 = clamp_pi0(truth.pi0, sample.n)
        return ProportionEstimate(
            pi1=1.0 - pi0, pi0=pi0, lambda_used=None, method_tag=self.name)
