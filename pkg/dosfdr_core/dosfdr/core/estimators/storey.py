import numpy as np

from dosfdr.core.errors import BadLambdaError
from dosfdr.core.estimators.proportion_estimate import ProportionEstimate
from dosfdr.core.pvalue_sample import PValueSample


def ecdf_at(sample: PValueSample, lambda_: float) -> float:
    """Return #{p_i <= lambda} / n."""
    k = np.searchsorted(sample.values, lambda_, side='right')
    return float(k / sample.n)


def storey_pi0_raw(sample: PValueSample, lambda_: float) -> float:
    return (1.0 - ecdf_at(sample, lambda_)) / (1.0 - lambda_)


def check_lambda(lambda_: float):
    if not (0 < lambda_ < 1):
        raise BadLambdaError(
            'lambda must be in (0, 1), got {}'.format(lambda_))


def storey_at(sample: PValueSample, lambda_: float,
              method_tag: str = 'ST') -> ProportionEstimate:
    """Storey's plug-in estimator pi0 = (1 - F_n(lambda)) / (1 - lambda).

    F_n counts p-values <= lambda, so ties at lambda count as below it.
    pi0 is clamped to [1/n, 1].

    Raises:
        BadLambdaError: if lambda is not in (0, 1)
    """
    check_lambda(lambda_)
    return ProportionEstimate.from_pi0(
        storey_pi0_raw(sample, lambda_),
        sample.n,
        method_tag,
        lambda_used=lambda_)


def storey_half(sample: PValueSample) -> ProportionEstimate:
    """ST-1/2: Storey's estimator at lambda = 1/2."""
    return storey_at(sample, 0.5, method_tag='ST-1/2')


def st_med(sample: PValueSample) -> ProportionEstimate:
    """ST-MED: Storey's estimator at lambda = p_(floor(n/2)).

    Raises:
        BadLambdaError: if that order statistic is 0 or 1
    """
    k = max(1, sample.n // 2)
    return storey_at(sample, sample.order_statistic(k), method_tag='ST-MED')


def st_alpha(sample: PValueSample, level: float) -> ProportionEstimate:
    """Storey's estimator with lambda set to the FDR level.

    A robust choice for adaptive BH under dependent test statistics.
    """
    return storey_at(sample, level, method_tag='ST-alpha')
