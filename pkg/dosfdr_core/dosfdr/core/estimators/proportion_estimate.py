from dataclasses import dataclass, field
from typing import Optional

import numpy as np


def clamp_pi0(pi0: float, n: int) -> float:
    """Clamp a true null proportion estimate to [1/n, 1].

    The lower bound keeps the adaptive BH level alpha / pi0 finite.
    """
    return float(min(1.0, max(1.0 / n, pi0)))


@dataclass
class ProportionEstimate:
    """An estimate of the true and false null proportions.

    Attributes:
        pi1: clamped false null proportion
        pi0: clamped true null proportion, pi0 + pi1 == 1
        lambda_used: the Storey threshold, if the method uses one
        method_tag: short name of the method, eg. 'ST-1/2'
        pi1_raw: the unclamped estimate, when the method has one
        k_hat: the change-point index, for change-point methods
    """
    pi1: float
    pi0: float
    lambda_used: Optional[float]
    method_tag: str
    pi1_raw: Optional[float] = None
    k_hat: Optional[int] = None

    @classmethod
    def from_pi0(cls,
                 pi0_raw: float,
                 n: int,
                 method_tag: str,
                 lambda_used: Optional[float] = None,
                 k_hat: Optional[int] = None) -> 'ProportionEstimate':
        pi0 = clamp_pi0(pi0_raw, n)
        return cls(
            pi1=1.0 - pi0,
            pi0=pi0,
            lambda_used=lambda_used,
            method_tag=method_tag,
            pi1_raw=float(1.0 - pi0_raw),
            k_hat=k_hat)


@dataclass
class DosEstimate:
    """Result of the DOS-Storey estimator.

    Attributes:
        k_hat: the 1-based change-point index
        lambda_: p_(k_hat), the separation threshold
        pi1_raw: the unclamped DOS-Storey estimate
        pi1: pi1_raw clamped to [0, 1]
        dos_sequence: d(i) for i = 1..floor(n/2)
        n: the sample size
    """
    k_hat: int
    lambda_: float
    pi1_raw: float
    pi1: float
    n: int
    dos_sequence: np.ndarray = field(repr=False)

    def to_proportion(self, method_tag: str) -> ProportionEstimate:
        pi0 = clamp_pi0(1.0 - self.pi1, self.n)
        return ProportionEstimate(
            pi1=1.0 - pi0,
            pi0=pi0,
            lambda_used=self.lambda_,
            method_tag=method_tag,
            pi1_raw=self.pi1_raw,
            k_hat=self.k_hat)
