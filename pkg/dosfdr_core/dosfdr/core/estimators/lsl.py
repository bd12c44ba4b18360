import math

import numpy as np

from dosfdr.core.errors import TooSmallError
from dosfdr.core.estimators.proportion_estimate import ProportionEstimate
from dosfdr.core.pvalue_sample import PValueSample


def lsl(sample: PValueSample) -> ProportionEstimate:
    """The Lowest SLope estimator of the number of true nulls.

    The slopes S_i = (1 - p_(i)) / (n + 1 - i) are scanned for the first
    i >= 2 with S_i < S_(i-1), and n0 = min(n, floor(1 / S_i) + 1). If the
    slopes never decrease, every hypothesis is taken to be a true null.

    Raises:
        TooSmallError: if the sample has fewer than 2 values
    """
    n = sample.n
    if n < 2:
        raise TooSmallError('LSL needs at least 2 p-values, got {}'.format(n))

    i = np.arange(1, n + 1)
    slopes = (1.0 - sample.values) / (n + 1 - i)
    decreases = np.flatnonzero(slopes[1:] < slopes[:-1])
    if decreases.size == 0:
        n0 = n
    else:
        s = float(slopes[decreases[0] + 1])
        # s == 0 means p_(i) == 1, which leaves no room for false nulls.
        n0 = n if s <= 0 else min(n, math.floor(1.0 / s) + 1)

    return ProportionEstimate.from_pi0(n0 / n, n, 'LSL')
