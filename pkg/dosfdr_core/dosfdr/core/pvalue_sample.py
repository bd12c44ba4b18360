from typing import Sequence, Union

import numpy as np

from dosfdr.core.errors import (EmptyInputError, NotANumberError,
                                OutOfRangeError, TooSmallError)

# DOS needs at least two indices i with 2i <= n.
MIN_DOS_SIZE = 4


class PValueSample():
    """An ascending-sorted, validated vector of p-values.

    Use validate_sample to construct one from raw values. The permutation
    that sorted the input is kept so that procedures can report results in
    terms of the original hypothesis indices.
    """

    def __init__(self, values: np.ndarray, order: np.ndarray):
        """Constructor

        Args:
            values: sorted p-values
            order: order[j] is the original index of values[j]
        """
        self.values = values
        self.order = order
        self.values.flags.writeable = False
        self.order.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def too_small(self) -> bool:
        """True if the sample is too small for the DOS estimators."""
        return self.n < MIN_DOS_SIZE

    def check_dos_size(self):
        if self.too_small:
            raise TooSmallError(
                'DOS needs at least {} p-values, got {}'.format(
                    MIN_DOS_SIZE, self.n))

    def order_statistic(self, k: int) -> float:
        """Return p_(k), using 1-based k."""
        return float(self.values[k - 1])

    def __len__(self):
        return self.n

    def __repr__(self):
        return 'PValueSample(n={})'.format(self.n)


def validate_sample(values: Union[Sequence[float], np.ndarray]
                    ) -> PValueSample:
    """Validate raw p-values and return them as a sorted PValueSample.

    Ties are kept. Samples with fewer than 4 values are accepted and flagged
    with PValueSample.too_small; the DOS estimators reject them.

    Raises:
        EmptyInputError: if values is empty
        NotANumberError: at the first NaN
        OutOfRangeError: at the first value outside [0, 1]
    """
    arr = np.array(values, dtype=float).ravel()
    if arr.size == 0:
        raise EmptyInputError('No p-values given.')

    nan_inds = np.flatnonzero(np.isnan(arr))
    if nan_inds.size > 0:
        raise NotANumberError(int(nan_inds[0]))

    bad_inds = np.flatnonzero((arr < 0) | (arr > 1))
    if bad_inds.size > 0:
        ind = int(bad_inds[0])
        raise OutOfRangeError(ind, float(arr[ind]))

    order = np.argsort(arr, kind='stable')
    return PValueSample(arr[order], order)
