"""Analytic p-value distributions F with CDF and quantile evaluation."""
from abc import ABC, abstractmethod
from typing import Optional, Sequence, Union

import numpy as np
from scipy.special import ndtr, ndtri

from dosfdr.core.errors import BadScenarioError, BadTError, BadXError

ArrayLike = Union[float, np.ndarray]

# Bracket for the Gaussian statistic scale; Phi(-40) underflows to 0.
_Z_BRACKET = 40.0
_BISECTION_STEPS = 100


class QuantileModel(ABC):
    """A continuous CDF F on [0, 1] with F(0) = 0 and F(1) = 1.

    Attributes:
        kind: name of the model family
        pi1: false null proportion, or None if the model has no such notion
    """
    kind: str = ''
    pi1: Optional[float] = None

    @abstractmethod
    def cdf(self, x: np.ndarray) -> np.ndarray:
        """Evaluate F on an array of points in [0, 1]."""
        pass

    @abstractmethod
    def quantile(self, t: np.ndarray) -> np.ndarray:
        """Evaluate F^-1 on an array of points in [0, 1]."""
        pass


class _GaussianKind(QuantileModel):
    """Mixture of one-sided z-test p-value distributions.

    A p-value of a statistic with mean mu has CDF Phi(Phi^-1(x) + mu), so
    F(x) = pi1 Phi(Phi^-1(x) + mu1) + pi0 Phi(Phi^-1(x) + mu0). F is
    inverted by bisection on the statistic scale z = Phi^-1(x), where F is
    a smooth increasing function of z.
    """

    def __init__(self, pi1: float, mu1: float, mu0: float = 0.0):
        if not (0 <= pi1 <= 1):
            raise BadScenarioError('pi1 must be in [0, 1], got {}'.format(pi1))
        self.pi1 = pi1
        self.mu1 = mu1
        self.mu0 = mu0

    def _cdf_z(self, z):
        return (self.pi1 * ndtr(z + self.mu1) +
                (1 - self.pi1) * ndtr(z + self.mu0))

    def cdf(self, x):
        return self._cdf_z(ndtri(x))

    def quantile(self, t):
        t = np.asarray(t, dtype=float)
        lo = np.full(t.shape, -_Z_BRACKET)
        hi = np.full(t.shape, _Z_BRACKET)
        for _ in range(_BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            below = self._cdf_z(mid) < t
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        x = ndtr(0.5 * (lo + hi))
        return np.where(t <= 0, 0.0, np.where(t >= 1, 1.0, x))


class GaussianMixtureModel(_GaussianKind):
    """p-values of N(mu1, 1) statistics mixed with uniform p-values."""
    kind = 'gaussian_mixture'

    def __init__(self, pi1: float, mu1: float):
        super().__init__(pi1, mu1, 0.0)

    def __repr__(self):
        return 'GaussianMixtureModel(pi1={}, mu1={})'.format(
            self.pi1, self.mu1)


class CompositeGaussianModel(_GaussianKind):
    """p-values of N(mu1, 1) false nulls and N(mu0, 1) true nulls.

    mu0 < 0 makes the true null p-values superuniform.
    """
    kind = 'composite_gaussian'

    def __repr__(self):
        return 'CompositeGaussianModel(pi1={}, mu0={}, mu1={})'.format(
            self.pi1, self.mu0, self.mu1)


class UniformMixtureModel(QuantileModel):
    """F(x) = pi1 min(x / b, 1) + pi0 x."""
    kind = 'uniform_mixture'

    def __init__(self, pi1: float, b: float):
        if not (0 <= pi1 < 1):
            raise BadScenarioError('pi1 must be in [0, 1), got {}'.format(pi1))
        if not (0 < b < 1):
            raise BadScenarioError('b must be in (0, 1), got {}'.format(b))
        self.pi1 = pi1
        self.b = b

    @property
    def knot(self) -> float:
        """F(b) = pi1 + pi0 b, the location of the kink of F^-1."""
        return self.pi1 + (1 - self.pi1) * self.b

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return self.pi1 * np.minimum(x / self.b, 1.0) + (1 - self.pi1) * x

    def quantile(self, t):
        t = np.asarray(t, dtype=float)
        pi0 = 1 - self.pi1
        steep = t / (self.pi1 / self.b + pi0)
        flat = self.b + (t - self.knot) / pi0
        return np.where(t <= self.knot, steep, flat)

    def __repr__(self):
        return 'UniformMixtureModel(pi1={}, b={})'.format(self.pi1, self.b)


class PiecewiseLinearModel(QuantileModel):
    """A distribution whose quantile function is piecewise linear.

    F^-1 has the given slopes between consecutive points of
    [0, *breaks, 1]. If one slope fewer than segments is given, the last
    slope is chosen so that F^-1(1) = 1.
    """
    kind = 'piecewise_linear'

    def __init__(self, breaks: Sequence[float], slopes: Sequence[float]):
        breaks = [float(b) for b in breaks]
        slopes = [float(s) for s in slopes]
        knots_t = np.array([0.0] + breaks + [1.0])
        widths = np.diff(knots_t)
        if np.any(widths <= 0):
            raise BadScenarioError(
                'breaks must be increasing and inside (0, 1), got {}'.format(
                    breaks))

        num_segments = len(widths)
        if len(slopes) == num_segments - 1:
            rest = 1.0 - float(np.dot(widths[:-1], slopes))
            slopes = slopes + [rest / widths[-1]]
        if len(slopes) != num_segments:
            raise BadScenarioError(
                '{} breaks need {} or {} slopes, got {}'.format(
                    len(breaks), num_segments - 1, num_segments, len(slopes)))
        if any(s <= 0 for s in slopes):
            raise BadScenarioError(
                'slopes must be positive, got {}'.format(slopes))

        knots_x = np.concatenate([[0.0], np.cumsum(widths * slopes)])
        if not np.isclose(knots_x[-1], 1.0):
            raise BadScenarioError(
                'slopes must give F^-1(1) = 1, got {}'.format(knots_x[-1]))
        knots_x[-1] = 1.0

        self.breaks = breaks
        self.slopes = slopes
        self.knots_t = knots_t
        self.knots_x = knots_x

    def cdf(self, x):
        return np.interp(x, self.knots_x, self.knots_t)

    def quantile(self, t):
        return np.interp(t, self.knots_t, self.knots_x)

    def __repr__(self):
        return 'PiecewiseLinearModel(breaks={}, slopes={})'.format(
            self.breaks, self.slopes)


def _check_unit(v: ArrayLike, err_cls, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if np.any(np.isnan(arr)) or np.any((arr < 0) | (arr > 1)):
        raise err_cls('{} must be in [0, 1], got {}'.format(name, v))
    return arr


def _unwrap(arr: np.ndarray, like: ArrayLike) -> ArrayLike:
    return float(arr) if np.ndim(like) == 0 else arr


def model_cdf(model: QuantileModel, x: ArrayLike) -> ArrayLike:
    """Evaluate the model CDF F(x).

    Raises:
        BadXError: if any x is outside [0, 1]
    """
    arr = _check_unit(x, BadXError, 'x')
    return _unwrap(np.clip(model.cdf(arr), 0.0, 1.0), x)


def model_quantile(model: QuantileModel, t: ArrayLike) -> ArrayLike:
    """Evaluate the model quantile function F^-1(t).

    Raises:
        BadTError: if any t is outside [0, 1]
    """
    arr = _check_unit(t, BadTError, 't')
    return _unwrap(np.clip(model.quantile(arr), 0.0, 1.0), t)
