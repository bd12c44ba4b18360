"""Seeded data-generating models for simulated multiple testing."""
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from dosfdr.core.data.labeled_sample import LabeledSample, TruthLabels
from dosfdr.core.data.normal import one_sided_pvalues
from dosfdr.core.errors import BadScenarioError
from dosfdr.core.pvalue_sample import validate_sample

# Absorbs representation error in n * pi1, eg. 100 * 0.29.
_N1_EPS = 1e-9


def num_false_nulls(n: int, pi1: float) -> int:
    return int(math.floor(n * pi1 + _N1_EPS))


class Scenario(ABC):
    """A model generating labeled p-value samples.

    The number of false nulls floor(n * pi1) is the same in every replicate.
    """
    n: int
    pi1: float

    @property
    def n1(self) -> int:
        return num_false_nulls(self.n, self.pi1)

    @abstractmethod
    def generate(self, rng: np.random.Generator, seed: int = 0,
                 replicate: int = 0) -> LabeledSample:
        pass

    @abstractmethod
    def describe(self) -> str:
        """Return a one-line description used in report headers."""
        pass

    def _check_n(self):
        if self.n < 1:
            raise BadScenarioError('n must be >= 1, got {}'.format(self.n))


def _shuffled(p: np.ndarray, is_false_null: np.ndarray,
              rng: np.random.Generator, seed: int,
              replicate: int) -> LabeledSample:
    perm = rng.permutation(len(p))
    return LabeledSample(
        sample=validate_sample(p[perm]),
        truth=TruthLabels(is_false_null[perm]),
        seed=seed,
        replicate=replicate)


@dataclass(frozen=True)
class GaussianScenario(Scenario):
    """One-sided z-tests with equicorrelated Gaussian test statistics.

    T_i = mu + sqrt(rho) U + sqrt(1 - rho) Z_i with a single shared U per
    replicate, so corr(T_i, T_j) = rho. mu is mu1 for false nulls and mu0
    for true nulls; mu0 < 0 gives superuniform true null p-values.
    """
    n: int
    pi1: float
    mu1: float
    mu0: float = 0.0
    rho: float = 0.0

    def __post_init__(self):
        self._check_n()
        if not (0 <= self.pi1 <= 0.5):
            raise BadScenarioError('pi1 must be in [0, 0.5], got {}'.format(
                self.pi1))
        if self.mu1 <= 0:
            raise BadScenarioError('mu1 must be > 0, got {}'.format(
                self.mu1))
        if self.mu0 > 0:
            raise BadScenarioError('mu0 must be <= 0, got {}'.format(
                self.mu0))
        if not (0 <= self.rho < 1):
            raise BadScenarioError('rho must be in [0, 1), got {}'.format(
                self.rho))

    def generate(self, rng, seed=0, replicate=0):
        return gen_gaussian(self, rng, seed=seed, replicate=replicate)

    def describe(self):
        return 'gaussian(n={}, pi1={}, mu1={}, mu0={}, rho={})'.format(
            self.n, self.pi1, self.mu1, self.mu0, self.rho)


@dataclass(frozen=True)
class UniformMixtureScenario(Scenario):
    """The mixture pi1 U[0, b] + pi0 U[0, 1]."""
    n: int
    pi1: float
    b: float

    def __post_init__(self):
        self._check_n()
        if not (0 <= self.pi1 < 1):
            raise BadScenarioError('pi1 must be in [0, 1), got {}'.format(
                self.pi1))
        if not (0 < self.b < 1):
            raise BadScenarioError('b must be in (0, 1), got {}'.format(
                self.b))

    def generate(self, rng, seed=0, replicate=0):
        return gen_uniform_mixture(self, rng, seed=seed, replicate=replicate)

    def describe(self):
        return 'uniform_mixture(n={}, pi1={}, b={})'.format(
            self.n, self.pi1, self.b)


def composite_scenario(n: int, pi1: float, r: float,
                       rho: float = 0.0) -> GaussianScenario:
    """The superuniform composite-null model with mu0 = -0.2r and
    mu1 = 1 + 0.25r."""
    if r < 0:
        raise BadScenarioError('r must be >= 0, got {}'.format(r))
    return GaussianScenario(
        n=n, pi1=pi1, mu1=1 + 0.25 * r, mu0=-0.2 * r, rho=rho)


def gen_gaussian(scenario: GaussianScenario,
                 rng: np.random.Generator,
                 seed: int = 0,
                 replicate: int = 0) -> LabeledSample:
    """Draw one replicate of a GaussianScenario.

    The first n1 hypotheses are false nulls before the order is shuffled.
    """
    n, n1 = scenario.n, scenario.n1
    shared = rng.standard_normal()
    z = rng.standard_normal(n)
    is_false_null = np.zeros(n, dtype=bool)
    is_false_null[:n1] = True
    mu = np.where(is_false_null, scenario.mu1, scenario.mu0)
    stats = (mu + math.sqrt(scenario.rho) * shared +
             math.sqrt(1 - scenario.rho) * z)
    return _shuffled(
        one_sided_pvalues(stats), is_false_null, rng, seed, replicate)


def gen_uniform_mixture(scenario: UniformMixtureScenario,
                        rng: np.random.Generator,
                        seed: int = 0,
                        replicate: int = 0) -> LabeledSample:
    """Draw n1 p-values from U[0, b] and the rest from U[0, 1]."""
    n, n1 = scenario.n, scenario.n1
    p = np.concatenate(
        [scenario.b * rng.random(n1),
         rng.random(n - n1)])
    is_false_null = np.zeros(n, dtype=bool)
    is_false_null[:n1] = True
    return _shuffled(p, is_false_null, rng, seed, replicate)
