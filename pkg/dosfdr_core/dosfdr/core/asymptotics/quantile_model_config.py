from typing import List

from dosfdr.pipeline.config import (Config, ConfigError, register_config,
                                    Field)
from dosfdr.core.asymptotics.quantile_model import (
    QuantileModel, GaussianMixtureModel, UniformMixtureModel,
    CompositeGaussianModel, PiecewiseLinearModel)


@register_config('quantile_model')
class QuantileModelConfig(Config):
    """Configure an analytic p-value distribution."""

    def build(self) -> QuantileModel:
        raise NotImplementedError()


@register_config('gaussian_mixture_model')
class GaussianMixtureModelConfig(QuantileModelConfig):
    pi1: float = Field(..., description='Proportion of false nulls.')
    mu1: float = Field(..., description='Mean of false null statistics.')

    def build(self):
        return GaussianMixtureModel(pi1=self.pi1, mu1=self.mu1)


@register_config('uniform_mixture_model')
class UniformMixtureModelConfig(QuantileModelConfig):
    pi1: float = Field(..., description='Proportion of false nulls.')
    b: float = Field(
        ..., description='Upper end of the false null p-value support.')

    def build(self):
        return UniformMixtureModel(pi1=self.pi1, b=self.b)


@register_config('composite_gaussian_model')
class CompositeGaussianModelConfig(QuantileModelConfig):
    pi1: float = Field(..., description='Proportion of false nulls.')
    mu0: float = Field(..., description='Mean of true null statistics.')
    mu1: float = Field(..., description='Mean of false null statistics.')

    def build(self):
        return CompositeGaussianModel(pi1=self.pi1, mu1=self.mu1, mu0=self.mu0)


@register_config('piecewise_linear_model')
class PiecewiseLinearModelConfig(QuantileModelConfig):
    """A model defined by the slopes of its quantile function."""
    breaks: List[float] = Field(
        ..., description='Interior breakpoints in (0, 1), increasing.')
    slopes: List[float] = Field(
        ...,
        description=('Quantile function slopes on each segment. The last one '
                     'may be omitted and is then derived from F^-1(1) = 1.'))

    def build(self):
        return PiecewiseLinearModel(breaks=self.breaks, slopes=self.slopes)


def _floats(s: str) -> List[float]:
    try:
        return [float(v) for v in s.split(',') if v.strip()]
    except ValueError:
        raise ConfigError('Could not parse numbers from {!r}'.format(s))


def parse_model_spec(spec: str) -> QuantileModelConfig:
    """Parse a command line model description.

    Accepted forms are gaussian:PI1,MU1, uniform:PI1,B,
    composite:PI1,MU0,MU1 and piecewise:BREAKS:SLOPES where BREAKS and
    SLOPES are comma-separated lists.

    Raises:
        ConfigError: if the description is malformed
    """
    kind, _, rest = spec.partition(':')
    kind = kind.strip().lower()
    if kind == 'piecewise':
        breaks, _, slopes = rest.partition(':')
        return PiecewiseLinearModelConfig(
            breaks=_floats(breaks), slopes=_floats(slopes))

    arity = {'gaussian': 2, 'uniform': 2, 'composite': 3}
    if kind not in arity:
        raise ConfigError(
            'Unknown model kind {!r}; use one of gaussian, uniform, '
            'composite, piecewise'.format(kind))
    vals = _floats(rest)
    if len(vals) != arity[kind]:
        raise ConfigError('{} models take {} parameters, got {!r}'.format(
            kind, arity[kind], rest))
    if kind == 'gaussian':
        return GaussianMixtureModelConfig(pi1=vals[0], mu1=vals[1])
    if kind == 'uniform':
        return UniformMixtureModelConfig(pi1=vals[0], b=vals[1])
    return CompositeGaussianModelConfig(pi1=vals[0], mu0=vals[1], mu1=vals[2])
