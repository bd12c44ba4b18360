from typing import List, Optional

from dosfdr.pipeline.config import (Config, ConfigError, register_config,
                                    Field)
from dosfdr.core.estimators.estimator import (
    Estimator, DosEstimator, UDosEstimator, StoreyEstimator, StMedEstimator,
    StAlphaEstimator, LslEstimator, JdEstimator, FixedEstimator,
    OracleEstimator)
from dosfdr.core.estimators.jd import (DEFAULT_LAMBDA_GRID,
                                       DEFAULT_NUM_BOOTSTRAPS)


@register_config('estimator')
class EstimatorConfig(Config):
    """Configure a proportion estimator."""
    name: Optional[str] = Field(
        None,
        description=('Column label used in reports. If None, a label is '
                     'derived from the estimator and its parameters.'))

    def build(self) -> Estimator:
        raise NotImplementedError()

    def get_name(self) -> str:
        return self.build().name


@register_config('dos')
class DosEstimatorConfig(EstimatorConfig):
    """Configure the DOS-Storey estimator."""
    alpha: float = Field(
        1.0, description='Exponent of the DOS index normalization.')
    c: float = Field(
        0.0,
        description='Fraction of leading DOS indices excluded from the search.'
    )

    def validate_config(self):
        if not (0.5 <= self.alpha <= 1):
            raise ConfigError('alpha must be in [0.5, 1], got {}'.format(
                self.alpha))
        if not (0 <= self.c < 0.5):
            raise ConfigError('c must be in [0, 0.5), got {}'.format(self.c))

    def build(self):
        return DosEstimator(alpha=self.alpha, c=self.c, name=self.name)


@register_config('udos')
class UDosEstimatorConfig(DosEstimatorConfig):
    """Configure the uncorrected DOS estimator k_hat / n."""

    def build(self):
        return UDosEstimator(alpha=self.alpha, c=self.c, name=self.name)


@register_config('storey')
class StoreyEstimatorConfig(EstimatorConfig):
    """Configure Storey's estimator at a fixed lambda."""
    lambda_: float = Field(0.5, alias='lambda', description='The threshold.')

    class Config:
        allow_population_by_field_name = True

    def validate_config(self):
        if not (0 < self.lambda_ < 1):
            raise ConfigError('lambda must be in (0, 1), got {}'.format(
                self.lambda_))

    def build(self):
        return StoreyEstimator(lambda_=self.lambda_, name=self.name)


@register_config('st_med')
class StMedEstimatorConfig(EstimatorConfig):
    """Configure Storey's estimator at lambda = p_(floor(n/2))."""

    def build(self):
        return StMedEstimator(name=self.name)


@register_config('st_alpha')
class StAlphaEstimatorConfig(EstimatorConfig):
    """Configure Storey's estimator at lambda = the FDR level."""
    level: float = Field(0.05, description='The FDR level used as lambda.')

    def build(self):
        return StAlphaEstimator(level=self.level, name=self.name)


@register_config('lsl')
class LslEstimatorConfig(EstimatorConfig):
    """Configure the lowest slope estimator."""

    def build(self):
        return LslEstimator(name=self.name)


@register_config('jd')
class JdEstimatorConfig(EstimatorConfig):
    """Configure the bootstrap-averaged Storey estimator."""
    lambda_grid: List[float] = Field(
        list(DEFAULT_LAMBDA_GRID), description='Candidate lambda values.')
    num_bootstraps: int = Field(
        DEFAULT_NUM_BOOTSTRAPS, description='Number of bootstrap resamples.')

    def validate_config(self):
        if len(self.lambda_grid) == 0:
            raise ConfigError('lambda_grid must not be empty.')
        if self.num_bootstraps < 1:
            raise ConfigError('num_bootstraps must be >= 1.')

    def build(self):
        return JdEstimator(
            lambda_grid=self.lambda_grid,
            num_bootstraps=self.num_bootstraps,
            name=self.name)


@register_config('fixed')
class FixedEstimatorConfig(EstimatorConfig):
    """Configure an estimator returning a constant pi0."""
    pi0: float = Field(1.0, description='The constant true null proportion.')

    def validate_config(self):
        if not (0 < self.pi0 <= 1):
            raise ConfigError('pi0 must be in (0, 1], got {}'.format(
                self.pi0))

    def build(self):
        return FixedEstimator(pi0=self.pi0, name=self.name)


@register_config('oracle')
class OracleEstimatorConfig(EstimatorConfig):
    """Configure the oracle using the true pi0 of simulated data."""

    def build(self):
        return OracleEstimator(name=self.name)
