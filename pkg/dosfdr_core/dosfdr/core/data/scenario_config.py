from dosfdr.pipeline.config import Config, register_config, Field
from dosfdr.core.data.scenario import (
    Scenario, GaussianScenario, UniformMixtureScenario, composite_scenario)


@register_config('scenario')
class ScenarioConfig(Config):
    """Configure a data-generating model."""
    n: int = Field(..., description='Number of hypotheses per replicate.')
    pi1: float = Field(..., description='Proportion of false nulls.')

    def build(self) -> Scenario:
        raise NotImplementedError()


@register_config('gaussian')
class GaussianScenarioConfig(ScenarioConfig):
    """Configure one-sided z-tests with equicorrelated statistics."""
    mu1: float = Field(..., description='Mean of false null statistics.')
    mu0: float = Field(
        0.0,
        description=('Mean of true null statistics. Negative values give '
                     'superuniform true null p-values.'))
    rho: float = Field(
        0.0, description='Correlation between any two test statistics.')

    def build(self):
        return GaussianScenario(
            n=self.n, pi1=self.pi1, mu1=self.mu1, mu0=self.mu0, rho=self.rho)


@register_config('uniform_mixture')
class UniformMixtureScenarioConfig(ScenarioConfig):
    """Configure the mixture pi1 U[0, b] + pi0 U[0, 1]."""
    b: float = Field(
        ..., description='Upper end of the false null p-value support.')

    def build(self):
        return UniformMixtureScenario(n=self.n, pi1=self.pi1, b=self.b)


@register_config('composite')
class CompositeScenarioConfig(ScenarioConfig):
    """Configure the superuniform composite-null model.

    The true null mean is -0.2r and the false null mean is 1 + 0.25r.
    """
    r: float = Field(..., description='Separation parameter, r >= 0.')
    rho: float = Field(
        0.0, description='Correlation between any two test statistics.')

    def build(self):
        return composite_scenario(
            n=self.n, pi1=self.pi1, r=self.r, rho=self.rho)
