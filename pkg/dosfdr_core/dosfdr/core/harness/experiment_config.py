from typing import List, Optional

from dosfdr.pipeline.config import ConfigError, Field, register_config
from dosfdr.pipeline.root_config import RootConfig
from dosfdr.core.data.scenario_config import ScenarioConfig
from dosfdr.core.estimators.estimator_config import EstimatorConfig

REPORT_FORMATS = ['csv', 'md']


@register_config('experiment')
class ExperimentConfig(RootConfig):
    """Configure a Monte-Carlo experiment.

    Each replicate draws one labeled sample from the scenario and applies
    every estimator to it. FDR experiments additionally run adaptive BH at
    `level` with each estimator's pi0.
    """
    scenario: ScenarioConfig = Field(
        ..., description='The data-generating model.')
    estimators: List[EstimatorConfig] = Field(
        ..., description='Estimators to compare, in report column order.')
    replicates: int = Field(1000, description='Number of replicates.')
    master_seed: int = Field(
        0, description='Seed every replicate stream is derived from.')
    level: float = Field(0.05, description='FDR level for FDR experiments.')
    output_format: str = Field(
        'md', description='Report format: csv or md (markdown table).')

    def validate_config(self):
        if self.replicates < 1:
            raise ConfigError('replicates must be >= 1, got {}'.format(
                self.replicates))
        if self.master_seed < 0:
            raise ConfigError('master_seed must be >= 0, got {}'.format(
                self.master_seed))
        if len(self.estimators) == 0:
            raise ConfigError('estimators must not be empty.')
        if not (0 < self.level < 1):
            raise ConfigError('level must be in (0, 1), got {}'.format(
                self.level))
        self.validate_list('output_format', REPORT_FORMATS)

        names = [e.get_name() for e in self.estimators]
        dups = sorted(set(n for n in names if names.count(n) > 1))
        if dups:
            raise ConfigError(
                'Estimator names must be unique; set `name` to tell apart '
                '{}'.format(dups))

    def with_overrides(self,
                       master_seed: Optional[int] = None,
                       replicates: Optional[int] = None,
                       level: Optional[float] = None) -> 'ExperimentConfig':
        """Return a copy with command line overrides applied."""
        cfg = self.copy(deep=True)
        if master_seed is not None:
            cfg.master_seed = master_seed
        if replicates is not None:
            cfg.replicates = replicates
        if level is not None:
            cfg.level = level
        cfg.recursive_validate_config()
        return cfg
