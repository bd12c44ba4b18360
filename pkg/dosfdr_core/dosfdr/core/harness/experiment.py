import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import click
import numpy as np

from dosfdr.pipeline.runner import Runner, make_runner
from dosfdr.core.data.rng import estimator_stream, replicate_rng
from dosfdr.core.data.scenario import Scenario
from dosfdr.core.errors import BadCValueError
from dosfdr.core.estimators.estimator import Estimator, OracleEstimator
from dosfdr.core.estimators.estimator_config import DosEstimatorConfig
from dosfdr.core.harness.aggregate_stats import (AggregateStats,
                                                 count_stats, relative_power)
from dosfdr.core.harness.experiment_config import ExperimentConfig
from dosfdr.core.procedures.bh import adaptive_bh, bh_rejections
from dosfdr.core.procedures.evaluation import (EvalMetrics, confusion_metrics,
                                               fdr_power_summary)

log = logging.getLogger(__name__)


@dataclass
class ReplicateResult:
    """Per-estimator outcomes of one replicate, in estimator order.

    Attributes:
        counts: n * pi1 for each estimator
        k_fracs: k_hat / n for each estimator, None for estimators without a
            change-point
        metrics: adaptive BH scores for each estimator, FDR runs only
        bh_metrics: plain BH scores, FDR runs only
        oracle_metrics: oracle adaptive BH scores, FDR runs only
    """
    counts: List[float]
    k_fracs: List[Optional[float]]
    metrics: Optional[List[EvalMetrics]] = None
    bh_metrics: Optional[EvalMetrics] = None
    oracle_metrics: Optional[EvalMetrics] = None


class ReplicateTask():
    """Picklable function of the replicate index run by a Runner."""

    def __init__(self,
                 scenario: Scenario,
                 estimators: Sequence[Estimator],
                 master_seed: int,
                 level: Optional[float] = None):
        self.scenario = scenario
        self.estimators = list(estimators)
        self.master_seed = master_seed
        self.level = level

    def __call__(self, replicate: int) -> ReplicateResult:
        seed = self.master_seed
        labeled = self.scenario.generate(
            replicate_rng(seed, replicate), seed=seed, replicate=replicate)
        sample, truth = labeled.sample, labeled.truth

        counts, k_fracs, metrics = [], [], []
        for j, estimator in enumerate(self.estimators):
            rng = replicate_rng(seed, replicate, estimator_stream(j))
            est = estimator.estimate(sample, rng=rng, truth=truth)
            counts.append(sample.n * est.pi1)
            k_fracs.append(None if est.k_hat is None else est.k_hat /
                           sample.n)
            if self.level is not None:
                rejections = adaptive_bh(sample, self.level, est.pi0)
                metrics.append(confusion_metrics(rejections, truth))

        result = ReplicateResult(counts=counts, k_fracs=k_fracs)
        if self.level is not None:
            result.metrics = metrics
            result.bh_metrics = confusion_metrics(
                bh_rejections(sample, self.level), truth)
            oracle = OracleEstimator().estimate(sample, truth=truth)
            result.oracle_metrics = confusion_metrics(
                adaptive_bh(sample, self.level, oracle.pi0), truth)
        return result


def _run_replicates(
        config: ExperimentConfig, level: Optional[float],
        runner: Optional[Runner]
) -> Tuple[Scenario, List[Estimator], List[ReplicateResult]]:
    config.recursive_validate_config()
    scenario = config.scenario.build()
    estimators = [e.build() for e in config.estimators]
    runner = runner or make_runner()
    log.info('Running {} replicates of {} with {}'.format(
        config.replicates, scenario.describe(),
        type(runner).__name__))
    task = ReplicateTask(scenario, estimators, config.master_seed, level)
    results = runner.run(task, config.replicates)
    return scenario, estimators, results


def _aggregate(config: ExperimentConfig, scenario: Scenario,
               estimators: List[Estimator],
               results: List[ReplicateResult]) -> AggregateStats:
    stats = AggregateStats(
        scenario=scenario.describe(),
        master_seed=config.master_seed,
        replicates=len(results),
        n=scenario.n,
        n1=scenario.n1)
    for j, estimator in enumerate(estimators):
        counts = np.array([r.counts[j] for r in results])
        k_fracs = [r.k_fracs[j] for r in results]
        k_fracs = None if any(k is None for k in k_fracs) else np.array(
            k_fracs)
        stats.estimators.append(
            count_stats(estimator.name, counts, scenario.n1, k_fracs))
    return stats


def run_experiment(config: ExperimentConfig,
                   runner: Optional[Runner] = None) -> AggregateStats:
    """Estimate the false null proportion in every replicate and aggregate.

    Results are identical for a given master_seed whatever runner is used.
    """
    scenario, estimators, results = _run_replicates(config, None, runner)
    return _aggregate(config, scenario, estimators, results)


def run_fdr_experiment(config: ExperimentConfig,
                       level: Optional[float] = None,
                       runner: Optional[Runner] = None) -> AggregateStats:
    """Like run_experiment, and also score adaptive BH with each estimate.

    Relative power is the ratio of the mean power of an estimator's adaptive
    BH to that of the oracle using the true pi0.

    Args:
        level: FDR level, defaults to config.level
    """
    if level is not None:
        config = config.with_overrides(level=level)
    level = config.level
    scenario, estimators, results = _run_replicates(config, level, runner)
    stats = _aggregate(config, scenario, estimators, results)

    stats.level = level
    stats.bh_fdr, stats.bh_power = fdr_power_summary(
        [r.bh_metrics for r in results])
    _, stats.oracle_power = fdr_power_summary(
        [r.oracle_metrics for r in results])
    for j, est_stats in enumerate(stats.estimators):
        fdr, power = fdr_power_summary([r.metrics[j] for r in results])
        est_stats.fdr = fdr
        est_stats.mean_power = power
        est_stats.relative_power = relative_power(power, stats.oracle_power)
    return stats


def sweep_c(config: ExperimentConfig,
            c_values: Sequence[float],
            runner: Optional[Runner] = None
            ) -> List[Tuple[float, AggregateStats]]:
    """Run an experiment per value of c for the DOS and uDOS estimators.

    Every run uses the same master seed, so all values of c are applied to
    the same samples.

    Raises:
        BadCValueError: if a value is outside [0, 0.5)
    """
    for c in c_values:
        if not (0 <= c < 0.5):
            raise BadCValueError('c must be in [0, 0.5), got {}'.format(c))

    table = []
    for c in c_values:
        cfg = config.copy(deep=True)
        for est_cfg in cfg.estimators:
            if isinstance(est_cfg, DosEstimatorConfig):
                est_cfg.c = c
        click.secho('Running sweep with c={}'.format(c), fg='green')
        table.append((c, run_experiment(cfg, runner=runner)))
    return table
