import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np


@dataclass
class EstimatorStats:
    """Summary of one estimator over the replicates of an experiment.

    The estimates are summarized as counts n * pi1 of false nulls.

    Attributes:
        name: the estimator's report label
        mean_count: mean of n * pi1
        bias: mean_count - n1
        sd: sample standard deviation of n * pi1, 0 for a single replicate
        rmse: root mean squared error of n * pi1 around n1
        mean_k_frac: mean of k_hat / n for change-point estimators
        fdr: mean FDP of adaptive BH using the estimator's pi0
        mean_power: mean power of that adaptive BH
        relative_power: mean_power / mean power of the oracle
    """
    name: str
    mean_count: float
    bias: float
    sd: float
    rmse: float
    mean_k_frac: Optional[float] = None
    fdr: Optional[float] = None
    mean_power: Optional[float] = None
    relative_power: Optional[float] = None


@dataclass
class AggregateStats:
    """Results of an experiment.

    Attributes:
        scenario: description of the data-generating model
        master_seed: seed all replicate streams were derived from
        replicates: number of replicates
        n: hypotheses per replicate
        n1: false nulls per replicate
        estimators: per-estimator summaries in configuration order
        level: FDR level, for FDR experiments
        bh_fdr: FDR of plain BH, for FDR experiments
        bh_power: mean power of plain BH, for FDR experiments
        oracle_power: mean power of the oracle adaptive BH
    """
    scenario: str
    master_seed: int
    replicates: int
    n: int
    n1: int
    estimators: List[EstimatorStats] = field(default_factory=list)
    level: Optional[float] = None
    bh_fdr: Optional[float] = None
    bh_power: Optional[float] = None
    oracle_power: Optional[float] = None

    def get(self, name: str) -> EstimatorStats:
        for s in self.estimators:
            if s.name == name:
                return s
        raise KeyError('No estimator named {} in {}'.format(
            name, [s.name for s in self.estimators]))

    @property
    def estimator_names(self) -> List[str]:
        return [s.name for s in self.estimators]


def count_stats(name: str, counts: np.ndarray, n1: int,
                k_fracs: Optional[np.ndarray] = None) -> EstimatorStats:
    """Summarize the n * pi1 counts of one estimator.

    RMSE is computed from the squared errors directly, and SD divides by
    the number of replicates minus one.
    """
    counts = np.asarray(counts, dtype=float)
    errors = counts - n1
    sd = float(np.std(counts, ddof=1)) if len(counts) > 1 else 0.0
    return EstimatorStats(
        name=name,
        mean_count=float(np.mean(counts)),
        bias=float(np.mean(errors)),
        sd=sd,
        rmse=math.sqrt(float(np.mean(errors**2))),
        mean_k_frac=None if k_fracs is None else float(np.mean(k_fracs)))


def relative_power(power: float, oracle_power: float) -> float:
    """Ratio of mean powers, with 0 / 0 defined as 1."""
    if oracle_power == 0:
        return 1.0 if power == 0 else math.inf
    return power / oracle_power
