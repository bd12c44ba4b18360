from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from dosfdr.core.data.labeled_sample import TruthLabels
from dosfdr.core.errors import EmptyInputError, LengthMismatchError
from dosfdr.core.procedures.bh import RejectionSet


@dataclass
class EvalMetrics:
    """Scores of one rejection set against the truth.

    Attributes:
        fdp: false rejections / max(rejections, 1)
        true_discoveries: number of rejected false nulls
        power: true_discoveries / number of false nulls, 0 if there are none
        rejections: total number of rejections
    """
    fdp: float
    true_discoveries: int
    power: float
    rejections: int


def confusion_metrics(rejections: RejectionSet,
                      truth: TruthLabels) -> EvalMetrics:
    """Score a rejection set.

    Raises:
        LengthMismatchError: if the truth labels do not cover every test
    """
    if rejections.n_tests != len(truth):
        raise LengthMismatchError(
            'rejections cover {} tests but there are {} truth labels'.format(
                rejections.n_tests, len(truth)))
    r = rejections.rejected_count
    true_discoveries = int(
        np.count_nonzero(
            truth.is_false_null[rejections.rejected_original_indices]))
    false_rejections = r - true_discoveries
    num_false_nulls = truth.num_false_nulls
    power = (true_discoveries / num_false_nulls) if num_false_nulls else 0.0
    return EvalMetrics(
        fdp=false_rejections / max(r, 1),
        true_discoveries=true_discoveries,
        power=power,
        rejections=r)


def fdr_power_summary(per_replicate: List[EvalMetrics]) -> Tuple[float, float]:
    """Return (FDR, mean power), the means of FDP and power over replicates.

    Raises:
        EmptyInputError: if per_replicate is empty
    """
    if len(per_replicate) == 0:
        raise EmptyInputError('No replicates to summarize.')
    fdr = float(np.mean([m.fdp for m in per_replicate]))
    mean_power = float(np.mean([m.power for m in per_replicate]))
    return fdr, mean_power
