from dataclasses import dataclass

import numpy as np

from dosfdr.core.pvalue_sample import PValueSample


@dataclass
class TruthLabels:
    """Ground truth for simulated hypotheses.

    Attributes:
        is_false_null: boolean array aligned to the original (unsorted)
            hypothesis indices
    """
    is_false_null: np.ndarray

    def __len__(self):
        return len(self.is_false_null)

    @property
    def num_false_nulls(self) -> int:
        return int(np.count_nonzero(self.is_false_null))

    @property
    def pi0(self) -> float:
        return 1.0 - self.num_false_nulls / len(self)


@dataclass
class LabeledSample:
    """A simulated p-value sample with its ground truth.

    Attributes:
        sample: the validated p-values
        truth: which hypotheses are false nulls
        seed: master seed of the run that generated the sample
        replicate: replicate index within that run
    """
    sample: PValueSample
    truth: TruthLabels
    seed: int
    replicate: int = 0
