# flake8: noqa

from dosfdr.core.harness.aggregate_stats import *
from dosfdr.core.harness.experiment_config import *
from dosfdr.core.harness.experiment import *
from dosfdr.core.harness.report import *
from dosfdr.core.harness.pvalue_io import *
