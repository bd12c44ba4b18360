# flake8: noqa

from dosfdr.core.estimators.proportion_estimate import *
from dosfdr.core.estimators.dos import *
from dosfdr.core.estimators.storey import *
from dosfdr.core.estimators.lsl import *
from dosfdr.core.estimators.jd import *
from dosfdr.core.estimators.estimator import *
from dosfdr.core.estimators.estimator_config import *
