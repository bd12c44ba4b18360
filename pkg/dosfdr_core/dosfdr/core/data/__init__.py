# flake8: noqa

from dosfdr.core.data.normal import *
from dosfdr.core.data.rng import *
from dosfdr.core.data.labeled_sample import *
from dosfdr.core.data.scenario import *
from dosfdr.core.data.scenario_config import *
