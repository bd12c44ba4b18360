# flake8: noqa

from dosfdr.core.asymptotics.quantile_model import *
from dosfdr.core.asymptotics.golden_section import *
from dosfdr.core.asymptotics.ideal import *
from dosfdr.core.asymptotics.quantile_model_config import *
