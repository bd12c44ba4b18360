# flake8: noqa

from dosfdr.core.procedures.bh import *
from dosfdr.core.procedures.evaluation import *
