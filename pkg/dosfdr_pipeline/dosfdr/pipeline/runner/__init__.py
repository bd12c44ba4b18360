# flake8: noqa

from dosfdr.pipeline.runner.inprocess_runner import *
from dosfdr.pipeline.runner.local_runner import *
from dosfdr.pipeline.runner.runner import *
