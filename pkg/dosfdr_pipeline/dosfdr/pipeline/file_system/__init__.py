# flake8: noqa

from dosfdr.pipeline.file_system.file_system import (
    FileSystem, NotReadableError, NotWritableError)
from dosfdr.pipeline.file_system.local_file_system import LocalFileSystem
from dosfdr.pipeline.file_system.utils import *
