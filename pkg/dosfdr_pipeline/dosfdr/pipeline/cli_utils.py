import sys
from functools import wraps

import click

from dosfdr.pipeline.file_system import NotReadableError, NotWritableError

EXIT_VALIDATION_ERROR = 2
EXIT_IO_ERROR = 3


def print_error(msg):
    """Print error message to console in red."""
    click.echo(click.style(msg, fg='red'), err=True)


def handle_errors(fn):
    """Decorator mapping exceptions raised by a command to exit codes.

    I/O failures exit with EXIT_IO_ERROR. Invalid input exits with
    EXIT_VALIDATION_ERROR; this is any ValueError, including ConfigError,
    RegistryError, ProfileNotFoundError, pydantic ValidationError and
    estimation errors.
    """

    @wraps(fn)
    def _fn(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (NotReadableError, NotWritableError, OSError) as e:
            print_error('I/O error: {}'.format(e))
            sys.exit(EXIT_IO_ERROR)
        except ValueError as e:
            print_error('Validation error: {}'.format(e))
            sys.exit(EXIT_VALIDATION_ERROR)

    return _fn
