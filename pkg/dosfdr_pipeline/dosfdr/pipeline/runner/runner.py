from abc import abstractmethod
from typing import Any, Callable, List, Optional


class Runner():
    """A method for running a batch of independent, indexed tasks.

    The simulation harness hands a runner one task per replicate. Subclasses
    decide where the tasks execute, but must return results ordered by task
    index so that any schedule gives the same output.
    """

    def __init__(self, num_workers: Optional[int] = None):
        """Constructor

        Args:
            num_workers: the number of parallel workers to use, for runners
                that support it. None means the runner's default.
        """
        self.num_workers = num_workers

    @abstractmethod
    def run(self, task_fn: Callable[[int], Any], num_tasks: int) -> List[Any]:
        """Run task_fn(i) for i in range(num_tasks).

        Args:
            task_fn: picklable function of the task index
            num_tasks: number of tasks

        Returns:
            list where item i is the result of task_fn(i)
        """
        pass


def make_runner(runner_name: Optional[str] = None,
                num_workers: Optional[int] = None) -> Runner:
    """Build a Runner, falling back to the machine configuration.

    The [harness] section of the configuration profile (or the
    HARNESS_RUNNER and HARNESS_WORKERS environment variables) supply the
    defaults for runner_name and num_workers.
    """
    from dosfdr.pipeline import registry, dos_config
    if runner_name is None:
        runner_name = dos_config.get_namespace_option('harness', 'runner',
                                                      'inprocess')
    if num_workers is None:
        workers = dos_config.get_namespace_option('harness', 'workers')
        num_workers = int(workers) if workers else None
    return registry.get_runner(runner_name)(num_workers=num_workers)
