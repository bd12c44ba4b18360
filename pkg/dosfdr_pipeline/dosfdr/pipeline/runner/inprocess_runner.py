from typing import Any, Callable, List

from dosfdr.pipeline.runner.runner import Runner

INPROCESS = 'inprocess'


class InProcessRunner(Runner):
    """Runs each task sequentially within a single process.

    Useful for testing and debugging.
    """

    def run(self, task_fn: Callable[[int], Any], num_tasks: int) -> List[Any]:
        return [task_fn(i) for i in range(num_tasks)]
