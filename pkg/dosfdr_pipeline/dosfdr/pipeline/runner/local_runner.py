import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List

from dosfdr.pipeline.runner.runner import Runner
from dosfdr.pipeline.utils import split_into_groups

LOCAL = 'local'

log = logging.getLogger(__name__)


def _run_group(task_fn: Callable[[int], Any], group: List[int]) -> List[Any]:
    return [task_fn(i) for i in group]


class LocalRunner(Runner):
    """Runs tasks on the local machine using a pool of worker processes.

    The task indices are split into one contiguous group per worker and the
    per-group results are concatenated in index order.
    """

    def run(self, task_fn: Callable[[int], Any], num_tasks: int) -> List[Any]:
        num_workers = self.num_workers or os.cpu_count() or 1
        groups = split_into_groups(list(range(num_tasks)), num_workers)
        if len(groups) <= 1:
            return [task_fn(i) for i in range(num_tasks)]

        log.debug('Running {} tasks in {} groups.'.format(
            num_tasks, len(groups)))
        with ProcessPoolExecutor(max_workers=len(groups)) as executor:
            futures = [
                executor.submit(_run_group, task_fn, group)
                for group in groups
            ]
            results = []
            for future in futures:
                results.extend(future.result())
        return results
