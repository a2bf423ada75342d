"""
Process-pool fan-out for sharded scans
"""

from multiprocessing import Pool
from typing import Callable, List, Sequence, TypeVar

Task = TypeVar('Task')
Result = TypeVar('Result')


def map_shards(worker: Callable[[Task], Result], tasks: Sequence[Task], threads: int) -> List[Result]:
    """
    Run worker over tasks, results in task order

    A single worker (or a single task) runs in-process.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    if threads == 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with Pool(min(threads, len(tasks))) as pool:
        return pool.map(worker, tasks, chunksize=1)
