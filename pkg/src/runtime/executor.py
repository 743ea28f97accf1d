from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from loguru import logger

from config.settings import settings

T = TypeVar("T")
R = TypeVar("R")


class ChunkExecutor:
    """Runs independent jobs on a thread pool and returns results in submission order"""

    def __init__(self, workers: Optional[int] = None):
        self.workers = workers or settings.THREADS
        self._pool: Optional[ThreadPoolExecutor] = None

    def __enter__(self) -> "ChunkExecutor":
        if self.workers > 1:
            self._pool = ThreadPoolExecutor(max_workers=self.workers)
        return self

    def __exit__(self, *exc) -> None:
        if self._pool:
            self._pool.shutdown(wait=True)
            self._pool = None

    def map_ordered(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """
        Apply fn to every item.

        With a single worker the jobs run inline; otherwise they are
        submitted together and collected in the order they were given,
        so the output never depends on scheduling.
        """
        items = list(items)
        if self._pool is None:
            return [fn(item) for item in items]

        logger.debug(f"Dispatching {len(items)} jobs to {self.workers} workers")
        futures = [self._pool.submit(fn, item) for item in items]
        return [f.result() for f in futures]


def chunked(values: range, size: int) -> List[range]:
    """Split a range into consecutive sub-ranges of at most size elements"""
    return [values[i : i + size] for i in range(0, len(values), size)]
