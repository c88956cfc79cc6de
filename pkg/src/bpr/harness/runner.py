"""Concurrent execution of independent run units."""

import asyncio
import logging
from typing import Any, Callable, Dict, Hashable, List, Tuple

logger = logging.getLogger(__name__)


class ExperimentRunner:
    """
    Fans out run units to worker threads and merges results in key order.

    Every unit must be pure given its key (its random stream is derived from
    the key), so serial and parallel execution give identical results.
    """

    def __init__(self, max_workers: int = 4):
        """
        Initialize runner.

        Args:
            max_workers: Maximum number of units running at once
        """
        self.max_workers = max_workers
        self._semaphore = asyncio.Semaphore(max_workers)

    async def _run_unit(self, key: Hashable, unit: Callable[[], Any]) -> Tuple[Hashable, Any]:
        async with self._semaphore:
            logger.debug(f"Running unit {key}")
            return key, await asyncio.to_thread(unit)

    async def run(self, units: Dict[Hashable, Callable[[], Any]]) -> List[Any]:
        """
        Execute all units.

        Args:
            units: Zero-argument callables keyed by a sortable key

        Returns:
            Results ordered by key

        Raises:
            Exception: The first failure of any unit (the others are cancelled)
        """
        tasks = [asyncio.create_task(self._run_unit(k, u)) for k, u in units.items()]
        try:
            done = await asyncio.gather(*tasks)
        except BaseException:
            for task in tasks:
                task.cancel()
            raise
        return [result for _, result in sorted(done, key=lambda item: item[0])]
