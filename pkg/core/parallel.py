import logging
import os
from functools import partial
from multiprocessing import Pool

from django.conf import settings

logger = logging.getLogger(__name__)


def resolve_workers(workers=None):
    if workers is None:
        workers = settings.TOPOLOGY_WORKERS
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


def parallel_map(func, items, workers=1, **kwargs):
    """Map `func` over `items`, in a process pool when more than one worker is asked for.

    Results come back in input order, so callers can merge them deterministically.
    """
    items = list(items)
    job = partial(func, **kwargs) if kwargs else func
    workers = min(resolve_workers(workers), max(1, len(items)))
    if workers == 1:
        return [job(item) for item in items]
    logger.debug("running %d jobs on %d workers", len(items), workers)
    with Pool(processes=workers) as pool:
        return pool.map(job, items)
