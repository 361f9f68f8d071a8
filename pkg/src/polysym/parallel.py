"""Order-preserving process pool for independent per-component jobs."""

import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor

ENV_THREADS = "POLYSYM_THREADS"


def default_jobs():
    raw = os.environ.get(ENV_THREADS)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1


def resolve_jobs(jobs=None):
    """Explicit width wins, then POLYSYM_THREADS, then 1."""
    if jobs is None:
        return default_jobs()
    return max(1, int(jobs))


def pool_map(fn, items, jobs=None, chunksize=1):
    """``list(map(fn, items))`` over a process pool; result order is input order.

    ``fn`` must be a module-level function.  With one job (the default) no
    processes are started.
    """
    items = list(items)
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    ctx = multiprocessing.get_context("fork") if hasattr(os, "fork") else None
    with ProcessPoolExecutor(max_workers=min(jobs, len(items)), mp_context=ctx) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))
