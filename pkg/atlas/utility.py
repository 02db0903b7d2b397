import logging
import os
from concurrent.futures import ProcessPoolExecutor

from django.conf import settings

logger = logging.getLogger(__name__)


def resolve_data_dir(data_dir=None):
    return data_dir or settings.ATLAS_DATA_DIR


def resolve_cremona_path(path=None, data_dir=None):
    """Curve database path: explicit, then ATLAS_CREMONA, then the bundled fixture."""
    if path:
        return path
    if settings.ATLAS_CREMONA:
        return settings.ATLAS_CREMONA
    return os.path.join(resolve_data_dir(data_dir), 'allcurves.fixture')


def resolve_jobs(jobs=None):
    if jobs is None:
        jobs = settings.ATLAS_JOBS
    if jobs <= 0:
        jobs = os.cpu_count() or 1
    return jobs


def _worker_setup():
    import django
    django.setup()


def run_pool(func, items, jobs=None, chunksize=8):
    """
    Map a module level function over items, results in input order.
    jobs == 1 stays in this process.
    """
    items = list(items)
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(items) < 2:
        return [func(item) for item in items]
    logger.info('Mapping %s over %s items with %s workers', func.__name__, len(items), jobs)
    with ProcessPoolExecutor(max_workers=jobs, initializer=_worker_setup) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
