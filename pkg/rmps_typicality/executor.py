#!/bin/env python3
# -*- coding: utf-8 -*-
"""
@summary: Sample level parallelism with results in deterministic order.

@author: Frank Brehm
@contact: frank@brehm-online.com
@copyright: © 2023 by Frank Brehm, Berlin
"""
from __future__ import absolute_import

import logging
import os

from concurrent.futures import ProcessPoolExecutor

# Own modules
from .errors import InvalidConfigValueError

from .xlate import XLATOR

__version__ = '0.2.1'
__author__ = 'Frank Brehm <frank@brehm-online.com>'
__copyright__ = '(C) 2023 by Frank Brehm, Berlin'

LOG = logging.getLogger(__name__)

_ = XLATOR.gettext

WORKERS_ENV = 'RMPS_WORKERS'


# =============================================================================
def default_workers():
    """The number of workers from $RMPS_WORKERS, or the number of CPUs."""
    env = os.environ.get(WORKERS_ENV)
    if env is not None and env.strip():
        try:
            v = int(env)
        except ValueError:
            raise InvalidConfigValueError(WORKERS_ENV, env, _("must be an integer"))
        if v < 1:
            raise InvalidConfigValueError(WORKERS_ENV, env, _("must be >= 1"))
        return v
    return os.cpu_count() or 1


# =============================================================================
class SampleExecutor(object):
    """
    Maps a picklable, module level task function over sample indices.

    Results always come back in task order, whatever the number of workers,
    and one worker runs everything in the calling process.
    """

    # -------------------------------------------------------------------------
    def __init__(self, workers=1, chunksize=None):
        """Constructor."""
        w = int(workers)
        if w < 1:
            raise InvalidConfigValueError('workers', workers, _("must be >= 1"))
        self._workers = w
        self._chunksize = chunksize
        self._pool = None

    # -------------------------------------------------------------------------
    @property
    def workers(self):
        """The number of worker processes."""
        return self._workers

    # -------------------------------------------------------------------------
    def __enter__(self):
        if self._workers > 1 and self._pool is None:
            LOG.debug("Starting a pool of {} worker processes.".format(self._workers))
            self._pool = ProcessPoolExecutor(max_workers=self._workers)
        return self

    # -------------------------------------------------------------------------
    def __exit__(self, exc_type, exc_value, traceback):
        self.shutdown(cancel=exc_type is not None)
        return False

    # -------------------------------------------------------------------------
    def shutdown(self, cancel=False):
        """Stop the worker pool."""
        if self._pool is not None:
            self._pool.shutdown(wait=True, cancel_futures=cancel)
            self._pool = None

    # -------------------------------------------------------------------------
    def map(self, func, tasks):
        """Yield func(task) for all tasks, in task order."""
        tasks = list(tasks)
        if self._workers == 1 or len(tasks) < 2:
            for task in tasks:
                yield func(task)
            return

        if self._pool is None:
            self.__enter__()
        chunksize = self._chunksize
        if chunksize is None:
            chunksize = max(1, len(tasks) // (4 * self._workers))
        for result in self._pool.map(func, tasks, chunksize=chunksize):
            yield result


# =============================================================================

if __name__ == "__main__":

    pass

# =============================================================================

# vim: tabstop=4 expandtab shiftwidth=4 softtabstop=4 list
