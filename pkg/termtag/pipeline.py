"""Order-preserving parallel map over sentence batches.

Batches go to a bounded pool of worker processes; results come back in input
order so that output bytes never depend on the worker count.
"""
from itertools import islice

import pypeln as pl

from termtag.errors import TermtagError


def batched(items, size):
    iterator = iter(items)
    while True:
        batch = list(islice(iterator, size))
        if not batch:
            return
        yield batch


def parallel_map(function, items, workers=1, batch_size=10000):
    """Apply a per-batch function and yield its per-item results in order"""
    batches = batched(items, batch_size)
    if workers <= 1:
        for batch in batches:
            yield from function(batch)
        return

    stage = pl.process.map(function, batches, workers=workers, maxsize=2 * workers)
    try:
        for results in pl.process.ordered(stage):
            yield from results
    except TermtagError as e:
        raise worker_error(e) from None


def worker_error(error):
    """Recover the original message from an error re-raised with a worker traceback"""
    lines = [line for line in error.message.splitlines() if line.strip()]
    if not lines:
        return error
    name, _, message = lines[-1].partition(': ')
    if not message or not name.endswith(type(error).__name__):
        return error
    return type(error)(message)
