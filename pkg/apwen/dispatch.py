"""
Fan-out of independent work units and resumable checkpoint files.

With a Celery broker configured, units run as a task group on the workers.
Otherwise jobs > 1 uses a local process pool and jobs == 1 runs in-process.
Results always come back in payload order.
"""
import logging
import os
from concurrent.futures import ProcessPoolExecutor

from django.conf import settings

from .exceptions import CheckpointError
from .recgen import evaluate_work_unit, unit_id

logger = logging.getLogger(__name__)

CHECKPOINT_HEADER = '# apwen checkpoint'


def broker_configured():
    return bool(
        settings.configured
        and getattr(settings, 'CELERY_BROKER_URL', '')
        and not getattr(settings, 'CELERY_TASK_ALWAYS_EAGER', True)
    )


def fan_out(function, task, payloads, jobs=1, on_result=None):
    """Evaluate function(payload) for every payload; task is its Celery wrapper."""
    if not payloads:
        return []
    if broker_configured():
        from celery import group

        logger.info(f"Dispatching {len(payloads)} units to Celery workers")
        group_result = group(task.s(payload) for payload in payloads).apply_async()
        results = []
        # Each result is recorded before the next one is awaited
        for payload, async_result in zip(payloads, group_result.results):
            result = async_result.get()
            if on_result:
                on_result(payload, result)
            results.append(result)
        return results

    results = []
    if jobs > 1:
        chunksize = max(1, len(payloads) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for payload, result in zip(payloads, pool.map(function, payloads, chunksize=chunksize)):
                if on_result:
                    on_result(payload, result)
                results.append(result)
        return results

    for payload in payloads:
        result = function(payload)
        if on_result:
            on_result(payload, result)
        results.append(result)
    return results


def run_work_units(payloads, jobs=1, checkpoint=None):
    """Evaluate naive-path work units, skipping those already in the checkpoint."""
    from .tasks import evaluate_work_unit_task

    done = checkpoint.load() if checkpoint else {}
    pending = [p for p in payloads if unit_id(p) not in done]
    if done:
        logger.info(f"Resuming: {len(done)} units from checkpoint, {len(pending)} pending")

    on_result = checkpoint.record if checkpoint else None
    fresh = fan_out(evaluate_work_unit, evaluate_work_unit_task, pending, jobs, on_result)
    fresh_by_id = {unit_id(p): r for p, r in zip(pending, fresh)}
    return [done.get(unit_id(p)) or fresh_by_id[unit_id(p)] for p in payloads]


# ============================================================================
# CHECKPOINT FILES
# ============================================================================

class Checkpoint:
    """
    Append-only record of finished work units for one pattern.

    Each line is '<run> <kind> <h> <k> <tail>:<first> <listed> <hex>' where
    <hex> concatenates the 12-bit monomials as three hex digits each ('-'
    when the partial sum is zero).
    """

    def __init__(self, path, pattern):
        self.path = path
        self.pattern = pattern

    def _header(self):
        return f"{CHECKPOINT_HEADER} {self.pattern.word}"

    def load(self):
        if not os.path.exists(self.path):
            return {}
        done = {}
        with open(self.path) as handle:
            header = handle.readline().rstrip('\n')
            if header != self._header():
                raise CheckpointError(
                    f"Checkpoint {self.path} belongs to another run ({header!r})"
                )
            for number, line in enumerate(handle, start=2):
                parts = line.split()
                if not parts:
                    continue
                if len(parts) != 7:
                    raise CheckpointError(f"Malformed checkpoint record at {self.path}:{number}")
                key = ' '.join(parts[:5])
                try:
                    listed = int(parts[5])
                    monomials = decode_monomials(parts[6])
                except ValueError as exc:
                    raise CheckpointError(
                        f"Malformed checkpoint record at {self.path}:{number}: {exc}"
                    ) from exc
                done[key] = {'monomials': monomials, 'listed': listed}
        return done

    def record(self, payload, result):
        fresh = not os.path.exists(self.path)
        with open(self.path, 'a') as handle:
            if fresh:
                handle.write(self._header() + '\n')
            handle.write(
                f"{unit_id(payload)} {result['listed']} {encode_monomials(result['monomials'])}\n"
            )
            handle.flush()


def encode_monomials(monomials):
    if not monomials:
        return '-'
    return ''.join(f"{m:03x}" for m in sorted(monomials))


def decode_monomials(text):
    if text == '-':
        return []
    if len(text) % 3:
        raise ValueError(f"hex dump length {len(text)} is not a multiple of 3")
    return [int(text[i:i + 3], 16) for i in range(0, len(text), 3)]
