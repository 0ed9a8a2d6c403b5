"""
Celery tasks for distributed work units.
Units are deterministic, so tasks never retry.
"""
import logging

from celery import shared_task

logger = logging.getLogger(__name__)


@shared_task
def evaluate_work_unit_task(payload):
    """Evaluate one naive-path work unit on a worker."""
    from apwen.recgen import evaluate_work_unit, unit_id

    try:
        return evaluate_work_unit(payload)
    except Exception as exc:
        logger.error(f"Work unit {unit_id(payload)} failed: {str(exc)}")
        raise


@shared_task
def prefilter_pattern_task(payload):
    """Run the δ-matrix prefilter for one candidate pattern."""
    from apwen.search import prefilter_pattern

    return prefilter_pattern(payload)
