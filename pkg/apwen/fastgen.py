"""
Recurrence generation without materializing types.

Letters are columns. A friendly choice at position i consumes column d-1-i,
a non-friendly choice consumes its own letter and the tail consumes one more
column. Column j must be consumed exactly 1 + balance_j times, so the types
of one (run, kind, h, k) are the perfect matchings of positions (plus tail)
onto columns. The DP walks positions with the mask of consumed columns.

Values are truth tables over the six barred symbols: a product is AND and a
sum is XOR. Only the trigger position depends on the tail, and only through
whether the tail equals its friendly letter, so two tail scenarios suffice.
"""
import logging
from collections import defaultdict

from .polynomials import SYMBOL_TABLES, TABLE_ONES, anf_masks
from .recgen import KINDS, empty_entries, finish_system, generation_runs, type_context

logger = logging.getLogger(__name__)


def _weight(atom):
    symbol = atom[1]
    if symbol is None:
        return 0
    return SYMBOL_TABLES[symbol.local_index]


def _run_matching(ctx, tail_is_mirror):
    """DP over positions; returns {consumed-mask: (table, count)}."""
    d = ctx.d
    capacity = [1 + b for b in ctx.balance]
    residual = sum(1 << j for j in range(d) if capacity[j] > 0)
    layer = {0: (TABLE_ONES, 1)}
    for i in range(d):
        mirror = d - 1 - i
        on_trigger = i == ctx.trigger
        friendly_weight = _weight(ctx.atoms[i][True][on_trigger and tail_is_mirror])
        other_weight = _weight(ctx.atoms[i][False][on_trigger and tail_is_mirror])
        targets = [
            1 << s for s in ctx.allowed[i]
            if s != mirror and residual >> s & 1
        ]
        nxt = defaultdict(lambda: [0, 0])

        def push(mask, table, count):
            slot = nxt[mask]
            slot[0] ^= table
            slot[1] += count

        for used, (table, count) in layer.items():
            if capacity[mirror] == 2:
                if friendly_weight:
                    push(used, table & friendly_weight, count)
                continue
            if capacity[mirror] == 1 and friendly_weight and not used >> mirror & 1:
                push(used | 1 << mirror, table & friendly_weight, count)
            if other_weight:
                for bit in targets:
                    if not used & bit:
                        push(used | bit, table & other_weight, count)
        layer = {mask: (slot[0], slot[1]) for mask, slot in nxt.items()}
    return residual, layer


def context_value(ctx):
    """(truth table, nonzero-type count) summed over every type of a context."""
    if not ctx.feasible:
        return 0, 0
    d = ctx.d
    if not ctx.has_tail:
        residual, layer = _run_matching(ctx, False)
        table, count = layer.get(residual, (0, 0))
        return table, count

    mirror_of_trigger = d - 1 - ctx.trigger
    table = 0
    count = 0
    for tail_is_mirror in (False, True):
        residual, layer = _run_matching(ctx, tail_is_mirror)
        for tail in range(d):
            if not residual >> tail & 1:
                continue
            if (tail == mirror_of_trigger) != tail_is_mirror:
                continue
            value = layer.get(residual & ~(1 << tail))
            if value:
                table ^= value[0]
                count += value[1]
    return table, count


def fast_generate_system(p):
    accumulators = empty_entries(p)
    listed = {}
    entry_counts = {}
    d = p.d
    for run in generation_runs(p):
        listed[run.name] = 0
        for kind in KINDS:
            for h in range(d):
                ks = range(d) if kind == 'PX' else (0,)
                for k in ks:
                    ctx = type_context(p, kind, h, k, run.swapped)
                    table, count = context_value(ctx)
                    key = (run.target_name(kind), h)
                    entry_counts[key] = entry_counts.get(key, 0) + count
                    listed[run.name] += count
                    for local in anf_masks(table):
                        accumulators[key] ^= {local << ctx.bar_shift}
    logger.info(f"Fast path listed types for {p.word}: {listed}")
    return finish_system(p, accumulators, listed, entry_counts)
