"""
Search over every pattern of a given length.

Each candidate is first screened with the δ-matrix oracle on a prefix of
indices; only survivors get generated recurrences and a closure proof.
"""
import logging
from dataclasses import dataclass, field

from .conf import apwen_setting
from .exceptions import ApwenError
from .linalg import gf2_det
from .oracle import FAMILY_J, membership_mask
from .patterns import all_patterns, negated_argument, parse_pattern
from .prover import APWENIAN, prove

logger = logging.getLogger(__name__)


def first_even_index(p, scan):
    """Smallest m <= scan with an even normalized Hankel determinant, or None."""
    members = membership_mask(p, FAMILY_J, 2 * scan)
    for m in range(1, scan + 1):
        low = (1 << (m - 1)) - 1
        last = 1 << (m - 1)
        rows = [((members >> i) & low) | last for i in range(m)]
        if not gf2_det(rows, m):
            return m
    return None


def prefilter_pattern(payload):
    p = parse_pattern(payload['pattern'])
    return {'pattern': p.word, 'first_even': first_even_index(p, payload['scan'])}


@dataclass
class SearchReport:
    d: int
    scan: int
    screened: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)

    @property
    def survivors(self):
        return [row['pattern'] for row in self.screened if row['first_even'] is None]

    @property
    def proven(self):
        return sorted(word for word, cert in self.certificates.items() if cert.verdict == APWENIAN)

    def partners(self):
        """x -> -x partner of every proven pattern (odd d only)."""
        if self.d % 2 == 0:
            return {}
        proven = set(self.proven)
        notes = {}
        for word in self.proven:
            partner = negated_argument(parse_pattern(word)).word
            notes[word] = {'partner': partner, 'partner_proven': partner in proven}
        return notes


def search_patterns(d, scan=None, jobs=1):
    """Screen and prove all 2^(d-1) patterns of length d."""
    from .dispatch import fan_out
    from .tasks import prefilter_pattern_task

    max_d = apwen_setting('SEARCH_MAX_D')
    if not 2 <= d <= max_d:
        raise ApwenError(f"search length must be between 2 and {max_d}, got {d}")
    if scan is None:
        scan = apwen_setting('APWENIAN_SCAN')

    payloads = [{'pattern': p.word, 'scan': scan} for p in all_patterns(d)]
    report = SearchReport(d=d, scan=scan)
    report.screened = fan_out(prefilter_pattern, prefilter_pattern_task, payloads, jobs)
    logger.info(f"Search d={d}: {len(report.survivors)} of {len(payloads)} patterns survive m <= {scan}")

    for word in report.survivors:
        report.certificates[word] = prove(parse_pattern(word), fast=True)
        logger.info(f"Search d={d}: {word} -> {report.certificates[word].verdict}")
    return report
