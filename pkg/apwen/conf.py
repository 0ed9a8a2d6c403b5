"""
Settings access and per-run configuration.
"""
from dataclasses import dataclass

from django.conf import settings

from .exceptions import ApwenError

DEFAULTS = {
    'JOBS': 1,
    'MAX_BRUTE': 12,
    'CHECK_DEPTH': 3,
    'APWENIAN_SCAN': 128,
    'SEED_MIN': 16,
    'WITNESS_BOUND': 100000,
    'WITNESS_CONFIRM_BOUND': 1024,
    'SEARCH_MAX_D': 13,
    'CHECKPOINT_MIN_D': 13,
    'CHECKPOINT_DIR': 'checkpoints',
}


def apwen_setting(key):
    """Look up a key of the APWEN settings dict, falling back to DEFAULTS."""
    if key not in DEFAULTS:
        raise KeyError(f"Unknown APWEN setting: {key}")
    if settings.configured:
        return getattr(settings, 'APWEN', {}).get(key, DEFAULTS[key])
    return DEFAULTS[key]


@dataclass(frozen=True)
class RunConfig:
    """Options of one command invocation. jobs changes wall time only."""
    pattern: str = ''
    command: str = ''
    jobs: int = 1
    oracle_bound: int = 12
    check_depth: int = 3
    apwenian_scan: int = 128
    output: str = 'text'
    out_path: str = ''
    fast: bool = False
    verbose: bool = False
    resume: str = ''

    @classmethod
    def from_options(cls, command, options):
        """Build a RunConfig from parsed command options, defaulting to settings."""
        def pick(name, key):
            value = options.get(name)
            return apwen_setting(key) if value is None else value

        jobs = pick('jobs', 'JOBS')
        if jobs < 1:
            raise ApwenError(f"--jobs must be at least 1, got {jobs}")
        return cls(
            pattern=options.get('pattern') or '',
            command=command,
            jobs=jobs,
            oracle_bound=pick('max_brute', 'MAX_BRUTE'),
            check_depth=pick('check_depth', 'CHECK_DEPTH'),
            apwenian_scan=pick('scan', 'APWENIAN_SCAN'),
            output='json' if options.get('json') else 'text',
            out_path=options.get('out') or '',
            fast=bool(options.get('fast')),
            verbose=bool(options.get('verbose')),
            resume=options.get('resume') or '',
        )
