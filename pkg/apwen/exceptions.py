"""
Error hierarchy for the prover.
Management commands turn any ApwenError into a CommandError with exit code 2.
"""


class ApwenError(Exception):
    """Base class for every error raised by the prover."""


class PatternError(ApwenError, ValueError):
    """Pattern text could not be parsed into a valid ±1 pattern."""


class BruteForceBoundError(ApwenError, ValueError):
    """A brute-force oracle was asked for a size above the configured bound."""

    def __init__(self, m, bound):
        self.m = m
        self.bound = bound
        super().__init__(f"m={m} exceeds the brute-force bound {bound}")


class OracleConsistencyError(ApwenError):
    """Two oracles that must agree did not."""


class CheckpointError(ApwenError):
    """A resume file is unreadable or belongs to another run."""
