"""Configurable size limits for the exponential kernels.

Every cap is a parameter with a safe desk-scale default; exceeding one is a
reported error, never a silent truncation.
"""

from __future__ import annotations

from dataclasses import dataclass


class SizeCapError(ValueError):
    """Raised when an input exceeds a configured size cap."""


DEFAULT_NAIVE_CAP = 9        # matrix size for the factorial-expansion permanent
DEFAULT_RYSER_CAP = 24       # matrix size for the Ryser permanent (3 rows per chord)
DEFAULT_PERMANENT_CHORDS = 8
DEFAULT_STATESUM_CHORDS = 6
DEFAULT_RECURSION_CHORDS = 10


@dataclass(frozen=True)
class SizeCaps:
    """Per-method chord-count limits used by the verification harness."""

    permanent_chords: int = DEFAULT_PERMANENT_CHORDS
    statesum_chords: int = DEFAULT_STATESUM_CHORDS
    recursion_chords: int = DEFAULT_RECURSION_CHORDS

    @classmethod
    def uniform(cls, chords: int) -> SizeCaps:
        return cls(chords, chords, chords)
