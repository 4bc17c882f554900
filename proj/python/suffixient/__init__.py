"""Online smallest suffixient sets."""

from ._core import (
    AlphabetError,
    BoundsError,
    Error,
    InputError,
    InvariantViolation,
    LtrMaintainer,
    RtlMaintainer,
    SizeError,
    StateError,
    UsageError,
    check,
    gen,
    oracle,
    stream,
)

__all__ = [
    "AlphabetError",
    "BoundsError",
    "Error",
    "InputError",
    "InvariantViolation",
    "LtrMaintainer",
    "RtlMaintainer",
    "SizeError",
    "StateError",
    "UsageError",
    "check",
    "gen",
    "oracle",
    "stream",
]
