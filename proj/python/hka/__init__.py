from ._hka import (
    HypothesisFailedError,
    MissingFillerError,
    SpecParseError,
    analyze,
    check_laws_kpg,
    check_laws_rel,
    pave,
    spec_dot,
    validate_spec,
)

__all__ = [
    "HypothesisFailedError",
    "MissingFillerError",
    "SpecParseError",
    "analyze",
    "check_laws_kpg",
    "check_laws_rel",
    "pave",
    "spec_dot",
    "validate_spec",
]
