"""Decision procedures for endomorphisms of subshifts of finite type.

The heavy lifting lives in the compiled extension; this package re-exports
its surface: parsing of shift and code files, structural analysis,
injectivity / surjectivity / pre-injectivity verdicts with witnesses,
exhaustive scans, and pseudo-orbit tracing.
"""

from ._eden import (
    Builtin,
    DecisionReport,
    EdenError,
    EdgePresentation,
    ScanResult,
    SftSpec,
    SlidingBlockCode,
    are_homoclinic,
    builtin,
    builtin_names,
    count_least_period,
    count_periodic,
    emit_spec,
    entropy,
    goe_verdict,
    higher_block_recode,
    is_irreducible,
    is_mixing,
    is_nonwandering,
    language,
    metric,
    mixing_gap,
    parse_code,
    parse_spec,
    period,
    scan,
    shadow,
    validate_endomorphism,
)

__all__ = [
    "Builtin",
    "DecisionReport",
    "EdenError",
    "EdgePresentation",
    "ScanResult",
    "SftSpec",
    "SlidingBlockCode",
    "are_homoclinic",
    "builtin",
    "builtin_names",
    "count_least_period",
    "count_periodic",
    "emit_spec",
    "entropy",
    "goe_verdict",
    "higher_block_recode",
    "is_irreducible",
    "is_mixing",
    "is_nonwandering",
    "language",
    "metric",
    "mixing_gap",
    "parse_code",
    "parse_spec",
    "period",
    "scan",
    "shadow",
    "validate_endomorphism",
]

__version__ = "0.1.0"
