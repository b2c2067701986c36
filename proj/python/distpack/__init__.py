"""Exact distinct bin packing: k bins, l items per bin, exact capacity fill,
no two bins with the same size-multiset."""

from ._distpack import (
    DerivationError,
    DistpackError,
    EnumerationMode,
    Instance,
    InstanceTooLarge,
    InvalidPacking,
    Multiset,
    NonPositiveValue,
    OracleTooLarge,
    ParseError,
    PatternExplosion,
    PatternSet,
    PatternSetMismatch,
    TimeoutExceeded,
    __version__,
    binomial,
    brute_force_assign,
    count_report,
    enumerate_patterns,
    extracted_set,
    format_pattern_dump,
    instance_validate,
    multiset_equal,
    parse_instance,
    parse_solution,
    serialize_solution,
    solve,
    solve_all,
    spread,
    subset_sweep_solve,
    value_support,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
