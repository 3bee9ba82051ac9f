"""Exploration of anonymous rings by myopic robots.

Thin Python surface over the C++ core: configurations, protocol parsing,
randomized fair simulation, exhaustive adversarial verification, and
exists-forall protocol synthesis.
"""

from ringx._core import (
    Configuration,
    Protocol,
    Trace,
    Verdict,
    builtin,
    builtin_names,
    detect_all_named,
    detect_named,
    enabled_moves,
    format_protocol,
    indistinguishable,
    initial_configs,
    monitor_distinguishability,
    parse_protocol,
    simulate,
    structure,
    synthesize,
    validate,
    verify_exhaustive,
    view_at,
)

__all__ = [
    "Configuration",
    "Protocol",
    "Trace",
    "Verdict",
    "builtin",
    "builtin_names",
    "detect_all_named",
    "detect_named",
    "enabled_moves",
    "format_protocol",
    "indistinguishable",
    "initial_configs",
    "monitor_distinguishability",
    "parse_protocol",
    "simulate",
    "structure",
    "synthesize",
    "validate",
    "verify_exhaustive",
    "view_at",
]
