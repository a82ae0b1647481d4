"""Exact combinatorics for dispersed Dyck paths.

Enumeration, per-path statistics, invertible path correspondences,
closed-form counters in exact integer arithmetic, and a verification
harness that cross-checks every counter against brute force.
"""

from .paths import (
    PathClass,
    PathStats,
    PathWord,
    Step,
    classify,
    is_dispersed_dyck,
    is_dyck,
    is_plain_path,
    one_ascent_positions,
    parse_path,
    stats,
)
from .enumeration import (
    DEFAULT_ENUMERATION_CAP,
    CountRow,
    CountTable,
    DistributionTable,
    count_ddp_dp,
    enumerate_ddp,
    enumerate_dyck,
    enumerate_plain,
    k_ascent_total,
    one_ascent_distribution,
    totals_brute,
)
from .bijections import (
    BijectionRecord,
    SlotKind,
    SlotRef,
    ascent_insert,
    ascent_remove,
    ddp_to_plain,
    plain_to_ddp,
    r_pair_decomposition,
    updown_forward,
    updown_inverse,
)
from .formulas import (
    AsymptoticEstimate,
    a_asymptotic,
    a_closed,
    asymptotic_ratio,
    catalan,
    central_binomial,
    dyck_count,
    r_closed,
    r_convolution,
    u_closed,
)
from .verify import CHECK_IDS, CheckResult, VerificationReport, verify_all, verify_lemma

__version__ = "0.1.0"

__all__ = [
    "PathClass",
    "PathStats",
    "PathWord",
    "Step",
    "classify",
    "is_dispersed_dyck",
    "is_dyck",
    "is_plain_path",
    "one_ascent_positions",
    "parse_path",
    "stats",
    "DEFAULT_ENUMERATION_CAP",
    "CountRow",
    "CountTable",
    "DistributionTable",
    "count_ddp_dp",
    "enumerate_ddp",
    "enumerate_dyck",
    "enumerate_plain",
    "k_ascent_total",
    "one_ascent_distribution",
    "totals_brute",
    "BijectionRecord",
    "SlotKind",
    "SlotRef",
    "ascent_insert",
    "ascent_remove",
    "ddp_to_plain",
    "plain_to_ddp",
    "r_pair_decomposition",
    "updown_forward",
    "updown_inverse",
    "AsymptoticEstimate",
    "a_asymptotic",
    "a_closed",
    "asymptotic_ratio",
    "catalan",
    "central_binomial",
    "dyck_count",
    "r_closed",
    "r_convolution",
    "u_closed",
    "CHECK_IDS",
    "CheckResult",
    "VerificationReport",
    "verify_all",
    "verify_lemma",
]
