"""Exhaustive verification harness: instances, checks, suite runner and search."""

from .checks import THEOREMS, Theorem, run_checks
from .instances import Bounds, Instance, canonical_generators, generate_instances, generate_modules, instance_for, parse_instance
from .outcome import ASSERT, FAIL, NOT_APPLICABLE, OBSERVE, OBSERVED, PASS, CheckOutcome, Status
from .replay import ReplayResult, replay_outcome
from .search import GOALS, SearchResult, search_counterexample
from .suite import SuiteReport, run_suite, theorem_ids, verify_instance, verify_theorem

__all__ = [
    "ASSERT",
    "Bounds",
    "CheckOutcome",
    "FAIL",
    "GOALS",
    "Instance",
    "NOT_APPLICABLE",
    "OBSERVE",
    "OBSERVED",
    "PASS",
    "ReplayResult",
    "SearchResult",
    "Status",
    "SuiteReport",
    "THEOREMS",
    "Theorem",
    "canonical_generators",
    "generate_instances",
    "generate_modules",
    "instance_for",
    "parse_instance",
    "replay_outcome",
    "run_checks",
    "run_suite",
    "search_counterexample",
    "theorem_ids",
    "verify_instance",
    "verify_theorem",
]
