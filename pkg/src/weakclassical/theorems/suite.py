"""Single-instance verification and the exhaustive suite runner."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..errors import InvalidParameter, UnknownTheorem
from ..grammar import build_module
from .checks import THEOREMS, run_checks
from .instances import Bounds, generate_modules, instance_for
from .outcome import ASSERT, FAIL, NOT_APPLICABLE, OBSERVE, OBSERVED, PASS, CheckOutcome

GALLERY_LIMIT = 25  # entries kept per (theorem, mode)
WITNESS_LIMIT = 5


def theorem_ids(selection=None):
    """Resolve ``None``/``"all"``/an id/a list of ids to registry order."""
    if selection is None or selection == "all":
        return list(THEOREMS)
    if isinstance(selection, str):
        selection = [s.strip() for s in selection.split(",") if s.strip()]
    unknown = [s for s in selection if s not in THEOREMS]
    if unknown:
        raise UnknownTheorem(f"unknown theorem id {unknown[0]!r}")
    return [t for t in THEOREMS if t in selection]


def _mode_list(modes):
    if modes is None:
        return (ASSERT, OBSERVE)
    if isinstance(modes, str):
        modes = [modes]
    for m in modes:
        if m not in (ASSERT, OBSERVE):
            raise InvalidParameter(f"unknown mode {m!r}")
    return tuple(modes)


def _outcomes(theorem, N, instance, modes, targeted):
    start = time.perf_counter()
    result = run_checks(theorem, N, targeted)
    elapsed = time.perf_counter() - start
    out = []
    for mode in theorem.modes:
        if mode not in modes:
            continue
        st = result[mode]
        out.append(CheckOutcome(theorem.id, mode, st.status, instance, st.truth, st.witness,
                                st.reason, elapsed))
    return out


def verify_theorem(instance, theorem_id, mode=None, targeted=Bounds().targeted):
    """Run one theorem on the first submodule of ``instance``.

    ``mode`` defaults to ASSERT when the theorem has an asserted part.
    """
    if theorem_id not in THEOREMS:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")
    th = THEOREMS[theorem_id]
    mode = mode or th.modes[0]
    if mode not in th.modes:
        raise InvalidParameter(f"{theorem_id} has no {mode} part (modes: {', '.join(th.modes)})")
    return _outcomes(th, instance.submodule, instance, (mode,), targeted)[0]


def verify_instance(instance, theorems=None, modes=None, targeted=Bounds().targeted):
    """All requested (theorem, mode) outcomes on one instance, in registry order."""
    N = instance.submodule
    out = []
    for tid in theorem_ids(theorems):
        out.extend(_outcomes(THEOREMS[tid], N, instance, _mode_list(modes), targeted))
    return out


# -- aggregation ---------------------------------------------------------------------


@dataclass
class TheoremTally:
    id: str
    mode: str
    counts: dict = field(default_factory=lambda: {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0, "observed_true": 0,
                                                  "observed_false": 0})
    notable: list = field(default_factory=list)

    def add(self, o):
        if o.status == OBSERVED:
            self.counts["observed_true" if o.truth else "observed_false"] += 1
        else:
            self.counts[o.status] += 1
        if (o.failed or (o.status == OBSERVED and not o.truth)) and len(self.notable) < GALLERY_LIMIT:
            self.notable.append(o.to_dict())

    def merge(self, other):
        for k, v in other.counts.items():
            self.counts[k] += v
        room = GALLERY_LIMIT - len(self.notable)
        self.notable.extend(other.notable[:max(room, 0)])

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def vacuous(self):
        """No instance met the hypotheses."""
        return self.total > 0 and self.counts[NOT_APPLICABLE] == self.total

    def to_dict(self):
        c = self.counts
        return {"id": self.id, "mode": self.mode, "pass": c[PASS], "fail": c[FAIL], "na": c[NOT_APPLICABLE],
                "observed_true": c["observed_true"], "observed_false": c["observed_false"],
                "total": self.total, "vacuous": self.vacuous,
                "witnesses": [{"instance": e["instance"], "witness": e.get("witness")}
                              for e in self.notable[:WITNESS_LIMIT]]}


@dataclass
class SuiteReport:
    """Aggregated outcomes of a sweep; ``to_json`` is byte-deterministic."""

    bounds: Bounds
    tallies: list
    modules: int = 0
    instances: int = 0

    @property
    def assert_failures(self):
        return sum(t.counts[FAIL] for t in self.tallies if t.mode == ASSERT)

    @property
    def exit_code(self):
        return 1 if self.assert_failures else 0

    def tally(self, theorem_id, mode=ASSERT):
        for t in self.tallies:
            if t.id == theorem_id and t.mode == mode:
                return t
        raise KeyError((theorem_id, mode))

    @property
    def gallery(self):
        return [e for t in self.tallies for e in t.notable]

    def to_dict(self):
        return {"bounds": self.bounds.to_dict(), "modules": self.modules, "instances": self.instances,
                "assert_failures": self.assert_failures, "theorems": [t.to_dict() for t in self.tallies],
                "gallery": self.gallery}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_markdown(self):
        lines = [f"# Verification report", "",
                 f"Bounds: {', '.join(f'{k}={v}' for k, v in self.bounds.to_dict().items())}  ",
                 f"Modules: {self.modules}, instances: {self.instances}, ASSERT failures: {self.assert_failures}",
                 "", "| theorem | mode | pass | fail | n/a | observed true | observed false | note |",
                 "|---|---|---|---|---|---|---|---|"]
        for t in self.tallies:
            c = t.counts
            note = "VACUOUS" if t.vacuous else ""
            lines.append(f"| {t.id} | {t.mode} | {c[PASS]} | {c[FAIL]} | {c[NOT_APPLICABLE]} | "
                         f"{c['observed_true']} | {c['observed_false']} | {note} |")
        gal = self.gallery
        lines += ["", "## Gallery", ""]
        if not gal:
            lines.append("No failures and no observed-false findings.")
        for e in gal:
            lines.append(f"- {e['theorem']} {e['mode']} {e['status']}: `{e['instance']}` "
                         f"witness `{json.dumps(e.get('witness'), sort_keys=True)}`")
        return "\n".join(lines) + "\n"


def _fresh_tallies(ids, modes):
    return [TheoremTally(t, m) for t in ids for m in THEOREMS[t].modes if m in modes]


def _check_module(M, ids, modes, targeted):
    tallies = _fresh_tallies(ids, modes)
    index = {(t.id, t.mode): t for t in tallies}
    count = 0
    for N in M.submodules:
        if N.is_whole:
            continue
        count += 1
        inst = instance_for(N)
        for tid in ids:
            for o in _outcomes(THEOREMS[tid], N, inst, modes, targeted):
                index[(o.theorem, o.mode)].add(o)
    return count, tallies


def _worker(args):
    descriptor, ids, modes, targeted = args
    return _check_module(build_module(descriptor), ids, modes, targeted)


def run_suite(bounds=None, theorems=None, modes=None, workers=1):
    """Apply the selected checks to every generated instance and aggregate.

    Modules are processed independently; with ``workers > 1`` they are
    farmed out to a process pool and merged back in generation order, so the
    report does not depend on the worker count.
    """
    b = bounds or Bounds()
    ids = theorem_ids(theorems)
    modes = _mode_list(modes)
    if int(workers) < 1:
        raise InvalidParameter("worker count must be at least 1")
    report = SuiteReport(b, _fresh_tallies(ids, modes))
    index = {(t.id, t.mode): t for t in report.tallies}

    def absorb(result):
        count, tallies = result
        report.modules += 1
        report.instances += count
        for t in tallies:
            index[(t.id, t.mode)].merge(t)

    if workers == 1:
        for M in generate_modules(b):
            absorb(_check_module(M, ids, modes, b.targeted))
    else:
        jobs = [(M.descriptor, ids, modes, b.targeted) for M in generate_modules(b)]
        with ProcessPoolExecutor(max_workers=int(workers)) as pool:
            for result in pool.map(_worker, jobs, chunksize=1):
                absorb(result)
    return report


__all__ = ["SuiteReport", "TheoremTally", "run_suite", "theorem_ids", "verify_instance", "verify_theorem"]
