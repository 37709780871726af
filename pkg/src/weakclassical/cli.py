"""Command-line front end.

Exit codes: 0 success, 1 an ASSERT check failed, 2 not applicable or
degenerate input, 3 usage error (bad flags, bad spec, unknown id).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import AlgebraError, NotApplicable, NotProper, SpecSyntaxError, TooLarge, UnknownGoal, UnknownTheorem
from .modules import colon_ring, module_flags
from .predicates import CLASSES, classify
from .rings import is_weakly_prime_ideal
from .theorems import Bounds, parse_instance, run_suite, search_counterexample, theorem_ids, verify_instance
from .theorems.outcome import ASSERT

EXIT_OK, EXIT_FAIL, EXIT_NA, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser():
    p = _Parser(prog="weakclassical", description="Decide submodule classes over finite rings and "
                                                   "verify the weakly classical prime theorems exhaustively.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(q, spec_required=False):
        q.add_argument("--spec", required=spec_required, help="instance spec text, or a file holding it")
        q.add_argument("--format", choices=("json", "md"), default="json")
        q.add_argument("--out", help="write the report here instead of stdout")

    q = sub.add_parser("classify", help="decide all six classes for one submodule")
    common(q, spec_required=True)
    q = sub.add_parser("verify", help="run theorem checks on one instance or on the whole sweep")
    common(q)
    q.add_argument("--theorem", default="all", help="theorem id, comma-separated ids, or 'all'")
    q.add_argument("--mode", choices=("ASSERT", "OBSERVE", "all"), default="all")
    q.add_argument("--bounds", default="", help="ringmax=<n>,modmax=<n>,arity=<k>[,targeted=<n>]")
    q.add_argument("--workers", type=_positive, default=1)
    q = sub.add_parser("search", help="first counterexample for a goal, in canonical order")
    common(q)
    q.add_argument("--goal", required=True)
    q.add_argument("--bounds", default="")
    q = sub.add_parser("enumerate", help="list every submodule of a module")
    common(q, spec_required=True)
    return p


def parse_spec(text):
    """Instance from inline text or from the file it names."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    return parse_instance(text)


def _labels(xs):
    return [list(x) if isinstance(x, tuple) else x for x in (_list(v) for v in xs)]


def _list(x):
    return [_list(v) for v in x] if isinstance(x, tuple) else x


# -- commands --------------------------------------------------------------------------


def cmd_classify(args):
    inst = parse_spec(args.spec)
    N = inst.submodule
    M = N.module
    report = classify(N)
    flags = module_flags(M, N)
    colon = colon_ring(N, M.whole)
    colon_wp = is_weakly_prime_ideal(colon)
    data = {
        "instance": inst.to_text(),
        "classes": {name: getattr(report, name) for name in CLASSES},
        "witnesses": {k: _list(v) for k, v in report.witnesses.items()},
        "colon": {"generators": _list(colon.canonical_generators), "weakly_prime": bool(colon_wp),
                  "witness": None if colon_wp else _list(colon_wp.witness)},
        "annihilator": _list(flags.annihilator.canonical_generators),
        "submodule": {"generators": _list(inst.subs[0]), "size": N.size, "elements": _labels(N.elements)},
        "module": {"descriptor": M.descriptor, "size": M.size, "faithful": flags.faithful,
                   "torsion_free": flags.torsion_free, "cyclic": flags.cyclic},
    }
    if args.format == "md":
        lines = [f"# {inst.to_text()}", "", "| class | holds | witness |", "|---|---|---|"]
        for name in CLASSES:
            w = data["witnesses"].get(name)
            lines.append(f"| {name} | {data['classes'][name]} | {'' if w is None else json.dumps(w)} |")
        c = data["colon"]
        lines += ["", f"(N:M) generated by {c['generators']}, weakly prime: {c['weakly_prime']}"
                      + ("" if c["weakly_prime"] else f" (witness {json.dumps(c['witness'])})"),
                  f"Ann(M) generated by {data['annihilator']}"]
        return EXIT_OK, "\n".join(lines) + "\n"
    return EXIT_OK, _json(data)


def _json(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _modes(args):
    return None if args.mode == "all" else args.mode


def cmd_verify(args):
    ids = theorem_ids(args.theorem)
    if args.spec:
        inst = parse_spec(args.spec)
        outcomes = verify_instance(inst, ids, _modes(args), Bounds.parse(args.bounds).targeted)
        failed = any(o.failed and o.mode == ASSERT for o in outcomes)
        data = {"instance": inst.to_text(), "outcomes": [o.to_dict() for o in outcomes]}
        if args.format == "md":
            lines = [f"# {inst.to_text()}", "", "| theorem | mode | status | detail |", "|---|---|---|---|"]
            for o in outcomes:
                detail = o.reason or ("" if o.witness is None else json.dumps(o.witness, sort_keys=True))
                lines.append(f"| {o.theorem} | {o.mode} | {o.status} | {detail} |")
            text = "\n".join(lines) + "\n"
        else:
            text = _json(data)
        return (EXIT_FAIL if failed else EXIT_OK), text
    report = run_suite(Bounds.parse(args.bounds), ids, _modes(args), args.workers)
    text = report.to_markdown() if args.format == "md" else report.to_json()
    return report.exit_code, text


def cmd_search(args):
    result = search_counterexample(args.goal, Bounds.parse(args.bounds))
    if args.format == "md":
        if result.found:
            text = (f"# {args.goal}: found\n\n`{result.instance.to_text()}`\n\n"
                    f"witness: `{json.dumps(result.witness, sort_keys=True)}`\n")
        else:
            text = f"# {args.goal}: NotFound\n\nSearched {result.modules_searched} modules.\n"
        return EXIT_OK, text
    return EXIT_OK, _json(result.to_dict())


def cmd_enumerate(args):
    inst = parse_spec(args.spec)
    M = inst.build_module()
    subs = [{"generators": _list(N.generators), "size": N.size, "elements": _labels(N.elements)}
            for N in M.submodules]
    if args.format == "md":
        lines = [f"# Submodules of {M.descriptor} ({len(subs)})", ""]
        lines += [f"- sub({','.join(json.dumps(g) for g in s['generators'])}) size {s['size']}" for s in subs]
        return EXIT_OK, "\n".join(lines) + "\n"
    return EXIT_OK, _json({"module": M.descriptor, "count": len(subs), "submodules": subs})


COMMANDS = {"classify": cmd_classify, "verify": cmd_verify, "search": cmd_search, "enumerate": cmd_enumerate}


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        code, text = COMMANDS[args.command](args)
    except (NotProper, NotApplicable, TooLarge) as exc:
        _emit(_json({"error": type(exc).__name__, "message": str(exc), "status": "NotApplicable"})
              if args.format == "json" else f"NotApplicable: {exc}\n", args.out)
        return EXIT_NA
    except (SpecSyntaxError, UnknownTheorem, UnknownGoal, AlgebraError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
