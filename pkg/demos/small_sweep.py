"""Run the theorem harness over a small bound and print the markdown report.

The default bounds take about a minute on one core; this demo uses a
bound that finishes in a few seconds. Pass ``--workers`` to the CLI for
the full sweep instead.
"""

import sys

from weakclassical.theorems import Bounds, run_suite


def main():
    report = run_suite(Bounds(ringmax=8, modmax=16, arity=2))
    sys.stdout.write(report.to_markdown())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
