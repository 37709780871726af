"""Walk through the small instances that separate the submodule classes.

Run with ``python3 demos/separating_examples.py``.
"""

from weakclassical import CLASSES, classify, colon_ring, is_weakly_prime_ideal
from weakclassical.theorems import GOALS, parse_instance, search_counterexample

FIXTURES = [
    ("zero submodule of Z4 over the integers", "ring=ZZ; mod=ab(4); sub=sub()"),
    ("4Z8 over the integers", "ring=ZZ; mod=ab(8); sub=sub(4)"),
    ("zero submodule of Z2+Z3 over the integers", "ring=ZZ; mod=ab(2,3); sub=sub()"),
]


def show(title, spec):
    N = parse_instance(spec).submodule
    report = classify(N)
    print(f"{title}\n  {spec}")
    for name in CLASSES:
        w = report.witnesses.get(name)
        print(f"  {name:24} {str(getattr(report, name)):5} {'' if w is None else w}")
    colon = colon_ring(N, N.module.whole)
    wp = is_weakly_prime_ideal(colon)
    note = "" if wp else f", witness {wp.witness}"
    print(f"  (N:M) = {colon.canonical_generators}, weakly prime {bool(wp)}{note}\n")


def main():
    for title, spec in FIXTURES:
        show(title, spec)
    print("First instance in canonical order for each search goal:")
    for goal in GOALS:
        r = search_counterexample(goal)
        where = r.instance.to_text() if r.found else "not found"
        print(f"  {goal:18} {where}\n  {'':18} witness {r.witness}")


if __name__ == "__main__":
    main()
