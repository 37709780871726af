"""Classical triple-zeros and the seven equivalent conditions, side by side.

A weakly classical prime submodule fails to be classical prime exactly
when it has a triple-zero. This script lists them for a few cyclic
modules and shows the main conditions agreeing.
"""

from weakclassical import classical_triple_zeros, classify, main_conditions
from weakclassical.theorems import parse_instance

SPECS = [
    "mod=cyc(Z4;0); sub=sub()",
    "mod=cyc(Z8;0); sub=sub(4)",
    "mod=cyc(Z12;0); sub=sub(6)",
    "mod=dsum(cyc(Z4;0),cyc(Z4;2)); sub=sub()",
]


def main():
    for spec in SPECS:
        N = parse_instance(spec).submodule
        r = classify(N)
        cond = main_conditions(N)
        print(spec)
        print(f"  wcp {r.weakly_classical_prime}, classical prime {r.classical_prime}")
        print(f"  main conditions {['T' if t else 'F' for t in cond.truth]}")
        if r.weakly_classical_prime:
            tz = classical_triple_zeros(N)
            shown = ", ".join(f"({t.a},{t.b},{t.m})" for t in tz[:6])
            more = f" and {len(tz) - 6} more" if len(tz) > 6 else ""
            print(f"  {len(tz)} triple-zeros: {shown}{more}")
        print()


if __name__ == "__main__":
    main()
