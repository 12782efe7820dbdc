"""Regenerate frozen.json from the direct (non-Morse) computations."""
import json
from pathlib import Path

from artin_morse.complexes import build_C
from artin_morse.coxeter import brute_force_poincare, family_graph
from artin_morse.oracle import homology_direct

CAPS = {"A": range(1, 6), "B": range(1, 6), "tA": range(2, 5), "tC": range(2, 5)}


def main():
    out = {"homology": {}, "poincare": {}}
    for family, ns in CAPS.items():
        for n in ns:
            table = homology_direct(build_C(family_graph(family, n)))
            out["homology"][f"{family}:{n}"] = table.to_json()
    for kind, ks in (("A", range(1, 6)), ("B", range(1, 5))):
        for k in ks:
            p = brute_force_poincare(kind, k)
            out["poincare"][f"{kind}{k}"] = [int(c) for c in p.dense]
    path = Path(__file__).with_name("frozen.json")
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
