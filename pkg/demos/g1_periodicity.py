"""Build the coclass-1 graph for a few primes and print its periodicity.

    python demos/g1_periodicity.py [max_order]
"""
import sys

from semicoclass import graph as gr
from semicoclass import semigroup as sg

max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 11
levels = sg.census(1, 2, max_order)

for p in (3, 5):
    g = gr.build_graph(1, p, 2, max_order, levels=levels)
    print(f"p={p}  sqrt(-1) in GF(p): {g.params['sqrt_minus_one']}")
    for dim in g.dims():
        print(f"  dim {dim:2d}: labels {[v.label for v in g.level(dim)]}")
    for rep in gr.analyze(g):
        kind = "strong" if rep.strong else "weak"
        print(f"  tree at {rep.root}: (l, k) = ({rep.defect}, {rep.period}) {kind}")
        for f in rep.families:
            print(f"    family from {f.root}: {f}")
