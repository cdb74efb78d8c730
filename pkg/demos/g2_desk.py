"""Desk-scale coclass-2 graph: maximal trees, main lines and a DOT file.

    python demos/g2_desk.py [prime] [max_order]
Writes g2_<p>.dot in the current directory.
"""
import sys

from semicoclass import graph as gr
from semicoclass import semigroup as sg

p = int(sys.argv[1]) if len(sys.argv) > 1 else 5
max_order = int(sys.argv[2]) if len(sys.argv) > 2 else 8
g = gr.build_graph(2, p, 2, max_order)
top = g.max_dim
print(f"G(2, GF({p}), 2) up to order {max_order}: {len(g)} vertices")
print("vertices per dim:", {d: len(g.level(d)) for d in g.dims()})
print("trees, plain horizon:", gr.maximal_trees(g))
# look one level further before calling a branch alive
print("trees, horizon", top - 1, "reach", top, ":", gr.maximal_trees(g, top - 1, top))
# a class-c main-line semigroup has order c+3, so its algebra has dimension c+2
for i in range(1, 6):
    vid = g.vertex_of_semigroup(sg.semigroup_id(sg.cc2_mainline(i, top - 3)))
    print(f"  main line {i}: class {top - 3} is vertex {vid}")
with open(f"g2_{p}.dot", "w") as fh:
    fh.write(gr.export_dot(g, rankdir="LR"))
print(f"wrote g2_{p}.dot")
