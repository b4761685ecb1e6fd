"""
Reduction graphs
================

Build the star-shaped graph of a special datum, serialize it, and
watch the validator reject a broken copy.
"""

import json

from stabred.graph import ComponentNode, ReductionGraph, graph_from_datum, graph_to_json, graph_validate_special_shape
from stabred.modular import build_x2p_datum

g = graph_from_datum(build_x2p_datum(7))
for node in g.nodes:
    print(f"  {node.id}  {node.kind:<8}  inertia {node.inertia}  attach {node.attach}  marks {sorted(node.marks)}")
print(json.dumps(graph_to_json(g))[:120], "...")
print("valid:", graph_validate_special_shape(g, 7).passed)

# move the second tail onto the first one's attach point
bad = list(g.nodes)
n = bad[2]
bad[2] = ComponentNode(n.id, n.kind, n.inertia, bad[1].attach, n.marks)
report = graph_validate_special_shape(ReductionGraph(tuple(bad), g.field), 7)
print("violations:", report.violations)
