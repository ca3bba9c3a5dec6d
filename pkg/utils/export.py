"""DOT, JSON and CSV renderings of graphs and reports"""

import csv
import io
import json
from typing import Dict, Iterable, List, Sequence

from cluster import VERSION
from cluster.flipgraph import ExchangeGraph, GeodesicCycle


def _diagonals(T) -> List[List[int]]:
    return [[d.a, d.b] for d in T.diagonals]


def graph_to_dot(graph: ExchangeGraph) -> str:
    """Directed along edge orientation; nodes show diagonals, edges their 4-set"""
    lines = [f"digraph exchange_n{graph.n} {{",
             f'  graph [comment="assoc {VERSION} n={graph.n}"];',
             "  node [shape=box, fontsize=10];"]
    for i, T in enumerate(graph.nodes):
        lines.append(f'  {i} [label="{i}: {" ".join(str(d) for d in T.diagonals)}"];')
    for e in graph.edges:
        lines.append(f'  {e.tail} -> {e.head} [label="{",".join(map(str, e.label))}"];')
    lines.append("}")
    return "\n".join(lines)


def graph_to_dict(graph: ExchangeGraph, five_cycles: Sequence[GeodesicCycle] = ()) -> Dict:
    return {
        "version": VERSION,
        "n": graph.n,
        "nodes": [_diagonals(T) for T in graph.nodes],
        "edges": [{"u": e.tail, "v": e.head, "label": list(e.label)} for e in graph.edges],
        "five_cycles": [{"nodes": list(C.nodes), "label": list(C.label)} for C in five_cycles],
    }


def to_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def rows_to_csv(rows: Iterable[Dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()
