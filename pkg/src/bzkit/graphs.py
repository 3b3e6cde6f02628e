"""Crystal graphs generated from the highest-weight element by lowering operators."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import lusztig_affine as la
from . import lusztig_finite as lf
from .root_data import Interval


@dataclass
class CrystalGraph:
    nodes: list
    depth: dict
    edges: list  # (source index, target index, label)

    def weight_counts(self, weight_fn) -> Counter:
        return Counter(weight_fn(x) for x in self.nodes)


def _closure(root, labels, step, depth: int) -> CrystalGraph:
    seen = {root: 0}
    frontier = [root]
    raw_edges = []
    for d in range(1, depth + 1):
        nxt = []
        for x in frontier:
            for i in labels:
                y = step(x, i)
                if y is None:
                    continue
                raw_edges.append((x, y, i))
                if y not in seen:
                    seen[y] = d
                    nxt.append(y)
        frontier = nxt
    nodes = sorted(seen, key=lambda x: (seen[x], str(x)))
    index = {x: n for n, x in enumerate(nodes)}
    edges = sorted((index[x], index[y], i) for x, y, i in raw_edges)
    return CrystalGraph(nodes, seen, edges)


def finite_closure(interval: Interval, depth: int, op: str = "f_star") -> CrystalGraph:
    return _closure(lf.LusztigFinite.zero(interval), list(interval), lambda a, i: lf.apply(a, i, op), depth)


def affine_closure(l: int, depth: int, op: str = "f_star") -> CrystalGraph:
    return _closure(la.LusztigAffine.zero(l), list(range(l)), lambda a, p: la.apply_hat(a, p, op), depth)


def to_dot(graph: CrystalGraph, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{"]
    for n, x in enumerate(graph.nodes):
        label = str(x).replace('"', '\\"')
        lines.append(f'  n{n} [label="{label}"];')
    for s, t, i in graph.edges:
        lines.append(f'  n{s} -> n{t} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: CrystalGraph) -> dict:
    return {
        "nodes": [{"id": n, "depth": graph.depth[x], "datum": x.to_json()} for n, x in enumerate(graph.nodes)],
        "edges": [{"source": s, "target": t, "label": i} for s, t, i in graph.edges],
    }
