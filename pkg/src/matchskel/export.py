"""DOT and JSON rendering of skeletons, degree breakdowns and reports."""

from __future__ import annotations

import json

from .skeleton import SkeletonGraph, stats


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(s: SkeletonGraph) -> str:
    """Undirected DOT; nodes named ``e1,e3`` (``∅`` for the empty matching)
    and labelled with their ``u-v`` edges."""
    names = [m.short_name() for m in s.matchings]
    lines = ["graph skeleton {"]
    for m, name in zip(s.matchings, names):
        lines.append(f"  {_quote(name)} [label={_quote(m.describe())}];")
    for i, j in s.edges():
        lines.append(f"  {_quote(names[i])} -- {_quote(names[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def skeleton_to_dict(s: SkeletonGraph) -> dict:
    out = stats(s).to_dict()
    g = s.source
    out["matchings"] = [[g.edge_label(e) for e in m.edges] for m in s.matchings]
    out["adjacency"] = [list(a) for a in s.adjacency]
    return out


def export_json(obj) -> str:
    """JSON text for a skeleton, or anything with a ``to_dict`` method."""
    if isinstance(obj, SkeletonGraph):
        data = skeleton_to_dict(obj)
    elif hasattr(obj, "to_dict"):
        data = obj.to_dict()
    else:
        data = obj
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
