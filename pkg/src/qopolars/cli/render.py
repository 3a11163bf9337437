# src/qopolars/cli/render.py
"""Text, DOT and JSON renderings of trees and reports."""
import json
from typing import Dict, List

from qopolars.roots.types import RootSet
from qopolars.tree.types import EggersTree, EggersVertex, KuoLuTree, PseudoBall
from qopolars.utils.errors import InputSemanticError
from qopolars.verify.types import VerificationReport

FORMATS = ("text", "dot", "json")


def _child_key(tree: KuoLuTree, roots: RootSet, bar: PseudoBall):
    support = () if bar.support is None else bar.support.sort_key()
    return support, roots.owners[bar.members[0]], bar.members


def _ordered_children(tree: KuoLuTree, roots: RootSet, bar: PseudoBall) -> List[PseudoBall]:
    return sorted((tree.bar(c) for c in bar.children), key=lambda b: _child_key(tree, roots, b))


def _leaf_name(tree: KuoLuTree, roots: RootSet, bar: PseudoBall) -> str:
    return roots.root_name(bar.members[0])


def _vertex_children(eggers: EggersTree, vertex: EggersVertex) -> List[EggersVertex]:
    return sorted((eggers.vertex(c) for c in vertex.children), key=lambda v: (v.is_leaf, v.name))


# text


def kuo_lu_text(tree: KuoLuTree, roots: RootSet) -> List[str]:
    lines = [f"Kuo-Lu tree ({tree.degree} roots)"]

    def walk(bar: PseudoBall, depth: int) -> None:
        pad = "  " * depth
        if bar.is_leaf:
            lines.append(f"{pad}- {_leaf_name(tree, roots, bar)}  = {tree.roots[bar.members[0]]}")
            return
        lines.append(f"{pad}bar h={bar.height}  m={bar.m}")
        for child in _ordered_children(tree, roots, bar):
            walk(child, depth + 1)

    walk(tree.bar(tree.root), 1)
    return lines


def eggers_text(eggers: EggersTree) -> List[str]:
    lines = ["Eggers tree"]

    def walk(vertex: EggersVertex, depth: int, dashed: bool) -> None:
        pad = "  " * depth
        edge = "..." if dashed else "-"
        if vertex.is_leaf:
            lines.append(f"{pad}{edge} {vertex.name}")
            return
        lines.append(f"{pad}{edge} {vertex.name} h={vertex.height}  N={vertex.size}  n={vertex.degree}")
        for child in _vertex_children(eggers, vertex):
            walk(child, depth + 1, eggers.edge_dashed(vertex, child))

    for index in eggers.roots:
        walk(eggers.vertex(index), 1, False)
    return lines


# dot


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def kuo_lu_dot(tree: KuoLuTree, roots: RootSet) -> List[str]:
    lines = ["digraph kuolu {", "  node [shape=plaintext];"]
    for bar in tree.bars:
        if bar.is_leaf:
            lines.append(f"  b{bar.index} [label={_quote(_leaf_name(tree, roots, bar))}];")
        else:
            lines.append(f"  b{bar.index} [shape=box, label={_quote(str(bar.height))}];")
    for bar in tree.bars:
        for child in _ordered_children(tree, roots, bar):
            lines.append(f"  b{bar.index} -> b{child.index};")
    lines.append("}")
    return lines


def eggers_dot(eggers: EggersTree) -> List[str]:
    lines = ["digraph eggers {", "  node [shape=plaintext];"]
    for v in eggers.vertices:
        label = v.name if v.is_leaf else f"{v.name} {v.height}"
        lines.append(f"  v{v.index} [label={_quote(label)}];")
    for v in eggers.vertices:
        for child in _vertex_children(eggers, v):
            style = " [style=dashed]" if eggers.edge_dashed(v, child) else ""
            lines.append(f"  v{v.index} -> v{child.index}{style};")
    lines.append("}")
    return lines


def render_tree(tree: KuoLuTree, eggers: EggersTree, roots: RootSet, fmt: str = "text") -> str:
    if fmt == "text":
        return "\n".join(kuo_lu_text(tree, roots) + [""] + eggers_text(eggers))
    if fmt == "dot":
        return "\n".join(kuo_lu_dot(tree, roots) + eggers_dot(eggers))
    if fmt == "json":
        return to_json_text({"kuo_lu": tree.to_json(), "eggers": eggers.to_json()})
    raise InputSemanticError(f"unknown format {fmt!r}; use one of {', '.join(FORMATS)}")


def render_report(report: VerificationReport) -> str:
    lines = [f"Verification: {report.status}"]
    for entry in report.entries:
        where = "" if entry.substitution is None else f" r={entry.substitution}"
        lines.append(f"[{entry.status}] {entry.claim}{where}")
        if entry.predicted is not None or entry.oracle is not None:
            lines.append(f"    predicted {entry.predicted}; oracle {entry.oracle}")
        if entry.detail:
            lines.append(f"    {entry.detail}")
    for note in report.notes:
        lines.append(f"! {note}")
    return "\n".join(lines)


def to_json_text(data: Dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)
