"""Relaxed k-ary trees as ordered DAGs.

A relaxed k-ary tree is an ordered DAG with a unique source (the root) and a
unique sink, in which every node except the sink has out-degree exactly k.
Nodes carry postorder labels from a depth-first traversal of the root: the
sink is always label 1 and the root always the largest label.  Edges on the
DFS spanning tree are "spine" edges; the remaining edges are "pointers" and
always target a node whose postorder traversal is already complete.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

SPINE = "spine"
POINTER = "pointer"


class Child(NamedTuple):
    kind: str
    target: int


class Node(NamedTuple):
    label: int
    children: tuple[Child, ...]


@dataclass(frozen=True)
class RelaxedTree:
    """Immutable candidate tree; `nodes` lists the internal nodes only.

    The sink (label 1, no children) is implicit.  The empty tree (n = 0)
    is the sink alone and is valid.
    """

    k: int
    nodes: tuple[Node, ...]

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def root_label(self) -> int:
        return len(self.nodes) + 1

    def node_map(self) -> dict[int, Node]:
        return {node.label: node for node in self.nodes}


class Violation(NamedTuple):
    code: str
    labels: tuple[int, ...]


@dataclass
class ValidationReport:
    ok: bool
    violations: list[Violation] = field(default_factory=list)

    def first_code(self) -> str | None:
        return self.violations[0].code if self.violations else None


def validate_tree(t: RelaxedTree) -> ValidationReport:
    """Check every relaxed-tree invariant; violations are data, not errors.

    Structural problems (bad arity, bad labels, dangling targets) are
    reported first; traversal-based checks (spine = DFS spanning tree,
    pointer acyclicity, postorder labelling, unique source) run only when
    the structure is sound enough to traverse.
    """
    violations: list[Violation] = []
    if t.k < 2:
        violations.append(Violation("arity-k", ()))
        return ValidationReport(False, violations)

    n = len(t.nodes)
    labels = [node.label for node in t.nodes]
    seen: set[int] = set()
    for lbl in labels:
        if lbl in seen:
            violations.append(Violation("label-duplicate", (lbl,)))
        seen.add(lbl)
    expected = set(range(2, n + 2))
    if seen != expected:
        bad = tuple(sorted(seen.symmetric_difference(expected)))
        violations.append(Violation("label-range", bad))

    known = seen | {1}
    for node in t.nodes:
        if len(node.children) != t.k:
            violations.append(Violation("arity", (node.label,)))
        for child in node.children:
            if child.kind not in (SPINE, POINTER):
                violations.append(Violation("edge-kind", (node.label,)))
            if child.target not in known:
                violations.append(Violation("dangling-target", (node.label, child.target)))

    if violations:
        return ValidationReport(False, violations)
    if n == 0:
        return ValidationReport(True, [])

    # DFS from the root, recomputing the spanning tree instead of trusting
    # the spine tags.  An edge is a spanning edge iff it first-visits its
    # target; pointers must target postorder-completed nodes.
    node_map = t.node_map()
    root = n + 1
    visited = {root}
    completed: set[int] = set()
    post_number: dict[int, int] = {}
    counter = 0
    # frame: (label, child index)
    stack: list[list] = [[root, 0]]
    while stack:
        frame = stack[-1]
        label = frame[0]
        node = node_map[label]
        if frame[1] == len(node.children):
            counter += 1
            post_number[label] = counter
            completed.add(label)
            stack.pop()
            continue
        child = node.children[frame[1]]
        frame[1] += 1
        target = child.target
        if target not in visited:
            # spanning edge
            if child.kind != SPINE:
                violations.append(Violation("spine-tag", (label, target)))
                if target not in completed:
                    violations.append(Violation("pointer-order", (label, target)))
            visited.add(target)
            if target == 1:
                counter += 1
                post_number[1] = counter
                completed.add(1)
            else:
                stack.append([target, 0])
        else:
            if child.kind != POINTER:
                violations.append(Violation("spine-tag", (label, target)))
            if child.kind == POINTER and target not in completed:
                violations.append(Violation("pointer-order", (label, target)))

    unreachable = tuple(sorted(known - visited))
    if unreachable:
        violations.append(Violation("unreachable", unreachable))

    for label, number in sorted(post_number.items()):
        if label != number:
            violations.append(Violation("postorder", (label,)))

    # every non-root node needs an incoming edge (unique source)
    indegree = {lbl: 0 for lbl in known}
    for node in t.nodes:
        for child in node.children:
            indegree[child.target] += 1
    sources = tuple(sorted(lbl for lbl, deg in indegree.items() if deg == 0 and lbl != root))
    if sources:
        violations.append(Violation("unique-source", sources))

    return ValidationReport(not violations, violations)


def fringe_key(t: RelaxedTree, label: int) -> str:
    """Canonical serialization of the fully unfolded k-ary tree below `label`.

    Spine and pointer children are unfolded uniformly.  Keys are built
    bottom-up over ascending labels, which both memoizes shared nodes and
    guarantees termination: in a valid tree every child target carries a
    smaller postorder label than its parent.
    """
    keys = _fringe_keys(t)
    if label not in keys:
        raise ValueError(f"no-such-node: {label}")
    return keys[label]


def _fringe_keys(t: RelaxedTree) -> dict[int, str]:
    keys = {1: "s"}
    for node in sorted(t.nodes, key=lambda nd: nd.label):
        parts = []
        for child in node.children:
            if child.target >= node.label or child.target not in keys:
                raise ValueError(
                    f"invalid-tree: node {node.label} references {child.target}, "
                    "which is not postorder-complete"
                )
            parts.append(keys[child.target])
        keys[node.label] = "(" + "".join(parts) + ")"
    return keys


def is_cherry(node: Node) -> bool:
    """An internal node whose k children are all pointers."""
    return all(child.kind == POINTER for child in node.children)


def is_compacted(t: RelaxedTree) -> bool:
    """True iff all fringe subtrees of internal nodes are pairwise distinct.

    Evaluates two independent criteria and cross-asserts them: distinctness
    of the canonical fringe keys, and absence of a pair (u, v) with the same
    ordered child targets where v is a cherry.
    """
    report = validate_tree(t)
    if not report.ok:
        raise ValueError(f"invalid-tree: {report.first_code()}")
    keys = _fringe_keys(t)
    by_key = len({keys[node.label] for node in t.nodes})
    distinct_keys = by_key == len(t.nodes)

    by_targets: dict[tuple[int, ...], list[Node]] = {}
    for node in t.nodes:
        by_targets.setdefault(tuple(c.target for c in node.children), []).append(node)
    dup_with_cherry = any(
        len(group) >= 2 and any(is_cherry(nd) for nd in group)
        for group in by_targets.values()
    )
    if distinct_keys != (not dup_with_cherry):
        raise AssertionError(
            "fringe-key and cherry criteria disagree on "
            f"k={t.k} tree with {t.n} internal nodes"
        )
    return distinct_keys


def smallest_tree(k: int) -> RelaxedTree:
    """One internal node: first child spine to the sink, k-1 pointers to it."""
    children = (Child(SPINE, 1),) + (Child(POINTER, 1),) * (k - 1)
    return RelaxedTree(k, (Node(2, children),))


def to_document(t: RelaxedTree) -> dict:
    return {
        "k": t.k,
        "sink": 1,
        "nodes": [
            {
                "label": node.label,
                "children": [{"type": c.kind, "target": c.target} for c in node.children],
            }
            for node in sorted(t.nodes, key=lambda nd: nd.label)
        ],
    }


def from_document(doc: dict) -> RelaxedTree:
    try:
        k = doc["k"]
        sink = doc["sink"]
        raw_nodes = doc["nodes"]
        if not isinstance(k, int) or not isinstance(raw_nodes, list) or sink != 1:
            raise ValueError
        nodes = []
        for raw in raw_nodes:
            children = tuple(
                Child(str(c["type"]), int(c["target"])) for c in raw["children"]
            )
            nodes.append(Node(int(raw["label"]), children))
    except (KeyError, TypeError, ValueError):
        raise ValueError("tree-format: not a valid tree document") from None
    return RelaxedTree(k, tuple(nodes))


def dumps(t: RelaxedTree) -> str:
    return json.dumps(to_document(t), indent=2) + "\n"


def loads(text: str) -> RelaxedTree:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        raise ValueError("tree-format: not valid JSON") from None
    return from_document(doc)
