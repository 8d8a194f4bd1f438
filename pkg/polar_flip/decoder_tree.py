"""Pruned decoder trees built from a code's frozen pattern."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

import numpy as np

from .config import NodeKind, TreeConstraints
from .exceptions import DecoderError
from .models.code import PolarCode

__all__ = ["TreeNode", "DecoderTree", "classify_span", "build_decoder_tree"]


@dataclass
class TreeNode:
    """A node of the decoder tree covering u-domain positions [lo, hi)."""

    node_id: int
    kind: NodeKind
    lo: int
    hi: int
    depth: int
    info_offset: int = 0
    k_v: int = 0
    parent: Optional[TreeNode] = field(default=None, repr=False)
    children: List[TreeNode] = field(default_factory=list, repr=False)

    @property
    def width(self) -> int:
        return self.hi - self.lo

    @property
    def left(self) -> Optional[TreeNode]:
        return self.children[0] if self.children else None

    @property
    def right(self) -> Optional[TreeNode]:
        return self.children[1] if self.children else None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def add_child(self, child: TreeNode) -> None:
        """Add a child node."""
        child.parent = self
        self.children.append(child)

    def get_path(self) -> str:
        """Left/right path from the root, e.g. ``"LR"`` ("" for the root)."""
        if self.parent is None:
            return ""
        step = "L" if self.parent.children[0] is self else "R"
        return f"{self.parent.get_path()}{step}"

    def describe(self) -> str:
        return f"{self.kind.value}(w={self.width}, u=[{self.lo},{self.hi}), k={self.k_v})"


def _pattern_kinds(frozen: np.ndarray) -> List[NodeKind]:
    """Every leaf kind whose frozen pattern matches, in precedence order."""
    width = frozen.size
    unfrozen = int(width - frozen.sum())
    kinds: List[NodeKind] = []
    if unfrozen == 0:
        kinds.append(NodeKind.RATE0)
    if unfrozen == width:
        kinds.append(NodeKind.RATE1)
    if unfrozen == 1 and not frozen[-1]:
        kinds.append(NodeKind.REP)
    if width >= 4 and unfrozen == 2 and not frozen[-1] and not frozen[-2]:
        kinds.append(NodeKind.BIREP)
    if unfrozen == width - 1 and frozen[0]:
        kinds.append(NodeKind.SPC)
    return kinds


def classify_span(frozen: np.ndarray, constraints: TreeConstraints) -> NodeKind:
    """Leaf kind for a span with frozen mask ``frozen``, or Branch.

    Width-1 spans are always Rate0 or Rate1 whatever the constraints say.
    """
    if frozen.size == 1:
        return NodeKind.RATE0 if frozen[0] else NodeKind.RATE1
    for kind in _pattern_kinds(frozen):
        if constraints.allows(kind, frozen.size):
            return kind
    return NodeKind.BRANCH


_INFO_BITS = {
    NodeKind.RATE0: lambda width: 0,
    NodeKind.RATE1: lambda width: width,
    NodeKind.REP: lambda width: 1,
    NodeKind.BIREP: lambda width: 2,
    NodeKind.SPC: lambda width: width - 1,
}


@dataclass
class DecoderTree:
    """Decoder tree of a code under a set of node constraints.

    ``nodes`` lists every node in pre-order; a node's ``node_id`` is its
    position in that list.
    """

    code: PolarCode
    constraints: TreeConstraints
    root: TreeNode
    nodes: List[TreeNode] = field(default_factory=list)

    def __post_init__(self):
        if not self.nodes:
            self.nodes = list(self.iter_nodes())

    def iter_nodes(self) -> Iterator[TreeNode]:
        """Depth-first, left-to-right (pre-order) traversal."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaves(self) -> List[TreeNode]:
        """Leaves from left to right; their spans tile [0, N)."""
        return [node for node in self.nodes if node.is_leaf]

    def get(self, node_id: int) -> TreeNode:
        if not 0 <= node_id < len(self.nodes):
            raise DecoderError(
                f"Node {node_id} is not part of the decoder tree", {"node_id": node_id, "nodes": len(self.nodes)}
            )
        return self.nodes[node_id]

    def kind_counts(self) -> Dict[str, int]:
        """Number of nodes of each kind."""
        counts = Counter(node.kind.value for node in self.nodes)
        return {kind.value: counts.get(kind.value, 0) for kind in NodeKind}

    def dump(self, indent: str = "  ") -> str:
        """Human-readable indented rendering of the tree."""
        lines = [f"{indent * node.depth}[{node.node_id}] {node.describe()}" for node in self.nodes]
        return "\n".join(lines)


def build_decoder_tree(code: PolarCode, constraints: Optional[TreeConstraints] = None) -> DecoderTree:
    """
    Split the code into constituent-code leaves.

    Args:
        code: The polar code whose frozen pattern drives the split
        constraints: Node-size limits and enabled kinds (defaults apply when omitted)

    Returns:
        DecoderTree with pre-order node ids and per-leaf information offsets
    """
    constraints = constraints or TreeConstraints()
    mask = code.frozen_mask
    counter = [0, 0]  # next node id, next information ordinal

    def build(lo: int, hi: int, depth: int) -> TreeNode:
        kind = classify_span(mask[lo:hi], constraints)
        node = TreeNode(node_id=counter[0], kind=kind, lo=lo, hi=hi, depth=depth)
        counter[0] += 1
        if kind is NodeKind.BRANCH:
            mid = (lo + hi) // 2
            node.add_child(build(lo, mid, depth + 1))
            node.add_child(build(mid, hi, depth + 1))
            node.info_offset = node.children[0].info_offset
            node.k_v = node.children[0].k_v + node.children[1].k_v
        else:
            node.info_offset = counter[1]
            node.k_v = _INFO_BITS[kind](hi - lo)
            counter[1] += node.k_v
        return node

    root = build(0, code.n_bits, 0)
    return DecoderTree(code=code, constraints=constraints, root=root)
