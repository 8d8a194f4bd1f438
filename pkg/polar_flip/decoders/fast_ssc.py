"""Fast-SSC decoding over a pruned decoder tree."""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from ..config import CrcSpec, DecoderVariant, NodeKind, TreeConstraints
from ..decoder_tree import DecoderTree, TreeNode, build_decoder_tree
from ..encoding import polar_transform
from ..exceptions import DecoderError
from ..models.code import PolarCode
from ..models.decision import DecisionEntry, DecisionList, FlipTarget
from ..models.results import DecodeResult
from .base import BaseDecoder
from .kernels import combine, f_minsum, g_llr
from .nodes import NodeDecision, decode_birep, decode_rate0, decode_rate1, decode_rep, decode_spc

__all__ = ["FastSSCDecoder", "fast_ssc_decode", "validate_flip_target"]


def validate_flip_target(tree: DecoderTree, flip: FlipTarget) -> TreeNode:
    """Return the node a flip target refers to, or raise DecoderError."""
    node = tree.get(flip.node_id)
    if not node.is_leaf or not 0 <= flip.local_d < node.k_v:
        raise DecoderError(
            f"Node {flip.node_id} ({node.describe()}) has no information bit {flip.local_d}",
            {"node_id": flip.node_id, "local_d": flip.local_d},
        )
    return node


def _decode_leaf(
    node: TreeNode, alpha: np.ndarray, flip: Optional[int], s_factor: float, t_cap: Optional[int]
) -> NodeDecision:
    if node.kind is NodeKind.RATE0:
        return decode_rate0(alpha)
    if node.kind is NodeKind.RATE1:
        return decode_rate1(alpha, flip)
    if node.kind is NodeKind.REP:
        return decode_rep(alpha, flip)
    if node.kind is NodeKind.BIREP:
        return decode_birep(alpha, flip)
    # SPC decision d belongs to node position d + 1.
    return decode_spc(alpha, s_factor, None if flip is None else flip + 1, t_cap)


def fast_ssc_decode(
    tree: DecoderTree,
    alpha: np.ndarray,
    flip: Optional[FlipTarget] = None,
    s_factor: float = 0.5,
    list_capacity: int = 0,
) -> Tuple[DecodeResult, DecisionList]:
    """
    One fast-SSC pass over ``tree``.

    Args:
        tree: Decoder tree of the code
        alpha: Channel LLRs (length N)
        flip: Decision to invert during this pass
        s_factor: SPC decision-LLR scaling factor
        list_capacity: Number of least reliable decisions to collect (0 skips collection)

    Returns:
        Tuple of (DecodeResult with crc_ok left True, DecisionList of the pass)
    """
    code = tree.code
    alpha = np.asarray(alpha, dtype=np.float64)
    if alpha.shape != (code.n_bits,):
        raise DecoderError(f"Expected {code.n_bits} channel LLRs, got shape {alpha.shape}")
    flip_node = validate_flip_target(tree, flip).node_id if flip is not None else None

    u_hat = np.zeros(code.n_bits, dtype=np.uint8)
    decisions = DecisionList(list_capacity)
    t_cap = list_capacity if list_capacity > 0 else None

    def visit(node: TreeNode, alpha_v: np.ndarray) -> np.ndarray:
        if node.kind is NodeKind.BRANCH:
            half = node.width // 2
            first, second = alpha_v[:half], alpha_v[half:]
            beta_l = visit(node.left, f_minsum(first, second))
            beta_r = visit(node.right, g_llr(first, second, beta_l))
            return combine(beta_l, beta_r)

        local_flip = flip.local_d if node.node_id == flip_node else None
        decision = _decode_leaf(node, alpha_v, local_flip, s_factor, t_cap)
        if node.kind is not NodeKind.RATE0:
            u_hat[node.lo : node.hi] = polar_transform(decision.beta)
        if list_capacity:
            for lam, d in zip(decision.lambdas, decision.local_d):
                decisions.insert(
                    DecisionEntry(
                        lam=float(lam), node_id=node.node_id, local_d=int(d), info_index=node.info_offset + int(d)
                    )
                )
        return decision.beta

    visit(tree.root, alpha)
    info_hat = u_hat[code.info_positions]
    return DecodeResult(u_hat=u_hat, info_hat=info_hat), decisions


class FastSSCDecoder(BaseDecoder):
    """Fast-SSC decoder; the CRC, when given, is only checked."""

    variant = DecoderVariant.FAST_SSC

    def __init__(
        self,
        code: PolarCode,
        crc: Optional[CrcSpec] = None,
        constraints: Optional[TreeConstraints] = None,
        s_factor: float = 0.5,
        tree: Optional[DecoderTree] = None,
    ):
        super().__init__(code, crc, t_max=1)
        self.tree = tree if tree is not None else build_decoder_tree(code, constraints)
        self.s_factor = s_factor

    def decode(self, alpha: np.ndarray) -> DecodeResult:
        result, _ = fast_ssc_decode(self.tree, self._check_llrs(alpha), s_factor=self.s_factor)
        return self._result(result.u_hat)
