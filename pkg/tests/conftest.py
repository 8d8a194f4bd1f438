import os
from pathlib import Path
from typing import List

import numpy as np
import pytest

from polar_flip.config import CrcSpec, NodeKind, TreeConstraints
from polar_flip.decoder_tree import DecoderTree, build_decoder_tree
from polar_flip.decoders import sc_decode
from polar_flip.decoders.nodes import decode_birep, decode_rate1, decode_rep, decode_spc
from polar_flip.encoding import polar_transform
from polar_flip.models.code import PolarCode
from polar_flip.models.decision import DecisionEntry

REPO_ROOT = Path(__file__).resolve().parent.parent


def _int_from_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    return int(value)


def oracle_frames(default: int = 2000) -> int:
    """Frames per randomized oracle check (POLAR_FLIP_ORACLE_FRAMES)."""
    return _int_from_env("POLAR_FLIP_ORACLE_FRAMES", default)


def acceptance_frames(default: int = 10_000) -> int:
    """Frames per acceptance-scale check (POLAR_FLIP_ACCEPTANCE_FRAMES)."""
    return _int_from_env("POLAR_FLIP_ACCEPTANCE_FRAMES", default)


def random_code(rng: np.random.Generator, n_bits: int, crc_bits: int = 0) -> PolarCode:
    """A code with a uniformly random frozen set (at least one information bit)."""
    k_info = int(rng.integers(max(crc_bits + 1, 1), n_bits + 1))
    frozen = rng.choice(n_bits, size=n_bits - k_info, replace=False)
    return PolarCode(n_bits=n_bits, k_info=k_info, frozen=frozenset(int(i) for i in frozen), crc_bits=crc_bits)


def leaf_decisions(tree: DecoderTree, alpha: np.ndarray, s_factor: float = 0.5) -> List[DecisionEntry]:
    """Every decision LLR of one pass, unsorted.

    Leaf inputs come from plain SC: each left subtree's estimate is the
    transform of the SC decisions over its span.
    """
    code = tree.code
    u_sc = sc_decode(code, alpha).u_hat
    entries: List[DecisionEntry] = []

    def descend(node, alpha_v):
        if node.kind is NodeKind.BRANCH:
            half = node.width // 2
            a, b = alpha_v[:half], alpha_v[half:]
            magnitude = np.minimum(np.abs(a), np.abs(b))
            descend(node.left, np.where((a < 0) ^ (b < 0), -magnitude, magnitude))
            beta_l = polar_transform(u_sc[node.left.lo : node.left.hi])
            descend(node.right, np.where(beta_l == 0, b + a, b - a))
            return
        if node.kind is NodeKind.RATE0:
            return
        if node.kind is NodeKind.SPC:
            decision = decode_spc(alpha_v, s_factor)
        else:
            decision = {NodeKind.RATE1: decode_rate1, NodeKind.REP: decode_rep, NodeKind.BIREP: decode_birep}[
                node.kind
            ](alpha_v)
        first = int(np.searchsorted(code.info_positions, node.lo))
        for lam, d in zip(decision.lambdas, decision.local_d):
            entries.append(DecisionEntry(lam=float(lam), node_id=node.node_id, local_d=int(d), info_index=first + int(d)))

    descend(tree.root, np.asarray(alpha, dtype=np.float64))
    return entries


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def example_code():
    """The (8, 5) code with frozen set {0, 1, 4}."""
    return PolarCode(n_bits=8, k_info=5, frozen=frozenset({0, 1, 4}))


@pytest.fixture(scope="session")
def example_tree(example_code):
    """Birep over u[0:4) and SPC over u[4:8)."""
    return build_decoder_tree(example_code, TreeConstraints.unconstrained())


@pytest.fixture(scope="session")
def crc4():
    return CrcSpec.preset(4)


@pytest.fixture(scope="session")
def frozen_file_8_5():
    return REPO_ROOT / "codes" / "polar_8_5.frozen"
