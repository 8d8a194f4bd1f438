"""Frozen-set construction and frozen-set files.

Bit-channel reliabilities are propagated through the decoder tree from the
channel towards the leaves: the most significant bit of a u-domain index
selects the first (channel-side) split, a 0 bit taking the check-node
("minus") branch and a 1 bit the variable-node ("plus") branch.

Frozen-set file format::

    N=8 k=5 crc=0
    0
    1
    4

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import logging
import math
import re
from pathlib import Path
from typing import List, Union

import numpy as np

from .config import ConstructionMethod
from .exceptions import CodeDefinitionError, FrozenSetFormatError
from .models.code import PolarCode, is_power_of_two

__all__ = [
    "ga_mean_llrs",
    "bhattacharyya_parameters",
    "construct_frozen_set",
    "load_frozen_set",
    "save_frozen_set",
]

logger = logging.getLogger(__name__)

# Chung's two-piece approximation of phi(x) = 1 - E[tanh(L/2)], L ~ N(x, 2x).
_PHI_ALPHA = -0.4527
_PHI_BETA = 0.86
_PHI_GAMMA = 0.0218
_PHI_SPLIT = 10.0

_HEADER = re.compile(r"^\s*N\s*=\s*(\d+)\s+k\s*=\s*(\d+)\s+crc\s*=\s*(\d+)\s*$")


def _log_phi(x: float) -> float:
    if x <= 0.0:
        return 0.0
    if x < _PHI_SPLIT:
        return _PHI_ALPHA * x ** _PHI_BETA + _PHI_GAMMA
    return 0.5 * math.log(math.pi / x) - x / 4.0 + math.log1p(-10.0 / (7.0 * x))


_LOG_PHI_SPLIT = _log_phi(_PHI_SPLIT)


def _inverse_log_phi(log_y: float) -> float:
    if log_y >= 0.0:
        return 0.0
    if log_y >= _LOG_PHI_SPLIT:
        return ((_PHI_GAMMA - log_y) / -_PHI_ALPHA) ** (1.0 / _PHI_BETA)
    # The tail branch is monotone decreasing; bisect on it.
    lo, hi = _PHI_SPLIT, _PHI_SPLIT * 2.0
    while _log_phi(hi) > log_y:
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _log_phi(mid) > log_y:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-12 * hi:
            break
    return 0.5 * (lo + hi)


def _check_node_mean(mean: float) -> float:
    log_phi = _log_phi(mean)
    # 1 - (1 - phi)^2 = phi * (2 - phi), kept in the log domain.
    return _inverse_log_phi(log_phi + math.log(2.0 - math.exp(log_phi)))


def _design_sigma2(n_bits: int, k_info: int, design_ebn0: float) -> float:
    rate = k_info / n_bits
    return 1.0 / (2.0 * rate * 10.0 ** (design_ebn0 / 10.0))


def ga_mean_llrs(n_bits: int, k_info: int, design_ebn0: float) -> np.ndarray:
    """Mean LLR of every bit channel under the Gaussian approximation."""
    means: List[float] = [2.0 / _design_sigma2(n_bits, k_info, design_ebn0)]
    while len(means) < n_bits:
        means = [value for m in means for value in (_check_node_mean(m), 2.0 * m)]
    return np.asarray(means)


def bhattacharyya_parameters(n_bits: int, k_info: int, design_ebn0: float) -> np.ndarray:
    """Bhattacharyya parameter of every bit channel (lower is better)."""
    z: List[float] = [math.exp(-1.0 / (2.0 * _design_sigma2(n_bits, k_info, design_ebn0)))]
    while len(z) < n_bits:
        z = [value for zz in z for value in (2.0 * zz - zz * zz, zz * zz)]
    return np.asarray(z)


def construct_frozen_set(
    n_bits: int,
    k_info: int,
    design_ebn0: float,
    crc_bits: int = 0,
    method: ConstructionMethod = ConstructionMethod.GA,
) -> PolarCode:
    """Freeze the N - k least reliable positions at the design Eb/N0.

    The design noise level uses rate k_info / N. Equal reliabilities freeze
    the lower index first.
    """
    if n_bits < 2 or not is_power_of_two(n_bits):
        raise CodeDefinitionError(f"Code length must be a power of two >= 2, got {n_bits}", {"n_bits": n_bits})
    if not 0 < k_info < n_bits:
        raise CodeDefinitionError(f"k must lie in (0, {n_bits}), got {k_info}", {"k_info": k_info})

    if method is ConstructionMethod.GA:
        reliability = ga_mean_llrs(n_bits, k_info, design_ebn0)
    elif method is ConstructionMethod.BHATTACHARYYA:
        reliability = -bhattacharyya_parameters(n_bits, k_info, design_ebn0)
    else:
        raise CodeDefinitionError(f"Unknown construction method: {method}")

    order = np.argsort(reliability, kind="stable")
    frozen = frozenset(int(i) for i in order[: n_bits - k_info])
    code = PolarCode(n_bits=n_bits, k_info=k_info, frozen=frozen, crc_bits=crc_bits)
    logger.debug(
        "Constructed (%d, %d) code with %s at %.2f dB; first information bit b=%d",
        n_bits,
        k_info,
        method.value,
        design_ebn0,
        code.first_info_index,
    )
    return code


def load_frozen_set(path: Union[str, Path]) -> PolarCode:
    """Read a frozen-set file (header line followed by one index per line)."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FrozenSetFormatError(f"Cannot read frozen-set file: {exc}", path=str(path)) from exc

    header = None
    frozen: List[int] = []
    for number, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if header is None:
            match = _HEADER.match(text)
            if match is None:
                raise FrozenSetFormatError(
                    f"Expected header 'N=<int> k=<int> crc=<int>', got {line!r}",
                    path=str(path),
                    line_number=number,
                )
            header = tuple(int(group) for group in match.groups())
            continue
        try:
            index = int(text)
        except ValueError:
            raise FrozenSetFormatError(
                f"Malformed frozen index {line!r}", path=str(path), line_number=number
            ) from None
        if not 0 <= index < header[0]:
            raise FrozenSetFormatError(
                f"Frozen index {index} outside [0, {header[0]})", path=str(path), line_number=number
            )
        frozen.append(index)

    if header is None:
        raise FrozenSetFormatError("Missing header line", path=str(path))
    n_bits, k_info, crc = header
    if len(set(frozen)) != len(frozen):
        raise FrozenSetFormatError("Duplicate frozen indices", path=str(path))
    if len(frozen) != n_bits - k_info:
        raise FrozenSetFormatError(
            f"Expected {n_bits - k_info} frozen indices for N={n_bits}, k={k_info}; found {len(frozen)}",
            path=str(path),
        )
    try:
        return PolarCode(n_bits=n_bits, k_info=k_info, frozen=frozenset(frozen), crc_bits=crc)
    except CodeDefinitionError as exc:
        raise FrozenSetFormatError(exc.message, path=str(path)) from exc


def save_frozen_set(code: PolarCode, path: Union[str, Path]) -> Path:
    """Write ``code`` in the format read by :func:`load_frozen_set`."""
    path = Path(path)
    lines = [f"N={code.n_bits} k={code.k_info} crc={code.crc_bits}"]
    lines.extend(str(i) for i in sorted(code.frozen))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
