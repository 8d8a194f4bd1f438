"""Custom exceptions for the polar-flip codec and simulator."""

from __future__ import annotations

from typing import Any, Dict, Optional

__all__ = [
    'PolarFlipError',
    'CodeDefinitionError',
    'FrozenSetFormatError',
    'EncodingError',
    'DecoderError',
    'ConfigurationError',
    'CurveRangeError',
]


class PolarFlipError(Exception):
    """Base exception for polar-flip errors."""

    def __init__(
        self,
        message: str,
        context: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.context = context or {}
        super().__init__(message)


class CodeDefinitionError(PolarFlipError):
    """Invalid code length, dimension, frozen set or construction parameter."""


class FrozenSetFormatError(CodeDefinitionError):
    """A frozen-set file could not be parsed."""

    def __init__(self, message: str, path: Optional[str] = None, line_number: Optional[int] = None):
        super().__init__(message, {"path": path, "line_number": line_number})
        self.path = path
        self.line_number = line_number


class EncodingError(PolarFlipError):
    """Bit-vector length or shape does not match the code."""


class DecoderError(PolarFlipError):
    """Invalid decoder input such as a flip target outside the tree."""


class ConfigurationError(PolarFlipError):
    """Invalid sweep configuration or command-line value."""


class CurveRangeError(PolarFlipError):
    """Target FER cannot be reached by interpolation on a curve."""
