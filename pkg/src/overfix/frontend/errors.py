"""Diagnostics raised by the frontend."""

from __future__ import annotations


class FrontendError(Exception):
    """Base class carrying a 1-based source position."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class CSyntaxError(FrontendError):
    pass


class UnsupportedConstruct(FrontendError):
    """Syntactically recognizable C that is outside the supported subset."""

    def __init__(self, line: int, col: int, construct: str):
        super().__init__(line, col, f"unsupported construct: {construct}")
        self.construct = construct


class CTypeError(FrontendError):
    def __init__(self, line: int, message: str, col: int = 1):
        super().__init__(line, col, message)
