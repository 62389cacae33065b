"""Lexing, parsing, and type resolution for the supported C subset."""

from .ast import (
    AstNode,
    NodeKind,
    SourceUnit,
    ast_dump,
    ast_equal,
    pretty,
)
from .errors import CSyntaxError, CTypeError, FrontendError, UnsupportedConstruct
from .parser import parse, parse_with_diagnostics
from .typecheck import resolve_types

__all__ = [
    "AstNode",
    "NodeKind",
    "SourceUnit",
    "ast_dump",
    "ast_equal",
    "pretty",
    "CSyntaxError",
    "CTypeError",
    "FrontendError",
    "UnsupportedConstruct",
    "parse",
    "parse_with_diagnostics",
    "resolve_types",
]
