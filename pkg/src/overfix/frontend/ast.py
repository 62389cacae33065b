"""AST node and source unit types with exact byte spans.

Nodes are a single dataclass discriminated by ``kind``; the handful of
per-kind attributes (operator, name, literal value, declared type) live in
optional slots.  Child layout per kind:

    FunctionDef   [param VarDecl..., body Block]
    VarDecl       [init expr] or []
    Assign        [target Ident, value expr]
    BinaryExpr    [lhs, rhs]
    UnaryExpr     [operand]
    Call          [arg...]
    If            [cond, then, else?]
    While         [cond, body]
    For           [init, cond, step, body]   (Empty fills absent clauses)
    Return        [expr] or []
    Block         [stmt...]
    Cast          [operand]
    ExternDecl / IntLiteral / StrLiteral / Ident / Empty   []
"""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass, field
from enum import Enum

from ..bounds import CType


class NodeKind(Enum):
    FUNCTION_DEF = "FunctionDef"
    EXTERN_DECL = "ExternDecl"
    VAR_DECL = "VarDecl"
    ASSIGN = "Assign"
    BINARY = "BinaryExpr"
    UNARY = "UnaryExpr"
    CALL = "Call"
    IF = "If"
    WHILE = "While"
    FOR = "For"
    RETURN = "Return"
    BLOCK = "Block"
    INT_LITERAL = "IntLiteral"
    STR_LITERAL = "StrLiteral"
    IDENT = "Ident"
    CAST = "Cast"
    EMPTY = "Empty"


EXPR_KINDS = frozenset({
    NodeKind.BINARY, NodeKind.UNARY, NodeKind.CALL, NodeKind.INT_LITERAL,
    NodeKind.STR_LITERAL, NodeKind.IDENT, NodeKind.CAST,
})


@dataclass
class AstNode:
    kind: NodeKind
    span: tuple[int, int]
    children: list["AstNode"] = field(default_factory=list)
    ctype: CType | None = None          # resolved type (expressions, decls)
    op: str | None = None               # BinaryExpr / UnaryExpr operator
    name: str | None = None             # Ident, Call callee, decl name
    value: int | None = None            # IntLiteral numeric value
    text: str | None = None             # original lexeme (literals, extern decl)
    declared_type: CType | None = None  # VarDecl, FunctionDef return, Cast target
    is_pointer: bool = False            # VarDecl with * declarator
    is_limit_const: bool = False        # Ident naming a limits.h constant

    # -- child accessors -------------------------------------------------
    @property
    def lhs(self) -> "AstNode":
        return self.children[0]

    @property
    def rhs(self) -> "AstNode":
        return self.children[1]

    @property
    def operand(self) -> "AstNode":
        return self.children[0]

    @property
    def target(self) -> "AstNode":
        assert self.kind is NodeKind.ASSIGN
        return self.children[0]

    @property
    def assigned_expr(self) -> "AstNode":
        assert self.kind is NodeKind.ASSIGN
        return self.children[1]

    @property
    def init(self) -> "AstNode | None":
        assert self.kind is NodeKind.VAR_DECL
        return self.children[0] if self.children else None

    @property
    def cond(self) -> "AstNode":
        if self.kind is NodeKind.FOR:
            return self.children[1]
        return self.children[0]

    @property
    def then_stmt(self) -> "AstNode":
        assert self.kind is NodeKind.IF
        return self.children[1]

    @property
    def else_stmt(self) -> "AstNode | None":
        assert self.kind is NodeKind.IF
        return self.children[2] if len(self.children) > 2 else None

    @property
    def body(self) -> "AstNode":
        if self.kind is NodeKind.WHILE:
            return self.children[1]
        if self.kind is NodeKind.FOR:
            return self.children[3]
        if self.kind is NodeKind.FUNCTION_DEF:
            return self.children[-1]
        raise AssertionError(self.kind)

    @property
    def params(self) -> list["AstNode"]:
        assert self.kind is NodeKind.FUNCTION_DEF
        return self.children[:-1]

    @property
    def args(self) -> list["AstNode"]:
        assert self.kind is NodeKind.CALL
        return self.children

    @property
    def return_expr(self) -> "AstNode | None":
        assert self.kind is NodeKind.RETURN
        return self.children[0] if self.children else None

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class SourceUnit:
    """A parsed file: original text, line index, and top-level declarations."""

    path: str
    text: str
    line_offsets: list[int]
    decls: list[AstNode] = field(default_factory=list)

    @property
    def functions(self) -> dict[str, AstNode]:
        return {d.name: d for d in self.decls if d.kind is NodeKind.FUNCTION_DEF}

    def pos_to_linecol(self, pos: int) -> tuple[int, int]:
        """1-based (line, column) of a byte offset."""
        line = bisect.bisect_right(self.line_offsets, pos)
        return line, pos - self.line_offsets[line - 1] + 1

    def linecol_to_pos(self, line: int, col: int) -> int:
        return self.line_offsets[line - 1] + col - 1

    def line_of(self, span: tuple[int, int]) -> int:
        return self.pos_to_linecol(span[0])[0]

    def snippet(self, span: tuple[int, int]) -> str:
        return self.text[span[0]:span[1]]

    def walk(self):
        for d in self.decls:
            yield from d.walk()


def compute_line_offsets(text: str) -> list[int]:
    offsets = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            offsets.append(i + 1)
    return offsets


# ---------------------------------------------------------------------------
# Deterministic dump and structural comparison


def _node_dict(node: AstNode) -> dict:
    d: dict = {"kind": node.kind.value, "span": list(node.span)}
    if node.ctype is not None:
        d["type"] = str(node.ctype)
    if node.op is not None:
        d["op"] = node.op
    if node.name is not None:
        d["name"] = node.name
    if node.value is not None:
        d["value"] = node.value
    if node.text is not None and node.kind is not NodeKind.INT_LITERAL:
        d["text"] = node.text
    if node.declared_type is not None:
        d["declaredType"] = str(node.declared_type)
    if node.is_pointer:
        d["pointer"] = True
    d["children"] = [_node_dict(c) for c in node.children]
    return d


def ast_dump(unit: SourceUnit) -> str:
    """Deterministic JSON rendering of the whole tree."""
    doc = {"path": unit.path, "decls": [_node_dict(d) for d in unit.decls]}
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def ast_equal(a: AstNode, b: AstNode) -> bool:
    """Structural equality ignoring spans and lexeme spellings."""
    if (a.kind, a.op, a.name, a.value, a.declared_type, a.is_pointer) != (
            b.kind, b.op, b.name, b.value, b.declared_type, b.is_pointer):
        return False
    if len(a.children) != len(b.children):
        return False
    return all(ast_equal(x, y) for x, y in zip(a.children, b.children))


def unit_equal(a: SourceUnit, b: SourceUnit) -> bool:
    return len(a.decls) == len(b.decls) and all(
        ast_equal(x, y) for x, y in zip(a.decls, b.decls))


# ---------------------------------------------------------------------------
# Pretty printer (canonical, fully parenthesized expressions)


def _expr_text(node: AstNode) -> str:
    k = node.kind
    if k is NodeKind.INT_LITERAL:
        return node.text or str(node.value)
    if k is NodeKind.STR_LITERAL:
        return node.text or '""'
    if k is NodeKind.IDENT:
        return node.name or ""
    if k is NodeKind.UNARY:
        return f"{node.op}{_wrap(node.operand)}"
    if k is NodeKind.BINARY:
        return f"{_wrap(node.lhs)} {node.op} {_wrap(node.rhs)}"
    if k is NodeKind.CALL:
        return f"{node.name}({', '.join(_expr_text(a) for a in node.args)})"
    if k is NodeKind.CAST:
        return f"({node.declared_type}){_wrap(node.operand)}"
    raise AssertionError(k)


def _wrap(node: AstNode) -> str:
    if node.kind in (NodeKind.BINARY, NodeKind.CAST):
        return f"({_expr_text(node)})"
    return _expr_text(node)


def _stmt_lines(node: AstNode, indent: int) -> list[str]:
    pad = "    " * indent
    k = node.kind
    if k is NodeKind.EMPTY:
        return [pad + ";"]
    if k is NodeKind.VAR_DECL:
        star = "*" if node.is_pointer else ""
        head = f"{pad}{node.declared_type} {star}{node.name}"
        if node.init is not None:
            return [f"{head} = {_expr_text(node.init)};"]
        return [head + ";"]
    if k is NodeKind.ASSIGN:
        return [f"{pad}{node.target.name} = {_expr_text(node.assigned_expr)};"]
    if k is NodeKind.CALL:
        return [pad + _expr_text(node) + ";"]
    if k is NodeKind.RETURN:
        if node.return_expr is not None:
            return [f"{pad}return {_expr_text(node.return_expr)};"]
        return [pad + "return;"]
    if k is NodeKind.BLOCK:
        lines = [pad + "{"]
        for s in node.children:
            lines += _stmt_lines(s, indent + 1)
        lines.append(pad + "}")
        return lines
    if k is NodeKind.IF:
        lines = [f"{pad}if ({_expr_text(node.cond)})"]
        lines += _block_or_stmt(node.then_stmt, indent)
        if node.else_stmt is not None:
            lines.append(pad + "else")
            lines += _block_or_stmt(node.else_stmt, indent)
        return lines
    if k is NodeKind.WHILE:
        return [f"{pad}while ({_expr_text(node.cond)})"] + _block_or_stmt(node.body, indent)
    if k is NodeKind.FOR:
        init, cond, step = node.children[0], node.children[1], node.children[2]
        init_txt = _clause_text(init)
        cond_txt = "" if cond.kind is NodeKind.EMPTY else _expr_text(cond)
        step_txt = _clause_text(step)
        return [f"{pad}for ({init_txt}; {cond_txt}; {step_txt})"] + _block_or_stmt(node.body, indent)
    if k is NodeKind.EXTERN_DECL:
        return [pad + (node.text or f"extern void {node.name}();")]
    raise AssertionError(k)


def _clause_text(node: AstNode) -> str:
    if node.kind is NodeKind.EMPTY:
        return ""
    lines = _stmt_lines(node, 0)
    return lines[0].rstrip(";")


def _block_or_stmt(node: AstNode, indent: int) -> list[str]:
    if node.kind is NodeKind.BLOCK:
        return _stmt_lines(node, indent)
    return _stmt_lines(node, indent + 1)


def pretty(unit: SourceUnit) -> str:
    """Regenerate compilable source text from the AST."""
    lines: list[str] = []
    for d in unit.decls:
        if d.kind is NodeKind.FUNCTION_DEF:
            params = ", ".join(
                f"{p.declared_type} {p.name}" for p in d.params) or "void"
            lines.append(f"{d.declared_type} {d.name}({params})")
            lines += _stmt_lines(d.body, 0)
            lines.append("")
        else:
            lines += _stmt_lines(d, 0)
    return "\n".join(lines).rstrip("\n") + "\n"
