"""Type resolution over the parsed AST.

Annotates every expression with its resolved type using the usual C arithmetic
conversions restricted to the five supported types, resolves identifiers
through lexical scopes, and enforces the subset's semantic rules (integer
arithmetic only, ``&`` only as a source-stub argument, calls only where the
path interpreter can evaluate them).
"""

from __future__ import annotations

from ..bounds import (
    FULL_LIMITS,
    CType,
    INTEGER_TYPES,
    TYPE_OF_MAX_CONSTANT,
    TYPE_OF_MIN_CONSTANT,
    usual_arithmetic_type,
)
from ..stubs import STREAM_IDENTS, STUB_TABLE, UnknownExtern
from .ast import AstNode, NodeKind, SourceUnit
from .errors import CTypeError, UnsupportedConstruct


def _promote(t: CType) -> CType:
    return CType.INT if t in (CType.CHAR, CType.SHORT) else t


class _Scope:
    def __init__(self, parent: "_Scope | None" = None):
        self.parent = parent
        self.vars: dict[str, tuple[CType, bool]] = {}  # name -> (type, is_pointer)

    def declare(self, name: str, ctype: CType, is_pointer: bool, line: int) -> None:
        if name in self.vars:
            raise CTypeError(line, f"redeclaration of {name!r}")
        # Shadowing would break the flat per-path variable environment the
        # interpreter keeps, so it is rejected outright.
        if self.parent is not None and self.parent.lookup(name) is not None:
            raise CTypeError(line, f"{name!r} shadows an earlier declaration")
        self.vars[name] = (ctype, is_pointer)

    def lookup(self, name: str) -> tuple[CType, bool] | None:
        scope: _Scope | None = self
        while scope is not None:
            if name in scope.vars:
                return scope.vars[name]
            scope = scope.parent
        return None


class _Checker:
    def __init__(self, unit: SourceUnit):
        self.unit = unit
        self.signatures: dict[str, tuple[CType, list[CType]]] = {}
        self.externs: dict[str, CType] = {}
        self.globals = _Scope()

    def line(self, node: AstNode) -> int:
        return self.unit.line_of(node.span)

    def run(self) -> SourceUnit:
        for decl in self.unit.decls:
            if decl.kind is NodeKind.FUNCTION_DEF:
                if decl.name in self.signatures:
                    raise CTypeError(self.line(decl), f"redefinition of {decl.name!r}")
                self.signatures[decl.name] = (
                    decl.declared_type,
                    [p.declared_type for p in decl.params],
                )
            elif decl.kind is NodeKind.EXTERN_DECL:
                self.externs[decl.name] = decl.declared_type or CType.VOID
        for decl in self.unit.decls:
            if decl.kind is NodeKind.VAR_DECL:
                self.global_decl(decl)
        for decl in self.unit.decls:
            if decl.kind is NodeKind.FUNCTION_DEF:
                self.function(decl)
        return self.unit

    def global_decl(self, decl: AstNode) -> None:
        if decl.declared_type is CType.VOID:
            raise CTypeError(self.line(decl), "variable declared void")
        init = decl.init
        if init is not None:
            if not self._is_constant_expr(init):
                raise CTypeError(self.line(decl),
                                 "global initializer must be a constant expression")
            self.expr(init, self.globals)
        decl.ctype = decl.declared_type
        self.globals.declare(decl.name, decl.declared_type, decl.is_pointer,
                             self.line(decl))

    def _is_constant_expr(self, node: AstNode) -> bool:
        if node.kind is NodeKind.INT_LITERAL:
            return True
        if node.kind is NodeKind.IDENT:
            return node.name in TYPE_OF_MAX_CONSTANT or node.name in TYPE_OF_MIN_CONSTANT
        if node.kind is NodeKind.UNARY and node.op == "-":
            return self._is_constant_expr(node.operand)
        return False

    def function(self, fn: AstNode) -> None:
        scope = _Scope(self.globals)
        for p in fn.params:
            if p.declared_type is CType.VOID:
                raise CTypeError(self.line(p), "parameter declared void")
            p.ctype = p.declared_type
            scope.declare(p.name, p.declared_type, False, self.line(p))
        self.block(fn.body, scope, fn)
        fn.ctype = fn.declared_type

    def block(self, node: AstNode, parent: _Scope, fn: AstNode) -> None:
        scope = _Scope(parent)
        for stmt in node.children:
            self.statement(stmt, scope, fn)

    def statement(self, node: AstNode, scope: _Scope, fn: AstNode) -> None:
        k = node.kind
        if k is NodeKind.EMPTY or k is NodeKind.EXTERN_DECL:
            if k is NodeKind.EXTERN_DECL:
                self.externs[node.name] = node.declared_type or CType.VOID
            return
        if k is NodeKind.BLOCK:
            self.block(node, scope, fn)
            return
        if k is NodeKind.VAR_DECL:
            self.var_decl(node, scope)
            return
        if k is NodeKind.ASSIGN:
            self.assign(node, scope)
            return
        if k is NodeKind.CALL:
            self.expr(node, scope)
            return
        if k is NodeKind.RETURN:
            expr = node.return_expr
            if fn.declared_type is CType.VOID:
                if expr is not None:
                    raise CTypeError(self.line(node),
                                     "void function returns a value")
            else:
                if expr is None:
                    raise CTypeError(self.line(node),
                                     f"non-void function {fn.name!r} returns nothing")
                t = self.expr(expr, scope)
                if t not in INTEGER_TYPES:
                    raise CTypeError(self.line(node), "returning a non-integer value")
            return
        if k is NodeKind.IF:
            self.condition(node.cond, scope)
            self.statement(node.then_stmt, scope, fn)
            if node.else_stmt is not None:
                self.statement(node.else_stmt, scope, fn)
            return
        if k is NodeKind.WHILE:
            self.condition(node.cond, scope)
            self.statement(node.body, scope, fn)
            return
        if k is NodeKind.FOR:
            inner = _Scope(scope)
            init, cond, step, body = node.children
            if init.kind is not NodeKind.EMPTY:
                self.statement(init, inner, fn)
            if cond.kind is not NodeKind.EMPTY:
                self.condition(cond, inner)
            if step.kind is not NodeKind.EMPTY:
                self.statement(step, inner, fn)
            self.statement(body, inner, fn)
            return
        raise CTypeError(self.line(node), f"unexpected statement kind {k.value}")

    def var_decl(self, node: AstNode, scope: _Scope) -> None:
        if node.declared_type is CType.VOID:
            raise CTypeError(self.line(node), "variable declared void")
        init = node.init
        if node.is_pointer:
            if init is not None:
                t = self.expr(init, scope)
                if t is not CType.PTR:
                    raise CTypeError(self.line(node),
                                     "pointer may only hold an allocation result")
            node.ctype = CType.PTR
            scope.declare(node.name, CType.PTR, True, self.line(node))
            return
        if init is not None:
            t = self.expr(init, scope)
            if t not in INTEGER_TYPES:
                raise CTypeError(self.line(node),
                                 f"initializer of {node.name!r} is not an integer")
        node.ctype = node.declared_type
        scope.declare(node.name, node.declared_type, False, self.line(node))

    def assign(self, node: AstNode, scope: _Scope) -> None:
        target = node.target
        entry = scope.lookup(target.name)
        if entry is None:
            raise CTypeError(self.line(node), f"assignment to undeclared {target.name!r}")
        ctype, is_pointer = entry
        target.ctype = ctype
        t = self.expr(node.assigned_expr, scope)
        if is_pointer:
            if t is not CType.PTR:
                raise CTypeError(self.line(node),
                                 "pointer may only hold an allocation result")
        elif t not in INTEGER_TYPES:
            raise CTypeError(self.line(node),
                             f"assigning a non-integer to {target.name!r}")
        node.ctype = ctype

    def condition(self, node: AstNode, scope: _Scope) -> None:
        for sub in node.walk():
            if sub.kind is NodeKind.CALL and sub.name != "sqrt":
                line, col = self.unit.pos_to_linecol(sub.span[0])
                raise UnsupportedConstruct(line, col, "function call in branch condition")
        t = self.expr(node, scope)
        if t not in INTEGER_TYPES:
            raise CTypeError(self.line(node), "condition is not an integer expression")

    # -- expressions -------------------------------------------------------
    def expr(self, node: AstNode, scope: _Scope, arg_position: bool = False) -> CType:
        k = node.kind
        if k is NodeKind.INT_LITERAL:
            node.ctype = CType.INT if node.value <= FULL_LIMITS[CType.INT] else CType.INT64
        elif k is NodeKind.STR_LITERAL:
            node.ctype = CType.CSTR
        elif k is NodeKind.IDENT:
            node.ctype = self.ident(node, scope)
        elif k is NodeKind.UNARY:
            node.ctype = self.unary(node, scope, arg_position)
        elif k is NodeKind.BINARY:
            node.ctype = self.binary(node, scope)
        elif k is NodeKind.CALL:
            node.ctype = self.call(node, scope)
        elif k is NodeKind.CAST:
            if node.declared_type not in INTEGER_TYPES:
                raise CTypeError(self.line(node), "cast target must be an integer type")
            t = self.expr(node.operand, scope)
            if t not in INTEGER_TYPES:
                raise CTypeError(self.line(node), "cast of a non-integer value")
            node.ctype = node.declared_type
        else:
            raise CTypeError(self.line(node), f"unexpected expression kind {k.value}")
        return node.ctype

    def ident(self, node: AstNode, scope: _Scope) -> CType:
        name = node.name
        entry = scope.lookup(name)
        if entry is not None:
            ctype, is_pointer = entry
            return CType.PTR if is_pointer else ctype
        if name in TYPE_OF_MAX_CONSTANT:
            node.is_limit_const = True
            return TYPE_OF_MAX_CONSTANT[name]
        if name in TYPE_OF_MIN_CONSTANT:
            node.is_limit_const = True
            return TYPE_OF_MIN_CONSTANT[name]
        if name in STREAM_IDENTS:
            return CType.PTR
        raise CTypeError(self.line(node), f"use of undeclared identifier {name!r}")

    def unary(self, node: AstNode, scope: _Scope, arg_position: bool) -> CType:
        if node.op == "&":
            if not arg_position or node.operand.kind is not NodeKind.IDENT:
                line, col = self.unit.pos_to_linecol(node.span[0])
                raise UnsupportedConstruct(line, col, "address-of outside a call argument")
            t = self.expr(node.operand, scope)
            if t not in INTEGER_TYPES:
                raise CTypeError(self.line(node), "address-of a non-integer variable")
            return CType.PTR
        t = self.expr(node.operand, scope)
        if t not in INTEGER_TYPES:
            raise CTypeError(self.line(node), f"unary {node.op} on a non-integer")
        return _promote(t) if node.op == "-" else CType.INT

    def binary(self, node: AstNode, scope: _Scope) -> CType:
        lt = self.expr(node.lhs, scope)
        rt = self.expr(node.rhs, scope)
        op = node.op
        if lt not in INTEGER_TYPES or rt not in INTEGER_TYPES:
            raise CTypeError(self.line(node), f"operator {op!r} on non-integer operands")
        if op in ("+", "-", "*", "/", "%"):
            return usual_arithmetic_type(lt, rt)
        return CType.INT

    def call(self, node: AstNode, scope: _Scope) -> CType:
        name = node.name
        if name in self.signatures:
            ret, param_types = self.signatures[name]
            if len(node.args) != len(param_types):
                raise CTypeError(
                    self.line(node),
                    f"{name}() expects {len(param_types)} arguments, got {len(node.args)}")
            for arg in node.args:
                t = self.expr(arg, scope)
                if t not in INTEGER_TYPES:
                    raise CTypeError(self.line(node),
                                     f"non-integer argument to {name}()")
            return ret
        for arg in node.args:
            self.expr(arg, scope, arg_position=True)
        if name in STUB_TABLE:
            return STUB_TABLE[name].return_type
        if name in self.externs:
            return self.externs[name]
        raise UnknownExtern(name)


def resolve_types(unit: SourceUnit) -> SourceUnit:
    """Annotate every expression with its resolved type; raises on violations."""
    return _Checker(unit).run()
