"""Recursive-descent parser producing span-accurate ASTs.

The grammar is the scalar-integer C subset: functions over the five integer
types, if/else, while, for, return, blocks, declarations with initializers,
assignments, calls.  Pointers exist only as opaque malloc handles, ``&x``
only as a call argument, and ``extern`` only as a function prototype.
Constructs we can name but do not support raise ``UnsupportedConstruct``.
"""

from __future__ import annotations

from ..bounds import CType
from .ast import AstNode, NodeKind, SourceUnit, compute_line_offsets
from .errors import CSyntaxError, FrontendError, UnsupportedConstruct
from .lexer import UNSUPPORTED_KEYWORDS, Token, tokenize

_TYPE_KEYWORDS = {
    "void": CType.VOID,
    "char": CType.CHAR,
    "short": CType.SHORT,
    "int": CType.INT,
    "int64_t": CType.INT64,
}

_BIN_PRECEDENCE = {
    "||": 1, "&&": 2,
    "==": 3, "!=": 3,
    "<": 4, "<=": 4, ">": 4, ">=": 4,
    "+": 5, "-": 5,
    "*": 6, "/": 6, "%": 6,
}


class _Parser:
    def __init__(self, path: str, text: str):
        self.path = path
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    # -- token helpers ----------------------------------------------------
    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.cur
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.cur.text == text and self.cur.kind in ("punct", "ident")

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise CSyntaxError(self.cur.line, self.cur.col,
                               f"expected {text!r}, found {self.cur.text or 'end of file'!r}")
        return self.advance()

    def error(self, message: str) -> CSyntaxError:
        return CSyntaxError(self.cur.line, self.cur.col, message)

    def unsupported(self, construct: str) -> UnsupportedConstruct:
        return UnsupportedConstruct(self.cur.line, self.cur.col, construct)

    def check_keyword(self) -> None:
        if self.cur.kind == "ident" and self.cur.text in UNSUPPORTED_KEYWORDS:
            raise self.unsupported(self.cur.text)

    # -- types ------------------------------------------------------------
    def at_type(self) -> bool:
        return self.cur.kind == "ident" and (
            self.cur.text in _TYPE_KEYWORDS or self.cur.text == "unsigned")

    def parse_type(self) -> CType:
        tok = self.advance()
        if tok.text == "unsigned":
            if self.at("int"):
                self.advance()
            return CType.UINT
        if tok.text in _TYPE_KEYWORDS:
            return _TYPE_KEYWORDS[tok.text]
        raise CSyntaxError(tok.line, tok.col, f"expected type name, found {tok.text!r}")

    # -- top level ----------------------------------------------------------
    def parse_unit(self) -> SourceUnit:
        unit = SourceUnit(self.path, self.text, compute_line_offsets(self.text))
        while self.cur.kind != "eof":
            self.check_keyword()
            if self.at("extern"):
                unit.decls.append(self.extern_decl())
            elif self.at_type():
                unit.decls.append(self.type_led_decl())
            else:
                raise self.error(
                    f"expected declaration, found {self.cur.text!r}")
        return unit

    def type_led_decl(self) -> AstNode:
        start = self.cur
        ctype = self.parse_type()
        is_pointer = False
        if self.at("*"):
            self.advance()
            is_pointer = True
        name_tok = self.cur
        if name_tok.kind != "ident" or name_tok.text in _TYPE_KEYWORDS:
            raise self.error("expected identifier in declaration")
        self.check_keyword()
        self.advance()
        if self.at("(") and not is_pointer:
            return self.function_def(start, ctype, name_tok)
        return self.var_decl_rest(start, ctype, name_tok, is_pointer)

    def function_def(self, start: Token, ret: CType, name_tok: Token) -> AstNode:
        self.expect("(")
        params: list[AstNode] = []
        if self.at("void") and self.peek().text == ")":
            self.advance()
        elif not self.at(")"):
            while True:
                self.check_keyword()
                if not self.at_type():
                    raise self.error("expected parameter type")
                p_start = self.cur
                p_type = self.parse_type()
                if self.at("*"):
                    raise self.unsupported("pointer parameter")
                p_name = self.advance()
                if p_name.kind != "ident":
                    raise self.error("expected parameter name")
                params.append(AstNode(
                    NodeKind.VAR_DECL, (p_start.pos, p_name.end),
                    name=p_name.text, declared_type=p_type))
                if self.at(","):
                    self.advance()
                    continue
                break
        self.expect(")")
        if self.at(";"):
            raise self.unsupported("function prototype without extern")
        body = self.block()
        node = AstNode(NodeKind.FUNCTION_DEF, (start.pos, body.span[1]),
                       children=params + [body],
                       name=name_tok.text, declared_type=ret)
        return node

    def extern_decl(self) -> AstNode:
        start = self.expect("extern")
        self.check_keyword()
        if not self.at_type():
            raise self.unsupported("extern data declaration")
        ret_type = self.parse_type()
        name_tok = self.advance()
        if name_tok.kind != "ident":
            raise self.error("expected function name after extern type")
        self.expect("(")
        depth = 1
        while depth:
            tok = self.advance()
            if tok.kind == "eof":
                raise self.error("unterminated extern declaration")
            if tok.text == "(":
                depth += 1
            elif tok.text == ")":
                depth -= 1
        end = self.expect(";")
        return AstNode(NodeKind.EXTERN_DECL, (start.pos, end.end),
                       name=name_tok.text, declared_type=ret_type,
                       text=self.text[start.pos:end.end])

    # -- statements ---------------------------------------------------------
    def block(self) -> AstNode:
        open_tok = self.expect("{")
        stmts: list[AstNode] = []
        while not self.at("}"):
            if self.cur.kind == "eof":
                raise self.error("unterminated block")
            stmts.append(self.statement())
        close = self.expect("}")
        return AstNode(NodeKind.BLOCK, (open_tok.pos, close.end), children=stmts)

    def statement(self) -> AstNode:
        self.check_keyword()
        tok = self.cur
        if self.at(";"):
            end = self.advance()
            return AstNode(NodeKind.EMPTY, (tok.pos, end.end))
        if self.at("{"):
            return self.block()
        if self.at("if"):
            return self.if_stmt()
        if self.at("while"):
            return self.while_stmt()
        if self.at("for"):
            return self.for_stmt()
        if self.at("return"):
            return self.return_stmt()
        if self.at("extern"):
            return self.extern_decl()
        if self.at_type():
            start = self.cur
            ctype = self.parse_type()
            is_pointer = False
            if self.at("*"):
                self.advance()
                is_pointer = True
            name_tok = self.advance()
            if name_tok.kind != "ident":
                raise self.error("expected identifier in declaration")
            return self.var_decl_rest(start, ctype, name_tok, is_pointer)
        if self.at("*"):
            raise self.unsupported("pointer dereference")
        if tok.kind == "ident":
            return self.expr_led_stmt()
        raise self.error(f"expected statement, found {tok.text!r}")

    def var_decl_rest(self, start: Token, ctype: CType, name_tok: Token,
                      is_pointer: bool) -> AstNode:
        if self.at("["):
            raise self.unsupported("array declaration")
        if self.at(","):
            raise self.unsupported("multiple declarators in one declaration")
        children: list[AstNode] = []
        if self.at("="):
            self.advance()
            children.append(self.expression())
        end = self.expect(";")
        return AstNode(NodeKind.VAR_DECL, (start.pos, end.end), children=children,
                       name=name_tok.text, declared_type=ctype, is_pointer=is_pointer)

    def expr_led_stmt(self) -> AstNode:
        name_tok = self.advance()
        if self.at("="):
            self.advance()
            value = self.expression()
            end = self.expect(";")
            target = AstNode(NodeKind.IDENT, (name_tok.pos, name_tok.end),
                             name=name_tok.text)
            return AstNode(NodeKind.ASSIGN, (name_tok.pos, end.end),
                           children=[target, value])
        if self.at("("):
            call = self.call_rest(name_tok)
            end = self.expect(";")
            call.span = (name_tok.pos, end.end)
            return call
        if self.cur.text in ("+", "-") and self.peek().text == self.cur.text:
            raise self.unsupported("increment/decrement operator")
        if self.cur.text in ("+", "-", "*", "/", "%") and self.peek().text == "=":
            raise self.unsupported("compound assignment operator")
        raise self.error("expected '=' or '(' after identifier")

    def simple_clause(self, allow_decl: bool) -> AstNode:
        """for-loop init/step clause: declaration, assignment, call, or empty."""
        if self.at(";") or self.at(")"):
            return AstNode(NodeKind.EMPTY, (self.cur.pos, self.cur.pos))
        self.check_keyword()
        if self.at_type():
            if not allow_decl:
                raise self.error("declaration not allowed here")
            start = self.cur
            ctype = self.parse_type()
            name_tok = self.advance()
            if name_tok.kind != "ident":
                raise self.error("expected identifier in declaration")
            children = []
            if self.at("="):
                self.advance()
                children.append(self.expression())
            end_pos = self.tokens[self.i - 1].end
            return AstNode(NodeKind.VAR_DECL, (start.pos, end_pos), children=children,
                           name=name_tok.text, declared_type=ctype)
        name_tok = self.advance()
        if name_tok.kind != "ident":
            raise self.error("expected assignment or call")
        if self.at("="):
            self.advance()
            value = self.expression()
            target = AstNode(NodeKind.IDENT, (name_tok.pos, name_tok.end),
                             name=name_tok.text)
            return AstNode(NodeKind.ASSIGN, (name_tok.pos, value.span[1]),
                           children=[target, value])
        if self.at("("):
            return self.call_rest(name_tok)
        if self.cur.text in ("+", "-") and self.peek().text == self.cur.text:
            raise self.unsupported("increment/decrement operator")
        raise self.error("expected assignment or call")

    def if_stmt(self) -> AstNode:
        start = self.expect("if")
        self.expect("(")
        cond = self.expression()
        self.expect(")")
        then_stmt = self.statement()
        children = [cond, then_stmt]
        end_pos = then_stmt.span[1]
        if self.at("else"):
            self.advance()
            else_stmt = self.statement()
            children.append(else_stmt)
            end_pos = else_stmt.span[1]
        return AstNode(NodeKind.IF, (start.pos, end_pos), children=children)

    def while_stmt(self) -> AstNode:
        start = self.expect("while")
        self.expect("(")
        cond = self.expression()
        self.expect(")")
        body = self.statement()
        return AstNode(NodeKind.WHILE, (start.pos, body.span[1]),
                       children=[cond, body])

    def for_stmt(self) -> AstNode:
        start = self.expect("for")
        self.expect("(")
        init = self.simple_clause(allow_decl=True)
        self.expect(";")
        if self.at(";"):
            cond = AstNode(NodeKind.EMPTY, (self.cur.pos, self.cur.pos))
        else:
            cond = self.expression()
        self.expect(";")
        step = self.simple_clause(allow_decl=False)
        self.expect(")")
        body = self.statement()
        return AstNode(NodeKind.FOR, (start.pos, body.span[1]),
                       children=[init, cond, step, body])

    def return_stmt(self) -> AstNode:
        start = self.expect("return")
        children: list[AstNode] = []
        if not self.at(";"):
            children.append(self.expression())
        end = self.expect(";")
        return AstNode(NodeKind.RETURN, (start.pos, end.end), children=children)

    # -- expressions ----------------------------------------------------------
    def expression(self, min_prec: int = 1) -> AstNode:
        left = self.unary_expr()
        while True:
            op = self.cur.text
            prec = _BIN_PRECEDENCE.get(op)
            if self.cur.kind != "punct" or prec is None or prec < min_prec:
                return left
            self.advance()
            right = self.expression(prec + 1)
            left = AstNode(NodeKind.BINARY, (left.span[0], right.span[1]),
                           children=[left, right], op=op)

    def unary_expr(self) -> AstNode:
        tok = self.cur
        if tok.text in ("-", "!", "&") and tok.kind == "punct":
            self.advance()
            operand = self.unary_expr()
            return AstNode(NodeKind.UNARY, (tok.pos, operand.span[1]),
                           children=[operand], op=tok.text)
        return self.primary()

    def primary(self) -> AstNode:
        tok = self.cur
        self.check_keyword()
        if tok.kind == "int":
            self.advance()
            return AstNode(NodeKind.INT_LITERAL, (tok.pos, tok.end),
                           value=int(tok.text.rstrip("uUlL")), text=tok.text)
        if tok.kind == "string":
            self.advance()
            return AstNode(NodeKind.STR_LITERAL, (tok.pos, tok.end), text=tok.text)
        if tok.text == "(":
            self.advance()
            if self.at_type():
                target = self.parse_type()
                if self.at("*"):
                    raise self.unsupported("pointer cast")
                self.expect(")")
                operand = self.unary_expr()
                return AstNode(NodeKind.CAST, (tok.pos, operand.span[1]),
                               children=[operand], declared_type=target)
            inner = self.expression()
            close = self.expect(")")
            inner.span = (tok.pos, close.end)
            return inner
        if tok.kind == "ident":
            self.advance()
            if self.at("("):
                return self.call_rest(tok)
            return AstNode(NodeKind.IDENT, (tok.pos, tok.end), name=tok.text)
        raise self.error(f"expected expression, found {tok.text or 'end of file'!r}")

    def call_rest(self, name_tok: Token) -> AstNode:
        self.expect("(")
        args: list[AstNode] = []
        if not self.at(")"):
            while True:
                args.append(self.expression())
                if self.at(","):
                    self.advance()
                    continue
                break
        close = self.expect(")")
        return AstNode(NodeKind.CALL, (name_tok.pos, close.end), children=args,
                       name=name_tok.text)


def parse(path: str, text: str) -> SourceUnit:
    """Parse ``text``; raises CSyntaxError / UnsupportedConstruct on bad input."""
    return _Parser(path, text).parse_unit()


def parse_with_diagnostics(path: str, text: str) -> tuple[SourceUnit | None, list[FrontendError]]:
    try:
        return parse(path, text), []
    except FrontendError as err:
        return None, [err]
