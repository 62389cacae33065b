"""Tokenizer for the C subset.

Preprocessor lines (anything whose first non-blank character is ``#``) are
skipped verbatim so headers stay visible to a real compiler but invisible to
the parser.  Comments are skipped; the fault-annotation comment used by the
test harness is line-based and read straight from the raw text, not here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CSyntaxError

PUNCT_2 = ("<=", ">=", "==", "!=", "&&", "||")
PUNCT_1 = "+-*/%<>=!&(){};,[]"  # brackets lex fine; the parser rejects arrays

KEYWORDS = frozenset({
    "if", "else", "while", "for", "return", "extern", "const",
    "void", "char", "short", "int", "unsigned", "int64_t",
})

# Recognized keywords that are deliberately outside the subset; reporting them
# by name beats a generic syntax error.
UNSUPPORTED_KEYWORDS = frozenset({
    "goto", "switch", "case", "default", "struct", "union", "enum", "typedef",
    "do", "break", "continue", "sizeof", "static", "long", "float", "double",
    "signed", "register", "volatile", "auto",
})


@dataclass(frozen=True)
class Token:
    kind: str          # "ident", "int", "string", "punct", "eof"
    text: str
    pos: int
    line: int
    col: int

    @property
    def end(self) -> int:
        return self.pos + len(self.text)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    line = 1
    line_start = 0
    n = len(text)
    at_line_head = True

    def make(kind: str, start: int, lexeme: str) -> Token:
        return Token(kind, lexeme, start, line, start - line_start + 1)

    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            line_start = i
            at_line_head = True
            continue
        if ch in " \t\r":
            i += 1
            continue
        if ch == "#" and at_line_head:
            while i < n and text[i] != "\n":
                i += 1
            continue
        at_line_head = False
        if ch == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "*":
            end = text.find("*/", i + 2)
            if end < 0:
                raise CSyntaxError(line, i - line_start + 1, "unterminated comment")
            for j in range(i, end):
                if text[j] == "\n":
                    line += 1
                    line_start = j + 1
            i = end + 2
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\\":
                    j += 1
                elif text[j] == "\n":
                    raise CSyntaxError(line, i - line_start + 1, "unterminated string literal")
                j += 1
            if j >= n:
                raise CSyntaxError(line, i - line_start + 1, "unterminated string literal")
            tokens.append(make("string", i, text[i:j + 1]))
            i = j + 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            # integer suffixes are accepted and ignored
            k = j
            while k < n and text[k] in "uUlL":
                k += 1
            tokens.append(make("int", i, text[i:k]))
            i = k
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(make("ident", i, text[i:j]))
            i = j
            continue
        two = text[i:i + 2]
        if two in PUNCT_2:
            tokens.append(make("punct", i, two))
            i += 2
            continue
        if ch in PUNCT_1:
            tokens.append(make("punct", i, ch))
            i += 1
            continue
        raise CSyntaxError(line, i - line_start + 1, f"unexpected character {ch!r}")

    tokens.append(Token("eof", "", n, line, n - line_start + 1))
    return tokens
