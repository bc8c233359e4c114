"""Recursive-descent parser for the word-spec mini-language.

Grammar (whitespace is insignificant)::

    spec     := NAME
              | "morphic" ":" "0" "->" DIGITS "," "1" "->" DIGITS
              | "sturmian" ":" "cf" "=" "[" ints ( ";" ints )? "]"
              | "double" "(" spec ")"
              | "complement" "(" spec ")"
              | "shift" "(" DIGITS "," spec ")"
    ints     := DIGITS ( "," DIGITS )*

``sturmian:cf=[a,b;c,d]`` means the directive a, b, c, d, c, d, ...; without
a ``;`` the whole list repeats.
"""

from __future__ import annotations

import re

from .errors import WordSpecError
from .specs import (NAMED_WORDS, Complemented, Doubled, Morphic, Shifted, SturmianCF,
                    Named, WordSpec)

_TOKEN = re.compile(r"\s*(?:(?P<word>[a-z][a-z-]*)|(?P<digits>[0-9]+)|(?P<punct>->|[:,()\[\]=;]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSpecError(f"unexpected character {text[pos]!r}", position=pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def expect(self, kind, value=None):
        k, v, pos = self.tok
        if k != kind or (value is not None and v != value):
            want = repr(value) if value is not None else kind
            got = "end of input" if k == "end" else repr(v)
            raise WordSpecError(f"unexpected {got}", position=pos, expected=want)
        self.i += 1
        return v

    def spec(self) -> WordSpec:
        kind, value, pos = self.tok
        if kind != "word":
            got = "end of input" if kind == "end" else repr(value)
            raise WordSpecError(f"unexpected {got}", position=pos, expected="a word spec")
        self.i += 1
        if value in NAMED_WORDS:
            return Named(value)
        if value == "morphic":
            self.expect("punct", ":")
            self.expect("digits", "0")
            self.expect("punct", "->")
            img0 = self.expect("digits")
            self.expect("punct", ",")
            self.expect("digits", "1")
            self.expect("punct", "->")
            img1 = self.expect("digits")
            return self._checked(Morphic, pos, img0, img1)
        if value == "sturmian":
            self.expect("punct", ":")
            self.expect("word", "cf")
            self.expect("punct", "=")
            self.expect("punct", "[")
            first = self.ints()
            if self.tok[1] == ";":
                self.i += 1
                period = self.ints()
                self.expect("punct", "]")
                return self._checked(SturmianCF, pos, tuple(period), tuple(first))
            self.expect("punct", "]")
            return self._checked(SturmianCF, pos, tuple(first))
        if value in ("double", "complement"):
            self.expect("punct", "(")
            inner = self.spec()
            self.expect("punct", ")")
            return Doubled(inner) if value == "double" else Complemented(inner)
        if value == "shift":
            self.expect("punct", "(")
            offset = int(self.expect("digits"))
            self.expect("punct", ",")
            inner = self.spec()
            self.expect("punct", ")")
            return Shifted(offset, inner)
        raise WordSpecError(f"unknown word {value!r}", position=pos,
                            expected=" | ".join(NAMED_WORDS + ("morphic", "sturmian", "double",
                                                                "complement", "shift")))

    def ints(self) -> list[int]:
        out = [int(self.expect("digits"))]
        while self.tok[1] == ",":
            self.i += 1
            out.append(int(self.expect("digits")))
        return out

    @staticmethod
    def _checked(cls, pos, *args):
        try:
            return cls(*args)
        except WordSpecError as exc:
            raise WordSpecError(str(exc), position=pos) from None


def parse_spec(text: str) -> WordSpec:
    """Parse a word spec; errors carry the offending position and expected token."""
    parser = _Parser(text)
    spec = parser.spec()
    parser.expect("end")
    return spec
