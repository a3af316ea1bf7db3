"""Text syntax for descriptors and elements.

    D ::= Z | Q | Matrix
        | Free ( NAT ; RAT {, RAT} )  | FreeAb ( NAT ; RAT {, RAT} )
        | Trivial ( D ) | Lex ( D , D )
        | Prod ( D , D {, D} ) | Strict ( D , D {, D} )

Elements follow the descriptor: numbers "-3/2", tuples "(x, y)", matrices
"M(a,b)", words "g1 -g2 g1^-2" with "e" for the empty word.  Whitespace is
ignored between tokens.  Errors carry the byte offset of the offending token.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError, ShapeMismatch
from .groups import Descriptor, Free, Int, Lex, Mat, Matrix, Prod, Rat, Trivial

_KEYWORDS = ("Matrix", "FreeAb", "Free", "Trivial", "Prod", "Strict", "Lex", "Z", "Q")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def found(self) -> str:
        self.skip()
        if self.pos >= len(self.text):
            return "end of input"
        j = self.pos + 1
        if self.text[self.pos].isalnum():
            while j < len(self.text) and self.text[j].isalnum():
                j += 1
        return self.text[self.pos : j]

    def fail(self, *expected: str):
        self.skip()
        offset = len(self.text[: self.pos].encode("utf-8"))
        raise ParseError(offset, expected, self.found())

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            self.fail(tok)
        self.pos += 1

    def accept(self, tok: str) -> bool:
        if self.peek() == tok:
            self.pos += 1
            return True
        return False

    def word(self) -> str:
        self.skip()
        j = self.pos
        while j < len(self.text) and self.text[j].isalpha():
            j += 1
        return self.text[self.pos : j]

    def nat(self) -> int:
        self.skip()
        j = self.pos
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == self.pos:
            self.fail("natural number")
        n = int(self.text[self.pos : j])
        self.pos = j
        return n

    def integer(self) -> int:
        neg = self.accept("-")
        if not neg:
            self.accept("+")
        n = self.nat()
        return -n if neg else n

    def rational(self) -> Fraction:
        p = self.integer()
        if self.accept("/"):
            start = self.pos
            q = self.nat()
            if q == 0:
                self.pos = start
                self.skip()
                raise ParseError(len(self.text[: self.pos].encode("utf-8")), ("nonzero denominator",), "0")
            return Fraction(p, q)
        return Fraction(p)

    def end(self) -> None:
        if self.peek() != "":
            self.fail("end of input")


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------


def parse_descriptor(text: str) -> Descriptor:
    s = _Scanner(text)
    d = _descriptor(s)
    s.end()
    return d


def _descriptor(s: _Scanner) -> Descriptor:
    start = s.pos
    name = s.word()
    if name not in _KEYWORDS:
        s.pos = start
        s.fail(*_KEYWORDS)
    s.pos += len(name)
    if name == "Z":
        return Int()
    if name == "Q":
        return Rat()
    if name == "Matrix":
        return Matrix()
    s.expect("(")
    if name in ("Free", "FreeAb"):
        k = s.nat()
        s.expect(";")
        vals = [s.rational()]
        while s.accept(","):
            vals.append(s.rational())
        s.expect(")")
        try:
            return Free(k, tuple(vals), name == "FreeAb")
        except ShapeMismatch as exc:
            raise ParseError(len(s.text[:start].encode("utf-8")), ("valid free-group parameters",), str(exc)) from exc
    if name == "Trivial":
        child = _descriptor(s)
        s.expect(")")
        return Trivial(child)
    first = _descriptor(s)
    s.expect(",")
    second = _descriptor(s)
    if name == "Lex":
        s.expect(")")
        return Lex(first, second)
    children = [first, second]
    while s.accept(","):
        children.append(_descriptor(s))
    s.expect(")")
    return Prod(tuple(children), name == "Strict")


def _num(x: Fraction) -> str:
    return str(Fraction(x))


def print_descriptor(desc: Descriptor) -> str:
    match desc:
        case Int():
            return "Z"
        case Rat():
            return "Q"
        case Matrix():
            return "Matrix"
        case Free(k=k, vals=vals, abelian=ab):
            return f"{'FreeAb' if ab else 'Free'}({k}; {', '.join(_num(v) for v in vals)})"
        case Trivial(child=c):
            return f"Trivial({print_descriptor(c)})"
        case Lex(first=a, second=g):
            return f"Lex({print_descriptor(a)}, {print_descriptor(g)})"
        case Prod(children=cs, strict=strict):
            return f"{'Strict' if strict else 'Prod'}({', '.join(print_descriptor(c) for c in cs)})"
    raise ShapeMismatch(f"unknown descriptor {desc!r}")


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


def parse_element(desc: Descriptor, text: str):
    s = _Scanner(text)
    x = _element(s, desc)
    s.end()
    return desc.check(x)


def _element(s: _Scanner, desc: Descriptor):
    match desc:
        case Int():
            return s.integer()
        case Rat():
            return s.rational()
        case Matrix():
            if s.word() != "M":
                s.fail("M")
            s.pos += 1
            s.expect("(")
            a = s.rational()
            s.expect(",")
            b = s.rational()
            s.expect(")")
            if a <= 0:
                raise ShapeMismatch(f"matrix entry a must be > 0, got {a}")
            return Mat(a, b)
        case Free():
            return desc.normalize(_word(s))
        case Trivial(child=c):
            return _element(s, c)
        case Prod() | Lex():
            parts = desc.children if isinstance(desc, Prod) else (desc.first, desc.second)
            s.expect("(")
            out = [_element(s, parts[0])]
            for p in parts[1:]:
                s.expect(",")
                out.append(_element(s, p))
            s.expect(")")
            return tuple(out)
    raise ShapeMismatch(f"unknown descriptor {desc!r}")


def _word(s: _Scanner) -> list:
    letters: list = []
    if s.peek() in ("e", "0"):
        s.pos += 1
        return letters
    while True:
        c = s.peek()
        if c not in ("g", "-", "+"):
            break
        sign = -1 if s.accept("-") else 1
        if sign > 0:
            s.accept("+")
        if s.peek() != "g":
            s.fail("g")
        s.pos += 1
        i = s.nat()
        power = 1
        if s.accept("^"):
            power = s.integer()
        n = sign * power
        letters += [(i, 1 if n > 0 else -1)] * abs(n)
    if not letters:
        s.fail("g", "e")
    return letters


def print_element(desc: Descriptor, x) -> str:
    match desc:
        case Int() | Rat():
            return _num(x)
        case Matrix():
            return f"M({_num(x.a)},{_num(x.b)})"
        case Free():
            return repr(x)
        case Trivial(child=c):
            return print_element(c, x)
        case Prod(children=cs):
            return "(" + ", ".join(print_element(c, v) for c, v in zip(cs, x)) + ")"
        case Lex(first=a, second=g):
            return f"({print_element(a, x[0])}, {print_element(g, x[1])})"
    raise ShapeMismatch(f"unknown descriptor {desc!r}")
