"""Line-oriented text format for algebra definitions.

Grammar (one statement per line, ``#`` starts a comment, blank lines
are ignored)::

    file    := header stmt*
    header  := "algebra" IDENT NL "dim" INT NL "basis" IDENT+ NL ["unit" IDENT NL]
    stmt    := "mul" IDENT IDENT "=" lincomb | "alpha" IDENT "=" lincomb
    lincomb := "0" | term ("+" term | "-" term)*
    term    := [scalar "*"] IDENT
    scalar  := INT | INT "/" INT | scalar "i" | "(" signed ("+"|"-") signed "i" ")"

Unspecified products and twist images default to zero.  Two sibling
document kinds reuse the same tokenizer: linear-map documents (header
``map``, statements ``alpha`` only) feed the twisting command, and jet
documents (header ``jet``, statements ``mu K eI eJ = lincomb``) feed the
deformation checker.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import HomAlgebra
from .linalg import Matrix, Vector
from .scalars import ZERO, GaussianRational, format_scalar


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()):
        loc = f"line {line}, column {col}"
        full = f"{loc}: {message}"
        if expected:
            full += f" (expected {', '.join(expected)})"
        super().__init__(full)
        self.line = line
        self.col = col
        self.expected = expected


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|\d+|[()+\-*/=]")


@dataclass
class _Token:
    text: str
    line: int
    col: int


def _tokenize_line(text: str, line_no: int) -> list[_Token]:
    body = text.split("#", 1)[0]
    tokens = []
    pos = 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(body, pos)
        if not m:
            raise ParseError(f"unexpected character {body[pos]!r}", line_no, pos + 1)
        tokens.append(_Token(m.group(0), line_no, pos + 1))
        pos = m.end()
    return tokens


class _LineParser:
    def __init__(self, tokens: list[_Token], line_no: int):
        self.tokens = tokens
        self.line_no = line_no
        self.idx = 0

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.idx] if self.idx < len(self.tokens) else None

    def next(self, expected: tuple[str, ...] = ()) -> _Token:
        tok = self.peek()
        if tok is None:
            last_col = self.tokens[-1].col + len(self.tokens[-1].text) if self.tokens else 1
            raise ParseError("unexpected end of line", self.line_no, last_col, expected)
        self.idx += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.next((text,))
        if tok.text != text:
            raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.col, (text,))
        return tok

    def at_end(self) -> bool:
        return self.idx >= len(self.tokens)

    def require_end(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(
                f"trailing token {tok.text!r}", tok.line, tok.col, ("end of line",)
            )

    # -- scalar grammar ----------------------------------------------------

    def _signed_rational(self) -> Fraction:
        sign = 1
        tok = self.peek()
        while tok is not None and tok.text in ("+", "-"):
            if tok.text == "-":
                sign = -sign
            self.next()
            tok = self.peek()
        num_tok = self.next(("integer",))
        if not num_tok.text.isdigit():
            raise ParseError(
                f"malformed scalar near {num_tok.text!r}",
                num_tok.line,
                num_tok.col,
                ("integer",),
            )
        value = Fraction(int(num_tok.text))
        if self.peek() is not None and self.peek().text == "/":
            self.next()
            den_tok = self.next(("integer",))
            if not den_tok.text.isdigit() or int(den_tok.text) == 0:
                raise ParseError(
                    "malformed scalar denominator",
                    den_tok.line,
                    den_tok.col,
                    ("nonzero integer",),
                )
            value = value / int(den_tok.text)
        return sign * value

    def parse_scalar(self, sign: int = 1) -> GaussianRational:
        tok = self.peek()
        if tok is not None and tok.text == "(":
            self.next()
            re_part = self._signed_rational()
            op = self.next(("+", "-"))
            if op.text not in ("+", "-"):
                raise ParseError(
                    f"malformed scalar near {op.text!r}", op.line, op.col, ("+", "-")
                )
            im_part = self._signed_rational()
            if op.text == "-":
                im_part = -im_part
            marker = self.next(("i",))
            if marker.text != "i":
                raise ParseError(
                    f"malformed scalar near {marker.text!r}",
                    marker.line,
                    marker.col,
                    ("i",),
                )
            self.expect(")")
            return GaussianRational(sign * re_part, sign * im_part)
        value = self._signed_rational()
        nxt = self.peek()
        if nxt is not None and nxt.text == "i":
            self.next()
            return GaussianRational(0, sign * value)
        return GaussianRational(sign * value, 0)

    def parse_lincomb(self, names: dict[str, int], dim: int) -> Vector:
        out = [ZERO] * dim
        first = self.peek()
        if first is not None and first.text == "0" and self.idx + 1 == len(self.tokens):
            self.next()
            return tuple(out)
        while True:
            sign = 1
            tok = self.peek()
            while tok is not None and tok.text in ("+", "-"):
                if tok.text == "-":
                    sign = -sign
                self.next()
                tok = self.peek()
            if tok is None:
                raise ParseError(
                    "missing term", self.line_no,
                    self.tokens[-1].col if self.tokens else 1, ("term",),
                )
            if tok.text.isdigit() or tok.text == "(":
                coeff = self.parse_scalar(sign)
                self.expect("*")
                name_tok = self.next(("basis name",))
            else:
                coeff = GaussianRational(sign, 0)
                name_tok = self.next(("basis name",))
            if name_tok.text not in names:
                raise ParseError(
                    f"unknown basis name {name_tok.text!r}",
                    name_tok.line,
                    name_tok.col,
                    ("basis name",),
                )
            idx = names[name_tok.text]
            out[idx] = out[idx] + coeff
            nxt = self.peek()
            if nxt is None:
                return tuple(out)
            if nxt.text not in ("+", "-"):
                raise ParseError(
                    f"unexpected token {nxt.text!r}", nxt.line, nxt.col, ("+", "-")
                )


@dataclass
class AlgebraDocument:
    label: str
    dim: int
    basis_names: list[str]
    unit_name: Optional[str] = None
    products: dict[tuple[int, int], Vector] = field(default_factory=dict)
    twist_columns: dict[int, Vector] = field(default_factory=dict)
    locations: dict[str, tuple[int, int]] = field(default_factory=dict)

    def to_algebra(self) -> HomAlgebra:
        n = self.dim
        tensor = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), vec in self.products.items():
            for k in range(n):
                tensor[i][j][k] = vec[k]
        twist_rows = [
            [self.twist_columns.get(j, (ZERO,) * n)[i] for j in range(n)]
            for i in range(n)
        ]
        unit = None
        if self.unit_name is not None:
            unit = self.basis_names.index(self.unit_name)
        return HomAlgebra(n, tensor, Matrix(twist_rows), unit, self.label)


def _parse_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize_line(raw, line_no)
        if tokens:
            yield _LineParser(tokens, line_no)


def parse(text: str) -> AlgebraDocument:
    """Parse an algebra document; raises ParseError with position info."""
    lines = list(_parse_lines(text))
    if not lines:
        raise ParseError("empty document", 1, 1, ("algebra",))
    header = lines[0]
    kw = header.expect("algebra")
    label = header.next(("identifier",)).text
    header.require_end()
    if len(lines) < 3:
        raise ParseError("missing dim/basis lines", kw.line, kw.col, ("dim", "basis"))
    dim_line = lines[1]
    dim_line.expect("dim")
    dim_tok = dim_line.next(("integer",))
    if not dim_tok.text.isdigit() or int(dim_tok.text) < 1:
        raise ParseError(
            f"bad dimension {dim_tok.text!r}", dim_tok.line, dim_tok.col, ("positive integer",)
        )
    dim = int(dim_tok.text)
    dim_line.require_end()
    basis_line = lines[2]
    basis_line.expect("basis")
    names: list[str] = []
    while not basis_line.at_end():
        tok = basis_line.next(("identifier",))
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok.text):
            raise ParseError(
                f"bad basis name {tok.text!r}", tok.line, tok.col, ("identifier",)
            )
        if tok.text in names:
            raise ParseError(
                f"duplicate basis name {tok.text!r}", tok.line, tok.col
            )
        names.append(tok.text)
    if len(names) != dim:
        raise ParseError(
            f"basis lists {len(names)} names but dim is {dim}",
            basis_line.line_no,
            1,
            ("matching basis list",),
        )
    name_index = {n: i for i, n in enumerate(names)}
    doc = AlgebraDocument(label, dim, names)
    rest = lines[3:]
    if rest and rest[0].peek().text == "unit":
        unit_line = rest[0]
        unit_line.expect("unit")
        tok = unit_line.next(("basis name",))
        if tok.text not in name_index:
            raise ParseError(
                f"unknown basis name {tok.text!r}", tok.line, tok.col, ("basis name",)
            )
        unit_line.require_end()
        doc.unit_name = tok.text
        rest = rest[1:]
    for parser in rest:
        head = parser.next(("mul", "alpha"))
        if head.text == "mul":
            a = parser.next(("basis name",))
            b = parser.next(("basis name",))
            for tok in (a, b):
                if tok.text not in name_index:
                    raise ParseError(
                        f"unknown basis name {tok.text!r}", tok.line, tok.col,
                        ("basis name",),
                    )
            parser.expect("=")
            key = (name_index[a.text], name_index[b.text])
            if key in doc.products:
                raise ParseError(
                    f"duplicate product statement for {a.text} {b.text}",
                    head.line,
                    head.col,
                )
            doc.products[key] = parser.parse_lincomb(name_index, dim)
            parser.require_end()
            doc.locations[f"mul {a.text} {b.text}"] = (head.line, head.col)
        elif head.text == "alpha":
            a = parser.next(("basis name",))
            if a.text not in name_index:
                raise ParseError(
                    f"unknown basis name {a.text!r}", a.line, a.col, ("basis name",)
                )
            parser.expect("=")
            idx = name_index[a.text]
            if idx in doc.twist_columns:
                raise ParseError(
                    f"duplicate twist statement for {a.text}", head.line, head.col
                )
            doc.twist_columns[idx] = parser.parse_lincomb(name_index, dim)
            parser.require_end()
            doc.locations[f"alpha {a.text}"] = (head.line, head.col)
        else:
            raise ParseError(
                f"unknown statement {head.text!r}", head.line, head.col,
                ("mul", "alpha"),
            )
    return doc


def parse_algebra(text: str) -> HomAlgebra:
    return parse(text).to_algebra()


def _format_term(coeff: GaussianRational, name: str) -> tuple[bool, str]:
    """Returns (negate, text) where negate means join with ' - '."""
    negative = coeff.re < 0 or (coeff.re == 0 and coeff.im < 0)
    if negative:
        coeff = -coeff
    if coeff == GaussianRational(1):
        return negative, name
    return negative, f"{format_scalar(coeff)}*{name}"


def format_lincomb(vec: Vector, names: list[str]) -> str:
    chunks = []
    for idx, coeff in enumerate(vec):
        if coeff:
            chunks.append(_format_term(coeff, names[idx]))
    if not chunks:
        return "0"
    neg, text = chunks[0]
    out = ("-" if neg else "") + text
    for neg, text in chunks[1:]:
        out += f" {'-' if neg else '+'} {text}"
    return out


def serialize(algebra: HomAlgebra, basis_names: Optional[list[str]] = None) -> str:
    """Canonical document; parsing it reproduces the algebra exactly."""
    n = algebra.dim
    names = basis_names or [f"e{i + 1}" for i in range(n)]
    label = algebra.label or "algebra"
    lines = [f"algebra {label}", f"dim {n}", "basis " + " ".join(names)]
    if algebra.unit is not None:
        lines.append(f"unit {names[algebra.unit]}")
    for i in range(n):
        for j in range(n):
            vec = algebra.basis_product(i, j)
            if any(vec):
                lines.append(f"mul {names[i]} {names[j]} = {format_lincomb(vec, names)}")
    for j in range(n):
        col = algebra.twist.column(j)
        if any(col):
            lines.append(f"alpha {names[j]} = {format_lincomb(col, names)}")
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> tuple[str, Matrix]:
    """A linear-map document: header ``map NAME`` then alpha statements."""
    lines = list(_parse_lines(text))
    if not lines:
        raise ParseError("empty document", 1, 1, ("map",))
    header = lines[0]
    head_tok = header.peek()
    if head_tok.text not in ("map", "algebra"):
        raise ParseError(
            f"unknown document kind {head_tok.text!r}", head_tok.line, head_tok.col,
            ("map", "algebra"),
        )
    # reuse the algebra parser by rewriting the head keyword
    rewritten = text.replace(head_tok.text, "algebra", 1)
    doc = parse(rewritten)
    if doc.products:
        raise ParseError(
            "a linear-map document must not contain mul statements", 1, 1
        )
    cols = [doc.twist_columns.get(j, (ZERO,) * doc.dim) for j in range(doc.dim)]
    return doc.label, Matrix.from_columns(cols)


def parse_jet(text: str, base: HomAlgebra):
    """A jet document: ``jet NAME``, dim/basis, then ``mu K eI eJ = lincomb``."""
    from .deformation import DeformationJet

    lines = list(_parse_lines(text))
    if not lines:
        raise ParseError("empty document", 1, 1, ("jet",))
    header = lines[0]
    header.expect("jet")
    header.next(("identifier",))
    header.require_end()
    if len(lines) < 3:
        raise ParseError("missing dim/basis lines", 1, 1, ("dim", "basis"))
    dim_line = lines[1]
    dim_line.expect("dim")
    dim = int(dim_line.next(("integer",)).text)
    if dim != base.dim:
        raise ParseError(
            f"jet dimension {dim} does not match the base algebra ({base.dim})",
            dim_line.line_no,
            1,
        )
    basis_line = lines[2]
    basis_line.expect("basis")
    names = []
    while not basis_line.at_end():
        names.append(basis_line.next(("identifier",)).text)
    if len(names) != dim:
        raise ParseError("basis list does not match dim", basis_line.line_no, 1)
    name_index = {n: i for i, n in enumerate(names)}
    terms: dict[int, list] = {}
    for parser in lines[3:]:
        head = parser.expect("mu")
        order_tok = parser.next(("positive integer",))
        if not order_tok.text.isdigit() or int(order_tok.text) < 1:
            raise ParseError(
                f"bad jet order {order_tok.text!r}", order_tok.line, order_tok.col,
                ("positive integer",),
            )
        order = int(order_tok.text)
        a = parser.next(("basis name",))
        b = parser.next(("basis name",))
        for tok in (a, b):
            if tok.text not in name_index:
                raise ParseError(
                    f"unknown basis name {tok.text!r}", tok.line, tok.col,
                    ("basis name",),
                )
        parser.expect("=")
        vec = parser.parse_lincomb(name_index, dim)
        parser.require_end()
        tensor = terms.setdefault(
            order, [[(ZERO,) * dim for _ in range(dim)] for _ in range(dim)]
        )
        tensor[name_index[a.text]][name_index[b.text]] = vec
    if not terms:
        return DeformationJet(base, [])
    top = max(terms)
    zero = [[(ZERO,) * dim for _ in range(dim)] for _ in range(dim)]
    return DeformationJet(base, [terms.get(k, zero) for k in range(1, top + 1)])
