"""Abstract syntax, lexer and parser for term files.

Grammar (``.`` binds loosest, then ``*``, then ``@``)::

    program  := decl* term? ';'?
    decl     := 'obj' NAME '=' (INT | object) ';'
              | 'gen' NAME ':' object '->' object ('=' matrix)? ';'
              | 'gen' NAME '=' matrix (':' object '->' object)? ';'
    term     := tensor ('.' tensor)*
    tensor   := scaled ('*' scaled)*
    scaled   := (LIT | '(' LIT ')') '@' scaled | atom
    atom     := 'id' '(' object ')' | 'sym' '(' object ',' object ')'
              | 'eta' '(' object ')' | 'eps' '(' object ')'
              | ('dg' | 'conj' | 'tp' | 'name' | 'coname') '(' term ')'
              | 'tr' '(' term ';' object ')' | NAME | '(' term ')'
    object   := ofactor (('*' ofactor) | '*' | '^*')*
    ofactor  := NAME | INT | 'I' | '(' object ')'

Inside objects a ``*`` followed by another factor is a tensor, otherwise it
dualizes the preceding factor: ``A*B`` is a tensor, ``A*`` a dual.
Scalar literals are exact: ``3``, ``-1/2``, ``1+2i``, ``-i``, ``true``; the
name ``i`` is reserved for the imaginary unit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..semiring import Literal, SemiringError, parse_literal


class TermSyntaxError(SyntaxError):
    def __init__(self, msg, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.pos = pos
        self.lineno = line
        self.offset = col


# -- objects -------------------------------------------------------------------

@dataclass(frozen=True)
class Obj:
    """A tensor word of named base factors; ``(name, dualized)`` pairs."""

    factors: tuple[tuple[str, bool], ...] = ()

    @property
    def dual(self) -> "Obj":
        return Obj(tuple((n, not d) for n, d in self.factors))

    def __matmul__(self, other: "Obj") -> "Obj":
        return Obj(self.factors + other.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        if not self.factors:
            return "I"
        return "*".join(n + ("^*" if d else "") for n, d in self.factors)


I = Obj()


def base(name: str) -> Obj:
    return Obj(((name, False),))


# -- terms ---------------------------------------------------------------------

class Term:
    __slots__ = ()

    def __str__(self):
        return show(self)


@dataclass(frozen=True, eq=True)
class Gen(Term):
    name: str


@dataclass(frozen=True)
class Id(Term):
    obj: Obj


@dataclass(frozen=True)
class Compose(Term):
    """``left . right``: ``right`` is applied first."""

    left: Term
    right: Term


@dataclass(frozen=True)
class Tensor(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Sym(Term):
    a: Obj
    b: Obj


@dataclass(frozen=True)
class Eta(Term):
    obj: Obj


@dataclass(frozen=True)
class Epsilon(Term):
    obj: Obj


@dataclass(frozen=True)
class Dagger(Term):
    body: Term


@dataclass(frozen=True)
class Conj(Term):
    body: Term


@dataclass(frozen=True)
class Transp(Term):
    body: Term


@dataclass(frozen=True)
class Name(Term):
    body: Term


@dataclass(frozen=True)
class Coname(Term):
    body: Term


@dataclass(frozen=True)
class Trace(Term):
    body: Term
    obj: Obj


@dataclass(frozen=True)
class ScalarMul(Term):
    scalar: Literal
    body: Term


_UNARY = {"dg": Dagger, "conj": Conj, "tp": Transp, "name": Name, "coname": Coname}
_UNARY_NAMES = {v: k for k, v in _UNARY.items()}


def show(t: Term) -> str:
    """Render a term in parseable concrete syntax (fully parenthesized binaries)."""
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Id):
        return f"id({t.obj})"
    if isinstance(t, Sym):
        return f"sym({t.a}, {t.b})"
    if isinstance(t, Eta):
        return f"eta({t.obj})"
    if isinstance(t, Epsilon):
        return f"eps({t.obj})"
    if isinstance(t, Compose):
        return f"({show(t.left)} . {show(t.right)})"
    if isinstance(t, Tensor):
        return f"({show(t.left)} * {show(t.right)})"
    if isinstance(t, Trace):
        return f"tr({show(t.body)}; {t.obj})"
    if isinstance(t, ScalarMul):
        return f"{t.scalar} @ {show(t.body)}"
    return f"{_UNARY_NAMES[type(t)]}({show(t.body)})"


def size(t: Term) -> int:
    """Number of term-constructor nodes (objects are not counted)."""
    if isinstance(t, (Compose, Tensor)):
        return 1 + size(t.left) + size(t.right)
    if isinstance(t, (Dagger, Conj, Transp, Name, Coname, Trace, ScalarMul)):
        return 1 + size(t.body)
    return 1


def generators(t: Term) -> set[str]:
    if isinstance(t, Gen):
        return {t.name}
    if isinstance(t, (Compose, Tensor)):
        return generators(t.left) | generators(t.right)
    if hasattr(t, "body"):
        return generators(t.body)
    return set()


def has_scalars(t: Term) -> bool:
    if isinstance(t, ScalarMul):
        return True
    if isinstance(t, (Compose, Tensor)):
        return has_scalars(t.left) or has_scalars(t.right)
    if hasattr(t, "body"):
        return has_scalars(t.body)
    return False


# -- programs ------------------------------------------------------------------

@dataclass
class GenDecl:
    name: str
    dom: Obj | None
    cod: Obj | None
    matrix: list[list[Literal]] | None = None
    # numeric object annotation from a bare matrix literal, e.g. ``: 2 -> 2*``
    literal_types: bool = False


@dataclass
class Program:
    objects: dict[str, int | Obj] = field(default_factory=dict)
    gens: dict[str, GenDecl] = field(default_factory=dict)
    term: Term | None = None


# -- lexer ---------------------------------------------------------------------

_LIT = r"[+-]?(?:\d+(?:/\d+)?(?:[+-](?:\d+(?:/\d+)?)?i|i)?|i)"
_TOKEN_RE = re.compile(rf"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<arrow>->)
  | (?P<caret>\^\*)
  | (?P<lit>{_LIT})(?![A-Za-z_0-9])
  | (?P<name>[A-Za-z_][A-Za-z_0-9']*)
  | (?P<op>[()\[\],;:.*@=])
""", re.VERBOSE)

KEYWORDS = {"obj", "gen", "id", "sym", "eta", "eps", "tr", "true", "false", "i"} | set(_UNARY)


@dataclass
class Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            s = m.group()
            if kind == "name" and s in ("true", "false"):
                kind = "lit"
            toks.append(Tok("op" if kind in ("arrow", "caret") else kind, s, pos))
        pos = m.end()
    toks.append(Tok("eof", "", len(text)))
    return toks


# -- parser --------------------------------------------------------------------

class Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def peek(self, k=1) -> Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise TermSyntaxError(f"{msg}, found {found}", self.text, tok.pos)

    def at(self, text) -> bool:
        return self.tok.text == text and self.tok.kind in ("op", "name")

    def expect(self, text) -> Tok:
        if not self.at(text):
            self.error(f"expected {text!r}")
        t = self.tok
        self.i += 1
        return t

    def ident(self) -> str:
        if self.tok.kind != "name" or self.tok.text in KEYWORDS:
            self.error("expected a name")
        t = self.tok
        self.i += 1
        return t.text

    def literal(self) -> Literal:
        if self.tok.kind != "lit":
            self.error("expected a scalar literal")
        t = self.tok
        self.i += 1
        try:
            return parse_literal(t.text)
        except SemiringError as exc:
            raise TermSyntaxError(str(exc), self.text, t.pos) from None

    # objects
    def obj(self) -> Obj:
        pieces = [self.ofactor()]
        while True:
            if self.at("^*"):
                self.i += 1
                pieces[-1] = pieces[-1].dual
            elif self.at("*"):
                self.i += 1
                nxt = self.tok
                if nxt.kind in ("name", "lit") or (nxt.kind == "op" and nxt.text == "("):
                    pieces.append(self.ofactor())
                else:
                    pieces[-1] = pieces[-1].dual
            else:
                out = I
                for p in pieces:
                    out = out @ p
                return out

    def ofactor(self) -> Obj:
        t = self.tok
        if t.kind == "op" and t.text == "(":
            self.i += 1
            o = self.obj()
            self.expect(")")
            return o
        if t.kind == "lit":
            if not re.fullmatch(r"\d+", t.text) or int(t.text) < 1:
                self.error("object dimensions must be positive integers")
            self.i += 1
            return base(t.text)
        if t.kind == "name" and t.text == "I":
            self.i += 1
            return I
        return base(self.ident())

    # terms
    def term(self) -> Term:
        t = self.tensor()
        while self.at("."):
            self.i += 1
            t = Compose(t, self.tensor())
        return t

    def tensor(self) -> Term:
        t = self.scaled()
        while self.at("*"):
            self.i += 1
            t = Tensor(t, self.scaled())
        return t

    def scaled(self) -> Term:
        if self.tok.kind == "lit":
            s = self.literal()
            self.expect("@")
            return ScalarMul(s, self.scaled())
        if self.at("(") and self.peek().kind == "lit" and self.peek(2).text == ")":
            self.i += 1
            s = self.literal()
            self.i += 1
            self.expect("@")
            return ScalarMul(s, self.scaled())
        return self.atom()

    def atom(self) -> Term:
        t = self.tok
        if t.kind == "op" and t.text == "(":
            self.i += 1
            body = self.term()
            self.expect(")")
            return body
        if t.kind != "name":
            self.error("expected a term")
        kw = t.text
        if kw in ("id", "eta", "eps"):
            self.i += 1
            self.expect("(")
            o = self.obj()
            self.expect(")")
            return {"id": Id, "eta": Eta, "eps": Epsilon}[kw](o)
        if kw == "sym":
            self.i += 1
            self.expect("(")
            a = self.obj()
            self.expect(",")
            b = self.obj()
            self.expect(")")
            return Sym(a, b)
        if kw in _UNARY:
            self.i += 1
            self.expect("(")
            body = self.term()
            self.expect(")")
            return _UNARY[kw](body)
        if kw == "tr":
            self.i += 1
            self.expect("(")
            body = self.term()
            self.expect(";")
            o = self.obj()
            self.expect(")")
            return Trace(body, o)
        return Gen(self.ident())

    # matrices and declarations
    def matrix(self) -> list[list[Literal]]:
        self.expect("[")
        rows = []
        while True:
            self.expect("[")
            row = [self.literal()]
            while self.at(","):
                self.i += 1
                row.append(self.literal())
            self.expect("]")
            rows.append(row)
            if not self.at(","):
                break
            self.i += 1
        self.expect("]")
        if len({len(r) for r in rows}) != 1:
            self.error("matrix rows have different lengths")
        return rows

    def program(self) -> Program:
        prog = Program()
        while self.tok.kind != "eof":
            if self.at("obj"):
                self.i += 1
                tok = self.tok
                n = self.ident()
                self.expect("=")
                if self.tok.kind == "lit" and self.peek().text == ";":
                    lit = self.tok.text
                    if not re.fullmatch(r"\d+", lit) or int(lit) < 1:
                        self.error("object dimensions must be positive integers")
                    self.i += 1
                    prog.objects[n] = int(lit)
                else:
                    prog.objects[n] = self.obj()
                if n in ("I",):
                    self.error("cannot redefine I", tok)
                self.expect(";")
            elif self.at("gen"):
                self.i += 1
                n = self.ident()
                decl = GenDecl(n, None, None)
                if self.at(":"):
                    self.i += 1
                    decl.dom = self.obj()
                    self.expect("->")
                    decl.cod = self.obj()
                    if self.at("="):
                        self.i += 1
                        decl.matrix = self.matrix()
                else:
                    self.expect("=")
                    decl.matrix = self.matrix()
                    if self.at(":"):
                        self.i += 1
                        decl.dom = self.obj()
                        self.expect("->")
                        decl.cod = self.obj()
                        decl.literal_types = True
                self.expect(";")
                prog.gens[n] = decl
            else:
                if prog.term is not None:
                    self.error("only one term per file")
                prog.term = self.term()
                if self.at(";"):
                    self.i += 1
                if self.tok.kind != "eof":
                    self.error("expected end of input")
        return prog


def parse(text: str) -> Term:
    """Parse a single term expression."""
    p = Parser(text)
    t = p.term()
    if p.tok.kind != "eof":
        p.error("expected end of input")
    return t


def parse_object(text: str) -> Obj:
    p = Parser(text)
    o = p.obj()
    if p.tok.kind != "eof":
        p.error("expected end of input")
    return o


def parse_program(text: str) -> Program:
    return Parser(text).program()
