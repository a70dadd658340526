"""Concrete clause syntax.

    p(f(f(X))) :- p(X).        definite clause
    p(a, X) ; p(Y, b).         disjunction of positive literals
    :- q(X), r(X).             goal
    false.                     the empty clause

Variables start with an uppercase letter, constants and functors with a
lowercase one. `%` starts a comment. Constants and functors of the form
v<digits> or sk<digits> are reserved for generated names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import RESERVED, Clause, Const, Fn, Literal, Var

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|%[^\n]*)
  | (?P<nl>\n)
  | (?P<neck>:-)
  | (?P<var>[A-Z_][A-Za-z0-9_]*)
  | (?P<name>[a-z][A-Za-z0-9_]*)
  | (?P<punct>[(),;.])
""", re.VERBOSE)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


@dataclass
class Program:
    clauses: list = field(default_factory=list)
    source_spans: list = field(default_factory=list)  # (line, column) of each clause start

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)


def _tokenize(text):
    line, start, pos = 1, 0, 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind != "ws":
            out.append((kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(("eof", "", line, pos - start + 1))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, line, col = self.next()
        if text != value:
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", line, col)

    def error(self, msg):
        _, _, line, col = self.peek()
        raise ParseError(msg, line, col)

    def program(self) -> Program:
        prog = Program()
        while self.peek()[0] != "eof":
            _, _, line, col = self.peek()
            prog.clauses.append(self.clause())
            prog.source_spans.append((line, col))
        return prog

    def clause(self) -> Clause:
        kind, text, _, _ = self.peek()
        if kind == "name" and text == "false" and self.toks[self.i + 1][1] == ".":
            self.next()
            self.next()
            return Clause()
        lits = []
        if text != ":-":
            lits.append(self.atom(True))
            while self.peek()[1] == ";":
                self.next()
                lits.append(self.atom(True))
        if self.peek()[1] == ":-":
            self.next()
            lits.append(self.atom(False))
            while self.peek()[1] == ",":
                self.next()
                lits.append(self.atom(False))
        self.expect(".")
        return Clause(lits)

    def atom(self, positive) -> Literal:
        kind, text, line, col = self.next()
        if kind != "name":
            raise ParseError(f"expected a predicate, found {text or 'end of input'!r}", line, col)
        return Literal(positive, text, self.args())

    def args(self) -> tuple:
        if self.peek()[1] != "(":
            return ()
        self.next()
        out = [self.term()]
        while self.peek()[1] == ",":
            self.next()
            out.append(self.term())
        self.expect(")")
        return tuple(out)

    def term(self):
        kind, text, line, col = self.next()
        if kind == "var":
            return Var(text)
        if kind != "name":
            raise ParseError(f"expected a term, found {text or 'end of input'!r}", line, col)
        if RESERVED.match(text):
            raise ParseError(f"{text!r} is in the reserved namespace", line, col)
        args = self.args()
        return Fn(text, args) if args else Const(text)


def parse_program(text: str) -> Program:
    return _Parser(text).program()


def parse_clause(text: str) -> Clause:
    text = text.strip()
    if not text.endswith("."):
        text += "."
    prog = parse_program(text)
    if len(prog) != 1:
        raise ParseError(f"expected one clause, found {len(prog)}", 1, 1)
    return prog.clauses[0]


def _term(t, names) -> str:
    if isinstance(t, Fn):
        return f"{t.functor}({','.join(_term(a, names) for a in t.args)})"
    if isinstance(t, Var):
        if t not in names:
            names[t] = f"X{len(names)}"
        return names[t]
    return t.name


def _atom(l: Literal, names) -> str:
    if not l.args:
        return l.predicate
    return f"{l.predicate}({','.join(_term(a, names) for a in l.args)})"


def _canonical(c: Clause, limit: int = 20000):
    """Least rendering of c over literal orders, heads first.

    Variables are numbered by first occurrence, so the result does not depend
    on the original names. Only ties in the next literal are branched on.
    """
    best = None
    nodes = 0

    def rec(remaining, names, acc):
        nonlocal best, nodes
        nodes += 1
        if not remaining:
            if best is None or acc < best:
                best = acc
            return
        options = []
        for l in remaining:
            n = dict(names)
            options.append(((not l.positive, _atom(l, n)), l, n))
        low = min(o[0] for o in options)
        if best is not None and acc + [low] > best[:len(acc) + 1]:
            return
        for key, l, n in options:
            if key == low and (nodes < limit or best is None):
                rec(remaining - {l}, n, acc + [key])

    rec(frozenset(c.literals), {}, [])
    return best


def print_clause(c: Clause) -> str:
    """Canonical text: heads first, then body; variables renamed X0, X1, ..."""
    if c.is_empty:
        return "false."
    order = _canonical(c)
    heads = [s for neg, s in order if not neg]
    body = [s for neg, s in order if neg]
    out = " ; ".join(heads)
    if body:
        out = (out + " :- " if out else ":- ") + ", ".join(body)
    return out + "."
