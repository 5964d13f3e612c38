"""Text formats: groups, representations, systems, terms, and
quasi-identities.

Serialization is canonical (equal values give byte-identical text) and
parse(serialize(v)) == v structurally.  Every parse error carries a
1-based source span.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .config import DEFAULT_CAPS, EnumerationCaps
from .errors import InvalidInput, ParseError, UnknownVariable
from .freemod import (
    Atom,
    EquationSystem,
    FreeContext,
    GroupAtom,
    GroupWord,
    ModuleAtom,
    ModuleElement,
    QuasiIdentity,
    RingElement,
    equation_system,
    identity_word,
    module_add,
    module_scale,
    module_term,
    module_zero,
    reduce_word,
    ring_add,
    ring_from_terms,
    ring_scale,
    ring_zero,
)
from .groups import FiniteGroup, cyclic_group, group_from_table, product_group
from .linalg import PrimeField
from .reps import Representation, make_representation


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    length: int


# ---------------------------------------------------------------------------
# Expression tokenizer


_SYMBOLS = ("=>", "^", "*", "+", "-", "(", ")", "=", "&")


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident" | "int" | symbol itself | "eof"
    text: str
    line: int
    col: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.line, self.col, max(len(self.text), 1))


def _tokenize(text: str, line0: int = 1, col0: int = 1) -> list[_Token]:
    toks: list[_Token] = []
    line, col = line0, col0
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            col += 1
            i += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        matched = None
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                matched = sym
                break
        if matched:
            toks.append(_Token(matched, matched, line, col))
            i += len(matched)
            col += len(matched)
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(SourceSpan(line, col, 1), "a term token", f"{line}:{col}: stray character {c!r}")
    toks.append(_Token("eof", "", line, col))
    return toks


class _ExprParser:
    def __init__(self, toks: list[_Token], ctx: FreeContext, field: PrimeField):
        self.toks = toks
        self.pos = 0
        self.ctx = ctx
        self.field = field

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, expected: str):
        raise ParseError(self.peek().span, expected)

    def expect(self, kind: str) -> _Token:
        if self.peek().kind != kind:
            self.fail(kind)
        return self.take()

    def at_end(self) -> bool:
        return self.peek().kind == "eof"

    # -- words -------------------------------------------------------------

    def word(self) -> GroupWord:
        w = self.word_factor()
        while self.peek().kind == "*":
            self.take()
            w = reduce_word(self.ctx, list(w.letters) + list(self.word_factor().letters))
        return w

    def word_factor(self) -> GroupWord:
        t = self.peek()
        if t.kind == "int" and t.text == "1":
            self.take()
            return identity_word(self.ctx)
        if t.kind == "(":
            self.take()
            w = self.word()
            self.expect(")")
            return w
        if t.kind == "ident":
            if t.text in self.ctx.yvars:
                self.take()
                e = 1
                if self.peek().kind == "^":
                    self.take()
                    e = self.exponent()
                return reduce_word(self.ctx, [(self.ctx.yindex(t.text), e)])
            if t.text in self.ctx.xvars:
                self.fail("a y-variable")
            raise UnknownVariable(t.text, t.span)
        self.fail("a word factor")

    def exponent(self) -> int:
        neg = False
        if self.peek().kind == "-":
            self.take()
            neg = True
        t = self.expect("int")
        e = int(t.text)
        return -e if neg else e

    # -- ring expressions --------------------------------------------------

    def ringexpr(self) -> RingElement:
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
        r = ring_scale(sign, self.ringterm())
        while self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
            r = ring_add(r, ring_scale(sign, self.ringterm()))
        return r

    def ringterm(self) -> RingElement:
        c = 1
        if self.peek().kind == "int" and self.toks[self.pos + 1].kind == "*":
            c = int(self.take().text)
            self.take()  # "*"
        elif self.peek().kind == "int" and self.peek().text == "0":
            self.take()
            return ring_zero(self.ctx, self.field)
        w = self.word()
        return ring_from_terms(self.ctx, self.field, [(w, c)])

    # -- module expressions ------------------------------------------------

    def modexpr(self) -> ModuleElement:
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
        u = module_scale(sign, self.modterm())
        while self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
            u = module_add(u, module_scale(sign, self.modterm()))
        return u

    def modterm(self) -> ModuleElement:
        c = 1
        if self.peek().kind == "int":
            if self.peek().text == "0" and self.toks[self.pos + 1].kind != "*":
                self.take()
                return module_zero(self.ctx, self.field)
            t = self.take()
            c = int(t.text)
            self.expect("*")
        t = self.peek()
        if t.kind != "ident" or t.text not in self.ctx.xvars:
            if t.kind == "ident" and t.text not in self.ctx.yvars:
                raise UnknownVariable(t.text, t.span)
            self.fail("an x-variable")
        x = self.ctx.xindex(self.take().text)
        ring = ring_from_terms(self.ctx, self.field, [(identity_word(self.ctx), 1)])
        if self.peek().kind == "*":
            self.take()
            if self.peek().kind == "(":
                self.take()
                ring = self.ringexpr()
                self.expect(")")
            else:
                w = self.word()
                ring = ring_from_terms(self.ctx, self.field, [(w, 1)])
        return module_term(self.ctx, self.field, x, ring_scale(c, ring))

    # -- atoms and quasi-identities ----------------------------------------

    def atom(self) -> Atom:
        start = self.pos
        try:
            u = self.modexpr()
            self.expect("=")
            t = self.expect("int")
            if t.text != "0":
                raise ParseError(t.span, '"0"')
            return ModuleAtom(u)
        except ParseError as mod_err:
            mod_pos = self.pos
            self.pos = start
            try:
                w = self.word()
                self.expect("=")
                t = self.expect("int")
                if t.text != "1":
                    raise ParseError(t.span, '"1"')
                return GroupAtom(w)
            except ParseError as word_err:
                raise word_err if self.pos >= mod_pos else mod_err

    def qid(self) -> QuasiIdentity:
        premises: list[Atom] = []
        if self.peek().kind != "=>":
            premises.append(self.atom())
            while self.peek().kind == "&":
                self.take()
                premises.append(self.atom())
        self.expect("=>")
        concl = self.atom()
        return QuasiIdentity(tuple(premises), concl)


def _full(parser: _ExprParser, production):
    v = production()
    if not parser.at_end():
        parser.fail("end of input")
    return v


def parse_word(text: str, ctx: FreeContext) -> GroupWord:
    p = _ExprParser(_tokenize(text), ctx, PrimeField(2))
    return _full(p, p.word)


def parse_term(text: str, ctx: FreeContext, field: PrimeField):
    """A module expression or, failing that, a group word."""
    toks = _tokenize(text)
    p = _ExprParser(toks, ctx, field)
    try:
        return _full(p, p.modexpr)
    except ParseError as mod_err:
        mod_pos = p.pos
        p2 = _ExprParser(toks, ctx, field)
        try:
            return _full(p2, p2.word)
        except ParseError as word_err:
            raise word_err if p2.pos >= mod_pos else mod_err


def parse_atom(text: str, ctx: FreeContext, field: PrimeField) -> Atom:
    p = _ExprParser(_tokenize(text), ctx, field)
    return _full(p, p.atom)


def parse_qid(text: str, ctx: FreeContext, field: PrimeField) -> QuasiIdentity:
    p = _ExprParser(_tokenize(text), ctx, field)
    return _full(p, p.qid)


def infer_context(text: str) -> FreeContext:
    """Inline convention: identifiers starting with "x" are x-variables,
    everything else is a y-variable."""
    xs, ys = set(), set()
    for t in _tokenize(text):
        if t.kind == "ident":
            (xs if t.text.startswith("x") else ys).add(t.text)
    return FreeContext(tuple(sorted(xs)), tuple(sorted(ys)))


# ---------------------------------------------------------------------------
# Line-oriented files


def _logical_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            out.append((i, line))
    return out


def _line_error(lineno: int, line: str, expected: str) -> ParseError:
    col = len(line) - len(line.lstrip()) + 1
    return ParseError(SourceSpan(lineno, col, max(len(line.strip()), 1)), expected)


class _LineReader:
    def __init__(self, text: str):
        self.lines = _logical_lines(text)
        self.pos = 0

    def peek(self) -> Optional[tuple[int, str]]:
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def take(self) -> Optional[tuple[int, str]]:
        item = self.peek()
        if item is not None:
            self.pos += 1
        return item

    def require(self, expected: str) -> tuple[int, str]:
        item = self.take()
        if item is None:
            last = self.lines[-1][0] + 1 if self.lines else 1
            raise ParseError(SourceSpan(last, 1, 1), expected)
        return item


def _parse_matrix_literal(lineno: int, line: str, text: str) -> list[list[int]]:
    s = text.replace(" ", "")
    col = line.index(text.strip()[0]) + 1 if text.strip() else 1
    err = ParseError(SourceSpan(lineno, col, max(len(text.strip()), 1)), "a matrix literal [[..],[..]]")
    if not (s.startswith("[[") and s.endswith("]]")):
        raise err
    rows = []
    for chunk in s[2:-2].split("],["):
        row = []
        for ent in chunk.split(","):
            if not ent or not (ent.lstrip("-").isdigit() and ent.count("-") <= 1 and (not ent.count("-") or ent[0] == "-")):
                raise err
            row.append(int(ent))
        rows.append(row)
    return rows


def _parse_cyclic_factor(lineno: int, line: str, spec_text: str, caps: EnumerationCaps) -> FiniteGroup:
    s = spec_text.strip()
    if not (s.startswith("cyclic(")):
        raise _line_error(lineno, line, 'cyclic(N) as NAME')
    rest = s[len("cyclic("):]
    if ")" not in rest:
        raise _line_error(lineno, line, '")"')
    num, _, tail = rest.partition(")")
    if not num.strip().isdigit():
        raise _line_error(lineno, line, "a positive integer order")
    n = int(num.strip())
    if n < 1 or n > caps.max_group_order:
        raise InvalidInput(f"cyclic order {n} outside [1, {caps.max_group_order}]")
    gen = "g"
    tail = tail.strip()
    if tail:
        parts = tail.split()
        if len(parts) != 2 or parts[0] != "as" or not parts[1].isidentifier():
            raise _line_error(lineno, line, '"as NAME"')
        gen = parts[1]
    return cyclic_group(n, gen)


def _split_product_args(s: str) -> list[str]:
    args, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            args.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    args.append("".join(cur))
    return args


def _parse_group_block(reader: _LineReader, caps: EnumerationCaps) -> FiniteGroup:
    lineno, line = reader.require("group")
    stripped = line.strip()
    if not stripped.startswith("group"):
        raise _line_error(lineno, line, '"group"')
    spec_text = stripped[len("group"):].strip()
    if spec_text == "table":
        lineno2, line2 = reader.require("elements")
        parts = line2.split()
        if not parts or parts[0] != "elements" or len(parts) < 2:
            raise _line_error(lineno2, line2, '"elements" followed by names')
        names = parts[1:]
        n = len(names)
        if n > caps.max_group_order:
            raise InvalidInput(f"group order {n} exceeds cap {caps.max_group_order}")
        index = {nm: i for i, nm in enumerate(names)}
        if len(index) != n:
            raise _line_error(lineno2, line2, "distinct element names")
        table = []
        for _ in range(n):
            lineno3, line3 = reader.require('"row" line')
            rparts = line3.split()
            if not rparts or rparts[0] != "row" or len(rparts) != n + 1:
                raise _line_error(lineno3, line3, f'"row" with {n} entries')
            row = []
            for nm in rparts[1:]:
                if nm not in index:
                    raise _line_error(lineno3, line3, f"an element name (got {nm!r})")
                row.append(index[nm])
            table.append(row)
        return group_from_table(names, table)
    if spec_text.startswith("cyclic("):
        return _parse_cyclic_factor(lineno, line, spec_text, caps)
    if spec_text.startswith("product(") and spec_text.endswith(")"):
        inner = spec_text[len("product("):-1]
        factors = [
            _parse_cyclic_factor(lineno, line, a.strip(), caps)
            for a in _split_product_args(inner)
        ]
        if len(factors) < 2:
            raise _line_error(lineno, line, "at least two product factors")
        g = factors[0]
        for h in factors[1:]:
            g = product_group(g, h)
        if g.order > caps.max_group_order:
            raise InvalidInput(f"group order {g.order} exceeds cap {caps.max_group_order}")
        return g
    raise _line_error(lineno, line, '"table", "cyclic(...)", or "product(...)"')


def parse_group_file(text: str, caps: EnumerationCaps = DEFAULT_CAPS) -> FiniteGroup:
    reader = _LineReader(text)
    if reader.peek() is None:
        raise ParseError(SourceSpan(1, 1, 1), "group")
    g = _parse_group_block(reader, caps)
    extra = reader.take()
    if extra is not None:
        raise _line_error(extra[0], extra[1], "end of file")
    return g


def parse_rep_file(text: str, caps: EnumerationCaps = DEFAULT_CAPS) -> Representation:
    reader = _LineReader(text)
    if reader.peek() is None:
        raise ParseError(SourceSpan(1, 1, 1), "field")
    lineno, line = reader.require("field")
    parts = line.split()
    if len(parts) != 2 or parts[0] != "field" or not parts[1].startswith("p="):
        raise _line_error(lineno, line, '"field p=<prime>"')
    pval = parts[1][2:]
    if not pval.isdigit():
        raise _line_error(lineno, line, "a prime modulus")
    field = PrimeField(int(pval))
    group = _parse_group_block(reader, caps)
    lineno, line = reader.require("dim")
    parts = line.split()
    if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit():
        raise _line_error(lineno, line, '"dim <n>"')
    dim = int(parts[1])
    act: dict[str, list[list[int]]] = {}
    while reader.peek() is not None:
        lineno, line = reader.take()
        stripped = line.strip()
        if not stripped.startswith("act"):
            raise _line_error(lineno, line, '"act <element> = <matrix>"')
        rest = stripped[len("act"):].strip()
        if "=" not in rest:
            raise _line_error(lineno, line, '"="')
        name, _, mat_text = rest.partition("=")
        name = name.strip()
        if name not in group.names:
            raise _line_error(lineno, line, f"an element of the group (got {name!r})")
        if name in act:
            raise _line_error(lineno, line, f"each element at most once (got {name!r} again)")
        act[name] = _parse_matrix_literal(lineno, line, mat_text)
    return make_representation(field, dim, group, act, caps)


def parse_system_file(
    text: str, field: PrimeField, caps: EnumerationCaps = DEFAULT_CAPS
) -> tuple[FreeContext, EquationSystem]:
    reader = _LineReader(text)
    if reader.peek() is None:
        raise ParseError(SourceSpan(1, 1, 1), "xvars")
    lineno, line = reader.require("xvars")
    parts = line.split()
    if not parts or parts[0] != "xvars" or len(parts) < 2:
        raise _line_error(lineno, line, '"xvars" followed by names')
    xvars = tuple(parts[1:])
    lineno, line = reader.require("yvars")
    parts = line.split()
    if not parts or parts[0] != "yvars" or len(parts) < 2:
        raise _line_error(lineno, line, '"yvars" followed by names')
    yvars = tuple(parts[1:])
    ctx = FreeContext(xvars, yvars)
    module_part: list[ModuleElement] = []
    group_part: list[GroupWord] = []
    while reader.peek() is not None:
        lineno, line = reader.take()
        stripped = line.strip()
        if stripped.startswith("module:"):
            body = stripped[len("module:"):]
            a = parse_atom(body, ctx, field)
            if not isinstance(a, ModuleAtom):
                raise _line_error(lineno, line, "a module equation u = 0")
            module_part.append(a.element)
        elif stripped.startswith("group:"):
            body = stripped[len("group:"):]
            a = parse_atom(body, ctx, field)
            if not isinstance(a, GroupAtom):
                raise _line_error(lineno, line, "a group equation w = 1")
            group_part.append(a.word)
        else:
            raise _line_error(lineno, line, '"module:" or "group:"')
    return ctx, equation_system(ctx, module_part, group_part)


# ---------------------------------------------------------------------------
# Serialization


def serialize_word(w: GroupWord) -> str:
    if not w.letters:
        return "1"
    parts = []
    for v, e in w.letters:
        name = w.context.yvars[v]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _signed(p: int, c: int) -> int:
    c %= p
    return c if c <= p // 2 else c - p


def serialize_ring(r: RingElement) -> str:
    if r.is_zero():
        return "0"
    p = r.field.p
    pieces = []
    for i, (w, c) in enumerate(r.terms):
        s = _signed(p, c)
        mag, neg = abs(s), s < 0
        if w.is_identity():
            body = "1" if mag == 1 else f"{mag}*1"
        elif mag == 1:
            body = serialize_word(w)
        else:
            body = f"{mag}*{serialize_word(w)}"
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


def serialize_module(u: ModuleElement) -> str:
    if u.is_zero():
        return "0"
    p = u.field.p
    pieces = []
    first = True
    for x, r in u.parts:
        xname = u.context.xvars[x]
        if r.num_terms() == 1:
            (w, c), = r.terms
            s = _signed(p, c)
            mag, neg = abs(s), s < 0
            body = xname if mag == 1 else f"{mag}*{xname}"
            if not w.is_identity():
                body += f"*{serialize_word(w)}"
            sign = neg
        else:
            body = f"{xname}*({serialize_ring(r)})"
            sign = False
        if first:
            pieces.append(("-" if sign else "") + body)
            first = False
        else:
            pieces.append(("- " if sign else "+ ") + body)
    return " ".join(pieces)


def serialize_atom(a: Atom) -> str:
    if isinstance(a, GroupAtom):
        return f"{serialize_word(a.word)} = 1"
    return f"{serialize_module(a.element)} = 0"


def serialize_qid(q: QuasiIdentity) -> str:
    if not q.premises:
        return f"=> {serialize_atom(q.conclusion)}"
    left = " & ".join(serialize_atom(a) for a in q.premises)
    return f"{left} => {serialize_atom(q.conclusion)}"


def serialize_group(g: FiniteGroup) -> str:
    lines = ["group table", "  elements " + " ".join(g.names)]
    for i in range(g.order):
        lines.append("  row " + " ".join(g.names[j] for j in g.table[i]))
    return "\n".join(lines) + "\n"


def _matrix_literal(m) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in m) + "]"


def serialize_rep(rep: Representation) -> str:
    lines = [f"field p={rep.p}"]
    lines.append(serialize_group(rep.group).rstrip("\n"))
    lines.append(f"dim {rep.dim}")
    for i in range(1, rep.group.order):
        lines.append(f"act {rep.group.names[i]} = {_matrix_literal(rep.act[i])}")
    return "\n".join(lines) + "\n"


def serialize_system(ctx: FreeContext, sys: EquationSystem) -> str:
    lines = ["xvars " + " ".join(ctx.xvars), "yvars " + " ".join(ctx.yvars)]
    for u in sys.module_part:
        lines.append(f"module: {serialize_module(u)} = 0")
    for w in sys.group_part:
        lines.append(f"group: {serialize_word(w)} = 1")
    return "\n".join(lines) + "\n"


def serialize(value) -> str:
    if isinstance(value, Representation):
        return serialize_rep(value)
    if isinstance(value, FiniteGroup):
        return serialize_group(value)
    if isinstance(value, QuasiIdentity):
        return serialize_qid(value)
    if isinstance(value, (ModuleAtom, GroupAtom)):
        return serialize_atom(value)
    if isinstance(value, ModuleElement):
        return serialize_module(value)
    if isinstance(value, RingElement):
        return serialize_ring(value)
    if isinstance(value, GroupWord):
        return serialize_word(value)
    if isinstance(value, EquationSystem):
        return serialize_system(value.context, value)
    raise InvalidInput(f"cannot serialize {type(value).__name__}")
