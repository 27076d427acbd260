"""A small language for writing string diagrams as morphism expressions.

Grammar (whitespace-insensitive)::

    expr   := term ('.' term)*          composition, right to left: g . f = g after f
    term   := atom ('*' atom)*          monoidal product
    atom   := NAME ('[' obj (',' obj)* ']')?
            | 'id' ('[' obj ']')?
            | '(' expr ')'
    obj    := oatom ('*' oatom)*
    oatom  := NAME | '1' | '(' obj ')'

A string diagram read bottom to top becomes a composite read right to
left; the strands of one horizontal slice, left to right, become the
factors of a ``*`` product.  A bare ``id`` takes whatever object its
position forces, which is inferred from the neighbouring factors.

Definition files contain stanzas ``NAME := expr`` or ``NAME[X, Y] := expr``
(object parameters), with ``#`` comments.  Stanzas may span several lines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Union

from .grcat import GrMorphism, GrObject, identity, tensor_obj, unit

__all__ = [
    "DSLSyntaxError",
    "DSLTypeError",
    "UnboundName",
    "ObjName",
    "ObjUnit",
    "ObjTensor",
    "Generator",
    "Identity",
    "Compose",
    "Tensor",
    "Definition",
    "Env",
    "parse",
    "parse_obj",
    "to_text",
    "evaluate",
    "load_definitions",
    "load_dsl_dir",
]


class DSLSyntaxError(SyntaxError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.pos = offset
        self.source = text


class DSLTypeError(TypeError):
    def __init__(self, message: str, subtree=None, left=None, right=None):
        if subtree is not None:
            message = f"{message} in `{to_text(subtree)}`"
        if left is not None:
            message += f": {left!r} vs {right!r}"
        super().__init__(message)
        self.subtree = subtree
        self.objects = (left, right)


class UnboundName(KeyError):
    pass


class _NeedsType(Exception):
    """Raised internally when a bare ``id`` cannot yet be typed."""


# ---------------------------------------------------------------------------
# syntax trees

@dataclass(frozen=True)
class ObjName:
    name: str


@dataclass(frozen=True)
class ObjUnit:
    pass


@dataclass(frozen=True)
class ObjTensor:
    left: "ObjExpr"
    right: "ObjExpr"


ObjExpr = Union[ObjName, ObjUnit, ObjTensor]


@dataclass(frozen=True)
class Generator:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Identity:
    obj: ObjExpr | None = None


@dataclass(frozen=True)
class Compose:
    left: "MorphExpr"
    right: "MorphExpr"


@dataclass(frozen=True)
class Tensor:
    left: "MorphExpr"
    right: "MorphExpr"


MorphExpr = Union[Generator, Identity, Compose, Tensor]


# ---------------------------------------------------------------------------
# lexer / parser

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<one>1)|(?P<op>[.*()\[\],]))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise DSLSyntaxError(f"unknown token {text[start]!r}", start, text)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value or kind == "eof":
            what = "end of input" if kind == "eof" else repr(val)
            raise DSLSyntaxError(f"expected {value!r}, found {what}", pos, self.text)

    def fail(self, msg):
        kind, val, pos = self.peek()
        what = "end of input" if kind == "eof" else repr(val)
        raise DSLSyntaxError(f"{msg}, found {what}", pos, self.text)

    # morphisms
    def expr(self):
        node = self.term()
        while self.peek()[1] == "." and self.peek()[0] == "op":
            self.take()
            node = Compose(node, self.term())
        return node

    def term(self):
        node = self.atom()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            node = Tensor(node, self.atom())
        return node

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "op" and val == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "name":
            self.take()
            args = ()
            if self.peek()[1] == "[":
                self.take()
                args = [self.obj()]
                while self.peek()[1] == ",":
                    self.take()
                    args.append(self.obj())
                self.expect("]")
            if val == "id":
                if len(args) > 1:
                    raise DSLSyntaxError("id takes one object", pos, self.text)
                return Identity(args[0] if args else None)
            return Generator(val, tuple(args))
        self.fail("expected a morphism")

    # objects
    def obj(self):
        node = self.oatom()
        while self.peek()[1] == "*":
            self.take()
            node = ObjTensor(node, self.oatom())
        return node

    def oatom(self):
        kind, val, pos = self.peek()
        if kind == "one":
            self.take()
            return ObjUnit()
        if kind == "name":
            self.take()
            return ObjName(val)
        if val == "(":
            self.take()
            node = self.obj()
            self.expect(")")
            return node
        self.fail("expected an object")


def parse(text: str) -> MorphExpr:
    """Parse a morphism expression; raises :class:`DSLSyntaxError` with an offset."""
    p = _Parser(text)
    node = p.expr()
    if p.peek()[0] != "eof":
        p.fail("unexpected trailing input")
    return node


def parse_obj(text: str) -> ObjExpr:
    p = _Parser(text)
    node = p.obj()
    if p.peek()[0] != "eof":
        p.fail("unexpected trailing input")
    return node


# ---------------------------------------------------------------------------
# printer

def _obj_text(o: ObjExpr, nested=False) -> str:
    if isinstance(o, ObjUnit):
        return "1"
    if isinstance(o, ObjName):
        return o.name
    inner = f"{_obj_text(o.left)} * {_obj_text(o.right, True)}"
    return f"({inner})" if nested else inner


def to_text(e) -> str:
    """Canonical text; ``parse(to_text(e)) == e`` for every tree."""
    if isinstance(e, (ObjName, ObjUnit, ObjTensor)):
        return _obj_text(e)
    if isinstance(e, Generator):
        if not e.args:
            return e.name
        return f"{e.name}[{', '.join(_obj_text(a) for a in e.args)}]"
    if isinstance(e, Identity):
        return "id" if e.obj is None else f"id[{_obj_text(e.obj)}]"
    if isinstance(e, Compose):
        right = to_text(e.right)
        if isinstance(e.right, Compose):
            right = f"({right})"
        return f"{to_text(e.left)} . {right}"
    if isinstance(e, Tensor):
        left = to_text(e.left)
        if isinstance(e.left, Compose):
            left = f"({left})"
        right = to_text(e.right)
        if isinstance(e.right, (Compose, Tensor)):
            right = f"({right})"
        return f"{left} * {right}"
    raise TypeError(f"not an expression: {e!r}")


# ---------------------------------------------------------------------------
# environments and evaluation

@dataclass(frozen=True)
class Definition:
    name: str
    params: tuple[str, ...]
    body: MorphExpr


GeneratorValue = Union[GrMorphism, Callable[..., GrMorphism]]


@dataclass
class Env:
    """Named objects, named generators, and macro definitions."""

    n: int
    objects: dict[str, GrObject] = field(default_factory=dict)
    generators: dict[str, GeneratorValue] = field(default_factory=dict)
    definitions: dict[str, Definition] = field(default_factory=dict)

    def child(self, **objects) -> "Env":
        objs = dict(self.objects)
        objs.update(objects)
        return Env(self.n, objs, self.generators, self.definitions)

    def extend(self, objects=None, generators=None, definitions=None) -> "Env":
        objs = dict(self.objects)
        objs.update(objects or {})
        gens = dict(self.generators)
        gens.update(generators or {})
        defs = dict(self.definitions)
        defs.update(definitions or {})
        return Env(self.n, objs, gens, defs)

    def obj(self, o: ObjExpr) -> GrObject:
        if isinstance(o, ObjUnit):
            return unit(self.n)
        if isinstance(o, ObjName):
            try:
                return self.objects[o.name]
            except KeyError:
                raise UnboundName(f"unbound object name {o.name!r}") from None
        return tensor_obj(self.obj(o.left), self.obj(o.right))

    def __call__(self, text: str, **hints) -> GrMorphism:
        return evaluate(parse(text), self, **hints)

    def define(self, text: str):
        """Add the stanzas of a definition text to this environment."""
        self.definitions.update(load_definitions(text))
        return self


def _split(total: GrObject, left: GrObject | None = None, right: GrObject | None = None):
    """Given ``total = L * R`` and one factor, recover the other."""
    n = total.n
    if left is not None:
        if left.dim == 0 or total.dim % left.dim:
            raise _Mismatch(total, left)
        dr = total.dim // left.dim
        a0 = left.degs[0]
        cand = GrObject(n, tuple(d - a0 for d in total.degs[:dr]))
        if tensor_obj(left, cand) != total:
            raise _Mismatch(total, left)
        return cand
    if right.dim == 0 or total.dim % right.dim:
        raise _Mismatch(total, right)
    dl = total.dim // right.dim
    b0 = right.degs[0]
    cand = GrObject(n, tuple(total.degs[i * right.dim] - b0 for i in range(dl)))
    if tensor_obj(cand, right) != total:
        raise _Mismatch(total, right)
    return cand


class _Mismatch(Exception):
    def __init__(self, total, part):
        self.total, self.part = total, part


def _check(e, f, src, dst):
    if src is not None and f.src != src:
        raise DSLTypeError("source mismatch", e, f.src, src)
    if dst is not None and f.dst != dst:
        raise DSLTypeError("target mismatch", e, f.dst, dst)
    return f


# ---------------------------------------------------------------------------
# column-wise evaluation
#
# Composites and tensor products are not multiplied out: each node answers
# for one source basis vector at a time and caches the answer.  Axioms are
# evaluated on small sources but pass through large intermediate objects
# (identities tensored with products), which are never materialized.


class _Node:
    __slots__ = ("src", "dst", "_cols")

    def __init__(self, src, dst):
        self.src, self.dst = src, dst
        self._cols = {}

    def column(self, j: int) -> dict:
        col = self._cols.get(j)
        if col is None:
            col = self._cols[j] = self._column(j)
        return col

    def materialize(self) -> GrMorphism:
        rows: dict[int, dict] = {}
        for j in range(self.src.dim):
            for i, v in self.column(j).items():
                rows.setdefault(i, {})[j] = v
        return GrMorphism(self.src, self.dst, rows, check=False)


class _Leaf(_Node):
    __slots__ = ("mor",)

    def __init__(self, f: GrMorphism):
        super().__init__(f.src, f.dst)
        self.mor = f
        for i, row in f.rows.items():
            for j, v in row.items():
                self._cols.setdefault(j, {})[i] = v

    def _column(self, j):
        return {}

    def materialize(self):
        return self.mor


class _Id(_Node):
    __slots__ = ("one",)

    def __init__(self, X: GrObject):
        super().__init__(X, X)
        from .scalar import Cyc

        self.one = Cyc.one(X.n)

    def column(self, j):
        return {j: self.one}

    def materialize(self):
        return identity(self.src)


class _Comp(_Node):
    __slots__ = ("g", "f")

    def __init__(self, g, f):
        super().__init__(f.src, g.dst)
        self.g, self.f = g, f

    def _column(self, j):
        out: dict = {}
        for k, c in self.f.column(j).items():
            for i, v in self.g.column(k).items():
                w = c * v
                if i in out:
                    w = out[i] + w
                    if w:
                        out[i] = w
                    else:
                        del out[i]
                elif w:
                    out[i] = w
        return out


class _Tens(_Node):
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        super().__init__(tensor_obj(a.src, b.src), tensor_obj(a.dst, b.dst))
        self.a, self.b = a, b

    def _column(self, j):
        ja, jb = divmod(j, self.b.src.dim)
        db = self.b.dst.dim
        cb = self.b.column(jb)
        out = {}
        for ia, x in self.a.column(ja).items():
            base = ia * db
            for ib, y in cb.items():
                out[base + ib] = x * y
        return out


def _node(f) -> _Node:
    return f if isinstance(f, _Node) else _Leaf(f)


def _lookup(e: Generator, env: Env, src=None, dst=None) -> _Node:
    args = tuple(env.obj(a) for a in e.args)
    if e.name in env.definitions:
        d = env.definitions[e.name]
        if len(d.params) != len(args):
            raise DSLTypeError(f"{e.name} expects {len(d.params)} object arguments, got {len(args)}", e)
        return _eval(d.body, env.child(**dict(zip(d.params, args))), src, dst)
    if e.name not in env.generators:
        raise UnboundName(f"unbound generator {e.name!r}")
    g = env.generators[e.name]
    if isinstance(g, GrMorphism):
        if args:
            raise DSLTypeError(f"{e.name} takes no object arguments", e)
        return _node(g)
    return _node(g(*args))


def evaluate(e: MorphExpr, env: Env, src: GrObject | None = None, dst: GrObject | None = None) -> GrMorphism:
    """Interpret an expression in B_n.  ``src``/``dst`` optionally fix the type."""
    try:
        return _eval(e, env, src, dst).materialize()
    except _NeedsType:
        raise DSLTypeError("cannot infer the object of a bare id", e) from None


def _eval(e, env, src, dst):
    if isinstance(e, Generator):
        return _check(e, _lookup(e, env, src, dst), src, dst)
    if isinstance(e, Identity):
        if e.obj is not None:
            return _check(e, _Id(env.obj(e.obj)), src, dst)
        if src is not None and dst is not None and src != dst:
            raise DSLTypeError("identity between different objects", e, src, dst)
        X = src if src is not None else dst
        if X is None:
            raise _NeedsType()
        return _Id(X)
    if isinstance(e, Compose):
        # e.left after e.right
        try:
            f = _eval(e.right, env, src, None)
        except _NeedsType:
            g = _eval(e.left, env, None, dst)
            f = _eval(e.right, env, src, g.src)
            return _Comp(g, f)
        try:
            g = _eval(e.left, env, f.dst, dst)
        except DSLTypeError as err:
            if err.subtree is e.left:
                raise DSLTypeError("composition mismatch", e, f.dst, err.objects[0]) from None
            raise
        return _Comp(g, f)
    if isinstance(e, Tensor):
        try:
            a = _eval(e.left, env, None, None)
        except _NeedsType:
            a = None
        if a is not None:
            try:
                bs = _split(src, left=a.src) if src is not None else None
                bd = _split(dst, left=a.dst) if dst is not None else None
            except _Mismatch as m:
                raise DSLTypeError("tensor factor mismatch", e, m.total, m.part) from None
            b = _eval(e.right, env, bs, bd)
        else:
            b = _eval(e.right, env, None, None)
            try:
                as_ = _split(src, right=b.src) if src is not None else None
                ad = _split(dst, right=b.dst) if dst is not None else None
            except _Mismatch as m:
                raise DSLTypeError("tensor factor mismatch", e, m.total, m.part) from None
            a = _eval(e.left, env, as_, ad)
        return _check(e, _Tens(a, b), src, dst)
    raise TypeError(f"not an expression: {e!r}")


# ---------------------------------------------------------------------------
# definition files

_HEAD = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_']*)\s*(?:\[([^\]]*)\])?\s*:=(.*)$")


def load_definitions(text: str) -> dict[str, Definition]:
    """Parse the stanzas of a definition file."""
    defs: dict[str, Definition] = {}
    current = None
    offset = 0
    chunks = []

    def flush():
        if current is None:
            return
        name, params, body, start = current
        try:
            tree = parse(body)
        except DSLSyntaxError as err:
            raise DSLSyntaxError(f"in definition {name!r}: {err.msg}", start + err.pos, text) from None
        if name in defs:
            raise ValueError(f"duplicate definition {name!r}")
        defs[name] = Definition(name, params, tree)

    for line in text.splitlines(keepends=True):
        stripped = line.split("#", 1)[0]
        m = _HEAD.match(stripped)
        if m:
            flush()
            params = tuple(p.strip() for p in m.group(2).split(",")) if m.group(2) else ()
            current = [m.group(1), params, m.group(3), offset + m.start(3)]
        elif stripped.strip():
            if current is None:
                raise DSLSyntaxError("text outside of a definition", offset, text)
            current[2] += " " + stripped
        offset += len(line)
        chunks.append(line)
    flush()
    return defs


def load_dsl_dir(path) -> dict[str, Definition]:
    """Load every ``*.dsl`` file of a directory into one namespace."""
    defs: dict[str, Definition] = {}
    files = sorted(Path(path).glob("*.dsl"))
    if not files:
        raise FileNotFoundError(f"no .dsl files in {path}")
    for f in files:
        for name, d in load_definitions(f.read_text(encoding="utf-8")).items():
            if name in defs:
                raise ValueError(f"definition {name!r} appears twice (in {f.name})")
            defs[name] = d
    return defs
