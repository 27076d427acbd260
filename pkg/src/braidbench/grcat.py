"""The braided rigid category B_n of finite-dimensional Z/nZ-graded spaces.

Objects carry the degree of every basis vector, in order.  Objects built
from multiplicities list degree 0 first, then degree 1, and so on; tensor
products use the lexicographic pair order (left index major), which makes
the monoidal structure strictly associative on flattened basis tuples.

Morphisms are degree-preserving matrices over Q(z_n), stored sparsely as
``{row: {col: Cyc}}`` with zero entries omitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce

from .scalar import Cyc

__all__ = [
    "GrObject",
    "GrMorphism",
    "HomogeneityError",
    "unit",
    "simple",
    "tensor_obj",
    "compose",
    "tensor_mor",
    "identity",
    "braiding",
    "braiding_inv",
    "left_dual",
    "right_dual",
    "zero_mor",
]


class HomogeneityError(ValueError):
    """A matrix entry connects basis vectors of different degrees."""


@dataclass(frozen=True)
class GrObject:
    n: int
    degs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        object.__setattr__(self, "degs", tuple(d % self.n for d in self.degs))

    @classmethod
    def from_dims(cls, n: int, dims) -> "GrObject":
        """Object with ``dims[g]`` basis vectors in degree g, degree-major order."""
        dims = list(dims)
        if len(dims) > n:
            raise ValueError("more multiplicities than degrees")
        if any(d < 0 for d in dims):
            raise ValueError("multiplicities must be nonnegative")
        degs = [g for g, m in enumerate(dims) for _ in range(m)]
        return cls(n, tuple(degs))

    @property
    def dim(self) -> int:
        return len(self.degs)

    @cached_property
    def dims(self) -> tuple[int, ...]:
        out = [0] * self.n
        for d in self.degs:
            out[d] += 1
        return tuple(out)

    def degree(self, i: int) -> int:
        return self.degs[i]

    def is_canonical(self) -> bool:
        return list(self.degs) == sorted(self.degs)

    def __matmul__(self, other: "GrObject") -> "GrObject":
        return tensor_obj(self, other)

    def to_json(self) -> dict:
        out = {"n": self.n, "dims": list(self.dims)}
        if not self.is_canonical():
            out["degrees"] = list(self.degs)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "GrObject":
        if "degrees" in data:
            return cls(data["n"], tuple(data["degrees"]))
        return cls.from_dims(data["n"], data["dims"])

    def __repr__(self):
        return f"GrObject(n={self.n}, degs={list(self.degs)})"


def unit(n: int) -> GrObject:
    return GrObject(n, (0,))


def simple(n: int, g: int) -> GrObject:
    """The one-dimensional object k_g concentrated in degree g."""
    return GrObject(n, (g % n,))


def _check_same_n(*objs):
    ns = {o.n for o in objs}
    if len(ns) != 1:
        raise ValueError(f"modulus mismatch: {sorted(ns)}")


def tensor_obj(X: GrObject, Y: GrObject) -> GrObject:
    _check_same_n(X, Y)
    n = X.n
    return GrObject(n, tuple((a + b) % n for a in X.degs for b in Y.degs))


def _zero(n):
    return Cyc.zero(n)


class GrMorphism:
    """A degree-preserving linear map ``src -> dst`` with sparse exact entries."""

    __slots__ = ("src", "dst", "rows")

    def __init__(self, src: GrObject, dst: GrObject, rows=None, *, check: bool = True):
        _check_same_n(src, dst)
        self.src = src
        self.dst = dst
        clean: dict[int, dict[int, Cyc]] = {}
        for i, row in (rows or {}).items():
            kept = {j: v for j, v in row.items() if not v.is_zero()}
            if kept:
                clean[i] = kept
        self.rows = clean
        if check:
            self._validate()

    @classmethod
    def _raw(cls, src, dst, rows):
        obj = object.__new__(cls)
        obj.src = src
        obj.dst = dst
        obj.rows = rows
        return obj

    def _validate(self):
        n = self.src.n
        for i, row in self.rows.items():
            if not 0 <= i < self.dst.dim:
                raise IndexError(f"row {i} out of range for target of dim {self.dst.dim}")
            for j, v in row.items():
                if not 0 <= j < self.src.dim:
                    raise IndexError(f"column {j} out of range for source of dim {self.src.dim}")
                if not isinstance(v, Cyc) or v.n != n:
                    raise TypeError(f"entry ({i},{j}) is not an element of Q(z_{n})")
                if self.dst.degs[i] != self.src.degs[j]:
                    raise HomogeneityError(
                        f"entry ({i},{j}) maps degree {self.src.degs[j]} to degree {self.dst.degs[i]}"
                    )

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_entries(cls, src, dst, entries) -> "GrMorphism":
        """Build from an iterable of ``(row, col, value)``; values may be int/Fraction/Cyc."""
        rows: dict[int, dict[int, Cyc]] = {}
        n = src.n
        for i, j, v in entries:
            if not isinstance(v, Cyc):
                v = Cyc.const(n, v)
            row = rows.setdefault(i, {})
            row[j] = row[j] + v if j in row else v
        return cls(src, dst, rows)

    @classmethod
    def from_dense(cls, src, dst, matrix) -> "GrMorphism":
        return cls.from_entries(
            src, dst, ((i, j, v) for i, r in enumerate(matrix) for j, v in enumerate(r) if v != 0)
        )

    @classmethod
    def scalar(cls, n: int, value) -> "GrMorphism":
        """Endomorphism of the unit object given by a scalar."""
        return cls.from_entries(unit(n), unit(n), [(0, 0, value)])

    # -- access -------------------------------------------------------------
    @property
    def n(self) -> int:
        return self.src.n

    def entry(self, i: int, j: int) -> Cyc:
        return self.rows.get(i, {}).get(j) or _zero(self.n)

    def entries(self):
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def column(self, j: int) -> dict[int, Cyc]:
        return {i: r[j] for i, r in self.rows.items() if j in r}

    def to_dense(self):
        z = _zero(self.n)
        out = [[z] * self.src.dim for _ in range(self.dst.dim)]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def is_zero(self) -> bool:
        return not self.rows

    def same_type(self, other: "GrMorphism") -> bool:
        return self.src == other.src and self.dst == other.dst

    # -- algebra ------------------------------------------------------------
    def __matmul__(self, other: "GrMorphism") -> "GrMorphism":
        return compose(self, other)

    def __add__(self, other: "GrMorphism") -> "GrMorphism":
        if not self.same_type(other):
            raise ValueError("cannot add morphisms of different types")
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            row = rows.setdefault(i, {})
            for j, v in r.items():
                row[j] = row[j] + v if j in row else v
        return GrMorphism(self.src, self.dst, rows, check=False)

    def __neg__(self):
        return GrMorphism._raw(self.src, self.dst, {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GrMorphism":
        if not isinstance(c, Cyc):
            c = Cyc.const(self.n, c)
        if c.is_zero():
            return GrMorphism._raw(self.src, self.dst, {})
        return GrMorphism._raw(self.src, self.dst, {i: {j: v * c for j, v in r.items()} for i, r in self.rows.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GrMorphism):
            return NotImplemented
        return self.same_type(other) and self.rows == other.rows

    def __hash__(self):
        return hash((self.src, self.dst, tuple(self.entries())))

    def first_difference(self, other: "GrMorphism"):
        """``(row, col, self_entry, other_entry)`` of the first differing entry, or None."""
        if not self.same_type(other):
            raise ValueError(f"type mismatch: {self.src}->{self.dst} vs {other.src}->{other.dst}")
        keys = set()
        for i, r in self.rows.items():
            keys.update((i, j) for j in r)
        for i, r in other.rows.items():
            keys.update((i, j) for j in r)
        for i, j in sorted(keys):
            a, b = self.entry(i, j), other.entry(i, j)
            if a != b:
                return i, j, a, b
        return None

    def to_json(self) -> dict:
        return {
            "src": self.src.to_json(),
            "dst": self.dst.to_json(),
            "entries": [[i, j, str(v)] for i, j, v in self.entries()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GrMorphism":
        src = GrObject.from_json(data["src"])
        dst = GrObject.from_json(data["dst"])
        return cls.from_entries(src, dst, ((i, j, Cyc.parse(src.n, v)) for i, j, v in data["entries"]))

    def __repr__(self):
        return f"GrMorphism({list(self.src.degs)} -> {list(self.dst.degs)}, nnz={self.nnz()})"


def zero_mor(src: GrObject, dst: GrObject) -> GrMorphism:
    return GrMorphism._raw(src, dst, {})


def compose(g: GrMorphism, f: GrMorphism) -> GrMorphism:
    """g after f."""
    if f.dst != g.src:
        raise ValueError(f"cannot compose: target {f.dst} of the first map != source {g.src} of the second")
    frows = f.rows
    out = {}
    for i, grow in g.rows.items():
        acc: dict[int, Cyc] = {}
        for k, gv in grow.items():
            frow = frows.get(k)
            if not frow:
                continue
            for j, fv in frow.items():
                p = gv * fv
                if j in acc:
                    acc[j] = acc[j] + p
                else:
                    acc[j] = p
        acc = {j: v for j, v in acc.items() if not v.is_zero()}
        if acc:
            out[i] = acc
    return GrMorphism._raw(f.src, g.dst, out)


def tensor_mor(f: GrMorphism, g: GrMorphism) -> GrMorphism:
    _check_same_n(f.src, g.src)
    src = tensor_obj(f.src, g.src)
    dst = tensor_obj(f.dst, g.dst)
    gd, gs = g.dst.dim, g.src.dim
    out = {}
    for i1, r1 in f.rows.items():
        for i2, r2 in g.rows.items():
            row = {}
            for j1, v1 in r1.items():
                base = j1 * gs
                for j2, v2 in r2.items():
                    row[base + j2] = v1 * v2
            out[i1 * gd + i2] = row
    return GrMorphism._raw(src, dst, out)


def tensor_many(*fs: GrMorphism) -> GrMorphism:
    return reduce(tensor_mor, fs)


@lru_cache(maxsize=4096)
def identity(X: GrObject) -> GrMorphism:
    one = Cyc.one(X.n)
    return GrMorphism._raw(X, X, {i: {i: one} for i in range(X.dim)})


def braiding(X: GrObject, Y: GrObject) -> GrMorphism:
    """tau_{X,Y}: x (x) y  ->  z^(|x||y|) y (x) x."""
    return _braid(X, Y, 1)


def braiding_inv(X: GrObject, Y: GrObject) -> GrMorphism:
    """The inverse of tau_{Y,X}, as a morphism X (x) Y -> Y (x) X."""
    return _braid(X, Y, -1)


@lru_cache(maxsize=4096)
def _braid(X: GrObject, Y: GrObject, sign: int) -> GrMorphism:
    _check_same_n(X, Y)
    n = X.n
    src = tensor_obj(X, Y)
    dst = tensor_obj(Y, X)
    dx, dy = X.dim, Y.dim
    out = {}
    for i, a in enumerate(X.degs):
        for j, b in enumerate(Y.degs):
            # tau_{Y,X}^{-1} on x (x) y also lands on y (x) x, with the inverse scalar
            out[j * dx + i] = {i * dy + j: Cyc.root_power(n, sign * a * b)}
    return GrMorphism._raw(src, dst, out)


@lru_cache(maxsize=1024)
def left_dual(X: GrObject):
    """``(dual, ev, coev)`` with ev: dual (x) X -> 1 and coev: 1 -> X (x) dual."""
    n = X.n
    D = GrObject(n, tuple(-d for d in X.degs))
    one = Cyc.one(n)
    d = X.dim
    ev = GrMorphism._raw(tensor_obj(D, X), unit(n), {0: {i * d + i: one for i in range(d)}} if d else {})
    coev = GrMorphism._raw(unit(n), tensor_obj(X, D), {i * d + i: {0: one} for i in range(d)})
    return D, ev, coev


@lru_cache(maxsize=1024)
def right_dual(X: GrObject):
    """``(dual, ev, coev)`` with ev: X (x) dual -> 1 and coev: 1 -> dual (x) X."""
    n = X.n
    D = GrObject(n, tuple(-d for d in X.degs))
    one = Cyc.one(n)
    d = X.dim
    ev = GrMorphism._raw(tensor_obj(X, D), unit(n), {0: {i * d + i: one for i in range(d)}} if d else {})
    coev = GrMorphism._raw(unit(n), tensor_obj(D, X), {i * d + i: {0: one} for i in range(d)})
    return D, ev, coev
