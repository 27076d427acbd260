"""Exact sparse linear algebra over Q(z_n).

Rows are dicts ``{column: Cyc}``.  Everything here is plain Gauss-Jordan
elimination; the systems in this package are small and block-sparse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grcat import GrMorphism, GrObject
from .scalar import Cyc

__all__ = [
    "Inconsistent",
    "SingularError",
    "AffineSolution",
    "rref",
    "rank",
    "solve_affine",
    "mor_rank",
    "mor_inverse",
    "is_invertible",
    "MorphismFamily",
    "solve_morphisms",
]


class SingularError(ArithmeticError):
    """A morphism that was required to be invertible is not."""


class Inconsistent(ArithmeticError):
    """Linear system has no solution; ``witness`` is a reduced row 0 = c, c != 0."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _axpy(target: dict, coef: Cyc, row: dict):
    """target -= coef * row, in place."""
    for j, v in row.items():
        p = coef * v
        if j in target:
            w = target[j] - p
            if w.is_zero():
                del target[j]
            else:
                target[j] = w
        else:
            target[j] = -p


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(pivot_rows, pivot_cols)`` where ``pivot_rows[k]`` has a 1 in
    column ``pivot_cols[k]`` and zeros in every other pivot column.  Columns
    ``>= ncols`` (e.g. an augmented right-hand side) are never chosen as pivots.
    """
    pivots: list[dict] = []
    pcols: list[int] = []
    for raw in rows:
        row = {j: v for j, v in raw.items() if not v.is_zero()}
        for prow, pc in zip(pivots, pcols):
            c = row.get(pc)
            if c is not None:
                _axpy(row, c, prow)
        cands = [j for j in row if ncols is None or j < ncols]
        if not cands:
            if row:
                pivots.append(row)
                pcols.append(None)
            continue
        pc = min(cands)
        inv = row[pc].inverse()
        row = {j: v * inv for j, v in row.items()}
        for k, prow in enumerate(pivots):
            c = prow.get(pc)
            if c is not None:
                _axpy(prow, c, row)
        pivots.append(row)
        pcols.append(pc)
    keep = [(r, c) for r, c in zip(pivots, pcols) if c is not None]
    bad = [r for r, c in zip(pivots, pcols) if c is None]
    out_rows = [r for r, _ in keep] + bad
    out_cols = [c for _, c in keep] + [None] * len(bad)
    return out_rows, out_cols


def rank(rows, ncols: int | None = None) -> int:
    _, cols = rref(rows, ncols)
    return sum(c is not None for c in cols)


@dataclass
class AffineSolution:
    """Solution set ``particular + span(kernel)`` of a linear system in ``nvars`` unknowns."""

    nvars: int
    particular: dict[int, Cyc]
    kernel: list[dict[int, Cyc]] = field(default_factory=list)
    rank: int = 0

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    def point(self, n: int, params=()) -> list[Cyc]:
        vec = [self.particular.get(i, Cyc.zero(n)) for i in range(self.nvars)]
        for t, k in zip(params, self.kernel):
            if not isinstance(t, Cyc):
                t = Cyc.const(n, t)
            for i, v in k.items():
                vec[i] = vec[i] + t * v
        return vec


def solve_affine(equations, nvars: int, n: int) -> AffineSolution:
    """Solve ``sum_j a_ij x_j = b_i``.

    ``equations`` is an iterable of ``(coeffs: dict[int, Cyc], rhs: Cyc)``.
    Raises :class:`Inconsistent` with the offending reduced row as witness.
    """
    rhs_col = nvars
    rows = []
    for coeffs, b in equations:
        r = {j: v for j, v in coeffs.items() if not v.is_zero()}
        if not isinstance(b, Cyc):
            b = Cyc.const(n, b)
        if not b.is_zero():
            r[rhs_col] = b
        if r:
            rows.append(r)
    prows, pcols = rref(rows, nvars)
    for r, c in zip(prows, pcols):
        if c is None:
            raise Inconsistent("linear system is inconsistent", witness=r)
    particular = {c: r[rhs_col] for r, c in zip(prows, pcols) if rhs_col in r}
    pivset = set(pcols)
    kernel = []
    for free in range(nvars):
        if free in pivset:
            continue
        vec = {free: Cyc.one(n)}
        for r, c in zip(prows, pcols):
            v = r.get(free)
            if v is not None:
                vec[c] = -v
        kernel.append(vec)
    return AffineSolution(nvars, particular, kernel, rank=len(pcols))


def _blocks(f: GrMorphism):
    """Per-degree (dst indices, src indices) of a homogeneous morphism."""
    out = {}
    for g in range(f.n):
        di = [i for i, d in enumerate(f.dst.degs) if d == g]
        sj = [j for j, d in enumerate(f.src.degs) if d == g]
        if di or sj:
            out[g] = (di, sj)
    return out


def mor_rank(f: GrMorphism) -> int:
    """Exact rank, computed block by block over degrees."""
    total = 0
    for g, (di, sj) in _blocks(f).items():
        rows = [f.rows[i] for i in di if i in f.rows]
        total += rank(rows)
    return total


def is_invertible(f: GrMorphism) -> bool:
    return f.src.dims == f.dst.dims and mor_rank(f) == f.src.dim


def mor_inverse(f: GrMorphism) -> GrMorphism:
    """Exact inverse; raises :class:`SingularError` if f is not invertible."""
    if f.src.dims != f.dst.dims:
        raise SingularError("source and target have different graded dimensions")
    n = f.n
    out = {}
    for g, (di, sj) in _blocks(f).items():
        size = len(di)
        # augment block [F | I] with row index = position in di
        pos_s = {j: k for k, j in enumerate(sj)}
        rows = []
        for k, i in enumerate(di):
            r = {pos_s[j]: v for j, v in f.rows.get(i, {}).items()}
            r[size + k] = Cyc.one(n)
            rows.append(r)
        prows, pcols = rref(rows, size)
        if sum(c is not None for c in pcols) < size:
            raise SingularError(f"morphism is singular in degree {g}")
        for r, c in zip(prows, pcols):
            # row c of the inverse, expressed in src-block coordinates
            src_index = sj[c]
            out[src_index] = {di[k - size]: v for k, v in r.items() if k >= size}
    return GrMorphism(f.dst, f.src, out, check=False)


# ---------------------------------------------------------------------------
# unknown morphisms

@dataclass
class MorphismFamily:
    """The affine space of homogeneous morphisms ``src -> dst`` cut out by linear equations."""

    src: GrObject
    dst: GrObject
    slots: list[tuple[int, int]]
    solution: AffineSolution

    @property
    def dimension(self) -> int:
        return self.solution.dimension

    @property
    def rank(self) -> int:
        return self.solution.rank

    def member(self, params=()) -> GrMorphism:
        vec = self.solution.point(self.src.n, params)
        rows: dict[int, dict[int, Cyc]] = {}
        for (i, j), v in zip(self.slots, vec):
            if not v.is_zero():
                rows.setdefault(i, {})[j] = v
        return GrMorphism(self.src, self.dst, rows, check=False)

    def basis(self) -> list[GrMorphism]:
        """Directions of the kernel, as morphisms."""
        out = []
        for k in self.solution.kernel:
            rows: dict[int, dict[int, Cyc]] = {}
            for idx, v in k.items():
                i, j = self.slots[idx]
                rows.setdefault(i, {})[j] = v
            out.append(GrMorphism(self.src, self.dst, rows, check=False))
        return out


def homogeneous_slots(src: GrObject, dst: GrObject, allowed=None):
    """All matrix positions allowed by homogeneity (optionally filtered)."""
    return [
        (i, j)
        for i, di in enumerate(dst.degs)
        for j, dj in enumerate(src.degs)
        if di == dj and (allowed is None or allowed(i, j))
    ]


def solve_morphisms(src: GrObject, dst: GrObject, residuals, allowed=None) -> MorphismFamily:
    """Solve for ``X: src -> dst`` with every ``residual(X)`` equal to zero.

    Each residual must be an affine function of X returning a GrMorphism.
    Its linear part is probed on elementary matrices, so the cost is one
    evaluation per unknown.  Raises :class:`Inconsistent` when no X exists.
    """
    n = src.n
    slots = homogeneous_slots(src, dst, allowed)
    one = Cyc.one(n)
    zero = GrMorphism(src, dst, {}, check=False)
    equations: list = []
    for res in residuals:
        base = res(zero)
        cols = []
        for i, j in slots:
            e = GrMorphism(src, dst, {i: {j: one}}, check=False)
            r = res(e) - base
            cols.append(r)
        # entry (a, b) of residual: sum_k coeff_k x_k + base = 0
        rows: dict[tuple[int, int], dict[int, Cyc]] = {}
        for k, r in enumerate(cols):
            for a, row in r.rows.items():
                for b, v in row.items():
                    rows.setdefault((a, b), {})[k] = v
        for a, row in base.rows.items():
            for b in row:
                rows.setdefault((a, b), {})
        for (a, b), coeffs in sorted(rows.items()):
            equations.append((coeffs, -base.entry(a, b)))
    sol = solve_affine(equations, len(slots), n)
    return MorphismFamily(src, dst, slots, sol)
