"""Hopf algebras in B_n: data, axiom suites, fusion operators, modules.

The axioms themselves live in ``dsl/hopf.dsl`` and ``dsl/modules.dsl`` and
are evaluated exactly; this module binds the generators and turns each
``NAME_L`` / ``NAME_R`` pair into one report record.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources

from .grcat import (
    GrMorphism,
    GrObject,
    braiding,
    braiding_inv,
    compose,
    identity,
    left_dual,
    right_dual,
    unit,
)
from .linalg import SingularError, is_invertible, mor_inverse, solve_morphisms, Inconsistent
from .morphdsl import Definition, Env, load_definitions
from .report import Report
from .scalar import Cyc, qbinom

__all__ = [
    "HopfData",
    "ModuleData",
    "NotHopfError",
    "build_An",
    "base_env",
    "hopf_env",
    "check_hopf",
    "fusion_ops",
    "antipode_from_fusion",
    "antipode_solutions",
    "module_check",
    "module_tensor",
    "module_dual",
    "fa_functor",
    "regular_module",
    "trivial_module",
    "free_module",
    "dsl_definitions",
    "use_dsl_dir",
    "check_pairs",
]


class NotHopfError(SingularError):
    """A fusion operator is singular, so the bialgebra has no antipode."""


# ---------------------------------------------------------------------------
# DSL plumbing

@lru_cache(maxsize=None)
def _bundled(name: str) -> dict[str, Definition]:
    text = resources.files("braidbench").joinpath("dsl", name).read_text(encoding="utf-8")
    return load_definitions(text)


_DSL_DIR = None


def use_dsl_dir(path) -> None:
    """Read diagram transcriptions from ``path`` instead of the bundled copies (None resets)."""
    global _DSL_DIR
    if path is not None:
        from pathlib import Path

        if not Path(path).is_dir():
            raise FileNotFoundError(f"DSL directory {path} does not exist")
    _DSL_DIR = None if path is None else str(path)


@lru_cache(maxsize=None)
def _from_dir(dsl_dir: str, name: str, mtime: float) -> dict[str, Definition]:
    from pathlib import Path

    return load_definitions((Path(dsl_dir) / name).read_text(encoding="utf-8"))


def dsl_definitions(name: str, dsl_dir=None) -> dict[str, Definition]:
    """Definitions of one DSL file, from ``dsl_dir`` (or the directory set by
    :func:`use_dsl_dir`) if given, else the bundled copy."""
    dsl_dir = dsl_dir if dsl_dir is not None else _DSL_DIR
    if dsl_dir is None:
        return _bundled(name)
    from pathlib import Path

    path = Path(dsl_dir) / name
    if not path.exists():
        raise FileNotFoundError(f"missing DSL file {path}")
    return _from_dir(str(dsl_dir), name, path.stat().st_mtime)


def base_env(n: int) -> Env:
    """Environment with the braiding and duality generators of B_n."""
    gens = {
        "br": braiding,
        "brinv": braiding_inv,
        "ev": lambda X: left_dual(X)[1],
        "coev": lambda X: left_dual(X)[2],
        "rev": lambda X: right_dual(X)[1],
        "rcoev": lambda X: right_dual(X)[2],
    }
    return Env(n, {}, gens, {})


def check_pairs(env: Env, defs: dict[str, Definition], names, report: Report, prefix: str = "") -> Report:
    """Evaluate ``NAME_L`` and ``NAME_R`` for each name and record equality."""
    env = env.extend(definitions=defs)
    for name in names:
        key = prefix + name.replace("_", ".", 1)
        with report.timed(key):
            try:
                lhs = env(name + "_L")
                rhs = env(name + "_R")
            except Exception as err:  # a malformed transcription is a failed check
                report.record(key, False, {"error": f"{type(err).__name__}: {err}"})
                continue
            report.compare(key, lhs, rhs)
    return report


# ---------------------------------------------------------------------------
# Hopf data

@dataclass(frozen=True, eq=False)
class HopfData:
    carrier: GrObject
    m: GrMorphism
    u: GrMorphism
    cp: GrMorphism
    eps: GrMorphism
    S: GrMorphism | None = None
    Sinv: GrMorphism | None = None
    name: str = "A"

    def __post_init__(self):
        A = self.carrier
        AA = A @ A
        one = unit(A.n)
        shapes = {"m": (AA, A), "u": (one, A), "cp": (A, AA), "eps": (A, one), "S": (A, A), "Sinv": (A, A)}
        for key, (src, dst) in shapes.items():
            f = getattr(self, key)
            if f is None:
                continue
            if f.src != src or f.dst != dst:
                raise ValueError(f"{key} has the wrong shape: {f.src.degs}->{f.dst.degs}")

    @property
    def n(self) -> int:
        return self.carrier.n

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def with_(self, **changes) -> "HopfData":
        return replace(self, **changes)

    def morphisms(self) -> dict[str, GrMorphism]:
        out = {"m": self.m, "u": self.u, "cp": self.cp, "eps": self.eps}
        if self.S is not None:
            out["S"] = self.S
        if self.Sinv is not None:
            out["Sinv"] = self.Sinv
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "carrier": self.carrier.to_json(),
            "morphisms": {k: v.to_json() for k, v in self.morphisms().items()},
        }


def hopf_env(H: HopfData, obj: str = "A", env: Env | None = None) -> Env:
    """Bind H's structure as ``m, u, cp, eps, S, Sinv`` (and suffixed aliases) on object ``obj``."""
    env = env or base_env(H.n)
    gens = {}
    for k, v in H.morphisms().items():
        gens[k] = v
        gens[f"{k}_{obj}"] = v
    D = left_dual(H.carrier)[0]
    return env.extend(objects={obj: H.carrier, obj + "d": D}, generators=gens)


def build_An(n: int) -> HopfData:
    """The truncated polynomial Hopf algebra k[x]/(x^n) in B_n."""
    if n < 2:
        raise ValueError("A_n needs n >= 2")
    A = GrObject(n, tuple(range(n)))
    AA = A @ A
    one = Cyc.one(n)
    q = Cyc.root_power(n, 1)
    m = GrMorphism._raw(AA, A, {})
    rows: dict[int, dict[int, Cyc]] = {}
    for a in range(n):
        for b in range(n - a):
            rows.setdefault(a + b, {})[a * n + b] = one
    m = GrMorphism(AA, A, rows)
    u = GrMorphism(unit(n), A, {0: {0: one}})
    cp_rows: dict[int, dict[int, Cyc]] = {}
    for mm in range(n):
        for k in range(mm + 1):
            c = qbinom(mm, k, q)
            if not c.is_zero():
                cp_rows.setdefault(k * n + (mm - k), {})[mm] = c
    cp = GrMorphism(A, AA, cp_rows)
    eps = GrMorphism(A, unit(n), {0: {0: one}})
    S = GrMorphism(A, A, {k: {k: Cyc.root_power(n, k * (k - 1) // 2) * (-1) ** k} for k in range(n)})
    return HopfData(A, m, u, cp, eps, S, mor_inverse(S), name=f"A_{n}")


# ---------------------------------------------------------------------------
# axiom suite

HOPF_AXIOMS = (
    "alg_assoc",
    "alg_unit_left",
    "alg_unit_right",
    "coalg_coassoc",
    "coalg_counit_left",
    "coalg_counit_right",
    "bialg_delta_m",
    "bialg_delta_u",
    "bialg_eps_m",
    "bialg_eps_u",
    "antipode_left",
    "antipode_right",
)


def check_hopf(H: HopfData, dsl_dir=None, report: Report | None = None, prefix: str = "") -> Report:
    """Exact check of every bialgebra and antipode axiom of H."""
    report = report if report is not None else Report({"n": H.n, "algebra": H.name})
    env = hopf_env(H)
    names = list(HOPF_AXIOMS)
    if H.S is None:
        names = [x for x in names if not x.startswith("antipode")]
    if H.S is not None and H.Sinv is not None:
        names += ["antipode_inv_left", "antipode_inv_right"]
    return check_pairs(env, dsl_definitions("hopf.dsl", dsl_dir), names, report, prefix)


# ---------------------------------------------------------------------------
# fusion operators and the antipode

def _fusion_env(H: HopfData, dsl_dir=None) -> Env:
    return hopf_env(H).extend(definitions=dsl_definitions("fusion.dsl", dsl_dir))


def fusion_ops(H: HopfData, dsl_dir=None) -> tuple[GrMorphism, GrMorphism]:
    env = _fusion_env(H, dsl_dir)
    return env("Hl"), env("Hr")


def antipode_from_fusion(H: HopfData, dsl_dir=None, with_inverse: bool = False):
    """Recover S (and optionally S^-1) from the inverses of the fusion operators.

    Raises :class:`NotHopfError` if a fusion operator is singular.
    """
    Hl, Hr = fusion_ops(H, dsl_dir)
    try:
        Hlinv = mor_inverse(Hl)
        Hrinv = mor_inverse(Hr) if with_inverse else None
    except SingularError as err:
        raise NotHopfError(f"not a Hopf algebra: fusion operator is singular ({err})") from None
    gens = {"Hlinv": Hlinv}
    if Hrinv is not None:
        gens["Hrinv"] = Hrinv
    env = _fusion_env(H, dsl_dir).extend(generators=gens)
    S = env("S_from_Hl")
    if not with_inverse:
        return S
    return S, env("Sinv_from_Hr")


def antipode_solutions(H: HopfData):
    """All morphisms satisfying both antipode axioms, as an affine family."""
    A = H.carrier
    env = hopf_env(H)
    ue = compose(H.u, H.eps)
    left = lambda X: env.extend(generators={"X": X})("m . (X * id[A]) . cp") - ue
    right = lambda X: env.extend(generators={"X": X})("m . (id[A] * X) . cp") - ue
    return solve_morphisms(A, A, [left, right])


# ---------------------------------------------------------------------------
# modules

@dataclass(frozen=True, eq=False)
class ModuleData:
    algebra: HopfData
    carrier: GrObject
    action: GrMorphism
    side: str = "left"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        A, M = self.algebra.carrier, self.carrier
        src = A @ M if self.side == "left" else M @ A
        if self.action.src != src or self.action.dst != M:
            raise ValueError("action has the wrong shape")


def _module_env(M: ModuleData, N: ModuleData | None = None) -> Env:
    env = hopf_env(M.algebra)
    D = left_dual(M.carrier)[0]
    objs = {"M": M.carrier, "Md": D}
    gens = {"r": M.action}
    if N is not None:
        objs["N"] = N.carrier
        gens["s"] = N.action
    return env.extend(objects=objs, generators=gens, definitions=dsl_definitions("modules.dsl"))


def module_check(M: ModuleData, report: Report | None = None, prefix: str = "") -> Report:
    report = report if report is not None else Report({"n": M.algebra.n, "module": M.side})
    tag = "lmod" if M.side == "left" else "rmod"
    env = _module_env(M)
    for ax in ("assoc", "unit"):
        key = f"{prefix}module.{ax}"
        report.compare(key, env(f"{tag}_{ax}_L"), env(f"{tag}_{ax}_R"))
    return report


def module_tensor(M: ModuleData, N: ModuleData) -> ModuleData:
    if M.algebra is not N.algebra:
        raise ValueError("modules over different algebras")
    if M.side != N.side:
        raise ValueError("cannot tensor a left module with a right module")
    tag = "lmod" if M.side == "left" else "rmod"
    act = _module_env(M, N)(f"{tag}_tensor")
    return ModuleData(M.algebra, M.carrier @ N.carrier, act, M.side)


def module_dual(M: ModuleData, which: str) -> ModuleData:
    """Left (``which='left'``) or right dual of a module."""
    if which not in ("left", "right"):
        raise ValueError("which must be 'left' or 'right'")
    H = M.algebra
    if H.S is None:
        raise ValueError("duals need an antipode")
    needs_inv = (M.side, which) in (("left", "right"), ("right", "left"))
    if needs_inv and H.Sinv is None:
        raise ValueError("this dual needs the inverse antipode")
    tag = "lmod" if M.side == "left" else "rmod"
    act = _module_env(M)(f"{tag}_{'l' if which == 'left' else 'r'}dual")
    return ModuleData(H, left_dual(M.carrier)[0], act, M.side)


def fa_functor(M: ModuleData) -> ModuleData:
    """Left module (M, r) to the right module (M, r tau_{M,A} (id (x) S))."""
    if M.side != "left":
        raise ValueError("fa_functor takes a left module")
    return ModuleData(M.algebra, M.carrier, _module_env(M)("fa_action"), "right")


def regular_module(H: HopfData, side: str = "left") -> ModuleData:
    return ModuleData(H, H.carrier, H.m, side)


def trivial_module(H: HopfData, side: str = "left") -> ModuleData:
    one = unit(H.n)
    return ModuleData(H, one, H.eps, side)


def free_module(H: HopfData, X: GrObject) -> ModuleData:
    """The free right module X (x) H with action id (x) m."""
    from .grcat import tensor_mor

    return ModuleData(H, X @ H.carrier, tensor_mor(identity(X), H.m), "right")
