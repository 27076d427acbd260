"""The coend C of B_n.

C is the direct sum of the ``^k_g (x) k_g`` over the n simples, so it has one
basis vector c_g per degree g and lives entirely in degree 0.  The universal
dinatural transformation is the canonical inclusion; every structure
morphism is then solved from its characterizing equality at the simples,
and the solver insists on a unique solution.

Right C-modules are the same thing as objects of the center Z(B_n):
``center_iso`` turns an action into half-braiding components.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grcat import (
    GrMorphism,
    GrObject,
    compose,
    identity,
    left_dual,
    simple,
    tensor_mor,
    unit,
)
from .hopfcore import HopfData, ModuleData, base_env, check_pairs, dsl_definitions
from .linalg import is_invertible, solve_morphisms
from .morphdsl import Env
from .report import Report
from .scalar import Cyc

__all__ = [
    "CoendData",
    "build_coend",
    "din",
    "coend_env",
    "universal_coaction",
    "check_pairing",
    "check_coend_identities",
    "center_iso",
    "character_module",
    "simple_center_objects",
    "check_half_braiding",
]


def coend_object(n: int) -> GrObject:
    return GrObject(n, (0,) * n)


def din(n: int, Y: GrObject) -> GrMorphism:
    """i_Y : ^Y (x) Y -> C, sending e^i (x) e_j to delta_ij c_|e_j|."""
    C = coend_object(n)
    D = left_dual(Y)[0]
    d = Y.dim
    one = Cyc.one(n)
    rows: dict[int, dict[int, Cyc]] = {}
    for j, g in enumerate(Y.degs):
        rows.setdefault(g, {})[j * d + j] = one
    return GrMorphism(D @ Y, C, rows, check=False)


@dataclass(frozen=True, eq=False)
class CoendData:
    n: int
    carrier: GrObject
    hopf: HopfData
    pairing: GrMorphism
    rmat: GrMorphism
    din: dict[int, GrMorphism] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = self.hopf.to_json()
        out["pairing"] = self.pairing.to_json()
        out["rmat"] = self.rmat.to_json()
        return out


def _raw_env(n: int) -> Env:
    C = coend_object(n)
    env = base_env(n).extend(
        objects={"C": C},
        generators={"din": lambda Y: din(n, Y)},
        definitions=dsl_definitions("coend.dsl"),
    )
    return env


def coend_env(cd: CoendData, env: Env | None = None) -> Env:
    """Environment binding C's structure as mC, uC, cpC, epsC, SC, SinvC, pair_C."""
    H = cd.hopf
    env = env or _raw_env(cd.n)
    gens = {
        "mC": H.m,
        "uC": H.u,
        "cpC": H.cp,
        "epsC": H.eps,
        "SC": H.S,
        "SinvC": H.Sinv,
        "pair_C": cd.pairing,
        "din": lambda Y: din(cd.n, Y),
    }
    return env.extend(objects={"C": cd.carrier}, generators=gens, definitions=dsl_definitions("coend.dsl"))


def _solve(env: Env, name: str, src: GrObject, dst: GrObject, cases) -> GrMorphism:
    """Solve ``char_<name>_L == char_<name>_R`` for the unknown X over all cases."""
    residuals = []
    for args in cases:
        head = f"[{', '.join(args)}]" if args else ""

        def res(X, head=head):
            e = env.extend(generators={"X": X})
            return e(f"char_{name}_L{head}") - e(f"char_{name}_R{head}")

        residuals.append(res)
    fam = solve_morphisms(src, dst, residuals)
    if fam.dimension != 0:
        raise ArithmeticError(f"characterizing equality for {name} does not determine it (dimension {fam.dimension})")
    return fam.member()


def build_coend(n: int) -> CoendData:
    if n < 1:
        raise ValueError("n must be positive")
    C = coend_object(n)
    one = unit(n)
    env = _raw_env(n)
    simples = {f"K{g}": simple(n, g) for g in range(n)}
    duals = {f"K{g}d": left_dual(simple(n, g))[0] for g in range(n)}
    env = env.extend(objects={**simples, **duals})
    singles = [(f"K{g}",) for g in range(n)]
    pairs = [(f"K{a}", f"K{b}") for a in range(n) for b in range(n)]

    cp = _solve(env, "cp", C, C @ C, singles)
    eps = _solve(env, "eps", C, one, singles)
    m = _solve(env, "m", C @ C, C, pairs)
    u = _solve(env, "u", one, C, [()])
    pair = _solve(env, "pair", C @ C, one, pairs)

    def with_dual(name):
        residuals = []
        for g in range(n):
            e0 = env.extend(objects={"Yd": duals[f"K{g}d"]})

            def res(X, e0=e0, g=g):
                e = e0.extend(generators={"X": X})
                return e(f"char_{name}_L[K{g}]") - e(f"char_{name}_R[K{g}]")

            residuals.append(res)
        fam = solve_morphisms(C, C, residuals)
        if fam.dimension != 0:
            raise ArithmeticError(f"characterizing equality for {name} does not determine it")
        return fam.member()

    S = with_dual("S")
    Sinv = with_dual("Sinv")
    H = HopfData(C, m, u, cp, eps, S, Sinv, name="C")
    dins = {g: din(n, simple(n, g)) for g in range(n)}
    rmat = tensor_mor(compose(u, eps), identity(C))
    return CoendData(n, C, H, pair, rmat, dins)


def universal_coaction(cd: CoendData, Y: GrObject) -> GrMorphism:
    """delta_Y = (id_Y (x) i_Y)(coev_Y (x) id_Y) : Y -> Y (x) C."""
    if Y.n != cd.n:
        raise ValueError("modulus mismatch")
    return coend_env(cd).extend(objects={"Y": Y})("delta[Y]")


def check_pairing(cd: CoendData, report: Report | None = None) -> Report:
    report = report if report is not None else Report({"n": cd.n, "construction": "coend"})
    names = [
        "pairing_mult_left",
        "pairing_unit_left",
        "pairing_mult_right",
        "pairing_unit_right",
        "pairing_S_balance",
        "pairing_selfdual",
    ]
    check_pairs(coend_env(cd), {}, names, report)
    eps2 = tensor_mor(cd.hopf.eps, cd.hopf.eps)
    report.extra["omega_is_eps_eps"] = cd.pairing == eps2
    return report


def regular_c_module(cd: CoendData) -> ModuleData:
    return ModuleData(cd.hopf, cd.carrier, cd.hopf.m, "right")


def check_coend_identities(cd: CoendData, report: Report | None = None) -> Report:
    """The two expressions of delta_C and the cocommutativity of Delta_C under sigma_C."""
    report = report if report is not None else Report({"n": cd.n, "construction": "coend"})
    reg = regular_c_module(cd)
    sigmaC = center_iso(cd, reg, cd.carrier)
    env = coend_env(cd).extend(generators={"sigmaC": sigmaC})
    names = ["ident_deltaC_form1", "ident_deltaC_form2", "ident_sigmaC_cocomm"]
    return check_pairs(env, {}, names, report)


# ---------------------------------------------------------------------------
# right C-modules as objects of the center

def center_iso(cd: CoendData, M: ModuleData, X: GrObject) -> GrMorphism:
    """sigma_X : M (x) X -> X (x) M for the right C-module M."""
    if M.side != "right" or M.algebra.carrier != cd.carrier:
        raise ValueError("center_iso takes a right C-module")
    env = coend_env(cd).extend(objects={"M": M.carrier, "Y": X}, generators={"r": M.action})
    return env("sigma[Y]")


def character_module(cd: CoendData, degree: int, char: int) -> ModuleData:
    """The one-dimensional simple of Z(B_n): degree d, C acting by c_g -> z^(char*g)."""
    n = cd.n
    M = simple(n, degree)
    rows = {0: {g: Cyc.root_power(n, char * g) for g in range(n)}}
    return ModuleData(cd.hopf, M, GrMorphism(M @ cd.carrier, M, rows), "right")


def simple_center_objects(cd: CoendData) -> list[ModuleData]:
    """All n^2 simple objects of Z(B_n), ordered by (degree, character)."""
    return [character_module(cd, d, c) for d in range(cd.n) for c in range(cd.n)]


def check_half_braiding(cd: CoendData, M: ModuleData, probes, report: Report | None = None, prefix="") -> Report:
    """Unit, multiplicativity and invertibility of the half braiding of M on probe objects."""
    report = report if report is not None else Report({"n": cd.n})
    one = unit(cd.n)
    report.compare(prefix + "half_braiding.unit", center_iso(cd, M, one), identity(M.carrier))
    ok_inv = all(is_invertible(center_iso(cd, M, X)) for X in probes)
    report.record(prefix + "half_braiding.invertible", ok_inv)
    mult_ok = True
    ce = None
    for X in probes:
        for Y in probes:
            lhs = center_iso(cd, M, X @ Y)
            rhs = compose(
                tensor_mor(identity(X), center_iso(cd, M, Y)),
                tensor_mor(center_iso(cd, M, X), identity(Y)),
            )
            d = lhs.first_difference(rhs)
            if d is not None and mult_ok:
                mult_ok = False
                ce = {"row": d[0], "col": d[1], "lhs": str(d[2]), "rhs": str(d[3])}
    report.record(prefix + "half_braiding.multiplicative", mult_ok, ce)
    return report
