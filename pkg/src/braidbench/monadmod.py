"""Hopf monads, instantiated on concrete examples.

A monad here is extensional: a bundle of evaluators that produce, for a
given object, the matrix of each structure morphism.  Objects live in the
center Z(B_n), represented as right C-modules (``CenterObject``).  Monads on
B_n itself (the free-module monads ? (x) H) are viewed on Z(B_n) through the
embedding X -> (X, tau_{X,-}), i.e. C acting on their outputs by the counit.

The probe set is fixed: the n^2 simple objects of Z(B_n) (one-dimensional,
a degree and a character) plus the regular C-module.  Since Z(B_n) is
semisimple, a natural transformation is determined by its components on
simples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .coendmod import CoendData, center_iso, character_module
from .doublemod import RMatrixData, build_double, double_env, induced_braiding, rmatrix_env, straightening
from .grcat import GrMorphism, GrObject, compose, identity, left_dual, right_dual, tensor_many, tensor_mor, unit
from .hopfcore import HopfData, ModuleData, check_hopf, dsl_definitions, module_check, module_dual, module_tensor
from .linalg import SingularError, is_invertible, mor_inverse
from .morphdsl import Env
from .report import Report
from .scalar import Cyc

__all__ = [
    "CenterObject",
    "MonadInstance",
    "free_monad",
    "build_dA",
    "center_probes",
    "tmodule_check",
    "check_monad_suite",
    "hopf_monad_antipodes",
    "dual_tmodule",
    "tmodule_tensor",
    "tmodule_braiding",
    "check_tmodule_braiding",
    "cross_product_check",
    "augmentation_search",
    "check_augmentation",
    "counit_augmentation",
    "braiding_compatibility",
]


# ---------------------------------------------------------------------------
# objects of the center

@dataclass(frozen=True, eq=False)
class CenterObject:
    """A right C-module (M, r); its half braiding is ``center_iso``."""

    carrier: GrObject
    action: GrMorphism
    coend: CoendData

    def __post_init__(self):
        C = self.coend.carrier
        if self.action.src != self.carrier @ C or self.action.dst != self.carrier:
            raise ValueError("a center object needs an action M (x) C -> M")

    @classmethod
    def from_module(cls, M: ModuleData, cd: CoendData) -> "CenterObject":
        if M.side != "right" or M.algebra.carrier != cd.carrier:
            raise ValueError("expected a right C-module")
        return cls(M.carrier, M.action, cd)

    @classmethod
    def trivial(cls, cd: CoendData, X: GrObject) -> "CenterObject":
        return cls(X, tensor_mor(identity(X), cd.hopf.eps), cd)

    @property
    def module(self) -> ModuleData:
        return ModuleData(self.coend.hopf, self.carrier, self.action, "right")

    def half_braiding(self, X: GrObject) -> GrMorphism:
        return center_iso(self.coend, self.module, X)

    def tensor(self, other: "CenterObject") -> "CenterObject":
        return CenterObject.from_module(module_tensor(self.module, other.module), self.coend)

    def left_dual(self) -> "CenterObject":
        return CenterObject.from_module(module_dual(self.module, "left"), self.coend)

    def right_dual(self) -> "CenterObject":
        return CenterObject.from_module(module_dual(self.module, "right"), self.coend)

    def is_morphism(self, f: GrMorphism, dst: "CenterObject") -> bool:
        """Whether f : self -> dst commutes with the C-actions."""
        C = self.coend.carrier
        return compose(f, self.action) == compose(dst.action, tensor_mor(f, identity(C)))

    def check(self, report: Report | None = None, prefix: str = "") -> Report:
        report = report if report is not None else Report({"n": self.coend.n, "check": "center_object"})
        module_check(self.module, report, prefix)
        probes = [GrObject(self.coend.n, (g,)) for g in range(self.coend.n)]
        ok = all(is_invertible(self.half_braiding(X)) for X in probes)
        report.record(prefix + "center.half_braiding_invertible", ok)
        return report


def center_probes(cd: CoendData, regular: bool = True) -> list[CenterObject]:
    """The n^2 simples of Z(B_n), then (optionally) the regular C-module."""
    out = [CenterObject.from_module(character_module(cd, d, c), cd) for d in range(cd.n) for c in range(cd.n)]
    if regular:
        out.append(CenterObject(cd.carrier, cd.hopf.m, cd))
    return out


# ---------------------------------------------------------------------------
# monads

class _Memo:
    """Per-object cache keyed by identity; keeps the keys alive."""

    def __init__(self, fn):
        self.fn = fn
        self.store: dict = {}

    def __call__(self, *objs):
        key = tuple(id(o) for o in objs)
        hit = self.store.get(key)
        if hit is None:
            hit = (objs, self.fn(*objs))
            self.store[key] = hit
        return hit[1]


@dataclass(eq=False)
class MonadInstance:
    """A (bi)monad on Z(B_n), given by its evaluators.

    ``apply_mor`` takes a morphism f : X -> Y of carriers and returns T(f).
    ``R`` is optional; when present, ``R(X, Y) : X (x) Y -> T(Y) (x) T(X)``.
    """

    name: str
    coend: CoendData
    apply_obj: Callable[[CenterObject], CenterObject]
    apply_mor: Callable[[GrMorphism], GrMorphism]
    mu: Callable[[CenterObject], GrMorphism]
    eta: Callable[[CenterObject], GrMorphism]
    T2: Callable[[CenterObject, CenterObject], GrMorphism]
    T0: GrMorphism
    R: Callable[[CenterObject, CenterObject], GrMorphism] | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.apply_obj = _Memo(self.apply_obj)
        self.mu = _Memo(self.mu)
        self.eta = _Memo(self.eta)
        self.T2 = _Memo(self.T2)
        if self.R is not None:
            self.R = _Memo(self.R)
        self._tensor = _Memo(lambda X, Y: X.tensor(Y))
        self._unit = CenterObject.trivial(self.coend, unit(self.coend.n))

    @property
    def n(self) -> int:
        return self.coend.n

    def unit_object(self) -> CenterObject:
        return self._unit

    def tensor(self, X: CenterObject, Y: CenterObject) -> CenterObject:
        return self._tensor(X, Y)

    def fusion_left(self, X: CenterObject, Y: CenterObject) -> GrMorphism:
        """H^l_{X,Y} = (T(X) (x) mu_Y) T_2(X, T(Y))."""
        TX, TY = self.apply_obj(X), self.apply_obj(Y)
        return compose(tensor_mor(identity(TX.carrier), self.mu(Y)), self.T2(X, TY))

    def fusion_right(self, X: CenterObject, Y: CenterObject) -> GrMorphism:
        """H^r_{X,Y} = (mu_X (x) T(Y)) T_2(T(X), Y)."""
        TX, TY = self.apply_obj(X), self.apply_obj(Y)
        return compose(tensor_mor(self.mu(X), identity(TY.carrier)), self.T2(TX, Y))

    def with_(self, **changes) -> "MonadInstance":
        """A copy with some evaluators replaced (used for negative fixtures)."""
        fields = dict(
            name=self.name, coend=self.coend, apply_obj=self.apply_obj.fn, apply_mor=self.apply_mor,
            mu=self.mu.fn, eta=self.eta.fn, T2=self.T2.fn, T0=self.T0,
            R=None if self.R is None else self.R.fn, extra=dict(self.extra),
        )
        fields.update(changes)
        return MonadInstance(**fields)


def free_monad(H: HopfData, cd: CoendData, rd: RMatrixData | None = None, side: str = "right",
               verify: bool = True) -> MonadInstance:
    """The monad X -> X (x) H on B_n, with mu = id (x) m and eta = id (x) u.

    The comonoidal structure is T_2(X, Y) = (id (x) tau_{Y,H} (x) id)(id (x) Delta)
    and T_0 = eps.  With ``rd`` the R-matrix of H gives R_{X,Y}.
    """
    if side != "right":
        raise ValueError("only the right-handed monad ? (x) H is provided")
    if H.n != cd.n:
        raise ValueError("algebra and coend over different n")
    if verify:
        rep = check_hopf(H)
        if not rep.ok:
            raise ValueError(f"{H.name} is not a Hopf algebra: {[r.key for r in rep.failures()]}")
    Hc = H.carrier
    iH = identity(Hc)
    if rd is not None:
        env = rmatrix_env(rd)
    else:
        env = rmatrix_env(RMatrixData(H, cd, GrMorphism(cd.carrier @ cd.carrier, Hc @ Hc, {}, check=False)))

    def apply_obj(X):
        return CenterObject.trivial(cd, X.carrier @ Hc)

    def apply_mor(f):
        return tensor_mor(f, iH)

    def mu(X):
        return tensor_mor(identity(X.carrier), H.m)

    def eta(X):
        return tensor_mor(identity(X.carrier), H.u)

    def T2(X, Y):
        return env.extend(objects={"X1": X.carrier, "Y": Y.carrier})("T2[X1, Y]")

    R = None
    if rd is not None:
        def R(X, Y):
            return env.extend(objects={"X1": X.carrier, "Y": Y.carrier})("R[X1, Y]")

    return MonadInstance(f"? * {H.name}", cd, apply_obj, apply_mor, mu, eta, T2, H.eps, R,
                         extra={"on": "B", "algebra": H.name, "hopf": H})


def build_dA(A: HopfData, cd: CoendData, verify: bool = True, dsl_dir=None, double=None) -> MonadInstance:
    """The central double d_A on Z(B_n), M -> M (x)_C D(A) on the carrier M (x) A (x) ^A.

    All structure morphisms are evaluated from dA.dsl; ``double`` may pass a
    prebuilt ``(H, RMatrixData)`` for D(A).
    """
    if A.n != cd.n:
        raise ValueError("algebra and coend over different n")
    if verify:
        rep = check_hopf(A)
        if not rep.ok:
            raise ValueError(f"{A.name} is not a Hopf algebra: {[r.key for r in rep.failures()]}")
    HD, rdD = double if double is not None else build_double(A, cd, verify=False, dsl_dir=dsl_dir)
    base = double_env(A, cd, straightening(A, cd), dsl_dir)
    base = base.extend(definitions=dsl_definitions("dA.dsl", dsl_dir))
    YA = A.carrier @ base.objects["Ad"]
    iY = identity(YA)

    def env_for(M, N=None) -> Env:
        objs = {"M": M.carrier}
        gens = {"r": M.action}
        if N is not None:
            objs["N"] = N.carrier
            gens["s"] = N.action
        return base.extend(objects=objs, generators=gens)

    def free_D(M) -> ModuleData:
        return ModuleData(HD, M.carrier @ YA, env_for(M)("actM"), "right")

    def apply_obj(M):
        return CenterObject(M.carrier @ YA, env_for(M)("dA_action"), cd)

    def apply_mor(f):
        return tensor_mor(f, iY)

    def mu(M):
        return env_for(M)("dA_mu")

    def eta(M):
        return env_for(M)("dA_eta")

    def T2(M, N):
        return env_for(M, N)("dA_T2")

    def R(M, N):
        cFF = induced_braiding(rdD, free_D(M), free_D(N))
        return env_for(M, N).extend(generators={"cFF": cFF})("dA_R")

    T0 = base("dA_T0")
    T = MonadInstance(f"d_{A.name}", cd, apply_obj, apply_mor, mu, eta, T2, T0, R,
                      extra={"on": "Z", "algebra": A.name})
    T.extra["double"] = (HD, rdD)
    T.extra["env"] = env_for
    return T


# ---------------------------------------------------------------------------
# T-modules

def tmodule_check(T: MonadInstance, M: CenterObject, r: GrMorphism, report: Report | None = None,
                  prefix: str = "") -> Report:
    """(M, r) with r : T(M) -> M is a T-module: r T(r) = r mu_M and r eta_M = id."""
    report = report if report is not None else Report({"n": T.n, "check": "tmodule"})
    report.compare(prefix + "tmodule.assoc", compose(r, T.apply_mor(r)), compose(r, T.mu(M)))
    report.compare(prefix + "tmodule.unit", compose(r, T.eta(M)), identity(M.carrier))
    return report


def _ldual_mor(f: GrMorphism) -> GrMorphism:
    """^f : ^Y -> ^X for f : X -> Y."""
    Xd, _, coevX = left_dual(f.src)
    Yd, evY, _ = left_dual(f.dst)
    return compose(
        tensor_mor(evY, identity(Xd)),
        compose(tensor_many(identity(Yd), f, identity(Xd)), tensor_mor(identity(Yd), coevX)),
    )


def _rdual_mor(f: GrMorphism) -> GrMorphism:
    """f^ : Y^ -> X^ for f : X -> Y."""
    Xd, _, rcoevX = right_dual(f.src)
    Yd, revY, _ = right_dual(f.dst)
    return compose(
        tensor_mor(identity(Xd), revY),
        compose(tensor_many(identity(Xd), f, identity(Yd)), tensor_mor(rcoevX, identity(Yd))),
    )


def hopf_monad_antipodes(T: MonadInstance, X: CenterObject):
    """The left and right antipodes (s^l_X, s^r_X) from the fusion operators.

    s^l_X : T(^T(X)) -> ^X and s^r_X : T(T(X)^) -> X^.  Raises SingularError
    when a fusion operator needed on the way is not invertible.
    """
    TX = T.apply_obj(X)
    # left
    L = TX.left_dual()
    _, lev, lcoev = left_dual(TX.carrier)
    Hl = T.fusion_left(L, X)
    if not is_invertible(Hl):
        raise SingularError(f"left fusion operator of {T.name} is singular")
    TL = T.apply_obj(L)
    head = compose(T.T0, compose(T.apply_mor(lev), mor_inverse(Hl)))
    s_l = compose(
        tensor_mor(head, _ldual_mor(T.eta(X))),
        tensor_mor(identity(TL.carrier), lcoev),
    )
    # right
    Rd = TX.right_dual()
    _, rev, rcoev = right_dual(TX.carrier)
    Hr = T.fusion_right(X, Rd)
    if not is_invertible(Hr):
        raise SingularError(f"right fusion operator of {T.name} is singular")
    TR = T.apply_obj(Rd)
    tail = compose(T.T0, compose(T.apply_mor(rev), mor_inverse(Hr)))
    s_r = compose(
        tensor_mor(_rdual_mor(T.eta(X)), tail),
        tensor_mor(rcoev, identity(TR.carrier)),
    )
    return s_l, s_r


def dual_tmodule(T: MonadInstance, M: CenterObject, r: GrMorphism, which: str = "left"):
    """The dual T-module: (^M, s^l_M T(^r)) or (M^, s^r_M T(r^))."""
    s_l, s_r = hopf_monad_antipodes(T, M)
    if which == "left":
        return M.left_dual(), compose(s_l, T.apply_mor(_ldual_mor(r)))
    if which == "right":
        return M.right_dual(), compose(s_r, T.apply_mor(_rdual_mor(r)))
    raise ValueError("which must be 'left' or 'right'")


# ---------------------------------------------------------------------------
# the axiom suite

class _Checker:
    def __init__(self, report: Report, prefix: str):
        self.report = report
        self.prefix = prefix
        self.first: dict[str, dict | None] = {}
        self.order: list[str] = []

    def eq(self, key, lhs, rhs, where):
        if key not in self.first:
            self.first[key] = None
            self.order.append(key)
        if self.first[key] is not None:
            return
        if not lhs.same_type(rhs):
            self.first[key] = {"where": where, "type": "shape mismatch"}
            return
        d = lhs.first_difference(rhs)
        if d is not None:
            self.first[key] = {"where": where, "row": d[0], "col": d[1], "lhs": str(d[2]), "rhs": str(d[3])}

    def truth(self, key, ok, where, **detail):
        if key not in self.first:
            self.first[key] = None
            self.order.append(key)
        if self.first[key] is None and not ok:
            self.first[key] = {"where": where, **detail}

    def flush(self):
        for key in self.order:
            ce = self.first[key]
            self.report.record(self.prefix + key, ce is None, ce)


def check_monad_suite(T: MonadInstance, probes, report: Report | None = None, prefix: str = "",
                      triples: bool = True, module_probes=None, braiding: bool = True) -> Report:
    """Monad, comonoidal, bimonad, Hopf and (when R is present) quasitriangular laws at probes.

    ``probes`` are CenterObjects; pair laws run over all ordered pairs and the
    comonoidal associativity over all triples.  The induced braiding is
    checked on the free T-modules over ``module_probes`` (default: the first
    two probes).
    """
    report = report if report is not None else Report({"n": T.n, "check": "monad", "monad": T.name})
    ck = _Checker(report, prefix)
    one = T.unit_object()
    probes = list(probes)
    if T.extra.get("on") == "B":
        # a monad on B_n only sees carriers
        probes = [CenterObject.trivial(T.coend, X.carrier) for X in probes]
    idx = range(len(probes))
    I = lambda X: identity(X.carrier)

    with report.timed(prefix + "monad"):
        for i, X in enumerate(probes):
            TX = T.apply_obj(X)
            TTX = T.apply_obj(TX)
            muX = T.mu(X)
            ck.eq("monad.assoc", compose(muX, T.apply_mor(muX)), compose(muX, T.mu(TX)), [i])
            ck.eq("monad.unit_left", compose(muX, T.eta(TX)), I(TX), [i])
            ck.eq("monad.unit_right", compose(muX, T.apply_mor(T.eta(X))), I(TX), [i])
            ck.truth("center.output_module", module_check(TX.module).ok, [i])
            ck.truth("center.mu_linear", TTX.is_morphism(muX, TX), [i])
            ck.truth("center.eta_linear", X.is_morphism(T.eta(X), TX), [i])

    with report.timed(prefix + "bimonad"):
        T1 = T.apply_obj(one)
        for i, j in itertools.product(idx, repeat=2):
            X, Y = probes[i], probes[j]
            XY = T.tensor(X, Y)
            TX, TY, TXY = T.apply_obj(X), T.apply_obj(Y), T.apply_obj(XY)
            t2 = T.T2(X, Y)
            lhs = compose(t2, T.mu(XY))
            rhs = compose(tensor_mor(T.mu(X), T.mu(Y)), compose(T.T2(TX, TY), T.apply_mor(t2)))
            ck.eq("bimonad.mu_T2", lhs, rhs, [i, j])
            ck.eq("bimonad.eta_T2", compose(t2, T.eta(XY)), tensor_mor(T.eta(X), T.eta(Y)), [i, j])
            ck.truth("center.T2_linear", TXY.is_morphism(t2, T.tensor(TX, TY)), [i, j])
        for i, X in enumerate(probes):
            TX = T.apply_obj(X)
            ck.eq("comonoidal.unit_left", compose(tensor_mor(T.T0, I(TX)), T.T2(one, X)), I(TX), [i])
            ck.eq("comonoidal.unit_right", compose(tensor_mor(I(TX), T.T0), T.T2(X, one)), I(TX), [i])
        ck.eq("bimonad.mu_T0", compose(T.T0, T.mu(one)), compose(T.T0, T.apply_mor(T.T0)), [])
        ck.eq("bimonad.eta_T0", compose(T.T0, T.eta(one)), identity(one.carrier), [])
        ck.truth("center.T0_linear", T1.is_morphism(T.T0, one), [])
        if triples:
            for i, j, k in itertools.product(idx, repeat=3):
                X, Y, Z = probes[i], probes[j], probes[k]
                lhs = compose(tensor_mor(T.T2(X, Y), I(T.apply_obj(Z))), T.T2(T.tensor(X, Y), Z))
                rhs = compose(tensor_mor(I(T.apply_obj(X)), T.T2(Y, Z)), T.T2(X, T.tensor(Y, Z)))
                ck.eq("comonoidal.assoc", lhs, rhs, [i, j, k])

    with report.timed(prefix + "hopf"):
        for i, j in itertools.product(idx, repeat=2):
            X, Y = probes[i], probes[j]
            ck.truth("hopf.fusion_left", is_invertible(T.fusion_left(X, Y)), [i, j])
            ck.truth("hopf.fusion_right", is_invertible(T.fusion_right(X, Y)), [i, j])

    if T.R is not None:
        with report.timed(prefix + "qt"):
            _qt_axioms(T, probes, ck, triples)
        ck.flush()
        if braiding:
            mods = list(module_probes) if module_probes is not None else probes[:2]
            if T.extra.get("on") == "B":
                mods = [CenterObject.trivial(T.coend, X.carrier) for X in mods]
            with report.timed(prefix + "qt.braiding"):
                check_tmodule_braiding(T, [(T.apply_obj(X), T.mu(X)) for X in mods], report, prefix,
                                       morphisms=_free_maps(T, mods))
        return report
    ck.flush()
    return report


def _qt_axioms(T: MonadInstance, probes, ck: _Checker, triples: bool):
    one = T.unit_object()
    I = lambda X: identity(X.carrier)
    idx = range(len(probes))
    for i, j in itertools.product(idx, repeat=2):
        X, Y = probes[i], probes[j]
        TX, TY = T.apply_obj(X), T.apply_obj(Y)
        mm = tensor_mor(T.mu(Y), T.mu(X))
        lhs = compose(mm, compose(T.T2(TY, TX), T.apply_mor(T.R(X, Y))))
        rhs = compose(mm, compose(T.R(TX, TY), T.T2(X, Y)))
        ck.eq("qt.mult", lhs, rhs, [i, j])
    for i, X in enumerate(probes):
        TX = T.apply_obj(X)
        ck.eq("qt.unit_left", compose(tensor_mor(T.T0, I(TX)), T.R(X, one)), T.eta(X), [i])
        ck.eq("qt.unit_right", compose(tensor_mor(I(TX), T.T0), T.R(one, X)), T.eta(X), [i])
    if not triples:
        return
    for i, j, k in itertools.product(idx, repeat=3):
        X, Y, Z = probes[i], probes[j], probes[k]
        TX, TY, TZ = T.apply_obj(X), T.apply_obj(Y), T.apply_obj(Z)
        lhs = compose(tensor_mor(I(TZ), T.T2(X, Y)), T.R(T.tensor(X, Y), Z))
        rhs = compose(
            tensor_many(T.mu(Z), I(TX), I(TY)),
            compose(tensor_mor(T.R(X, TZ), I(TY)), tensor_mor(I(X), T.R(Y, Z))),
        )
        ck.eq("qt.first", lhs, rhs, [i, j, k])
        lhs = compose(tensor_mor(T.T2(Y, Z), I(TX)), T.R(X, T.tensor(Y, Z)))
        rhs = compose(
            tensor_many(I(TY), I(TZ), T.mu(X)),
            compose(tensor_mor(I(TY), T.R(TX, Z)), tensor_mor(T.R(X, Y), I(Z))),
        )
        ck.eq("qt.second", lhs, rhs, [i, j, k])


def _free_maps(T: MonadInstance, mods):
    """T-module maps between free modules: mu_X : T(T(X)) -> T(X) and T(eta_X)."""
    out = []
    for X in mods:
        TX = T.apply_obj(X)
        out.append((T.mu(X), (T.apply_obj(TX), T.mu(TX)), (TX, T.mu(X))))
    return out


def tmodule_tensor(T: MonadInstance, M, N):
    """(M, r) (x) (N, s) = (M (x) N, (r (x) s) T_2(M, N))."""
    (Mo, r), (No, s) = M, N
    return T.tensor(Mo, No), compose(tensor_mor(r, s), T.T2(Mo, No))


def tmodule_braiding(T: MonadInstance, M, N) -> GrMorphism:
    """tau_{(M,r),(N,s)} = (s (x) r) R_{M,N}."""
    (Mo, r), (No, s) = M, N
    return compose(tensor_mor(s, r), T.R(Mo, No))


def check_tmodule_braiding(T: MonadInstance, modules, report: Report, prefix: str = "", morphisms=()) -> Report:
    """Invertibility, T-linearity, hexagons and naturality of the induced braiding."""
    ck = _Checker(report, prefix)
    c = lambda a, b: tmodule_braiding(T, a, b)
    idx = range(len(modules))
    for i, j in itertools.product(idx, repeat=2):
        M, N = modules[i], modules[j]
        cc = c(M, N)
        ck.truth("qt.braiding.invertible", is_invertible(cc), [i, j])
        (MN, aMN), (NM, aNM) = tmodule_tensor(T, M, N), tmodule_tensor(T, N, M)
        ck.eq("qt.braiding.linear", compose(cc, aMN), compose(aNM, T.apply_mor(cc)), [i, j])
    for i, j, k in itertools.product(idx, repeat=3):
        M, N, P = modules[i], modules[j], modules[k]
        iM, iN, iP = (identity(X[0].carrier) for X in (M, N, P))
        ck.eq("qt.braiding.hexagon_left", c(M, tmodule_tensor(T, N, P)),
              compose(tensor_mor(iN, c(M, P)), tensor_mor(c(M, N), iP)), [i, j, k])
        ck.eq("qt.braiding.hexagon_right", c(tmodule_tensor(T, M, N), P),
              compose(tensor_mor(c(M, P), iN), tensor_mor(iM, c(N, P))), [i, j, k])
    for f, src, dst in morphisms:
        for j in idx:
            N = modules[j]
            iN = identity(N[0].carrier)
            ck.eq("qt.braiding.natural", compose(c(dst, N), tensor_mor(f, iN)), compose(tensor_mor(iN, f), c(src, N)),
                  ["first", j])
            ck.eq("qt.braiding.natural", compose(c(N, dst), tensor_mor(iN, f)), compose(tensor_mor(f, iN), c(N, src)),
                  ["second", j])
    ck.flush()
    return report


# ---------------------------------------------------------------------------
# ? (x) D(A) as a cross product of d_A by ? (x) C

def _free_c(cd: CoendData, X: GrObject) -> CenterObject:
    return CenterObject(X @ cd.carrier, tensor_mor(identity(X), cd.hopf.m), cd)


def cross_product_check(A: HopfData, cd: CoendData, probes=None, identification: str = "canonical",
                        dA: MonadInstance | None = None, report: Report | None = None, prefix: str = "") -> Report:
    """Compare ? (x) D(A) with the composite X -> U d_A F(X) at probe objects of B_n.

    F(X) = (X (x) C, id (x) m_C) is the free C-module and U forgets.  The
    carriers X (x) C (x) A (x) ^A and X (x) A (x) ^A (x) C are identified by
    x (x) c (x) y -> x (x) c y (``identification='canonical'``, a permutation
    up to roots of unity); ``identification='none'`` compares raw matrices.
    """
    if identification not in ("canonical", "none"):
        raise ValueError("identification must be 'canonical' or 'none'")
    n = A.n
    report = report if report is not None else Report({"n": n, "check": "cross_product", "algebra": A.name})
    T = dA if dA is not None else build_dA(A, cd, verify=False)
    HD, rdD = T.extra["double"]
    FD = free_monad(HD, cd, rdD, verify=False)
    env = T.extra["env"]
    if probes is None:
        probes = [unit(n), GrObject(n, (1 % n,)), A.carrier]
    Cc = cd.carrier
    one = unit(n)

    def Q(X):
        return T.apply_obj(_free_c(cd, X))

    def phi(X):
        if identification == "none":
            return identity(Q(X).carrier)
        return env(CenterObject.trivial(cd, X)).extend(objects={"X1": X})("dA_free_iso[X1]")

    def mu_Q(X):
        FX = _free_c(cd, X)
        QX = T.apply_obj(FX)
        return compose(T.mu(FX), T.apply_mor(QX.action))

    def eta_Q(X):
        FX = _free_c(cd, X)
        return compose(T.eta(FX), tensor_mor(identity(X), cd.hopf.u))

    def T2_Q(X, Y):
        FX, FY = _free_c(cd, X), _free_c(cd, Y)
        F2 = FD_C.T2(CenterObject.trivial(cd, X), CenterObject.trivial(cd, Y))
        return compose(T.T2(FX, FY), T.apply_mor(F2))

    def R_Q(X, Y):
        FX, FY = _free_c(cd, X), _free_c(cd, Y)
        return compose(T.R(FX, FY), tensor_mor(tensor_mor(identity(X), cd.hopf.u), tensor_mor(identity(Y), cd.hopf.u)))

    FD_C = free_monad(cd.hopf, cd, verify=False)
    ck = _Checker(report, prefix)
    tr = lambda X: CenterObject.trivial(cd, X)

    def attempt(key, where, fn):
        try:
            lhs, rhs = fn()
        except ValueError as err:
            # without the identification the two sides need not even compose
            ck.truth(key, False, where, error=str(err)[:200])
            return
        ck.eq(key, lhs, rhs, where)

    for i, X in enumerate(probes):
        DX = X @ HD.carrier
        ck.truth("cross.carrier_dim", Q(X).carrier.dim == DX.dim == X.dim * n ** 3, [i])
        ck.truth("cross.identification_invertible", is_invertible(phi(X)), [i])
        attempt("cross.eta", [i], lambda X=X: (compose(phi(X), eta_Q(X)), FD.eta(tr(X))))
        attempt("cross.mu", [i], lambda X=X: (
            compose(phi(X), mu_Q(X)),
            compose(tensor_mor(identity(X), HD.m),
                    compose(tensor_mor(phi(X), identity(HD.carrier)), phi(Q(X).carrier))),
        ))
    for i, j in itertools.product(range(len(probes)), repeat=2):
        X, Y = probes[i], probes[j]
        attempt("cross.T2", [i, j], lambda X=X, Y=Y: (
            compose(tensor_mor(phi(X), phi(Y)), T2_Q(X, Y)), compose(FD.T2(tr(X), tr(Y)), phi(X @ Y))))
        attempt("cross.R", [i, j], lambda X=X, Y=Y: (
            compose(tensor_mor(phi(Y), phi(X)), R_Q(X, Y)), FD.R(tr(X), tr(Y))))
    attempt("cross.T0", [], lambda: (compose(T.T0, T.apply_mor(cd.hopf.eps)), compose(HD.eps, phi(one))))
    ck.flush()
    return report


# ---------------------------------------------------------------------------
# augmentations: Hopf monad morphisms e : T -> 1
#
# A candidate e is given by its components on the simple probes.  The
# constraints are C-linearity, e eta = id, T_0 = e_1, comonoidality
# (e_X (x) e_Y) T_2(X, Y) = e_{X (x) Y}, and e mu = e T(e).  The first three
# are linear; the other two are quadratic and are handled by elimination of
# whatever becomes linear, then by splitting on univariate quadratics.

def _same_object(X: CenterObject, Y: CenterObject) -> bool:
    return X.carrier == Y.carrier and X.action == Y.action


def _on_base(T: MonadInstance, probes) -> list:
    """Monads on B_n see probes through the trivial embedding B_n -> Z(B_n)."""
    if T.extra.get("on") == "B":
        return [CenterObject.trivial(T.coend, X.carrier) for X in probes]
    return list(probes)


def check_augmentation(T: MonadInstance, e, probes, report: Report | None = None, prefix: str = "") -> Report:
    """Verify that ``e`` (a function CenterObject -> GrMorphism T(X) -> X) is an augmentation at probes."""
    report = report if report is not None else Report({"n": T.n, "check": "augmentation", "monad": T.name})
    ck = _Checker(report, prefix)
    one = T.unit_object()
    probes = _on_base(T, probes)
    for i, X in enumerate(probes):
        TX = T.apply_obj(X)
        eX = e(X)
        ck.truth("aug.linear", TX.is_morphism(eX, X), [i])
        ck.eq("aug.eta", compose(eX, T.eta(X)), identity(X.carrier), [i])
        ck.eq("aug.mu", compose(eX, T.mu(X)), compose(eX, T.apply_mor(eX)), [i])
    for i, j in itertools.product(range(len(probes)), repeat=2):
        X, Y = probes[i], probes[j]
        ck.eq("aug.T2", compose(tensor_mor(e(X), e(Y)), T.T2(X, Y)), e(T.tensor(X, Y)), [i, j])
    ck.eq("aug.T0", T.T0, e(one), [])
    ck.flush()
    return report


def counit_augmentation(T: MonadInstance):
    """e_X = id (x) eps for a free-module monad ? (x) H."""
    H = T.extra.get("hopf")
    if H is None:
        raise ValueError("counit augmentations exist for free-module monads only")
    return lambda X: tensor_mor(identity(X.carrier), H.eps)


def braiding_compatibility(T: MonadInstance, e, probes, report: Report | None = None, prefix: str = "") -> Report:
    """(e_X (x) T1) T_2(X, 1) = (e_X (x) T1) tau_{T1, TX} T_2(1, X) for a monad on B_n."""
    from .grcat import braiding

    report = report if report is not None else Report({"n": T.n, "check": "augmentation_braiding", "monad": T.name})
    ck = _Checker(report, prefix)
    one = T.unit_object()
    T1 = T.apply_obj(one).carrier
    for i, X in enumerate(_on_base(T, probes)):
        TX = T.apply_obj(X).carrier
        head = tensor_mor(e(X), identity(T1))
        lhs = compose(head, T.T2(X, one))
        rhs = compose(head, compose(braiding(T1, TX), T.T2(one, X)))
        ck.eq("aug.braiding_compatible", lhs, rhs, [i])
    ck.flush()
    return report


class _Poly(dict):
    """Polynomial of degree <= 2: monomial (sorted tuple of variables) -> Cyc."""

    def add(self, mono, v):
        w = self.get(mono)
        w = v if w is None else w + v
        if w.is_zero():
            self.pop(mono, None)
        else:
            self[mono] = w

    @property
    def degree(self) -> int:
        return max((len(m) for m in self), default=-1)

    def variables(self) -> set:
        return {v for m in self for v in m}

    def substitute(self, subst, n) -> "_Poly":
        """Replace each variable x by an affine form subst[x] = {(): c, (y,): a, ...}."""
        out = _Poly()
        for mono, c in self.items():
            forms = [subst[x] for x in mono]
            acc = {(): c}
            for form in forms:
                nxt: dict = {}
                for m1, a in acc.items():
                    for m2, b in form.items():
                        m = tuple(sorted(m1 + m2))
                        nxt[m] = nxt[m] + a * b if m in nxt else a * b
                acc = nxt
            for m, v in acc.items():
                out.add(m, v)
        return out


def _expand(terms1, terms2, op):
    """Bilinear expansion: sum over term pairs of op(m1, m2), keyed by merged monomial."""
    out: dict = {}
    for mono1, f in terms1:
        for mono2, g in terms2:
            mono = tuple(sorted(mono1 + mono2))
            h = op(f, g)
            out[mono] = out[mono] + h if mono in out else h
    return out


def _polys_of(tag, by_mono: dict, n: int):
    """Entrywise polynomials of a morphism-valued polynomial."""
    entries: dict = {}
    for mono, f in by_mono.items():
        for i, j, v in f.entries():
            entries.setdefault((i, j), _Poly()).add(mono, v)
    return [((tag, ij), p) for ij, p in sorted(entries.items()) if p]


def _sqrt(c):
    """An exact square root of c when c is a rational square, else None."""
    if not c.is_rational():
        return None
    q = c.rational()
    if q < 0:
        return None
    from math import isqrt
    a, b = q.numerator, q.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        from fractions import Fraction
        return type(c).const(c.n, Fraction(ra, rb))
    return None


def augmentation_search(T_or_n, A: HopfData | None = None, cd: CoendData | None = None, probes=None,
                        max_dim: int = 4, dA: MonadInstance | None = None, exhaustive: bool = False) -> dict:
    """Search for augmentations of a Hopf monad (by default d_{A_n}) on the simple center objects.

    Returns a JSON-ready certificate with ``status`` one of ``empty``,
    ``found`` or ``inconclusive``.  With ``exhaustive`` a ``found``
    certificate lists every solution (``solutions``), each verified.
    """
    from .coendmod import build_coend
    from .hopfcore import build_An
    from .linalg import Inconsistent, homogeneous_slots, solve_affine, solve_morphisms

    if isinstance(T_or_n, MonadInstance):
        T = T_or_n
    else:
        n = int(T_or_n)
        if n not in (2, 3):
            raise ValueError("augmentation_search supports n in {2, 3}")
        cd = cd or build_coend(n)
        A = A or build_An(n)
        T = dA or build_dA(A, cd, verify=False)
    n = T.n
    cd = T.coend
    if probes is None:
        probes = center_probes(cd, regular=False)
        if T.extra.get("on") == "B":
            probes = [CenterObject.trivial(cd, GrObject(n, (g,))) for g in range(n)]
    probes = list(probes)
    one_idx = next((i for i, X in enumerate(probes) if _same_object(X, T.unit_object())), None)
    cert: dict = {"monad": T.name, "n": n, "probes": len(probes), "linear": {}}

    # linear stage 1: per probe, C-linearity and the unit law
    families = []
    nvars = 0
    for i, X in enumerate(probes):
        TX = T.apply_obj(X)
        etaX = T.eta(X)
        C = cd.carrier

        def lin(e, TX=TX, X=X):
            return compose(e, TX.action) - compose(X.action, tensor_mor(e, identity(C)))

        def unit_law(e, X=X, etaX=etaX):
            return compose(e, etaX) - identity(X.carrier)

        try:
            fam = solve_morphisms(TX.carrier, X.carrier, [lin, unit_law])
        except Inconsistent:
            cert.update(status="empty", reason={"equation": "aug.linear+aug.eta", "probe": i})
            return cert
        basis = fam.basis()
        terms = [((), fam.member())] + [((nvars + k,), b) for k, b in enumerate(basis)]
        families.append(terms)
        nvars += len(basis)
    cert["linear"]["per_probe_dimension"] = [len(t) - 1 for t in families]

    # index of X (x) Y among the probes
    def index_of(Z):
        for k, P in enumerate(probes):
            if _same_object(P, Z):
                return k
        return None

    polys = []
    for i, X in enumerate(probes):
        TX = T.apply_obj(X)
        muX = T.mu(X)
        lhs = {m: compose(f, muX) for m, f in families[i]}
        rhs = _expand(families[i], families[i], lambda f, g: compose(f, T.apply_mor(g)))
        diff = dict(lhs)
        for m, g in rhs.items():
            diff[m] = diff[m] - g if m in diff else -g
        polys += _polys_of(("aug.mu", (i,)), diff, n)
    for i, j in itertools.product(range(len(probes)), repeat=2):
        k = index_of(T.tensor(probes[i], probes[j]))
        if k is None:
            continue
        t2 = T.T2(probes[i], probes[j])
        diff = _expand(families[i], families[j], lambda f, g: compose(tensor_mor(f, g), t2))
        for m, g in families[k]:
            diff[m] = diff[m] - g if m in diff else -g
        polys += _polys_of(("aug.T2", (i, j)), diff, n)
    if one_idx is not None:
        diff = {(): T.T0}
        for m, g in families[one_idx]:
            diff[m] = diff[m] - g if m in diff else -g
        polys += _polys_of(("aug.T0", ()), diff, n)

    result = _solve_system(polys, list(range(nvars)), n, max_dim, cert, exhaustive=exhaustive)
    values = result.pop("values", None)
    every = result.pop("all_values", None)
    cert.update(result)
    if A is not None and T.extra.get("on") == "Z":
        cert["yd_cross_check"] = _yd_cross_check(A, cd)
    if values is not None:

        def components(vals):
            comps = []
            for terms in families:
                f = terms[0][1]
                for (x,), b in terms[1:]:
                    v = vals[x]
                    if not v.is_zero():
                        f = f + _scale(b, v)
                comps.append(f)
            return comps

        def verify(comps):
            def e(X):
                k = index_of(X)
                if k is None:
                    raise KeyError("augmentation known on the simple probes only")
                return comps[k]

            return check_augmentation(T, e, probes).ok

        comps = components(values)
        cert["components"] = [f.to_json() for f in comps]
        cert["verified"] = verify(comps)
        if exhaustive:
            sols = [components(v) for v in every]
            cert["solutions"] = [{"components": [f.to_json() for f in c], "verified": verify(c)} for c in sols]
    return cert


def _yd_cross_check(A: HopfData, cd: CoendData) -> dict:
    """Which one-dimensional center objects of degree 0 carry a YD structure over A."""
    from .doublemod import trivial_center, yd_solve

    Ac = trivial_center(cd, A.carrier)
    found = {}
    for chi in range(cd.n):
        found[str(chi)] = len(yd_solve(cd, A, Ac, character_module(cd, 0, chi))) > 0
    return {"character_has_yd_structure": found}


def _scale(f: GrMorphism, c: Cyc) -> GrMorphism:
    return GrMorphism(f.src, f.dst, {i: {j: v * c for j, v in row.items()} for i, row in f.rows.items()}, check=False)


def _tag_json(tag):
    (name, probe), entry = tag
    return {"equation": name, "probe": list(probe), "entry": list(entry)}


def _solve_system(polys, params, n, max_dim, cert, depth=0, path=(), orig=None, exhaustive=False):
    """Eliminate linear equations, then split on univariate quadratics.

    ``orig`` maps the original unknowns to affine forms in ``params``; a
    ``found`` result carries their values at params = 0.  With
    ``exhaustive`` every branch is explored and ``all_values`` lists one
    point per consistent branch.
    """
    from .linalg import Inconsistent, solve_affine

    if orig is None:
        orig = {x: _Poly({(x,): Cyc.one(n)}) for x in params}
    while True:
        polys = [(t, p) for t, p in polys if p]
        for t, p in polys:
            if p.degree == 0:
                return {"status": "empty", "violation": {**_tag_json(t), "value": str(p[()])}, "path": list(path)}
        linear = [(t, p) for t, p in polys if p.degree == 1]
        if not linear:
            break
        pos = {x: k for k, x in enumerate(params)}
        eqs = [({pos[m[0]]: v for m, v in p.items() if m}, -p.get((), Cyc.zero(n))) for _, p in linear]
        try:
            sol = solve_affine(eqs, len(params), n)
        except Inconsistent:
            # smallest inconsistent prefix names the equation
            lo, hi = 1, len(eqs)
            while lo < hi:
                mid = (lo + hi) // 2
                try:
                    solve_affine(eqs[:mid], len(params), n)
                    lo = mid + 1
                except Inconsistent:
                    hi = mid
            return {"status": "empty", "violation": _tag_json(linear[lo - 1][0]),
                    "linear_rank_witness": {"equations": lo}, "path": list(path)}
        new = [f"{depth}.{k}" for k in range(sol.dimension)]
        subst = {}
        for k, x in enumerate(params):
            form = {}
            c = sol.particular.get(k)
            if c is not None:
                form[()] = c
            for s, vec in zip(new, sol.kernel):
                v = vec.get(k)
                if v is not None:
                    form[(s,)] = v
            subst[x] = form
        polys = [(t, p.substitute(subst, n)) for t, p in polys]
        orig = {x: f.substitute(subst, n) for x, f in orig.items()}
        params = new
        depth += 1
    dim = len(params)
    if not polys:
        values = {x: f.get((), Cyc.zero(n)) for x, f in orig.items()}
        return {"status": "found", "dimension": dim, "path": list(path), "values": values, "all_values": [values]}
    if dim > max_dim:
        return {"status": "inconclusive", "dimension": dim, "path": list(path),
                "reason": f"quadratic stage over a {dim}-dimensional family exceeds the budget {max_dim}"}
    for t, p in polys:
        vs = p.variables()
        if len(vs) != 1:
            continue
        (x,) = vs
        a, b, c = p.get((x, x)), p.get((x,), Cyc.zero(n)), p.get((), Cyc.zero(n))
        if a is None:
            continue
        disc = b * b - Cyc.const(n, 4) * a * c
        r = _sqrt(disc)
        if r is None:
            continue
        roots = []
        for sgn in (1, -1):
            root = (-b + Cyc.const(n, sgn) * r) / (Cyc.const(n, 2) * a)
            if root not in roots:
                roots.append(root)
        branches = []
        for root in roots:
            sub = {y: {(y,): Cyc.one(n)} for y in params}
            sub[x] = {(): root} if not root.is_zero() else {}
            rest = [(tt, pp.substitute(sub, n)) for tt, pp in polys]
            res = _solve_system(rest, [y for y in params if y != x], n, max_dim, cert, depth + 1,
                                path + ({"split_on": _tag_json(t), "root": str(root)},),
                                {y: f.substitute(sub, n) for y, f in orig.items()}, exhaustive)
            branches.append(res)
            if res["status"] != "empty" and not exhaustive:
                return res
        live = [b for b in branches if b["status"] != "empty"]
        if not live:
            return {"status": "empty", "branches": branches, "path": list(path)}
        if any(b["status"] == "inconclusive" for b in live):
            return next(b for b in live if b["status"] == "inconclusive")
        first = dict(live[0])
        first["all_values"] = [v for b in live for v in b["all_values"]]
        return first
    return {"status": "inconclusive", "dimension": dim, "path": list(path),
            "reason": "no univariate quadratic with roots in the field to split on"}
