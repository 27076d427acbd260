"""R-matrices, induced braidings, the double D(A) and Yetter-Drinfeld modules.

An R-matrix of a Hopf algebra A in B_n is a morphism r : C (x) C -> A (x) A
out of the coend.  Its axioms are expressed through the natural map

    R_{X,Y} : X (x) Y -> (Y (x) A) (x) (X (x) A)

built from r and the universal coaction, and the monad T = ? (x) A.
Everything is evaluated exactly at simple objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coendmod import CoendData, center_iso, coend_env
from .grcat import GrMorphism, GrObject, compose, identity, left_dual, simple, tensor_many, tensor_mor, unit
from .hopfcore import (
    HopfData,
    ModuleData,
    antipode_solutions,
    check_hopf,
    dsl_definitions,
    hopf_env,
    NotHopfError,
    module_check,
    module_tensor,
)
from .linalg import Inconsistent, is_invertible, mor_inverse, solve_morphisms
from .morphdsl import Env
from .report import Report
from .scalar import Cyc

__all__ = [
    "RMatrixData",
    "rmatrix_env",
    "check_rmatrix",
    "induced_braiding",
    "check_braiding",
    "check_mirror",
    "check_majid_rmatrix",
    "oa_membership",
    "build_double",
    "double_env",
    "straightening",
    "double_consistency",
    "BudgetError",
    "YDModule",
    "trivial_center",
    "yd_check",
    "yd_tensor",
    "yd_braiding",
    "yd_braiding_check",
    "yd_unit",
    "adjoint_yd",
    "yd_solve",
    "yd_search",
    "yd_center_check",
]


@dataclass(frozen=True, eq=False)
class RMatrixData:
    algebra: HopfData
    coend: CoendData
    r: GrMorphism

    def __post_init__(self):
        A, C = self.algebra.carrier, self.coend.carrier
        if self.r.src != C @ C or self.r.dst != A @ A:
            raise ValueError("an R-matrix is a morphism C (x) C -> A (x) A")

    def with_r(self, r: GrMorphism) -> "RMatrixData":
        return RMatrixData(self.algebra, self.coend, r)


def rmatrix_env(rd: RMatrixData) -> Env:
    env = coend_env(rd.coend)
    env = hopf_env(rd.algebra, env=env)
    return env.extend(generators={"rmat": rd.r}, definitions=dsl_definitions("rmatrix.dsl"))


def _simples(n: int, limit=None):
    return [simple(n, g) for g in range(n if limit is None else min(n, limit))]


def check_rmatrix(rd: RMatrixData, report: Report | None = None, prefix: str = "", degrees=None) -> Report:
    """The multiplicative axioms at all (pairs, triples of) simples, then the unit rows."""
    n = rd.algebra.n
    report = report if report is not None else Report({"n": n, "check": "rmatrix", "algebra": rd.algebra.name})
    env = rmatrix_env(rd)
    degs = list(range(n)) if degrees is None else list(degrees)
    K = {g: simple(n, g) for g in degs}

    def run(key, name, combos):
        key = prefix + key
        with report.timed(key):
            for combo in combos:
                e = env.extend(objects={nm: K[g] for nm, g in zip(("X1", "Y", "Z"), combo)})
                args = ", ".join(("X1", "Y", "Z")[: len(combo)])
                try:
                    lhs = e(f"{name}_L[{args}]")
                    rhs = e(f"{name}_R[{args}]")
                except Exception as err:
                    report.record(key, False, {"error": f"{type(err).__name__}: {err}", "degrees": list(combo)})
                    return
                d = lhs.first_difference(rhs)
                if d is not None:
                    ce = {"degrees": list(combo), "row": d[0], "col": d[1], "lhs": str(d[2]), "rhs": str(d[3])}
                    report.record(key, False, ce)
                    return
            report.record(key, True)

    run("rmatrix.mult", "rm_mult", list(itertools.product(degs, repeat=2)))
    run("rmatrix.first", "rm_first", list(itertools.product(degs, repeat=3)))
    run("rmatrix.second", "rm_second", list(itertools.product(degs, repeat=3)))
    for side in ("left", "right"):
        key = f"{prefix}rmatrix.unit_{side}"
        report.compare(key, env(f"rm_unit_{side}_L"), env(f"rm_unit_{side}_R"))
    return report


def _module_pair_env(env: Env, M: ModuleData, N: ModuleData) -> Env:
    return env.extend(objects={"M": M.carrier, "N": N.carrier}, generators={"r": M.action, "s": N.action})


def induced_braiding(rd: RMatrixData, M: ModuleData, N: ModuleData, side: str = "right") -> GrMorphism:
    """The braiding M (x) N -> N (x) M of two right (or left) modules."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    for X in (M, N):
        if X.algebra is not rd.algebra:
            raise ValueError("module over a different algebra")
        if X.side != side:
            raise ValueError(f"expected {side} modules")
    env = _module_pair_env(rmatrix_env(rd), M, N)
    return env("cr" if side == "right" else "cl")


def check_braiding(rd: RMatrixData, modules, side: str = "right", report: Report | None = None,
                   prefix: str = "", morphisms=()) -> Report:
    """Invertibility, linearity and both hexagons of the induced braiding on a probe set.

    ``morphisms`` is a list of (f, M, M') with f : M -> M' a module map, used
    for naturality against every probe.
    """
    report = report if report is not None else Report({"n": rd.algebra.n, "check": "braiding", "side": side})
    c = lambda X, Y: induced_braiding(rd, X, Y, side)

    def first_fail(key, pairs):
        for lhs, rhs, where in pairs:
            d = lhs.first_difference(rhs)
            if d is not None:
                report.record(prefix + key, False,
                              {"where": where, "row": d[0], "col": d[1], "lhs": str(d[2]), "rhs": str(d[3])})
                return
        report.record(prefix + key, True)

    idx = range(len(modules))
    report.record(prefix + "braiding.invertible", all(is_invertible(c(modules[i], modules[j])) for i in idx for j in idx))

    def linear(i, j):
        M, N = modules[i], modules[j]
        MN, NM = module_tensor(M, N), module_tensor(N, M)
        cc = c(M, N)
        A = rd.algebra.carrier
        if side == "right":
            return compose(NM.action, tensor_mor(cc, identity(A))), compose(cc, MN.action), (i, j)
        return compose(NM.action, tensor_mor(identity(A), cc)), compose(cc, MN.action), (i, j)

    first_fail("braiding.linear", [linear(i, j) for i in idx for j in idx])

    def hexagons(i, j, k):
        M, N, P = modules[i], modules[j], modules[k]
        iM, iN, iP = (identity(X.carrier) for X in (M, N, P))
        h1 = (c(M, module_tensor(N, P)),
              compose(tensor_mor(iN, c(M, P)), tensor_mor(c(M, N), iP)), (i, j, k))
        h2 = (c(module_tensor(M, N), P),
              compose(tensor_mor(c(M, P), iN), tensor_mor(iM, c(N, P))), (i, j, k))
        return h1, h2

    hx = [hexagons(i, j, k) for i in idx for j in idx for k in idx]
    first_fail("braiding.hexagon_left", [h[0] for h in hx])
    first_fail("braiding.hexagon_right", [h[1] for h in hx])

    nat = []
    for f, M, M2 in morphisms:
        for j in idx:
            N = modules[j]
            iN = identity(N.carrier)
            nat.append((compose(c(M2, N), tensor_mor(f, iN)), compose(tensor_mor(iN, f), c(M, N)), ("first", j)))
            nat.append((compose(c(N, M2), tensor_mor(iN, f)), compose(tensor_mor(f, iN), c(N, M)), ("second", j)))
    if morphisms:
        first_fail("braiding.natural", nat)
    return report


def check_mirror(rd: RMatrixData, left_modules, report: Report | None = None, prefix: str = "") -> Report:
    """c'_{M,N} = tau_{M,N} c_{F_A N, F_A M} tau^{-1}_{N,M} for left modules M, N.

    The left side is the braiding of left modules read off the R-matrix; the
    right side goes through the functor F_A to right modules.
    """
    from .grcat import braiding, braiding_inv
    from .hopfcore import fa_functor

    report = report if report is not None else Report({"n": rd.algebra.n, "check": "mirror"})
    ok, ce = True, None
    for i, M in enumerate(left_modules):
        for j, N in enumerate(left_modules):
            lhs = induced_braiding(rd, M, N, "left")
            mid = induced_braiding(rd, fa_functor(N), fa_functor(M), "right")
            rhs = compose(braiding(M.carrier, N.carrier), compose(mid, braiding_inv(M.carrier, N.carrier)))
            d = lhs.first_difference(rhs)
            if d is not None:
                ok, ce = False, {"where": [i, j], "row": d[0], "col": d[1], "lhs": str(d[2]), "rhs": str(d[3])}
                break
        if not ok:
            break
    report.record(prefix + "braiding.mirror", ok, ce)
    return report


# ---------------------------------------------------------------------------
# Majid's R-matrices and the subcategory O_A

def _majid_env(A: HopfData, rr: GrMorphism) -> Env:
    return hopf_env(A).extend(generators={"rr": rr}, definitions=dsl_definitions("rmatrix.dsl"))


def check_majid_rmatrix(A: HopfData, rr: GrMorphism, report: Report | None = None, prefix: str = "") -> Report:
    one = unit(A.n)
    if rr.src != one or rr.dst != A.carrier @ A.carrier:
        raise ValueError("a Majid R-matrix is a morphism 1 -> A (x) A")
    report = report if report is not None else Report({"n": A.n, "check": "majid", "algebra": A.name})
    env = _majid_env(A, rr)
    for name in ("delta_left", "delta_right", "qt", "unit_left", "unit_right"):
        key = f"{prefix}majid.{name}"
        try:
            report.compare(key, env(f"majid_{name}_L"), env(f"majid_{name}_R"))
        except Exception as err:
            report.record(key, False, {"error": f"{type(err).__name__}: {err}"})
    # convolution inverse, solved directly: m_{A(x)A} (rr (x) X) = u (x) u = m_{A(x)A} (X (x) rr)
    uu = tensor_mor(A.u, A.u)
    conv = "(m * m) . (id[A] * br[A, A] * id[A])"
    res = [
        lambda X: env.extend(generators={"X": X})(f"{conv} . (rr * X)") - uu,
        lambda X: env.extend(generators={"X": X})(f"{conv} . (X * rr)") - uu,
    ]
    key = f"{prefix}majid.conv_invertible"
    try:
        fam = solve_morphisms(one, A.carrier @ A.carrier, res)
        report.record(key, True, detail={"solution_dimension": fam.dimension})
    except Inconsistent:
        report.record(key, False, {"reason": "no convolution inverse"})
    return report


def oa_membership(M: ModuleData) -> bool:
    """Whether the right module (M, r) satisfies r tau_{A,M} tau_{M,A} = r."""
    if M.side != "right":
        raise ValueError("O_A consists of right modules")
    env = hopf_env(M.algebra).extend(objects={"M": M.carrier}, generators={"r": M.action},
                                     definitions=dsl_definitions("rmatrix.dsl"))
    return env("oa_L") == env("oa_R")


# ---------------------------------------------------------------------------
# the double D(A) = A (x) ^A (x) C
#
# Right D(A)-modules are objects of the center of right A-modules: a right
# A-action, a left A-coaction m -> m_{-1} (x) m_0 and a right C-action (the
# half braiding relative to B_n).  The coaction is read as the ^A-action
# m.f = q^{|m_0||f|} f(m_{-1}) m_0, braiding f past m_0; this twists the
# product of ^A by q^{-|f||f'|}.  Without the factor the straightening
# relations are not natural in M once n > 2.
# The structure of D(A) is read off its regular module V, which has
# the PBW basis f^i c_g a_k; the coaction on V is produced from the
# Yetter-Drinfeld compatibility by recursion along a filtered basis of A.


class _Vec(dict):
    """Sparse vector: basis key -> Cyc."""

    def add(self, key, coef):
        if not coef:
            return
        cur = self.get(key)
        val = coef if cur is None else cur + coef
        if val:
            self[key] = val
        else:
            self.pop(key, None)

    def axpy(self, coef, other):
        for k, v in other.items():
            self.add(k, coef * v)
        return self


class _Double:
    def __init__(self, A: HopfData, cd: CoendData):
        self.A, self.cd = A, cd
        self.n = n = A.n
        self.d = d = A.dim
        self.adeg = A.carrier.degs
        self.q = [Cyc.root_power(n, e) for e in range(n)]
        self._validate_basis()
        self.mult = {}
        for row, col, c in A.m.entries():
            self.mult.setdefault(divmod(col, d), []).append((row, c))
        self.comult = {}
        for row, col, c in A.cp.entries():
            self.comult.setdefault(col, []).append((divmod(row, d), c))
        self.delta0 = {}
        self.delta = {}

    def qp(self, e):
        return self.q[e % self.n]

    def _validate_basis(self):
        A, d = self.A, self.d
        one = Cyc.one(self.n)
        if A.u.column(0) != {0: one}:
            raise ValueError("the double needs the unit of A to be the first basis vector")
        if any(A.eps.entry(0, k) != (one if k == 0 else Cyc.zero(self.n)) for k in range(d)):
            raise ValueError("the double needs the counit to be dual to the first basis vector")
        for k in range(d):
            col = {divmod(r, d): c for r, c in A.cp.column(k).items()}
            if col.get((k, 0)) != one:
                raise ValueError("coproduct is not of the form a (x) 1 + ...")
            if any(j > k for (j, _l) in col):
                raise ValueError("basis of A is not filtered by the coproduct")

    # V has keys (i, g, k) for f^i c_g a_k, of degree |a_k| - |a_i|
    def vdeg(self, key):
        i, _g, k = key
        return (self.adeg[k] - self.adeg[i]) % self.n

    def act_A(self, v, b):
        out = _Vec()
        for (i, g, k), c in v.items():
            for p, s in self.mult.get((k, b), ()):
                out.add((i, g, p), c * s)
        return out

    def act_C(self, v, h):
        out = _Vec()
        for (i, g, k), c in v.items():
            out.add((i, (g + h) % self.n, k), c * self.qp(-2 * h * self.adeg[k]))
        return out

    def coact_basis(self, key):
        """delta(f^i c_g a_k) as a dict (j, vkey) -> coefficient."""
        if key in self.delta:
            return self.delta[key]
        i, g, k = key
        if k == 0:
            out = _Vec()
            ai = self.adeg[i]
            for j in range(self.d):
                aj = self.adeg[j]
                s = self.qp(-2 * g * aj + ((-ai - aj) * aj - ai * aj))
                for l in range(self.d):
                    for (a, b), c in self.comult.get(l, ()):
                        if a == i and b == j:
                            out.add((j, (l, g, 0)), s * c)
            self.delta[key] = out
            return out
        m = (i, g, 0)
        dm = self.coact_basis(m)
        mdeg = self.vdeg(m)
        out = _Vec()
        # right side: sum q^{|m_0||b_1|} m_{-1} b_1 (x) m_0 b_2
        for (j1, j2), c in self.comult.get(k, ()):
            for (a, m0), cm in dm.items():
                s = c * cm * self.qp(self.vdeg(m0) * self.adeg[j1])
                prods = self.mult.get((a, j1), ())
                if not prods:
                    continue
                m0b = self.act_A(_Vec({m0: Cyc.one(self.n)}), j2)
                for p, cp_ in prods:
                    for vk, cv in m0b.items():
                        out.add((p, vk), s * cp_ * cv)
        # subtract the terms of the left side other than b_1 = b, b_2 = 1
        for (j1, j2), c in self.comult.get(k, ()):
            if j1 == k and j2 == 0:
                continue
            mb1 = (i, g, j1)
            b2 = self.adeg[j2]
            for (a, w), cw in self.coact_basis(mb1).items():
                s = c * cw * self.qp(-2 * b2 * self.adeg[a] + (mdeg + self.adeg[j1]) * b2)
                wc = self.act_C(_Vec({w: Cyc.one(self.n)}), b2)
                for p, cp_ in self.mult.get((j2, a), ()):
                    for vk, cv in wc.items():
                        out.add((p, vk), -s * cp_ * cv)
        self.delta[key] = out
        return out

    def coact(self, v):
        out = _Vec()
        for key, c in v.items():
            out.axpy(c, self.coact_basis(key))
        return out

    def act_F(self, v, j):
        out = _Vec()
        for (a, w), c in self.coact(v).items():
            if a == j:
                out.add(w, c * self.qp(-self.vdeg(w) * self.adeg[j]))
        return out

    # -- tensor square of V, for the coproduct
    def act2_A(self, w, b):
        out = _Vec()
        for (j1, j2), c in self.comult.get(b, ()):
            for (x, y), cw in w.items():
                s = c * cw * self.qp(self.vdeg(y) * self.adeg[j1])
                xa = self.act_A(_Vec({x: Cyc.one(self.n)}), j1)
                ya = self.act_A(_Vec({y: Cyc.one(self.n)}), j2)
                for kx, cx in xa.items():
                    for ky, cy in ya.items():
                        out.add((kx, ky), s * cx * cy)
        return out

    def act2_C(self, w, h):
        out = _Vec()
        for (x, y), cw in w.items():
            for kx, cx in self.act_C(_Vec({x: Cyc.one(self.n)}), h).items():
                for ky, cy in self.act_C(_Vec({y: Cyc.one(self.n)}), h).items():
                    out.add((kx, ky), cw * cx * cy)
        return out

    def act2_F(self, w, j):
        # coaction of x (x) y: q^{|x||y_-1|} q^{-2|y_-1||x_-1|} y_-1 x_-1 (x) x_0 <| |y_-1| (x) y_0
        out = _Vec()
        for (x, y), cw in w.items():
            for (ay, y0), cy in self.coact_basis(y).items():
                dy = self.adeg[ay]
                for (ax, x0), cx in self.coact_basis(x).items():
                    hit = [c for p, c in self.mult.get((ay, ax), ()) if p == j]
                    if not hit:
                        continue
                    s = cw * cy * cx * hit[0] * self.qp(self.vdeg(x) * dy - 2 * dy * self.adeg[ax])
                    s = s * self.qp(-(self.vdeg(x0) + self.vdeg(y0)) * self.adeg[j])
                    for kx, cc in self.act_C(_Vec({x0: Cyc.one(self.n)}), dy).items():
                        out.add((kx, y0), s * cc)
        return out

    # -- assembly
    def objects(self):
        A = self.A.carrier
        Ad = left_dual(A)[0]
        C = self.cd.carrier
        return A @ Ad @ C, Ad @ C @ A

    def dkey(self, idx):
        rest, g = divmod(idx, self.n)
        k, i = divmod(rest, self.d)
        return k, i, g

    def didx(self, k, i, g):
        return (k * self.d + i) * self.n + g

    def vidx(self, key):
        i, g, k = key
        return (i * self.n + g) * self.d + k

    def word(self, v, dk, act=None):
        k, i, g = dk
        if act is None:
            return self.act_C(self.act_F(self.act_A(v, k), i), g)
        a, f, c = act
        return c(f(a(v, k), i), g)

    def build(self):
        n = self.n
        D, V = self.objects()
        one = Cyc.one(n)
        v1 = _Vec({(0, 0, 0): one})
        cols = {}
        for x in range(D.dim):
            cols[x] = self.word(v1, self.dkey(x))
        P = GrMorphism.from_entries(D, V, [(self.vidx(k), x, c) for x, v in cols.items() for k, c in v.items()])
        Pinv = mor_inverse(P)
        pinv_cols = {j: Pinv.column(j) for j in range(V.dim)}

        def back(v):
            out = {}
            for key, c in v.items():
                for r, s in pinv_cols[self.vidx(key)].items():
                    out[r] = out.get(r, Cyc.zero(n)) + c * s
            return {r: c for r, c in out.items() if c}

        entries = []
        for x in range(D.dim):
            for y in range(D.dim):
                for r, c in back(self.word(cols[x], self.dkey(y))).items():
                    entries.append((r, x * D.dim + y, c))
        m = GrMorphism.from_entries(D @ D, D, entries)

        w1 = _Vec({((0, 0, 0), (0, 0, 0)): one})
        entries = []
        for y in range(D.dim):
            w = self.word(w1, self.dkey(y), (self.act2_A, self.act2_F, self.act2_C))
            acc = {}
            for (kx, ky), c in w.items():
                for r1, s1 in pinv_cols[self.vidx(kx)].items():
                    for r2, s2 in pinv_cols[self.vidx(ky)].items():
                        idx = r1 * D.dim + r2
                        acc[idx] = acc.get(idx, Cyc.zero(n)) + c * s1 * s2
            entries.extend((r, y, c) for r, c in acc.items() if c)
        cp = GrMorphism.from_entries(D, D @ D, entries)

        u = GrMorphism.from_entries(unit(n), D, [(self.didx(0, 0, 0), 0, one)])
        eps = GrMorphism.from_entries(D, unit(n), [(0, self.didx(0, 0, g), one) for g in range(n)])
        return D, m, u, cp, eps, P

    def rmat(self, D):
        n, d = self.n, self.d
        C = self.cd.carrier
        entries = []
        for g in range(n):
            for h in range(n):
                for i in range(d):
                    s = self.qp(-self.adeg[i] ** 2 - 2 * h * self.adeg[i])
                    row = self.didx(i, 0, 0) * D.dim + self.didx(0, i, h)
                    entries.append((row, g * n + h, s))
        return GrMorphism.from_entries(C @ C, D @ D, entries)


def double_env(A: HopfData, cd: CoendData, straighten: GrMorphism | None = None, dsl_dir=None) -> Env:
    """Environment of double.dsl: A's and C's structure, D, and the rewriting map."""
    Dobj = A.carrier @ left_dual(A.carrier)[0] @ cd.carrier
    env = hopf_env(A, env=coend_env(cd))
    gens = {} if straighten is None else {"straighten": straighten}
    return env.extend(objects={"D": Dobj}, generators=gens, definitions=dsl_definitions("double.dsl", dsl_dir))


def straightening(A: HopfData, cd: CoendData) -> GrMorphism:
    """f (x) a -> f a rewritten in the basis a' f' c', from the regular module of D(A)."""
    b = _Double(A, cd)
    _D, m, *_rest = b.build()
    env = double_env(A, cd)
    return compose(m, tensor_mor(env("iAd"), env("iA")))


def build_double(A: HopfData, cd: CoendData, verify: bool = True, dsl_dir=None):
    """D(A) as a Hopf algebra on A (x) ^A (x) C, together with its R-matrix.

    The structure morphisms are evaluated from double.dsl.
    """
    if A.n != cd.n:
        raise ValueError("algebra and coend over different n")
    if verify:
        pre = check_hopf(A)
        if not pre.ok:
            raise ValueError(f"A is not a Hopf algebra: {[r.key for r in pre.failures()]}")
    env = double_env(A, cd, straightening(A, cd), dsl_dir)
    m, u, cp, eps = env("mD"), env("uD"), env("cpD"), env("epsD")
    Hl = env("HlD")
    if not is_invertible(Hl):
        raise NotHopfError("the left fusion operator of the double is singular")
    S = env.extend(generators={"HlinvD": mor_inverse(Hl)})("SD")
    H = HopfData(env.objects["D"], m, u, cp, eps, S, mor_inverse(S), name=f"D({A.name})")
    return H, RMatrixData(H, cd, env("rmatD"))


def double_consistency(A: HopfData, cd: CoendData, H: HopfData | None = None, report: Report | None = None) -> Report:
    """Compare the DSL structure of D(A) with the regular-module reconstruction."""
    report = report if report is not None else Report({"n": A.n, "check": "double", "algebra": A.name})
    if H is None:
        H, _ = build_double(A, cd, verify=False)
    b = _Double(A, cd)
    _D, m, u, cp, eps, _P = b.build()
    for key, lhs, rhs in (("m", H.m, m), ("u", H.u, u), ("cp", H.cp, cp), ("eps", H.eps, eps)):
        report.compare(f"double.{key}_matches_module", lhs, rhs)
    sols = antipode_solutions(H.with_(S=None, Sinv=None))
    report.record("double.antipode_unique", sols.dimension == 0, detail={"dimension": sols.dimension})
    report.compare("double.antipode_matches", H.S, sols.member())
    return report


# ---------------------------------------------------------------------------
# Yetter-Drinfeld modules over a Hopf algebra in the center
#
# Objects of Z(B_n) are right C-modules (see coendmod.center_iso); a Hopf
# algebra in Z(B_n) is a HopfData together with such a module structure on
# its carrier, whose structure maps must be C-linear.


class BudgetError(ValueError):
    """The candidate family is too large to enumerate."""


@dataclass(frozen=True, eq=False)
class YDModule:
    algebra: HopfData
    algebra_center: ModuleData
    center: ModuleData
    action: GrMorphism
    coaction: GrMorphism

    def __post_init__(self):
        A, M = self.algebra.carrier, self.center.carrier
        if self.action.src != A @ M or self.action.dst != M:
            raise ValueError("action must be A (x) M -> M")
        if self.coaction.src != M or self.coaction.dst != A @ M:
            raise ValueError("coaction must be M -> A (x) M")
        if self.algebra_center.carrier != A:
            raise ValueError("center structure of A lives on another object")

    @property
    def carrier(self) -> GrObject:
        return self.center.carrier

    @property
    def coend(self) -> HopfData:
        return self.center.algebra


def trivial_center(cd: CoendData, X: GrObject) -> ModuleData:
    """X with C acting through the counit: the half braiding is tau_{X,-}."""
    return ModuleData(cd.hopf, X, tensor_mor(identity(X), cd.hopf.eps), "right")


def _yd_env(cd: CoendData, Y: YDModule, N: YDModule | None = None, Nmod: ModuleData | None = None) -> Env:
    A = Y.algebra
    Ac = Y.algebra_center
    M = Y.center
    gens = {
        "r": Y.action,
        "dl": Y.coaction,
        "cAA": center_iso(cd, Ac, A.carrier),
        "cAM": center_iso(cd, Ac, M.carrier),
        "cMA": center_iso(cd, M, A.carrier),
    }
    objs = {"M": M.carrier}
    if N is not None:
        gens.update({"s": N.action, "dn": N.coaction, "cMN": center_iso(cd, M, N.carrier)})
        objs["N"] = N.carrier
    if Nmod is not None:
        gens.update({"s": Nmod.action, "cMN": center_iso(cd, M, Nmod.carrier)})
        objs["N"] = Nmod.carrier
    return hopf_env(A).extend(objects=objs, generators=gens, definitions=dsl_definitions("yd.dsl"))


def _c_linear(cd: CoendData, f: GrMorphism, src: ModuleData, dst: ModuleData) -> bool:
    """f : src -> dst commutes with the C-actions."""
    lhs = compose(f, src.action)
    rhs = compose(dst.action, tensor_mor(f, identity(cd.carrier)))
    return lhs == rhs


def center_tensor(cd: CoendData, M: ModuleData, N: ModuleData) -> ModuleData:
    return module_tensor(M, N)


def yd_check(cd: CoendData, Y: YDModule, report: Report | None = None, prefix: str = "") -> Report:
    report = report if report is not None else Report({"n": cd.n, "check": "yd"})
    env = _yd_env(cd, Y)
    for name in ("assoc", "unit", "coassoc", "counit", "compat"):
        key = f"{prefix}yd.{name}"
        report.compare(key, env(f"yd_{name}_L"), env(f"yd_{name}_R"))
    AM = center_tensor(cd, Y.algebra_center, Y.center)
    report.record(prefix + "yd.action_central", _c_linear(cd, Y.action, AM, Y.center))
    report.record(prefix + "yd.coaction_central", _c_linear(cd, Y.coaction, Y.center, AM))
    return report


def yd_tensor(cd: CoendData, Y: YDModule, Z: YDModule) -> YDModule:
    if Y.algebra is not Z.algebra:
        raise ValueError("YD modules over different algebras")
    env = _yd_env(cd, Y, Z)
    return YDModule(Y.algebra, Y.algebra_center, center_tensor(cd, Y.center, Z.center),
                    env("yd_tensor_action"), env("yd_tensor_coaction"))


def yd_braiding(cd: CoendData, Y: YDModule, Z: YDModule) -> GrMorphism:
    return _yd_env(cd, Y, Z)("yd_braid")


def yd_unit(cd: CoendData, A: HopfData, Ac: ModuleData) -> YDModule:
    one = unit(A.n)
    return YDModule(A, Ac, trivial_center(cd, one), A.eps, A.u)


def adjoint_yd(cd: CoendData, A: HopfData, Ac: ModuleData | None = None) -> YDModule:
    """A with the braided adjoint action a_1 b S(a_2) and the regular coaction."""
    Ac = Ac if Ac is not None else trivial_center(cd, A.carrier)
    ad = hopf_env(A)("m . (m * S) . (id[A] * br[A, A]) . (cp * id[A])")
    return YDModule(A, Ac, Ac, ad, A.cp)


def yd_braiding_check(cd: CoendData, Y: YDModule, Z: YDModule, report: Report | None = None, prefix: str = "") -> Report:
    """Invertibility, A-linearity and A-colinearity of the braiding Y (x) Z -> Z (x) Y."""
    report = report if report is not None else Report({"n": cd.n, "check": "yd_braiding"})
    c = yd_braiding(cd, Y, Z)
    YZ, ZY = yd_tensor(cd, Y, Z), yd_tensor(cd, Z, Y)
    iA = identity(Y.algebra.carrier)
    report.record(prefix + "yd_braiding.invertible", is_invertible(c))
    report.compare(prefix + "yd_braiding.linear", compose(c, YZ.action), compose(ZY.action, tensor_mor(iA, c)))
    report.compare(prefix + "yd_braiding.colinear", compose(ZY.coaction, c), compose(tensor_mor(iA, c), YZ.coaction))
    return report


def _yd_candidates(cd: CoendData, A: HopfData, Ac: ModuleData, X: ModuleData, budget: int = 0):
    """The linear stage of the YD search: ``(candidate or None, certificate)``."""
    Xo = X.carrier
    Ao = A.carrier
    AX = center_tensor(cd, Ac, X)
    iC = identity(cd.carrier)

    def act_res():
        return [
            lambda R: compose(R, tensor_mor(A.u, identity(Xo))) - identity(Xo),
            lambda R: compose(R, AX.action) - compose(X.action, tensor_mor(R, iC)),
        ]

    def coact_res():
        return [
            lambda D: compose(tensor_mor(A.eps, identity(Xo)), D) - identity(Xo),
            lambda D: compose(D, X.action) - compose(AX.action, tensor_mor(D, iC)),
        ]

    cert: dict = {"carrier": Xo.to_json()}
    fams = {}
    for name, src, dst, res in (("action", Ao @ Xo, Xo, act_res()), ("coaction", Xo, Ao @ Xo, coact_res())):
        try:
            fams[name] = solve_morphisms(src, dst, res)
        except Inconsistent as err:
            row = err.witness or {}
            cert.update(status="empty", stage="linear", system=name,
                        witness={str(k): str(v) for k, v in sorted(row.items())})
            return None, cert
    fr, fd = fams["action"], fams["coaction"]
    cert["family_dimension"] = {"action": fr.dimension, "coaction": fd.dimension}
    cert["rank"] = {"action": fr.rank, "coaction": fd.rank}
    if fr.dimension + fd.dimension > budget:
        raise BudgetError(f"candidate family of dimension {fr.dimension + fd.dimension} exceeds the budget {budget}")
    if fr.dimension or fd.dimension:
        raise BudgetError("positive-dimensional families are not enumerated")
    return YDModule(A, Ac, X, fr.member(), fd.member()), cert


def yd_search(cd: CoendData, A: HopfData, Ac: ModuleData, X: ModuleData, budget: int = 0) -> dict:
    """Certificate for the YD structures on X: either a linear witness, a failed axiom, or the solution."""
    Y, cert = _yd_candidates(cd, A, Ac, X, budget)
    if Y is None:
        cert["solutions"] = 0
        return cert
    rep = yd_check(cd, Y)
    if rep.ok:
        cert.update(status="found", solutions=1, action=Y.action.to_json(), coaction=Y.coaction.to_json())
    else:
        bad = rep.failures()[0]
        cert.update(status="empty", stage="quadratic", solutions=0,
                    violation={"key": bad.key, "counterexample": bad.counterexample})
    return cert


def yd_solve(cd: CoendData, A: HopfData, Ac: ModuleData, X: ModuleData, budget: int = 0) -> list[YDModule]:
    """All YD structures (r, delta) on the center object X.

    The unit, counit and centrality constraints are linear and are solved
    exactly; homogeneity already forces most entries to vanish.  When the
    remaining families are points, the single candidate is checked against
    the quadratic axioms.  Larger families exceed the enumeration budget.
    """
    Y, _cert = _yd_candidates(cd, A, Ac, X, budget)
    if Y is None:
        return []
    return [Y] if yd_check(cd, Y).ok else []


def _lmod_tensor(cd: CoendData, A: HopfData, Ac: ModuleData, M: ModuleData, N: ModuleData) -> ModuleData:
    """Left A-modules in B_n tensored through the half braiding of A."""
    env = hopf_env(A).extend(
        objects={"M": M.carrier, "N": N.carrier},
        generators={"r": M.action, "s": N.action, "cAM": center_iso(cd, Ac, M.carrier)},
        definitions=dsl_definitions("yd.dsl"),
    )
    return ModuleData(A, M.carrier @ N.carrier, env("yd_tensor_action"), "left")


def yd_center_check(cd: CoendData, Y: YDModule, modules, report: Report | None = None, prefix: str = "") -> Report:
    """The half braiding gamma_N = (s (x) id)(id (x) sigma_N)(delta (x) id) on left A-modules N.

    Checks invertibility, A-linearity and multiplicativity on the probe
    modules, and that delta and sigma are recovered from gamma on A and on
    the free modules A (x) X.
    """
    report = report if report is not None else Report({"n": cd.n, "check": "yd_center"})
    A, Ac = Y.algebra, Y.algebra_center
    Ymod = ModuleData(A, Y.carrier, Y.action, "left")
    iA = identity(A.carrier)

    def gamma(N):
        return _yd_env(cd, Y, Nmod=N)("yd_braid")

    report.record(prefix + "yd_center.invertible", all(is_invertible(gamma(N)) for N in modules))
    lin_ok = all(
        compose(gamma(N), _lmod_tensor(cd, A, Ac, Ymod, N).action)
        == compose(_lmod_tensor(cd, A, Ac, N, Ymod).action, tensor_mor(iA, gamma(N)))
        for N in modules
    )
    report.record(prefix + "yd_center.linear", lin_ok)
    mult_ok = True
    for N in modules:
        for N2 in modules:
            lhs = gamma(_lmod_tensor(cd, A, Ac, N, N2))
            rhs = compose(tensor_mor(identity(N.carrier), gamma(N2)), tensor_mor(gamma(N), identity(N2.carrier)))
            mult_ok = mult_ok and lhs == rhs
    report.record(prefix + "yd_center.multiplicative", mult_ok)

    M = Y.carrier
    reg = ModuleData(A, A.carrier, A.m, "left")
    rec_delta = compose(gamma(reg), tensor_mor(identity(M), A.u))
    report.compare(prefix + "yd_center.recovers_coaction", rec_delta, Y.coaction)
    sig_ok = True
    for g in range(cd.n):
        X = simple(cd.n, g)
        free = ModuleData(A, A.carrier @ X, tensor_mor(A.m, identity(X)), "left")
        rec = compose(tensor_many(A.eps, identity(X), identity(M)),
                      compose(gamma(free), tensor_many(identity(M), A.u, identity(X))))
        sig_ok = sig_ok and rec == center_iso(cd, Y.center, X)
    report.record(prefix + "yd_center.recovers_half_braiding", sig_ok)
    return report
