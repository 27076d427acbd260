"""The coend of B_n, the double D(A_2) and its braided module category.

Run:  python3 demos/double_and_center.py
"""

from braidbench.coendmod import build_coend, character_module, check_pairing
from braidbench.doublemod import (
    build_double,
    check_braiding,
    check_mirror,
    check_rmatrix,
    trivial_center,
    yd_search,
)
from braidbench.grcat import simple
from braidbench.hopfcore import build_An, check_hopf, free_module, regular_module, trivial_module


def coend_table() -> None:
    for n in (1, 2, 3, 4):
        rep = check_pairing(build_coend(n))
        print(f"  n={n}: pairing axioms {rep.status}, omega = eps (x) eps: {rep.extra['omega_is_eps_eps']}")


def main() -> None:
    print("coend C of B_n")
    coend_table()

    cd, A = build_coend(2), build_An(2)
    H, rd = build_double(A, cd)
    print(f"\nD(A_2): dimension {H.dim}, Hopf {check_hopf(H).status}, R-matrix {check_rmatrix(rd).status}")

    mods = [trivial_module(H, "right"), regular_module(H, "right"), free_module(H, simple(2, 1))]
    rep = check_braiding(rd, mods, morphisms=[(H.eps, mods[1], mods[0])])
    check_mirror(rd, [trivial_module(H), regular_module(H)], rep)
    for rec in rep.records:
        print(f"  {rec.key:28s} {rec.status}")

    print("\nYetter-Drinfeld structures on one-dimensional center objects k_chi")
    for n in (2, 3, 5):
        cdn, An = build_coend(n), build_An(n)
        Ac = trivial_center(cdn, An.carrier)
        found = [yd_search(cdn, An, Ac, character_module(cdn, 0, c))["status"] for c in range(n)]
        print(f"  n={n}: " + ", ".join(f"chi={c}: {s}" for c, s in enumerate(found)))


if __name__ == "__main__":
    main()
