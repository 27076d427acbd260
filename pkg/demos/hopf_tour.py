"""A_n = k[x]/(x^n) as a Hopf algebra in B_n, evaluated exactly.

Run:  python3 demos/hopf_tour.py [n]
"""

import sys

from braidbench.grcat import braiding, compose, simple
from braidbench.hopfcore import antipode_from_fusion, build_An, check_hopf, fusion_ops
from braidbench.linalg import mor_rank
from braidbench.scalar import make_root, qbinom


def main(n: int = 3) -> None:
    z = make_root(n)
    print(f"q = z_{n};  q^{n} = {z ** n}")
    print("q-binomials [m choose k]_q:")
    for m in range(n + 1):
        print("  ", [str(qbinom(m, k, z)) for k in range(m + 1)])

    A = build_An(n)
    rep = check_hopf(A)
    print(f"\nA_{n}: {len(rep.keys())} axioms, status {rep.status}")
    print("antipode diagonal:", [str(A.S.entry(m, m)) for m in range(n)])

    Hl, Hr = fusion_ops(A)
    print(f"fusion operators have rank {mor_rank(Hl)} and {mor_rank(Hr)} of {Hl.src.dim}")
    S = antipode_from_fusion(A.with_(S=None, Sinv=None))
    print("antipode recovered from H^l matches:", S == A.S)

    k1 = simple(n, 1)
    twice = compose(braiding(k1, k1), braiding(k1, k1))
    print(f"double braiding on k_1 (x) k_1: {twice.entry(0, 0)}  (symmetric iff this is 1)")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
