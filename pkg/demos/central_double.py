"""The central double d_A on the center of B_2 and why it has no augmentation.

Run:  python3 demos/central_double.py      (about half a minute)
"""

import json

from braidbench.coendmod import build_coend
from braidbench.hopfcore import build_An
from braidbench.monadmod import (
    augmentation_search,
    build_dA,
    center_probes,
    check_monad_suite,
    cross_product_check,
    free_monad,
)


def main() -> None:
    cd, A = build_coend(2), build_An(2)
    T = build_dA(A, cd)
    rep = check_monad_suite(T, center_probes(cd))
    print(f"{T.name}: {len(rep.keys())} laws on {len(center_probes(cd))} probes, status {rep.status}")

    cross = cross_product_check(A, cd, dA=T)
    print(f"? (x) D(A_2) versus the composite monad: {cross.status}")

    cert = augmentation_search(T, A=A)
    print("\naugmentations of d_A:", cert["status"])
    print(json.dumps({k: cert[k] for k in ("violation", "linear") if k in cert}, indent=2))

    F = free_monad(cd.hopf, cd)
    found = augmentation_search(F, exhaustive=True)
    print(f"\naugmentations of ? (x) C: {found['status']}, {len(found['solutions'])} solutions")
    for s in found["solutions"]:
        vals = [c["entries"] for c in s["components"]]
        print("  components", vals, "verified" if s["verified"] else "NOT verified")


if __name__ == "__main__":
    main()
