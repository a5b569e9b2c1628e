"""
Sizes of Adm(mu), SAdm(mu) and SAdm(mu)_0 for GSp_2n and GL_n with the
standard minuscule mu, and the Coxeter-type classification.

    python3 scripts/sadm_census.py --max-n 4
"""

import argparse

from adlv.adlv_sets import classify_coxeter_type, s_adm_nonempty
from adlv.affine_weyl import AffineWeylGroup


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=4)
    args = p.parse_args()
    print(f"{'group':8} {'mu':28} {'|Adm|':>6} {'|SAdm|':>7} {'|SAdm_0|':>9}  type")
    for family in ("gsp", "gl"):
        for n in range(2, args.max_n + 1):
            G = AffineWeylGroup.of(family, n)
            if family == "gsp":
                mus = [(1,) * n + (0,) * n]
            else:
                mus = [(1,) * r + (0,) * (n - r) for r in range(1, n)]
            for mu in mus:
                rec = s_adm_nonempty(G, mu)
                kind = classify_coxeter_type(G, mu, rec).kind
                print(f"{G.datum.name:8} {str(mu):28} {len(rec.adm):6} {len(rec.s_adm):7} "
                      f"{len(rec.s_adm_0):9}  {kind}")


if __name__ == "__main__":
    main()
