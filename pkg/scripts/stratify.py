"""
Stratify X_mu(tau) for GSp_2n with mu = (1^n, 0^n) and print one line per
nonempty EO stratum.  Strata whose reduction has no product shape are
listed as unresolved.  n = 5 takes about 40 s.

    python3 scripts/stratify.py 3 4
"""

import argparse
import time

from adlv.adlv_sets import classify_coxeter_type
from adlv.affine_weyl import AffineWeylGroup
from adlv.reduction import DROP, stratification


def run(n: int):
    G = AffineWeylGroup.of("gsp", n)
    mu = (1,) * n + (0,) * n
    start = time.perf_counter()
    strat = stratification(G, mu, strict=False)
    kind = classify_coxeter_type(G, mu).kind
    print(f"GSp_{2 * n}, mu = {mu}: {len(strat.shapes)} strata with product shape, top dimension "
          f"{strat.top_dimension}, {kind} ({time.perf_counter() - start:.1f} s)")
    for s in strat.shapes:
        path = " ".join(f"s{st.reflection}" + ("*" if st.case == DROP else "") for st in s.steps)
        label = ",".join(f"s{i}" for i in sorted(s.parahoric))
        print(f"  {G.format(s.w):28} e = {G.format(s.coxeter_end):16} d = {s.affine_dim}  "
              f"dim {s.total_dim}  P_{{{label}}}  {path or '(spherical)'}")
    for w, reason in strat.unresolved:
        print(f"  {G.format(w):28} unresolved: {reason}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    p.add_argument("n", type=int, nargs="+")
    for n in p.parse_args().n:
        run(n)
