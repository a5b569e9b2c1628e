"""
Admissible sets, length positive elements and the emptiness criterion for
affine Deligne-Lusztig varieties X_w(b) with b basic.

All functions take the ambient :class:`AffineWeylGroup` as first argument.
Finite Weyl group elements are :class:`AffineElement` with zero translation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .affine_weyl import AffineElement, AffineWeylGroup
from .root_datum import Cochar, perm_act, perm_inv

__all__ = [
    "KRDecomposition", "AdmissibleRecord", "EmptinessVerdict", "Classification",
    "is_min_rep", "is_minuscule", "admissible_set", "s_admissible_by_double_coset",
    "kr_decompose", "length_positive", "sigma_support", "is_finite_type",
    "is_sigma_coxeter", "emptiness", "is_nonempty", "s_adm_nonempty",
    "is_partial_coxeter", "positive_coxeter_witness", "has_positive_coxeter_part",
    "classify_coxeter_type", "geq_S", "max_ad_stable", "sort_elements",
]


def sort_elements(G: AffineWeylGroup, elems) -> list[AffineElement]:
    """Canonical order: decreasing length, then reduced word."""
    return sorted(elems, key=lambda w: (-G.length(w), G.format(w)))


def is_min_rep(G: AffineWeylGroup, w: AffineElement, J=None) -> bool:
    """Is ``w`` the minimal length element of W_J w?  ``J`` defaults to S."""
    J = G.finite_labels if J is None else J
    ell = G.length(w)
    return all(G.length(G.compose(G.s(j), w)) > ell for j in J)


def is_minuscule(G: AffineWeylGroup, mu: Cochar) -> bool:
    d = G.datum
    return all(d.pairing(a, mu) in (-1, 0, 1) for a in d.positive_roots)


@dataclass
class AdmissibleRecord:
    mu: Cochar
    adm: list[AffineElement]
    s_adm: list[AffineElement]
    s_adm_0: list[AffineElement] | None = None
    # emptiness verdicts for s_adm, filled together with s_adm_0
    verdicts: dict[AffineElement, "EmptinessVerdict"] = field(default_factory=dict)


def admissible_set(G: AffineWeylGroup, mu) -> AdmissibleRecord:
    """
    Adm(mu) and its intersection with ^S W~.

    Candidates are the subwords of a reduced word of each phi^{x mu}; every
    candidate is then re-checked against the Bruhat order.
    """
    d = G.datum
    mu = d.check_cocharacter(mu)
    if not d.is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")
    if not is_minuscule(G, mu):
        raise ValueError(f"{mu} is not minuscule")
    tops = [G.translation(lam)
            for lam in sorted({perm_act(u.perm, mu) for u in G.W0})]
    found: set[AffineElement] = set()
    for top in tops:
        word = G.reduced_word(top)
        tail = G.tau_power(word.omega)
        # all subwords, built incrementally from the right
        partial = {tail}
        for i in reversed(word.letters):
            s = G.s(i)
            partial |= {G.compose(s, x) for x in partial}
        found |= partial
    adm = [w for w in found if any(G.bruhat_leq(w, t) for t in tops)]
    adm = sort_elements(G, adm)
    s_adm = [w for w in adm if is_min_rep(G, w)]
    return AdmissibleRecord(mu=mu, adm=adm, s_adm=s_adm)


def s_admissible_by_double_coset(G: AffineWeylGroup, mu) -> list[AffineElement]:
    """^S W~ intersected with W_0 phi^mu W_0, enumerated directly."""
    mu = G.datum.check_cocharacter(mu)
    orbit = sorted({perm_act(u.perm, mu) for u in G.W0})
    coset = (AffineElement(u.perm, lam) for u in G.W0 for lam in orbit)
    return sort_elements(G, [w for w in coset if is_min_rep(G, w)])


@dataclass(frozen=True)
class KRDecomposition:
    """w = x phi^mu y with mu dominant and phi^mu y in ^S W~."""
    x: AffineElement
    mu: Cochar
    y: AffineElement


def kr_decompose(G: AffineWeylGroup, w: AffineElement) -> KRDecomposition:
    d = G.datum
    mu, _ = d.dominant_representative(w.trans)
    phi_mu = G.translation(mu)
    sols = []
    for y in G.W0:
        # w = x y phi^{y^-1 mu} forces y^-1 mu = trans(w)
        if perm_act(perm_inv(y.perm), mu) != w.trans:
            continue
        right = G.compose(phi_mu, y)
        if not is_min_rep(G, right):
            continue
        x = G.compose(w, G.inverse(right))
        assert not any(x.trans)
        sols.append(KRDecomposition(x, mu, y))
    assert len(sols) == 1, f"{len(sols)} decompositions of {w!r}"
    return sols[0]


def length_positive(G: AffineWeylGroup, w: AffineElement) -> list[AffineElement]:
    """LP(w), in the order of ``G.W0``."""
    d = G.datum
    kr = kr_decompose(G, w)
    lam = perm_act(perm_inv(kr.y.perm), kr.mu)       # y^-1 mu
    xy = G.compose(kr.x, kr.y).perm
    out = []
    for v in G.W0:
        ok = True
        for alpha in d.positive_roots:
            va = d.act_root(v.perm, alpha)
            value = (d.pairing(va, lam) + d.is_positive(va)
                     - d.is_positive(d.act_root(xy, va)))
            if value < 0:
                ok = False
                break
        if ok:
            out.append(v)
    return out


def sigma_support(G: AffineWeylGroup, w: AffineElement) -> frozenset[int]:
    """Smallest tau^k-stable set of labels containing supp(w_a), where w = w_a tau^k."""
    w_a, k = G.omega_decompose(w)
    supp = set(G.support(w_a))
    table = G.omega_conjugation_table(k)
    todo = list(supp)
    while todo:
        j = table[todo.pop()]
        if j not in supp:
            supp.add(j)
            todo.append(j)
    return frozenset(supp)


def is_finite_type(G: AffineWeylGroup, J) -> bool:
    """W_J is finite iff J misses a node of the (connected) affine diagram."""
    return not set(G.labels) <= set(J)


def is_sigma_coxeter(G: AffineWeylGroup, w: AffineElement) -> bool:
    supp = sigma_support(G, w)
    if not is_finite_type(G, supp):
        raise ValueError(f"{G.format(w)} has infinite-type sigma-support")
    w_a, k = G.omega_decompose(w)
    letters = G.reduced_word(w_a).letters
    orbits = [o for o in G.omega_orbits(k) if o & supp]
    return len(letters) == len(orbits) and all(
        sum(1 for i in letters if i in o) == 1 for o in orbits)


@dataclass(frozen=True)
class EmptinessVerdict:
    """
    Outcome of the emptiness test for X_w(tau^k).

    ``reason`` is one of ``kottwitz`` (classes differ), ``finite-support``,
    ``length-positive`` (empty, ``witness`` is v in LP(w) with
    supp(v^-1 p(w) v) proper) or ``no-witness`` (nonempty, LP(w) exhausted).
    """
    element: AffineElement
    k: int
    nonempty: bool
    reason: str
    witness: AffineElement | None = None


def emptiness(G: AffineWeylGroup, w: AffineElement, k: int) -> EmptinessVerdict:
    if G.kottwitz(w) != k:
        return EmptinessVerdict(w, k, False, "kottwitz")
    if is_finite_type(G, sigma_support(G, w)):
        return EmptinessVerdict(w, k, True, "finite-support")
    p = G.projection(w)
    full = G.finite_labels
    for v in length_positive(G, w):
        if G.support(G.compose(G.inverse(v), p, v)) < full:
            return EmptinessVerdict(w, k, False, "length-positive", v)
    return EmptinessVerdict(w, k, True, "no-witness")


def is_nonempty(G: AffineWeylGroup, w: AffineElement, k: int = 1) -> bool:
    return emptiness(G, w, k).nonempty


def s_adm_nonempty(G: AffineWeylGroup, mu) -> AdmissibleRecord:
    rec = admissible_set(G, mu)
    k = G.kottwitz(G.translation(rec.mu))
    rec.verdicts = {w: emptiness(G, w, k) for w in rec.s_adm}
    rec.s_adm_0 = [w for w in rec.s_adm if rec.verdicts[w].nonempty]
    return rec


def is_partial_coxeter(G: AffineWeylGroup, u: AffineElement) -> bool:
    """Product of pairwise distinct simple reflections."""
    return G.length(u) == len(G.support(u))


def positive_coxeter_witness(G: AffineWeylGroup, w: AffineElement) -> AffineElement | None:
    """First v in LP(w) with v^-1 p(w) v partial Coxeter, if any."""
    p = G.projection(w)
    for v in length_positive(G, w):
        if is_partial_coxeter(G, G.compose(G.inverse(v), p, v)):
            return v
    return None


def has_positive_coxeter_part(G: AffineWeylGroup, w: AffineElement) -> bool:
    return positive_coxeter_witness(G, w) is not None


@dataclass
class Classification:
    """``kind`` is ``coxeter``, ``positive-coxeter`` or ``neither``."""
    kind: str
    s_adm_0: list[AffineElement]
    # per element: ("sigma-coxeter", None) | ("positive-coxeter-part", v) | ("fails", None)
    evidence: dict[AffineElement, tuple[str, AffineElement | None]]
    witness: AffineElement | None = None


def classify_coxeter_type(G: AffineWeylGroup, mu, record: AdmissibleRecord | None = None
                          ) -> Classification:
    rec = record if record is not None and record.s_adm_0 is not None else s_adm_nonempty(G, mu)

    def spherical_coxeter(w):
        return is_finite_type(G, sigma_support(G, w)) and is_sigma_coxeter(G, w)

    evidence = {}
    witness = None
    # shortest failure first; it is the most informative witness
    for w in sorted(rec.s_adm_0, key=lambda x: (G.length(x), G.format(x))):
        if spherical_coxeter(w):
            evidence[w] = ("sigma-coxeter", None)
            continue
        v = positive_coxeter_witness(G, w)
        if v is not None:
            evidence[w] = ("positive-coxeter-part", v)
        else:
            evidence[w] = ("fails", None)
            if witness is None:
                witness = w
    coxeter_set = {w for w in rec.s_adm if spherical_coxeter(w)}
    if coxeter_set == set(rec.s_adm_0):
        kind = "coxeter"
    elif witness is None:
        kind = "positive-coxeter"
    else:
        kind = "neither"
    return Classification(kind, rec.s_adm_0, evidence, witness)


def geq_S(G: AffineWeylGroup, w: AffineElement, v: AffineElement) -> bool:
    """w >=_S v: some u in W_0 has w >= u^-1 v u."""
    return any(G.bruhat_leq(G.compose(G.inverse(u), v, u), w) for u in G.W0)


def max_ad_stable(G: AffineWeylGroup, w: AffineElement) -> frozenset[int]:
    """S_w, the largest subset of S permuted by conjugation with w."""
    index = {G.s(i): i for i in G.finite_labels}
    image = {}
    for i in G.finite_labels:
        c = G.conjugate(w, G.s(i))
        image[i] = index.get(c)
    best: frozenset[int] = frozenset()
    labels = sorted(G.finite_labels)
    for r in range(len(labels) + 1):
        for sub in combinations(labels, r):
            if {image[i] for i in sub} == set(sub):
                best |= frozenset(sub)
    return best
