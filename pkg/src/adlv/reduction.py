"""
Deligne-Lusztig reduction: conjugation steps w -> s w s, reduction trees with
emptiness pruning, and the resulting stratum shapes.

Search strategy at a node with infinite-type sigma-support: breadth-first
search over moves that either preserve length or drop it with an empty open
piece X_{sw}.  Moves are tried drops first, then by ascending label, so the
path found to each element is the first among shortest ones in that order.
The end with finite-type sigma-support whose reduced word is smallest wins.
If no clean end exists the nearest drop of any kind is taken and the node is
marked mixed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .adlv_sets import (
    EmptinessVerdict, emptiness, geq_S, is_finite_type, is_sigma_coxeter, max_ad_stable,
    s_adm_nonempty, sigma_support, sort_elements,
)
from .affine_weyl import AffineElement, AffineWeylGroup

__all__ = [
    "PRESERVE", "DROP", "ReductionStep", "Certificate", "CertificateStore",
    "ReductionNode", "StratumShape", "Stratification", "ReductionError",
    "reduce_step", "reduce_along", "reduction_tree", "stratum_shape", "stratification",
]

PRESERVE = "length-preserving"
DROP = "length-drop"


class ReductionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ReductionStep:
    source: AffineElement
    reflection: int
    target: AffineElement
    case: str
    # length-drop only: sw (G_m-fibred, open) and sws (A^1-fibred, closed)
    open_child: AffineElement | None = None
    closed_child: AffineElement | None = None


def reduce_step(G: AffineWeylGroup, w: AffineElement, s: int) -> ReductionStep:
    refl = G.s(s)
    target = G.compose(refl, w, refl)
    lw, lt = G.length(w), G.length(target)
    if lt == lw:
        return ReductionStep(w, s, target, PRESERVE)
    if lt == lw - 2:
        return ReductionStep(w, s, target, DROP, G.compose(refl, w), target)
    raise ValueError(f"s{s} raises the length of {G.format(w)} ({lw} -> {lt})")


@dataclass(frozen=True)
class Certificate:
    """
    Why X_x(tau^k) is empty.

    Either ``verdict`` comes straight from the emptiness criterion, or
    ``path`` is a chain of length-preserving simple conjugations taking
    ``element`` to ``target``, itself certified empty; ``conjugator`` c
    satisfies c x c^-1 = target.
    """
    element: AffineElement
    k: int
    verdict: EmptinessVerdict | None = None
    path: tuple[int, ...] = ()
    target: AffineElement | None = None
    conjugator: AffineElement | None = None

    @property
    def kind(self) -> str:
        return "conjugation" if self.target is not None else "criterion"

    def check(self, G: AffineWeylGroup, store: "CertificateStore | None" = None) -> bool:
        if self.target is None:
            fresh = emptiness(G, self.element, self.k)
            return not fresh.nonempty and fresh == self.verdict
        x = self.element
        for s in self.path:
            try:
                step = reduce_step(G, x, s)
            except ValueError:
                return False
            if step.case != PRESERVE:
                return False
            x = step.target
        if x != self.target or G.conjugate(self.conjugator, self.element) != x:
            return False
        if store is not None and self.target in store:
            return store[self.target].check(G, store)
        return not emptiness(G, self.target, self.k).nonempty


class CertificateStore(dict):
    """Append-only map element -> Certificate."""

    def __setitem__(self, key, value):
        if key in self:
            return
        super().__setitem__(key, value)

    def certify(self, G: AffineWeylGroup, x: AffineElement, k: int) -> Certificate | None:
        """Certificate of emptiness for X_x(tau^k), or None if it is nonempty."""
        if x in self:
            return self[x]
        cert = self._by_conjugation(G, x, k)
        if cert is None:
            verdict = emptiness(G, x, k)
            if verdict.nonempty:
                return None
            cert = Certificate(x, k, verdict)
        self[x] = cert
        return cert

    def _by_conjugation(self, G, x, k) -> Certificate | None:
        known = {e for e, c in self.items() if c.target is None}
        if not known:
            return None
        parents = {x: None}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            if y in known and y != x:
                path = []
                z = y
                while parents[z] is not None:
                    z, s = parents[z]
                    path.append(s)
                path.reverse()
                c = G.identity
                for s in path:
                    c = G.compose(G.s(s), c)
                return Certificate(x, k, None, tuple(path), y, c)
            ly = G.length(y)
            for s in G.labels:
                refl = G.s(s)
                z = G.compose(refl, y, refl)
                if z not in parents and G.length(z) == ly:
                    parents[z] = (y, s)
                    queue.append(z)
        return None


@dataclass
class ReductionNode:
    """
    ``status``: ``leaf`` (finite-type sigma-support), ``empty`` (pruned,
    see ``certificate``), ``preserve`` (one child) or ``drop`` (children
    ``open`` and ``closed``; ``mixed`` is set when both are nonempty).
    """
    element: AffineElement
    status: str
    step: ReductionStep | None = None
    children: list["ReductionNode"] = field(default_factory=list)
    certificate: Certificate | None = None
    mixed: bool = False

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


def _moves(G, y, k, store):
    """Drops with empty open child, then length-preserving conjugations; labels ascending."""
    ly = G.length(y)
    drops, keeps = [], []
    for s in G.labels:
        refl = G.s(s)
        z = G.compose(refl, y, refl)
        lz = G.length(z)
        if lz == ly:
            keeps.append((s, z))
        elif lz == ly - 2 and store.certify(G, G.compose(refl, y), k) is not None:
            drops.append((s, z))
    return drops + keeps


def _path_to(parents, y) -> list[int]:
    path = []
    while parents[y] is not None:
        y, s = parents[y]
        path.append(s)
    path.reverse()
    return path


def _plan(G, x, k, store) -> list[int] | None:
    """
    Labels of a clean reduction of x down to finite-type sigma-support.

    Among all reachable ends the one with the smallest reduced word wins;
    the path to it is the first in (length, labels) order.
    """
    parents = {x: None}
    queue = deque([x])
    ends = []
    while queue:
        y = queue.popleft()
        if y != x and is_finite_type(G, sigma_support(G, y)):
            ends.append(y)
            continue
        for s, z in _moves(G, y, k, store):
            if z not in parents:
                parents[z] = (y, s)
                queue.append(z)
    if not ends:
        return None
    best = min(ends, key=lambda e: (G.length(e), G.format(e), len(_path_to(parents, e))))
    return _path_to(parents, best)


def _first_drop(G, x) -> list[int]:
    """Nearest drop of any kind through length-preserving conjugations."""
    parents = {x: None}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        ly = G.length(y)
        for s in G.labels:
            refl = G.s(s)
            if G.length(G.compose(refl, y, refl)) == ly - 2:
                return _path_to(parents, y) + [s]
        for s in G.labels:
            refl = G.s(s)
            z = G.compose(refl, y, refl)
            if z not in parents and G.length(z) == ly:
                parents[z] = (y, s)
                queue.append(z)
    raise ReductionError(f"no reduction available for {G.format(x)}")


def reduction_tree(G: AffineWeylGroup, w: AffineElement, k: int = 1,
                   store: CertificateStore | None = None) -> ReductionNode:
    store = CertificateStore() if store is None else store
    cert = store.certify(G, w, k)
    if cert is not None:
        return ReductionNode(w, "empty", certificate=cert)
    return _grow(G, w, k, store)


def _grow(G, x, k, store) -> ReductionNode:
    if is_finite_type(G, sigma_support(G, x)):
        return ReductionNode(x, "leaf")
    plan = _plan(G, x, k, store)
    clean = plan is not None
    if not clean:
        plan = _first_drop(G, x)
    root = parent = None
    for s in plan:
        step = reduce_step(G, x, s)
        if step.case == PRESERVE:
            node = ReductionNode(x, "preserve", step)
        else:
            node = ReductionNode(x, "drop", step)
            cert = store.certify(G, step.open_child, k)
            if cert is not None:
                node.children.append(ReductionNode(step.open_child, "empty", certificate=cert))
            else:
                node.children.append(_grow(G, step.open_child, k, store))
                node.mixed = True
        if parent is None:
            root = node
        else:
            parent.children.append(node)
        parent = node
        x = step.target
    if clean:
        parent.children.append(ReductionNode(x, "leaf"))
    else:
        cert = store.certify(G, x, k)
        if cert is not None:
            parent.children.append(ReductionNode(x, "empty", certificate=cert))
        else:
            parent.children.append(_grow(G, x, k, store))
    return root


def reduce_along(G: AffineWeylGroup, w: AffineElement, letters, k: int = 1,
                 store: CertificateStore | None = None) -> list[tuple[ReductionStep, bool | None]]:
    """
    Follow a prescribed sequence of reflections.  For each drop the flag says
    whether the open child is nonempty (None for length-preserving steps).
    """
    store = CertificateStore() if store is None else store
    out = []
    for s in letters:
        step = reduce_step(G, w, s)
        flag = None
        if step.case == DROP:
            flag = store.certify(G, step.open_child, k) is None
        out.append((step, flag))
        w = step.target
    return out


def surviving_path(tree: ReductionNode) -> list[ReductionStep]:
    """Steps along the unique branch of nonempty nodes."""
    steps = []
    node = tree
    while node.status in ("preserve", "drop"):
        alive = [c for c in node.children if c.status != "empty"]
        if len(alive) != 1:
            raise ReductionError(
                f"{len(alive)} nonempty branches below a {node.status} node")
        if node.status == "drop" and alive[0] is node.children[0]:
            # only X_{sw} survives: a G_m-bundle, not an A^1-bundle
            raise ReductionError("the surviving branch runs through the open piece X_{sw}")
        steps.append(node.step)
        node = alive[0]
    return steps


def leaf_of(tree: ReductionNode) -> ReductionNode:
    node = tree
    while node.status in ("preserve", "drop"):
        node = next(c for c in node.children if c.status != "empty")
    return node


@dataclass
class StratumShape:
    """One EO stratum; field order is the serialisation order."""
    w: AffineElement
    sigma_support: frozenset[int]
    parahoric: frozenset[int]
    coxeter_end: AffineElement
    affine_dim: int
    total_dim: int
    steps: list[ReductionStep]
    spherical: bool
    # spherical strata need not be Coxeter (e.g. s0 s1 s0 t for GSp_8)
    end_is_sigma_coxeter: bool


def stratum_shape(G: AffineWeylGroup, w: AffineElement, k: int = 1,
                  store: CertificateStore | None = None) -> StratumShape:
    supp = sigma_support(G, w)
    if is_finite_type(G, supp):
        return StratumShape(w, supp, supp | max_ad_stable(G, w), w, 0,
                            G.length(w), [], True, is_sigma_coxeter(G, w))
    tree = reduction_tree(G, w, k, store)
    if tree.status == "empty":
        raise ReductionError(f"X_w is empty for w = {G.format(w)}")
    steps = surviving_path(tree)
    end = leaf_of(tree).element
    end_supp = sigma_support(G, end)
    if not is_sigma_coxeter(G, end):
        raise ReductionError(f"reduction of {G.format(w)} ends at non-Coxeter {G.format(end)}")
    d = sum(1 for st in steps if st.case == DROP)
    if 2 * d != G.length(w) - G.length(end):
        raise ReductionError(f"inconsistent reduction of {G.format(w)}")
    return StratumShape(w, supp, end_supp, end, d, G.length(end) + d, steps, False, True)


@dataclass
class Stratification:
    mu: tuple[int, ...]
    shapes: list[StratumShape]
    store: CertificateStore
    # pairs (i, j) of indices into shapes with shapes[i].w >=_S shapes[j].w, i != j
    order: list[tuple[int, int]]
    # strata without a product shape (only with strict=False): (w, reason)
    unresolved: list[tuple[AffineElement, str]] = field(default_factory=list)

    @property
    def top_dimension(self) -> int:
        return max(s.total_dim for s in self.shapes)

    @property
    def dimensions(self) -> list[int]:
        return [s.total_dim for s in self.shapes]

    def maximal(self) -> list[StratumShape]:
        """Strata whose index is not strictly below another under >=_S."""
        strict = {(i, j) for i, j in self.order if (j, i) not in self.order}
        dominated = {j for _, j in strict}
        return [s for idx, s in enumerate(self.shapes) if idx not in dominated]


def stratification(G: AffineWeylGroup, mu, strict: bool = True) -> Stratification:
    """
    One shape per element of SAdm(mu)_0.  With ``strict=False`` elements whose
    reduction has no product shape are listed in ``unresolved`` instead of raising.
    """
    rec = s_adm_nonempty(G, mu)
    k = G.kottwitz(G.translation(rec.mu))
    store = CertificateStore()
    # empty EO strata are decided by the criterion; later pruning conjugates to them
    for w in rec.s_adm:
        v = rec.verdicts[w]
        if not v.nonempty:
            store[w] = Certificate(w, k, v)
    shapes, unresolved = [], []
    for w in sort_elements(G, rec.s_adm_0):
        try:
            shapes.append(stratum_shape(G, w, k, store))
        except ReductionError as exc:
            if strict:
                raise
            unresolved.append((w, str(exc)))
    order = [(i, j) for i, a in enumerate(shapes) for j, b in enumerate(shapes)
             if i != j and geq_S(G, a.w, b.w)]
    return Stratification(rec.mu, shapes, store, order, unresolved)
