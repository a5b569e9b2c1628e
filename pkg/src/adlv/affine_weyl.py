"""
Exact arithmetic in the Iwahori-Weyl group W_0 x| X_*(T).

An element is stored as ``(perm, trans)`` meaning ``u . phi^lam``; with the
rule ``phi^lam u = u phi^{u^-1 lam}`` products stay in this form, so two
elements are equal iff their pairs are equal.

Words are written ``s_{i1} ... s_{im} t^k`` (product from the left, ``t`` the
length-zero generator of Omega), optionally preceded by a translation
``phi[c1,...,cN]``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .root_datum import (
    Cochar, Family, Perm, RootDatum, build_root_datum, perm_act, perm_inv,
    perm_mul,
)

__all__ = [
    "AffineElement", "Word", "WordSyntaxError", "AffineWeylGroup",
    "parse_word", "format_word",
]


@dataclass(frozen=True, order=True)
class AffineElement:
    perm: Perm
    trans: Cochar

    def __repr__(self) -> str:
        return f"AffineElement({self.perm}, {self.trans})"


@dataclass(frozen=True)
class Word:
    """Letters are affine simple reflection indices (0 = s_0); ``omega`` is the trailing power of t."""
    letters: tuple[int, ...] = ()
    omega: int = 0
    translation: Cochar | None = None

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


class WordSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{msg} at position {pos}:\n  {text}\n  {' ' * pos}^")


_TOKEN = re.compile(r"\s*(?:(phi\[[^\]]*\])|(s\d+)|(t\^(-?\d+))|(t)|(\S+))")


def parse_word(text: str, rank: int | None = None, N: int | None = None) -> Word:
    """
    Parse ``[phi[c1,...,cN]] s_i ... [t^k]``.

    >>> parse_word("phi[1,1,1,0,0,0] s3 s2 s1")
    Word(letters=(3, 2, 1), omega=0, translation=(1, 1, 1, 0, 0, 0))
    >>> parse_word("s0 s1 s0 t^1").omega
    1
    """
    letters: list[int] = []
    omega = 0
    translation = None
    seen_omega = False
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            if letters or seen_omega or translation is not None:
                raise WordSyntaxError(text, start, "phi[...] must come first")
            body = m.group(1)[4:-1]
            try:
                translation = tuple(int(c) for c in body.split(","))
            except ValueError:
                raise WordSyntaxError(text, start, "bad integer in phi[...]") from None
            if N is not None and len(translation) != N:
                raise WordSyntaxError(
                    text, start, f"phi[...] needs {N} entries, got {len(translation)}")
        elif m.group(2):
            if seen_omega:
                raise WordSyntaxError(text, start, "t^k must be the last token")
            i = int(m.group(2)[1:])
            if rank is not None and i > rank:
                raise WordSyntaxError(text, start, f"no simple reflection s{i}")
            letters.append(i)
        elif m.group(3) or m.group(5):
            if seen_omega:
                raise WordSyntaxError(text, start, "repeated t^k")
            omega = int(m.group(4)) if m.group(3) else 1
            seen_omega = True
        else:
            raise WordSyntaxError(text, start, f"unexpected token {m.group(6)!r}")
        pos = m.end()
    return Word(tuple(letters), omega, translation)


def format_word(word: Word) -> str:
    parts = []
    if word.translation is not None:
        parts.append("phi[" + ",".join(map(str, word.translation)) + "]")
    parts.extend(f"s{i}" for i in word.letters)
    if word.omega or not parts:
        parts.append(f"t^{word.omega}")
    return " ".join(parts)


class AffineWeylGroup:
    """
    The Iwahori-Weyl group of a root datum, with caches for length and Bruhat order.

    The caches are plain dicts; results are deterministic, so concurrent use
    from threads can at worst recompute an entry.
    """

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.N = datum.N
        self._length_cache: dict[AffineElement, int] = {}
        self._bruhat_cache: dict[tuple[AffineElement, AffineElement], bool] = {}

    @classmethod
    def of(cls, family: Family | str, n: int) -> "AffineWeylGroup":
        return cls(build_root_datum(family, n))

    def __repr__(self) -> str:
        return f"AffineWeylGroup({self.datum.name})"

    # -- construction --------------------------------------------------

    @cached_property
    def identity(self) -> AffineElement:
        return AffineElement(tuple(range(self.N)), (0,) * self.N)

    def translation(self, lam) -> AffineElement:
        return AffineElement(tuple(range(self.N)), self.datum.check_cocharacter(lam))

    def finite(self, perm: Perm) -> AffineElement:
        return AffineElement(tuple(perm), (0,) * self.N)

    @cached_property
    def simple_reflections(self) -> tuple[AffineElement, ...]:
        """s_0, s_1, ..., s_r indexed by label."""
        d = self.datum
        s0 = AffineElement(d.affine_perm, d.affine_trans)
        return (s0,) + tuple(self.finite(p) for p in d.simple_reflections)

    @property
    def labels(self) -> range:
        return range(len(self.simple_reflections))

    @property
    def finite_labels(self) -> frozenset[int]:
        return frozenset(range(1, len(self.simple_reflections)))

    def s(self, i: int) -> AffineElement:
        return self.simple_reflections[i]

    @cached_property
    def tau(self) -> AffineElement:
        """
        Length-zero generator of Omega: the unique length-zero element of
        W_0 phi^lam W_0 for the fundamental minuscule cocharacter lam.
        """
        d = self.datum
        orbit = {perm_act(u.perm, d.fundamental) for u in self.W0}
        found = [AffineElement(u.perm, lam) for u in self.W0 for lam in sorted(orbit)
                 if self.length(AffineElement(u.perm, lam)) == 0]
        assert len(found) == 1, found
        return found[0]

    def tau_power(self, k: int) -> AffineElement:
        base = self.tau if k >= 0 else self.inverse(self.tau)
        out = self.identity
        for _ in range(abs(k)):
            out = self.compose(out, base)
        return out

    @cached_property
    def W0(self) -> tuple[AffineElement, ...]:
        """All finite Weyl group elements, sorted by (length, perm)."""
        gens = [p for p in self.datum.simple_reflections]
        start = tuple(range(self.N))
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for g in gens:
                v = perm_mul(g, u)
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        elems = [self.finite(p) for p in seen]
        return tuple(sorted(elems, key=lambda e: (self.length(e), e.perm)))

    # -- group law -----------------------------------------------------

    def _check(self, w: AffineElement) -> None:
        if len(w.perm) != self.N or len(w.trans) != self.N:
            raise ValueError(f"{w!r} does not belong to {self.datum.name}")

    def compose(self, *elems: AffineElement) -> AffineElement:
        """Product left to right: ``u phi^a . v phi^b = uv phi^{v^-1 a + b}``."""
        out = self.identity
        for w in elems:
            self._check(w)
            vinv = perm_inv(w.perm)
            moved = perm_act(vinv, out.trans)
            out = AffineElement(perm_mul(out.perm, w.perm),
                                tuple(a + b for a, b in zip(moved, w.trans)))
        return out

    def inverse(self, w: AffineElement) -> AffineElement:
        # (u phi^a)^-1 = phi^-a u^-1 = u^-1 phi^{-u a}
        self._check(w)
        ua = perm_act(w.perm, w.trans)
        return AffineElement(perm_inv(w.perm), tuple(-x for x in ua))

    def conjugate(self, x: AffineElement, w: AffineElement) -> AffineElement:
        """x w x^-1."""
        return self.compose(x, w, self.inverse(x))

    def act_on_cochar(self, w: AffineElement, lam: Cochar, affine: bool = False) -> Cochar:
        """Finite part acting on ``lam``; with ``affine=True`` the action lam -> u(lam + trans)."""
        if affine:
            lam = tuple(a + b for a, b in zip(lam, w.trans))
        return perm_act(w.perm, lam)

    def projection(self, w: AffineElement) -> AffineElement:
        """p(w), the finite part."""
        return self.finite(w.perm)

    # -- length --------------------------------------------------------

    def length(self, w: AffineElement) -> int:
        cached = self._length_cache.get(w)
        if cached is not None:
            return cached
        d = self.datum
        total = 0
        for alpha in d.positive_roots:
            p = d.pairing(alpha, w.trans)
            if d.is_positive(d.act_root(w.perm, alpha)):
                total += abs(p)
            else:
                total += abs(p + 1)
        self._length_cache[w] = total
        return total

    def kottwitz(self, w: AffineElement) -> int:
        return self.datum.kottwitz_class(w.trans)

    def omega_decompose(self, w: AffineElement) -> tuple[AffineElement, int]:
        """Return ``(w_a, k)`` with ``w = w_a tau^k`` and ``w_a`` in W_a."""
        k = self.kottwitz(w)
        return self.compose(w, self.tau_power(-k)), k

    # -- descents and words --------------------------------------------

    def descents(self, w: AffineElement, side: str = "left") -> frozenset[int]:
        ell = self.length(w)
        if side == "left":
            return frozenset(i for i in self.labels
                             if self.length(self.compose(self.s(i), w)) < ell)
        if side == "right":
            return frozenset(i for i in self.labels
                             if self.length(self.compose(w, self.s(i))) < ell)
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def reduced_word(self, w: AffineElement) -> Word:
        """Greedy reduced word, always stripping the smallest-label left descent."""
        letters = []
        cur = w
        ell = self.length(cur)
        while ell > 0:
            for i in self.labels:
                nxt = self.compose(self.s(i), cur)
                if self.length(nxt) < ell:
                    letters.append(i)
                    cur = nxt
                    ell -= 1
                    break
            else:  # pragma: no cover - impossible for a correct length function
                raise ArithmeticError(f"no left descent for {cur!r} of length {ell}")
        k = self.kottwitz(cur)
        if cur != self.tau_power(k):
            raise ArithmeticError(f"length-zero residue {cur!r} is not a power of tau")
        return Word(tuple(letters), k)

    def evaluate(self, word: Word | str) -> AffineElement:
        if isinstance(word, str):
            word = parse_word(word, rank=len(self.simple_reflections) - 1, N=self.N)
        out = self.identity
        if word.translation is not None:
            out = self.translation(word.translation)
        for i in word.letters:
            if not 0 <= i < len(self.simple_reflections):
                raise ValueError(f"no simple reflection s{i} in {self.datum.name}")
            out = self.compose(out, self.s(i))
        return self.compose(out, self.tau_power(word.omega))

    def __call__(self, word: Word | str) -> AffineElement:
        return self.evaluate(word)

    def is_reduced(self, word: Word | str) -> bool:
        if isinstance(word, str):
            word = parse_word(word, N=self.N)
        # phi^lam prefixes are not words in the generators; only count letters
        base = Word(word.letters, word.omega)
        return self.length(self.evaluate(base)) == len(base.letters)

    def format(self, w: AffineElement) -> str:
        return format_word(self.reduced_word(w))

    def support(self, w: AffineElement) -> frozenset[int]:
        """Labels occurring in a reduced word of the W_a-part of ``w``."""
        return frozenset(self.reduced_word(w).letters)

    # -- Bruhat order --------------------------------------------------

    def bruhat_leq(self, w: AffineElement, v: AffineElement) -> bool:
        """``w <= v``; elements in different Omega components are incomparable."""
        if self.kottwitz(w) != self.kottwitz(v):
            return False
        return self._bruhat(w, v)

    def _bruhat(self, w: AffineElement, v: AffineElement) -> bool:
        key = (w, v)
        hit = self._bruhat_cache.get(key)
        if hit is not None:
            return hit
        lw, lv = self.length(w), self.length(v)
        if lw > lv:
            result = False
        elif lv == 0:
            result = w == v
        elif lw == 0:
            # w is the Omega part of v's component; identity of W_a is below everything
            result = True
        else:
            s = next(i for i in self.labels
                     if self.length(self.compose(self.s(i), v)) < lv)
            sv = self.compose(self.s(s), v)
            sw = self.compose(self.s(s), w)
            result = self._bruhat(sw, sv) if self.length(sw) < lw else self._bruhat(w, sv)
        self._bruhat_cache[key] = result
        return result

    # -- Omega action on simple reflections ----------------------------

    def omega_conjugation_table(self, k: int = 1) -> dict[int, int]:
        """Map i -> j with tau^k s_i tau^-k = s_j."""
        t = self.tau_power(k)
        index = {s: i for i, s in enumerate(self.simple_reflections)}
        table = {}
        for i, s in enumerate(self.simple_reflections):
            c = self.conjugate(t, s)
            assert c in index, f"tau^{k} s{i} tau^-{k} is not simple"
            table[i] = index[c]
        return table

    def omega_orbits(self, k: int = 1) -> list[frozenset[int]]:
        table = self.omega_conjugation_table(k)
        orbits, seen = [], set()
        for i in self.labels:
            if i in seen:
                continue
            orb, j = set(), i
            while j not in orb:
                orb.add(j)
                j = table[j]
            seen |= orb
            orbits.append(frozenset(orb))
        return orbits
