"""
Root data for GL_n and GSp_2n, realised inside GL_N (N = n or 2n).

Indices are 0-based throughout: the character chi_{ij} of the diagonal torus
is the pair ``(i, j)`` with ``i != j``, and a cocharacter is an integer
vector of length N.  For GSp_2n a root is the class of GL_2n pairs under
``(i, j) ~ (N-1-j, N-1-i)``; we store the lexicographically smaller pair.

Permutations are tuples in one-line notation, ``perm[i]`` being the image of
``i``.  A permutation acts on roots by ``u.chi_{ij} = chi_{u(i) u(j)}`` and on
cocharacters by ``(u.lam)[u(i)] = lam[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

__all__ = [
    "Family", "Perm", "Root", "Cochar", "RootDatum", "build_root_datum",
    "perm_mul", "perm_inv", "perm_act", "transposition",
]

Perm = tuple[int, ...]
Root = tuple[int, int]
Cochar = tuple[int, ...]


class Family(str, Enum):
    GL = "gl"
    GSP = "gsp"


def perm_mul(u: Perm, v: Perm) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[i] for i in v)


def perm_inv(u: Perm) -> Perm:
    out = [0] * len(u)
    for i, ui in enumerate(u):
        out[ui] = i
    return tuple(out)


def perm_act(u: Perm, lam: Cochar) -> Cochar:
    out = [0] * len(lam)
    for i, ui in enumerate(u):
        out[ui] = lam[i]
    return tuple(out)


def transposition(N: int, *pairs: tuple[int, int]) -> Perm:
    """Product of disjoint transpositions, given with 1-based letters."""
    p = list(range(N))
    for a, b in pairs:
        p[a - 1], p[b - 1] = p[b - 1], p[a - 1]
    return tuple(p)


@dataclass(frozen=True)
class RootDatum:
    """
    Combinatorial root datum of GL_n or GSp_2n.

    ``simple_reflections[i - 1]`` is the permutation of s_i for i = 1..n (GSp)
    or i = 1..n-1 (GL).  The affine reflection s_0 is the element
    ``affine_perm . phi^affine_trans`` in permutation-times-translation form.
    """
    family: Family
    n: int
    N: int
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    simple_reflections: tuple[Perm, ...]
    affine_perm: Perm
    affine_trans: Cochar
    # cocharacter whose Kottwitz class is +1 (fixes the sign of pi_1 = Z)
    fundamental: Cochar
    _kappa_form: tuple[int, ...] = field(repr=False, compare=False, default=())

    @property
    def rank(self) -> int:
        """Number of finite simple reflections."""
        return len(self.simple_reflections)

    # -- roots ---------------------------------------------------------

    def canonical(self, i: int, j: int) -> Root:
        if i == j:
            raise ValueError("chi_{ii} is not a root")
        if self.family is Family.GSP:
            other = (self.N - 1 - j, self.N - 1 - i)
            return min((i, j), other)
        return (i, j)

    def root(self, i: int, j: int) -> Root:
        """The root chi_{ij} with 1-based letters."""
        return self.canonical(i - 1, j - 1)

    def representatives(self, alpha: Root) -> tuple[Root, ...]:
        i, j = alpha
        if self.family is Family.GSP:
            other = (self.N - 1 - j, self.N - 1 - i)
            if other != alpha:
                return (alpha, other)
        return (alpha,)

    def pairing(self, alpha: Root, lam: Cochar) -> int:
        i, j = alpha
        return lam[i] - lam[j]

    @staticmethod
    def is_positive(alpha: Root) -> bool:
        return alpha[0] < alpha[1]

    def negate(self, alpha: Root) -> Root:
        return self.canonical(alpha[1], alpha[0])

    def act_root(self, u: Perm, alpha: Root) -> Root:
        return self.canonical(u[alpha[0]], u[alpha[1]])

    def coroot(self, alpha: Root) -> Cochar:
        """Coroot as an integer vector; long GSp roots get e_i - e_j only once."""
        vec = [0] * self.N
        for i, j in self.representatives(alpha):
            vec[i] += 1
            vec[j] -= 1
        return tuple(vec)

    @cached_property
    def two_rho(self) -> tuple[int, ...]:
        """Sum of positive roots as a linear form on cocharacters."""
        form = [0] * self.N
        for i, j in self.positive_roots:
            form[i] += 1
            form[j] -= 1
        return tuple(form)

    def pair_two_rho(self, lam: Cochar) -> int:
        return sum(a * b for a, b in zip(self.two_rho, lam))

    # -- cocharacters --------------------------------------------------

    def is_cocharacter(self, lam) -> bool:
        if len(lam) != self.N:
            return False
        if self.family is Family.GSP:
            c = lam[0] + lam[-1]
            return all(lam[i] + lam[self.N - 1 - i] == c for i in range(self.n))
        return True

    def check_cocharacter(self, lam) -> Cochar:
        lam = tuple(int(x) for x in lam)
        if not self.is_cocharacter(lam):
            raise ValueError(f"{lam} is not a cocharacter of {self.name}")
        return lam

    def is_dominant(self, lam: Cochar) -> bool:
        return all(self.pairing(a, lam) >= 0 for a in self.simple_roots)

    def dominant_representative(self, lam: Cochar) -> tuple[Cochar, Perm]:
        """Return ``(lam_dom, u)`` with ``u . lam == lam_dom`` dominant."""
        lam = self.check_cocharacter(lam)
        u = tuple(range(self.N))
        changed = True
        while changed:
            changed = False
            for a, s in zip(self.simple_roots, self.simple_reflections):
                if self.pairing(a, lam) < 0:
                    lam = perm_act(s, lam)
                    u = perm_mul(s, u)
                    changed = True
        return lam, u

    def kottwitz_class(self, lam: Cochar) -> int:
        """Image of ``lam`` in pi_1 = X_*(T) / coroot lattice (infinite cyclic here)."""
        return sum(a * b for a, b in zip(self._kappa_form, lam))

    def simple_coroot_coefficients(self, lam: Cochar) -> list[Fraction] | None:
        """Rational coefficients of ``lam`` in the simple coroots, or None if outside their span."""
        cols = [self.coroot(a) for a in self.simple_roots]
        r = len(cols)
        rows = [[Fraction(cols[c][i]) for c in range(r)] + [Fraction(lam[i])]
                for i in range(self.N)]
        # Gaussian elimination over Q
        piv_row = 0
        pivots = []
        for c in range(r):
            p = next((i for i in range(piv_row, self.N) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[piv_row], rows[p] = rows[p], rows[piv_row]
            pv = rows[piv_row][c]
            rows[piv_row] = [x / pv for x in rows[piv_row]]
            for i in range(self.N):
                if i != piv_row and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[piv_row])]
            pivots.append(c)
            piv_row += 1
        if any(rows[i][r] != 0 for i in range(piv_row, self.N)):
            return None
        coeffs = [Fraction(0)] * r
        for i, c in enumerate(pivots):
            coeffs[c] = rows[i][r]
        return coeffs

    def dominance_leq(self, smaller: Cochar, larger: Cochar) -> bool:
        """``smaller <= larger``: the difference is a non-negative rational sum of positive coroots."""
        smaller = self.check_cocharacter(smaller)
        larger = self.check_cocharacter(larger)
        if self.kottwitz_class(smaller) != self.kottwitz_class(larger):
            raise ValueError(
                f"{smaller} and {larger} lie in different Kottwitz classes")
        diff = tuple(b - a for a, b in zip(smaller, larger))
        coeffs = self.simple_coroot_coefficients(diff)
        # positive coroots are non-negative combinations of simple ones
        return coeffs is not None and all(c >= 0 for c in coeffs)

    @property
    def name(self) -> str:
        if self.family is Family.GSP:
            return f"GSp_{self.N}"
        return f"GL_{self.N}"

    def cocharacter_constraints(self) -> list[list[int]]:
        rows = []
        if self.family is Family.GSP:
            for i in range(1, self.n):
                row = [0] * self.N
                row[i] += 1
                row[self.N - 1 - i] += 1
                row[0] -= 1
                row[self.N - 1] -= 1
                rows.append(row)
        return rows


def _kappa_form(datum: RootDatum) -> tuple[int, ...]:
    """
    Integer linear form realising X_*(T) -> pi_1(G) ~= Z.

    X_*(T) is the integer kernel of the similitude constraints; both it and
    the quotient by the coroot lattice are read off Smith normal forms.
    """
    N = datum.N
    A = datum.cocharacter_constraints()
    if A:
        S, _, V = smith_normal_decomp(Matrix(A), domain=ZZ)
        r = sum(1 for i in range(min(S.shape)) if S[i, i] != 0)
        Vinv = V.inv()
        to_lattice = Vinv[r:, :]       # ambient -> coordinates in a lattice basis
    else:
        to_lattice = Matrix.eye(N)
    coroots = Matrix.hstack(*[Matrix(datum.coroot(a)) for a in datum.simple_roots])
    M = to_lattice * coroots
    S, U, _ = smith_normal_decomp(M, domain=ZZ)
    rank = sum(1 for i in range(min(S.shape)) if S[i, i] != 0)
    if any(abs(S[i, i]) != 1 for i in range(rank)):
        raise ArithmeticError("pi_1 has torsion; not supported")
    if M.rows - rank != 1:
        raise ArithmeticError("pi_1 is expected to have rank one")
    form = (U * to_lattice)[rank, :]
    form = [int(x) for x in form]
    sign = sum(a * b for a, b in zip(form, datum.fundamental))
    if abs(sign) != 1:
        raise ArithmeticError("fundamental cocharacter does not generate pi_1")
    return tuple(sign * x for x in form)


def build_root_datum(family: Family | str, n: int) -> RootDatum:
    """
    Build the root datum of GL_n (``family='gl'``) or GSp_2n (``family='gsp'``).

    >>> build_root_datum("gsp", 3).positive_roots[:3]
    ((0, 1), (0, 2), (0, 3))
    """
    family = Family(family)
    if n < 2:
        raise ValueError("n must be at least 2")
    N = 2 * n if family is Family.GSP else n

    def canon(i, j):
        if family is Family.GSP:
            return min((i, j), (N - 1 - j, N - 1 - i))
        return (i, j)

    roots = sorted({canon(i, j) for i in range(N) for j in range(N) if i != j})
    positive = [a for a in roots if a[0] < a[1]]
    if family is Family.GSP:
        simple = [canon(i, i + 1) for i in range(n)]
        reflections = [transposition(N, (i, i + 1), (N - i, N + 1 - i))
                       for i in range(1, n)]
        reflections.append(transposition(N, (n, n + 1)))
        fundamental = (1,) * n + (0,) * n
    else:
        simple = [(i, i + 1) for i in range(N - 1)]
        reflections = [transposition(N, (i, i + 1)) for i in range(1, N)]
        fundamental = (1,) + (0,) * (N - 1)
    # s_0 = phi^{e_1 - e_N} (1 N) = (1 N) phi^{e_N - e_1}
    affine_perm = transposition(N, (1, N))
    affine_trans = (-1,) + (0,) * (N - 2) + (1,)
    datum = RootDatum(
        family=family, n=n, N=N,
        roots=tuple(roots), positive_roots=tuple(positive),
        simple_roots=tuple(simple), simple_reflections=tuple(reflections),
        affine_perm=affine_perm, affine_trans=affine_trans,
        fundamental=fundamental,
    )
    object.__setattr__(datum, "_kappa_form", _kappa_form(datum))
    return datum
