"""Automorphisms as invertible scalar points and gradings as points into K[G]."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .algebra import LYAlgebra, LYError, LYLinearMap, morphism_witness
from .poly import compile_polys
from .universal import Presentation, RelationViolated, presentation


class NotADecomposition(LYError):
    pass


class ComponentsDoNotSum(LYError):
    pass


class NonInvertiblePoint(LYError):
    pass


class GroupTooLarge(LYError, ValueError):
    pass


MAX_GROUP_ORDER = 64


# ------------------------------------------------------------- scalar points


def _compiled(pres: Presentation):
    fn = pres.__dict__.get("_compiled_gens")
    if fn is None:
        fn = compile_polys([g.poly for g in pres.generators])
        pres.__dict__["_compiled_gens"] = fn
    return fn


def first_violated(pres: Presentation, M) -> tuple | None:
    """Label of the first generator that does not vanish at ``x[s,i] = M[s][i]``."""
    values = [M[s][i] for s in range(len(M)) for i in range(len(M[0]))]
    for g, v in zip(pres.generators, _compiled(pres)(values)):
        if v:
            return g.label
    return None


@dataclass(frozen=True)
class ScalarPoint:
    """Algebra map ``A(L) -> Q`` with ``T[s][i] = theta(x[s,i])`` (verified)."""

    pres: Presentation = field(compare=False)
    T: tuple

    def zeta(self) -> LYLinearMap:
        """``e_i -> sum_s theta(x[s,i]) e_s``."""
        return LYLinearMap.of(self.T)

    def matrix(self) -> list:
        return [list(r) for r in self.T]


def point_from_matrix(L_or_pres, M) -> ScalarPoint:
    pres = L_or_pres if isinstance(L_or_pres, Presentation) else presentation(L_or_pres)
    n = pres.L.dim
    if len(M) != n or any(len(r) != n for r in M):
        raise ValueError(f"expected a {n}x{n} matrix")
    T = tuple(tuple(Fraction(x) for x in row) for row in M)
    bad = first_violated(pres, T)
    if bad is not None:
        raise RelationViolated(bad)
    return ScalarPoint(pres, T)


def counit(pres: Presentation) -> ScalarPoint:
    n = pres.L.dim
    return point_from_matrix(pres, linalg.identity(n))


def convolution(p1: ScalarPoint, p2: ScalarPoint) -> ScalarPoint:
    """``(p1 * p2)(x[s,j]) = sum_t p1(x[s,t]) p2(x[t,j])``, re-verified."""
    if p1.pres.L != p2.pres.L:
        raise ValueError("points over different presentations")
    return point_from_matrix(p1.pres, linalg.matmul(p1.T, p2.T))


@dataclass
class AutCheck:
    ok: bool
    witness: tuple | None = None


def is_automorphism_direct(L: LYAlgebra, M) -> AutCheck:
    """Invertible and preserving both brackets on every basis pair and triple."""
    if linalg.det(M) == 0:
        return AutCheck(False, ("singular",))
    wit = morphism_witness(L, L, M)
    return AutCheck(wit is None, wit)


@dataclass
class EquivalenceReport:
    direct: bool
    point: bool
    invertible: bool
    inverse_point: bool
    witness: tuple | None = None

    @property
    def via_points(self) -> bool:
        return self.point and self.invertible and self.inverse_point

    @property
    def agree(self) -> bool:
        return self.direct == self.via_points

    def lines(self) -> list:
        yn = lambda b: "yes" if b else "no"  # noqa: E731
        return [f"automorphism: {yn(self.direct)}, point: {yn(self.via_points)}, agreement: {yn(self.agree)}"]


def automorphism_equivalence_check(L: LYAlgebra, M, pres: Presentation | None = None) -> EquivalenceReport:
    """Compare the direct bracket check with (M is a point, invertible, and M^-1 is a point)."""
    pres = pres if pres is not None else presentation(L)
    direct = is_automorphism_direct(L, M)
    is_point = first_violated(pres, M) is None
    inv = linalg.inverse(M)
    inv_point = inv is not None and first_violated(pres, inv) is None
    return EquivalenceReport(direct.ok, is_point, inv is not None, inv_point, direct.witness)


# --------------------------------------------------------------------- groups


@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: tuple

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(d) for d in self.orders))
        if any(d < 1 for d in self.orders):
            raise ValueError("cyclic orders must be positive")

    @classmethod
    def parse(cls, spec: str, cap: int = MAX_GROUP_ORDER) -> "FiniteAbelianGroup":
        """``"2x2"`` for Z/2 x Z/2, ``"3"`` for Z/3."""
        try:
            orders = tuple(int(t) for t in spec.lower().split("x"))
        except ValueError:
            raise ValueError(f"bad group spec {spec!r}") from None
        G = cls(orders)
        if G.order > cap:
            raise GroupTooLarge(f"|G| = {G.order} exceeds the cap {cap}")
        return G

    @property
    def order(self) -> int:
        out = 1
        for d in self.orders:
            out *= d
        return out

    def elements(self) -> list:
        return [tuple(e) for e in itertools.product(*(range(d) for d in self.orders))]

    def zero(self) -> tuple:
        return (0,) * len(self.orders)

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def index(self, a: tuple) -> int:
        k = 0
        for x, d in zip(a, self.orders):
            k = k * d + x
        return k

    def __str__(self) -> str:
        return "x".join(str(d) for d in self.orders)


class GroupAlgebra:
    """``K[G]`` with elements as dense tuples indexed by ``G.elements()``."""

    def __init__(self, G: FiniteAbelianGroup):
        if G.order > MAX_GROUP_ORDER:
            raise GroupTooLarge(f"|G| = {G.order} exceeds the cap {MAX_GROUP_ORDER}")
        self.G = G
        self.els = G.elements()
        self.size = len(self.els)
        self._table = [[G.index(G.add(a, b)) for b in self.els] for a in self.els]

    def zero(self) -> tuple:
        return (Fraction(0),) * self.size

    def one(self) -> tuple:
        return self.basis(self.G.zero())

    def basis(self, g: tuple) -> tuple:
        k = self.G.index(g)
        return tuple(Fraction(int(n == k)) for n in range(self.size))

    def add(self, u, v) -> tuple:
        return tuple(a + b for a, b in zip(u, v))

    def scale(self, c, u) -> tuple:
        return tuple(c * a for a in u)

    def mul(self, u, v) -> tuple:
        out = [Fraction(0)] * self.size
        for a, x in enumerate(u):
            if x:
                row = self._table[a]
                for b, y in enumerate(v):
                    if y:
                        out[row[b]] += x * y
        return tuple(out)

    def counit(self, u) -> Fraction:
        return sum(u, Fraction(0))

    def delta(self, u) -> list:
        """``Delta(g) = g (x) g`` as a ``size x size`` coefficient array."""
        return [[u[a] if a == b else Fraction(0) for b in range(self.size)] for a in range(self.size)]

    @staticmethod
    def tensor(u, v) -> list:
        return [[a * b for b in v] for a in u]


@dataclass
class GroupAlgebraPoint:
    pres: Presentation
    G: FiniteAbelianGroup
    images: dict  # (s, i) -> tuple over G.elements()
    verified: bool = False

    def matrix_component(self, g: tuple) -> list:
        """``T_g[s][i]``: coefficient of ``g`` in ``theta(x[s,i])``."""
        n = self.pres.L.dim
        k = self.G.index(g)
        return [[self.images[(s, i)][k] for i in range(1, n + 1)] for s in range(1, n + 1)]


def verify_group_point(pres: Presentation, G: FiniteAbelianGroup, images: Mapping) -> GroupAlgebraPoint:
    """Relations vanish in K[G]; Delta and counit are compatible."""
    KG = GroupAlgebra(G)
    n = pres.L.dim
    imgs = {(s, i): tuple(Fraction(c) for c in images[(s, i)]) for s in range(1, n + 1) for i in range(1, n + 1)}
    values = [imgs[(s, i)] for s in range(1, n + 1) for i in range(1, n + 1)]
    for g in pres.generators:
        if any(g.poly.evaluate_in(values, KG.one(), KG.add, KG.mul, KG.scale)):
            raise RelationViolated(g.label)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if KG.counit(imgs[(i, j)]) != int(i == j):
                raise RelationViolated(("counit", i, j))
            lhs = KG.delta(imgs[(i, j)])
            rhs = [[Fraction(0)] * KG.size for _ in range(KG.size)]
            for s in range(1, n + 1):
                rhs = linalg.add(rhs, KG.tensor(imgs[(i, s)], imgs[(s, j)]))
            if lhs != rhs:
                raise RelationViolated(("delta", i, j))
    return GroupAlgebraPoint(pres, G, imgs, True)


# ------------------------------------------------------------------- gradings


@dataclass
class Grading:
    """``L = sum_g L_g``.  ``components`` maps group elements to basis rows;
    ``assignment`` (basis index -> element, 0-based list) is set for
    basis-homogeneous gradings."""

    G: FiniteAbelianGroup
    components: dict
    assignment: tuple | None = None

    @classmethod
    def diagonal(cls, G: FiniteAbelianGroup, assignment: Sequence) -> "Grading":
        assignment = tuple(tuple(a) for a in assignment)
        n = len(assignment)
        comps: dict = {}
        for i, g in enumerate(assignment):
            comps.setdefault(g, []).append([Fraction(int(k == i)) for k in range(n)])
        return cls(G, comps, assignment)

    def to_json(self) -> dict:
        out = {"group": list(self.G.orders)}
        if self.assignment is not None:
            out["assignment"] = [[i + 1, list(g)] for i, g in enumerate(self.assignment)]
        else:
            out["components"] = [
                [list(g), [[str(x) for x in row] for row in rows]] for g, rows in sorted(self.components.items())
            ]
        return out


@dataclass
class GradingCheck:
    ok: bool
    witness: tuple | None = None


def validate_grading(L: LYAlgebra, gr: Grading) -> GradingCheck:
    """Direct-sum check, then ``[L_a, L_b] in L_{a+b}`` and ``{L_a, L_b, L_c} in L_{a+b+c}``.

    Witnesses are basis indices for diagonal gradings and
    ``(element, row)`` pairs otherwise."""
    n = L.dim
    G = gr.G
    vecs = []  # (ref, element, vector)
    for g in sorted(gr.components):
        rows = gr.components[g]
        if linalg.rank(rows) != len(rows):
            raise NotADecomposition(f"component {g} is given by dependent rows")
        for k, row in enumerate(rows):
            vecs.append(((g, k + 1), g, [Fraction(x) for x in row]))
    if len(vecs) != n or linalg.rank([v for _, _, v in vecs]) != n:
        raise NotADecomposition("components do not form a direct sum equal to L")
    if gr.assignment is not None:
        vecs = [(i + 1, gr.assignment[i], [Fraction(int(k == i)) for k in range(n)]) for i in range(n)]
    span = {g: [list(r) for r in rows] for g, rows in gr.components.items()}

    def inside(v, g) -> bool:
        return linalg.in_span(span.get(g, []), v)

    for (ra, ga, va), (rb, gb, vb) in itertools.product(vecs, repeat=2):
        if not inside(L.bracket(va, vb), G.add(ga, gb)):
            return GradingCheck(False, (ra, rb))
    for (ra, ga, va), (rb, gb, vb), (rc, gc, vc) in itertools.product(vecs, repeat=3):
        if not inside(L.triple(va, vb, vc), G.add(G.add(ga, gb), gc)):
            return GradingCheck(False, (ra, rb, rc))
    return GradingCheck(True)


def _support_constraints(L: LYAlgebra) -> list:
    """Per basis index k (0-based), constraints whose largest index is k:
    ``(inputs, output)`` meaning ``deg(output) = sum deg(inputs)``."""
    n = L.dim
    by_max = [[] for _ in range(n)]
    seen = set()
    for (i, j, s), c in L.tau.items():
        key = ((i - 1, j - 1), s - 1)
        if key not in seen:
            seen.add(key)
            by_max[max(i, j, s) - 1].append(key)
    for (i, j, k, s), c in L.omega.items():
        key = ((i - 1, j - 1, k - 1), s - 1)
        if key not in seen:
            seen.add(key)
            by_max[max(i, j, k, s) - 1].append(key)
    return by_max


def enumerate_diagonal_gradings(L: LYAlgebra, G: FiniteAbelianGroup) -> list:
    """All basis-homogeneous G-gradings, in lexicographic order of the assignment."""
    n = L.dim
    els = G.elements()
    cons = _support_constraints(L)
    out = []
    assign: list = [None] * n

    def total(idx):
        acc = G.zero()
        for i in idx:
            acc = G.add(acc, assign[i])
        return acc

    def rec(k: int):
        if k == n:
            out.append(Grading.diagonal(G, assign))
            return
        for g in els:
            assign[k] = g
            if all(total(ins) == assign[o] for ins, o in cons[k]):
                rec(k + 1)
        assign[k] = None

    rec(0)
    return out


def grading_to_point(L: LYAlgebra, gr: Grading, pres: Presentation | None = None) -> GroupAlgebraPoint:
    """``theta(x[s,i]) = delta_si g(i)``."""
    if gr.assignment is None:
        raise ValueError("grading_to_point needs a basis-homogeneous grading")
    chk = validate_grading(L, gr)
    if not chk.ok:
        raise NotADecomposition(f"grading fails closure at {chk.witness}")
    pres = pres if pres is not None else presentation(L)
    KG = GroupAlgebra(gr.G)
    n = L.dim
    images = {
        (s, i): (KG.basis(gr.assignment[i - 1]) if s == i else KG.zero())
        for s in range(1, n + 1)
        for i in range(1, n + 1)
    }
    return verify_group_point(pres, gr.G, images)


def point_to_grading(theta: GroupAlgebraPoint) -> Grading:
    """``L_g = {c : T_h c = delta_{hg} c for all h}`` with ``T_h[s][i]`` the
    ``h``-coefficient of ``theta(x[s,i])``."""
    G = theta.G
    n = theta.pres.L.dim
    Ts = {h: theta.matrix_component(h) for h in G.elements()}
    comps = {}
    for g in G.elements():
        stacked = []
        for h, T in Ts.items():
            stacked += linalg.sub(T, linalg.identity(n)) if h == g else T
        basis = linalg.nullspace(stacked, n)
        if basis:
            comps[g] = linalg.row_basis(basis)
    if sum(len(b) for b in comps.values()) != n or linalg.rank([r for b in comps.values() for r in b]) != n:
        raise ComponentsDoNotSum("components of the point do not sum to L")
    assignment = [None] * n
    for g, rows in comps.items():
        for row in rows:
            nz = [k for k, x in enumerate(row) if x]
            if len(nz) != 1:
                return Grading(G, comps)
            assignment[nz[0]] = g
    return Grading(G, comps, tuple(assignment))


def conjugate_point(theta: GroupAlgebraPoint, u: ScalarPoint) -> GroupAlgebraPoint:
    """``u * theta * u^-1``: entrywise ``U Theta U^-1`` over K[G]."""
    U = [list(r) for r in u.T]
    Uinv = linalg.inverse(U)
    if Uinv is None:
        raise NonInvertiblePoint("matrix of u is singular")
    if first_violated(theta.pres, Uinv) is not None:
        raise NonInvertiblePoint("inverse matrix is not a point")
    KG = GroupAlgebra(theta.G)
    n = theta.pres.L.dim
    images = {}
    for s in range(1, n + 1):
        for i in range(1, n + 1):
            acc = KG.zero()
            for a in range(1, n + 1):
                if not U[s - 1][a - 1]:
                    continue
                for b in range(1, n + 1):
                    c = U[s - 1][a - 1] * Uinv[b - 1][i - 1]
                    if c:
                        acc = KG.add(acc, KG.scale(c, theta.images[(a, b)]))
            images[(s, i)] = acc
    return verify_group_point(theta.pres, theta.G, images)
