"""LY modules, the induced module on U (x) W and the universal A-module presentation.

Matrix convention: for a module map ``M`` on ``U`` with basis ``u_1..u_m``,
``M[s][k]`` is the coefficient of ``u_s`` in ``M(u_k)``; composition is the
matrix product.  Indices in labels and witnesses are 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .algebra import AxiomReport, AxiomResult, InputError, LYAlgebra, LYError, scalar
from .poly import Polynomial
from .universal import Presentation, RelationViolated, format_label, presentation


class DimensionMismatch(LYError, ValueError):
    pass


class NonCommutingImages(LYError):
    def __init__(self, a, b):
        super().__init__(f"images of x{list(a)} and x{list(b)} do not commute")
        self.pair = (a, b)


class UnverifiedMatrixPoint(LYError):
    pass


class NotAModuleMorphism(LYError):
    def __init__(self, witness):
        super().__init__(f"not a module morphism (witness {witness})")
        self.witness = witness


def _mat(m, size: int, where: str) -> tuple:
    rows = tuple(tuple(scalar(x) for x in row) for row in m)
    if len(rows) != size or any(len(r) != size for r in rows):
        raise DimensionMismatch(f"{where}: expected a {size}x{size} matrix")
    return rows


@dataclass(frozen=True)
class LYModule:
    """``(V, rho, D, theta)`` over an LY algebra.  ``rho[i]``, ``D[i][j]`` and
    ``theta[i][j]`` are 0-based containers of ``dim x dim`` matrices."""

    over: LYAlgebra
    dim: int
    rho: tuple
    D: tuple
    theta: tuple

    def __post_init__(self):
        n, m = self.over.dim, self.dim
        if len(self.rho) != n or len(self.D) != n or len(self.theta) != n:
            raise DimensionMismatch("module maps must be indexed by the algebra basis")
        object.__setattr__(self, "rho", tuple(_mat(r, m, f"rho[{i + 1}]") for i, r in enumerate(self.rho)))
        for name in ("D", "theta"):
            table = getattr(self, name)
            if any(len(row) != n for row in table):
                raise DimensionMismatch(f"{name} must be an n x n table")
            object.__setattr__(self, name, tuple(
                tuple(_mat(table[i][j], m, f"{name}[{i + 1},{j + 1}]") for j in range(n)) for i in range(n)
            ))

    def to_json(self, over_ref: str | None = None) -> dict:
        n = self.over.dim

        def enc(mat):
            return [[str(x) for x in row] for row in mat]

        return {
            "over": over_ref,
            "dim": self.dim,
            "rho": [[i + 1, enc(self.rho[i])] for i in range(n)],
            "D": [[i + 1, j + 1, enc(self.D[i][j])] for i in range(n) for j in range(n)],
            "theta": [[i + 1, j + 1, enc(self.theta[i][j])] for i in range(n) for j in range(n)],
        }

    @classmethod
    def from_json(cls, data: Mapping, over: LYAlgebra) -> "LYModule":
        if "dim" not in data:
            raise InputError("missing field", "dim")
        m = data["dim"]
        if not isinstance(m, int) or m < 1:
            raise InputError("must be a positive integer", "dim")
        n = over.dim
        zero = [[0] * m for _ in range(m)]
        rho = [zero] * n
        D = [[zero] * n for _ in range(n)]
        theta = [[zero] * n for _ in range(n)]
        for k, entry in enumerate(data.get("rho") or []):
            try:
                i, mat = entry
                rho[i - 1] = mat
            except (ValueError, TypeError, IndexError):
                raise InputError("expected [i, matrix] with 1 <= i <= n", f"rho[{k}]") from None
        for name, table in (("D", D), ("theta", theta)):
            for k, entry in enumerate(data.get(name) or []):
                try:
                    i, j, mat = entry
                    if not (1 <= i <= n and 1 <= j <= n):
                        raise IndexError
                    table[i - 1][j - 1] = mat
                except (ValueError, TypeError, IndexError):
                    raise InputError("expected [i, j, matrix] with 1 <= i, j <= n", f"{name}[{k}]") from None
        try:
            return cls(over, m, rho, D, theta)
        except (DimensionMismatch, InputError) as exc:
            raise InputError(str(exc), "module") from None


def zero_module(L: LYAlgebra, m: int) -> LYModule:
    z = linalg.zeros(m, m)
    n = L.dim
    return LYModule(L, m, [z] * n, [[z] * n for _ in range(n)], [[z] * n for _ in range(n)])


def self_module(L: LYAlgebra) -> LYModule:
    """``rho(a)b = [a,b]``, ``D(a,b)c = {a,b,c}``, ``theta(a,b)c = {c,a,b}``."""
    n = L.dim
    rho = [linalg.zeros(n, n) for _ in range(n)]
    D = [[linalg.zeros(n, n) for _ in range(n)] for _ in range(n)]
    theta = [[linalg.zeros(n, n) for _ in range(n)] for _ in range(n)]
    for (a, b, s), c in L.tau.items():
        rho[a - 1][s - 1][b - 1] = c
    for (a, b, c, s), x in L.omega.items():
        D[a - 1][b - 1][s - 1][c - 1] = x
        theta[b - 1][c - 1][s - 1][a - 1] = x
    return LYModule(L, n, rho, D, theta)


# ----------------------------------------------------------------- validation


def _lin(maps: Sequence, coeffs: Mapping, m: int):
    out = linalg.zeros(m, m)
    for s, c in coeffs.items():
        out = linalg.add(out, linalg.scale(c, maps[s]))
    return out


def validate_module(M: LYModule) -> AxiomReport:
    """R1-R6 and the derived identity R7 on all basis tuples."""
    L, m, n = M.over, M.dim, M.over.dim
    rho, D, th = M.rho, M.D, M.theta
    mul, sub, add = linalg.matmul, linalg.sub, linalg.add
    br = {k: v for k, v in L._br.items()}
    tri = {k: v for k, v in L._tri.items()}

    def theta_first(coeffs, c):  # theta(sum coeffs e_s, c)
        return _lin([th[s][c] for s in range(n)], coeffs, m)

    def theta_second(a, coeffs):
        return _lin(th[a], coeffs, m)

    def r1(a, b):
        lhs = sub(add(D[a][b], th[a][b]), th[b][a])
        rhs = sub(linalg.commutator(rho[a], rho[b]), _lin(rho, br.get((a, b), {}), m))
        return not linalg.is_zero(sub(lhs, rhs))

    def r2(a, b, c):
        e = add(sub(theta_second(a, br.get((b, c), {})), mul(rho[b], th[a][c])), mul(rho[c], th[a][b]))
        return not linalg.is_zero(e)

    def r3(a, b, c):
        e = add(sub(theta_first(br.get((a, b), {}), c), mul(th[a][c], rho[b])), mul(th[b][c], rho[a]))
        return not linalg.is_zero(e)

    def r4(a, b, c, d):
        e = sub(mul(th[c][d], th[a][b]), mul(th[b][d], th[a][c]))
        e = sub(e, theta_second(a, tri.get((b, c, d), {})))
        e = add(e, mul(D[b][c], th[a][d]))
        return not linalg.is_zero(e)

    def r5(a, b, c):
        e = sub(linalg.commutator(D[a][b], rho[c]), _lin(rho, tri.get((a, b, c), {}), m))
        return not linalg.is_zero(e)

    def r6(a, b, c, d):
        e = linalg.commutator(D[a][b], th[c][d])
        e = sub(e, theta_first(tri.get((a, b, c), {}), d))
        e = sub(e, theta_second(c, tri.get((a, b, d), {})))
        return not linalg.is_zero(e)

    def r7(a, b, c):
        e = linalg.zeros(m, m)
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            e = add(e, _lin([D[s][z] for s in range(n)], br.get((x, y), {}), m))
        return not linalg.is_zero(e)

    results = []
    for name, arity, test in (("R1", 2, r1), ("R2", 3, r2), ("R3", 3, r3), ("R4", 4, r4),
                              ("R5", 3, r5), ("R6", 4, r6), ("R7", 3, r7)):
        wit, count = None, 0
        for t in itertools.product(range(n), repeat=arity):
            count += 1
            if test(*t):
                wit = tuple(i + 1 for i in t)
                break
        results.append(AxiomResult(name, wit is None, wit, count))
    return AxiomReport(results)


# ------------------------------------------------------------- matrix points


@dataclass
class MatrixPoint:
    """Commuting matrices ``X[s,i]`` on ``W`` annihilated by every generator of J."""

    pres: Presentation
    wdim: int
    images: dict  # (s, i) -> wdim x wdim matrix
    verified: bool = False

    def values(self) -> list:
        n, k = self.pres.shape
        return [self.images[(s, i)] for s in range(1, n + 1) for i in range(1, k + 1)]

    def evaluate(self, poly: Polynomial):
        """``poly(X)`` as a matrix."""
        w = self.wdim
        return poly.evaluate_in(
            self.values(), linalg.identity(w), linalg.add, linalg.matmul, linalg.scale
        )


def verify_matrix_point(pres: Presentation, images: Mapping) -> MatrixPoint:
    n, k = pres.shape
    keys = [(s, i) for s in range(1, n + 1) for i in range(1, k + 1)]
    if set(images) != set(keys):
        raise DimensionMismatch("need one image per variable x[s,i]")
    first = images[keys[0]]
    w = len(first)
    imgs = {key: [list(r) for r in _mat(images[key], w, f"x[{key[0]},{key[1]}]")] for key in keys}
    for a, b in itertools.combinations(keys, 2):
        if not linalg.is_zero(linalg.commutator(imgs[a], imgs[b])):
            raise NonCommutingImages(a, b)
    point = MatrixPoint(pres, w, imgs)
    for g in pres.generators:
        if not linalg.is_zero(point.evaluate(g.poly)):
            raise RelationViolated(g.label)
    point.verified = True
    return point


def scalar_matrix_point(pres: Presentation, T) -> MatrixPoint:
    """One-dimensional point ``x[s,i] -> T[s][i]``."""
    n, k = pres.shape
    return verify_matrix_point(pres, {(s, i): [[T[s - 1][i - 1]]] for s in range(1, n + 1) for i in range(1, k + 1)})


def counit_point(pres: Presentation) -> MatrixPoint:
    n, k = pres.shape
    return scalar_matrix_point(pres, [[int(s == i) for i in range(k)] for s in range(n)])


def induced_module(U: LYModule, W: MatrixPoint) -> LYModule:
    """The K-module on ``U (x) W`` (basis ordered by (U index, W index)):
    ``rho(f_p) = sum_i rho_U(e_i) (x) X[i,p]`` and
    ``D(f_p, f_q) = sum_{i,j} D_U(e_i, e_j) (x) X[i,p] X[j,q]``, likewise theta."""
    if not W.verified:
        raise UnverifiedMatrixPoint("matrix point has not been verified")
    pres = W.pres
    if U.over != pres.L:
        raise DimensionMismatch("U must be a module over the presentation's L")
    n, k = pres.shape
    dim = U.dim * W.wdim
    X = W.images
    rho, D, th = [], [], []
    for p in range(1, k + 1):
        acc = linalg.zeros(dim, dim)
        for i in range(1, n + 1):
            acc = linalg.add(acc, linalg.kron(U.rho[i - 1], X[(i, p)]))
        rho.append(acc)
    for p in range(1, k + 1):
        drow, trow = [], []
        for q in range(1, k + 1):
            dacc, tacc = linalg.zeros(dim, dim), linalg.zeros(dim, dim)
            for i, j in itertools.product(range(1, n + 1), repeat=2):
                xx = linalg.matmul(X[(i, p)], X[(j, q)])
                dacc = linalg.add(dacc, linalg.kron(U.D[i - 1][j - 1], xx))
                tacc = linalg.add(tacc, linalg.kron(U.theta[i - 1][j - 1], xx))
            drow.append(dacc)
            trow.append(tacc)
        D.append(drow)
        th.append(trow)
    return LYModule(pres.K, dim, rho, D, th)


def intertwines(W1: MatrixPoint, W2: MatrixPoint, g) -> bool:
    """``g X1[s,i] == X2[s,i] g`` for every variable (an A-module map ``W1 -> W2``)."""
    return all(
        linalg.matmul(g, W1.images[key]) == linalg.matmul(W2.images[key], g) for key in W1.images
    )


def id_tensor(U: LYModule, g) -> list:
    return linalg.kron(linalg.identity(U.dim), g)


def module_maps(M: LYModule):
    """Every structure map of ``M`` with a label, in a fixed order."""
    n = M.over.dim
    for i in range(n):
        yield ("rho", i + 1), M.rho[i]
    for i, j in itertools.product(range(n), repeat=2):
        yield ("D", i + 1, j + 1), M.D[i][j]
    for i, j in itertools.product(range(n), repeat=2):
        yield ("theta", i + 1, j + 1), M.theta[i][j]


def morphism_witness(F, V: LYModule, T: LYModule):
    """First structure map with ``F . map_V != map_T . F``, or ``None``."""
    if V.over != T.over:
        raise DimensionMismatch("modules over different algebras")
    for (label, mv), (_, mt) in zip(module_maps(V), module_maps(T)):
        if linalg.matmul(F, mv) != linalg.matmul(mt, F):
            return label
    return None


# -------------------------------------------------- universal module U(U, V)


@dataclass(frozen=True)
class Relation:
    label: tuple  # ("rho", p, i, r) / ("D", p, i, j, r) / ("theta", p, i, j, r)
    terms: tuple  # ((t, r), Polynomial) pairs, sorted, nonzero

    def format(self) -> str:
        parts = [f"({poly.format()}) * Y[{t},{r}]" for (t, r), poly in self.terms]
        return " + ".join(parts) if parts else "0"


@dataclass
class GammaMap:
    """``v_r -> sum_p u_p (x) y[p,r]``."""

    udim: int
    vdim: int

    def image(self, r: int) -> list:
        return [(p, (p, r)) for p in range(1, self.udim + 1)]

    def format(self) -> list:
        return [
            f"Gamma(v{r}) = " + " + ".join(f"u{p} (x) y[{p},{r}]" for p, _ in self.image(r))
            for r in range(1, self.vdim + 1)
        ]


@dataclass
class ModulePresentation:
    U: LYModule
    V: LYModule
    pres: Presentation
    relations: list

    @property
    def generators(self) -> list:
        return [(s, r) for s in range(1, self.U.dim + 1) for r in range(1, self.V.dim + 1)]

    def is_free(self) -> bool:
        return not self.relations

    @property
    def free_rank(self) -> int | None:
        return len(self.generators) if self.is_free() else None

    def dump_text(self) -> str:
        lines = ["# universal module presentation",
                 "generators: " + " ".join(f"Y[{s},{r}]" for s, r in self.generators),
                 f"relations: {len(self.relations)}"]
        lines += [f"{format_label(rel.label)} = {rel.format()}" for rel in self.relations]
        lines += GammaMap(self.U.dim, self.V.dim).format()
        return "\n".join(lines) + "\n"


def _add_term(acc: dict, key, poly: Polynomial) -> None:
    if key in acc:
        acc[key] = acc[key] + poly
    else:
        acc[key] = poly


def universal_module_presentation(U: LYModule, V: LYModule,
                                  pres: Presentation | None = None) -> tuple[ModulePresentation, GammaMap]:
    """Relations of U(U, V), in family order rho, D, theta and index order within each:

    ``sum_s mu[i,r,s] Y[p,s] - sum_{t,k} gamma[k,t,p] x[k,i] Y[t,r]`` and the
    two quadratic families with ``x[l,i] x[k,j]`` weights.
    """
    L, K = U.over, V.over
    if pres is None:
        pres = presentation(L, K)
    elif pres.L != L or pres.K != K:
        raise DimensionMismatch("presentation does not match the modules' algebras")
    n, k = L.dim, K.dim
    m, d = U.dim, V.dim
    vs = pres.vs
    x = {(s, i): pres.var(s, i) for s in range(1, n + 1) for i in range(1, k + 1)}
    xx = {(l, i, kk, j): x[(l, i)] * x[(kk, j)]
          for l in range(1, n + 1) for i in range(1, k + 1) for kk in range(1, n + 1) for j in range(1, k + 1)}
    rels = []

    def finish(label, acc):
        terms = tuple(sorted(((key, p) for key, p in acc.items() if p.terms), key=lambda kv: kv[0]))
        if terms:
            rels.append(Relation(label, terms))

    for p, i, r in itertools.product(range(1, m + 1), range(1, k + 1), range(1, d + 1)):
        acc: dict = {}
        for s in range(1, d + 1):
            mu = V.rho[i - 1][s - 1][r - 1]
            if mu:
                _add_term(acc, (p, s), vs.const(mu))
        for t in range(1, m + 1):
            for kk in range(1, n + 1):
                gamma = U.rho[kk - 1][p - 1][t - 1]
                if gamma:
                    _add_term(acc, (t, r), -gamma * x[(kk, i)])
        finish(("rho", p, i, r), acc)
    for fam, VT, UT in (("D", V.D, U.D), ("theta", V.theta, U.theta)):
        for p, i, j, r in itertools.product(range(1, m + 1), range(1, k + 1), range(1, k + 1), range(1, d + 1)):
            acc = {}
            for s in range(1, d + 1):
                eta = VT[i - 1][j - 1][s - 1][r - 1]
                if eta:
                    _add_term(acc, (p, s), vs.const(eta))
            for t in range(1, m + 1):
                for l, kk in itertools.product(range(1, n + 1), repeat=2):
                    c = UT[l - 1][kk - 1][p - 1][t - 1]
                    if c:
                        _add_term(acc, (t, r), -c * xx[(l, i, kk, j)])
            finish((fam, p, i, j, r), acc)
    return ModulePresentation(U, V, pres, rels), GammaMap(m, d)


@dataclass
class ModuleMap:
    """``g(y[s,r]) = w[s,r]``; the A-linear map ``U(U, V) -> W``."""

    table: dict  # (s, r) -> vector of length wdim


def _f_matrix(U: LYModule, V: LYModule, w: Mapping, wdim: int) -> list:
    F = linalg.zeros(U.dim * wdim, V.dim)
    for (s, r), vec in w.items():
        for q, c in enumerate(vec):
            F[(s - 1) * wdim + q][r - 1] = Fraction(c)
    return F


def relations_vanish(presn: ModulePresentation, w: Mapping, W: MatrixPoint):
    """First relation label whose image under ``y[s,r] -> w[s,r]`` is nonzero, or ``None``."""
    cache: dict = {}
    for rel in presn.relations:
        total = [Fraction(0)] * W.wdim
        for (t, r), poly in rel.terms:
            if poly not in cache:
                cache[poly] = W.evaluate(poly)
            total = [a + b for a, b in zip(total, linalg.matvec(cache[poly], w[(t, r)]))]
        if any(total):
            return rel.label
    return None


def factor_through(presn: ModulePresentation, w: Mapping, W: MatrixPoint) -> ModuleMap:
    """Factor ``f(v_r) = sum_s u_s (x) w[s,r]`` through Gamma.

    ``f`` is checked to be a K-module morphism ``V -> U (x) W``; then every
    relation is checked to vanish on ``w`` and ``(id (x) g) o Gamma == f`` is
    re-checked."""
    U, V = presn.U, presn.V
    keys = presn.generators
    w = {key: [Fraction(c) for c in w[key]] for key in keys}
    if any(len(v) != W.wdim for v in w.values()):
        raise DimensionMismatch("vectors w[s,r] must have length dim W")
    F = _f_matrix(U, V, w, W.wdim)
    T = induced_module(U, W)
    wit = morphism_witness(F, V, T)
    if wit is not None:
        raise NotAModuleMorphism(wit)
    bad = relations_vanish(presn, w, W)
    if bad is not None:
        raise RelationViolated(bad, "factorization failed on a module morphism")
    g = ModuleMap(dict(w))
    gamma = GammaMap(U.dim, V.dim)
    recomposed = linalg.zeros(U.dim * W.wdim, V.dim)
    for r in range(1, V.dim + 1):
        for p, key in gamma.image(r):
            for q, c in enumerate(g.table[key]):
                recomposed[(p - 1) * W.wdim + q][r - 1] += c
    if recomposed != F:
        raise AssertionError("(id (x) g) o Gamma differs from f")
    return g
