"""Truncated presentations of the commutative Hopf envelope of A(L).

Level ``l`` variables ``x{l}[i,j]`` stand for ``S^l(x[i,j])``.  Because the
envelope is commutative, S is an algebra map and every universal polynomial is
lifted to level ``l`` by the plain substitution ``x -> x{l}``.  Adjacent levels
are tied by ``x{l} x{l+1} = 1 = x{l+1} x{l}`` as matrices, and
``Delta(x{l}[i,j])`` is ``sum_s x{l}[i,s] (x) x{l}[s,j]`` for even ``l`` and
the tensor-reversed sum for odd ``l``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .poly import UNKNOWN, YES, Ideal, Polynomial, Var, VarSet, get_order, normal_form
from .universal import BialgebraPresentation, format_label, tensor_bracket, tensor_triple


def level_tag(level: int) -> str:
    return f"x{{{level}}}"


@dataclass(frozen=True)
class HopfGenerator:
    label: tuple  # ("P", l, a, i, j) / ("Q", l, ...) / ("C", l, i, j) / ("Cbar", l, i, j)
    poly: Polynomial
    level: int  # highest variable level used

    @property
    def name(self) -> str:
        return format_label(self.label)


class HopfPresentation:
    def __init__(self, B: BialgebraPresentation, depth: int):
        if depth < 1:
            raise ValueError("depth must be at least 1")
        self.B = B
        self.depth = depth
        self.n = n = B.n
        self.order = B.pres.order
        self.vs = VarSet(
            Var(level_tag(l), i, j) for l in range(depth + 1) for i in range(1, n + 1) for j in range(1, n + 1)
        )
        self.generators = self._emit()
        self.ideal = Ideal([g.poly for g in self.generators], self.vs)

    def var(self, level: int, i: int, j: int) -> Polynomial:
        return self.vs.var(level_tag(level), i, j)

    def level_map(self, level: int) -> list:
        """Variable positions of ``x[.,.]`` inside the level ``level`` block."""
        nn = self.n * self.n
        return list(range(level * nn, (level + 1) * nn))

    def lift(self, p: Polynomial, level: int) -> Polynomial:
        return p.rename(self.vs, self.level_map(level))

    def _emit(self) -> list:
        n = self.n
        out = []
        for l in range(self.depth + 1):
            for g in self.B.pres.generators:
                out.append(HopfGenerator((g.label[0], l) + g.label[1:], self.lift(g.poly, l), l))
        for l in range(self.depth):
            for i, j in itertools.product(range(1, n + 1), repeat=2):
                c = self.vs.const(-int(i == j))
                cbar = c
                for s in range(1, n + 1):
                    c = c + self.var(l, i, s) * self.var(l + 1, s, j)
                    cbar = cbar + self.var(l + 1, i, s) * self.var(l, s, j)
                out.append(HopfGenerator(("C", l, i, j), c.monic(self.order), l + 1))
                out.append(HopfGenerator(("Cbar", l, i, j), cbar.monic(self.order), l + 1))
        return out

    def convolution_generators(self) -> list:
        return [g for g in self.generators if g.label[0] in ("C", "Cbar")]

    def antipode(self, p: Polynomial) -> Polynomial:
        nn = self.n * self.n
        top = self.depth * nn
        if any(k >= top for k in p.variables_used()):
            raise ValueError("antipode of a top-level variable lies outside the truncation")
        return p.rename(self.vs, [k + nn if k < top else k for k in range(len(self.vs))])

    def epsilon_values(self) -> list:
        return [Fraction(int(i == j)) for _ in range(self.depth + 1)
                for i in range(1, self.n + 1) for j in range(1, self.n + 1)]

    def delta_terms(self, level: int, i: int, j: int) -> list:
        """``((left var), (right var))`` pairs of ``Delta(x{level}[i,j])``."""
        if level % 2 == 0:
            return [((level, i, s), (level, s, j)) for s in range(1, self.n + 1)]
        return [((level, s, j), (level, i, s)) for s in range(1, self.n + 1)]

    def level0_slice(self) -> list:
        """Generators using only level-0 variables, renamed back to ``x[s,i]``."""
        nn = self.n * self.n
        out = []
        for g in self.generators:
            used = g.poly.variables_used()
            if all(k < nn for k in used):
                label = (g.label[0],) + g.label[2:]
                out.append((label, Polynomial(self.B.pres.vs, {m[:nn]: c for m, c in g.poly.terms.items()})))
        return out

    def dump_text(self) -> str:
        order = get_order(self.order)
        lines = ["# hopf envelope presentation", f"depth: {self.depth}", f"order: {order.name}",
                 "variables: " + " ".join(self.vs.names()), f"generators: {len(self.generators)}"]
        lines += [f"{g.name} = {g.poly.format(order)}" for g in self.generators]
        for l in range(self.depth + 1):
            for i, j in itertools.product(range(1, self.n + 1), repeat=2):
                rhs = " + ".join(
                    f"{level_tag(a[0])}[{a[1]},{a[2]}] (x) {level_tag(b[0])}[{b[1]},{b[2]}]"
                    for a, b in self.delta_terms(l, i, j)
                )
                lines.append(f"Delta({level_tag(l)}[{i},{j}]) = {rhs}")
        for l in range(self.depth):
            lines.append(f"S({level_tag(l)}[i,j]) = {level_tag(l + 1)}[i,j]")
        return "\n".join(lines) + "\n"

    def cas_script(self) -> str:
        from .universal import _cas_name, _cas_poly

        names = [_cas_name(v) for v in self.vs]
        body = ",\n".join(f"  {_cas_poly(g.poly, names)}" for g in self.generators)
        return f"ring r = 0, ({', '.join(names)}), dp;\nideal J =\n{body};\nideal G = std(J);\nG;\n"


def hopf_envelope(B: BialgebraPresentation, depth: int = 2) -> HopfPresentation:
    return HopfPresentation(B, depth)


@dataclass
class CheckEntry:
    label: tuple
    status: str
    method: str


@dataclass
class CheckReport:
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.status == YES for e in self.entries)

    @property
    def unknown(self) -> list:
        return [e for e in self.entries if e.status == UNKNOWN]

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "entries": [{"label": format_label(e.label), "status": e.status, "method": e.method}
                            for e in self.entries]}


def _member(H: HopfPresentation, p: Polynomial, degree_cap, plain: list) -> tuple[str, str]:
    if not p.terms:
        return YES, "syntactic"
    if not normal_form(p, plain, H.order).terms:
        return YES, "generators"
    m = H.ideal.contains(p, degree_cap, H.order)
    return m.status, "groebner"


def antipode_check(H: HopfPresentation, degree_cap: int | None = None) -> CheckReport:
    """``S(g)`` lies in the ideal for every generator ``g`` whose level ``l``
    satisfies ``l + 1 <= depth``."""
    plain = [g.poly for g in H.generators]
    entries = []
    for g in H.generators:
        if g.level + 1 > H.depth:
            continue
        status, method = _member(H, H.antipode(g.poly), degree_cap, plain)
        entries.append(CheckEntry(g.label, status, method))
    return CheckReport(entries)


def involution_check(H: HopfPresentation, degree_cap: int | None = None) -> CheckReport:
    """Whether ``x{l+2}[i,j] - x{l}[i,j]`` lies in the ideal (S^2 = id on the truncation)."""
    plain = [g.poly for g in H.generators]
    entries = []
    for l in range(H.depth - 1):
        for i, j in itertools.product(range(1, H.n + 1), repeat=2):
            p = H.var(l + 2, i, j) - H.var(l, i, j)
            status, method = _member(H, p, degree_cap, plain)
            entries.append(CheckEntry(("S2", l, i, j), status, method))
    return CheckReport(entries)


def inverse_matrix_check(H: HopfPresentation, degree_cap: int | None = None) -> CheckReport:
    """``[x{0}] [x{1}] = 1`` entrywise modulo the ideal."""
    plain = [g.poly for g in H.generators]
    entries = []
    for i, j in itertools.product(range(1, H.n + 1), repeat=2):
        p = H.vs.const(-int(i == j))
        for s in range(1, H.n + 1):
            p = p + H.var(0, i, s) * H.var(1, s, j)
        status, method = _member(H, p, degree_cap, plain)
        entries.append(CheckEntry(("X0X1", i, j), status, method))
    return CheckReport(entries)


@dataclass
class CoactionMap:
    H: HopfPresentation

    def image(self, i: int) -> list:
        return [self.H.var(0, s, i) for s in range(1, self.H.n + 1)]

    def verify(self, degree_cap: int | None = None) -> CheckReport:
        """LY-morphism defects of ``e_i -> sum_s e_s (x) x{0}[s,i]`` modulo the ideal."""
        H = self.H
        L = H.B.pres.L
        n = H.n
        level0 = [g.poly for g in H.generators if g.level == 0 and g.label[0] in ("P", "Q")]
        zero = H.vs.zero()
        imgs = [self.image(i) for i in range(1, n + 1)]
        entries = []

        def record(label, d):
            if not d.terms:
                entries.append(CheckEntry(label, YES, "syntactic"))
            elif not normal_form(d, level0, H.order).terms:
                entries.append(CheckEntry(label, YES, "generators"))
            else:
                entries.append(CheckEntry(label, H.ideal.contains(d, degree_cap, H.order).status, "groebner"))

        for i, j in itertools.product(range(n), repeat=2):
            lhs = tensor_bracket(L, imgs[i], imgs[j])
            rhs = [zero] * n
            for u, c in L._br.get((i, j), {}).items():
                rhs = [r + c * x for r, x in zip(rhs, imgs[u])]
            for a in range(n):
                record(("binary", a + 1, i + 1, j + 1), (lhs[a] or zero) - rhs[a])
        for i, j, k in itertools.product(range(n), repeat=3):
            lhs = tensor_triple(L, imgs[i], imgs[j], imgs[k])
            rhs = [zero] * n
            for u, c in L._tri.get((i, j, k), {}).items():
                rhs = [r + c * x for r, x in zip(rhs, imgs[u])]
            for a in range(n):
                record(("ternary", a + 1, i + 1, j + 1, k + 1), (lhs[a] or zero) - rhs[a])
        return CheckReport(entries)


def universal_coaction(H: HopfPresentation) -> CoactionMap:
    return CoactionMap(H)

