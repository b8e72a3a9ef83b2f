"""Sparse multivariate polynomials over Q, monomial orders, division and Buchberger."""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence


# ------------------------------------------------------------------ variables


@dataclass(frozen=True, order=True)
class Var:
    """Variable descriptor.  ``tag`` is ``"x"``, ``"xL"``, ``"xR"``, ``"x{l}"``
    or any bare name; ``row``/``col`` are 1-based or ``None`` for bare names."""

    tag: str
    row: int | None = None
    col: int | None = None

    def __str__(self) -> str:
        if self.row is None:
            return self.tag
        return f"{self.tag}[{self.row},{self.col}]"


class VarSet:
    """An ordered, immutable list of distinct variables.  In every monomial
    order the first variable is the largest."""

    __slots__ = ("vars", "_index")

    def __init__(self, variables: Iterable[Var]):
        self.vars = tuple(variables)
        self._index = {v: n for n, v in enumerate(self.vars)}
        if len(self._index) != len(self.vars):
            raise ValueError("duplicate variables in VarSet")

    @classmethod
    def matrix(cls, tag: str, rows: int, cols: int) -> "VarSet":
        return cls(Var(tag, s, i) for s in range(1, rows + 1) for i in range(1, cols + 1))

    @classmethod
    def named(cls, names: Iterable[str]) -> "VarSet":
        return cls(Var(n) for n in names)

    def __len__(self) -> int:
        return len(self.vars)

    def __iter__(self):
        return iter(self.vars)

    def __eq__(self, other) -> bool:
        return isinstance(other, VarSet) and self.vars == other.vars

    def __hash__(self) -> int:
        return hash(self.vars)

    def __add__(self, other: "VarSet") -> "VarSet":
        return VarSet(self.vars + other.vars)

    def index(self, v: Var) -> int:
        return self._index[v]

    def __contains__(self, v: Var) -> bool:
        return v in self._index

    def var(self, tag_or_var, row: int | None = None, col: int | None = None) -> "Polynomial":
        v = tag_or_var if isinstance(tag_or_var, Var) else Var(tag_or_var, row, col)
        n = self._index[v]
        e = [0] * len(self.vars)
        e[n] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list:
        return [self.var(v) for v in self.vars]

    def const(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {self.one_exp(): c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one_exp(self) -> tuple:
        return (0,) * len(self.vars)

    def names(self) -> list:
        return [str(v) for v in self.vars]


# ------------------------------------------------------------ monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    name: str
    key: Callable  # larger key = larger monomial
    negkey: Callable  # min-heap key: smallest negkey = largest monomial

    def __repr__(self) -> str:
        return f"MonomialOrder({self.name})"


def _drl_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _drl_neg(e):
    return (-sum(e), tuple(reversed(e)))


def _lex_key(e):
    return e


def _lex_neg(e):
    return tuple(-x for x in e)


DEGREVLEX = MonomialOrder("degrevlex", _drl_key, _drl_neg)
LEX = MonomialOrder("lex", _lex_key, _lex_neg)
ORDERS = {"degrevlex": DEGREVLEX, "lex": LEX}


def get_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


# --------------------------------------------------------------- polynomials


def _madd(a: tuple, b: tuple) -> tuple:
    return tuple([x + y for x, y in zip(a, b)])


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _coprime(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class MixedVarSets(ValueError):
    pass


class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero Fractions."""

    __slots__ = ("vs", "terms", "_hash")

    def __init__(self, vs: VarSet, terms: Mapping[tuple, Fraction]):
        self.vs = vs
        self.terms = terms
        self._hash = None

    # construction helpers
    @staticmethod
    def _clean(vs: VarSet, d: dict) -> "Polynomial":
        return Polynomial(vs, {m: Fraction(c) for m, c in d.items() if c})

    def _check(self, other: "Polynomial") -> None:
        if self.vs is not other.vs and self.vs != other.vs:
            raise MixedVarSets("polynomials over different VarSets")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.vs.const(other)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.vs, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vs, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial(self.vs, {})
            return Polynomial(self.vs, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _madd(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.vs, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = self.vs.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, mono: tuple, coeff) -> "Polynomial":
        return Polynomial(self.vs, {_madd(m, mono): c * coeff for m, c in self.terms.items()} if coeff else {})

    # comparison
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.vs.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vs == other.vs and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vs, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    # inspection
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self, order=DEGREVLEX) -> list:
        key = get_order(order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order=DEGREVLEX) -> tuple:
        key = get_order(order).key
        return max(self.terms, key=key)

    def leading_coefficient(self, order=DEGREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order=DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        return self if lc == 1 else self * (1 / lc)

    def variables_used(self) -> set:
        return {n for m in self.terms for n, e in enumerate(m) if e}

    def coefficient(self, mono: tuple) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    # substitution / evaluation
    def substitute(self, images: Sequence["Polynomial"], target: VarSet | None = None) -> "Polynomial":
        """Replace variable ``n`` by ``images[n]`` (all over ``target``)."""
        if target is None:
            target = images[0].vs if images else self.vs
        cache: dict = {}

        def power(n: int, e: int) -> Polynomial:
            key = (n, e)
            if key not in cache:
                cache[key] = images[n] ** e
            return cache[key]

        total: dict = {}
        for m, c in self.terms.items():
            term = target.const(c)
            for n, e in enumerate(m):
                if e:
                    term = term * power(n, e)
            for k, v in term.terms.items():
                s = total.get(k, 0) + v
                if s:
                    total[k] = s
                else:
                    total.pop(k, None)
        return Polynomial(target, total)

    def rename(self, target: VarSet, mapping: Sequence[int]) -> "Polynomial":
        """Move to ``target`` sending variable ``n`` to variable ``mapping[n]``."""
        width = len(target)
        out = {}
        for m, c in self.terms.items():
            e = [0] * width
            for n, k in enumerate(m):
                if k:
                    e[mapping[n]] += k
            out[tuple(e)] = c
        return Polynomial(target, out)

    def evaluate(self, values: Sequence):
        """Evaluate at scalar values (one per variable)."""
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in zip(values, m):
                if e:
                    t = t * v ** e
            total += t
        return Fraction(total)

    def evaluate_in(self, values: Sequence, one, add: Callable, mul: Callable, scale: Callable):
        """Evaluate in an arbitrary commutative ring given by its operations."""
        total = None
        for m, c in self.sorted_terms():
            t = None
            for n, e in enumerate(m):
                for _ in range(e):
                    t = values[n] if t is None else mul(t, values[n])
            t = scale(c, one if t is None else t)
            total = t if total is None else add(total, t)
        return scale(0, one) if total is None else total

    # text
    def format(self, order=DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        names = self.vs.names()
        parts = []
        for n, (m, c) in enumerate(self.sorted_terms(order)):
            factors = []
            for k, e in enumerate(m):
                if e:
                    factors.append(names[k] if e == 1 else f"{names[k]}^{e}")
            mag = abs(c)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((f"-{body}" if sign == "-" else body) if n == 0 else f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.format()!r})"


_FACTOR_RE = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z_0-9{}]*(?:\[\s*\d+\s*,\s*\d+\s*\])?)(?:\^(?P<exp>\d+))?$")
_VAR_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9{}]*)\[\s*(\d+)\s*,\s*(\d+)\s*\]$")


def parse_var(text: str) -> Var:
    m = _VAR_RE.match(text.strip())
    if m:
        return Var(m.group(1), int(m.group(2)), int(m.group(3)))
    return Var(text.strip())


def parse_polynomial(text: str, vs: VarSet) -> Polynomial:
    """Parse the sum-of-terms text format, e.g. ``x[1,1]*x[2,2] - 3/2*x[1,2]^2 + 1``."""
    s = text.strip()
    if s == "0":
        return vs.zero()
    # split on top-level +/- (not inside brackets)
    terms, depth, cur, sign = [], 0, "", 1
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in "+-" and depth == 0:
            if cur.strip():
                terms.append((sign, cur.strip()))
            sign = -1 if ch == "-" else 1
            cur = ""
        else:
            cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    total: dict = {}
    for sign, body in terms:
        coeff = Fraction(sign)
        e = [0] * len(vs)
        for factor in body.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError(f"cannot parse factor {factor!r}")
            v = parse_var(fm.group("name"))
            if v not in vs:
                raise ValueError(f"unknown variable {v}")
            e[vs.index(v)] += int(fm.group("exp") or 1)
        key = tuple(e)
        total[key] = total.get(key, 0) + coeff
    return Polynomial._clean(vs, total)


# ----------------------------------------------------------------- division


class _Reducer:
    """Monic divisors with cached leading data for repeated division."""

    def __init__(self, polys: Sequence[Polynomial], order: MonomialOrder):
        self.order = order
        self.items = []
        for p in polys:
            if not p.terms:
                continue
            lm = p.leading_monomial(order)
            lc = p.terms[lm]
            tail = [(m, c / lc) for m, c in p.terms.items() if m != lm]
            mask = sum(1 << n for n, e in enumerate(lm) if e)
            self.items.append((lm, mask, tail, lc))

    def find(self, m: tuple, mmask: int):
        for idx, (lm, mask, tail, lc) in enumerate(self.items):
            if mask & ~mmask == 0 and _divides(lm, m):
                return idx
        return None


def _mask(m: tuple) -> int:
    return sum(1 << n for n, e in enumerate(m) if e)


def _reduce(p: Mapping, red: _Reducer, quotients: list | None = None) -> dict:
    """Full reduction of ``p``; quotient terms recorded per divisor if asked."""
    negkey = red.order.negkey
    work = dict(p)
    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        idx = red.find(m, _mask(m))
        if idx is None:
            rem[m] = c
            continue
        lm, _, tail, lc = red.items[idx]
        q = tuple([a - b for a, b in zip(m, lm)])
        if quotients is not None:
            qd = quotients[idx]
            v = qd.get(q, 0) + c / lc
            if v:
                qd[q] = v
            else:
                qd.pop(q, None)
        for tm, tc in tail:
            mm = tuple([a + b for a, b in zip(tm, q)])
            v = work.get(mm)
            if v is None:
                work[mm] = -c * tc
                heapq.heappush(heap, (negkey(mm), mm))
            else:
                v -= c * tc
                if v:
                    work[mm] = v
                else:
                    del work[mm]
    return rem


def normal_form(p: Polynomial, G: Sequence[Polynomial], order=DEGREVLEX) -> Polynomial:
    """Remainder of ``p`` on division by ``G`` (first divisor in list order wins)."""
    for g in G:
        p._check(g)
    return Polynomial(p.vs, _reduce(p.terms, _Reducer(G, get_order(order))))


def division(p: Polynomial, G: Sequence[Polynomial], order=DEGREVLEX) -> tuple[list, Polynomial]:
    """``(quotients, remainder)`` with ``p = sum q_i G_i + remainder`` exactly."""
    order = get_order(order)
    for g in G:
        p._check(g)
    nonzero = [n for n, g in enumerate(G) if g.terms]
    red = _Reducer([G[n] for n in nonzero], order)
    qs = [dict() for _ in nonzero]
    rem = _reduce(p.terms, red, qs)
    quotients = [p.vs.zero() for _ in G]
    for k, n in enumerate(nonzero):
        quotients[n] = Polynomial._clean(p.vs, qs[k])
    return quotients, Polynomial(p.vs, rem)


# -------------------------------------------------------------- Buchberger


@dataclass
class GroebnerResult:
    basis: list
    complete: bool
    order: MonomialOrder
    degree_cap: int
    # representation[i][j]: coefficient of input generator j in basis[i]
    representation: list | None = None
    skipped_pairs: int = 0


def default_degree_cap(gens: Sequence[Polynomial]) -> int:
    return 2 * max((g.degree() for g in gens), default=0) + 2


def buchberger(gens: Sequence[Polynomial], order=DEGREVLEX, degree_cap: int | None = None,
               track: bool = False) -> GroebnerResult:
    """Buchberger completion with the normal selection strategy and the
    Gebauer-Moeller pair criteria.  S-pairs whose lcm degree exceeds
    ``degree_cap`` are not processed and the result is flagged incomplete.
    The returned basis is monic, inter-reduced and sorted by leading monomial."""
    order = get_order(order)
    gens = [g for g in gens if g.terms]
    if degree_cap is None:
        degree_cap = default_degree_cap(gens)
    if not gens:
        return GroebnerResult([], True, order, degree_cap, [] if track else None)
    vs = gens[0].vs
    for g in gens:
        gens[0]._check(g)
    ngen = len(gens)
    key = order.key

    polys: list = []  # monic dicts
    lms: list = []
    reps: list = []  # per poly: list of ngen Polynomials (or None)
    active: list = []  # indices currently in G, in insertion order
    pairs: dict = {}  # (i, j) -> lcm

    def add(p: dict, rep):
        h = len(polys)
        lm = max(p, key=key)
        lc = p[lm]
        if lc != 1:
            p = {m: c / lc for m, c in p.items()}
            if rep is not None:
                rep = [r * (1 / lc) for r in rep]
        polys.append(p)
        lms.append(lm)
        reps.append(rep)
        _update(h)

    def _update(h: int):
        lmh = lms[h]
        cand = [(g, _lcm(lmh, lms[g])) for g in active]
        kept = []
        for n, (g1, l1) in enumerate(cand):
            if _coprime(lmh, lms[g1]):
                kept.append((g1, l1))
                continue
            dominated = any(_divides(l2, l1) for (g2, l2) in cand[n + 1:]) or any(
                _divides(l2, l1) for (g2, l2) in kept
            )
            if not dominated:
                kept.append((g1, l1))
        new_pairs = [(g, l) for g, l in kept if not _coprime(lmh, lms[g])]
        for (a, b), l in list(pairs.items()):
            if _divides(lmh, l) and _lcm(lms[a], lmh) != l and _lcm(lmh, lms[b]) != l:
                del pairs[(a, b)]
        for g, l in new_pairs:
            pairs[(g, h)] = l
        active[:] = [g for g in active if not _divides(lmh, lms[g])]
        active.append(h)

    for n, g in enumerate(sorted(range(ngen), key=lambda k: key(gens[k].leading_monomial(order)))):
        rep = None
        if track:
            rep = [vs.zero() for _ in range(ngen)]
            rep[g] = vs.const(1)
        add(dict(gens[g].terms), rep)

    skipped = 0
    while pairs:
        (i, j), l = min(pairs.items(), key=lambda kv: (sum(kv[1]), key(kv[1]), kv[0]))
        if sum(l) > degree_cap:
            skipped = len(pairs)
            break
        del pairs[(i, j)]
        ui = tuple(a - b for a, b in zip(l, lms[i]))
        uj = tuple(a - b for a, b in zip(l, lms[j]))
        s: dict = {}
        for m, c in polys[i].items():
            mm = _madd(m, ui)
            s[mm] = s.get(mm, 0) + c
        for m, c in polys[j].items():
            mm = _madd(m, uj)
            v = s.get(mm, 0) - c
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)
        reducers = [Polynomial(vs, polys[k]) for k in active]
        red = _Reducer(reducers, order)
        qs = [dict() for _ in active] if track else None
        r = _reduce(s, red, qs)
        if not r:
            continue
        rep = None
        if track:
            rep = [
                reps[i][t].mul_term(ui, 1) - reps[j][t].mul_term(uj, 1) for t in range(ngen)
            ]
            for k, q in zip(active, qs):
                if q:
                    qp = Polynomial._clean(vs, q)
                    rep = [rep[t] - qp * reps[k][t] for t in range(ngen)]
        add(r, rep)

    basis, brep = _interreduce(vs, [polys[k] for k in active], [reps[k] for k in active], order, track)
    return GroebnerResult(basis, skipped == 0, order, degree_cap, brep, skipped)


def _interreduce(vs, polys, reps, order, track):
    key = order.key
    idx = sorted(range(len(polys)), key=lambda k: key(max(polys[k], key=key)))
    polys = [polys[k] for k in idx]
    reps = [reps[k] for k in idx]
    lms = [max(p, key=key) for p in polys]
    keep = [
        k for k in range(len(polys))
        if not any(j != k and _divides(lms[j], lms[k]) and (lms[j] != lms[k] or j < k) for j in range(len(polys)))
    ]
    polys = [polys[k] for k in keep]
    reps = [reps[k] for k in keep]
    out, outrep = [], []
    for k, p in enumerate(polys):
        others = [Polynomial(vs, polys[j]) for j in range(len(polys)) if j != k]
        red = _Reducer(others, order)
        lm = max(p, key=key)
        tail = {m: c for m, c in p.items() if m != lm}
        qs = [dict() for _ in others] if track else None
        r = _reduce(tail, red, qs)
        r[lm] = p[lm]
        out.append(Polynomial._clean(vs, r).monic(order))
        if track:
            ngen = len(reps[k])
            others_idx = [j for j in range(len(polys)) if j != k]
            rep = list(reps[k])
            for j, q in zip(others_idx, qs):
                if q:
                    qp = Polynomial._clean(vs, q)
                    rep = [rep[t] - qp * reps[j][t] for t in range(ngen)]
            outrep.append(rep)
    # reducing tails by the original (not yet reduced) others is sound: the
    # leading monomials are unchanged, so the result is the reduced basis
    return out, (outrep if track else None)


# ------------------------------------------------------------------- ideals


YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass
class Membership:
    status: str
    remainder: Polynomial
    cofactors: list | None = None  # one per ideal generator

    def __bool__(self) -> bool:
        return self.status == YES


@dataclass
class Ideal:
    """Ideal given by generators; Groebner bases are cached per (order, cap, track)."""

    gens: tuple
    vs: VarSet
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __init__(self, gens: Iterable[Polynomial], vs: VarSet | None = None):
        self.gens = tuple(gens)
        if vs is None:
            if not self.gens:
                raise ValueError("an empty ideal needs an explicit VarSet")
            vs = self.gens[0].vs
        self.vs = vs
        for g in self.gens:
            if g.vs != vs:
                raise MixedVarSets("generator over a different VarSet")
        self._cache = {}

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.gens + tuple(extra), self.vs)

    def groebner(self, order=DEGREVLEX, degree_cap: int | None = None, track: bool = False) -> GroebnerResult:
        order = get_order(order)
        if degree_cap is None:
            degree_cap = default_degree_cap(self.gens)
        k = (order.name, degree_cap, track)
        if k not in self._cache:
            if not track and (order.name, degree_cap, True) in self._cache:
                return self._cache[(order.name, degree_cap, True)]
            self._cache[k] = buchberger(self.gens, order, degree_cap, track)
        return self._cache[k]

    def contains(self, p: Polynomial, degree_cap: int | None = None, order=DEGREVLEX,
                 cofactors: bool = False) -> Membership:
        return ideal_contains(p, self, degree_cap, order, cofactors)


def ideal_contains(p: Polynomial, ideal: Ideal, degree_cap: int | None = None, order=DEGREVLEX,
                   cofactors: bool = False) -> Membership:
    """``yes`` when ``p`` reduces to zero modulo a (possibly partial) Groebner
    basis; ``no`` only against a complete basis; ``unknown`` otherwise.
    With ``cofactors=True`` a ``yes`` carries ``c`` with ``sum c_i g_i == p``."""
    order = get_order(order)
    if not p.terms:
        return Membership(YES, p, [ideal.vs.zero() for _ in ideal.gens] if cofactors else None)
    gb = ideal.groebner(order, degree_cap, track=cofactors)
    if cofactors:
        qs, r = division(p, gb.basis, order)
    else:
        r = normal_form(p, gb.basis, order)
    if r.terms:
        return Membership(NO if gb.complete else UNKNOWN, r)
    cof = None
    if cofactors:
        cof = [p.vs.zero() for _ in ideal.gens]
        for q, rep in zip(qs, gb.representation):
            if q.terms:
                for t in range(len(ideal.gens)):
                    if rep[t].terms:
                        cof[t] = cof[t] + q * rep[t]
        check = p.vs.zero()
        for c, g in zip(cof, ideal.gens):
            check = check + c * g
        if check != p:
            raise AssertionError("cofactor certificate does not reproduce the polynomial")
    return Membership(YES, r, cof)


# -------------------------------------------------------- fast evaluation


def compile_polys(polys: Sequence[Polynomial]) -> Callable[[Sequence], list]:
    """Return ``f(values) -> [p(values) for p in polys]``; exact for int or
    Fraction inputs, with integer arithmetic kept integral where possible."""
    plan = []
    for p in polys:
        terms = []
        for m, c in p.terms.items():
            factors = tuple((n, e) for n, e in enumerate(m) if e)
            c = int(c) if c.denominator == 1 else c
            terms.append((c, factors))
        plan.append(terms)

    def run(values: Sequence) -> list:
        out = []
        for terms in plan:
            total = 0
            for c, factors in terms:
                t = c
                for n, e in factors:
                    v = values[n]
                    t = t * (v if e == 1 else v ** e)
                    if not t:
                        break
                total += t
            out.append(total)
        return out

    return run
