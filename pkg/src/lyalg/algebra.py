"""Lie-Yamaguti algebras and finite-dimensional commutative algebras by structure constants.

Indices are 1-based throughout.  Structure constants are stored sparsely and
*redundantly*: an antisymmetric pair is stored as both ``(i, j)`` and ``(j, i)``
entries, and nothing is canonicalized on construction, so that an invalid
algebra (for a counterexample test, say) can be built and then rejected by
:func:`validate_lya`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import linalg


class LYError(Exception):
    """Base class for mathematical errors raised by this package."""


class IndexOutOfRange(LYError, ValueError):
    pass


class InputError(ValueError):
    """Malformed input file or value; ``where`` names the offending field."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


class _WitnessError(LYError):
    def __init__(self, message: str, witness=None):
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


class NotALieAlgebra(_WitnessError):
    pass


class NotALeibnizAlgebra(_WitnessError):
    pass


class NotAMalcevAlgebra(_WitnessError):
    pass


class InvalidCommAlgebra(_WitnessError):
    pass


def scalar(x) -> Fraction:
    """Parse an exact scalar: int, Fraction, ``"num/den"`` or a decimal string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a scalar: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational scalar: {x!r}") from exc
    if isinstance(x, float):
        raise InputError(f"floats are not exact; pass {x!r} as a string")
    raise InputError(f"not a scalar: {x!r}")


def format_scalar(c: Fraction) -> str:
    return str(c)


def _sparse(entries: Mapping | Iterable, arity: int, what: str) -> dict:
    items = entries.items() if isinstance(entries, Mapping) else ((tuple(e[:-1]), e[-1]) for e in entries)
    out: dict = {}
    for key, val in items:
        key = tuple(int(k) for k in key)
        if len(key) != arity:
            raise InputError(f"expected {arity} indices, got {key}", what)
        c = scalar(val)
        if c:
            out[key] = out.get(key, 0) + c
            if not out[key]:
                del out[key]
    return out


@dataclass(frozen=True)
class LYAlgebra:
    """A Lie-Yamaguti algebra ``[e_i, e_j] = sum tau[i,j,s] e_s``,
    ``{e_i, e_j, e_k} = sum omega[i,j,k,s] e_s``."""

    dim: int
    tau: Mapping[tuple, Fraction] = field(default_factory=dict)
    omega: Mapping[tuple, Fraction] = field(default_factory=dict)
    labels: tuple | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "tau", _sparse(self.tau, 3, "tau"))
        object.__setattr__(self, "omega", _sparse(self.omega, 4, "omega"))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.dim:
                raise InputError("label count does not match dim", "labels")
        for key in itertools.chain(self.tau, self.omega):
            if not all(1 <= k <= self.dim for k in key):
                raise IndexOutOfRange(f"structure-constant index {key} outside 1..{self.dim}")

    # sparse lookups, keyed by 0-based input tuples
    @cached_property
    def _br(self) -> dict:
        out: dict = {}
        for (i, j, s), c in self.tau.items():
            out.setdefault((i - 1, j - 1), {})[s - 1] = c
        return out

    @cached_property
    def _tri(self) -> dict:
        out: dict = {}
        for (i, j, k, s), c in self.omega.items():
            out.setdefault((i - 1, j - 1, k - 1), {})[s - 1] = c
        return out

    def label(self, i: int) -> str:
        """Name of basis vector ``i`` (1-based)."""
        return self.labels[i - 1] if self.labels else f"e{i}"

    # products of sparse vectors {index0: coeff}
    def sbracket(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        br = self._br
        for i, a in u.items():
            for j, b in v.items():
                row = br.get((i, j))
                if row:
                    ab = a * b
                    for s, c in row.items():
                        out[s] = out.get(s, 0) + ab * c
        return {k: x for k, x in out.items() if x}

    def striple(self, u: Mapping, v: Mapping, w: Mapping) -> dict:
        out: dict = {}
        tri = self._tri
        for i, a in u.items():
            for j, b in v.items():
                for k, c in w.items():
                    row = tri.get((i, j, k))
                    if row:
                        abc = a * b * c
                        for s, d in row.items():
                            out[s] = out.get(s, 0) + abc * d
        return {k: x for k, x in out.items() if x}

    # dense coordinate vectors
    def bracket(self, u: Sequence, v: Sequence) -> list:
        r = self.sbracket(_to_sparse(u), _to_sparse(v))
        return [r.get(s, Fraction(0)) for s in range(self.dim)]

    def triple(self, u: Sequence, v: Sequence, w: Sequence) -> list:
        r = self.striple(_to_sparse(u), _to_sparse(v), _to_sparse(w))
        return [r.get(s, Fraction(0)) for s in range(self.dim)]

    def tau_vec(self, i: int, j: int) -> list:
        row = self._br.get((i - 1, j - 1), {})
        return [row.get(s, Fraction(0)) for s in range(self.dim)]

    def omega_vec(self, i: int, j: int, k: int) -> list:
        row = self._tri.get((i - 1, j - 1, k - 1), {})
        return [row.get(s, Fraction(0)) for s in range(self.dim)]

    def is_abelian(self) -> bool:
        return not self.tau and not self.omega

    def with_constant(self, kind: str, key: tuple, value) -> "LYAlgebra":
        """Copy with one structure constant replaced (used to build counterexamples)."""
        tau, omega = dict(self.tau), dict(self.omega)
        table = tau if kind == "tau" else omega
        table[tuple(key)] = scalar(value)
        if not table[tuple(key)]:
            del table[tuple(key)]
        return LYAlgebra(self.dim, tau, omega, self.labels)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "tau": [[*k, format_scalar(c)] for k, c in sorted(self.tau.items())],
            "omega": [[*k, format_scalar(c)] for k, c in sorted(self.omega.items())],
            "labels": list(self.labels) if self.labels else None,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LYAlgebra":
        if not isinstance(data, Mapping):
            raise InputError("expected a JSON object", "algebra")
        if "dim" not in data:
            raise InputError("missing field", "dim")
        dim = data["dim"]
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise InputError(f"must be a positive integer, got {dim!r}", "dim")
        tables = {}
        for name, arity in (("tau", 3), ("omega", 4)):
            rows = data.get(name) or []
            if not isinstance(rows, list):
                raise InputError("expected a list of entries", name)
            for n, row in enumerate(rows):
                if not isinstance(row, list) or len(row) != arity + 1:
                    raise InputError(f"expected {arity} indices and a scalar", f"{name}[{n}]")
                if not all(isinstance(k, int) and not isinstance(k, bool) for k in row[:-1]):
                    raise InputError("indices must be integers", f"{name}[{n}]")
                if not all(1 <= k <= dim for k in row[:-1]):
                    raise InputError(f"index outside 1..{dim}", f"{name}[{n}]")
                try:
                    scalar(row[-1])
                except InputError as exc:
                    raise InputError(str(exc), f"{name}[{n}]") from None
            tables[name] = rows
        labels = data.get("labels")
        if labels is not None and (not isinstance(labels, list) or len(labels) != dim):
            raise InputError("must be a list of dim names", "labels")
        return cls(dim, tables["tau"], tables["omega"], labels)


def _to_sparse(v: Sequence) -> dict:
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def _add(*vs: Mapping, signs: Sequence[int] | None = None) -> dict:
    out: dict = {}
    for n, v in enumerate(vs):
        sg = signs[n] if signs else 1
        for k, x in v.items():
            out[k] = out.get(k, 0) + sg * x
    return {k: x for k, x in out.items() if x}


def _e(i: int) -> dict:
    return {i: Fraction(1)}


# ---------------------------------------------------------------- validation


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None = None
    checked: int = 0


@dataclass
class AxiomReport:
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "axioms": [
                {"axiom": r.name, "passed": r.passed, "checked": r.checked,
                 "witness": list(r.witness) if r.witness else None}
                for r in self.results
            ],
        }

    def lines(self, label=None) -> list:
        out = []
        for r in self.results:
            w = ""
            if r.witness:
                w = " witness (" + ", ".join(label(i) if label else str(i) for i in r.witness) + ")"
            out.append(f"{r.name}: {'pass' if r.passed else 'FAIL'}{w}")
        return out


def _first_failure(tuples, test) -> tuple[bool, tuple | None, int]:
    n = 0
    for t in tuples:
        n += 1
        if test(*t):
            return False, tuple(i + 1 for i in t), n
    return True, None, n


def validate_lya(L: LYAlgebra) -> AxiomReport:
    """Check LY1-LY6 on every basis tuple; each failure carries the
    lexicographically first failing tuple (1-based)."""
    n = L.dim
    for key in itertools.chain(L.tau, L.omega):
        if not all(1 <= k <= n for k in key):
            raise IndexOutOfRange(f"index {key} outside 1..{n}")
    br, tr = L.sbracket, L.striple
    rng = range(n)

    def ly1(a, b):
        return bool(_add(br(_e(a), _e(b)), br(_e(b), _e(a))))

    def ly2(a, b, c):
        return bool(_add(tr(_e(a), _e(b), _e(c)), tr(_e(b), _e(a), _e(c))))

    def ly3(a, b, c):
        ea, eb, ec = _e(a), _e(b), _e(c)
        return bool(_add(
            br(br(ea, eb), ec), tr(ea, eb, ec),
            br(br(eb, ec), ea), tr(eb, ec, ea),
            br(br(ec, ea), eb), tr(ec, ea, eb),
        ))

    def ly4(a, b, c, d):
        ea, eb, ec, ed = _e(a), _e(b), _e(c), _e(d)
        return bool(_add(tr(br(ea, eb), ec, ed), tr(br(eb, ec), ea, ed), tr(br(ec, ea), eb, ed)))

    def ly5(a, b, c, d):
        ea, eb, ec, ed = _e(a), _e(b), _e(c), _e(d)
        lhs = tr(ea, eb, br(ec, ed))
        rhs = _add(br(tr(ea, eb, ec), ed), br(ec, tr(ea, eb, ed)))
        return bool(_add(lhs, rhs, signs=(1, -1)))

    def ly6(a, b, c, d, e):
        ea, eb, ec, ed, ee = _e(a), _e(b), _e(c), _e(d), _e(e)
        lhs = tr(ea, eb, tr(ec, ed, ee))
        rhs = _add(tr(tr(ea, eb, ec), ed, ee), tr(ec, tr(ea, eb, ed), ee), tr(ec, ed, tr(ea, eb, ee)))
        return bool(_add(lhs, rhs, signs=(1, -1)))

    checks = [
        ("LY1", 2, ly1), ("LY2", 3, ly2), ("LY3", 3, ly3),
        ("LY4", 4, ly4), ("LY5", 4, ly5), ("LY6", 5, ly6),
    ]
    results = []
    for name, arity, test in checks:
        ok, wit, cnt = _first_failure(itertools.product(rng, repeat=arity), test)
        results.append(AxiomResult(name, ok, wit, cnt))
    return AxiomReport(results)


# -------------------------------------------------------------- constructors


def _closed_antisymmetric(bracket, n: int, err) -> dict:
    """Fill in ``(j, i, s)`` from ``(i, j, s)`` where missing; reject conflicts."""
    table = _sparse(bracket, 3, "bracket")
    for (i, j, s) in table:
        if not all(1 <= k <= n for k in (i, j, s)):
            raise IndexOutOfRange(f"index {(i, j, s)} outside 1..{n}")
    pairs = {(i, j) for (i, j, _) in table}
    out = dict(table)
    for (i, j, s), c in table.items():
        if (j, i) not in pairs:
            out[(j, i, s)] = -c
    for (i, j, s), c in out.items():
        if out.get((j, i, s), 0) != -c:
            raise err("bracket is not antisymmetric", (i, j))
    return out


def _jacobi_witness(L: LYAlgebra) -> tuple | None:
    br = L.sbracket
    for a, b, c in itertools.product(range(L.dim), repeat=3):
        ea, eb, ec = _e(a), _e(b), _e(c)
        if _add(br(br(ea, eb), ec), br(br(eb, ec), ea), br(br(ec, ea), eb)):
            return (a + 1, b + 1, c + 1)
    return None


def from_lie(bracket, n: int, labels=None) -> LYAlgebra:
    """The LY algebra of a Lie algebra: same bracket, ``{a,b,c} = [[a,b],c]``."""
    tau = _closed_antisymmetric(bracket, n, NotALieAlgebra)
    lie = LYAlgebra(n, tau, {}, labels)
    wit = _jacobi_witness(lie)
    if wit is not None:
        raise NotALieAlgebra("Jacobi identity fails", wit)
    omega: dict = {}
    for (i, j, t), c in tau.items():
        for (t2, k, s), d in tau.items():
            if t2 == t:
                omega[(i, j, k, s)] = omega.get((i, j, k, s), 0) + c * d
    return LYAlgebra(n, tau, omega, labels)


def _product_table(prod, n: int) -> dict:
    table = _sparse(prod, 3, "product")
    for key in table:
        if not all(1 <= k <= n for k in key):
            raise IndexOutOfRange(f"index {key} outside 1..{n}")
    out: dict = {}
    for (i, j, s), c in table.items():
        out.setdefault((i - 1, j - 1), {})[s - 1] = c
    return out


def _mul(table: dict, u: Mapping, v: Mapping) -> dict:
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            for s, c in table.get((i, j), {}).items():
                out[s] = out.get(s, 0) + a * b * c
    return {k: x for k, x in out.items() if x}


def _to_table(n: int, fn, arity: int) -> dict:
    out = {}
    for idx in itertools.product(range(n), repeat=arity):
        for s, c in fn(*[_e(i) for i in idx]).items():
            out[tuple(i + 1 for i in idx) + (s + 1,)] = c
    return out


def from_leibniz(prod, n: int, labels=None) -> LYAlgebra:
    """The LY algebra of a (left) Leibniz algebra:
    ``[x,y] = xy - yx`` and ``{x,y,z} = -(xy)z``."""
    table = _product_table(prod, n)
    m = lambda u, v: _mul(table, u, v)  # noqa: E731
    for x, y, z in itertools.product(range(n), repeat=3):
        ex, ey, ez = _e(x), _e(y), _e(z)
        # x(yz) = (xy)z + y(xz)
        if _add(m(ex, m(ey, ez)), m(m(ex, ey), ez), m(ey, m(ex, ez)), signs=(1, -1, -1)):
            raise NotALeibnizAlgebra("left Leibniz identity fails", (x + 1, y + 1, z + 1))
    tau = _to_table(n, lambda u, v: _add(m(u, v), m(v, u), signs=(1, -1)), 2)
    omega = _to_table(n, lambda u, v, w: {k: -c for k, c in m(m(u, v), w).items()}, 3)
    return LYAlgebra(n, tau, omega, labels)


def from_malcev(prod, n: int, labels=None) -> LYAlgebra:
    """The LY algebra of a Malcev algebra:
    ``[x,y] = <x,y>``, ``{x,y,z} = <x,<y,z>> - <y,<x,z>> + <<x,y>,z>``."""
    tau = _closed_antisymmetric(prod, n, NotAMalcevAlgebra)
    table = _product_table(tau, n)
    m = lambda u, v: _mul(table, u, v)  # noqa: E731

    def jac(x, y, z):
        return _add(m(m(x, y), z), m(m(y, z), x), m(m(z, x), y))

    # linearized Malcev identity J(x,y,wz) + J(w,y,xz) = J(x,y,z)w + J(w,y,z)x
    for x, w, y, z in itertools.product(range(n), repeat=4):
        ex, ew, ey, ez = _e(x), _e(w), _e(y), _e(z)
        lhs = _add(jac(ex, ey, m(ew, ez)), jac(ew, ey, m(ex, ez)))
        rhs = _add(m(jac(ex, ey, ez), ew), m(jac(ew, ey, ez), ex))
        if _add(lhs, rhs, signs=(1, -1)):
            raise NotAMalcevAlgebra("Malcev identity fails", (x + 1, w + 1, y + 1, z + 1))
    omega = _to_table(
        n, lambda x, y, z: _add(m(x, m(y, z)), m(y, m(x, z)), m(m(x, y), z), signs=(1, -1, 1)), 3
    )
    return LYAlgebra(n, tau, omega, labels)


def heisenberg(n: int) -> LYAlgebra:
    """The Heisenberg LY algebra on ``e_0, ..., e_2n`` (``e_0`` stored at index 1).

    ``[e_i, e_{n+i}] = e_0``, ``{e_i, e_{n+i}, e_i} = e_0`` and
    ``{e_{n+i}, e_i, e_{n+i}} = -e_0``; the antisymmetric partners of each
    product are stored too.
    """
    if n < 1:
        raise ValueError("heisenberg(n) needs n >= 1")
    idx = lambda label: label + 1  # noqa: E731
    z = idx(0)
    tau, omega = {}, {}
    for i in range(1, n + 1):
        a, b = idx(i), idx(n + i)
        tau[(a, b, z)] = 1
        tau[(b, a, z)] = -1
        omega[(a, b, a, z)] = 1
        omega[(b, a, a, z)] = -1
        omega[(b, a, b, z)] = -1
        omega[(a, b, b, z)] = 1
    return LYAlgebra(2 * n + 1, tau, omega, tuple(f"e{k}" for k in range(2 * n + 1)))


def abelian(n: int) -> LYAlgebra:
    return LYAlgebra(n)


def sl2() -> LYAlgebra:
    """sl(2) with basis h, e, f as an LY algebra via :func:`from_lie`."""
    return from_lie({(1, 2, 2): 2, (1, 3, 3): -2, (2, 3, 1): 1}, 3, ("h", "e", "f"))


# ------------------------------------------------------- commutative algebras


@dataclass(frozen=True)
class CommAlgebra:
    """Commutative unital algebra ``a_p a_q = sum mult[p,q,r] a_r``."""

    dim: int
    mult: Mapping[tuple, Fraction]
    unit: tuple

    def __post_init__(self):
        object.__setattr__(self, "mult", _sparse(self.mult, 3, "mult"))
        object.__setattr__(self, "unit", tuple(scalar(x) for x in self.unit))
        if len(self.unit) != self.dim:
            raise InputError("unit vector length does not match dim", "unit")
        for key in self.mult:
            if not all(1 <= k <= self.dim for k in key):
                raise IndexOutOfRange(f"index {key} outside 1..{self.dim}")

    @cached_property
    def _table(self) -> dict:
        out: dict = {}
        for (p, q, r), c in self.mult.items():
            out.setdefault((p - 1, q - 1), {})[r - 1] = c
        return out

    def mul(self, u: Sequence, v: Sequence) -> tuple:
        out = [Fraction(0)] * self.dim
        t = self._table
        for p, a in enumerate(u):
            if a:
                for q, b in enumerate(v):
                    if b:
                        for r, c in t.get((p, q), {}).items():
                            out[r] += a * b * c
        return tuple(out)

    def one(self) -> tuple:
        return self.unit

    def zero(self) -> tuple:
        return (Fraction(0),) * self.dim

    def basis(self, p: int) -> tuple:
        return tuple(Fraction(int(q == p - 1)) for q in range(self.dim))

    def validate(self) -> None:
        """Raise :class:`InvalidCommAlgebra` unless commutative, associative and unital."""
        m = self.dim
        b = [self.basis(p) for p in range(1, m + 1)]
        for p, q in itertools.product(range(m), repeat=2):
            if self.mul(b[p], b[q]) != self.mul(b[q], b[p]):
                raise InvalidCommAlgebra("not commutative", (p + 1, q + 1))
        for p, q, r in itertools.product(range(m), repeat=3):
            if self.mul(self.mul(b[p], b[q]), b[r]) != self.mul(b[p], self.mul(b[q], b[r])):
                raise InvalidCommAlgebra("not associative", (p + 1, q + 1, r + 1))
        for p in range(m):
            if self.mul(self.unit, b[p]) != b[p]:
                raise InvalidCommAlgebra("unit law fails", (p + 1,))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "mult": [[*k, format_scalar(c)] for k, c in sorted(self.mult.items())],
            "unit": [format_scalar(c) for c in self.unit],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CommAlgebra":
        try:
            return cls(int(data["dim"]), data.get("mult") or [], data["unit"])
        except KeyError as exc:
            raise InputError("missing field", str(exc.args[0])) from None


def ground_field() -> CommAlgebra:
    return CommAlgebra(1, {(1, 1, 1): 1}, (1,))


def truncated_polynomials(k: int) -> CommAlgebra:
    """``K[t]/(t^k)`` on the basis ``1, t, ..., t^(k-1)``."""
    mult = {}
    for p in range(k):
        for q in range(k):
            if p + q < k:
                mult[(p + 1, q + 1, p + q + 1)] = 1
    return CommAlgebra(k, mult, tuple(int(p == 0) for p in range(k)))


def current_algebra(L: LYAlgebra, A: CommAlgebra) -> LYAlgebra:
    """``L (x) A`` on the basis ``e_i (x) a_p`` with index ``(i-1)*dim A + p``."""
    A.validate()
    m = A.dim
    pos = lambda i, p: (i - 1) * m + p  # noqa: E731
    tau, omega = {}, {}
    for (i, j, s), c in L.tau.items():
        for (p, q, r), d in A.mult.items():
            key = (pos(i, p), pos(j, q), pos(s, r))
            tau[key] = tau.get(key, 0) + c * d
    basis = [A.basis(p) for p in range(1, m + 1)]
    for (i, j, k, s), c in L.omega.items():
        for p, q, r in itertools.product(range(m), repeat=3):
            prod = A.mul(A.mul(basis[p], basis[q]), basis[r])
            for t, d in enumerate(prod):
                if d:
                    key = (pos(i, p + 1), pos(j, q + 1), pos(k, r + 1), pos(s, t + 1))
                    omega[key] = omega.get(key, 0) + c * d
    labels = None
    if L.labels:
        labels = tuple(f"{L.labels[i]}*a{p}" for i in range(L.dim) for p in range(1, m + 1))
    return LYAlgebra(L.dim * m, tau, omega, labels)


def derived_subalgebra(L: LYAlgebra) -> list:
    """RREF basis (rows) of ``[L, L] + {L, L, L}``."""
    vecs = [L.tau_vec(i + 1, j + 1) for i, j in L._br]
    vecs += [L.omega_vec(i + 1, j + 1, k + 1) for i, j, k in L._tri]
    return linalg.row_basis(vecs)


# ------------------------------------------------------------- linear maps


@dataclass(frozen=True)
class LYLinearMap:
    """Linear map ``source -> target`` as a ``target_dim x source_dim`` matrix
    (column ``i`` is the image of basis vector ``i``)."""

    source_dim: int
    target_dim: int
    matrix: tuple

    def __post_init__(self):
        mat = tuple(tuple(scalar(x) for x in row) for row in self.matrix)
        if len(mat) != self.target_dim or any(len(r) != self.source_dim for r in mat):
            raise ValueError("matrix shape does not match declared dimensions")
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def of(cls, matrix) -> "LYLinearMap":
        rows = [list(r) for r in matrix]
        return cls(len(rows[0]) if rows else 0, len(rows), rows)

    def __call__(self, v: Sequence) -> list:
        return linalg.matvec(self.matrix, v)

    def column(self, i: int) -> list:
        return [row[i - 1] for row in self.matrix]

    def rows(self) -> list:
        return [list(r) for r in self.matrix]

    def morphism_witness(self, source: LYAlgebra, target: LYAlgebra) -> tuple | None:
        """First basis pair/triple where the map fails to preserve a bracket."""
        return morphism_witness(source, target, self.matrix)


def morphism_witness(source: LYAlgebra, target: LYAlgebra, M) -> tuple | None:
    """``("binary", i, j)`` or ``("ternary", i, j, k)`` for the first bracket
    ``M`` fails to preserve, or ``None``.  ``M`` is ``target.dim x source.dim``."""
    n = source.dim
    cols = [{s: Fraction(M[s][i]) for s in range(target.dim) if M[s][i]} for i in range(n)]

    def image(v: Mapping) -> dict:
        out: dict = {}
        for i, c in v.items():
            for s, x in cols[i].items():
                out[s] = out.get(s, 0) + c * x
        return {k: x for k, x in out.items() if x}

    for i, j in itertools.product(range(n), repeat=2):
        lhs = image(source.sbracket(_e(i), _e(j)))
        rhs = target.sbracket(cols[i], cols[j])
        if lhs != rhs:
            return ("binary", i + 1, j + 1)
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = image(source.striple(_e(i), _e(j), _e(k)))
        rhs = target.striple(cols[i], cols[j], cols[k])
        if lhs != rhs:
            return ("ternary", i + 1, j + 1, k + 1)
    return None
