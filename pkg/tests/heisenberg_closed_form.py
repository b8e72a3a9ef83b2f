"""Closed-form universal polynomials of the Heisenberg LY algebra H_n, written
case by case and rendered without touching the library.

Basis e_0, ..., e_2n (0-based labels; e_k is variable index k + 1).  Brackets:
[e_i, e_{n+i}] = e_0 and {e_i, e_{n+i}, e_i} = e_0 for 1 <= i <= n, together
with the partners forced by antisymmetry, so the nonzero ternary constants are
{e_i, e_{n+i}, e_i} = {e_i, e_{n+i}, e_{n+i}} = e_0 and their negatives with the
first two slots exchanged.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def _add(acc, key, c):
    key = tuple(sorted(key))
    acc[key] = acc.get(key, 0) + c
    if acc[key] == 0:
        del acc[key]


def _pairing(n, i, j):
    """+1 if (i, j) = (i, n+i), -1 if (i, j) = (n+i, i), else 0."""
    if 1 <= i <= n and j == n + i:
        return 1
    if n + 1 <= i <= 2 * n and j == i - n:
        return -1
    return 0


def p_poly(n, a, i, j):
    out: dict = {}
    sign = _pairing(n, i, j)
    if sign:
        _add(out, [(a, 0)], sign)
    if a == 0:
        for s in range(1, n + 1):
            _add(out, [(s, i), (n + s, j)], -1)
        for s in range(n + 1, 2 * n + 1):
            _add(out, [(s, i), (s - n, j)], 1)
    return out


def q_poly(n, a, i, j, k):
    out: dict = {}
    sign = _pairing(n, i, j)
    if sign and k in (i, j):
        _add(out, [(a, 0)], sign)
    if a == 0:
        for r in range(1, n + 1):
            for third in (r, n + r):
                _add(out, [(r, i), (n + r, j), (third, k)], -1)
        for r in range(n + 1, 2 * n + 1):
            for third in (r, r - n):
                _add(out, [(r, i), (r - n, j), (third, k)], 1)
    return out


def _exponents(mono, size):
    e = [0] * (size * size)
    for s, i in mono:
        e[s * size + i] += 1
    return e


def _degrevlex_key(e):
    # larger key = larger monomial; the first variable is the largest
    return (sum(e), tuple(-x for x in reversed(e)))


def render_poly(terms, size):
    if not terms:
        return "0"
    items = sorted(terms.items(), key=lambda kv: _degrevlex_key(_exponents(kv[0], size)), reverse=True)
    lead = items[0][1]
    parts = []
    for pos, (mono, c) in enumerate(items):
        c = Fraction(c) / lead
        e = _exponents(mono, size)
        factors = []
        for idx, x in enumerate(e):
            if x:
                name = f"x[{idx // size + 1},{idx % size + 1}]"
                factors.append(name if x == 1 else f"{name}^{x}")
        body = "*".join(factors) if factors else ""
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        if pos == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(parts)


def render(n: int) -> str:
    size = 2 * n + 1
    rng = range(size)
    lines = []
    for a, i, j in itertools.product(rng, repeat=3):
        t = p_poly(n, a, i, j)
        if t:
            lines.append(f"P[{a + 1},{i + 1},{j + 1}] = {render_poly(t, size)}")
    for a, i, j, k in itertools.product(rng, repeat=4):
        t = q_poly(n, a, i, j, k)
        if t:
            lines.append(f"Q[{a + 1},{i + 1},{j + 1},{k + 1}] = {render_poly(t, size)}")
    names = " ".join(f"x[{s},{i}]" for s in range(1, size + 1) for i in range(1, size + 1))
    header = [
        "# universal algebra presentation",
        f"shape: {size} x {size}",
        "order: degrevlex",
        f"variables: {names}",
        f"generators: {len(lines)}",
    ]
    return "\n".join(header + lines) + "\n"


if __name__ == "__main__":
    import sys

    sys.stdout.write(render(int(sys.argv[1]) if len(sys.argv) > 1 else 1))
