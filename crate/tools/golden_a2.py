#!/usr/bin/env python3
"""Regenerate crates/cli/tests/golden/a2_word121.txt.

Standalone: sympy polynomials and the restriction formula evaluated
directly, no shared code with the Rust crates.
"""

from fractions import Fraction
from itertools import combinations, product
import sys

import sympy

CARTAN = [[2, -1], [-1, 2]]
WORD = [1, 2, 1]
A = sympy.symbols("a1 a2")


def reflect(i, lam):
    pairing = sum(lam[k] * CARTAN[i - 1][k] for k in range(len(lam)))
    out = list(lam)
    out[i - 1] -= pairing
    return out


def simple(i):
    return [1 if k == i - 1 else 0 for k in range(len(CARTAN))]


def alpha(e, i):
    lam = simple(WORD[i - 1])
    for k in reversed(range(i - 1)):
        if e[k]:
            lam = reflect(WORD[k], lam)
    return sum(c * a for c, a in zip(lam, A))


def leq(e, f):
    return all(x <= y for x, y in zip(e, f))


def sigma(e, f):
    if not leq(e, f):
        return sympy.Integer(0)
    out = sympy.Integer(1)
    for i in range(1, len(WORD) + 1):
        if e[i - 1]:
            out *= alpha(f, i)
    return sympy.expand(out)


def galleries():
    n = len(WORD)
    gs = list(product([0, 1], repeat=n))
    return sorted(gs, key=lambda g: (sum(g), sum(b << i for i, b in enumerate(g))))


def gname(g):
    return "".join(map(str, g))


def coeff_str(c, mono):
    c = Fraction(int(c.p), int(c.q))
    mag = abs(c)
    mag_s = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
    if not mono:
        return mag_s
    return mono if mag == 1 else f"{mag_s}*{mono}"


def render_sum(terms):
    if not terms:
        return "0"
    out = ""
    for idx, (c, mono) in enumerate(terms):
        neg = c < 0
        if idx == 0:
            out += "-" if neg else ""
        else:
            out += " - " if neg else " + "
        out += coeff_str(c, mono)
    return out


def render_poly(expr):
    expr = sympy.expand(expr)
    if expr == 0:
        return "0"
    p = sympy.Poly(expr, *A)
    terms = sorted(p.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    rendered = []
    for exps, c in terms:
        mono = "*".join(
            f"a{k + 1}" if e == 1 else f"a{k + 1}^{e}" for k, e in enumerate(exps) if e > 0
        )
        rendered.append((sympy.Rational(c), mono))
    return render_sum(rendered)


def expand_restriction(values):
    """Triangular solve: coords c with sum_e c_e sigma(e, f) = values[f]."""
    coords = {}
    for f in galleries():
        residual = values[f] - sum(c * sigma(e, f) for e, c in coords.items())
        residual = sympy.cancel(residual / sigma(f, f))
        assert residual.is_polynomial(*A), residual
        residual = sympy.expand(residual)
        if residual != 0:
            coords[f] = residual
    return coords


def product_line(left, right):
    values = {f: sympy.expand(sigma(left, f) * sigma(right, f)) for f in galleries()}
    coords = expand_restriction(values)
    parts = [f"{gname(g)}: {render_poly(coords[g])}" for g in galleries() if g in coords]
    return ", ".join(parts) if parts else "0"


def relation_line(i):
    # a_{j,i} = <mu_i, mu_j^vee>
    terms = [(sympy.Integer(1), f"x{i}^2")]
    for j in range(1, i):
        a = CARTAN[WORD[j - 1] - 1][WORD[i - 1] - 1]
        if a != 0:
            terms.append((sympy.Integer(a), f"x{j}*x{i}"))
    return render_sum(terms) + " = 0"


def weyl_matrix(word):
    n = len(CARTAN)
    # image of each simple root under r_{w1} ... r_{wk}
    out = []
    for j in range(1, n + 1):
        lam = simple(j)
        for i in reversed(word):
            lam = reflect(i, lam)
        out.append(tuple(lam))
    return tuple(out)


def billey_line(w_word, v_word):
    target = weyl_matrix(w_word)
    m = len(w_word)
    betas = []
    for j in range(len(v_word)):
        lam = simple(v_word[j])
        for k in reversed(range(j)):
            lam = reflect(v_word[k], lam)
        betas.append(sum(c * a for c, a in zip(lam, A)))
    total = sympy.Integer(0)
    for sub in combinations(range(len(v_word)), m):
        if weyl_matrix([v_word[j] for j in sub]) == target:
            term = sympy.Integer(1)
            for j in sub:
                term *= betas[j]
            total += term
    return render_poly(total)


def main():
    gs = galleries()
    lines = ["# table"]
    for e in gs:
        lines.append(f"{gname(e)}: " + ", ".join(render_poly(sigma(e, f)) for f in gs))
    lines.append("# relations")
    lines.extend(relation_line(i) for i in range(1, len(WORD) + 1))
    lines.append("# product 001 001")
    lines.append(product_line((0, 0, 1), (0, 0, 1)))
    lines.append("# product 100 001")
    lines.append(product_line((1, 0, 0), (0, 0, 1)))
    lines.append("# billey w=1 v=1 2 1")
    lines.append(billey_line([1], [1, 2, 1]))
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
