"""Independent reference computations in sympy.

Nothing here calls into bpskalc except `to_sympy`, which only reads the
term dictionary of a LaurentPoly.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

import sympy as sp

q1, q2 = sp.symbols("q1 q2")
q = q1 * q2


def zs(n):
    return sp.symbols(f"z1:{n + 1}") if n else ()


def to_sympy(f):
    z = zs(f.nz)
    out = sp.Integer(0)
    for key, c in f.terms.items():
        t = sp.Integer(c) * q1 ** key[0] * q2 ** key[1]
        for zi, e in zip(z, key[2:]):
            t *= zi ** e
        out += t
    return out


def same(expr_a, expr_b) -> bool:
    return sp.cancel(sp.together(expr_a - expr_b)) == 0


KERNEL = {
    "xi": lambda x: (1 - x / q1) * (1 - x / q2) * (1 - 1 / (q * x)) / (1 - x),
    "xip": lambda x: (1 - x / q1) * (1 - x / q2) * (1 - q * x) / (1 - x),
    "w": lambda x: (1 - x / q1) * (1 - x / q2) / ((1 - x) * (1 - x / q)),
}


def shuffle(f_expr, a, g_expr, b, kernel="xi"):
    """Sum over a-subsets A of {1..a+b} of f(z_A) g(z_B) prod kernel(z_i/z_j)."""
    n = a + b
    z = zs(n)
    fz, gz = zs(a), zs(b)
    ker = KERNEL[kernel]
    total = sp.Integer(0)
    for A in combinations(range(n), a):
        B = [t for t in range(n) if t not in A]
        t = f_expr.subs(dict(zip(fz, [z[i] for i in A])), simultaneous=True)
        t *= g_expr.subs(dict(zip(gz, [z[j] for j in B])), simultaneous=True)
        for i in A:
            for j in B:
                t *= ker(z[i] / z[j])
        total += t
    return sp.cancel(sp.together(total))


def ceil_div(a, b):
    return -((-a) // b)


def a_generator(d, v):
    """Defining symmetrization of the generator with d variables and degree v."""
    z = zs(d)
    ce = [ceil_div(v * i, d) for i in range(d + 1)]
    m = [ce[i] - ce[i - 1] + (i == d) - (i == 1) for i in range(1, d + 1)]
    base = sp.Integer(1)
    for i in range(d):
        base *= z[i] ** m[i]
    for i in range(d - 1):
        base /= 1 - z[i + 1] / (q * z[i])
    for i in range(d):
        for j in range(i + 1, d):
            base *= KERNEL["xi"](z[i] / z[j])
    total = sp.Integer(0)
    for p in permutations(range(d)):
        total += base.subs(dict(zip(z, [z[k] for k in p])), simultaneous=True)
    return sp.cancel(sp.together(total))


def schur(chi):
    """Bialternant formula for the Weyl character of GL_n."""
    n = len(chi)
    z = zs(n)
    shift = -min(chi) if chi else 0
    num = sp.Matrix(n, n, lambda i, j: z[i] ** (chi[j] + shift + n - 1 - j))
    den = sp.Matrix(n, n, lambda i, j: z[i] ** (n - 1 - j))
    s = sp.cancel(num.det() / den.det())
    return sp.expand(s * sp.prod([zi ** (-shift) for zi in z]))


def plane_partitions(N):
    """Count plane partitions of each size up to N by brute force over staircase fillings."""
    counts = [0] * (N + 1)

    def rows_after(prev, budget):
        # weakly decreasing rows bounded entrywise by prev
        def rec(i, row, left):
            yield tuple(row)
            if i >= len(prev):
                return
            cap = min(prev[i], row[-1] if row else prev[i], left)
            for x in range(1, cap + 1):
                yield from rec(i + 1, row + [x], left - x)
        yield from rec(0, [], budget)

    def grow(prev, total):
        counts[total] += 1
        for row in rows_after(prev, N - total):
            if row:
                grow(row, total + sum(row))

    grow((N,) * N, 0)
    return counts


def product_series(exponents, sign, N):
    x = sp.symbols("x")
    expr = sp.Integer(1)
    for d, e in exponents.items():
        expr *= (1 - (sign * x) ** d) ** e
    ser = sp.series(expr, x, 0, N + 1).removeO()
    return [int(ser.coeff(x, k)) for k in range(N + 1)]


def all_tuples(n, lo, hi):
    return product(range(lo, hi + 1), repeat=n)
