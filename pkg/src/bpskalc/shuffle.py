"""Shuffle-algebra generators and products.

Kernels are rational functions of x = z_i/z_j, i in the left block and j in
the right block:

    xi(x)  = (1 - x/q1)(1 - x/q2)(1 - 1/(q x)) / (1 - x)
    xip(x) = (1 - x/q1)(1 - x/q2)(1 - q x) / (1 - x)
    w(x)   = (1 - x/q1)(1 - x/q2) / ((1 - x)(1 - x/q))

with q = q1*q2.  Inputs and outputs are symmetric Laurent polynomials.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

from . import config
from .exactpoly import (BinFraction, LaurentPoly, K, Q,
                        exact_divide)
from .schur import _perm_sign, divide_vandermonde

# (c, inverted): the factor (1 - q^c x) or, if inverted, (1 - q^c / x)
KERNELS = {
    "xi": ([((-1, 0), False), ((0, -1), False), ((-1, -1), True)], [((0, 0), False)]),
    "xip": ([((-1, 0), False), ((0, -1), False), ((1, 1), False)], [((0, 0), False)]),
    "w": ([((-1, 0), False), ((0, -1), False)], [((0, 0), False), ((-1, -1), False)]),
}

QINV = (-1, -1)


@dataclass(frozen=True)
class ShuffleElement:
    d: int
    v: int
    value: LaurentPoly

    def __post_init__(self):
        if self.value.nz != self.d:
            raise ValueError("variable count does not match d")

    def check(self) -> None:
        if not self.value.is_symmetric():
            raise ValueError("shuffle element is not symmetric")
        degs = self.value.z_degrees()
        if degs and degs != {self.v}:
            raise ValueError(f"z-degrees {sorted(degs)} differ from v={self.v}")


def _value(f) -> LaurentPoly:
    return f.value if isinstance(f, ShuffleElement) else f


def one_minus(c, i: int, j: int, inverted: bool):
    """(1 - q^c z_i/z_j) or (1 - q^c z_j/z_i) as (z-monomial exponent dict, raw factor)."""
    if not inverted:
        return {j: -1}, (i, j, c)      # z_j^{-1} (z_j - c z_i)
    return {i: -1}, (j, i, c)          # z_i^{-1} (z_i - c z_j)


def _kernel_term(n: int, pairs, kernel: str):
    """Monomial shift and raw factor lists for prod over pairs of kernel(z_i/z_j)."""
    nums, dens = KERNELS[kernel]
    shift = [0] * n
    num_f, den_f = [], []
    for (i, j) in pairs:
        for c, inv in nums:
            mono, fac = one_minus(c, i, j, inv)
            for t, e in mono.items():
                shift[t] += e
            num_f.append(fac)
        for c, inv in dens:
            mono, fac = one_minus(c, i, j, inv)
            for t, e in mono.items():
                shift[t] -= e
            den_f.append(fac)
    return shift, num_f, den_f


def shuffle_mul(f, g, kernel: str = "xi", polynomial: bool | None = None):
    """Shuffle product, summed over the (a+b choose a) shuffles.

    For the w kernel the result is a BinFraction unless polynomial=True.
    """
    if kernel not in KERNELS:
        raise ValueError(f"unknown kernel {kernel!r}")
    F, G = _value(f), _value(g)
    a, b = F.nz, G.nz
    n = a + b
    if polynomial is None:
        polynomial = kernel != "w"
    if a == 0 or b == 0:
        res = G * F if a == 0 else F * G
        return _wrap(res, f, g) if polynomial else BinFraction(res)
    config.check_vars(n, "shuffle product")
    total = None
    for A in combinations(range(n), a):
        B = [t for t in range(n) if t not in A]
        prod = F.embed(n, A) * G.embed(n, B)
        shift, num_f, den_f = _kernel_term(n, [(i, j) for i in A for j in B], kernel)
        term = BinFraction.from_factors(n, prod.shift((0, 0) + tuple(shift)), num_f, den_f)
        total = term if total is None else total + term
    if polynomial:
        return _wrap(total.to_laurent(), f, g)
    return total.simplify()


def _wrap(res: LaurentPoly, f, g):
    if isinstance(f, ShuffleElement) and isinstance(g, ShuffleElement):
        return ShuffleElement(f.d + g.d, f.v + g.v, res)
    return res


def shuffle_product(factors: Sequence, kernel: str = "xi"):
    out = factors[0]
    for x in factors[1:]:
        out = shuffle_mul(out, x, kernel)
    return out


# ---- generators ----------------------------------------------------------

def m_exponents(d: int, v: int) -> tuple[int, ...]:
    if d < 1:
        raise ValueError("d must be positive")

    def ce(i):
        return math.ceil(Fraction(v * i, d))

    return tuple(ce(i) - ce(i - 1) + (i == d) - (i == 1) for i in range(1, d + 1))


def _chain_denominators(n: int, c=QINV):
    """prod_{i<n} (1 - q^c z_{i+1}/z_i)^{-1} as (numerator shift, raw den factors)."""
    shift = [0] * n
    den = []
    for i in range(n - 1):
        mono, fac = one_minus(c, i, i + 1, True)   # z_i^{-1}(z_i - c z_{i+1})
        for t, e in mono.items():
            shift[t] -= e
        den.append(fac)
    return shift, den


def _base_term(n: int, exps: Sequence[int], kernel: str = "xi", chain=QINV,
               extra: LaurentPoly | None = None) -> BinFraction:
    """z^exps * extra / prod(1 - q^chain z_{i+1}/z_i) * prod_{i<j} kernel(z_i/z_j)."""
    s1, den1 = _chain_denominators(n, chain)
    s2, num2, den2 = _kernel_term(n, [(i, j) for i in range(n) for j in range(i + 1, n)], kernel)
    shift = tuple(e + x + y for e, x, y in zip(exps, s1, s2))
    coef = LaurentPoly.mono(n, z=shift)
    if extra is not None:
        coef = coef * extra
    return BinFraction.from_factors(n, coef, num2, den1 + den2)


def _sym_chunk(args):
    base, perms = args
    total = None
    for p in perms:
        t = base.permute(p)
        total = t if total is None else total + t
    return total


def symmetrize(base: BinFraction, jobs: int = 1) -> BinFraction:
    """Sum of base over all permutations of its variables."""
    perms = list(permutations(range(base.nz)))
    if jobs <= 1 or len(perms) < 24:
        return _sym_chunk((base, perms))
    size = math.ceil(len(perms) / jobs)
    chunks = [(base, perms[k:k + size]) for k in range(0, len(perms), size)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(_sym_chunk, chunks))
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total


def a_element(d: int, v: int, jobs: int = 1) -> ShuffleElement:
    """A_{d,v} from its defining symmetrization."""
    config.check_vars(d)
    return ShuffleElement(d, v, _a_value(d, v, max(1, jobs)))


@lru_cache(maxsize=256)
def _a_value(d: int, v: int, jobs: int) -> LaurentPoly:
    # results are never mutated, so sharing them is safe
    if d == 1:
        return LaurentPoly.mono(1, z=(v,))
    base = _base_term(d, m_exponents(d, v))
    return symmetrize(base, jobs).to_laurent()


def f_d(d: int) -> LaurentPoly:
    f = LaurentPoly.one(d)
    for i in range(d - 1):
        f = f * LaurentPoly.binomial(d, i, i + 1, (-1, 0)) * LaurentPoly.binomial(d, i, i + 1, (0, -1))
        for j in range(i + 2, d):
            f = (f * LaurentPoly.binomial(d, i, j, (-1, 0)) * LaurentPoly.binomial(d, i, j, (0, -1))
                 * LaurentPoly.binomial(d, i, j, (1, 1)))
    return f


def g_d(d: int) -> LaurentPoly:
    """Like f_d with (z_{i+1} - q z_i) in place of (z_{i+1} - z_i/q2) on consecutive pairs."""
    f = LaurentPoly.one(d)
    for i in range(d - 1):
        f = f * LaurentPoly.binomial(d, i, i + 1, (-1, 0)) * LaurentPoly.binomial(d, i, i + 1, (1, 1))
        for j in range(i + 2, d):
            f = (f * LaurentPoly.binomial(d, i, j, (-1, 0)) * LaurentPoly.binomial(d, i, j, (0, -1))
                 * LaurentPoly.binomial(d, i, j, (1, 1)))
    return f


def antisymmetrize(f: LaurentPoly) -> LaurentPoly:
    out: dict = {}
    n = f.nz
    for p in permutations(range(n)):
        s = _perm_sign(p)
        for k, c in f.terms.items():
            z = [0] * n
            for i in range(n):
                z[p[i]] = k[2 + i]
            nk = k[:2] + tuple(z)
            out[nk] = out.get(nk, 0) + s * c
    return LaurentPoly(n, out)


def a_element_vandermonde(d: int, v: int) -> LaurentPoly:
    """A_{d,v} rewritten over the Vandermonde with numerator f_d.

    A = (-1/q)^{(d-1)(d-2)/2} (z_1..z_d)^{2-d} Sym(z^m z_d^{-1} f_d / prod_{i<j}(z_j - z_i)).
    """
    config.check_vars(d)
    m = list(m_exponents(d, v))
    m[-1] -= 1
    num = f_d(d).shift((0, 0) + tuple(m))
    s = divide_vandermonde(antisymmetrize(num), d)
    e = (d - 1) * (d - 2) // 2
    unit = (-1) ** e
    return s.shift((-e, -e) + (2 - d,) * d, unit)


def sym_g_element(d: int, v: int) -> LaurentPoly:
    """Sym(z^m / prod(1 - q2 z_{i+1}/z_i) * prod_{i<j} xi(z_i/z_j)), a Laurent polynomial.

    Over the Vandermonde this equals a unit times
    (z_1..z_d)^{2-d} Sym(z^m z_d^{-1} g_d / prod(z_j - z_i)); both are returned
    by g_localized for comparison.
    """
    config.check_vars(d)
    base = _base_term(d, m_exponents(d, v), chain=(0, 1))
    return symmetrize(base).to_laurent()


def sym_g_vandermonde(d: int, v: int) -> LaurentPoly:
    """The g_d assembly with its unit: (-1/q)^{nc} (q1^{-1} q2^{-2})^{d-1} (z..)^{2-d} Sym(...)."""
    m = list(m_exponents(d, v))
    m[-1] -= 1
    num = g_d(d).shift((0, 0) + tuple(m))
    s = divide_vandermonde(antisymmetrize(num), d)
    nc = (d - 1) * (d - 2) // 2
    return s.shift((-nc - (d - 1), -nc - 2 * (d - 1)) + (2 - d,) * d, (-1) ** nc)


def g_localized(d: int, v: int) -> tuple[LaurentPoly, LaurentPoly]:
    """The localized generator as (numerator, K-denominator), nothing inverted.

    y = (1 - 1/q2)(1 - q)^v / ((1 - 1/q2)^v (1 - 1/q)) * Sym_g(d, v).
    """
    one_q2 = 1 - K(1, 0, -1)
    one_q = 1 - Q
    num = one_q2 * (one_q ** max(v, 0)) * (one_q2 ** max(-v, 0))
    den = (one_q2 ** max(v, 0)) * (one_q ** max(-v, 0)) * (1 - K(1, -1, -1))
    return sym_g_element(d, v) * num, den


def e_class(d: int, v: int, jobs: int = 1) -> ShuffleElement:
    a = a_element(d, v, jobs)
    pref = ((1 - K(1, -1, 0)) * (1 - K(1, 0, -1))) ** (d - 1)
    return ShuffleElement(d, v, a.value * pref)


def a_hat(d: int, v: int, n: int = 1, jobs: int = 1) -> ShuffleElement:
    a = a_element(n * d, n * v, jobs)
    return ShuffleElement(n * d, n * v, a.value * (K(-1, -1, -1) ** (n - 1)))


def p_exponents(d: int, v: int, n: int) -> tuple[int, ...]:
    def fl(i):
        return math.floor(Fraction(v * i, d))

    return tuple(fl(i) - fl(i - 1) for i in range(1, n * d + 1))


def p_element(d: int, v: int, n: int = 1) -> ShuffleElement:
    N = n * d
    config.check_vars(N)
    if math.gcd(d, v) != 1:
        raise ValueError("p_element needs gcd(d, v) = 1")
    # sum_{s<n} q^{-s} prod_{t=1..s} z_{d(n-t)+1} / z_{d(n-t)}   (1-based indices)
    inner = LaurentPoly.zero(N)
    z = [0] * N
    for s in range(n):
        if s:
            t = s
            z[d * (n - t)] += 1
            z[d * (n - t) - 1] -= 1
        inner = inner + LaurentPoly.mono(N, 1, -s, -s, z)
    base = _base_term(N, p_exponents(d, v, n), extra=inner)
    S = symmetrize(base).to_laurent()
    pref = ((K(1, -1, 0) - 1) * (K(1, 0, -1) - 1)) ** N
    out = S * pref
    for den in (K(1, -n, 0) - 1, K(1, 0, -n) - 1):
        out = exact_divide(out, den.with_nz(N))
    return ShuffleElement(N, n * v, out)


def a_prime_element(k_list: Sequence[int]) -> BinFraction:
    """A'_{k} over the w kernel; stays a fraction in general."""
    n = len(k_list)
    config.check_vars(n)
    base = _base_term(n, tuple(k_list), kernel="w")
    return symmetrize(base).simplify()


def mor_F(f) -> BinFraction:
    """f * prod_{i != j} (1 - z_i/(q z_j))^{-1}."""
    F = _value(f)
    n = F.nz
    shift = [0] * n
    den = []
    for i in range(n):
        for j in range(n):
            if i != j:
                mono, fac = one_minus(QINV, i, j, False)
                for t, e in mono.items():
                    shift[t] -= e
                den.append(fac)
    return BinFraction.from_factors(n, F.shift((0, 0) + tuple(shift)), [], den)
