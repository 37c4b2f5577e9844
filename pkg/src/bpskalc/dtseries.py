"""Truncated power series for the DT wall-crossing identities and the
dimension count of the DT category."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np
from sympy.functions.combinatorial.numbers import partition as _partition


class NonIntegralCoefficient(ArithmeticError):
    pass


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]


def series_exp(log: Sequence[Fraction], N: int) -> list[Fraction]:
    """exp of a series with zero constant term, via n F_n = sum k L_k F_{n-k}."""
    F = [Fraction(1)] + [Fraction(0)] * N
    for n in range(1, N + 1):
        s = Fraction(0)
        for k in range(1, n + 1):
            if log[k]:
                s += k * log[k] * F[n - k]
        F[n] = s / n
    return F


def _integral(xs: Sequence[Fraction]) -> tuple:
    out = []
    for i, x in enumerate(xs):
        if Fraction(x).denominator != 1:
            raise NonIntegralCoefficient(f"coefficient {i} is {x}")
        out.append(int(x))
    return tuple(out)


def product_formula(exponents: Mapping[int, int], sign: int = 1, N: int = 12) -> PowerSeries:
    """prod_d (1 - (sign*q)^d)^{exponents[d]} to order N."""
    if N > 64:
        raise ValueError("order above 64")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    log = [Fraction(0)] * (N + 1)
    for d, e in exponents.items():
        if not e or d > N:
            continue
        k = 1
        while d * k <= N:
            # log(1 - x^d) = -sum x^{dk}/k
            log[d * k] -= Fraction(e * sign ** (d * k), k)
            k += 1
    return PowerSeries(_integral(series_exp(log, N)))


def macmahon(N: int) -> PowerSeries:
    """prod (1 - q^d)^{-d}, independently via n M_n = sum sigma_2(k) M_{n-k}."""
    sigma2 = [0] + [sum(t * t for t in range(1, k + 1) if k % t == 0) for k in range(1, N + 1)]
    M = [1] + [0] * N
    for n in range(1, N + 1):
        s = sum(sigma2[k] * M[n - k] for k in range(1, n + 1))
        if s % n:
            raise NonIntegralCoefficient(f"coefficient {n}")
        M[n] = s // n
    return PowerSeries(tuple(M))


def dt_series(N: int, omega: Mapping[int, int] | None = None) -> PowerSeries:
    """sum DT_d q^d = prod (1 - (-q)^d)^{d Omega_d}; Omega_d = -1 by default."""
    omega = {d: -1 for d in range(1, N + 1)} if omega is None else omega
    return product_formula({d: d * w for d, w in omega.items()}, sign=-1, N=N)


def wallcrossing_holds(N: int = 12) -> bool:
    dt = dt_series(N)
    m = macmahon(N)
    return all(dt[d] == (-1) ** d * m[d] for d in range(N + 1))


def _slopes(bmax: int) -> list[tuple[int, int]]:
    return [(a, b) for b in range(1, bmax + 1) for a in range(b) if math.gcd(a, b) == 1]


def a_d_enumerate(d_max: int) -> list[int]:
    """a_d for d = 0..d_max: distinct slopes a/b in [0,1), multiplicities n with
    sum n*b = d, weighted by the product of partition numbers p(n)."""
    if d_max > 20:
        raise ValueError("d_max above 20")
    slopes = _slopes(d_max)
    # ways[t] after processing some slopes; each slope used at most once
    ways = [0] * (d_max + 1)
    ways[0] = 1
    for (_a, b) in slopes:
        new = list(ways)
        for t in range(d_max + 1):
            if not ways[t]:
                continue
            n = 1
            while t + n * b <= d_max:
                new[t + n * b] += ways[t] * int(_partition(n))
                n += 1
        ways = new
    return ways


def slope_bijection_check(d: int) -> bool:
    """Count (n, a, b) with d = b*n, gcd(a, b) = 1, 0 <= a < b; the count must be d."""
    if not 1 <= d <= 10 ** 4:
        raise ValueError("d must lie in 1..10^4")
    count = 0
    for b in range(1, d + 1):
        if d % b == 0:
            count += sum(1 for a in range(b) if math.gcd(a, b) == 1)
    return count == d


def slope_bijection_all(d_max: int = 10 ** 4) -> bool:
    """The same count for every d <= d_max, using a vectorized gcd per denominator."""
    coprime = np.zeros(d_max + 1, dtype=np.int64)
    for b in range(1, d_max + 1):
        coprime[b] = int(np.count_nonzero(np.gcd(np.arange(b), b) == 1))
    totals = np.zeros(d_max + 1, dtype=np.int64)
    for b in range(1, d_max + 1):
        totals[b::b] += coprime[b]
    return bool(np.all(totals[1:] == np.arange(1, d_max + 1)))
