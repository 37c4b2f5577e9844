"""Weights of T(d): dotted Weyl action, the polytope W(d)_w, faces, magic weights.

Weights are tuples of Fractions (coefficients of beta_1..beta_d); dominant
means weakly increasing.  Cocharacters are tuples of ints.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Sequence

from . import config

Weight = tuple
Cocharacter = tuple


def as_weight(chi: Iterable) -> Weight:
    return tuple(Fraction(c) for c in chi)


def rho(d: int) -> Weight:
    if d < 1:
        raise ValueError("d must be positive")
    return tuple(Fraction(2 * i - d - 1, 2) for i in range(1, d + 1))


def tau(d: int) -> Weight:
    return tuple(Fraction(1, d) for _ in range(d))


def is_dominant(chi: Sequence) -> bool:
    return all(chi[i] <= chi[i + 1] for i in range(len(chi) - 1))


def is_integral(chi: Sequence) -> bool:
    return all(Fraction(c).denominator == 1 for c in chi)


def inversions(seq: Sequence) -> int:
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j])


def dominant_shift(chi: Sequence):
    """Return None if chi + rho is singular, else (length, dominant representative).

    The length is the inversion count of chi + rho, i.e. the length of the
    shortest permutation sorting it increasingly.
    """
    chi = as_weight(chi)
    d = len(chi)
    shifted = tuple(c + r for c, r in zip(chi, rho(d)))
    if len(set(shifted)) < d:
        return None
    ell = inversions(shifted)
    srt = sorted(shifted)
    return ell, tuple(s - r for s, r in zip(srt, rho(d)))


def pair(lam: Sequence, chi: Sequence) -> Fraction:
    return sum((Fraction(l) * Fraction(c) for l, c in zip(lam, chi)), Fraction(0))


def _deviation(chi: Weight, w) -> list[Fraction]:
    d = len(chi)
    return [c - Fraction(w, d) for c in chi]


def in_polytope(chi: Sequence, w, r=Fraction(1, 2)) -> bool:
    """Exact membership of chi in 2r * W(d) translated by w*tau_d (cut criterion)."""
    chi = as_weight(chi)
    r = Fraction(r)
    d = len(chi)
    if sum(chi) != w:
        return False
    delta = sorted(_deviation(chi, w), reverse=True)
    s = Fraction(0)
    for k in range(1, d):
        s += delta[k - 1]
        if s > 3 * r * k * (d - k):
            return False
    return True


def r_invariant(chi: Sequence) -> Fraction:
    chi = as_weight(chi)
    d = len(chi)
    if d == 1:
        return Fraction(0)
    delta = sorted(_deviation(chi, sum(chi)), reverse=True)
    best = Fraction(0)
    s = Fraction(0)
    for k in range(1, d):
        s += delta[k - 1]
        best = max(best, s / (3 * k * (d - k)))
    return best


def positive_pairing_sum(lam: Sequence) -> int:
    """Sum of <lam, beta_i - beta_j> over ordered pairs where it is positive."""
    d = len(lam)
    return sum(lam[i] - lam[j] for i in range(d) for j in range(d) if lam[i] > lam[j])


def n_lambda(lam: Sequence) -> int:
    return 2 * positive_pairing_sum(lam)


def on_face(chi: Sequence, lam: Sequence, r=Fraction(1, 2)) -> bool:
    chi = as_weight(chi)
    r = Fraction(r)
    w = sum(chi)
    if not in_polytope(chi, w, r):
        return False
    dev = _deviation(chi, w)
    return pair(lam, dev) == 3 * r * positive_pairing_sum(lam)


def two_block(a: int, b: int, d: int = 1) -> Cocharacter:
    """The coproduct cocharacter (0^{ad}, 1^{bd})."""
    return (0,) * (a * d) + (1,) * (b * d)


def enumerate_magic_weights(d: int, w: int, bound: int | None = None) -> set[Weight]:
    """Integral dominant chi with sum w and chi + rho in W(d)_w."""
    bound = config.magic_bound() if bound is None else bound
    if d > bound:
        raise ValueError(f"d={d} exceeds the enumeration bound {bound}")
    rh = rho(d)
    radius = Fraction(3 * (d - 1), 2)
    lo = [w / Fraction(d) - rh[i] - radius for i in range(d)]
    hi = [w / Fraction(d) - rh[i] + radius for i in range(d)]

    ranges = [range(math.ceil(lo[i]), math.floor(hi[i]) + 1) for i in range(d)]
    found: set[Weight] = set()

    def rec(i: int, prefix: list[int], total: int) -> None:
        if i == d - 1:
            last = w - total
            if last in ranges[i] and (not prefix or prefix[-1] <= last):
                chi = tuple(prefix + [last])
                if in_polytope([c + r for c, r in zip(chi, rh)], w):
                    found.add(tuple(Fraction(c) for c in chi))
            return
        for c in ranges[i]:
            if prefix and c < prefix[-1]:
                continue
            rec(i + 1, prefix + [c], total + c)

    rec(0, [], 0)
    return found


def dominant_cocharacters(d: int) -> list[Cocharacter]:
    """One representative per equivalence class: values 0,1,..,k-1 on the blocks
    of each composition of d."""
    out = []

    def comps(n):
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for rest in comps(n - first):
                yield (first,) + rest

    for c in comps(d):
        lam = []
        for v, size in enumerate(c):
            lam += [v] * size
        out.append(tuple(lam))
    return out


def _positive_roots(lam: Sequence) -> list[tuple[int, int]]:
    d = len(lam)
    return [(i, j) for i in range(d) for j in range(d) if lam[i] - lam[j] > 0]


def propboundary_check(lam: Sequence, mu: Sequence, chi: Sequence, bound: int = 3) -> bool:
    """Brute-force the face-decomposition statement for the 3-loop quiver.

    A_lam is the multiset of weights of g^{+3} pairing positively with lam;
    every root beta_i - beta_j there occurs three times.  For each Weyl element
    w the set of I with w*(chi - sigma_I) + rho on F(mu) must coincide with the
    sets of the form (phi-negative part) + (any subset of the phi-zero part),
    phi = w^{-1} mu, whenever it is nonempty.
    """
    d = len(chi)
    if d > bound:
        raise ValueError("enumeration bound exceeded")
    chi = as_weight(chi)
    if not is_dominant(chi) or not is_dominant(lam) or not is_dominant(mu):
        raise ValueError("lam, mu and chi must be dominant")
    rh = rho(d)
    base = tuple(c + r for c, r in zip(chi, rh))
    if not on_face(base, lam):
        raise ValueError("chi + rho is not on F(lam)")
    roots = _positive_roots(lam)
    mult_range = range(4)
    for perm in permutations(range(d)):
        # w acts by (w x)_{perm[i]} = x_i; phi = w^{-1} mu has phi_i = mu_{perm[i]}
        phi = tuple(mu[perm[i]] for i in range(d))
        signs = [phi[i] - phi[j] for (i, j) in roots]
        landed = []
        allowed = []
        for mults in product(mult_range, repeat=len(roots)):
            x = list(base)
            for (i, j), m in zip(roots, mults):
                x[i] -= m
                x[j] += m
            wx = [Fraction(0)] * d
            for i in range(d):
                wx[perm[i]] = x[i]
            ok_shape = all((s < 0 and m == 3) or (s > 0 and m == 0) or s == 0
                           for s, m in zip(signs, mults))
            if on_face(wx, mu):
                landed.append(mults)
                if not ok_shape:
                    return False
            if ok_shape:
                allowed.append(mults)
        if landed and set(landed) != set(allowed):
            return False
    return True
