"""Borel-Weil-Bott expansions: A_{nd,nv} as an alternating sum of Schur classes,
and the K-class of an induced representation along a two-block cocharacter.

Weights are integer tuples here; a q-weight is a pair (a, b) meaning q1^a q2^b.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import config
from .exactpoly import LaurentPoly
from .schur import from_schur
from .weights import as_weight, inversions

Q1W, Q2W, QW = (1, 0), (0, 1), (1, 1)


@dataclass(frozen=True)
class LSetEntry:
    i: int
    j: int
    tweight: tuple   # q-monomial exponents
    # the T(d)-weight is beta_i - beta_j (0-based indices)

    def root(self, n: int) -> tuple:
        r = [0] * n
        r[self.i] += 1
        r[self.j] -= 1
        return tuple(r)


def chi_n(n: int, d: int, v: int) -> tuple[Fraction, ...]:
    if math.gcd(d, v) != 1:
        raise ValueError("chi_n needs gcd(d, v) = 1")
    N = n * d
    chi = [Fraction(v, d)] * N
    for i in range(1, N):
        c = Fraction(v * i, d) + 1 - math.ceil(Fraction(v * i, d))
        chi[i] += c      # beta_{i+1}
        chi[i - 1] -= c  # beta_i
    return tuple(chi)


def l_set(N: int) -> list[LSetEntry]:
    out = []
    for i in range(N):
        for j in range(i):
            out.append(LSetEntry(i, j, Q1W))
            out.append(LSetEntry(i, j, Q2W))
    for i in range(N):
        for j in range(i - 1):
            out.append(LSetEntry(j, i, QW))
    return out


def _dominant_int(x: Sequence[int]):
    """Dotted-action dominant shift for integral x; None when singular."""
    d = len(x)
    twice = [2 * c + 2 * i - d + 1 for i, c in enumerate(x)]
    if len(set(twice)) < d:
        return None
    ell = inversions(twice)
    srt = sorted(twice)
    return ell, tuple((s - 2 * i + d - 1) // 2 for i, s in enumerate(srt))


def alternating_sum(chi: Sequence[int], weights: Sequence[tuple[tuple, tuple]]) -> dict:
    """sum_J (-1)^{|J|+l(J)} q_J^{-1} s_{(chi - sigma_J)^+} over subsets J of weights.

    Returns {dominant weight: LaurentPoly in K}.  Subsets are enumerated by
    accumulating roots, so each of the 2^k sums costs O(d).
    """
    acc: dict[tuple, dict] = {}
    k = len(weights)
    # iterative DFS over include/exclude
    stack = [(0, tuple(chi), (0, 0), 0)]
    while stack:
        idx, x, qw, size = stack.pop()
        if idx == k:
            ds = _dominant_int(x)
            if ds is None:
                continue
            ell, plus = ds
            slot = acc.setdefault(plus, {})
            key = (-qw[0], -qw[1])
            slot[key] = slot.get(key, 0) + (-1) ** (size + ell)
            continue
        root, tw = weights[idx]
        stack.append((idx + 1, x, qw, size))
        stack.append((idx + 1, tuple(a - r for a, r in zip(x, root)),
                      (qw[0] + tw[0], qw[1] + tw[1]), size + 1))
    out = {}
    for chi_p, coeffs in acc.items():
        c = LaurentPoly(0, {k2: c for k2, c in coeffs.items() if c})
        if c:
            out[chi_p] = c
    return out


def a_via_bwb_expansion(n: int, d: int, v: int) -> dict:
    N = n * d
    if N > config.bwb_bound():
        raise ValueError(f"nd={N} exceeds the BWB bound {config.bwb_bound()}")
    chi = chi_n(n, d, v)
    if any(c.denominator != 1 for c in chi):
        raise ValueError(f"chi_n = {chi} is not integral")
    weights = [(e.root(N), e.tweight) for e in l_set(N)]
    return alternating_sum([int(c) for c in chi], weights)


def a_via_bwb(n: int, d: int, v: int) -> LaurentPoly:
    return from_schur(a_via_bwb_expansion(n, d, v), n * d)


def block_weights(a: int, b: int):
    """Antidominant two-block cocharacter (1^a, 0^b) and its negative weights in g^{+3}.

    For i in the first block and j in the second these are beta_j - beta_i
    with T-weights q1, q2 and q^{-1}; their Koszul factors give the xip kernel.
    """
    n = a + b
    lam = (1,) * a + (0,) * b
    out = []
    for i in range(a):
        for j in range(a, n):
            r = [0] * n
            r[j] += 1
            r[i] -= 1
            out.append((tuple(r), Q1W))
            out.append((tuple(r), Q2W))
            out.append((tuple(r), (-1, -1)))
    return lam, out


def induction_class(lam: Sequence[int], chi: Sequence, extra_weights: Iterable[tuple[tuple, tuple]]) -> dict:
    """K-class of the induction of Gamma(chi) from the Levi of lam, as a Schur expansion.

    extra_weights are (root, q-weight) pairs; each must pair negatively with lam.
    Every root occurs once per listed pair.
    """
    chi = as_weight(chi)
    if any(c.denominator != 1 for c in chi):
        raise ValueError("chi must be integral")
    ws = list(extra_weights)
    for root, _ in ws:
        if sum(l * r for l, r in zip(lam, root)) >= 0:
            raise ValueError(f"weight {root} is not negative on {tuple(lam)}")
    if len(ws) > 16:
        raise ValueError("too many weights to enumerate")
    # chi must be dominant for each block of lam
    for i in range(len(chi) - 1):
        if lam[i] == lam[i + 1] and chi[i] > chi[i + 1]:
            raise ValueError("chi is not dominant for the Levi of lam")
    return alternating_sum([int(c) for c in chi], ws)


def product_class(chi_a: Sequence[int], chi_b: Sequence[int], kernel: str = "xi") -> dict:
    """Schur expansion of s_{chi_a} * s_{chi_b} computed through induction.

    xi differs from xip by -z_j/(q z_i) on each pair, which shifts the weight
    by (-b, .., -b, a, .., a) and contributes (-1/q)^{ab}.
    """
    a, b = len(chi_a), len(chi_b)
    lam, ws = block_weights(a, b)
    chi = list(chi_a) + list(chi_b)
    if kernel == "xip":
        return induction_class(lam, chi, ws)
    if kernel != "xi":
        raise ValueError(f"unsupported kernel {kernel!r}")
    chi = [c - b for c in chi_a] + [c + a for c in chi_b]
    unit = LaurentPoly.mono(0, (-1) ** (a * b), -a * b, -a * b)
    return {k: c * unit for k, c in induction_class(lam, chi, ws).items()}
