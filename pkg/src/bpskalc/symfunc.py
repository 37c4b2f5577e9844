"""Symmetric functions in the e-basis: products, coproduct, Newton identities,
primitive spaces, and the comparison with the shuffle-side coproduct."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions as _sympy_partitions

from . import config

Partition = tuple


def partitions(n: int) -> list[Partition]:
    """Partitions of n as weakly decreasing tuples, in a fixed order."""
    out = []
    for p in _sympy_partitions(n):
        parts = []
        for k in sorted(p, reverse=True):
            parts += [k] * p[k]
        out.append(tuple(parts))
    return sorted(out, reverse=True)


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


@dataclass
class SymFunc:
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(sorted(k, reverse=True)): Fraction(v)
                      for k, v in self.terms.items() if v}

    @classmethod
    def e(cls, n: int) -> "SymFunc":
        if n < 0:
            raise ValueError("negative degree")
        return cls({(n,) if n else (): 1})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): 1})

    def grades(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def __add__(self, other: "SymFunc") -> "SymFunc":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return SymFunc(t)

    def __neg__(self) -> "SymFunc":
        return SymFunc({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        return SymFunc({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            return self.scale(other)
        t: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _merge(k1, k2)
                t[k] = t.get(k, 0) + v1 * v2
        return SymFunc(t)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"e{i}" for i in k) or "1"
            parts.append(f"{v}*{mono}")
        return " + ".join(parts)


def sf_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    return f * g


# tensor elements of Lambda (x) Lambda: {(left partition, right partition): Fraction}

def _tensor_mul(s: Mapping, t: Mapping) -> dict:
    out: dict = {}
    for (a1, b1), v1 in s.items():
        for (a2, b2), v2 in t.items():
            k = (_merge(a1, a2), _merge(b1, b2))
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def _delta_e(n: int) -> dict:
    out = {}
    for a in range(n + 1):
        left = (a,) if a else ()
        right = (n - a,) if n - a else ()
        out[(left, right)] = Fraction(1)
    return out


def sf_coproduct(f: SymFunc) -> dict:
    total: dict = {}
    for k, v in f.terms.items():
        t = {((), ()): Fraction(1)}
        for part in k:
            t = _tensor_mul(t, _delta_e(part))
        for kk, vv in t.items():
            total[kk] = total.get(kk, 0) + v * vv
    return {k: v for k, v in total.items() if v}


@lru_cache(maxsize=None)
def _newton_cached(n: int) -> SymFunc:
    if n < 1:
        raise ValueError("n must be positive")
    p = SymFunc.e(n).scale((-1) ** (n - 1) * n)
    for i in range(1, n):
        p = p + (SymFunc.e(i) * _newton_cached(n - i)).scale((-1) ** (i - 1))
    return p


def newton_p(n: int) -> SymFunc:
    return SymFunc(dict(_newton_cached(n).terms))


def elempowersum_holds(N: int) -> bool:
    """Check exp(sum (-1)^{n+1} p_n t^n / n) = sum e_n t^n through t^N."""
    L = [SymFunc()] + [newton_p(n).scale(Fraction((-1) ** (n + 1), n)) for n in range(1, N + 1)]
    E = [SymFunc.one()]
    for n in range(1, N + 1):
        acc = SymFunc()
        for k in range(1, n + 1):
            acc = acc + (L[k] * E[n - k]).scale(k)
        E.append(acc.scale(Fraction(1, n)))
    return all(E[n] == SymFunc.e(n) for n in range(N + 1))


def _nullspace(rows: list[list], ncols: int) -> list[list[Fraction]]:
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    M = DomainMatrix([[QQ(x.numerator, x.denominator) for x in r] for r in rows],
                     (len(rows), ncols), QQ)
    ns = M.nullspace().to_Matrix()
    out = []
    for i in range(ns.rows):
        out.append([Fraction(int(x.p), int(x.q)) for x in ns.row(i)])
    return out


def _rank(rows: list[list], ncols: int) -> int:
    if not rows:
        return 0
    M = DomainMatrix([[QQ(x.numerator, x.denominator) for x in r] for r in rows],
                     (len(rows), ncols), QQ)
    return M.rank()


def primitives_dim(n: int) -> tuple[int, list[SymFunc]]:
    """Kernel of all components Delta_{a,b}, a, b >= 1, on degree-n symmetric functions."""
    if not 1 <= n <= 8:
        raise ValueError("n must lie in 1..8")
    basis = partitions(n)
    cols = [sf_coproduct(SymFunc({p: 1})) for p in basis]
    keys = sorted({k for c in cols for k in c if k[0] and k[1]})
    rows = [[c.get(k, Fraction(0)) for c in cols] for k in keys]
    ker = _nullspace(rows, len(basis))
    vecs = [SymFunc({p: x for p, x in zip(basis, v)}) for v in ker]
    return len(vecs), vecs


def proportional(f: SymFunc, g: SymFunc) -> bool:
    if not f.terms or not g.terms:
        return not f.terms and not g.terms
    k = next(iter(g.terms))
    if k not in f.terms:
        return False
    return f == g.scale(f.terms[k] / g.terms[k])


class RankDrop(ArithmeticError):
    pass


@dataclass
class PhiResult:
    passed: bool
    kernel_dims: list
    points: list

    def __bool__(self) -> bool:
        return self.passed


def random_points(count: int | None = None, seeds=None) -> list[tuple[Fraction, Fraction]]:
    seeds = config.PHI_SEEDS if seeds is None else seeds
    pts = []
    for s in seeds[: count or len(seeds)]:
        rng = random.Random(s)
        pts.append((Fraction(rng.randint(2, 97), rng.randint(1, 89)),
                    Fraction(rng.randint(2, 97), rng.randint(1, 89))))
    return pts


def phi_consistency(n: int, d: int, v: int, seeds=None) -> PhiResult:
    """Shuffle-side primitive dimension is at most one at random rational (q1, q2).

    The degree-n monomials in the normalized generators are built exactly; only the
    final matrices are specialized.  Raises RankDrop if the monomials become
    dependent at a sampled point.
    """
    from .coproduct import delta_tilde, hat_monomial
    from .schur import expand_in_schur

    pts = random_points(seeds=seeds)
    if len(pts) < 3:
        raise ValueError("at least three specialization points are required")
    if n == 1:
        return PhiResult(True, [1] * len(pts), pts)
    basis = partitions(n)
    monos = [hat_monomial(p, d, v) for p in basis]
    schur_cols = [expand_in_schur(m) for m in monos]
    coprod_cols = []
    for m in monos:
        col = {}
        for a in range(1, n):
            for key, c in delta_tilde(m, a, n - a, d).terms.items():
                col[(a,) + key] = c
        coprod_cols.append(col)
    skeys = sorted({k for c in schur_cols for k in c})
    ckeys = sorted({k for c in coprod_cols for k in c})
    dims = []
    for q1, q2 in pts:
        def ev(c):
            return c.evaluate_q(q1, q2).get((), Fraction(0)) if c is not None else Fraction(0)

        srows = [[ev(col.get(k)) for col in schur_cols] for k in skeys]
        if _rank(srows, len(basis)) != len(basis):
            raise RankDrop(f"monomials dependent at q1={q1}, q2={q2}")
        crows = [[ev(col.get(k)) for col in coprod_cols] for k in ckeys]
        dims.append(len(basis) - _rank(crows, len(basis)))
    return PhiResult(all(x <= 1 for x in dims), dims, pts)
