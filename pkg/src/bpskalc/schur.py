"""Laurent Schur polynomials of GL(d) and Schur-basis expansion."""
from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations
from typing import Mapping, Sequence

from .exactpoly import LaurentPoly, exact_divide
from .weights import is_dominant


class NotSymmetric(ValueError):
    pass


def _perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def vandermonde(d: int) -> LaurentPoly:
    """prod_{i<j} (z_j - z_i)."""
    v = LaurentPoly.one(d)
    for i in range(d):
        for j in range(i + 1, d):
            v = v * LaurentPoly.binomial(d, i, j)
    return v


def divide_vandermonde(f: LaurentPoly, d: int | None = None) -> LaurentPoly:
    """Exact quotient of f by prod_{i<j}(z_j - z_i), one linear factor at a time."""
    d = f.nz if d is None else d
    for i in range(d):
        for j in range(i + 1, d):
            f = exact_divide(f, LaurentPoly.binomial(f.nz, i, j))
    return f


def alternant(exps: Sequence[int]) -> LaurentPoly:
    """sum_w sign(w) z^{w(exps)}, with exps placed on z_1..z_d in order."""
    d = len(exps)
    terms = {}
    for p in permutations(range(d)):
        z = [0] * d
        for i in range(d):
            z[p[i]] = exps[i]
        k = (0, 0) + tuple(z)
        terms[k] = terms.get(k, 0) + _perm_sign(p)
    return LaurentPoly(d, terms)


@lru_cache(maxsize=4096)
def _schur_terms(chi: tuple) -> dict:
    d = len(chi)
    low = min(chi) if chi else 0
    shifted = [c - low + i for i, c in enumerate(chi)]
    num = alternant(shifted)
    s = divide_vandermonde(num, d)
    if low:
        s = s.shift((0, 0) + (low,) * d)
    return {k[2:]: c for k, c in s.terms.items()}


def weyl_character(chi: Sequence[int]) -> LaurentPoly:
    """The Laurent Schur polynomial s_chi for a weakly increasing integer weight."""
    chi = tuple(int(c) for c in chi)
    if not is_dominant(chi):
        raise ValueError(f"weight {chi} is not dominant")
    d = len(chi)
    return LaurentPoly(d, {(0, 0) + z: c for z, c in _schur_terms(chi).items()}, _trusted=True)


def expand_in_schur(f: LaurentPoly, check: bool = True) -> dict[tuple, LaurentPoly]:
    """Greedy expansion sum_chi c_chi s_chi with c_chi in K.

    Keys are dominant weights (tuples of ints); ordered by decreasing leading
    monomial as they are peeled off.
    """
    if check and not f.is_symmetric():
        raise NotSymmetric("input is not symmetric in z")
    # z-exponent -> {(a, b): c}
    work: dict[tuple, dict] = {}
    for k, c in f.terms.items():
        work.setdefault(k[2:], {})[k[:2]] = c
    out: dict[tuple, LaurentPoly] = {}
    while work:
        top = max(work)
        coeff = {k: c for k, c in work[top].items() if c}
        if not coeff:
            del work[top]
            continue
        chi = tuple(sorted(top))
        if chi in out:
            raise NotSymmetric("expansion did not terminate cleanly")
        out[chi] = LaurentPoly(0, dict(coeff), _trusted=True)
        for z, n in _schur_terms(chi).items():
            slot = work.setdefault(z, {})
            for qk, c in coeff.items():
                v = slot.get(qk, 0) - n * c
                if v:
                    slot[qk] = v
                else:
                    slot.pop(qk, None)
            if not slot:
                del work[z]
    return out


def from_schur(expansion: Mapping[tuple, LaurentPoly], d: int) -> LaurentPoly:
    total = LaurentPoly.zero(d)
    for chi, c in expansion.items():
        total = total + weyl_character(chi) * c
    return total


def expansion_to_json(expansion: Mapping[tuple, LaurentPoly]) -> str:
    items = sorted(expansion.items())
    return json.dumps([{"weight": list(chi), "coeff": c.to_json_obj()} for chi, c in items],
                      separators=(",", ":"))


def expansion_to_text(expansion: Mapping[tuple, LaurentPoly]) -> str:
    if not expansion:
        return "0"
    lines = []
    for chi, c in sorted(expansion.items()):
        lines.append(f"s{tuple(chi)}: {c.to_text()}")
    return "\n".join(lines)
