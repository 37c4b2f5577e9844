"""Exact Laurent polynomials over Z[q1^±, q2^±] in variables z_1..z_n.

A term key is the flat tuple ``(a, b, k_1, ..., k_n)`` standing for
``q1^a q2^b z_1^k_1 ... z_n^k_n``.  Coefficients are Python ints.
Variable indices in this API are 0-based.
"""
from __future__ import annotations

import json
import re
from collections import Counter
from fractions import Fraction
from math import gcd
from operator import add, sub
from typing import Iterable, Mapping, Sequence


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, msg: str = "not divisible", divisor: "LaurentPoly | None" = None):
        super().__init__(msg)
        self.divisor = divisor


class NotPolynomial(ArithmeticError):
    pass


class LaurentPoly:
    __slots__ = ("nz", "terms", "_hash")

    def __init__(self, nz: int, terms: Mapping[tuple, int] | None = None, *, _trusted: bool = False):
        self.nz = nz
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms
        else:
            width = nz + 2
            clean = {}
            for k, c in terms.items():
                k = tuple(k)
                if len(k) != width:
                    raise ValueError(f"key {k} has wrong length for {nz} z-variables")
                if c:
                    clean[k] = clean.get(k, 0) + int(c)
            self.terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    # ---- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nz: int = 0) -> "LaurentPoly":
        return cls(nz, {}, _trusted=True)

    @classmethod
    def const(cls, c: int, nz: int = 0) -> "LaurentPoly":
        if not c:
            return cls.zero(nz)
        return cls(nz, {(0,) * (nz + 2): int(c)}, _trusted=True)

    @classmethod
    def one(cls, nz: int = 0) -> "LaurentPoly":
        return cls.const(1, nz)

    @classmethod
    def mono(cls, nz: int = 0, c: int = 1, q1: int = 0, q2: int = 0,
             z: Sequence[int] | None = None) -> "LaurentPoly":
        z = tuple(z) if z is not None else (0,) * nz
        if len(z) != nz:
            raise ValueError("z exponent length mismatch")
        if not c:
            return cls.zero(nz)
        return cls(nz, {(q1, q2) + z: int(c)}, _trusted=True)

    @classmethod
    def zvar(cls, i: int, nz: int) -> "LaurentPoly":
        z = [0] * nz
        z[i] = 1
        return cls.mono(nz, z=z)

    @classmethod
    def binomial(cls, nz: int, i: int, j: int, c: tuple[int, int] = (0, 0)) -> "LaurentPoly":
        """z_j - q1^c0 q2^c1 z_i."""
        kj = [0] * (nz + 2)
        kj[2 + j] = 1
        ki = [0] * (nz + 2)
        ki[0], ki[1] = c
        ki[2 + i] = 1
        return cls(nz, {tuple(kj): 1, tuple(ki): -1})

    # ---- basic protocol -----------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nz)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nz == other.nz and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nz, frozenset(self.terms.items())))
        return self._hash

    def __len__(self) -> int:
        return len(self.terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nz != self.nz:
                if other.nz == 0 and other.is_constant_in_z():
                    return other.with_nz(self.nz)
                if self.nz == 0:
                    raise ValueError("variable-count mismatch")
                raise ValueError(f"variable-count mismatch: {self.nz} vs {other.nz}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.nz)
        raise TypeError(type(other))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly) and self.nz == 0 and other.nz != 0:
            return other + self
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(self.nz, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nz, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.nz)
            return LaurentPoly(self.nz, {k: c * other for k, c in self.terms.items()}, _trusted=True)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.nz != self.nz:
            # scalars from K (no z variables) act on anything
            if other.nz == 0:
                other = other.with_nz(self.nz)
            elif self.nz == 0:
                return other * self
            else:
                raise ValueError(f"variable-count mismatch: {self.nz} vs {other.nz}")
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = tuple(map(add, ka, kb))
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly(self.nz, {k: c for k, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if self.is_monomial() and abs(next(iter(self.terms.values()))) == 1:
                return self.inverse_monomial() ** (-e)
            raise ValueError("negative power of a non-unit")
        result = LaurentPoly.one(self.nz)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ---- structure ----------------------------------------------------
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse_monomial(self) -> "LaurentPoly":
        if not self.is_monomial():
            raise ValueError("not a monomial")
        (k, c), = self.terms.items()
        if c not in (1, -1):
            raise ValueError("monomial is not a unit")
        return LaurentPoly(self.nz, {tuple(-x for x in k): c}, _trusted=True)

    def shift(self, key: Sequence[int], c: int = 1) -> "LaurentPoly":
        """Multiply by the monomial c * key."""
        key = tuple(key)
        return LaurentPoly(self.nz, {tuple(map(add, k, key)): v * c for k, v in self.terms.items()},
                           _trusted=True)

    def is_constant_in_z(self) -> bool:
        return all(not any(k[2:]) for k in self.terms)

    def with_nz(self, nz: int) -> "LaurentPoly":
        """Reinterpret a z-free element in a ring with nz z-variables."""
        if nz == self.nz:
            return self
        if not self.is_constant_in_z():
            raise ValueError("cannot drop z-variables that occur")
        pad = (0,) * nz
        return LaurentPoly(nz, {k[:2] + pad: c for k, c in self.terms.items()}, _trusted=True)

    def embed(self, nz: int, positions: Sequence[int]) -> "LaurentPoly":
        """Place variable t of self at position positions[t] of a ring with nz variables."""
        out = {}
        for k, c in self.terms.items():
            z = [0] * nz
            for t, p in enumerate(positions):
                z[p] = k[2 + t]
            out[k[:2] + tuple(z)] = c
        return LaurentPoly(nz, out, _trusted=True)

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        return sorted(self.terms.items())

    def z_coefficients(self) -> dict[tuple, "LaurentPoly"]:
        groups: dict[tuple, dict] = {}
        for k, c in self.terms.items():
            groups.setdefault(k[2:], {})[k[:2] + ()] = c
        return {z: LaurentPoly(0, t, _trusted=True) for z, t in groups.items()}

    @classmethod
    def from_z_coefficients(cls, coeffs: Mapping[tuple, "LaurentPoly"], nz: int) -> "LaurentPoly":
        out = {}
        for z, poly in coeffs.items():
            for k, c in poly.terms.items():
                out[k[:2] + tuple(z)] = c
        return cls(nz, out)

    def z_degrees(self) -> set[int]:
        return {sum(k[2:]) for k in self.terms}

    def permute_z(self, sigma: Sequence[int]) -> "LaurentPoly":
        """Substitute z_i -> z_{sigma[i]}."""
        n = self.nz
        if sorted(sigma) != list(range(n)):
            raise ValueError("not a permutation of the variables")
        out = {}
        for k, c in self.terms.items():
            z = [0] * n
            for i in range(n):
                z[sigma[i]] = k[2 + i]
            out[k[:2] + tuple(z)] = c
        return LaurentPoly(n, out, _trusted=True)

    def is_symmetric(self) -> bool:
        n = self.nz
        for i in range(n - 1):
            s = list(range(n))
            s[i], s[i + 1] = s[i + 1], s[i]
            if self.permute_z(s) != self:
                return False
        return True

    def substitute_z(self, assignments: Mapping[int, Sequence[int]]) -> "LaurentPoly":
        """Replace z_i by a monomial given as a key (a, b, k_1..k_n)."""
        assignments = {i: tuple(m) for i, m in assignments.items()}
        for m in assignments.values():
            if len(m) != self.nz + 2:
                raise ValueError("assignment monomial has wrong length")
        sparse = [(2 + i, [(t, x) for t, x in enumerate(m) if x]) for i, m in assignments.items()]
        out: dict = {}
        for k, c in self.terms.items():
            base = list(k)
            for pos, _ in sparse:
                base[pos] = 0
            for pos, m in sparse:
                e = k[pos]
                if e:
                    for t, x in m:
                        base[t] += e * x
            nk = tuple(base)
            out[nk] = out.get(nk, 0) + c
        return LaurentPoly(self.nz, {k: c for k, c in out.items() if c}, _trusted=True)

    def map_q(self, fn) -> "LaurentPoly":
        """Apply fn to each (a, b) q-exponent pair; used for reductions of K."""
        out: dict = {}
        for k, c in self.terms.items():
            nk = tuple(fn(k[0], k[1])) + k[2:]
            out[nk] = out.get(nk, 0) + c
        return LaurentPoly(self.nz, {k: c for k, c in out.items() if c}, _trusted=True)

    def evaluate_q(self, q1: Fraction, q2: Fraction) -> dict[tuple, Fraction]:
        """Specialize q1, q2 to nonzero rationals: z-exponent -> rational."""
        q1, q2 = Fraction(q1), Fraction(q2)
        out: dict = {}
        for k, c in self.terms.items():
            v = c * q1 ** k[0] * q2 ** k[1]
            out[k[2:]] = out.get(k[2:], 0) + v
        return {z: v for z, v in out.items() if v}

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return abs(g)

    # ---- serialization ------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "zvars": self.nz,
            "terms": [{"c": str(c), "q1": k[0], "q2": k[1], "z": list(k[2:])}
                      for k, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LaurentPoly":
        nz = int(obj["zvars"])
        terms = {}
        for t in obj["terms"]:
            z = tuple(t.get("z", ()))
            terms[(int(t.get("q1", 0)), int(t.get("q2", 0))) + z] = int(t["c"])
        return cls(nz, terms)

    @classmethod
    def from_json(cls, s: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(s))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_terms():
            facs = []
            for name, e in [("q1", k[0]), ("q2", k[1])] + [(f"z{i + 1}", e) for i, e in enumerate(k[2:])]:
                if e == 1:
                    facs.append(name)
                elif e:
                    facs.append(f"{name}^{e}")
            if not facs:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(facs))
            elif c == -1:
                parts.append("-" + "*".join(facs))
            else:
                parts.append(f"{c}*" + "*".join(facs))
        return " + ".join(parts)

    _TOKEN = re.compile(r"^(q1|q2|z(\d+))(?:\^(-?\d+))?$")

    @classmethod
    def from_text(cls, s: str, nz: int) -> "LaurentPoly":
        s = s.strip()
        if s == "0":
            return cls.zero(nz)
        terms: dict = {}
        for part in s.split(" + "):
            part = part.strip()
            sign = 1
            if part.startswith("-"):
                sign, part = -1, part[1:]
            c = 1
            key = [0] * (nz + 2)
            for tok in part.split("*"):
                if re.fullmatch(r"\d+", tok):
                    c *= int(tok)
                    continue
                m = cls._TOKEN.match(tok)
                if not m:
                    raise ValueError(f"bad token {tok!r}")
                e = int(m.group(3)) if m.group(3) else 1
                if m.group(1) == "q1":
                    key[0] += e
                elif m.group(1) == "q2":
                    key[1] += e
                else:
                    idx = int(m.group(2)) - 1
                    if not 0 <= idx < nz:
                        raise ValueError(f"variable {tok} out of range")
                    key[2 + idx] += e
            k = tuple(key)
            terms[k] = terms.get(k, 0) + sign * c
        return cls(nz, terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nz}, {self.to_text()!r})"

    __str__ = to_text


# ---- K-shorthands ------------------------------------------------------

def K(c: int = 1, a: int = 0, b: int = 0) -> LaurentPoly:
    """The monomial c*q1^a*q2^b in K (no z-variables)."""
    return LaurentPoly.mono(0, c, a, b)


Q1 = K(1, 1, 0)
Q2 = K(1, 0, 1)
Q = K(1, 1, 1)
ONE = K(1)


def multiply(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.nz != g.nz:
        raise ValueError(f"variable-count mismatch: {f.nz} vs {g.nz}")
    return f * g


def permute_z(f: LaurentPoly, sigma: Sequence[int]) -> LaurentPoly:
    return f.permute_z(sigma)


def substitute_z(f: LaurentPoly, assignments: Mapping[int, Sequence[int]]) -> LaurentPoly:
    return f.substitute_z(assignments)


def content(f: LaurentPoly) -> int:
    return f.content()


# ---- exact division ----------------------------------------------------

def _pick_pivot(g: LaurentPoly):
    """Find a key position in which g has a single top term with unit coefficient."""
    best = None
    width = g.nz + 2
    for p in range(width):
        top = max(k[p] for k in g.terms)
        low = min(k[p] for k in g.terms)
        if top == low:
            continue
        tops = [(k, c) for k, c in g.terms.items() if k[p] == top]
        if len(tops) == 1 and tops[0][1] in (1, -1):
            span = top - low
            if best is None or span < best[0]:
                best = (span, p, tops[0])
    return best


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return h with g*h == f or raise NotDivisible.

    g must be monic up to a unit monomial in some variable.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if g.nz != f.nz:
        if g.nz == 0:
            g = g.with_nz(f.nz)
        else:
            raise ValueError("variable-count mismatch")
    if f.is_zero():
        return LaurentPoly.zero(f.nz)
    if g.is_monomial():
        (gk, gc), = g.terms.items()
        out = {}
        for k, c in f.terms.items():
            if c % gc:
                raise NotDivisible("coefficient not divisible", g)
            out[tuple(map(sub, k, gk))] = c // gc
        return LaurentPoly(f.nz, out, _trusted=True)
    piv = _pick_pivot(g)
    if piv is None:
        raise ValueError("divisor is not monic up to a unit in any variable")
    _, p, (lead_k, lead_c) = piv
    g_low = min(k[p] for k in g.terms)
    G = lead_k[p] - g_low
    rest = [(k, c) for k, c in g.terms.items() if k != lead_k]
    # long division from the top p-degree down; quotient degrees never drop
    # below fmin - g_low when the division is exact
    fmin = min(k[p] for k in f.terms)
    buckets: dict[int, dict] = {}
    for k, c in f.terms.items():
        buckets.setdefault(k[p], {})[k] = c
    quot: dict = {}
    while buckets:
        D = max(buckets)
        bucket = {k: c for k, c in buckets.pop(D).items() if c}
        if not bucket:
            continue
        if D - G < fmin:
            raise NotDivisible("nonzero remainder", g)
        for k, c in bucket.items():
            qk = tuple(map(sub, k, lead_k))
            qc = c * lead_c  # lead_c is +-1
            quot[qk] = quot.get(qk, 0) + qc
            for rk, rc in rest:
                tk = tuple(map(add, qk, rk))
                b = buckets.setdefault(tk[p], {})
                b[tk] = b.get(tk, 0) - qc * rc
    h = LaurentPoly(f.nz, {k: c for k, c in quot.items() if c}, _trusted=True)
    return h


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    try:
        exact_divide(f, g)
        return True
    except NotDivisible:
        return False


# ---- fractions with binomial denominators ------------------------------

QMono = tuple  # (a, b)


def canonical_factor(i: int, j: int, c: QMono):
    """Write (z_j - c z_i) as unit * (z_j' - c' z_i') with i' < j'.

    Returns (unit, factor) with unit = (sign, a, b).
    """
    if i == j:
        raise ValueError("degenerate factor with i == j")
    if i < j:
        return (1, 0, 0), (i, j, (c[0], c[1]))
    # z_j - c z_i = -c (z_i - c^{-1} z_j)
    return (-1, c[0], c[1]), (j, i, (-c[0], -c[1]))


class BinFraction:
    """numerator / prod (z_j - c z_i)^mult over canonical factors (i < j)."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Mapping | None = None):
        self.num = num
        self.den = Counter({f: m for f, m in (den or {}).items() if m})
        for (i, j, _c) in self.den:
            if not i < j:
                raise ValueError("denominator factor is not canonical")

    @property
    def nz(self) -> int:
        return self.num.nz

    @classmethod
    def from_factors(cls, nz: int, coef: LaurentPoly | int, num_factors: Iterable = (),
                     den_factors: Iterable = ()) -> "BinFraction":
        """Build coef * prod num / prod den from raw (i, j, c) triples.

        Identical linear factors above and below cancel before expansion.
        """
        if isinstance(coef, int):
            coef = LaurentPoly.const(coef, nz)
        unit = [1, 0, 0]
        den: Counter = Counter()
        for (i, j, c) in den_factors:
            (s, a, b), f = canonical_factor(i, j, c)
            unit[0] *= s
            unit[1] -= a
            unit[2] -= b
            den[f] += 1
        nums = []
        for (i, j, c) in num_factors:
            (s, a, b), f = canonical_factor(i, j, c)
            unit[0] *= s
            unit[1] += a
            unit[2] += b
            if den[f] > 0:
                den[f] -= 1
            else:
                nums.append(f)
        num = coef.shift((unit[1], unit[2]) + (0,) * nz, unit[0])
        for (i, j, c) in nums:
            num = num * LaurentPoly.binomial(nz, i, j, c)
        return cls(num, den)

    def permute(self, sigma: Sequence[int]) -> "BinFraction":
        num = self.num.permute_z(sigma)
        unit = [1, 0, 0]
        den: Counter = Counter()
        for (i, j, c), m in self.den.items():
            (s, a, b), f = canonical_factor(sigma[i], sigma[j], c)
            unit[0] *= s ** m
            unit[1] -= a * m
            unit[2] -= b * m
            den[f] += m
        num = num.shift((unit[1], unit[2]) + (0,) * self.nz, unit[0])
        return BinFraction(num, den)

    def _factor_poly(self, f) -> LaurentPoly:
        i, j, c = f
        return LaurentPoly.binomial(self.nz, i, j, c)

    def __add__(self, other: "BinFraction") -> "BinFraction":
        if other.nz != self.nz:
            raise ValueError("variable-count mismatch")
        den = self.den | other.den  # max multiplicities
        a = self.num
        for f, m in (den - self.den).items():
            a = a * self._factor_poly(f) ** m
        b = other.num
        for f, m in (den - other.den).items():
            b = b * self._factor_poly(f) ** m
        return BinFraction(a + b, den)

    def __neg__(self) -> "BinFraction":
        return BinFraction(-self.num, self.den)

    def __sub__(self, other: "BinFraction") -> "BinFraction":
        return self + (-other)

    def __mul__(self, other) -> "BinFraction":
        if isinstance(other, BinFraction):
            return BinFraction(self.num * other.num, self.den + other.den)
        return BinFraction(self.num * other, self.den)

    __rmul__ = __mul__

    def expanded_denominator(self) -> LaurentPoly:
        d = LaurentPoly.one(self.nz)
        for f, m in sorted(self.den.items()):
            d = d * self._factor_poly(f) ** m
        return d

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            other = BinFraction(other)
        if not isinstance(other, BinFraction):
            return NotImplemented
        return self.num * other.expanded_denominator() == other.num * self.expanded_denominator()

    __hash__ = None

    def simplify(self) -> "BinFraction":
        """Cancel denominator factors that divide the numerator exactly."""
        num = self.num
        den = Counter(self.den)
        for f in sorted(den):
            while den[f] > 0:
                try:
                    num = exact_divide(num, self._factor_poly(f))
                except NotDivisible:
                    break
                den[f] -= 1
        return BinFraction(num, den)

    def to_laurent(self) -> LaurentPoly:
        num = self.num
        for f, m in sorted(self.den.items()):
            for _ in range(m):
                try:
                    num = exact_divide(num, self._factor_poly(f))
                except NotDivisible as exc:
                    raise NotPolynomial(f"numerator not divisible by factor {f}") from exc
        return num

    def __repr__(self) -> str:
        den = " * ".join(f"(z{j + 1} - q^{c}*z{i + 1})^{m}" for (i, j, c), m in sorted(self.den.items()))
        return f"BinFraction({self.num.to_text()!r} / {den or '1'})"


def bin_to_laurent(F: BinFraction) -> LaurentPoly:
    return F.to_laurent()
