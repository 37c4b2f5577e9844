"""K-theoretic coproduct by Schur-face restriction, Koszul twists, and the
product/coproduct compatibility checks.

Convention: the (a, b) component uses the cocharacter (0^{ad}, 1^{bd}) and keeps
the Schur terms s_chi with chi + rho on its face of the half-scaled polytope.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

from .exactpoly import K, LaurentPoly
from .results import CheckResult
from .schur import expand_in_schur, weyl_character
from .shuffle import a_element, a_hat, shuffle_mul, shuffle_product
from .symfunc import newton_p
from .weights import on_face, rho

MINUS_Q = K(-1, 1, 1)


@dataclass
class TensorElement:
    split: tuple
    terms: dict = field(default_factory=dict)   # (chiA, chiB) -> LaurentPoly in K

    def __post_init__(self):
        for (ca, cb) in self.terms:
            if (len(ca), len(cb)) != tuple(self.split):
                raise ValueError("tensor key lengths do not match the split")
        self.terms = {k: c for k, c in self.terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms


@dataclass(frozen=True)
class Twist:
    nu: LaurentPoly
    omega_sign: int

    def omega(self) -> LaurentPoly:
        return self.nu.shift((0,) * (self.nu.nz + 2), self.omega_sign)


def _face_cochar(a: int, b: int, d: int, opposite: bool = False) -> tuple:
    if opposite:
        return (1,) * (a * d) + (0,) * (b * d)
    return (0,) * (a * d) + (1,) * (b * d)


def delta_tilde(f, a: int, b: int, d: int = 1, opposite: bool = False) -> TensorElement:
    f = getattr(f, "value", f)
    n = a + b
    N = n * d
    if f.nz != N:
        raise ValueError(f"expected {N} variables, got {f.nz}")
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    mu = _face_cochar(a, b, d, opposite)
    rh = rho(N)
    out = {}
    for chi, c in expand_in_schur(f).items():
        if on_face([x + r for x, r in zip(chi, rh)], mu):
            out[(chi[: a * d], chi[a * d:])] = c
    return TensorElement((a * d, b * d), out)


def flatten(t: TensorElement) -> LaurentPoly:
    na, nb = t.split
    total = LaurentPoly.zero(na + nb)
    for (ca, cb), c in t.terms.items():
        left = weyl_character(ca).embed(na + nb, range(na))
        right = weyl_character(cb).embed(na + nb, range(na, na + nb))
        total = total + left * right * c
    return total


def twist(a: int, b: int, d: int) -> Twist:
    na, nb = a * d, b * d
    z = [-nb] * na + [na] * nb
    nu = LaurentPoly.mono(na + nb, 1, -a * b * d * d, -a * b * d * d, z)
    return Twist(nu, (-1) ** (na * nb))


def _twist_parts(a: int, b: int, d: int):
    """omega^{-1} split as (scalar, left z-monomial, right z-monomial)."""
    na, nb = a * d, b * d
    sign = (-1) ** (na * nb)
    scalar = K(sign, a * b * d * d, a * b * d * d)
    return scalar, LaurentPoly.mono(na, z=[nb] * na), LaurentPoly.mono(nb, z=[-na] * nb)


# ---- Prop. on the generators ---------------------------------------------

def check_1236bis(n: int, d: int, v: int, a: int, b: int, opposite: bool = False,
                  sign_flip: bool = False) -> CheckResult:
    """Delta~_{a,b}(A_n) = (A_a (x) A_b) * (-q) * (-1)^{abd^2} * q^nu, as flattened polynomials."""
    if a + b != n:
        raise ValueError("a + b must equal n")
    lhs = flatten(delta_tilde(a_element(n * d, n * v), a, b, d, opposite))
    na, nb = a * d, b * d
    left = a_element(na, a * v).value.embed(na + nb, range(na))
    right = a_element(nb, b * v).value.embed(na + nb, range(na, na + nb))
    tw = twist(a, b, d)
    sign = -tw.omega_sign if sign_flip else tw.omega_sign
    rhs = left * right * MINUS_Q * tw.nu.shift((0,) * (na + nb + 2), sign)
    diff = lhs - rhs
    return CheckResult(diff.is_zero(), diff if diff else None,
                       f"1236bis n={n} d={d} v={v} a={a} b={b}")


def check_1236bis_hat(n: int, d: int, v: int, a: int, b: int) -> CheckResult:
    """The normalized form: Delta~(A^_n) * omega^{-1} = A^_a (x) A^_b."""
    na, nb = a * d, b * d
    lhs = flatten(delta_tilde(a_hat(d, v, n), a, b, d))
    scalar, lm, rm = _twist_parts(a, b, d)
    lhs = lhs * scalar * lm.embed(na + nb, range(na)) * rm.embed(na + nb, range(na, na + nb))
    rhs = (a_hat(d, v, a).value.embed(na + nb, range(na))
           * a_hat(d, v, b).value.embed(na + nb, range(na, na + nb)))
    diff = lhs - rhs
    return CheckResult(diff.is_zero(), diff if diff else None, "1236bis normalized")


# ---- tensor lists -----------------------------------------------------------
# A tensor is a list of (K-coefficient, left poly, right poly).

def _as_pairs(t: TensorElement) -> list:
    return [(c, weyl_character(ca), weyl_character(cb)) for (ca, cb), c in t.terms.items()]


def _delta_pairs(x: LaurentPoly, f1: int, f2: int, d: int, twisted: bool) -> list:
    """Delta_{f1,f2}(x) as a tensor list; a zero block acts as the identity."""
    if f1 == 0:
        return [(K(1), LaurentPoly.one(0), x)]
    if f2 == 0:
        return [(K(1), x, LaurentPoly.one(0))]
    pairs = _as_pairs(delta_tilde(x, f1, f2, d))
    if not twisted:
        return pairs
    scalar, lm, rm = _twist_parts(f1, f2, d)
    return [(c * scalar, l * lm, r * rm) for c, l, r in pairs]


def _mul(x: LaurentPoly, y: LaurentPoly, kernel: str) -> LaurentPoly:
    if x.nz == 0:
        return y * x
    if y.nz == 0:
        return x * y
    return shuffle_mul(x, y, kernel)


def _flatten_pairs(pairs: list, nl: int, nr: int) -> LaurentPoly:
    total = LaurentPoly.zero(nl + nr)
    for c, l, r in pairs:
        total = total + (l.with_nz(nl) if l.nz == 0 else l).embed(nl + nr, range(nl)) \
            * (r.with_nz(nr) if r.nz == 0 else r).embed(nl + nr, range(nl, nl + nr)) * c
    return total


def _index_set(a: int, b: int, c: int, e: int):
    for f1 in range(a + 1):
        f2 = a - f1
        f3 = c - f1
        f4 = b - f3
        if f3 < 0 or f4 < 0 or f2 + f4 != e:
            continue
        yield f1, f2, f3, f4


def check_cor44(a: int, b: int, c: int, e: int, d: int = 1, v: int = 0,
                route: str = "T", swap_twist: bool = True) -> CheckResult:
    """Coproduct of a product versus products of coproducts on A-generators.

    route "T": twisted coproduct Delta = Delta~ * omega^{-1}, xi product, plain swap.
    route "S": untwisted Delta~, xip product on rescaled inputs, swap twisted by
    sigma_{f2}^{2 f3 d} and sigma_{f3}^{-2 f2 d} (disable with swap_twist=False).
    """
    if a + b != c + e:
        raise ValueError("a + b must equal c + e")
    if min(a, b, c, e) < 1:
        raise ValueError("all block sizes must be positive")
    na, nb, nc, ne = a * d, b * d, c * d, e * d
    xa = a_element(na, a * v).value
    xb = a_element(nb, b * v).value
    if route == "T":
        kernel = "xi"
        top_poly = shuffle_mul(xa, xb, kernel)
        pairs = _delta_pairs(top_poly, c, e, d, twisted=True)
        top = _flatten_pairs(pairs, nc, ne)
        twisted = True
    elif route == "S":
        kernel = "xip"
        xa = xa.shift((0, 0) + (-nb,) * na).shift((-a * b * d * d, -a * b * d * d) + (0,) * na,
                                                   (-1) ** (a * b * d * d))
        xb = xb.shift((0, 0) + (na,) * nb)
        top = flatten(delta_tilde(shuffle_mul(xa, xb, kernel), c, e, d))
        twisted = False
    else:
        raise ValueError(f"unknown route {route!r}")
    bottom_pairs = []
    for f1, f2, f3, f4 in _index_set(a, b, c, e):
        da = _delta_pairs(xa, f1, f2, d, twisted)
        db = _delta_pairs(xb, f3, f4, d, twisted)
        for (c1, l1, r1), (c2, l2, r2) in iproduct(da, db):
            if route == "S" and swap_twist:
                if r1.nz:
                    r1 = r1.shift((0, 0) + (2 * f3 * d,) * r1.nz)
                if l2.nz:
                    l2 = l2.shift((0, 0) + (-2 * f2 * d,) * l2.nz)
            left = _mul(l1, l2, kernel)
            right = _mul(r1, r2, kernel)
            bottom_pairs.append((c1 * c2, left, right))
    bottom = _flatten_pairs(bottom_pairs, nc, ne)
    diff = top - bottom
    return CheckResult(diff.is_zero(), diff if diff else None,
                       f"cor44 route={route} a={a} b={b} c={c} e={e} d={d} v={v}")


# ---- primitives --------------------------------------------------------------

def hat_monomial(parts: Sequence[int], d: int, v: int) -> LaurentPoly:
    """A^_{p1} * A^_{p2} * ... under the xi product."""
    factors = [a_hat(d, v, p).value for p in parts]
    return shuffle_product(factors) if len(factors) > 1 else factors[0]


def primitive_candidate(n: int, d: int, v: int, coeffs: dict | None = None) -> LaurentPoly:
    """Image of p_n with e_k sent to A^_{kd,kv}."""
    coeffs = newton_p(n).terms if coeffs is None else coeffs
    total = LaurentPoly.zero(n * d)
    for part, c in coeffs.items():
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError("non-integral Newton coefficient")
        total = total + hat_monomial(part, d, v) * int(c)
    return total


def check_primitive_shuffle(n: int, d: int, v: int, coeffs: dict | None = None) -> CheckResult:
    cand = primitive_candidate(n, d, v, coeffs)
    if cand.is_zero():
        return CheckResult(False, None, "candidate vanishes")
    for a in range(1, n):
        t = delta_tilde(cand, a, n - a, d)
        if not t.is_zero():
            return CheckResult(False, flatten(t), f"Delta~_{a},{n - a} does not vanish")
    return CheckResult(True, None, f"primitive n={n} d={d} v={v}")


def coassociativity(f, a: int, b: int, c: int, d: int = 1) -> CheckResult:
    """(Delta~_{a,b} (x) id) Delta~_{a+b,c} = (id (x) Delta~_{b,c}) Delta~_{a,b+c} on a polynomial."""
    f = getattr(f, "value", f)
    na, nb, nc = a * d, b * d, c * d
    N = na + nb + nc
    lhs = LaurentPoly.zero(N)
    for (c1, c2), coef in delta_tilde(f, a + b, c, d).terms.items():
        inner = flatten(delta_tilde(weyl_character(c1), a, b, d))
        lhs = lhs + inner.embed(N, range(na + nb)) * weyl_character(c2).embed(N, range(na + nb, N)) * coef
    rhs = LaurentPoly.zero(N)
    for (c1, c2), coef in delta_tilde(f, a, b + c, d).terms.items():
        inner = flatten(delta_tilde(weyl_character(c2), b, c, d))
        rhs = rhs + weyl_character(c1).embed(N, range(na)) * inner.embed(N, range(na, N)) * coef
    diff = lhs - rhs
    return CheckResult(diff.is_zero(), diff if diff else None, "coassociativity")
