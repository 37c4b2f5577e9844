"""Divisibility by the wheel factor, wheel-condition substitutions and
specialization probes."""
from __future__ import annotations

from dataclasses import dataclass

from .exactpoly import K, LaurentPoly, NotDivisible, Q, Q1, Q2, divides, exact_divide
from .results import CheckResult

FACTORS = {
    "q1-1": Q1 - 1,
    "q2-1": Q2 - 1,
    "q1q2-1": Q - 1,
}


class AllEqual(ValueError):
    pass


def wheel_factor(d: int) -> LaurentPoly:
    if d < 1:
        raise ValueError("d must be positive")
    return ((Q1 - 1) * (Q2 - 1) * (Q - 1)) ** (d - 1)


@dataclass
class Divided:
    ok: bool
    quotient: LaurentPoly | None = None
    factor: str | None = None      # first factor that failed
    times: int = 0                 # how often it did divide before failing

    def __bool__(self) -> bool:
        return self.ok


def check_divisible(f, d: int) -> Divided:
    f = getattr(f, "value", f)
    cur = f
    for name, g in FACTORS.items():
        for t in range(d - 1):
            try:
                cur = exact_divide(cur, g.with_nz(cur.nz))
            except NotDivisible:
                return Divided(False, None, name, t)
    return Divided(True, cur)


def _mono(nz: int, a: int, b: int, k: int) -> tuple:
    z = [0] * nz
    z[k] = 1
    return (a, b) + tuple(z)


def wheel_substitute(f, i: int, j: int, k: int, variant: str = "q1") -> LaurentPoly:
    """Impose z_i = z_j/q_c = z_k/q (c = 1 for "q1", 2 for "q2"), 0-based indices.

    Coincident indices turn a relation into a condition on K:
    i = j forces q_c = 1, j = k forces the other q = 1, i = k forces q = 1
    (q2 -> 1/q1).  These are applied by reducing the exponents.
    """
    f = getattr(f, "value", f)
    if variant not in ("q1", "q2"):
        raise ValueError("variant must be q1 or q2")
    if i == j == k:
        raise AllEqual("the wheel condition says nothing when i = j = k")
    n = f.nz
    for x in (i, j, k):
        if not 0 <= x < n:
            raise IndexError(f"index {x} out of range for {n} variables")
    # exponent of the partner q in z_j = q_other^{-1} z_k
    other = (0, -1) if variant == "q1" else (-1, 0)
    sub = {}
    if i == k:
        sub[j] = _mono(n, *other, k)
        out = f.substitute_z(sub)
        return out.map_q(lambda a, b: (a - b, 0))
    if i != j:
        sub[j] = _mono(n, *other, k)
    sub[i] = _mono(n, -1, -1, k)
    out = f.substitute_z(sub)
    if i == j:
        return out.map_q((lambda a, b: (0, b)) if variant == "q1" else (lambda a, b: (a, 0)))
    if j == k:
        return out.map_q((lambda a, b: (a, 0)) if variant == "q1" else (lambda a, b: (0, b)))
    return out


def specialization_probe(f, kind: str) -> LaurentPoly:
    """Set z_i = q1^i, q2^i or q^{-i} (i from 1) and return the resulting element of K."""
    f = getattr(f, "value", f)
    step = {"q1pow": (1, 0), "q2pow": (0, 1), "qinvpow": (-1, -1)}.get(kind)
    if step is None:
        raise ValueError(f"unknown probe {kind!r}")
    out: dict = {}
    for key, c in f.terms.items():
        a, b = key[0], key[1]
        for t, e in enumerate(key[2:], start=1):
            a += e * t * step[0]
            b += e * t * step[1]
        out[(a, b)] = out.get((a, b), 0) + c
    return LaurentPoly(0, {k: c for k, c in out.items() if c})


def primitivity_check(E) -> CheckResult:
    E = getattr(E, "value", E)
    if E.is_zero():
        return CheckResult(False, "zero", "quotient vanishes")
    if E.content() != 1:
        return CheckResult(False, "content", f"integer content {E.content()}")
    for name, g in list(FACTORS.items()) + [("q1-q2", Q1 - Q2)]:
        if divides(g.with_nz(E.nz), E):
            return CheckResult(False, name, f"divisible by {name}")
    return CheckResult(True, None, "primitive")


def q1_minus_q2_probe(d: int, v: int) -> CheckResult:
    """The localized generator at z_i = q^{-i} must not vanish modulo q1 - q2."""
    from .shuffle import sym_g_vandermonde

    val = specialization_probe(sym_g_vandermonde(d, v), "qinvpow")
    if val.is_zero():
        return CheckResult(False, "zero", "probe vanishes")
    if divides(Q1 - Q2, val):
        return CheckResult(False, "q1-q2", "probe divisible by q1-q2")
    return CheckResult(True, val, "q1-q2 does not divide the probe")


def m_classes() -> tuple[LaurentPoly, LaurentPoly]:
    """The two generators for (d, v) = (2, 0) as symmetric polynomials."""
    sl = LaurentPoly.one(2) + LaurentPoly.mono(2, z=(-1, 1)) + LaurentPoly.mono(2, z=(1, -1))
    m1 = (Q + K(1, -1, 0) + K(1, 0, -1)).with_nz(2) - sl
    m2 = (K(1, -1, -1) + Q1 + Q2).with_nz(2) - sl
    return m1, m2
