"""The eleven acceptance checks, shared by `bpskalc selftest` and the test suite.

Each check returns (passed, detail).  Everything is exact; nothing is retried.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .bwb import a_via_bwb, product_class
from .coproduct import check_1236bis, check_cor44, check_primitive_shuffle
from .divisibility import (check_divisible, m_classes, primitivity_check,
                           wheel_substitute)
from .dtseries import (a_d_enumerate, macmahon, product_formula,
                       slope_bijection_all, wallcrossing_holds)
from .exactpoly import K, LaurentPoly, Q, Q1, Q2
from .schur import expand_in_schur, from_schur
from .shuffle import a_element, e_class, p_element, shuffle_mul
from .symfunc import newton_p, phi_consistency, primitives_dim, proportional
from .weights import (dominant_cocharacters, enumerate_magic_weights, on_face,
                      propboundary_check, rho)


@dataclass
class Outcome:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] criterion {self.number:2d}: {self.title} ({self.seconds:.1f}s) {self.detail}".rstrip()


def _sl() -> LaurentPoly:
    return LaurentPoly.one(2) + LaurentPoly.mono(2, z=(-1, 1)) + LaurentPoly.mono(2, z=(1, -1))


def closed_forms():
    one_q1 = 1 - K(1, -1, 0)
    one_q2 = 1 - K(1, 0, -1)
    sl = _sl()
    want20 = (one_q1 * one_q2).with_nz(2) * (sl - (K(1, -1, 0) + K(1, 0, -1) + K(1, -1, -1)).with_nz(2))
    z1z2 = LaurentPoly.zvar(0, 2) + LaurentPoly.zvar(1, 2)
    want21 = (one_q1 * one_q2 * (1 - K(1, -1, -1))).with_nz(2) * z1z2
    got20, got21 = e_class(2, 0).value, e_class(2, 1).value
    bad = []
    if got20 != want20:
        bad.append("e_class(2,0)")
    if got21 != want21:
        bad.append("e_class(2,1)")
    for f in (got20, got21):
        if from_schur(expand_in_schur(f), 2) != f:
            bad.append("schur round trip")
    return not bad, ", ".join(bad)


def d2_relations():
    m1, m2 = m_classes()
    qinv = K(1, -1, -1)
    one = LaurentPoly.one(0)
    prod11 = shuffle_mul(LaurentPoly.one(1), LaurentPoly.one(1))
    bad = []
    if prod11 != (m1 + m2) * qinv:
        bad.append("E10*E10")
    if e_class(2, 0).value != m1 * (K(1, -1, 0) + K(1, 0, -1)) - m2 * (qinv + one):
        bad.append("E20")
    a, b = qinv, qinv
    c, d = K(1, -1, 0) + K(1, 0, -1), -(qinv + one)
    det = a * d - b * c
    if det != -qinv * (1 + K(1, -1, 0)) * (1 + K(1, 0, -1)):
        bad.append("determinant")
    p20 = p_element(1, 0, 2).value
    if p20 != (m1 - m2) * qinv:
        bad.append("P20 vs M")
    if p20 != (K(1, -2, -2) * (Q1 - 1) * (Q2 - 1) * (Q - 1)).with_nz(2):
        bad.append("P20 closed form")
    return not bad, ", ".join(bad)


DIV_CASES = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]


def divisibility_suite():
    bad = []
    for d, v in DIV_CASES:
        r = check_divisible(e_class(d, v), d)
        if not r:
            bad.append(f"({d},{v}) not divisible at {r.factor}")
            continue
        p = primitivity_check(r.quotient)
        if not p:
            bad.append(f"({d},{v}) quotient {p.detail}")
    if check_divisible(e_class(2, 0), 2):
        bad.append("negative control (2,0) divided")
    return not bad, ", ".join(bad)


def oracle_equivalence():
    bad = []
    count = 0
    for n, d in product(range(1, 5), range(1, 5)):
        if n * d > 4:
            continue
        for v in range(-3, 4):
            if math.gcd(d, v) != 1:
                continue
            count += 1
            if a_via_bwb(n, d, v) != a_element(n * d, n * v).value:
                bad.append(f"(n,d,v)=({n},{d},{v})")
    for x, y in product(range(-2, 3), repeat=2):
        for kernel in ("xi", "xip"):
            lhs = from_schur(product_class((x,), (y,), kernel), 2)
            rhs = shuffle_mul(LaurentPoly.mono(1, z=(x,)), LaurentPoly.mono(1, z=(y,)), kernel)
            count += 1
            if lhs != rhs:
                bad.append(f"induction ({x},{y}) {kernel}")
    return not bad, ", ".join(bad) or f"{count} comparisons"


def coproduct_suite():
    bad = []
    for n, a, b in [(2, 1, 1), (3, 1, 2), (3, 2, 1)]:
        for d, v in [(1, 0), (1, 1)]:
            if not check_1236bis(n, d, v, a, b):
                bad.append(f"1236bis {(n, a, b, d, v)}")
            if check_1236bis(n, d, v, a, b, opposite=True):
                bad.append(f"opposite face passed {(n, a, b, d, v)}")
    for v in (0, 1):
        for route in ("T", "S"):
            if not check_cor44(1, 1, 1, 1, 1, v, route=route):
                bad.append(f"cor44 v={v} {route}")
        if check_cor44(1, 1, 1, 1, 1, v, route="S", swap_twist=False):
            bad.append(f"untwisted swap passed v={v}")
    return not bad, ", ".join(bad)


def _wheel_zero(f: LaurentPoly) -> bool:
    n = f.nz
    for i, j, k in product(range(n), repeat=3):
        if len({i, j, k}) < 3:
            continue
        for variant in ("q1", "q2"):
            if not wheel_substitute(f, i, j, k, variant).is_zero():
                return False
    return True


def wheel_products():
    """xi-products of generators A_{d,v}, |v| <= 1, with 3 or 4 variables in total."""
    gens = {(d, v): a_element(d, v).value for d in (1, 2, 3) for v in (-1, 0, 1)}
    shapes = [(1, 1, 1), (1, 2), (2, 1), (1, 1, 1, 1), (1, 3), (3, 1), (2, 2), (1, 1, 2), (2, 1, 1)]
    done: dict = {}

    def prefix(labels):
        # left-nested products share prefixes, e.g. (1,1,1) inside (1,1,1,1)
        if labels not in done:
            done[labels] = (gens[labels[0]] if len(labels) == 1
                            else shuffle_mul(prefix(labels[:-1]), gens[labels[-1]]))
        return done[labels]

    out = []
    for shape in shapes:
        vs = [(0,) * len(shape), (1,) * len(shape), (-1,) + (1,) * (len(shape) - 1),
              (1,) + (0,) * (len(shape) - 1)]
        for vv in vs:
            out.append((shape, vv, prefix(tuple(zip(shape, vv)))))
    return out


def wheel_suite():
    bad = []
    for v in (0, 1, 2):
        if not _wheel_zero(e_class(3, v).value):
            bad.append(f"e_class(3,{v})")
    n = 0
    for shape, vv, f in wheel_products():
        n += 1
        if not _wheel_zero(f):
            bad.append(f"product {shape} {vv}")
    return not bad, ", ".join(bad) or f"{n} products"


def commutativity_suite():
    """Pairs of equal-slope elements (generators and their products) with at most 4 variables."""
    bad = []
    n = 0
    for v in (-1, 0, 1):
        e1, e2, e3 = (e_class(k, k * v).value for k in (1, 2, 3))
        pool = {"E1": e1, "E2": e2, "E3": e3,
                "E1*E1": shuffle_mul(e1, e1), "E1*E2": shuffle_mul(e1, e2)}
        names = sorted(pool)
        for i, x in enumerate(names):
            for y in names[i + 1:]:
                f, g = pool[x], pool[y]
                if f.nz + g.nz > 4:
                    continue
                n += 1
                if shuffle_mul(f, g) != shuffle_mul(g, f):
                    bad.append(f"{x},{y} slope {v}")
    return not bad, ", ".join(bad) or f"{n} pairs"


def primitive_suite():
    bad = []
    for n in range(1, 9):
        dim, basis = primitives_dim(n)
        if dim != 1 or not proportional(basis[0], newton_p(n)):
            bad.append(f"primitives n={n} dim={dim}")
    for n, d, v in [(2, 1, 0), (3, 1, 0), (2, 1, 1)]:
        if not check_primitive_shuffle(n, d, v):
            bad.append(f"shuffle primitive {(n, d, v)}")
        r = phi_consistency(n, d, v)
        if not r:
            bad.append(f"phi {(n, d, v)} kernel dims {r.kernel_dims}")
    return not bad, ", ".join(bad)


def magic_counts():
    bad = []
    for d in range(1, 5):
        for w in range(-d, d + 1):
            if math.gcd(d, w) != 1:
                continue
            c = len(enumerate_magic_weights(d, w))
            if c != 1:
                bad.append(f"(d,w)=({d},{w}) has {c}")
    c20 = len(enumerate_magic_weights(2, 0))
    if c20 != 2:
        bad.append(f"(2,0) has {c20}")
    return not bad, ", ".join(bad)


def series_suite():
    N = 12
    bad = []
    lhs = a_d_enumerate(N)
    if list(lhs) != list(macmahon(N).coeffs):
        bad.append("a_d vs MacMahon")
    if list(product_formula({d: -d for d in range(1, N + 1)}, 1, N).coeffs) != list(macmahon(N).coeffs):
        bad.append("product formula vs MacMahon")
    if not wallcrossing_holds(N):
        bad.append("wall-crossing")
    if not slope_bijection_all(10 ** 4):
        bad.append("slope count")
    return not bad, ", ".join(bad)


def face_weights():
    """(lam, chi) pairs: magic weights from the enumerations above, d <= 3, on some face."""
    out = []
    for d in (2, 3):
        ws = [w for w in range(-d, d + 1) if math.gcd(d, w) == 1]
        if d == 2:
            ws.append(0)
        for w in ws:
            for chi in sorted(enumerate_magic_weights(d, w)):
                base = [c + r for c, r in zip(chi, rho(d))]
                for lam in dominant_cocharacters(d):
                    if on_face(base, lam):
                        out.append((lam, chi))
    return out


def propboundary_suite():
    bad = []
    n = 0
    for lam, chi in face_weights():
        for mu in dominant_cocharacters(len(chi)):
            n += 1
            if not propboundary_check(lam, mu, chi):
                bad.append(f"lam={lam} mu={mu} chi={tuple(int(c) for c in chi)}")
    return not bad, ", ".join(bad[:5]) or f"{n} cases"


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "closed-form K-classes", closed_forms),
    (2, "d=2 relation suite", d2_relations),
    (3, "divisibility and rank one", divisibility_suite),
    (4, "oracle equivalence", oracle_equivalence),
    (5, "coproduct suite", coproduct_suite),
    (6, "wheel conditions", wheel_suite),
    (7, "equal-slope commutativity", commutativity_suite),
    (8, "primitive spaces", primitive_suite),
    (9, "magic weight counts", magic_counts),
    (10, "series identities", series_suite),
    (11, "face decomposition brute force", propboundary_suite),
]


def run_one(number: int) -> Outcome:
    for num, title, fn in CRITERIA:
        if num == number:
            t = time.perf_counter()
            ok, detail = fn()
            return Outcome(num, title, bool(ok), detail, time.perf_counter() - t)
    raise KeyError(number)


def run_all() -> list[Outcome]:
    return [run_one(num) for num, _, _ in CRITERIA]
