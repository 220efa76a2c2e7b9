"""Invariant suite for a given weight vector.

Each check returns a named pass/fail result; the CLI prints one line per
check and exits nonzero on any failure.  The checks are the testable
shadows of the structural facts the rings rely on: integrality of
structure constants, multiplicativity of the comparison map,
associativity and commutativity of the twisted product, agreement of
the identity sector with the orbifold ring, and so on.

Exhaustive sector-triple checks run on plain integer structure
constants (reduction commutes with multiplying by a monomial, so this
is the same algebra the element path performs); a sampled cross-check
through the actual element path guards the equivalence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arith import as_weights, rotation_number
from .chenruan import CrRing
from .kawasaki import KawasakiRing, subset_lcm_table
from .orbifold import OrbifoldRing


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = field(default="")


def _reduce_raw(ring: CrRing, coeff: int, power: int, sector: int):
    """Reduced monomial (coeff, power) in a sector, or None when zero."""
    s = ring.sectors[sector]
    if power >= s.d:
        coeff %= s.c
    return None if coeff == 0 else (coeff, power)


def star_associativity_scan(ring: CrRing, budget: int = 2_000_000, seed: int = 0):
    """Check (a_i * a_j) * a_k == a_i * (a_j * a_k) over sector triples.

    Runs on integer structure-constant tables; exhaustive when ell^3
    fits the budget, uniformly sampled otherwise.  Returns (ok, detail).
    """
    ell = ring.ell
    raw = [[ring._raw_product(i, j) for j in range(ell)] for i in range(ell)]
    red = [[_reduce_raw(ring, *raw[i][j]) for j in range(ell)] for i in range(ell)]

    def one_side(first, second_raw, final_sector):
        if first is None:
            return None
        c1, e1 = first
        c2, e2, _ = second_raw
        return _reduce_raw(ring, c1 * c2, e1 + e2, final_sector)

    total = ell**3
    if total <= budget:
        triples = (
            (i, j, k) for i in range(ell) for j in range(ell) for k in range(ell)
        )
        detail = f"exhaustive over {total} triples"
    else:
        rng = random.Random(seed)
        triples = (
            (rng.randrange(ell), rng.randrange(ell), rng.randrange(ell))
            for _ in range(budget)
        )
        detail = f"sampled {budget} of {total} triples"

    for i, j, k in triples:
        w = (i + j + k) % ell
        lhs = one_side(red[i][j], raw[(i + j) % ell][k], w)
        rhs = one_side(red[j][k], raw[i][(j + k) % ell], w)
        if lhs != rhs:
            return False, f"triple ({i},{j},{k}): {lhs} != {rhs}"
    return True, detail


def run_checks(weights, seed: int = 20240601, triple_budget: int = 2_000_000):
    """All invariant checks for one weight vector, as CheckResult records."""
    w = as_weights(weights)
    rng = random.Random(seed)
    kaw = KawasakiRing(w)
    orb = OrbifoldRing(w)
    cr = CrRing(w)
    results = []

    def check(name, passed, detail=""):
        results.append(CheckResult(name, bool(passed), detail))

    # gcd and lcm sandwich every weight
    check(
        "weights: g divides each b_k divides lcm",
        all(bk % w.g == 0 and w.ell % bk == 0 for bk in w.b),
    )

    # rotation numbers: periodic, complements sum to an integer
    ok = all(
        rotation_number(bk, m + w.ell, w.ell) == rotation_number(bk, m, w.ell)
        and rotation_number(bk, m, w.ell) + rotation_number(bk, w.ell - m, w.ell) in (0, 1)
        for bk in w.b
        for m in range(1, w.ell)
    )
    check("rotation numbers: periodic and complement-integral", ok)

    # subset-lcm table divisibility (integer structure constants)
    ok = all(
        (kaw.ell(k) * kaw.ell(m)) % kaw.ell(k + m) == 0
        for k in range(w.n + 1)
        for m in range(w.n + 1 - k)
    )
    check("coarse ring: l_(k+m) divides l_k * l_m", ok)

    # generator products associate
    gens = [kaw.gamma(k) for k in range(w.n + 1)]
    ok = all(
        (x * y) * z == x * (y * z) for x in gens for y in gens for z in gens
    )
    check("coarse ring: generator products associate", ok)

    # structure constants only see the coarse space: invariant under b -> c*b
    for scale in (2, 3):
        scaled = subset_lcm_table(tuple(scale * bk for bk in w.b))
        ok = all(
            scaled[k] * scaled[m] // scaled[k + m]
            == kaw.ell(k) * kaw.ell(m) // kaw.ell(k + m)
            for k in range(w.n + 1)
            for m in range(w.n + 1 - k)
        )
        check(f"coarse ring: structure constants unchanged under b -> {scale}b", ok)

    # comparison map is multiplicative, including the vanishing range
    ok = all(
        kaw.qstar(kaw.gamma(k) * kaw.gamma(m), orb)
        == orb.multiply(kaw.qstar(kaw.gamma(k), orb), kaw.qstar(kaw.gamma(m), orb))
        for k in range(w.n + 1)
        for m in range(w.n + 1)
    )
    check("comparison map: multiplicative on generator pairs", ok)

    # k * u^top vanishes exactly when N divides k
    ks = sorted(set(range(1, min(w.N, 60) + 1)) | {w.N - 1, w.N, w.N + 1, 2 * w.N})
    ok = all(
        orb.u(orb.top, k).is_zero == (k % w.N == 0) for k in ks if k >= 1
    )
    check("orbifold ring: k u^top = 0 exactly when N | k", ok)

    # the image of the degree-2 coarse generator is nilpotent at the top power
    if w.n >= 1:
        check(
            "orbifold ring: (l_1 u)^top = 0",
            (orb.u(1, kaw.ell(1)) ** orb.top).is_zero,
        )
    else:
        check("orbifold ring: (l_1 u)^top = 0", True, "trivial for n = 0")

    # sector pair enumeration, shared by the pairwise checks below
    ell = cr.ell
    if ell * ell <= 100_000:
        pairs = [(i, j) for i in range(ell) for j in range(i, ell)]
        pair_detail = "exhaustive"
    else:
        pairs = [(rng.randrange(ell), rng.randrange(ell)) for _ in range(50_000)]
        pair_detail = f"sampled {len(pairs)} pairs"

    # excess of rotation numbers is 0 or 1 on every coordinate
    ok = True
    for i, j in pairs:
        t = (i + j) % ell
        for k in range(w.n + 1):
            if cr._rot[i][k] + cr._rot[j][k] - cr._rot[t][k] not in (0, ell):
                ok = False
    check("sectors: rotation-number excess lies in {0,1}", ok, pair_detail)

    # twisted product: commutative, unital
    cr_gens = [cr.generator(j) for j in range(ell)]
    check(
        "twisted product: commutative on generators",
        all(cr.star(cr_gens[i], cr_gens[j]) == cr.star(cr_gens[j], cr_gens[i]) for i, j in pairs),
        pair_detail,
    )
    samples = [
        cr.element(
            {
                rng.randrange(ell): {rng.randrange(w.n + 2): rng.randrange(-9, 10)}
                for _ in range(3)
            }
        )
        for _ in range(5)
    ]
    check(
        "twisted product: sector-0 generator is the unit",
        all(cr.star(cr.one(), x) == x for x in cr_gens + samples),
    )

    # associativity: exhaustive on structure constants, sampled on elements
    ok, detail = star_associativity_scan(cr, budget=triple_budget, seed=seed)
    check("twisted product: associative (structure-constant scan)", ok, detail)
    ok = True
    for _ in range(min(200, ell**3)):
        i, j, k = (rng.randrange(ell) for _ in range(3))
        lhs = cr.star(cr.star(cr_gens[i], cr_gens[j]), cr_gens[k])
        rhs = cr.star(cr_gens[i], cr.star(cr_gens[j], cr_gens[k]))
        if lhs != rhs:
            ok = False
    check("twisted product: associative (sampled element path)", ok)

    # degrees add when the product survives
    ok = True
    for i, j in pairs:
        x, y = cr_gens[i], cr_gens[j]
        if x.is_zero or y.is_zero:
            continue
        p = cr.star(x, y)
        if not p.is_zero and p.degree() != x.degree() + y.degree():
            ok = False
    check("grading: additive on surviving generator products", ok, pair_detail)

    # the identity sector is the orbifold ring
    s0 = cr.sectors[0]
    ok = s0.c == w.N and s0.d == w.n + 1 and s0.degree_shift == 0
    for _ in range(20):
        pa = {rng.randrange(w.n + 2): rng.randrange(-9, 10) for _ in range(3)}
        pb = {rng.randrange(w.n + 2): rng.randrange(-9, 10) for _ in range(3)}
        lhs = cr.star(cr.element({0: pa}), cr.element({0: pb}))
        rhs = orb.multiply(orb.element(pa), orb.element(pb))
        if lhs.parts.get(0, {}) != rhs.coeffs:
            ok = False
    check("identity sector: agrees with the orbifold ring", ok)

    # sectors acting trivially on every coordinate are exactly the
    # multiples of ell/g, and they look like the identity sector
    global_sectors = [j for j in range(ell) if all(t == 0 for t in cr._rot[j])]
    ok = global_sectors == [j for j in range(ell) if j % (ell // w.g) == 0]
    for j in global_sectors:
        s = cr.sectors[j]
        if s.d != w.n + 1 or s.c != w.N or s.degree_shift != 0:
            ok = False
        if cr_gens[j] * cr_gens[(ell - j) % ell] != cr.one():
            ok = False
    check(
        "global stabilizer: trivial-action sectors form the expected subgroup",
        ok,
        f"{len(global_sectors)} sector(s)" + (" (gerbe)" if w.g > 1 else ""),
    )

    return results
