"""Acceptance gate: every criterion at its stated (exact) tolerance.

Each test prints one pass/fail line; run `pytest tests/test_acceptance.py -s`
to see them live.  All arithmetic is exact, so the tolerances are zero; the
asserted runtime ceilings are part of the criteria.
"""

import time
from fractions import Fraction
from random import Random

from hahnsl2 import hahn, reps, terwilliger, usl2
from hahnsl2.reporting import all_pass
from tests.conftest import random_free_poly, random_usl2_element

Q = Fraction


def _report(number: int, label: str, ok: bool, elapsed: float, limit: float) -> None:
    verdict = "PASS" if ok and elapsed < limit else "FAIL"
    print(f"ACCEPTANCE {number} [{verdict}] {label} ({elapsed:.2f}s, limit {limit:.0f}s)")
    assert ok, f"criterion {number} failed: {label}"
    assert elapsed < limit, f"criterion {number} exceeded {limit}s ({elapsed:.2f}s)"


def test_criterion_1_power_identities():
    t0 = time.perf_counter()
    items = usl2.power_identity_suite(8)
    elapsed = time.perf_counter() - t0
    _report(1, "six power-identity families exact for n <= 8", all_pass(items), elapsed, 10.0)


def test_criterion_2_even_presentation_relations():
    t0 = time.perf_counter()
    items = usl2.verify_ue_presentation()
    elapsed = time.perf_counter() - t0
    _report(2, "even-subalgebra presentation relations exact", all_pass(items), elapsed, 1.0)


def test_criterion_3_natural_map_facts():
    t0 = time.perf_counter()
    ok = all_pass(hahn.verify_natural_well_defined())
    pres = hahn.presentation()
    lam = usl2.casimir()
    ok = ok and hahn.natural(pres.beta).is_zero()
    ok = ok and hahn.natural(pres.alpha) == (lam - usl2.one()).scale(Q(1, 4))
    ok = ok and hahn.natural(pres.omega) == (lam.scale(2) - usl2.one().scale(3)).scale(Q(3, 16))
    combo = pres.omega.scale(16) - pres.alpha.scale(24) + pres.one.scale(3)
    ok = ok and hahn.natural(combo).is_zero()
    elapsed = time.perf_counter() - t0
    _report(3, "natural map well defined with exact image facts", ok, elapsed, 5.0)


def test_criterion_4_ideal_membership_certificates():
    t0 = time.perf_counter()
    items, certs = hahn.verify_hahn_identities(8)
    ok = all_pass(items)
    targets = dict(hahn._identity_targets())
    for item in items:
        if item.certificate_ref is not None:
            ok = ok and certs[item.certificate_ref].replay() == targets[item.name]
    kitems, kcerts = hahn.verify_kernel_and_inverse(8)
    ok = ok and all_pass(kitems)
    ktargets = dict(hahn._kernel_relation_targets())
    for item in kitems:
        if item.certificate_ref is not None:
            cert = kcerts[item.certificate_ref]
            name = item.name
            ok = ok and cert.replay() == ktargets[name]
            ok = ok and hahn.natural(cert.replay()).is_zero()
    elapsed = time.perf_counter() - t0
    _report(4, "all quotient identities certified at bound 8 and replayed", ok, elapsed, 300.0)


def test_criterion_5_module_facts():
    t0 = time.perf_counter()
    ok = all_pass(reps.verify_module_family(12))
    # classification round-trip across all four families for d <= 5
    for d in range(6):
        for builder, n, parity in (
            (reps.build_L0, 2 * d, 0),
            (reps.build_L0, 2 * d + 1, 0),
            (reps.build_L1, 2 * d + 1, 1),
            (reps.build_L1, 2 * d + 2, 1),
        ):
            label, _ = reps.classify_ue_irreducible(builder(n))
            ok = ok and (label.n, label.parity, label.d) == (n, parity, d)
    # Burnside closure dimensions are the full matrix algebras
    for n in range(13):
        ok = ok and reps.is_irreducible(reps.build_L0(n))
        if n >= 1:
            ok = ok and reps.is_irreducible(reps.build_L1(n))
    elapsed = time.perf_counter() - t0
    _report(5, "module family facts and classification round-trip (n <= 12)", ok, elapsed, 120.0)


def test_criterion_6_pullback_splitting():
    t0 = time.perf_counter()
    items = reps.verify_pullback_splitting(12)
    elapsed = time.perf_counter() - t0
    _report(6, "pullback modules split into two distinct irreducibles (n <= 12)", all_pass(items), elapsed, 60.0)


def test_criterion_7_hypercube_decomposition():
    t0 = time.perf_counter()
    ok = True
    for D in range(2, 11):
        sd = terwilliger.decompose_standard(terwilliger.CubeContext(D=D))
        ok = ok and sd.formula_ok and sd.dimension_ok
        total = sum(m * (n + 1) for n, m in sd.multiplicities.items())
        ok = ok and total == 2**D
    elapsed = time.perf_counter() - t0
    _report(7, "hypercube multiplicities match the closed form (D <= 10)", ok, elapsed, 120.0)


def test_criterion_8_halved_cube_structure():
    # the closed form gives 4, 5, 11, 14, 24, 30, 45 for D = 2..8
    t0 = time.perf_counter()
    ok = True
    small_elapsed = None
    for D in range(2, 9):
        h = terwilliger.HalvedContext(terwilliger.CubeContext(D=D))
        dim = terwilliger.te_dimension(h)
        hd = terwilliger.decompose_halved(h)
        formula = terwilliger.te_dimension_formula(D)
        ok = ok and dim == formula == hd.wedderburn_dimension
        ok = ok and hd.labels_ok and hd.formula_ok and hd.dimension_ok
        if D == 6:
            small_elapsed = time.perf_counter() - t0
    elapsed = time.perf_counter() - t0
    ok = ok and small_elapsed is not None and small_elapsed < 30.0
    print(f"  (D <= 6 portion: {small_elapsed:.2f}s, limit 30s)")
    _report(8, "halved-cube algebra dimension matches formula and Wedderburn sum (D <= 8)", ok, elapsed, 600.0)


def test_criterion_9_property_suites():
    t0 = time.perf_counter()
    failures = 0

    rng = Random(101)
    for _ in range(1000):
        a = random_usl2_element(rng, max_terms=3, max_exp=2)
        b = random_usl2_element(rng, max_terms=3, max_exp=2)
        c = random_usl2_element(rng, max_terms=3, max_exp=2)
        if usl2.multiply(a, usl2.multiply(b, c)) != usl2.multiply(usl2.multiply(a, b), c):
            failures += 1

    rng = Random(202)
    for _ in range(500):
        a = random_usl2_element(rng, max_terms=3, max_exp=2)
        b = random_usl2_element(rng, max_terms=3, max_exp=2)
        if usl2.rho(usl2.multiply(a, b)) != usl2.multiply(usl2.rho(a), usl2.rho(b)):
            failures += 1
        if usl2.rho(usl2.rho(a)) != a:
            failures += 1

    rng = Random(303)
    for _ in range(500):
        p = random_free_poly(rng)
        if not usl2.is_even(hahn.natural(p)):
            failures += 1

    rng = Random(404)
    ladders = [reps.build_L(n) for n in range(7)]
    for _ in range(100):
        a = random_usl2_element(rng, max_terms=3, max_exp=2)
        b = random_usl2_element(rng, max_terms=3, max_exp=2)
        ab = usl2.multiply(a, b)
        for rep in ladders:
            if reps.evaluate(ab, rep) != reps.evaluate(a, rep) * reps.evaluate(b, rep):
                failures += 1
    elapsed = time.perf_counter() - t0
    _report(9, "seeded property suites (assoc 1000, rho 500, evenness 500, oracle 200)", failures == 0, elapsed, 600.0)
