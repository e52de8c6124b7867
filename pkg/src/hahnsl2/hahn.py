"""The universal Hahn algebra presentation and its map into U(sl2).

The algebra is presented on the two generators A, B.  The remaining named
elements are abbreviations in the free algebra:

    C     = AB - BA
    alpha = [C, A] + 2A^2 + B
    beta  = [B, C] + 4BA + 2C
    Omega = 4ABA + B^2 - C^2 - 2*beta*A + 2(1 - alpha)B

and the imposed relations are that alpha and beta commute with A and B
(four relators).  Identities that hold in the quotient are verified here as
ideal-membership certificates over the free algebra; identities that already
hold freely are detected by exact cancellation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from random import Random

from . import usl2
from .freealg import FreePoly, MembershipCertificate, fcommutator, fmultiply, ideal_membership, substitute
from .reporting import PASS, FAIL, UNRESOLVED, CheckItem

ALPHABET = ("A", "B")


class HahnPresentation:
    """The two-generator presentation with all derived elements expanded."""

    def __init__(self):
        one = FreePoly.one(ALPHABET)
        A = FreePoly.gen(ALPHABET, "A")
        B = FreePoly.gen(ALPHABET, "B")
        C = fcommutator(A, B)
        alpha = fcommutator(C, A) + (A * A).scale(2) + B
        beta = fcommutator(B, C) + (B * A).scale(4) + C.scale(2)
        omega = (
            (A * B * A).scale(4)
            + B * B
            - C * C
            - (beta * A).scale(2)
            + ((one - alpha) * B).scale(2)
        )
        self.one = one
        self.A = A
        self.B = B
        self.C = C
        self.alpha = alpha
        self.beta = beta
        self.omega = omega
        self.relators = (
            fcommutator(alpha, A),
            fcommutator(alpha, B),
            fcommutator(beta, A),
            fcommutator(beta, B),
        )
        if tuple(r.degree() for r in self.relators) != (4, 4, 4, 4):
            raise AssertionError("relator degrees changed; presentation is broken")
        # preimages of E^2, F^2, Lambda, H under the natural map
        self.e2_hat = (A * A).scale(4) + B.scale(2) + C.scale(2) - alpha.scale(2)
        self.f2_hat = (A * A).scale(4) + B.scale(2) - C.scale(2) - alpha.scale(2)
        self.lam_hat = one + alpha.scale(4)
        self.h_hat = A.scale(4)
        # the kernel of the natural map: relators plus these two
        self.kernel_extra = (beta, omega.scale(16) - alpha.scale(24) + one.scale(3))
        self.kernel_generators = self.relators + self.kernel_extra


@lru_cache(maxsize=1)
def presentation() -> HahnPresentation:
    return HahnPresentation()


@lru_cache(maxsize=1)
def natural_images() -> dict[str, usl2.USL2Element]:
    lam = usl2.casimir()
    h2 = usl2.multiply(usl2.H, usl2.H)
    b_img = (
        usl2.monomial(2, 0, 0) + usl2.monomial(0, 2, 0) + lam - usl2.one()
    ).scale(Fraction(1, 4)) - h2.scale(Fraction(1, 8))
    return {"A": usl2.H.scale(Fraction(1, 4)), "B": b_img}


def natural(p: FreePoly) -> usl2.USL2Element:
    """The homomorphism into U(sl2) determined by A -> H/4 and B -> B-image."""
    return substitute(p, natural_images(), usl2.one())


def tilde_rho(p: FreePoly) -> FreePoly:
    """The involution A -> -A, B -> B (sign = parity of A-count per word)."""
    out = {w: (-c if w.count("A") % 2 else c) for w, c in p.terms.items()}
    return FreePoly(p.alphabet, out)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def verify_natural_well_defined() -> list[CheckItem]:
    """The generator-level identities that make the natural map well defined."""
    pres = presentation()
    a_img = natural(pres.A)
    b_img = natural(pres.B)
    c_img = natural(pres.C)
    alpha_img = natural(pres.alpha)
    lam = usl2.casimir()
    e2 = usl2.monomial(2, 0, 0)
    f2 = usl2.monomial(0, 2, 0)
    h3 = usl2.monomial(0, 0, 3)

    def comm(x, y):
        return usl2.commutator(x, y)

    checks = [
        ("[A,B] image equals (E^2 - F^2)/4", comm(a_img, b_img), (e2 - f2).scale(Fraction(1, 4))),
        ("[C,A] image equals -(E^2 + F^2)/4", comm(c_img, a_img), (e2 + f2).scale(Fraction(-1, 4))),
        (
            "[C,A] + 2A^2 + B image equals (Lam - 1)/4",
            comm(c_img, a_img) + usl2.multiply(a_img, a_img).scale(2) + b_img,
            (lam - usl2.one()).scale(Fraction(1, 4)),
        ),
        (
            "[B,C] + 4BA + 2C image vanishes",
            comm(b_img, c_img) + usl2.multiply(b_img, a_img).scale(4) + c_img.scale(2),
            usl2.zero(),
        ),
        (
            "[B,C] image equals (1 - E^2 - F^2 - Lam)H/4 + H^3/8 + (F^2 - E^2)/2",
            comm(b_img, c_img),
            usl2.multiply(usl2.one() - e2 - f2 - lam, usl2.H).scale(Fraction(1, 4))
            + h3.scale(Fraction(1, 8))
            + (f2 - e2).scale(Fraction(1, 2)),
        ),
        ("alpha image commutes with A image", comm(alpha_img, a_img), usl2.zero()),
        ("alpha image commutes with B image", comm(alpha_img, b_img), usl2.zero()),
        ("alpha image commutes with C image", comm(alpha_img, c_img), usl2.zero()),
    ]
    items = [
        CheckItem(name=name, status=PASS if lhs == rhs else FAIL) for name, lhs, rhs in checks
    ]
    for idx, rel in enumerate(pres.relators):
        items.append(
            CheckItem(
                name=f"relator {idx} maps to zero",
                status=PASS if natural(rel).is_zero() else FAIL,
            )
        )
    return items


def verify_image_gradings() -> list[CheckItem]:
    """Degrees and exact values of the graded pieces of the generator images."""
    pres = presentation()
    lam = usl2.casimir()
    e2 = usl2.monomial(2, 0, 0)
    f2 = usl2.monomial(0, 2, 0)
    h2 = usl2.monomial(0, 0, 2)
    quarter = Fraction(1, 4)

    expected = {
        "A": {0: usl2.H.scale(quarter)},
        "B": {
            2: e2.scale(quarter),
            0: (lam - usl2.one()).scale(quarter) - h2.scale(Fraction(1, 8)),
            -2: f2.scale(quarter),
        },
        "C": {2: e2.scale(quarter), -2: f2.scale(-quarter)},
        "alpha": {0: (lam - usl2.one()).scale(quarter)},
    }
    elements = {"A": pres.A, "B": pres.B, "C": pres.C, "alpha": pres.alpha}
    items = []
    for name, want in expected.items():
        got = usl2.degree_components(natural(elements[name]))
        ok = set(got) == set(want) and all(got[d] == want[d] for d in want)
        items.append(
            CheckItem(
                name=f"{name} image has graded components {sorted(want, reverse=True)}",
                status=PASS if ok else FAIL,
            )
        )
    omega_img = natural(pres.omega)
    omega_expected = (lam.scale(2) - usl2.one().scale(3)).scale(Fraction(3, 16))
    comps = usl2.degree_components(omega_img)
    items.append(
        CheckItem(
            name="Omega image is even with only degree 0 surviving",
            status=PASS if usl2.is_even(omega_img) and set(comps) <= {0} else FAIL,
        )
    )
    items.append(
        CheckItem(
            name="Omega image equals (3/16)(2*Lam - 3)",
            status=PASS if omega_img == omega_expected else FAIL,
            detail=usl2.render(omega_img),
        )
    )
    return items


def random_free_poly(rng: Random, max_terms: int = 4, max_len: int = 4) -> FreePoly:
    terms: dict[str, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        w = "".join(rng.choice(ALPHABET) for _ in range(rng.randint(0, max_len)))
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        terms[w] = terms.get(w, Fraction(0)) + c
    return FreePoly(ALPHABET, terms)


def verify_intertwining(samples: int = 25, seed: int = 20230814) -> list[CheckItem]:
    """natural(tilde_rho(p)) == rho(natural(p)) on named elements and samples."""
    pres = presentation()
    named = [
        ("A", pres.A),
        ("B", pres.B),
        ("C", pres.C),
        ("alpha", pres.alpha),
        ("beta", pres.beta),
        ("Omega", pres.omega),
        ("1", pres.one),
    ]
    items = []
    for name, p in named:
        ok = natural(tilde_rho(p)) == usl2.rho(natural(p))
        items.append(CheckItem(name=f"intertwining on {name}", status=PASS if ok else FAIL))
    rng = Random(seed)
    bad = 0
    for _ in range(samples):
        p = random_free_poly(rng)
        if natural(tilde_rho(p)) != usl2.rho(natural(p)):
            bad += 1
    items.append(
        CheckItem(
            name=f"intertwining on {samples} seeded random polynomials",
            status=PASS if bad == 0 else FAIL,
            detail=f"failures: {bad}",
        )
    )
    return items


def _identity_targets() -> list[tuple[str, FreePoly]]:
    """Residuals (lhs - rhs) of the in-quotient identities, over {A, B}."""
    pres = presentation()
    one, A, B, C = pres.one, pres.A, pres.B, pres.C
    alpha, beta, omega = pres.alpha, pres.beta, pres.omega
    A2 = A * A
    half = Fraction(1, 2)

    omega_core = (omega - B * B + C * C).scale(half) + beta * A
    targets = [
        (
            "commutator-AC-expansion",
            fcommutator(A, C) - (A2.scale(2) + B - alpha),
        ),
        (
            "commutator-A2C-expansion",
            fcommutator(A2, C) - ((A2 * A).scale(4) + (A * B).scale(2) - (alpha * A).scale(2) - C),
        ),
        (
            "double-commutator-ACC-expansion",
            fcommutator(fcommutator(A, C), C) - ((A2 * A).scale(8) - (alpha * A).scale(4) + beta),
        ),
        (
            "casimir-rewrite-BA2",
            omega_core - ((B * A2).scale(2) + (C * A).scale(2) + (one - alpha) * B),
        ),
        (
            "casimir-rewrite-A2B",
            omega_core - (A2 * B + B * A2 - A2.scale(2) - alpha * B + alpha),
        ),
        (
            "hatted-HE2-commutator",
            fcommutator(pres.h_hat, pres.e2_hat) - pres.e2_hat.scale(4),
        ),
        (
            "hatted-HF2-commutator",
            fcommutator(pres.h_hat, pres.f2_hat) + pres.f2_hat.scale(4),
        ),
        ("hatted-E2F2-product", _hatted_product_residual(pres, plus=False)),
        ("hatted-F2E2-product", _hatted_product_residual(pres, plus=True)),
        ("omega-central-A", fcommutator(omega, A)),
        ("omega-central-B", fcommutator(omega, B)),
    ]
    return targets


def _hatted_product_residual(pres: HahnPresentation, plus: bool) -> FreePoly:
    """lhs - rhs of the hatted quadratic relation, beta term 2A -/+ 1."""
    one = pres.one
    h, lam = pres.h_hat, pres.lam_hat
    h2 = h * h
    sign = 1 if plus else -1
    left_first = pres.f2_hat if plus else pres.e2_hat
    left_second = pres.e2_hat if plus else pres.f2_hat
    lhs = (left_first * left_second).scale(16) - fmultiply(
        h2 + h.scale(2 * sign) - lam.scale(2),
        h2 + h.scale(6 * sign) - lam.scale(2) + one.scale(8),
    )
    kernel_combo = (pres.omega.scale(16) - pres.alpha.scale(24) + one.scale(3)).scale(4) + (
        pres.beta * (pres.A.scale(2) + one.scale(sign))
    ).scale(64)
    return lhs - kernel_combo


def verify_hahn_identities(
    degree_bound: int = 8,
) -> tuple[list[CheckItem], dict[str, MembershipCertificate]]:
    """Certify each in-quotient identity in the relator ideal.

    Residuals that cancel identically in the free algebra short-circuit; the
    rest get an ideal-membership certificate or an unresolved-at-bound item.
    """
    pres = presentation()
    items: list[CheckItem] = []
    certificates: dict[str, MembershipCertificate] = {}
    for name, residual in _identity_targets():
        items.append(_certify(name, residual, list(pres.relators), degree_bound, certificates))
    return items, certificates


def _certify(
    name: str,
    residual: FreePoly,
    generators: list[FreePoly],
    bound: int,
    certificates: dict[str, MembershipCertificate],
) -> CheckItem:
    if residual.is_zero():
        return CheckItem(name=name, status=PASS, detail="identically zero in the free algebra")
    if residual.degree() > bound:
        return CheckItem(
            name=name,
            status=UNRESOLVED,
            bound=bound,
            detail=f"residual degree {residual.degree()} exceeds the bound",
        )
    cert = ideal_membership(residual, generators, bound)
    if cert is None:
        return CheckItem(name=name, status=UNRESOLVED, bound=bound)
    ref = f"cert:{name}"
    certificates[ref] = cert
    return CheckItem(name=name, status=PASS, bound=bound, certificate_ref=ref)


def verify_kernel_and_inverse(
    degree_bound: int = 8,
) -> tuple[list[CheckItem], dict[str, MembershipCertificate]]:
    """Kernel generators map to zero; hatted elements invert the generators;
    the even-presentation relations hold modulo the kernel ideal."""
    pres = presentation()
    items: list[CheckItem] = []
    certificates: dict[str, MembershipCertificate] = {}

    beta_img = natural(pres.beta)
    items.append(
        CheckItem(name="beta maps to zero", status=PASS if beta_img.is_zero() else FAIL)
    )
    combo = pres.omega.scale(16) - pres.alpha.scale(24) + pres.one.scale(3)
    items.append(
        CheckItem(
            name="16*Omega - 24*alpha + 3 maps to zero",
            status=PASS if natural(combo).is_zero() else FAIL,
        )
    )

    quarter = Fraction(1, 4)
    inverse_checks = [
        ("A recovered as H_hat/4", pres.A - pres.h_hat.scale(quarter)),
        (
            "B recovered as (E2_hat + F2_hat)/4 - H_hat^2/8 + (Lam_hat - 1)/4",
            pres.B
            - (
                (pres.e2_hat + pres.f2_hat).scale(quarter)
                - (pres.h_hat * pres.h_hat).scale(Fraction(1, 8))
                + (pres.lam_hat - pres.one).scale(quarter)
            ),
        ),
        ("C recovered as (E2_hat - F2_hat)/4", pres.C - (pres.e2_hat - pres.f2_hat).scale(quarter)),
    ]
    for name, residual in inverse_checks:
        items.append(
            CheckItem(
                name=name,
                status=PASS if residual.is_zero() else FAIL,
                detail="identically zero in the free algebra" if residual.is_zero() else None,
            )
        )

    # hatted preimages map onto the four even-subalgebra generators
    lam = usl2.casimir()
    hat_targets = [
        ("E2_hat maps to E^2", pres.e2_hat, usl2.monomial(2, 0, 0)),
        ("F2_hat maps to F^2", pres.f2_hat, usl2.monomial(0, 2, 0)),
        ("Lam_hat maps to the Casimir", pres.lam_hat, lam),
        ("H_hat maps to H", pres.h_hat, usl2.H),
    ]
    for name, p, want in hat_targets:
        items.append(CheckItem(name=name, status=PASS if natural(p) == want else FAIL))

    # even-presentation relations with hatted elements, modulo the kernel ideal
    gens = list(pres.kernel_generators)
    for name, residual in _kernel_relation_targets():
        items.append(_certify(name, residual, gens, degree_bound, certificates))
    return items, certificates


def _kernel_relation_targets() -> list[tuple[str, FreePoly]]:
    """Residuals of the even-presentation relations in hatted form."""
    pres = presentation()
    one = pres.one
    h, lam_h = pres.h_hat, pres.lam_hat
    return [
        ("hatted-H-E2-relation-mod-kernel", fcommutator(h, pres.e2_hat) - pres.e2_hat.scale(4)),
        ("hatted-H-F2-relation-mod-kernel", fcommutator(h, pres.f2_hat) + pres.f2_hat.scale(4)),
        (
            "hatted-E2F2-relation-mod-kernel",
            (pres.e2_hat * pres.f2_hat).scale(16)
            - fmultiply(h * h - h.scale(2) - lam_h.scale(2), h * h - h.scale(6) - lam_h.scale(2) + one.scale(8)),
        ),
        (
            "hatted-F2E2-relation-mod-kernel",
            (pres.f2_hat * pres.e2_hat).scale(16)
            - fmultiply(h * h + h.scale(2) - lam_h.scale(2), h * h + h.scale(6) - lam_h.scale(2) + one.scale(8)),
        ),
        ("hatted-casimir-E2-commute-mod-kernel", fcommutator(lam_h, pres.e2_hat)),
        ("hatted-casimir-F2-commute-mod-kernel", fcommutator(lam_h, pres.f2_hat)),
        ("hatted-casimir-H-commute-mod-kernel", fcommutator(lam_h, h)),
    ]
