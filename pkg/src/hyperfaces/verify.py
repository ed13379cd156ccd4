"""Invariant suites run by ``hyperfaces verify``.

Each suite yields :class:`Check` results.  ``reported`` checks carry an
observation that is not asserted (e.g. zero location for ``beta = [2, n-2]``)
and never cause a failing exit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .analysis import verify_imaginary_zeros, verify_log_concavity
from .characters import (
    c_frak_over_f,
    c_frak_over_f_closed,
    chi_beta_special,
    chi_two_face,
    nonvanishing_shapes,
    mn_character,
    two_face_family,
)
from .combinat import Partition, class_size, partitions_of, stirling1_unsigned, young_stats
from .exact import ONE, RationalPolynomial
from .products import brute_force_histogram, xi_fixed_first
from .twoface import (
    TwoFacePolynomial,
    build_P,
    build_P_regular,
    is_admissible,
    main_formula,
    p_tilde_theta,
    parity_split,
    special_P_2n2,
    theta,
    theta_decompose,
    two_face_polynomial,
    w_full,
    w_restricted,
)

PASS, FAIL, REPORTED = "pass", "fail", "reported"


@dataclass
class Check:
    suite: str
    name: str
    status: str
    detail: str = ""


def admissible_betas(n: int, min_part: int = 1) -> list[Partition]:
    """Admissible edge-types of ``n`` in descending lexicographic order."""
    return [b for b in partitions_of(n) if is_admissible(n, b) and b.min_part() >= min_part]


def _closed_form_source(corrupt: bool) -> Callable[[int, Partition], TwoFacePolynomial]:
    if not corrupt:
        return two_face_polynomial

    def corrupted(n: int, beta: Partition) -> TwoFacePolynomial:
        tf = two_face_polynomial(n, beta)
        bump = RationalPolynomial.monomial(int(tf.poly.degree), 1)
        return TwoFacePolynomial(tf.n, tf.beta, tf.poly + bump, tf.provenance, tf.flags + ("corrupted",))

    return corrupted


def _ok(cond: bool) -> str:
    return PASS if cond else FAIL


def suite_combinatorics(n_max: int, **_) -> Iterator[Check]:
    s = "combinatorics"
    for n in range(1, min(n_max, 9) + 1):
        lams = list(partitions_of(n))
        yield Check(s, f"class sizes sum to {n}!", _ok(sum(map(class_size, lams)) == math.factorial(n)))
        dims = [young_stats(lam).dimension for lam in lams]
        yield Check(s, f"sum f^2 = {n}!", _ok(sum(f * f for f in dims) == math.factorial(n)))
    x = RationalPolynomial((0, 1))
    for n in range(1, min(n_max, 12) + 1):
        lhs = RationalPolynomial([(-1) ** (n - k) * stirling1_unsigned(n, k) for k in range(n + 1)])
        rhs = ONE
        for j in range(n):
            rhs = rhs * (x - j)
        yield Check(s, f"stirling falling-factorial identity n={n}", _ok(lhs == rhs))


def suite_characters(n_max: int, **_) -> Iterator[Check]:
    s = "characters"
    for n in range(1, min(n_max, 7) + 1):
        lams = list(partitions_of(n))
        good = True
        for a in lams:
            for b in lams:
                tot = sum(class_size(mu) * mn_character(a, mu) * mn_character(b, mu) for mu in lams)
                good &= tot == (math.factorial(n) if a == b else 0)
        yield Check(s, f"orthogonality n={n}", _ok(good))
    for n in range(1, min(n_max, 8) + 1):
        ident = Partition([1] * n)
        good = all(mn_character(lam, ident) == young_stats(lam).dimension for lam in partitions_of(n))
        yield Check(s, f"chi(identity) = f n={n}", _ok(good))
    for n in range(6, min(n_max, 9) + 1):
        face = Partition(2, n - 2)
        good = all(chi_two_face(lam, n) == mn_character(lam, face) for lam in partitions_of(n))
        yield Check(s, f"two-face character table n={n}", _ok(good))
        good = True
        for beta in partitions_of(n):
            if beta.min_part() < 3:
                continue
            for lam in nonvanishing_shapes(n):
                good &= chi_beta_special(lam, beta) == mn_character(lam, beta)
        yield Check(s, f"edge-type character sums n={n}", _ok(good))
    for n in range(6, min(n_max, 10) + 1):
        good = True
        for lam in nonvanishing_shapes(n):
            fam = two_face_family(lam)
            if fam.kind == "col22" or fam == ("row", 2):
                continue
            for m in range(1, n + 1):
                good &= c_frak_over_f_closed(lam, m) == c_frak_over_f(lam, m)
        yield Check(s, f"content-ratio closed forms n={n}", _ok(good))


def suite_closed_forms(n_max: int, **_) -> Iterator[Check]:
    s = "closed-forms"
    P = Partition
    x = RationalPolynomial((0, 1))
    worked = [
        (6, P(3, 3), 21 * x**2 + 9 * x**4),
        (7, P(3, 4), 10 * x + 28 * x**3 + 4 * x**5),
        (8, P(4, 4), Fraction(4, 3) * x * (25 * x + 16 * x**3 + x**5)),
        (9, P(3, 3, 3), Fraction(9, 4) * x * (18 * x + 13 * x**3 + x**5)),
    ]
    for n, beta, want in worked:
        yield Check(s, f"example n={n} beta={beta}", _ok(build_P(n, beta).poly == want))
    special = {
        5: 6 * x + 13 * x**3 + x**5,
        6: 20 * x**2 + Fraction(29, 3) * x**4 + Fraction(1, 3) * x**6,
        7: 10 * x + Fraction(82, 3) * x**3 + Fraction(55, 12) * x**5 + Fraction(1, 12) * x**7,
    }
    for n, want in special.items():
        yield Check(s, f"special [2,n-2] n={n}", _ok(special_P_2n2(n).poly == want))
    neg = main_formula(5, P(2, 3))
    yield Check(s, "main formula at [2,3] gives 6x+12x^3", _ok(neg == 6 * x + 12 * x**3 and neg != special[5]))
    neg = main_formula(6, P(2, 4))
    yield Check(s, "main formula at [2,4] gives 20x^2+8x^4", _ok(neg == 20 * x**2 + 8 * x**4 and neg != special[6]))
    for p, c in [(3, 2), (3, 3), (4, 2), (5, 2)]:
        yield Check(s, f"regular [{p}^{c}]", _ok(build_P_regular(p, c).poly == build_P(p * c, P([p] * c)).poly))
    for n in range(6, n_max + 1):
        for beta in admissible_betas(n, 3):
            _, rebuilt = parity_split(n, beta)
            yield Check(s, f"parity split n={n} beta={beta}", _ok(rebuilt.poly == build_P(n, beta).poly))


def suite_structure(n_max: int, corrupt: bool = False, **_) -> Iterator[Check]:
    s = "structure"
    source = _closed_form_source(corrupt)
    for n in range(5, n_max + 1):
        for beta in admissible_betas(n):
            tf = source(n, beta)
            inv = tf.check_invariants()
            bad = [k for k, v in inv.items() if not v]
            yield Check(s, f"invariants n={n} beta={beta}", _ok(not bad), ",".join(bad))


def suite_oracle(n_max: int, corrupt: bool = False, **_) -> Iterator[Check]:
    s = "oracle"
    source = _closed_form_source(corrupt)
    for n in range(5, min(n_max, 9) + 1):
        for beta in admissible_betas(n):
            hist = brute_force_histogram(Partition(2, n - 2), beta, max_n=n)
            tf = source(n, beta)
            try:
                agree = tf.counts() == hist
            except ArithmeticError:
                agree = False
            yield Check(s, f"brute force n={n} beta={beta}", _ok(agree))


def suite_xi(n_max: int, **_) -> Iterator[Check]:
    s = "xi"
    for n in range(5, min(n_max, 8) + 1):
        face = Partition(2, n - 2)
        for beta in partitions_of(n):
            hist = brute_force_histogram(face, beta, max_n=n)
            good = all(xi_fixed_first(m, [face, beta]) == hist[m] for m in range(1, n + 1))
            yield Check(s, f"character sum n={n} beta={beta}", _ok(good))
    for n in range(6, min(n_max, 8) + 1):
        for beta in admissible_betas(n, 3):
            good = all(w_restricted(n, m, beta) == w_full(n, m, beta) for m in range(1, n + 1))
            yield Check(s, f"restricted W n={n} beta={beta}", _ok(good))


def suite_decomposition(n_max: int, **_) -> Iterator[Check]:
    s = "decomposition"
    for n in range(3, min(n_max, 10) + 1):
        for i in range(1, n + 1):
            dec = theta_decompose(theta(i, n))
            want = {k: Fraction(int(k == i)) for k in range(1, n + 1)}
            yield Check(s, f"basis theta_{i} n={n}", _ok(dec.coeffs == want))
        for beta in admissible_betas(n, 3) if n >= 5 else []:
            dec = theta_decompose(beta)
            ok = dec.check_identity() and dec.reconstruct() == build_P(n, beta).poly
            yield Check(s, f"reconstruction n={n} beta={beta}", _ok(ok))


def suite_zeros(n_max: int, corrupt: bool = False, **_) -> Iterator[Check]:
    s = "zeros"
    source = _closed_form_source(corrupt)
    for n in range(5, n_max + 1):
        for beta in admissible_betas(n):
            tf = source(n, beta)
            z = verify_imaginary_zeros(tf)
            c = verify_log_concavity(tf)
            # the [2, n-2] edge-type is outside the proven family: observe only
            asserted = beta != Partition(2, n - 2)
            for name, ok in (("imaginary zeros", z.pure_imaginary), ("log-concave", c.log_concave)):
                status = _ok(ok) if asserted else REPORTED
                yield Check(s, f"{name} n={n} beta={beta}", status, str(ok).lower())


SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "combinatorics": suite_combinatorics,
    "characters": suite_characters,
    "closed-forms": suite_closed_forms,
    "structure": suite_structure,
    "oracle": suite_oracle,
    "xi": suite_xi,
    "decomposition": suite_decomposition,
    "zeros": suite_zeros,
}


def run_suites(n_max: int, suites=None, corrupt: bool = False) -> dict:
    names = list(SUITES) if not suites else list(suites)
    summary: dict = {"schema": 1, "n_max": n_max, "suites": {}, "ok": True}
    for name in names:
        checks = list(SUITES[name](n_max, corrupt=corrupt))
        failed = [c for c in checks if c.status == FAIL]
        summary["suites"][name] = {
            "passed": sum(c.status == PASS for c in checks),
            "failed": len(failed),
            "reported": {c.name: c.detail for c in checks if c.status == REPORTED},
            "failures": [c.name + (f" ({c.detail})" if c.detail else "") for c in failed],
        }
        if failed:
            summary["ok"] = False
    return summary
