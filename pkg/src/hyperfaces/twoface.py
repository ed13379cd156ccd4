"""Cycle-distribution polynomials of two-face hypermaps of face-type ``[2, n-2]``.

``P(x) = n(n-1)/|C_beta| * sum_{omega in C_beta} x^kappa(alpha omega)`` with
``alpha`` fixed of type ``[2, n-2]``.  Closed forms exist when every part of
``beta`` is at least 3, and separately for ``beta = [2, n-2]`` and
``beta = [1, n-1]``.  Everything here is exact.
"""

from __future__ import annotations

import enum
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .characters import (
    c_frak_over_f_closed,
    chi_beta_special,
    chi_two_face,
    nonvanishing_shapes,
)
from .combinat import Partition, class_size, falling
from .errors import (
    BadN,
    BadP,
    NonIntegerResult,
    NonIntegralGenus,
    SingularSystem,
    UnsupportedBeta,
    UnsupportedN,
)
from .exact import X, ZERO, RationalPolynomial, binom_poly
from .products import CycleHistogram, character_w, genus_of, xi_histogram


class Provenance(enum.Enum):
    CLOSED_FORM = "closed-form"
    SPECIAL_2N2 = "special-2n2"
    SPECIAL_1N1 = "special-1n1"
    ORACLE = "oracle"
    CHARACTER_SUM = "character-sum"


@dataclass(frozen=True)
class TwoFacePolynomial:
    n: int
    beta: Partition
    poly: RationalPolynomial
    provenance: Provenance
    flags: tuple[str, ...] = ()

    @property
    def face_type(self) -> Partition:
        return Partition(2, self.n - 2)

    def counts(self) -> CycleHistogram:
        """Rescale to the histogram for one fixed ``alpha``; must be integral."""
        scale = Fraction(class_size(self.beta), self.n * (self.n - 1))
        out = {}
        for m, c in self.poly.terms().items():
            v = c * scale
            if v.denominator != 1:
                raise NonIntegerResult(f"coefficient of x^{m} rescales to {v}")
            out[m] = v.numerator
        return CycleHistogram(self.n, out)

    def genus_labels(self) -> dict[int, int]:
        return {m: genus_of(m, self.n, len(self.beta)) for m in self.poly.terms()}

    def min_genus(self) -> int:
        """Smallest genus label; ``-1`` (or lower) means a disconnected hypermap is counted."""
        return min(self.genus_labels().values())

    def check_invariants(self) -> dict[str, bool]:
        """Total mass, single parity, nonnegativity and integral genus."""
        terms = self.poly.terms()
        parity = (self.n - len(self.beta)) % 2
        try:
            self.genus_labels()
            genus_ok = True
        except NonIntegralGenus:
            genus_ok = False
        try:
            self.counts()
            integral = True
        except NonIntegerResult:
            integral = False
        return {
            "total_mass": self.poly(1) == self.n * (self.n - 1),
            "single_parity": all(m % 2 == parity for m in terms),
            "nonnegative": all(c > 0 for c in terms.values()),
            "integral_genus": genus_ok,
            "integral_counts": integral,
        }


def polynomial_from_histogram(
    hist: CycleHistogram, beta: Partition, provenance: Provenance = Provenance.ORACLE
) -> TwoFacePolynomial:
    n = hist.n
    scale = Fraction(n * (n - 1), class_size(beta))
    poly = RationalPolynomial.from_terms({m: c * scale for m, c in hist.counts.items()})
    return TwoFacePolynomial(n, beta, poly, provenance)


# ---------------------------------------------------------------------------
# Generating-function coefficient extraction
# ---------------------------------------------------------------------------


def subset_sums(beta: Partition) -> Counter:
    """Signed multiset ``{sum(S): sum of (-1)^(d-|S|)}`` over subsets ``S`` of the parts."""
    acc: Counter = Counter({0: 1})
    for part in beta.parts:
        nxt: Counter = Counter()
        for s, w in acc.items():
            nxt[s] -= w
            nxt[s + part] += w
        acc = nxt
    return Counter({s: w for s, w in acc.items() if w})


def coeff_extract(shift: int, beta: Partition, k: int) -> RationalPolynomial:
    """``[y^k] (1+y)^(x+shift) prod_i ((1+y)^beta_i - 1)`` as a polynomial in ``x``."""
    if k < 0:
        return ZERO
    if len(beta) > 20:
        raise UnsupportedBeta("too many parts for subset expansion")
    total = ZERO
    for s, w in sorted(subset_sums(beta).items()):
        total = total + binom_poly(shift + s, k) * w
    return total


def main_formula(n: int, beta: Partition) -> RationalPolynomial:
    """Closed form valid for ``min(beta) >= 3``; evaluated here with no checks."""
    return X * X * 2 * coeff_extract(-2, beta, n - 2) + X * (X + 1) * coeff_extract(-2, beta, n - 3)


def build_P(n: int, beta: Partition) -> TwoFacePolynomial:
    if beta.n != n:
        raise BadN(f"{beta} is not a partition of {n}")
    if beta.min_part() < 3:
        raise UnsupportedBeta(f"beta={beta} has a part below 3; the closed form does not apply")
    if n < 5:
        raise BadN(f"n={n} is too small for face-type [2, n-2]")
    flags: tuple[str, ...] = ()
    if n == 5:
        flags = ("n5-validated-by-oracle",)
    return TwoFacePolynomial(n, beta, main_formula(n, beta), Provenance.CLOSED_FORM, flags)


def build_P_regular(p: int, n_copies: int) -> TwoFacePolynomial:
    """Edge-type ``[p^c]`` by the alternating double-binomial sum."""
    if p < 3:
        raise BadP(f"p must be at least 3, got {p}")
    if n_copies < 1:
        raise BadN("need at least one part")
    c = n_copies
    N = p * c
    total = ZERO
    for i in range(c + 1):
        w = (-1) ** (c - i) * math.comb(c, i)
        total = total + (X * X * 2 * binom_poly(p * i - 2, N - 2) + X * (X + 1) * binom_poly(p * i - 2, N - 3)) * w
    flags = ("n5-validated-by-oracle",) if N == 5 else ()
    return TwoFacePolynomial(N, Partition([p] * c), total, Provenance.CLOSED_FORM, flags)


def special_P_2n2(n: int) -> TwoFacePolynomial:
    """Edge-type equal to the face-type, ``[2, n-2]``."""
    if n < 5:
        raise BadN(f"n must be at least 5, got {n}")
    b = binom_poly
    first = b(n - 1, n - 2) + b(-1, n - 2) + b(0, n - 2) + b(n - 3, n - 1) - b(2, n - 1)
    second = b(-2, n - 2) + b(n - 2, n - 2) + b(n - 3, n - 2) + b(n - 4, n - 1) - b(1, n - 1)
    poly = X * (X + 1) * first + X * (X - 1) * second
    return TwoFacePolynomial(n, Partition(2, n - 2), poly, Provenance.SPECIAL_2N2)


def special_P_1n1(n: int) -> TwoFacePolynomial:
    """Edge-type ``[1, n-1]``."""
    if n < 5:
        raise BadN(f"n must be at least 5, got {n}")
    b = binom_poly
    poly = X * (b(n - 1, n - 1) + b(-1, n - 1) - b(1, n - 1) - b(n - 3, n - 1)) * (n - 1)
    return TwoFacePolynomial(n, Partition(1, n - 1), poly, Provenance.SPECIAL_1N1)


def two_face_polynomial(n: int, beta: Partition) -> TwoFacePolynomial:
    """Route ``beta`` to the closed form that is valid for it, or refuse."""
    if beta.n != n:
        raise BadN(f"{beta} is not a partition of {n}")
    if beta.min_part() >= 3:
        return build_P(n, beta)
    if beta == Partition(2, n - 2) and n >= 5:
        return special_P_2n2(n)
    if beta == Partition(1, n - 1) and n >= 5:
        return special_P_1n1(n)
    raise UnsupportedBeta(
        f"no closed form for beta={beta} at n={n}; use the brute-force oracle (--oracle)"
    )


def is_admissible(n: int, beta: Partition) -> bool:
    return n >= 5 and beta.n == n and (
        beta.min_part() >= 3 or beta in (Partition(2, n - 2), Partition(1, n - 1))
    )


def parity_split(n: int, beta: Partition) -> tuple[RationalPolynomial, TwoFacePolynomial]:
    """Return ``G`` and ``x(x-1)G(x) + x(x+1)(-1)^(n-d) G(-x)``."""
    if beta.min_part() < 3:
        raise UnsupportedBeta(f"beta={beta} has a part below 3")
    G = coeff_extract(-2, beta, n - 2)
    sign = (-1) ** (n - len(beta))
    rebuilt = X * (X - 1) * G + X * (X + 1) * G.scale_var(-1) * sign
    return G, TwoFacePolynomial(n, beta, rebuilt, Provenance.CLOSED_FORM)


# ---------------------------------------------------------------------------
# Restricted character sum
# ---------------------------------------------------------------------------


def w_restricted(n: int, m: int, beta: Partition) -> Fraction:
    """``W_{n,m}`` for classes ``([2,n-2], beta)`` summed only over shapes with a nonzero term."""
    if n < 6:
        raise UnsupportedN(f"restricted sum needs n >= 6, got {n}")
    if beta.n != n:
        raise BadN(f"{beta} is not a partition of {n}")
    if beta.min_part() < 3:
        raise UnsupportedBeta(f"beta={beta} has a part below 3")
    total = Fraction(0)
    for lam in nonvanishing_shapes(n):
        chi_b = chi_beta_special(lam, beta)
        if not chi_b:
            continue
        total += c_frak_over_f_closed(lam, m) * chi_two_face(lam, n) * chi_b
    return total


# ---------------------------------------------------------------------------
# Decomposition over the hook basis theta_i = [1^(n-i), i]
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _rho(parts: tuple[int, ...], k: int) -> int:
    if not parts:
        return 1 if k == 0 else 0
    head, rest = parts[0], parts[1:]
    total = 0
    for b in range(1, k - len(rest) + 1):
        total += math.comb(k, b) * falling(head, b) * _rho(rest, k - b)
    return total


def rho_power(gamma: Partition, k: int) -> int:
    """``sum over compositions b of k into l(gamma) positive parts of multinomial * prod (gamma_i)_{b_i}``."""
    if k < 1:
        raise ValueError("k must be positive")
    return _rho(gamma.parts, k)


def theta(i: int, n: int) -> Partition:
    return Partition.hook(n, i)


def rho_eval(gamma: Partition, x: int, y: int) -> int:
    return math.prod(x**g - y**g for g in gamma.parts)


@dataclass(frozen=True)
class ThetaDecomposition:
    """Coefficients ``a_{i,beta}`` with ``rho(beta) = sum_i a_i rho(theta_i)``."""

    n: int
    beta: Partition
    coeffs: dict[int, Fraction] = field(hash=False)

    def vector(self) -> list[Fraction]:
        """``(a_n, a_{n-1}, ..., a_1)``."""
        return [self.coeffs[i] for i in range(self.n, 0, -1)]

    def check_identity(self, points: int = 10, seed: int = 0, radius: int = 20) -> bool:
        rng = random.Random(seed)
        for _ in range(points):
            x, y = rng.randint(-radius, radius), rng.randint(-radius, radius)
            rhs = sum(a * rho_eval(theta(i, self.n), x, y) for i, a in self.coeffs.items())
            if rho_eval(self.beta, x, y) != rhs:
                return False
        return True

    def reconstruct(self) -> RationalPolynomial:
        total = ZERO
        for i, a in self.coeffs.items():
            if a:
                total = total + p_tilde_theta(i, self.n) * a
        return total


def theta_decompose(beta: Partition) -> ThetaDecomposition:
    """Forward substitution in the lower-triangular system ``M a = r``.

    Row ``j`` (1..n), column ``theta_i`` (i = n..1) holds ``rho^j_{theta_i}``,
    which vanishes for ``j < n - i + 1``.
    """
    n = beta.n
    cols = list(range(n, 0, -1))
    a: dict[int, Fraction] = {}
    for j in range(1, n + 1):
        i_diag = cols[j - 1]
        acc = Fraction(rho_power(beta, j))
        for i in cols[: j - 1]:
            acc -= a[i] * rho_power(theta(i, n), j)
        diag = rho_power(theta(i_diag, n), j)
        if diag == 0:
            raise SingularSystem(f"zero pivot at row {j}")
        a[i_diag] = acc / diag
    return ThetaDecomposition(n, beta, a)


def p_tilde_theta(i: int, n: Optional[int] = None) -> RationalPolynomial:
    """Hook-basis polynomial; depends on ``i`` only (``n`` is accepted for symmetry)."""
    if i < 1 or (n is not None and i > n):
        raise ValueError(f"need 1 <= i <= n, got i={i}")
    b = binom_poly
    return X * X * 2 * (b(i - 2, i - 2) - b(-2, i - 2)) + X * (X + 1) * (b(i - 2, i - 3) - b(-2, i - 3))


def polynomial_from_xi(n: int, beta: Partition) -> TwoFacePolynomial:
    """Assemble ``P`` from the character-sum counts (fixed-``alpha`` normalisation)."""
    hist = xi_histogram([Partition(2, n - 2), beta], fixed_first=True)
    return polynomial_from_histogram(hist, beta, Provenance.CHARACTER_SUM)


def w_full(n: int, m: int, beta: Partition) -> Fraction:
    return character_w(n, m, [Partition(2, n - 2), beta])


__all__ = [
    "Provenance",
    "TwoFacePolynomial",
    "ThetaDecomposition",
    "coeff_extract",
    "main_formula",
    "build_P",
    "build_P_regular",
    "special_P_2n2",
    "special_P_1n1",
    "two_face_polynomial",
    "is_admissible",
    "parity_split",
    "w_restricted",
    "w_full",
    "rho_power",
    "theta_decompose",
    "p_tilde_theta",
    "polynomial_from_histogram",
    "polynomial_from_xi",
]
