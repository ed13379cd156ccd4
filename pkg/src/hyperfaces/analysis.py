"""Exact zero-location and log-concavity checks for single-parity polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import MixedParity, ZeroPolynomial
from .exact import RationalPolynomial, root_multiplicities, squarefree_part, sturm_real_root_count
from .twoface import TwoFacePolynomial


@dataclass(frozen=True)
class ZeroReport:
    n: int | None
    beta: str | None
    pure_imaginary: bool
    zero_root_multiplicity: int
    even_part: RationalPolynomial
    real_roots_found: int
    root_multiplicities: tuple[int, ...] = ()


@dataclass(frozen=True)
class ConcavityReport:
    stride_sequence: tuple[Fraction, ...]
    log_concave: bool
    unimodal: bool


def _unwrap(P) -> tuple[RationalPolynomial, int | None, str | None]:
    if isinstance(P, TwoFacePolynomial):
        return P.poly, P.n, str(P.beta)
    return P, None, None


def even_reduction(p: RationalPolynomial) -> tuple[int, RationalPolynomial]:
    """Write ``p(x) = x^e R(x^2)`` with ``R(0) != 0``; raise if ``p`` mixes parities."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no zero structure")
    terms = p.terms()
    e = min(terms)
    if any((d - e) % 2 for d in terms):
        raise MixedParity(f"{p} has terms of both parities")
    return e, RationalPolynomial.from_terms({(d - e) // 2: c for d, c in terms.items()})


def verify_imaginary_zeros(P: Union[TwoFacePolynomial, RationalPolynomial]) -> ZeroReport:
    """Decide exactly whether every zero of ``P`` lies on the imaginary axis.

    With ``P = x^e R(x^2)`` this holds iff all roots of ``R`` are real and
    nonpositive.  Distinct real roots are counted on ``(-inf, 0]`` with a Sturm
    chain and compared with the number of distinct roots of ``R``.
    """
    poly, n, beta = _unwrap(P)
    e, R = even_reduction(poly)
    if R.degree == 0:
        return ZeroReport(n, beta, True, e, R, 0, ())
    distinct = int(squarefree_part(R).degree)
    found = sturm_real_root_count(R, -math.inf, 0)
    mults = tuple(
        k + 1 for k, f in enumerate(root_multiplicities(R)) for _ in range(int(f.degree))
    )
    return ZeroReport(n, beta, found == distinct, e, R, found, mults)


def stride_sequence(poly: RationalPolynomial) -> tuple[Fraction, ...]:
    """Coefficients at the degrees of the support's parity, from lowest to highest term."""
    terms = poly.terms()
    if not terms:
        return ()
    lo, hi = min(terms), max(terms)
    return tuple(poly[d] for d in range(lo, hi + 1, 2))


def is_log_concave(seq) -> bool:
    return all(seq[k] ** 2 >= seq[k - 1] * seq[k + 1] for k in range(1, len(seq) - 1))


def is_unimodal(seq) -> bool:
    k = 0
    while k + 1 < len(seq) and seq[k + 1] >= seq[k]:
        k += 1
    while k + 1 < len(seq) and seq[k + 1] <= seq[k]:
        k += 1
    return k == len(seq) - 1 if seq else True


def verify_log_concavity(P: Union[TwoFacePolynomial, RationalPolynomial]) -> ConcavityReport:
    poly, _, _ = _unwrap(P)
    seq = stride_sequence(poly)
    return ConcavityReport(seq, is_log_concave(seq), is_unimodal(seq))
