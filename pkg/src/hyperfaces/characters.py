"""Irreducible characters of the symmetric group.

Two independent routes are provided: the general Murnaghan-Nakayama recursion
(:func:`mn_character`) and closed forms for the characters that matter for a
face permutation of cycle-type ``[2, n-2]`` (:func:`chi_two_face`,
:func:`chi_beta_special`).  The closed forms only hold for ``n >= 6``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Optional

from .combinat import Partition, young_stats
from .errors import ShapeMismatch, UnsupportedBeta, UnsupportedN, UnsupportedShape
from .exact import binomial

CharacterValue = int
CFRatio = Fraction


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama
# ---------------------------------------------------------------------------


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    k = len(lam)
    return tuple(p + k - 1 - i for i, p in enumerate(lam))


def _from_beta_set(beads: list[int]) -> tuple[int, ...]:
    beads = sorted(beads, reverse=True)
    k = len(beads)
    return tuple(p for p in (b - (k - 1 - i) for i, b in enumerate(beads)) if p > 0)


def rim_hook_removals(lam: tuple[int, ...], r: int) -> list[tuple[tuple[int, ...], int]]:
    """All ``(shape, height)`` pairs left after removing an ``r``-rim hook from ``lam``.

    On the abacus a rim hook of length ``r`` is a bead sliding from ``b`` to an
    empty ``b - r``; its height is the number of beads jumped over.
    """
    beads = _beta_set(lam)
    occupied = set(beads)
    out = []
    for b in beads:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for c in beads if t < c < b)
        moved = [c for c in beads if c != b] + [t]
        out.append((_from_beta_set(moved), height))
    return out


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for shape, height in rim_hook_removals(lam, r):
        total += _sign(height) * _mn(shape, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> CharacterValue:
    """``chi^lam`` evaluated on the class ``mu`` by rim-hook recursion.

    Parts of ``mu`` are stripped largest first so cache keys are canonical.
    """
    if lam.n != mu.n:
        raise ShapeMismatch(f"|{lam}| = {lam.n} but |{mu}| = {mu.n}")
    return _mn(lam.parts, mu.parts)


def mn_character_ordered(lam: Partition, order: tuple[int, ...]) -> CharacterValue:
    """Same recursion but stripping parts in the given order (uncached; for checks)."""
    if lam.n != sum(order):
        raise ShapeMismatch("sizes differ")

    def rec(shape: tuple[int, ...], rest: tuple[int, ...]) -> int:
        if not rest:
            return 1
        return sum(_sign(h) * rec(s, rest[1:]) for s, h in rim_hook_removals(shape, rest[0]))

    return rec(lam.parts, tuple(order))


# ---------------------------------------------------------------------------
# Shapes with nonzero character on [2, n-2]
# ---------------------------------------------------------------------------


class Family(NamedTuple):
    """Which nonvanishing shape ``lam`` is.

    ``kind`` is one of ``row`` (``[j, n-j]``, j=0,1,2), ``three``
    (``[1^j,3,n-j-3]``), ``twotwo`` (``[1^j,2^2,n-j-4]``), ``col22``
    (``[1^(n-4),2^2]``), ``col2`` (``[1^(n-2),2]``) and ``col`` (``[1^n]``).
    """

    kind: str
    j: int


def two_face_family(lam: Partition) -> Optional[Family]:
    n = lam.n
    p = lam.parts
    ones = sum(1 for x in p if x == 1)
    if len(p) == 1:
        return Family("row", 0)
    if len(p) == 2 and p[1] in (1, 2):
        return Family("row", p[1])
    if ones == n:
        return Family("col", 0)
    if p[0] == 2 and ones == n - 2 and len(p) == n - 1:
        return Family("col2", 0)
    if p[0] == 2 and len(p) >= 2 and p[1] == 2 and ones == n - 4:
        return Family("col22", 0)
    body = p[: len(p) - ones]
    if len(body) == 2 and body[1] == 3 and body[0] >= 3:
        return Family("three", ones)
    if len(body) == 3 and body[1] == 2 and body[2] == 2 and body[0] >= 2:
        return Family("twotwo", ones)
    return None


def nonvanishing_shapes(n: int) -> list[Partition]:
    """Every shape ``lam`` of ``n`` whose character on ``[2, n-2]`` can be nonzero."""
    shapes = [Partition(n), Partition(n - 1, 1), Partition(n - 2, 2)]
    for j in range(n - 5):
        shapes.append(Partition([n - j - 3, 3] + [1] * j))
        shapes.append(Partition([n - j - 4, 2, 2] + [1] * j))
    shapes += [Partition([2, 2] + [1] * (n - 4)), Partition([2] + [1] * (n - 2)), Partition([1] * n)]
    return shapes


def chi_two_face(lam: Partition, n: int) -> CharacterValue:
    """``chi^lam([2, n-2])`` from the explicit case table; needs ``n >= 6``."""
    if n < 6:
        raise UnsupportedN(f"closed form needs n >= 6, got {n}; use mn_character")
    if lam.n != n:
        raise ShapeMismatch(f"{lam} is not a partition of {n}")
    fam = two_face_family(lam)
    if fam is None:
        return 0
    kind, j = fam
    if kind == "row":
        return _sign(j)
    if kind in ("three", "twotwo"):
        return _sign(j + 1)
    if kind == "col2":
        return _sign(n - 1)
    return _sign(n)  # col22, col


def _hook_sum(j: int, beta: Partition) -> int:
    # nested sum over how many parts of each size come from the hook portion
    mult = beta.multiplicities
    l, q = min(mult), max(mult)
    sizes = list(range(l, q + 1))
    ranges = [range(mult.get(l, 0)) if i == l else range(mult.get(i, 0) + 1) for i in sizes]
    total = 0
    for js in product(*ranges):
        weight = sum(i * ji for i, ji in zip(sizes, js))
        delta = (weight == j + 3 - l) - (weight == j + 3)
        if not delta:
            continue
        coef = math.comb(mult[l] - 1, js[0])
        for i, ji in zip(sizes[1:], js[1:]):
            coef *= math.comb(mult.get(i, 0), ji)
        total += _sign(j - sum(js)) * coef * delta
    return total


def chi_beta_special(lam: Partition, beta: Partition) -> CharacterValue:
    """``chi^lam(beta)`` for the shapes of :func:`nonvanishing_shapes` and ``min(beta) >= 3``."""
    if lam.n != beta.n:
        raise ShapeMismatch(f"|{lam}| != |{beta}|")
    if beta.min_part() < 3:
        raise UnsupportedBeta(f"closed form needs every part of beta >= 3, got {beta}")
    n = beta.n
    fam = two_face_family(lam)
    if fam is None or n < 6:
        raise UnsupportedShape(f"{lam} is outside the closed-form support")
    kind, j = fam
    ell = len(beta)
    if kind == "row":
        return 0 if j == 2 else _sign(j)
    if kind == "col22":
        return 0
    if kind == "col2":
        return _sign(n - ell - 1)
    if kind == "col":
        return _sign(n - ell)
    return _hook_sum(j, beta)


# ---------------------------------------------------------------------------
# Content products
# ---------------------------------------------------------------------------


def m_frak(lam: Partition, m: int) -> Fraction:
    """``prod_u (m + c(u)) / h(u)`` over the cells of ``lam``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    st = young_stats(lam)
    num = math.prod(m + c for c in st.contents.values())
    den = math.prod(st.hooks.values())
    return Fraction(num, den)


def c_frak(lam: Partition, m: int) -> Fraction:
    return sum((Fraction(_sign(d) * math.comb(m, d)) * m_frak(lam, m - d) for d in range(m + 1)), Fraction(0))


@lru_cache(maxsize=None)
def c_frak_over_f(lam: Partition, m: int) -> CFRatio:
    """``c_{lam,m} / f^lam`` by the alternating sum over content products."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    contents = list(young_stats(lam).contents.values())
    total = 0
    for d in range(m + 1):
        total += _sign(d) * math.comb(m, d) * math.prod(m - d + c for c in contents)
    return Fraction(total, math.factorial(lam.n))


def c_frak_over_f_closed(lam: Partition, m: int) -> CFRatio:
    """Closed forms of ``c_{lam,m} / f^lam`` for the shapes that survive on ``[2, n-2]``."""
    n = lam.n
    fam = two_face_family(lam)
    if fam is None or n < 6:
        raise UnsupportedShape(f"no closed form for {lam}")
    kind, j = fam
    nn1 = n * (n - 1)
    if kind == "row" and j == 0:
        return Fraction(binomial(n - 1, m - 1))
    if kind == "row" and j == 1:
        return Fraction(binomial(n - 2, n - m))
    if kind == "col":
        return Fraction(binomial(0, m - n))
    if kind == "col2":
        return Fraction(binomial(1, n - m))
    if kind == "twotwo":
        return Fraction(m * (m - 1), nn1) * binomial(n - j - 3, n - m)
    if kind == "three":
        return Fraction(m * (m - 1), nn1) * binomial(n - j - 2, n - m) + Fraction(2 * m, nn1) * binomial(
            n - j - 3, n - m - 1
        )
    raise UnsupportedShape(f"no closed form for {lam}")
