"""Counting permutation products by number of cycles.

Two independent routes: exhaustive enumeration of a conjugacy class against a
fixed representative, and the character-sum formula for the number of tuples
``(s_1, ..., s_t)`` with ``s_i`` in class ``C_i`` whose product has ``m`` cycles.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Iterable, Optional, Sequence

from .characters import c_frak_over_f, mn_character
from .combinat import (
    Partition,
    Permutation,
    canonical_representative,
    class_size,
    cycle_lengths,
    default_max_n,
    iter_class_images,
    partitions_of,
    stirling1_unsigned,
    young_stats,
)
from .errors import BoundExceeded, NonIntegerResult, NonIntegralGenus, ShapeMismatch


@dataclass
class CycleHistogram:
    """``counts[m]`` = number of enumerated products with exactly ``m`` cycles."""

    n: int
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.counts = {m: c for m, c in sorted(self.counts.items()) if c}

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)

    def __add__(self, other: "CycleHistogram") -> "CycleHistogram":
        if self.n != other.n:
            raise ShapeMismatch("cannot merge histograms of different n")
        merged = Counter(self.counts)
        merged.update(other.counts)
        return CycleHistogram(self.n, dict(merged))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleHistogram):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts


def _count_cycles(images: Sequence[int]) -> int:
    n = len(images)
    seen = bytearray(n)
    k = 0
    for s in range(n):
        if not seen[s]:
            k += 1
            i = s
            while not seen[i]:
                seen[i] = 1
                i = images[i]
    return k


def histogram_chunk(alpha: Sequence[int], omegas: Iterable[Sequence[int]]) -> Counter:
    """Histogram of ``kappa(alpha o omega)`` over a batch of one-line images."""
    hist: Counter = Counter()
    for om in omegas:
        hist[_count_cycles([alpha[i] for i in om])] += 1
    return hist


def _chunked(it, size: int):
    it = iter(it)
    while True:
        batch = list(islice(it, size))
        if not batch:
            return
        yield batch


def _chunk_job(args):
    alpha, batch = args
    return histogram_chunk(alpha, batch)


def brute_force_histogram(
    alpha_type: Partition,
    beta_type: Partition,
    *,
    alpha: Optional[Permutation] = None,
    max_n: Optional[int] = None,
    workers: int = 1,
    chunk_size: int = 20000,
) -> CycleHistogram:
    """Enumerate every ``omega`` of type ``beta_type`` and histogram ``kappa(alpha o omega)``.

    ``alpha`` defaults to :func:`canonical_representative` of ``alpha_type``;
    by conjugation invariance any representative gives the same histogram.
    With ``workers > 1`` chunks are farmed out to processes and merged by
    addition, so the result does not depend on chunking.
    """
    if alpha_type.n != beta_type.n:
        raise ShapeMismatch(f"{alpha_type} and {beta_type} partition different n")
    n = alpha_type.n
    bound = default_max_n() if max_n is None else max_n
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds enumeration bound {bound} (raise it with --max-n)")
    if alpha is None:
        alpha = canonical_representative(alpha_type)
    elif Partition(cycle_lengths(alpha.images)) != alpha_type:
        raise ShapeMismatch(f"representative does not have cycle-type {alpha_type}")
    a = alpha.images
    stream = iter_class_images(beta_type)
    total: Counter = Counter()
    if workers <= 1:
        for batch in _chunked(stream, chunk_size):
            total.update(histogram_chunk(a, batch))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            jobs = ((a, batch) for batch in _chunked(stream, chunk_size))
            for part in pool.map(_chunk_job, jobs):
                total.update(part)
    return CycleHistogram(n, dict(total))


def character_w(n: int, m: int, classes: Sequence[Partition]) -> Fraction:
    """``sum_lam c_{lam,m} / (f^lam)^(t-1) * prod_i chi^lam(C_i)`` over all ``lam |- n``."""
    t = len(classes)
    total = Fraction(0)
    for lam in partitions_of(n):
        chis = 1
        for c in classes:
            chis *= mn_character(lam, c)
            if not chis:
                break
        if not chis:
            continue
        f = young_stats(lam).dimension
        # c/f^(t-1) = (c/f) * f^(2-t)
        total += c_frak_over_f(lam, m) * chis * Fraction(f) ** (2 - t)
    return total


def xi_character(m: int, classes: Sequence[Partition]) -> int:
    """Number of tuples, one permutation per class, whose product has ``m`` cycles.

    Evaluated purely through irreducible characters; the result is checked to
    be a nonnegative integer.
    """
    if not classes:
        raise ValueError("need at least one class")
    n = classes[0].n
    if any(c.n != n for c in classes):
        raise ShapeMismatch("all classes must partition the same n")
    if not 1 <= m <= n:
        return 0
    acc = Fraction(0)
    for k in range(n - m + 1):
        acc += Fraction((-1) ** k * stirling1_unsigned(m + k, m), math.factorial(m + k)) * character_w(
            n, m + k, classes
        )
    value = acc * math.prod(class_size(c) for c in classes)
    if value.denominator != 1 or value < 0:
        raise NonIntegerResult(f"xi_{n},{m}{tuple(map(str, classes))} evaluated to {value}")
    return value.numerator


def xi_fixed_first(m: int, classes: Sequence[Partition]) -> int:
    """:func:`xi_character` with the first permutation pinned to one representative."""
    q, r = divmod(xi_character(m, classes), class_size(classes[0]))
    if r:
        raise NonIntegerResult("tuple count not divisible by the first class size")
    return q


def xi_histogram(classes: Sequence[Partition], *, fixed_first: bool = True) -> CycleHistogram:
    n = classes[0].n
    f = xi_fixed_first if fixed_first else xi_character
    return CycleHistogram(n, {m: f(m, classes) for m in range(1, n + 1)})


def genus_of(m: int, n: int, edge_parts: int, faces: int = 2) -> int:
    """Genus of the hypermap whose product has ``m`` cycles.

    From ``faces + edge_parts - n + m = 2 - 2g`` with the face count fixed at 2.
    """
    if m < 1:
        raise ValueError("m must be positive")
    twice = 2 - faces - edge_parts + n - m
    if twice % 2:
        raise NonIntegralGenus(f"m={m} has the wrong parity for n={n}, l(beta)={edge_parts}")
    return twice // 2


def parity_allowed(m: int, n: int, alpha_type: Partition, beta_type: Partition) -> bool:
    """Sign of a product: ``m`` must match ``n - l(alpha) + n - l(beta)`` mod 2 against ``n``."""
    return (n - m) % 2 == ((n - len(alpha_type)) + (n - len(beta_type))) % 2
