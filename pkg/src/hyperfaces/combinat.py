"""Partitions, permutations, conjugacy classes and Young-diagram statistics."""

from __future__ import annotations

import math
import os
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations as _orderings
from typing import Iterable, Iterator, Optional, Sequence

from .errors import BoundExceeded, ParseError, SumMismatch

DEFAULT_MAX_N = 10
MAX_N_ENV = "HYPERFACES_MAX_N"


def default_max_n() -> int:
    """Enumeration bound: ``$HYPERFACES_MAX_N`` if set, else 10."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Partition:
    """Integer partition with parts stored in weakly decreasing order."""

    parts: tuple[int, ...]

    def __init__(self, *parts: int | Iterable[int]):
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])  # type: ignore[arg-type]
        ps = tuple(sorted((int(p) for p in parts), reverse=True))  # type: ignore[arg-type]
        if any(p < 1 for p in ps):
            raise ValueError(f"partition parts must be positive: {ps}")
        object.__setattr__(self, "parts", ps)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    def min_part(self) -> int:
        return self.parts[-1]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells ``(i, j)`` of the Young diagram, 1-based, row by row."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield i, j

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({str(self)})"

    def exponent_str(self) -> str:
        """Exponent notation in increasing part order, e.g. ``[1^2,4]``."""
        bits = [f"{p}" if e == 1 else f"{p}^{e}" for p, e in self.multiplicities.items()]
        return "[" + ",".join(bits) + "]"

    @classmethod
    def hook(cls, n: int, arm: int) -> "Partition":
        """``[1^(n-arm), arm]``, i.e. the shape theta_arm of size ``n``."""
        return cls([arm] + [1] * (n - arm))


_EXP_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str, n_hint: Optional[int] = None) -> Partition:
    """Parse ``"3,3"``, ``"[3^2]"`` or ``"1^2,4"`` into a canonical partition."""
    body = text.strip()
    if body.startswith("[") != body.endswith("]"):
        raise ParseError(f"unbalanced brackets in {text!r}")
    if body.startswith("["):
        body = body[1:-1]
    if not body.strip():
        raise ParseError(f"empty partition: {text!r}")
    parts: list[int] = []
    for token in body.split(","):
        m = _EXP_TOKEN.match(token)
        if not m:
            raise ParseError(f"malformed partition token {token!r} in {text!r}")
        base = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if base < 1:
            raise ParseError(f"parts must be positive in {text!r}")
        parts.extend([base] * exp)
    if not parts:
        raise ParseError(f"empty partition: {text!r}")
    lam = Partition(parts)
    if n_hint is not None and lam.n != n_hint:
        raise SumMismatch(f"partition {lam} sums to {lam.n}, expected {n_hint}")
    return lam


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield (p,) + rest

    for parts in rec(n, n if max_part is None else max_part):
        yield Partition(parts)


def z_lambda(lam: Partition) -> int:
    return math.prod(i**m * math.factorial(m) for i, m in lam.multiplicities.items())


def class_size(lam: Partition) -> int:
    q, r = divmod(math.factorial(lam.n), z_lambda(lam))
    assert r == 0
    return q


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, k: int) -> int:
    """Number of permutations of ``[n]`` with exactly ``k`` cycles."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    # iterate rows to avoid deep recursion for large n
    row = [1]
    for m in range(1, n + 1):
        new = [0] * (m + 1)
        for j in range(1, m + 1):
            new[j] = (row[j - 1] if j - 1 < len(row) else 0) + (m - 1) * (row[j] if j < len(row) else 0)
        row = new
    return row[k]


@dataclass(frozen=True)
class YoungDiagramStats:
    shape: Partition
    hooks: dict[tuple[int, int], int]
    contents: dict[tuple[int, int], int]

    @cached_property
    def dimension(self) -> int:
        """``f^lambda`` by the hook length formula."""
        q, r = divmod(math.factorial(self.shape.n), math.prod(self.hooks.values()))
        assert r == 0
        return q


@lru_cache(maxsize=None)
def young_stats(lam: Partition) -> YoungDiagramStats:
    conj = lam.conjugate()
    hooks = {}
    contents = {}
    for i, j in lam.cells():
        arm = lam[i - 1] - j
        leg = conj[j - 1] - i
        hooks[(i, j)] = arm + leg + 1
        contents[(i, j)] = j - i
    return YoungDiagramStats(lam, hooks, contents)


# ---------------------------------------------------------------------------
# Permutations (stored 0-based; cycle notation at the boundary is 1-based)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{0..n-1}`` in one-line form; composition is right to left."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 1-based cycles, e.g. ``[(1, 8), (2, 7, 6, 5, 4, 3)]``."""
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls(tuple(img))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """1-based cycles, each led by its smallest element."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            cyc = []
            i = s
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            out.append(tuple(cyc))
        return out


def cycle_lengths(images: Sequence[int]) -> list[int]:
    n = len(images)
    seen = bytearray(n)
    out = []
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        i = s
        while not seen[i]:
            seen[i] = 1
            length += 1
            i = images[i]
        out.append(length)
    return out


def cycle_count(pi: Permutation | Sequence[int]) -> int:
    images = pi.images if isinstance(pi, Permutation) else pi
    return len(cycle_lengths(images))


def cycle_type(pi: Permutation | Sequence[int]) -> Partition:
    images = pi.images if isinstance(pi, Permutation) else pi
    return Partition(cycle_lengths(images))


def canonical_representative(lam: Partition) -> Permutation:
    """Cycles on consecutive blocks, longest first: ``[2,4] -> (1 2 3 4)(5 6)``."""
    cycles = []
    start = 1
    for p in lam.parts:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return Permutation.from_cycles(lam.n, cycles)


def iter_class_images(lam: Partition) -> Iterator[tuple[int, ...]]:
    """One-line images (0-based tuples) of every permutation of cycle-type ``lam``.

    Each cycle is led by the smallest unused element, so cycles of equal length
    come out ordered by leader and nothing is produced twice.
    """
    n = lam.n
    img = [0] * n
    remaining = Counter(lam.parts)

    def rec(unused: list[int]) -> Iterator[tuple[int, ...]]:
        if not unused:
            yield tuple(img)
            return
        lead, rest = unused[0], unused[1:]
        for length in sorted(remaining):
            if not remaining[length]:
                continue
            remaining[length] -= 1
            for tail in _orderings(rest, length - 1):
                cyc = (lead,) + tail
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    img[a] = b
                left = [u for u in rest if u not in tail] if tail else rest
                yield from rec(left)
            remaining[length] += 1

    yield from rec(list(range(n)))


def enumerate_class(lam: Partition, max_n: Optional[int] = None) -> Iterator[Permutation]:
    """Stream every permutation of cycle-type ``lam`` exactly once."""
    bound = default_max_n() if max_n is None else max_n
    if lam.n > bound:
        raise BoundExceeded(f"n={lam.n} exceeds enumeration bound {bound}")
    for images in iter_class_images(lam):
        yield Permutation(images)


def falling(a: int, b: int) -> int:
    """Falling factorial ``(a)_b``."""
    return math.prod(range(a, a - b, -1)) if b > 0 else 1
