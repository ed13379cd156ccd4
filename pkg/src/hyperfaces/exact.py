"""Exact univariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction` (aliased as ``BigRational``), which is
always in lowest terms with a positive denominator.  Polynomials are dense and
immutable; the degrees that occur in this package are small.

The zero polynomial has an empty coefficient tuple and ``degree == -inf``, so
``deg(p*q) == deg(p) + deg(q)`` holds without special cases; code that needs an
integer degree must test ``p.is_zero()`` first.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ZeroPolynomial

BigRational = Fraction
Scalar = Union[int, Fraction]

NEG_INF = float("-inf")


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RationalPolynomial:
    """Polynomial in ``x`` with exact rational coefficients, lowest degree first."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self._c = _trim(coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "RationalPolynomial":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [c])

    @classmethod
    def from_terms(cls, terms: dict[int, Scalar]) -> "RationalPolynomial":
        if not terms:
            return cls()
        out = [Fraction(0)] * (max(terms) + 1)
        for d, c in terms.items():
            out[d] += Fraction(c)
        return cls(out)

    # -- basic accessors ----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> Union[int, float]:
        return len(self._c) - 1 if self._c else NEG_INF

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, d: int) -> Fraction:
        if 0 <= d < len(self._c):
            return self._c[d]
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._c[-1]

    def terms(self) -> dict[int, Fraction]:
        """Nonzero coefficients keyed by degree."""
        return {d: c for d, c in enumerate(self._c) if c}

    def low_degree(self) -> int:
        """Multiplicity of the root ``x = 0``."""
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no lowest term")
        return next(d for d, c in enumerate(self._c) if c)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return RationalPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "RationalPolynomial":
        c = Fraction(c)
        return RationalPolynomial(x / c for x in self._c)

    def __pow__(self, k: int) -> "RationalPolynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(d * c for d, c in enumerate(self._c) if d)

    def scale_var(self, s: Scalar) -> "RationalPolynomial":
        """Return ``p(s*x)``."""
        s = Fraction(s)
        return RationalPolynomial(c * s**d for d, c in enumerate(self._c))

    def shift_var(self, h: Scalar) -> "RationalPolynomial":
        """Return ``p(x + h)`` by Horner composition."""
        lin = RationalPolynomial((h, 1))
        acc = ZERO
        for c in reversed(self._c):
            acc = acc * lin + c
        return acc

    def divmod(self, other: "RationalPolynomial") -> tuple["RationalPolynomial", "RationalPolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        db = len(other._c) - 1
        lead = other._c[-1]
        if len(rem) - 1 < db:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            q = rem[i] / lead
            if q:
                quot[i - db] = q
                for j, b in enumerate(other._c):
                    rem[i - db + j] -= q * b
        return RationalPolynomial(quot), RationalPolynomial(rem[:db])

    def __mod__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self.divmod(other)[0]

    def monic(self) -> "RationalPolynomial":
        if self.is_zero():
            return self
        return self / self.leading()

    # -- rendering ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"RationalPolynomial({self.to_plain()!r})"

    def __str__(self) -> str:
        return self.to_plain()

    def to_plain(self) -> str:
        """Render like ``21*x^2 + 9*x^4`` (ascending degree)."""
        parts: list[str] = []
        for d, c in self.terms().items():
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                mono = "x" if d == 1 else f"x^{d}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_latex(self) -> str:
        r"""Render like ``20 x^2 + \frac{29}{3} x^4`` (ascending degree)."""
        parts: list[str] = []
        for d, c in self.terms().items():
            mag = abs(c)
            if mag.denominator == 1:
                num = str(mag.numerator)
            else:
                num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            if d == 0:
                body = num
            else:
                mono = "x" if d == 1 else f"x^{d}"
                body = mono if mag == 1 else f"{num} {mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


ZERO = RationalPolynomial()
ONE = RationalPolynomial((1,))
X = RationalPolynomial((0, 1))


def poly_add(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    return a + b


def poly_mul(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    return a * b


def poly_gcd(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Monic gcd by the Euclidean algorithm; ``gcd(0, 0) == 0``."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def binomial(a: int, k: int) -> int:
    """Integer binomial with ``C(a, k) = 0`` for ``k < 0``; ``a`` may be negative."""
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k)
    # generalized: C(a, k) = (-1)^k C(k - a - 1, k)
    return (-1) ** k * math.comb(k - a - 1, k)


def binom_poly(shift: int, k: int) -> RationalPolynomial:
    """``C(x + shift, k)`` as a polynomial of degree ``k``; zero for ``k < 0``."""
    if k < 0:
        return ZERO
    acc = ONE
    for j in range(k):
        acc = acc * RationalPolynomial((shift - j, 1))
    return acc / math.factorial(k)


def squarefree_part(p: RationalPolynomial) -> RationalPolynomial:
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no squarefree part")
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def sturm_chain(p: RationalPolynomial) -> list[RationalPolynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _sign_at(p: RationalPolynomial, at) -> int:
    if at == math.inf:
        return _sign(p.leading())
    if at == -math.inf:
        return _sign(p.leading()) * (-1) ** int(p.degree)
    return _sign(p(Fraction(at)))


def _variations(chain: Sequence[RationalPolynomial], at) -> int:
    signs = [s for s in (_sign_at(q, at) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_real_root_count(p: RationalPolynomial, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(lo, hi]``.

    ``lo``/``hi`` may be ints, Fractions or ``±math.inf``.  The polynomial is
    reduced to its squarefree part first, so multiplicities are not counted.
    """
    if p.is_zero():
        raise ZeroPolynomial("Sturm count of the zero polynomial is undefined")
    if not lo < hi:
        raise ValueError("need lo < hi")
    q = squarefree_part(p)
    if q.degree == 0:
        return 0
    chain = sturm_chain(q)
    return _variations(chain, lo) - _variations(chain, hi)


def root_multiplicities(p: RationalPolynomial) -> list[RationalPolynomial]:
    """Yun-style split: entry ``k`` is the monic product of roots of multiplicity ``k+1``."""
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no factorization")
    out: list[RationalPolynomial] = []
    g = poly_gcd(p, p.derivative())
    w = (p // g).monic()
    while w.degree > 0:
        y = poly_gcd(w, g)
        out.append((w // y).monic())
        g = (g // y)
        w = y
    return out
