"""Serialisable result records and output formatting."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .combinat import Partition, parse_partition
from .exact import RationalPolynomial

SCHEMA = 1


def rational_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass
class ResultRecord:
    n: int
    beta: str
    method: str
    coefficients: list[tuple[int, str]]
    genus: dict[int, int] = field(default_factory=dict)
    checks: dict[str, str] = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)

    @classmethod
    def from_polynomial(
        cls,
        n: int,
        beta: Partition,
        method: str,
        poly: RationalPolynomial,
        genus: dict[int, int] | None = None,
        checks: dict[str, str] | None = None,
        flags=(),
    ) -> "ResultRecord":
        return cls(
            n=n,
            beta=str(beta),
            method=method,
            coefficients=[(d, rational_str(c)) for d, c in poly.terms().items()],
            genus=dict(genus or {}),
            checks=dict(checks or {}),
            flags=list(flags),
        )

    def polynomial(self) -> RationalPolynomial:
        return RationalPolynomial.from_terms({d: parse_rational(c) for d, c in self.coefficients})

    def partition(self) -> Partition:
        return parse_partition(self.beta, self.n)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "beta": self.beta,
            "method": self.method,
            "coefficients": [[d, c] for d, c in self.coefficients],
            "genus": {str(d): g for d, g in sorted(self.genus.items())},
            "checks": dict(sorted(self.checks.items())),
            "flags": list(self.flags),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ResultRecord":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        return cls(
            n=int(data["n"]),
            beta=data["beta"],
            method=data["method"],
            coefficients=[(int(d), str(c)) for d, c in data["coefficients"]],
            genus={int(d): int(g) for d, g in data.get("genus", {}).items()},
            checks=dict(data.get("checks", {})),
            flags=list(data.get("flags", [])),
        )

    @classmethod
    def from_json(cls, line: str) -> "ResultRecord":
        return cls.from_dict(json.loads(line))


def render_polynomial(poly: RationalPolynomial, fmt: str, **extra) -> str:
    if fmt == "plain":
        return poly.to_plain()
    if fmt == "latex":
        return poly.to_latex()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        for d, c in poly.terms().items():
            w.writerow([d, rational_str(c)])
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        payload = {"schema": SCHEMA, **extra}
        payload["coefficients"] = [[d, rational_str(c)] for d, c in poly.terms().items()]
        payload["plain"] = poly.to_plain()
        return json.dumps(payload)
    raise ValueError(f"unknown format {fmt!r}")
