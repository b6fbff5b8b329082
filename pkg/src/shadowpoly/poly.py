"""Dense univariate polynomials in ``k`` with exact rational coefficients."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class RationalPoly:
    """Immutable polynomial; ``coeffs[i]`` multiplies ``k**i``.  Zero has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "RationalPoly":
        return cls([c])

    @classmethod
    def linear(cls, a: Scalar, b: Scalar = 0) -> "RationalPoly":
        """``a*k + b``"""
        return cls([b, a])

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.constant(other)
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({format_human(self)!r})"

    def __str__(self):
        return format_human(self)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> "RationalPoly":
        c = Fraction(c)
        return RationalPoly([x * c for x in self.coeffs])

    def __truediv__(self, c: Scalar):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(Fraction(1) / Fraction(c))

    def __call__(self, k: Scalar) -> Fraction:
        return poly_eval(self, k)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def _coerce(x):
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPoly.constant(x)
    return NotImplemented


ZERO = RationalPoly()
ONE = RationalPoly([1])
K = RationalPoly([0, 1])


def poly_arith(a: RationalPoly, b: RationalPoly | Scalar, op: str) -> RationalPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


def poly_eval(p: RationalPoly, k: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * k + c
    return acc


def falling_factorial(r: int) -> RationalPoly:
    """k (k-1) ... (k-r+1)"""
    out = ONE
    for i in range(r):
        out = out * RationalPoly([-i, 1])
    return out


def binomial_poly(p: RationalPoly, r: int) -> RationalPoly:
    """C(p, r) = p (p-1) ... (p-r+1) / r!"""
    out = ONE
    denom = 1
    for i in range(r):
        out = out * (p - i)
        denom *= i + 1
    return out / denom


# -- text formats ------------------------------------------------------------

def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_human(p: RationalPoly, var: str = "k") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = _frac_str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else _frac_str(mag) + mono
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def format_json(p: RationalPoly) -> list[str]:
    return [f"{c.numerator}/{c.denominator}" for c in p.coeffs]


def poly_format(p: RationalPoly, mode: str = "human") -> str:
    if mode == "human":
        return format_human(p)
    if mode == "json":
        return json.dumps(format_json(p))
    raise ValueError(f"unknown mode {mode!r}")


_TERM = re.compile(r"^(?:(\d+)(?:/(\d+))?)?(?:([a-z])(?:\^(\d+))?)?$")


def parse_poly(text: str | list, var: str = "k") -> RationalPoly:
    """Inverse of both output formats (human string or JSON coefficient array)."""
    if isinstance(text, list):
        return RationalPoly(Fraction(s) for s in text)
    s = text.strip()
    if s.startswith("["):
        return RationalPoly(Fraction(x) for x in json.loads(s))
    if s == "0":
        return ZERO
    # split before every sign so spacing is optional
    tokens = re.findall(r"[+-]?[^+-]+", s.replace(" ", ""))
    coeffs: dict[int, Fraction] = {}
    for tok in tokens:
        sign = 1
        if tok[0] in "+-":
            sign = -1 if tok[0] == "-" else 1
            tok = tok[1:]
        m = _TERM.match(tok)
        if not m or not tok:
            raise ValueError(f"cannot parse term {tok!r}")
        num, den, v, exp = m.groups()
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r}")
        c = Fraction(int(num), int(den) if den else 1) if num else Fraction(1)
        if v is None and num is None:
            raise ValueError(f"empty term in {text!r}")
        deg = 0 if v is None else (int(exp) if exp else 1)
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + sign * c
    top = max(coeffs) if coeffs else -1
    return RationalPoly(coeffs.get(i, 0) for i in range(top + 1))
