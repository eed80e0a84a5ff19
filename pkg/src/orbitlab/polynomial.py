"""Sparse integer polynomials in a single formal variable ``p``."""

from __future__ import annotations

from typing import Mapping

from .errors import InexactDivision


class OrbitPolynomial:
    """Exponent -> coefficient map with no zero coefficients stored.

    Exponents are non-negative; coefficients are Python ints.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (coeffs or {}).items():
            e, c = int(e), int(c)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c:
                clean[e] = c
        self._coeffs = clean

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "OrbitPolynomial":
        return cls({exp: coef})

    @classmethod
    def constant(cls, c: int) -> "OrbitPolynomial":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def leading_coefficient(self) -> int:
        return self._coeffs.get(self.degree(), 0)

    def is_monic(self) -> bool:
        return self.leading_coefficient() == 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def _coerce(self, other):
        if isinstance(other, OrbitPolynomial):
            return other
        if isinstance(other, int):
            return OrbitPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return OrbitPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return OrbitPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return OrbitPolynomial(out)

    __rmul__ = __mul__

    def div_pow(self, e: int) -> "OrbitPolynomial":
        """Exact division by ``p^e``; raises InexactDivision on a remainder."""
        low = [x for x in self._coeffs if x < e]
        if low:
            rem = OrbitPolynomial({x: self._coeffs[x] for x in low})
            raise InexactDivision(f"{self} is not divisible by p^{e} (remainder {rem})")
        return OrbitPolynomial({x - e: c for x, c in self._coeffs.items()})

    def evaluate(self, p: int) -> int:
        return sum(c * p**e for e, c in self._coeffs.items())

    __call__ = evaluate

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def terms(self) -> list[tuple[int, int]]:
        """``(exp, coef)`` pairs by decreasing exponent."""
        return sorted(self._coeffs.items(), reverse=True)

    def to_json(self) -> list[dict]:
        return [{"exp": e, "coef": c} for e, c in self.terms()]

    def __str__(self):
        if not self._coeffs:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = "p" if e == 1 else f"p^{e}"
                body = var if a == 1 else f"{a}*{var}"
            if i == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"OrbitPolynomial({str(self)!r})"


def evaluate(q: OrbitPolynomial, p: int) -> int:
    return q.evaluate(p)
