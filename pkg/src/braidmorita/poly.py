"""Sparse multivariate polynomials over Q in variables t0, t1, ...

Monomials are sorted tuples of variable indices (``(0, 0, 2)`` is t0^2 t2).
Only what the K-matrix solver needs: add, multiply, substitute an affine
expression for one variable, and factor out a variable dividing every term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

Monomial = tuple[int, ...]


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if c:
                m = tuple(sorted(m))
                c = self.terms.get(m, 0) + Fraction(c)
                if c:
                    self.terms[m] = c
                else:
                    self.terms.pop(m, None)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): Fraction(c)})

    @classmethod
    def var(cls, i: int) -> "Poly":
        return cls({(i,): Fraction(1)})

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def variables(self) -> set[int]:
        return {v for m in self.terms for v in m}

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def coeff(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(sorted(m)), Fraction(0))

    def subs(self, var: int, value: "Poly") -> "Poly":
        if var not in self.variables():
            return self
        out = Poly()
        for m, c in self.terms.items():
            term = Poly.const(c)
            for v in m:
                term = term * (value if v == var else Poly.var(v))
            out = out + term
        return out

    def evaluate(self, point: Mapping[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            for v in m:
                c *= point[v]
            total += c
        return total

    def normalized(self) -> "Poly":
        """Scale so the leading coefficient (in sorted monomial order) is 1."""
        if not self.terms:
            return self
        lead = self.terms[max(self.terms, key=lambda m: (len(m), m))]
        return self * (1 / lead)

    def common_variable(self) -> int | None:
        """Smallest variable dividing every monomial, if any."""
        if not self.terms or () in self.terms:
            return None
        common = set(next(iter(self.terms)))
        for m in self.terms:
            common &= set(m)
        return min(common) if common else None

    def divide_by_var(self, v: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            lst = list(m)
            lst.remove(v)
            out[tuple(lst)] = c
        return Poly(out)

    def sort_key(self):
        return sorted(((len(m), m, c) for m, c in self.terms.items()), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-len(m), m)):
            c = self.terms[m]
            mono = "*".join(f"t{v}" for v in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__
