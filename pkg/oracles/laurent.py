from collections import Counter
from dataclasses import dataclass

import sympy as sp

A = sp.Symbol("A")


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial in A, stored as sorted (exponent, coefficient) pairs."""
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, int] = {}
        for exp, coeff in self.terms:
            merged[int(exp)] = merged.get(int(exp), 0) + int(coeff)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c)))

    @classmethod
    def from_expr(cls, expr) -> "LaurentPolynomial":
        expr = sp.expand(expr)
        if expr == 0:
            return cls()
        terms = []
        for monomial, coeff in expr.as_coefficients_dict().items():
            exponent = monomial.as_coeff_exponent(A)[1]
            terms.append((int(exponent), int(coeff)))
        return cls(tuple(terms))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls(((exponent, coeff),))

    def to_expr(self) -> sp.Expr:
        return sp.Add(*(c * A**e for e, c in self.terms))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return LaurentPolynomial(self.terms + other.terms)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        product: Counter = Counter()
        for e, c in self.terms:
            for f, d in other.terms:
                product[e + f] += c * d
        return LaurentPolynomial(tuple(product.items()))

    def __str__(self):
        return str(self.to_expr()) if self.terms else "0"
