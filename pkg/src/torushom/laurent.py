"""Exact Laurent-polynomial arithmetic over Z in one variable q.

Quantum integers [n], quantum factorials [n]! and quantum binomials live
here, together with the ring operations the rest of the package needs.
Coefficients are Python ints, so nothing ever overflows.
"""

from __future__ import annotations

from functools import cache


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact is not.

    This always indicates an internal bug, never bad user input.
    """


class LaurentPoly:
    """An integer Laurent polynomial in q, stored as {exponent: coefficient}.

    The stored form is canonical: zero coefficients are never kept, so
    structural equality agrees with mathematical equality.  Instances are
    immutable; all arithmetic returns fresh objects.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, c in items:
                if c:
                    e = int(e)
                    s = clean.get(e, 0) + int(c)
                    if s:
                        clean[e] = s
                    elif e in clean:
                        del clean[e]
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    # -- queries -----------------------------------------------------

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs with exponents strictly increasing."""
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Largest exponent; undefined (raises) for the zero polynomial."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def valuation(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self._coeffs)

    def eval_at_one(self) -> int:
        """Sum of all coefficients, i.e. the value at q = 1."""
        return sum(self._coeffs.values())

    def bar(self) -> "LaurentPoly":
        """The image under q -> q^(-1)."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    # -- ring operations ---------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly({0: x})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by q^d."""
        return LaurentPoly({e + d: c for e, c in self._coeffs.items()})

    # -- equality ----------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    # -- display / serialization --------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                qpow = "q" if e == 1 else f"q^{e}"
                mono = qpow if abs(c) == 1 else f"{abs(c)}{qpow}"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [[e, c] for e, c in self.terms()]}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data["terms"]})


def divide_exact(numerator: LaurentPoly, denominator: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials.

    Raises ExactDivisionError when the division leaves a remainder; the
    callers in this package only divide quantities that are divisible by
    construction, so a failure means a bug.
    """
    if denominator.is_zero():
        raise ExactDivisionError("division by the zero polynomial")
    if numerator.is_zero():
        return LaurentPoly.zero()
    den = denominator.terms()
    dd, lead = den[-1]
    floor = numerator.valuation() - denominator.valuation()
    rem = dict(numerator._coeffs)
    quotient: dict[int, int] = {}
    while rem:
        top = max(rem)
        e = top - dd
        c = rem[top]
        if e < floor or c % lead:
            raise ExactDivisionError(
                f"inexact division: {numerator} / {denominator}"
            )
        qc = c // lead
        quotient[e] = qc
        for de, dc in den:
            k = e + de
            s = rem.get(k, 0) - qc * dc
            if s:
                rem[k] = s
            elif k in rem:
                del rem[k]
    return LaurentPoly(quotient)


def qint(n: int) -> LaurentPoly:
    """The quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n).

    [0] is the zero polynomial.
    """
    if n < 0:
        raise ValueError(f"qint requires n >= 0, got {n}")
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


@cache
def qfactorial(n: int) -> LaurentPoly:
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError(f"qfactorial requires n >= 0, got {n}")
    if n == 0:
        return LaurentPoly.one()
    return qfactorial(n - 1) * qint(n)


@cache
def qbinom(n: int, k: int) -> LaurentPoly:
    """The quantum binomial [n]! / ([k]! [n-k]!), zero outside 0 <= k <= n.

    Computed by taking the full numerator [n]! and dividing out the factors
    of [k]! and [n-k]! one at a time; every intermediate quotient is a
    genuine Laurent polynomial, and any inexact division aborts loudly.
    """
    if n < 0:
        raise ValueError(f"qbinom requires n >= 0, got {n}")
    if k < 0 or k > n:
        return LaurentPoly.zero()
    result = qfactorial(n)
    for i in range(1, k + 1):
        result = divide_exact(result, qint(i))
    for i in range(1, n - k + 1):
        result = divide_exact(result, qint(i))
    return result
