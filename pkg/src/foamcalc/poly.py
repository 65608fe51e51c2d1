"""Sparse exact polynomials.

Two containers live here:

* ``Poly``: multivariate polynomials over the rationals with named
  variables.  Used for symmetric polynomials in explicit alphabets and for
  coefficients in the elementary symmetric generators of an equivariant
  alphabet.
* ``LaurentPoly``: integer Laurent polynomials in two variables ``q`` and
  ``t`` (the quantum and homological gradings).
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

Monomial = tuple  # tuple of (variable name, exponent) pairs, sorted by name


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


def _var_key(name: str):
    # "A10" sorts after "A9"
    m = re.fullmatch(r"([^\d]*)(\d*)", name)
    head, digits = m.group(1), m.group(2)
    return (head, int(digits) if digits else -1, name)


class Poly:
    """Multivariate polynomial with Fraction coefficients.

    Immutable by convention; every operation returns a new object.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[m] = c
        self.terms: dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((), Fraction(0))

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __add__(self, other) -> "Poly":
        other = Poly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = Fraction(other)
            if not c:
                return Poly()
            return Poly({m: v * c for m, v in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def subs(self, values: Mapping[str, object]) -> "Poly":
        """Substitute numbers or ``Poly`` objects for variables.

        Unbound variables stay symbolic.
        """
        total = Poly()
        for m, c in self.terms.items():
            piece = Poly.const(c)
            rest = []
            for v, e in m:
                if v in values:
                    piece = piece * (Poly.coerce(values[v]) ** e)
                else:
                    rest.append((v, e))
            if rest:
                piece = piece * Poly({tuple(rest): 1})
            total = total + piece
        return total

    def map_into(self, values: Mapping[str, object], convert) -> object:
        """Evaluate in an arbitrary commutative ring.

        ``convert`` turns a Fraction into a ring element; ``values`` holds
        a ring element for every variable.
        """
        total = convert(Fraction(0))
        for m, c in self.terms.items():
            term = convert(c)
            for v, e in m:
                term = term * values[v] ** e
            total = total + term
        return total

    def eval(self, values: Mapping[str, object]) -> Fraction:
        """Evaluate at exact numbers; every variable must be bound."""
        missing = self.variables() - set(values)
        if missing:
            raise KeyError(f"no value for variables {sorted(missing, key=_var_key)}")
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                term *= Fraction(values[v]) ** e
            total += term
        return total

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def mkey(m):
            return (-sum(e for _, e in m), [(_var_key(v), -e) for v, e in m])

        parts = []
        for m in sorted(self.terms, key=mkey):
            c = self.terms[m]
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def poly_sum(items: Iterable[Poly]) -> Poly:
    out: dict[Monomial, Fraction] = {}
    for p in items:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return Poly(out)


_LP_KEY = re.compile(r"^\s*q\^(-?\d+)\s+t\^(-?\d+)\s*$")


class LaurentPoly:
    """Integer Laurent polynomial in ``q`` and ``t``.

    Stored as a map ``(q exponent, t exponent) -> coefficient`` with no
    zero entries.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    clean[(int(k[0]), int(k[1]))] = int(c)
        self.coeffs: dict[tuple[int, int], int] = clean

    @classmethod
    def monomial(cls, qexp: int = 0, texp: int = 0, coeff: int = 1) -> "LaurentPoly":
        return cls({(qexp, texp): coeff})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self.coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift")
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def shift(self, dq: int = 0, dt: int = 0) -> "LaurentPoly":
        return LaurentPoly({(a + dq, b + dt): c for (a, b), c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({(0, 0): other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def bar(self) -> "LaurentPoly":
        """q -> q^-1."""
        return LaurentPoly({(-a, b): c for (a, b), c in self.coeffs.items()})

    def mirror(self) -> "LaurentPoly":
        """q -> q^-1 and t -> t^-1."""
        return LaurentPoly({(-a, -b): c for (a, b), c in self.coeffs.items()})

    def at_q1(self) -> "LaurentPoly":
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.coeffs.items():
            out[(0, b)] = out.get((0, b), 0) + c
        return LaurentPoly(out)

    def at_t1(self) -> "LaurentPoly":
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.coeffs.items():
            out[(a, 0)] = out.get((a, 0), 0) + c
        return LaurentPoly(out)

    def at_t(self, value: int) -> "LaurentPoly":
        """Substitute an integer of absolute value 1 for ``t``."""
        if value not in (1, -1):
            raise ValueError("t can only be specialised to +1 or -1")
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.coeffs.items():
            out[(a, 0)] = out.get((a, 0), 0) + c * value ** (b % 2)
        return LaurentPoly(out)

    def value(self) -> int:
        """Sum of all coefficients (q = t = 1)."""
        return sum(self.coeffs.values())

    def min_q(self) -> int:
        return min(a for a, _ in self.coeffs)

    def max_q(self) -> int:
        return max(a for a, _ in self.coeffs)

    def coefficient(self, qexp: int, texp: int = 0) -> int:
        return self.coeffs.get((qexp, texp), 0)

    def to_json(self) -> dict[str, int]:
        return {f"q^{a} t^{b}": c for (a, b), c in sorted(self.coeffs.items())}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        out = {}
        for key, c in data.items():
            m = _LP_KEY.match(key)
            if not m:
                raise ValueError(f"bad Laurent monomial key {key!r}")
            out[(int(m.group(1)), int(m.group(2)))] = int(c)
        return cls(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            mono = []
            if a:
                mono.append("q" if a == 1 else f"q^{a}")
            if b:
                mono.append("t" if b == 1 else f"t^{b}")
            m = "*".join(mono)
            if not m:
                s = str(c)
            elif c == 1:
                s = m
            elif c == -1:
                s = "-" + m
            else:
                s = f"{c}*{m}"
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out
