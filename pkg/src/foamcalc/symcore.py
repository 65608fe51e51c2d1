"""Partitions, Schur functions and the Littlewood-Richardson rule.

Everything is exact.  Symmetric polynomials in an explicit alphabet are
returned as :class:`~foamcalc.poly.Poly` objects in variables named after
the alphabet (``A1, A2, ...``), while elements of the abstract ring of
symmetric functions are kept in the Schur basis as :class:`SymElt`.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .poly import LaurentPoly, Poly, poly_sum

__all__ = [
    "Partition",
    "partitions_in_box",
    "partitions_of",
    "lr_coeff",
    "lr_product",
    "SymElt",
    "schur_product",
    "alphabet",
    "h_poly",
    "e_poly",
    "schur_poly",
    "h_difference",
    "schur_difference",
    "skew_schur_e",
    "evaluate",
    "qbinomial",
    "qint",
]


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {self.parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be non-increasing: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"partition must look like [p1,p2,...]: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls(())
        try:
            return cls(tuple(int(x) for x in body.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @classmethod
    def box(cls, rows: int, cols: int) -> "Partition":
        """The rectangle with ``rows`` rows of length ``cols``."""
        if rows <= 0 or cols <= 0:
            return cls(())
        return cls((cols,) * rows)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __repr__(self) -> str:
        return f"Partition{self}"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """Zero-padded part access."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def fits(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[i] >= other[i] for i in range(len(other)))

    def complement(self, rows: int, cols: int) -> "Partition":
        """Complement inside the ``rows x cols`` box, rotated by 180 degrees."""
        if not self.fits(rows, cols):
            raise ValueError(f"{self} does not fit a {rows}x{cols} box")
        return Partition(tuple(cols - self[rows - 1 - j] for j in range(rows)))

    def complement_transpose(self, rows: int, cols: int) -> "Partition":
        return self.complement(rows, cols).transpose()

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield (i, j)


EMPTY = Partition(())


def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` with optional length and part bounds."""
    out: list[Partition] = []
    limit_len = n if max_len is None else max_len
    limit_part = n if max_part is None else max_part

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        if len(prefix) == limit_len:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, limit_part, [])
    return out


@lru_cache(maxsize=None)
def partitions_in_box(rows: int, cols: int) -> tuple[Partition, ...]:
    """P(rows, cols): partitions fitting a rows x cols box, by size then lex."""
    out = []
    for n in range(rows * cols + 1):
        out.extend(sorted(partitions_of(n, rows, cols), reverse=True))
    return tuple(out)


# --- Littlewood-Richardson rule -------------------------------------------

def _horizontal_strips(shape: tuple[int, ...], k: int, max_rows: int | None):
    """Shapes obtained from ``shape`` by adding a horizontal strip of size k.

    Yields (new_shape, added) where ``added[i]`` counts cells in row i.
    """
    rows = list(shape) + [0]
    n = len(rows)
    if max_rows is not None:
        n = min(n, max_rows)

    def rec(i: int, left: int, added: list[int]):
        if i == n:
            if left == 0:
                yield added
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for c in range(cap, -1, -1):
            added.append(c)
            yield from rec(i + 1, left - c, added)
            added.pop()

    for added in rec(0, k, []):
        new = tuple(r + c for r, c in zip(rows, added))
        new = tuple(p for p in new if p)
        yield new, tuple(added)


@lru_cache(maxsize=None)
def _lr_product_cached(alpha: tuple[int, ...], beta: tuple[int, ...], max_rows: int | None) -> tuple:
    """Enumerate LR tableaux of content beta on skew shapes gamma/alpha.

    Cells labelled i are added as a horizontal strip on top of the cells
    labelled < i, which makes the filling semistandard.  The reverse
    reading word (rows top to bottom, right to left) must be a lattice word.
    """
    result: dict[tuple[int, ...], int] = {}
    # state: (shape, rows_fill) with rows_fill[r] = list of labels in row r (left to right)
    states = [(alpha, tuple(() for _ in range(len(alpha))))]
    for label, k in enumerate(beta, start=1):
        new_states = []
        for shape, fill in states:
            for new_shape, added in _horizontal_strips(shape, k, max_rows):
                rows = list(fill) + [()] * (len(new_shape) - len(fill))
                for r, c in enumerate(added):
                    if c:
                        rows[r] = rows[r] + (label,) * c
                rows = tuple(rows)
                if _is_lattice(rows, label):
                    new_states.append((new_shape, rows))
        states = new_states
    for shape, _ in states:
        result[shape] = result.get(shape, 0) + 1
    return tuple(sorted(result.items()))


def _is_lattice(rows: tuple[tuple[int, ...], ...], upto: int) -> bool:
    counts = [0] * (upto + 2)
    for row in rows:
        for v in reversed(row):
            counts[v] += 1
            if v > 1 and counts[v] > counts[v - 1]:
                return False
    return True


def lr_product(alpha: Partition, beta: Partition, max_rows: int | None = None) -> dict[Partition, int]:
    """Schur expansion of s_alpha * s_beta as {gamma: c^gamma_{alpha beta}}."""
    if len(alpha) < len(beta) or (len(alpha) == len(beta) and alpha.size < beta.size):
        alpha, beta = beta, alpha
    if max_rows is not None and (len(alpha) > max_rows or len(beta) > max_rows):
        return {}
    raw = _lr_product_cached(alpha.parts, beta.parts, max_rows)
    return {Partition(g): c for g, c in raw}


def lr_coeff(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """The Littlewood-Richardson coefficient c^gamma_{alpha beta}."""
    if gamma.size != alpha.size + beta.size:
        return 0
    if not (gamma.contains(alpha) and gamma.contains(beta)):
        return 0
    return lr_product(alpha, beta, len(gamma)).get(gamma, 0)


# --- Schur basis elements --------------------------------------------------

class SymElt:
    """Symmetric function in the Schur basis of an alphabet of size ``a``.

    Coefficients may be integers, Fractions or :class:`Poly` objects (for
    example polynomials in an equivariant alphabet).  Partitions with more
    than ``a`` rows are dropped since their Schur polynomials vanish.
    """

    __slots__ = ("coeffs", "a")

    def __init__(self, coeffs: Mapping[Partition, object] | None = None, a: int | None = None):
        self.a = a
        clean = {}
        if coeffs:
            for lam, c in coeffs.items():
                if a is not None and len(lam) > a:
                    continue
                if _is_zero(c):
                    continue
                clean[lam] = c
        self.coeffs: dict[Partition, object] = clean

    @classmethod
    def schur(cls, lam: Partition | Sequence[int], a: int | None = None, coeff=1) -> "SymElt":
        if not isinstance(lam, Partition):
            lam = Partition(tuple(lam))
        return cls({lam: coeff}, a)

    @classmethod
    def one(cls, a: int | None = None) -> "SymElt":
        return cls({EMPTY: 1}, a)

    def _check(self, other: "SymElt"):
        if self.a != other.a:
            raise ValueError(f"alphabet bounds differ: {self.a} vs {other.a}")

    def __add__(self, other: "SymElt") -> "SymElt":
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymElt(out, self.a)

    def __neg__(self) -> "SymElt":
        return SymElt({lam: -c for lam, c in self.coeffs.items()}, self.a)

    def __sub__(self, other: "SymElt") -> "SymElt":
        return self + (-other)

    def scale(self, c) -> "SymElt":
        return SymElt({lam: v * c for lam, v in self.coeffs.items()}, self.a)

    def __mul__(self, other):
        if isinstance(other, SymElt):
            return schur_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "SymElt":
        if n < 0:
            raise ValueError("negative powers are not symmetric functions")
        out = SymElt.one(self.a)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymElt):
            return NotImplemented
        return self.a == other.a and _coeff_eq(self.coeffs, other.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, lam: Partition):
        return self.coeffs.get(lam, 0)

    def __repr__(self) -> str:
        return f"SymElt({self}, a={self.a})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: (kv[0].size, kv[0].parts))
        return " + ".join(f"({c})*s{lam}" for lam, c in items)


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero") and callable(c.is_zero):
        return c.is_zero()
    return c == 0


def _coeff_eq(d1: Mapping, d2: Mapping) -> bool:
    keys = set(d1) | set(d2)
    for k in keys:
        a, b = d1.get(k, 0), d2.get(k, 0)
        if isinstance(a, Poly) or isinstance(b, Poly):
            if Poly.coerce(a) != Poly.coerce(b):
                return False
        elif a != b:
            return False
    return True


def schur_product(x: SymElt, y: SymElt) -> SymElt:
    """Multiply in the Schur basis, truncating to at most ``a`` rows."""
    x._check(y)
    out: dict[Partition, object] = {}
    for lam, c1 in x.coeffs.items():
        for mu, c2 in y.coeffs.items():
            c12 = c1 * c2
            for nu, m in lr_product(lam, mu, x.a).items():
                term = c12 * m
                out[nu] = out[nu] + term if nu in out else term
    return SymElt(out, x.a)


# --- explicit alphabets ----------------------------------------------------

def alphabet(name: str, size: int) -> list[str]:
    return [f"{name}{i}" for i in range(1, size + 1)]


@lru_cache(maxsize=None)
def h_poly(k: int, variables: tuple[str, ...]) -> Poly:
    """Complete homogeneous symmetric polynomial h_k."""
    if k < 0:
        return Poly()
    if k == 0:
        return Poly.const(1)
    terms = {}
    for combo in itertools.combinations_with_replacement(variables, k):
        mono: dict[str, int] = {}
        for v in combo:
            mono[v] = mono.get(v, 0) + 1
        terms[tuple(sorted(mono.items()))] = 1
    return Poly(terms)


@lru_cache(maxsize=None)
def e_poly(k: int, variables: tuple[str, ...]) -> Poly:
    """Elementary symmetric polynomial e_k."""
    if k < 0 or k > len(variables):
        return Poly()
    if k == 0:
        return Poly.const(1)
    terms = {}
    for combo in itertools.combinations(variables, k):
        terms[tuple(sorted((v, 1) for v in combo))] = 1
    return Poly(terms)


def _det(matrix: list[list[Poly]]) -> Poly:
    """Determinant by cofactor expansion along the first row (small sizes)."""
    n = len(matrix)
    if n == 0:
        return Poly.const(1)
    if n == 1:
        return matrix[0][0]
    total = Poly()
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * _det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def schur_poly(lam: Partition, variables: tuple[str, ...]) -> Poly:
    """Classical Schur polynomial via the Jacobi-Trudi determinant."""
    if len(lam) > len(variables):
        return Poly()
    n = len(lam)
    mat = [[h_poly(lam[i] + j - i, variables) for j in range(n)] for i in range(n)]
    return _det(mat)


@lru_cache(maxsize=None)
def h_difference(k: int, a: int, b: int, names: tuple[str, str] = ("A", "B")) -> Poly:
    """h_k(A - B): coefficient of x^k in prod_B(1 - Bx) / prod_A(1 - Ax)."""
    if k < 0:
        return Poly()
    A = tuple(alphabet(names[0], a))
    B = tuple(alphabet(names[1], b))
    return poly_sum(h_poly(k - j, A) * e_poly(j, B) * (-1) ** j for j in range(0, min(k, b) + 1))


@lru_cache(maxsize=None)
def schur_difference(lam: Partition, a: int, b: int, names: tuple[str, str] = ("A", "B")) -> Poly:
    """s_lam(A - B) as det(h_{lam_i + j - i}(A - B)) over an a x a matrix."""
    if len(lam) > a:
        raise ValueError(f"{lam} has more than {a} rows")
    mat = [[h_difference(lam[i] + j - i, a, b, names) for j in range(a)] for i in range(a)]
    return _det(mat)


def skew_schur_e(outer: Partition, inner: Partition, e: Sequence[object], one=1, zero=0):
    """s_{(outer/inner)^T} written through elementary symmetric functions.

    ``e[k]`` supplies e_k (with ``e[0]`` = 1); indices outside the list are
    treated as zero.  This is the dual Jacobi-Trudi formula
    s_{lam'/mu'} = det(e_{lam_i - mu_j - i + j}).
    """
    if not outer.contains(inner):
        return zero
    n = len(outer)
    if n == 0:
        return one

    def ek(k):
        if k < 0 or k >= len(e):
            return zero
        return e[k]

    mat = [[ek(outer[i] - inner[j] - i + j) for j in range(n)] for i in range(n)]
    return _generic_det(mat, zero)


def _generic_det(mat, zero):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = zero
    for j in range(n):
        entry = mat[0][j]
        if _is_zero(entry):
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = entry * _generic_det(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def evaluate(x, values: Mapping[str, object] | Sequence[object]) -> Fraction:
    """Exact evaluation of a Poly (by variable name) or a SymElt.

    For a SymElt the values are the alphabet entries, given as a sequence
    whose length must equal the alphabet bound.
    """
    if isinstance(x, Poly):
        if not isinstance(values, Mapping):
            raise TypeError("Poly evaluation needs a {variable: value} mapping")
        return x.eval(values)
    if isinstance(x, SymElt):
        vals = list(values.values()) if isinstance(values, Mapping) else list(values)
        if x.a is not None and len(vals) != x.a:
            raise KeyError(f"need {x.a} alphabet values, got {len(vals)}")
        names = tuple(f"x{i}" for i in range(1, len(vals) + 1))
        env = dict(zip(names, (Fraction(v) for v in vals)))
        total = Fraction(0)
        for lam, c in x.coeffs.items():
            total += Fraction(c) * schur_poly(lam, names).eval(env)
        return total
    raise TypeError(f"cannot evaluate {type(x).__name__}")


# --- quantum integers ------------------------------------------------------

def qint(n: int) -> LaurentPoly:
    """Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}."""
    return LaurentPoly({(n - 1 - 2 * j, 0): 1 for j in range(n)})


@lru_cache(maxsize=None)
def _gauss(n: int, k: int) -> tuple:
    """Gaussian binomial in z = q^2 as a coefficient tuple (constant first)."""
    if k < 0 or k > n:
        return ()
    if k == 0 or k == n:
        return (1,)
    left = _gauss(n - 1, k - 1)
    right = _gauss(n - 1, k)
    size = max(len(left), len(right) + k)
    out = [0] * size
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + k] += c
    return tuple(out)


def qbinomial(N: int, a: int) -> LaurentPoly:
    """Balanced quantum binomial coefficient, lowest term q^{-a(N-a)}."""
    if a < 0 or a > N:
        raise ValueError(f"qbinomial needs 0 <= a <= N, got N={N}, a={a}")
    low = -a * (N - a)
    return LaurentPoly({(low + 2 * i, 0): c for i, c in enumerate(_gauss(N, a))})
