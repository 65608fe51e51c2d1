"""Equivariant cohomology of Grassmannians as a Frobenius algebra.

H*_{GL_N}(Gr_a) is presented as Sym(A|S) modulo h_{N-a+i}(A - S), i > 0,
with A of size a and S of size N.  It is free over Sym(S) with basis
s_alpha(A), alpha in the a x (N-a) box.  Coefficients are polynomials in
the elementary symmetric functions e_1(S), ..., e_N(S), named ``e1 ... eN``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from .poly import Poly
from .symcore import (
    EMPTY,
    Partition,
    SymElt,
    lr_product,
    partitions_in_box,
    schur_poly,
    skew_schur_e,
)

__all__ = [
    "GrassmannAlgebra",
    "GrassmannElt",
    "sylvester",
    "theta_eval",
    "e_to_schur",
    "solve_linear",
    "evaluate_at_subset",
    "idempotents",
]


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _add_into(acc: dict, key, value):
    if key in acc:
        acc[key] = acc[key] + value
    else:
        acc[key] = value


def _subpartitions(gamma: Partition) -> Iterable[Partition]:
    ranges = [range(p + 1) for p in gamma.parts]
    for parts in itertools.product(*ranges):
        if all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            yield Partition(parts)


class GrassmannElt:
    """Element of H*_{GL_N}(Gr_a) over the box-bounded Schur basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "GrassmannAlgebra", coeffs: Mapping[Partition, Poly]):
        self.algebra = algebra
        clean = {}
        for lam, c in coeffs.items():
            c = Poly.coerce(c)
            if c.is_zero():
                continue
            if not lam.fits(algebra.a, algebra.N - algebra.a):
                raise ValueError(f"{lam} is outside the {algebra.a}x{algebra.N - algebra.a} box")
            clean[lam] = c
        self.coeffs: dict[Partition, Poly] = clean

    def _check(self, other: "GrassmannElt"):
        if (self.algebra.N, self.algebra.a) != (other.algebra.N, other.algebra.a):
            raise ValueError("elements live in different Grassmannian algebras")

    def __add__(self, other: "GrassmannElt") -> "GrassmannElt":
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            _add_into(out, lam, c)
        return GrassmannElt(self.algebra, out)

    def __neg__(self) -> "GrassmannElt":
        return GrassmannElt(self.algebra, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "GrassmannElt") -> "GrassmannElt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GrassmannElt):
            return self.algebra.multiply(self, other)
        return GrassmannElt(self.algebra, {k: v * other for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrassmannElt):
            return NotImplemented
        return (self.algebra.N, self.algebra.a) == (other.algebra.N, other.algebra.a) and self.coeffs == other.coeffs

    def coefficient(self, lam: Partition) -> Poly:
        return self.coeffs.get(lam, Poly())

    def specialize(self, sigma: Sequence[object]) -> dict[Partition, Fraction]:
        env = self.algebra.e_values(sigma)
        return {lam: c.eval(env) for lam, c in self.coeffs.items()}

    def to_json(self) -> dict[str, str]:
        items = sorted(self.coeffs.items(), key=lambda kv: (kv[0].size, kv[0].parts))
        return {str(lam): str(c) for lam, c in items}

    def __repr__(self) -> str:
        return f"GrassmannElt(N={self.algebra.N}, a={self.algebra.a}, {self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: (kv[0].size, kv[0].parts))
        return " + ".join(f"({c})*s{lam}" for lam, c in items)


class GrassmannAlgebra:
    """H*_{GL_N}(Gr_a) with multiplication, trace and duality."""

    def __init__(self, N: int, a: int, prefix: str = "e"):
        if not 0 <= a <= N:
            raise ValueError(f"need 0 <= a <= N, got N={N}, a={a}")
        self.N = N
        self.a = a
        self.prefix = prefix
        self.basis: tuple[Partition, ...] = partitions_in_box(a, N - a)
        self.box = Partition.box(a, N - a)
        self.evars = tuple(f"{prefix}{i}" for i in range(1, N + 1))
        self._e = [Poly.const(1)] + [Poly.var(v) for v in self.evars]
        self._reduced: dict[Partition, dict[Partition, Poly]] = {}
        self._table: dict[tuple[Partition, Partition], dict[Partition, Poly]] = {}

    def __repr__(self) -> str:
        return f"GrassmannAlgebra(N={self.N}, a={self.a})"

    @property
    def rank(self) -> int:
        return len(self.basis)

    # --- elements ---
    def element(self, coeffs: Mapping[Partition, object]) -> GrassmannElt:
        return GrassmannElt(self, coeffs)

    def schur(self, lam: Partition | Sequence[int]) -> GrassmannElt:
        if not isinstance(lam, Partition):
            lam = Partition(tuple(lam))
        return GrassmannElt(self, self.reduce_schur(lam))

    def one(self) -> GrassmannElt:
        return GrassmannElt(self, {EMPTY: Poly.const(1)})

    def zero(self) -> GrassmannElt:
        return GrassmannElt(self, {})

    def skew_s(self, outer: Partition, inner: Partition) -> Poly:
        """s_{(outer/inner)^T}(S) as a polynomial in e_i(S)."""
        return skew_schur_e(outer, inner, self._e, Poly.const(1), Poly())

    # --- reduction ---
    def reduce_schur(self, gamma: Partition) -> dict[Partition, Poly]:
        """Normal form of s_gamma(A).

        Out-of-box gamma (gamma_1 > N - a) is rewritten with the vanishing
        s_gamma(A - S) = sum_{delta in gamma} s_delta(A) (-1)^{|gamma/delta|}
        s_{(gamma/delta)^T}(S) = 0, which expresses s_gamma(A) through strictly
        smaller partitions.
        """
        if gamma in self._reduced:
            return self._reduced[gamma]
        if len(gamma) > self.a:
            result: dict[Partition, Poly] = {}
        elif gamma.fits(self.a, self.N - self.a):
            result = {gamma: Poly.const(1)}
        else:
            acc: dict[Partition, Poly] = {}
            for delta in _subpartitions(gamma):
                if delta == gamma:
                    continue
                c = self.skew_s(gamma, delta)
                if c.is_zero():
                    continue
                c = c * (-_sign(gamma.size - delta.size))
                for lam, v in self.reduce_schur(delta).items():
                    _add_into(acc, lam, c * v)
            result = {k: v for k, v in acc.items() if not v.is_zero()}
        self._reduced[gamma] = result
        return result

    def reduce(self, x: SymElt) -> GrassmannElt:
        """Reduce a Schur-basis element with Sym(S) coefficients."""
        if x.a is not None and x.a != self.a:
            raise ValueError(f"alphabet bound {x.a} does not match a={self.a}")
        acc: dict[Partition, Poly] = {}
        for gamma, c in x.coeffs.items():
            c = Poly.coerce(c)
            for lam, v in self.reduce_schur(gamma).items():
                _add_into(acc, lam, c * v)
        return GrassmannElt(self, acc)

    # --- multiplication ---
    def structure(self, alpha: Partition, beta: Partition) -> dict[Partition, Poly]:
        """Structure constants: s_alpha * s_beta = sum_gamma c_gamma s_gamma."""
        key = (alpha, beta) if (alpha.size, alpha.parts) <= (beta.size, beta.parts) else (beta, alpha)
        if key not in self._table:
            acc: dict[Partition, Poly] = {}
            for gamma, m in lr_product(alpha, beta, self.a).items():
                for lam, v in self.reduce_schur(gamma).items():
                    _add_into(acc, lam, v * m)
            self._table[key] = {k: v for k, v in acc.items() if not v.is_zero()}
        return self._table[key]

    def multiply(self, x: GrassmannElt, y: GrassmannElt) -> GrassmannElt:
        x._check(y)
        if x.algebra is not self and (x.algebra.N, x.algebra.a) != (self.N, self.a):
            raise ValueError("element from a different algebra")
        acc: dict[Partition, Poly] = {}
        for alpha, c1 in x.coeffs.items():
            for beta, c2 in y.coeffs.items():
                c12 = c1 * c2
                for gamma, v in self.structure(alpha, beta).items():
                    _add_into(acc, gamma, c12 * v)
        return GrassmannElt(self, acc)

    # --- Frobenius structure ---
    def trace(self, x: GrassmannElt) -> Poly:
        """Signed projection onto s_box(A)."""
        return x.coefficient(self.box) * _sign(comb(self.a, 2))

    def mixed(self, beta: Partition) -> GrassmannElt:
        """s_beta(A - S) expanded in the s_delta(A) basis."""
        if not beta.fits(self.a, self.N - self.a):
            raise ValueError(f"{beta} is outside the box")
        acc: dict[Partition, Poly] = {}
        for delta in _subpartitions(beta):
            c = self.skew_s(beta, delta)
            if c.is_zero():
                continue
            _add_into(acc, delta, c * _sign(beta.size - delta.size))
        return GrassmannElt(self, acc)

    def dual(self, alpha: Partition) -> GrassmannElt:
        """Dual basis element (-1)^{C(a,2)} s_{complement alpha}(A - S)."""
        comp = alpha.complement(self.a, self.N - self.a)
        return self.mixed(comp) * _sign(comb(self.a, 2))

    def gram(self) -> list[list[Poly]]:
        """Gram matrix tr(s_alpha(A) s_beta(A - S)) over the box basis."""
        rows = []
        for alpha in self.basis:
            sa = self.schur(alpha)
            rows.append([self.trace(self.multiply(sa, self.mixed(beta))) for beta in self.basis])
        return rows

    # --- specialisation ---
    def e_values(self, sigma: Sequence[object]) -> dict[str, Fraction]:
        if len(sigma) != self.N:
            raise ValueError(f"need {self.N} values, got {len(sigma)}")
        vals = [Fraction(v) for v in sigma]
        e = [Fraction(1)] + [Fraction(0)] * self.N
        for v in vals:
            for k in range(self.N, 0, -1):
                e[k] += e[k - 1] * v
        return {self.evars[k - 1]: e[k] for k in range(1, self.N + 1)}

    def numeric_structure(self, sigma: Sequence[object]) -> dict[tuple[Partition, Partition], dict[Partition, Fraction]]:
        env = self.e_values(sigma)
        out = {}
        for alpha in self.basis:
            for beta in self.basis:
                out[(alpha, beta)] = {g: v.eval(env) for g, v in self.structure(alpha, beta).items()}
        return out


# --- Sylvester operator and theta foams -------------------------------------

def _elementary_symelts(size: int) -> list[SymElt]:
    return [SymElt.one(size)] + [SymElt.schur((1,) * k, size) for k in range(1, size + 1)]


def sylvester(p: SymElt, q: SymElt, a: int, b: int, prefix: str = "E") -> Poly:
    """zeta: Sym(A|B) -> Sym(A u B), projection onto s_{box(a,b)}(A).

    ``p`` is a Schur expansion in A (size a), ``q`` in B (size b).  The result
    is a polynomial in the elementary symmetric functions of A u B, named
    ``E1 ... E{a+b}``.  B is rewritten as the difference (A u B) - A, after
    which the A-part is reduced in H*(Gr(a, a+b)) over Sym(A u B).
    """
    if p.a is not None and p.a != a:
        raise ValueError(f"p is bounded by {p.a} rows, expected {a}")
    if q.a is not None and q.a != b:
        raise ValueError(f"q is bounded by {q.a} rows, expected {b}")
    alg = _algebra(a + b, a, prefix)
    E = alg._e
    eA = _elementary_symelts(a)
    zeroA = SymElt({}, a)
    total = Poly()
    for mu, cq in q.coeffs.items():
        for delta in _subpartitions(mu):
            s_union = skew_schur_e(delta.transpose(), EMPTY, E, Poly.const(1), Poly())
            if s_union.is_zero():
                continue
            skewA = skew_schur_e(mu, delta, eA, SymElt.one(a), zeroA)
            if isinstance(skewA, int) or skewA.is_zero():
                continue
            sgn = _sign(mu.size - delta.size)
            prod = p * skewA
            red = alg.reduce(prod)
            c = red.coefficient(alg.box)
            if c.is_zero():
                continue
            total = total + c * s_union * (Poly.coerce(cq) * sgn)
    return total


@lru_cache(maxsize=None)
def _algebra(N: int, a: int, prefix: str = "e") -> GrassmannAlgebra:
    return GrassmannAlgebra(N, a, prefix)


def e_to_schur(poly: Poly, size: int, prefix: str = "E") -> SymElt:
    """Rewrite a polynomial in e_1..e_size of an alphabet in its Schur basis."""
    eA = _elementary_symelts(size)
    env = {f"{prefix}{k}": eA[k] for k in range(1, size + 1)}
    for v in poly.variables():
        if v not in env:
            raise KeyError(f"unexpected variable {v}")
    return poly.map_into(env, lambda c: SymElt.one(size).scale(c) if c else SymElt({}, size))


def theta_eval(p: SymElt, q: SymElt, r: SymElt, a: int, b: int, N: int) -> Poly:
    """Theta foam with decorations p, q, r on facets a, b, a+b.

    Evaluates tr_{a+b}(r * zeta(p q)) with A u B identified with the
    alphabet of the (a+b)-facet.  Result is a polynomial in e_i(S).
    """
    if a + b > N:
        raise ValueError(f"a+b={a + b} exceeds N={N}")
    z = e_to_schur(sylvester(p, q, a, b), a + b)
    alg = _algebra(N, a + b)
    if r.a is not None and r.a != a + b:
        raise ValueError(f"r must be bounded by {a + b} rows")
    return alg.trace(alg.reduce(SymElt(r.coeffs, a + b) * z))


# --- idempotents -----------------------------------------------------------

def solve_linear(matrix: list[list[object]], rhs: list[list[object]]) -> list[list[object]]:
    """Gauss-Jordan elimination over an exact field.

    Solves ``matrix @ X = rhs`` for X (one column per rhs column).  Entries
    may be Fractions or elements of any field supporting + - * / and ``== 0``.
    """
    n = len(matrix)
    m = len(rhs[0]) if rhs else 0
    aug = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [vr - f * vc for vr, vc in zip(aug[r], aug[col])]
    return [row[n:n + m] for row in aug]


def evaluate_at_subset(lam: Partition, subset: Sequence[object], convert: Callable = Fraction):
    """s_lam evaluated at the entries of ``subset`` (exact)."""
    names = tuple(f"x{i}" for i in range(1, len(subset) + 1))
    return schur_poly(lam, names).map_into(dict(zip(names, subset)), convert)


def idempotents(sigma: Sequence[object], a: int, convert: Callable = Fraction):
    """Idempotents e_A of H*_{GL_N}(Gr_a) specialised at S = sigma.

    Returns a list of (index tuple of the a-subset, {partition: coefficient})
    pairs.  The coefficients solve sum_alpha x_alpha s_alpha(B) = delta_{A,B}
    over all a-subsets B of sigma.  Works for Fractions and, with a suitable
    ``convert``, for symbolic field elements.
    """
    N = len(sigma)
    vals = [convert(v) for v in sigma]
    if convert is Fraction and len(set(vals)) != N:
        raise ValueError("sigma entries must be pairwise distinct")
    basis = partitions_in_box(a, N - a)
    subsets = list(itertools.combinations(range(N), a))
    M = [[evaluate_at_subset(lam, [vals[i] for i in B], convert) for lam in basis] for B in subsets]
    one, zero = convert(1), convert(0)
    rhs = [[one if i == j else zero for j in range(len(subsets))] for i in range(len(subsets))]
    X = solve_linear(M, rhs)
    out = []
    for j, A in enumerate(subsets):
        out.append((A, {lam: X[i][j] for i, lam in enumerate(basis) if X[i][j] != 0}))
    return out
