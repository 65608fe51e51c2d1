"""Generic deformations: idempotent colorings and deformed homology.

Once the equivariant parameters are specialised to N distinct numbers, the
complex of a diagram splits into summands indexed by colorings, an
assignment of a subset of the N roots to every component.  Each summand
has trivial differential and is a single web placed in homological
degree sum_c sign_c * min(|A_c - B_c|, |B_c - A_c|), where A_c, B_c are
the subsets on the over- and understrand of crossing c.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Sequence

from .linkcx import ColoredDiagram, _shift, state_web
from .poly import LaurentPoly
from .webmoy import Web

__all__ = [
    "SigmaSpec",
    "ColoringState",
    "crossing_shift",
    "colorings",
    "deformed_homology",
    "state_summand",
    "favourite_coloring",
    "simple_resolution",
    "lee_degrees",
]


@dataclass(frozen=True)
class SigmaSpec:
    """Ordered deformation parameters lambda_1..lambda_N."""

    values: tuple

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("Sigma must be non-empty")
        if all(isinstance(v, (int, Fraction)) for v in vals) and len(set(vals)) != len(vals):
            raise ValueError("Sigma entries must be pairwise distinct, got " + ",".join(str(v) for v in vals))

    @property
    def N(self) -> int:
        return len(self.values)

    @classmethod
    def default(cls, N: int) -> "SigmaSpec":
        return cls(tuple(Fraction(i) for i in range(1, N + 1)))

    @classmethod
    def parse(cls, text: str, N: int | None = None) -> "SigmaSpec":
        """Comma-separated rationals, e.g. ``"1,-1"`` or ``"1/2,3"``."""
        try:
            vals = tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
        except ValueError as exc:
            raise ValueError(f"cannot parse Sigma {text!r}: {exc}") from None
        if N is not None and len(vals) != N:
            raise ValueError(f"Sigma has {len(vals)} entries but N={N}")
        return cls(vals)

    def subset(self, indices) -> tuple:
        return tuple(self.values[i - 1] for i in sorted(indices))


@dataclass(frozen=True)
class ColoringState:
    """Component -> subset of {1..N} (indices into Sigma)."""

    assignment: tuple  # sorted (component, frozenset) pairs

    @classmethod
    def of(cls, mapping: Mapping) -> "ColoringState":
        return cls(tuple(sorted(((k, frozenset(v)) for k, v in mapping.items()), key=lambda kv: str(kv[0]))))

    def as_dict(self) -> dict:
        return dict(self.assignment)


def crossing_shift(sign: int, A, B) -> int:
    """Homological degree of the surviving summand at one crossing."""
    A, B = frozenset(A), frozenset(B)
    return sign * min(len(A - B), len(B - A))


def colorings(D: ColoredDiagram, N: int) -> Iterator[ColoringState]:
    comps = list(D.components)
    for cid in comps:
        if D.components[cid] > N:
            raise ValueError(f"component {cid} has color {D.components[cid]} > N={N}")
    choices = [list(itertools.combinations(range(1, N + 1), D.components[c])) for c in comps]
    for combo in itertools.product(*choices):
        yield ColoringState.of({c: frozenset(s) for c, s in zip(comps, combo)})


def _crossing_subsets(D: ColoredDiagram, n: int, coloring: Mapping) -> tuple[frozenset, frozenset]:
    c = D.crossings[n]
    return frozenset(coloring[D.arcs[c.over[0]]]), frozenset(coloring[D.arcs[c.under[0]]])


def state_summand(D: ColoredDiagram, coloring: ColoringState, N: int) -> dict:
    """Cube state, homological degree and filtration level of one summand.

    The filtration level is the q-shift of the surviving resolution; it is
    not an invariant grading of the deformed theory.
    """
    cmap = coloring.as_dict()
    state = []
    t = 0
    level = 0
    for n, c in enumerate(D.crossings):
        A, B = _crossing_subsets(D, n, cmap)
        s = crossing_shift(c.sign, A, B)
        k = abs(s)
        a, b = D.labels(n)
        dq, _ = _shift(c.sign, a, b, k, N)
        state.append(k)
        t += s
        level += dq
    return {"state": tuple(state), "t": t, "filtration": level}


def deformed_homology(D: ColoredDiagram, sigma: SigmaSpec | int) -> LaurentPoly:
    """Poincare polynomial in t of the deformed homology.

    Only the number N of distinct parameters matters, not their values.
    """
    if not D.is_closed():
        raise ValueError("deformed homology needs a closed diagram")
    N = sigma if isinstance(sigma, int) else sigma.N
    acc: dict[tuple[int, int], int] = {}
    for col in colorings(D, N):
        cmap = col.as_dict()
        t = sum(crossing_shift(c.sign, *_crossing_subsets(D, n, cmap)) for n, c in enumerate(D.crossings))
        acc[(0, t)] = acc.get((0, t), 0) + 1
    return LaurentPoly(acc)


def total_rank(D: ColoredDiagram, N: int) -> int:
    out = 1
    for col in D.components.values():
        out *= comb(N, col)
    return out


def favourite_coloring(D: ColoredDiagram) -> dict:
    """Every a-labelled component gets {1..a}."""
    return {cid: frozenset(range(1, a + 1)) for cid, a in D.components.items()}


def simple_resolution(T: ColoredDiagram) -> Web:
    """The web surviving under the favourite coloring, edges annotated by subsets."""
    cmap = favourite_coloring(T)
    state = []
    for n, c in enumerate(T.crossings):
        A, B = _crossing_subsets(T, n, cmap)
        state.append(abs(crossing_shift(c.sign, A, B)))
    return state_web(T, state, coloring=cmap)


def lee_degrees(D: ColoredDiagram, N: int = 2) -> LaurentPoly:
    """Independent count for uncolored diagrams.

    A coloring only matters through which components share a subset; the
    degree is twice the summed linking numbers over pairs of components
    with different subsets (every crossing between two such components
    contributes its sign).
    """
    if any(col != 1 for col in D.components.values()):
        raise ValueError("the linking-number formula is for uncolored diagrams")
    comps = list(D.components)
    lk = {}
    for i, c1 in enumerate(comps):
        for c2 in comps[i + 1:]:
            lk[(c1, c2)] = D.linking_number(c1, c2)
    acc: dict[tuple[int, int], int] = {}
    for choice in itertools.product(range(N), repeat=len(comps)):
        deg = 0
        for i, c1 in enumerate(comps):
            for j in range(i + 1, len(comps)):
                if choice[i] != choice[j]:
                    deg += 2 * lk[(c1, comps[j])]
        acc[(0, deg)] = acc.get((0, deg), 0) + 1
    return LaurentPoly(acc)
