"""Colored link diagrams, crossing complexes and graded Euler characteristics.

Diagrams use an extended PD code.  Every crossing names its over arc and
under arc as ``[incoming, outgoing]`` pairs plus a sign.  Drawn with both
strands pointing up, the four ports of a crossing in counterclockwise
order starting at the bottom left are

    positive: over-in, under-in, over-out, under-out
    negative: under-in, over-in, under-out, over-out

Each crossing is resolved into ladder webs: the bottom labels (l, r) become
(r, l) at the top via a first rung leaving the larger side and a second rung
of label k returning, for k = 0..min(l, r).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .poly import LaurentPoly
from .symcore import qbinomial
from .webmoy import Web, WebBuilder, moy_eval

__all__ = [
    "Crossing",
    "ColoredDiagram",
    "GradedObject",
    "CubeEdge",
    "DegreeTable",
    "crossing_complex",
    "cube",
    "cube_edges",
    "euler_char",
    "koszul_sign",
    "reorder_sign",
    "ladder_rungs",
    "ladder_web",
    "state_web",
]

PORTS = ("SW", "SE", "NE", "NW")


@dataclass(frozen=True)
class Crossing:
    sign: int
    over: tuple
    under: tuple

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")
        if len(self.over) != 2 or len(self.under) != 2:
            raise ValueError("over and under need [incoming, outgoing] arcs")

    def ports(self) -> dict[str, object]:
        """Arc at each port, counterclockwise from the bottom left."""
        o, u = self.over, self.under
        if self.sign > 0:
            return {"SW": o[0], "SE": u[0], "NE": o[1], "NW": u[1]}
        return {"SW": u[0], "SE": o[0], "NE": u[1], "NW": o[1]}

    def mirror(self) -> "Crossing":
        return Crossing(-self.sign, self.under, self.over)


@dataclass
class ColoredDiagram:
    """Oriented, colored link or tangle diagram.

    ``components`` maps component id to its label; ``arcs`` maps arc id to
    its component.  For tangles, ``boundary`` lists the open arc ends
    counterclockwise around the disk as ``(arc, "in" | "out")``, where
    "in" is an arc entering the disk.
    """

    components: dict
    arcs: dict
    crossings: list[Crossing]
    boundary: list[tuple] = field(default_factory=list)

    def __post_init__(self):
        self.crossings = [c if isinstance(c, Crossing) else Crossing(**c) for c in self.crossings]
        self.boundary = [tuple(b) for b in self.boundary]
        self._validate()

    # --- construction ---
    @classmethod
    def from_json(cls, data: Mapping) -> "ColoredDiagram":
        components = {c["id"]: int(c["color"]) for c in data["components"]}
        arcs = {a["id"]: a["component"] for a in data["arcs"]}
        crossings = [Crossing(int(c["sign"]), tuple(c["over"]), tuple(c["under"]))
                     for c in data.get("crossings", [])]
        return cls(components, arcs, crossings, [tuple(b) for b in data.get("boundary", [])])

    @classmethod
    def load(cls, path) -> "ColoredDiagram":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        out = {
            "components": [{"id": k, "color": v} for k, v in self.components.items()],
            "arcs": [{"id": k, "component": v} for k, v in self.arcs.items()],
            "crossings": [{"sign": c.sign, "over": list(c.over), "under": list(c.under)}
                          for c in self.crossings],
        }
        if self.boundary:
            out["boundary"] = [list(b) for b in self.boundary]
        return out

    @classmethod
    def from_braid(cls, n: int, word: Sequence[int], colors: Sequence[int] | int = 1) -> "ColoredDiagram":
        """Closure of a braid word (generator i > 0 is sigma_i, -i its inverse).

        Strands go upward; sigma_i passes the left strand over the right one.
        ``colors`` lists a label per component, components numbered by their
        lowest starting position.
        """
        cur = list(range(n))
        nxt = n
        strand_at = list(range(n))
        start_of: dict[int, int] = {i: i for i in range(n)}
        raw = []
        for g in word:
            i = abs(g) - 1
            if not 0 <= i < n - 1:
                raise ValueError(f"generator {g} out of range for {n} strands")
            al, ar = cur[i], cur[i + 1]
            ol, orr = nxt, nxt + 1
            nxt += 2
            start_of[ol] = strand_at[i + 1]
            start_of[orr] = strand_at[i]
            if g > 0:
                raw.append((1, [al, orr], [ar, ol]))
            else:
                raw.append((-1, [ar, ol], [al, orr]))
            cur[i], cur[i + 1] = ol, orr
            strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
        # closing arcs: the top arc at position i continues as the bottom arc i
        rename = {i: cur[i] for i in range(n) if cur[i] != i}
        top = {strand_at[j]: j for j in range(n)}
        comp: dict[int, int] = {}
        ncomp = 0
        for p in range(n):
            if p in comp:
                continue
            x = p
            while x not in comp:
                comp[x] = ncomp
                x = top[x]
            ncomp += 1
        if isinstance(colors, int):
            colors = [colors] * ncomp
        if len(colors) != ncomp:
            raise ValueError(f"braid closure has {ncomp} components, got {len(colors)} colors")
        arcs = {}
        for arc, p in start_of.items():
            arcs[rename.get(arc, arc)] = comp[p]
        crossings = [Crossing(s, tuple(rename.get(x, x) for x in o), tuple(rename.get(x, x) for x in u))
                     for s, o, u in raw]
        return cls({k: int(c) for k, c in enumerate(colors)}, arcs, crossings)

    # --- validation ---
    def _validate(self):
        for a, comp in self.arcs.items():
            if comp not in self.components:
                raise ValueError(f"arc {a} refers to missing component {comp}")
        for cid, col in self.components.items():
            if col <= 0:
                raise ValueError(f"component {cid} needs a positive color")
        ins: dict = {}
        outs: dict = {}
        for n, c in enumerate(self.crossings):
            for pair in (c.over, c.under):
                for arc in pair:
                    if arc not in self.arcs:
                        raise ValueError(f"crossing {n} uses unknown arc {arc}")
                if pair[0] in ins or pair[1] in outs:
                    raise ValueError(f"arc used twice at crossing {n}")
                ins[pair[0]] = n
                outs[pair[1]] = n
                if self.arcs[pair[0]] != self.arcs[pair[1]]:
                    raise ValueError(f"crossing {n} switches component along a strand")
        bin_ = {a for a, d in self.boundary if d == "in"}
        bout = {a for a, d in self.boundary if d == "out"}
        for a in self.arcs:
            touched = a in ins or a in outs
            if not touched:
                if (a in bin_) != (a in bout):
                    raise ValueError(f"arc {a} has only one boundary end")
                continue
            if a not in outs and a not in bin_:
                raise ValueError(f"arc {a} never starts")
            if a not in ins and a not in bout:
                raise ValueError(f"arc {a} never ends")
            if a in outs and a in bin_ or a in ins and a in bout:
                raise ValueError(f"arc {a} has conflicting ends")

    # --- queries ---
    def color(self, arc) -> int:
        return self.components[self.arcs[arc]]

    def labels(self, n: int) -> tuple[int, int]:
        """(over label, under label) at crossing n."""
        c = self.crossings[n]
        return self.color(c.over[0]), self.color(c.under[0])

    def is_closed(self) -> bool:
        return not self.boundary

    def free_circles(self) -> list[int]:
        """Labels of crossingless closed components."""
        used = {a for c in self.crossings for a in (*c.over, *c.under)}
        bnd = {a for a, _ in self.boundary}
        return [self.color(a) for a in self.arcs if a not in used and a not in bnd]

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def linking_number(self, c1, c2) -> int:
        """Half the signed count of crossings between two components."""
        total = 0
        for c in self.crossings:
            pair = {self.arcs[c.over[0]], self.arcs[c.under[0]]}
            if pair == {c1, c2} and c1 != c2:
                total += c.sign
        if total % 2:
            raise ValueError("odd crossing count between components of a closed diagram")
        return total // 2

    def cube_size(self) -> int:
        size = 1
        for n in range(len(self.crossings)):
            a, b = self.labels(n)
            size *= min(a, b) + 1
        return size

    def is_planar(self) -> bool:
        """Euler-characteristic check of the underlying 4-valent map.

        Only closed diagrams are checked; every connected component must
        embed in a sphere.
        """
        if not self.is_closed():
            raise ValueError("planarity is checked on closed diagrams")
        if not self.crossings:
            return True
        pos = {}
        start = {}
        for n, c in enumerate(self.crossings):
            for i, name in enumerate(PORTS):
                arc = c.ports()[name]
                # the dart at port i of crossing n
                pos[(n, i)] = arc
                if name in ("SW", "SE"):
                    start.setdefault(arc, {})["head"] = (n, i)
                else:
                    start.setdefault(arc, {})["tail"] = (n, i)
        other = {}
        for arc, ends in start.items():
            other[ends["head"]] = ends["tail"]
            other[ends["tail"]] = ends["head"]
        seen = set()
        faces = 0
        for d in pos:
            if d in seen:
                continue
            faces += 1
            cur = d
            while cur not in seen:
                seen.add(cur)
                n, i = other[cur]
                cur = (n, (i - 1) % 4)
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (n, _), (m, _) in other.items():
            parent[find(n)] = find(m)
        ncomp = len({find(n) for n in range(len(self.crossings))})
        V = len(self.crossings)
        E = 2 * V
        return V - E + faces == 2 * ncomp

    # --- transformations ---
    def mirror(self) -> "ColoredDiagram":
        """Switch every crossing."""
        return ColoredDiagram(dict(self.components), dict(self.arcs),
                              [c.mirror() for c in self.crossings], list(self.boundary))

    def reverse_component(self, cid) -> "ColoredDiagram":
        """Reverse the orientation of one component (same planar picture)."""
        new = []
        for c in self.crossings:
            o, u, s = c.over, c.under, c.sign
            ro = self.arcs[o[0]] == cid
            ru = self.arcs[u[0]] == cid
            if ro:
                o = (o[1], o[0])
            if ru:
                u = (u[1], u[0])
            if ro != ru:
                s = -s
            new.append(Crossing(s, o, u))
        flip = {"in": "out", "out": "in"}
        bnd = [(a, flip[d]) if self.arcs[a] == cid else (a, d) for a, d in self.boundary]
        return ColoredDiagram(dict(self.components), dict(self.arcs), new, bnd)

    def recolor(self, colors: Mapping) -> "ColoredDiagram":
        comps = dict(self.components)
        comps.update({k: int(v) for k, v in colors.items()})
        return ColoredDiagram(comps, dict(self.arcs), list(self.crossings), list(self.boundary))

    def reorder(self, perm: Sequence[int]) -> "ColoredDiagram":
        """New diagram whose crossing i is the old crossing perm[i]."""
        if sorted(perm) != list(range(len(self.crossings))):
            raise ValueError("not a permutation of the crossings")
        return ColoredDiagram(dict(self.components), dict(self.arcs),
                              [self.crossings[p] for p in perm], list(self.boundary))


# --- ladders -----------------------------------------------------------------

def ladder_rungs(l: int, r: int, k: int, sign: int = 1, tie_first: str | None = None) -> list[tuple[str, int]]:
    """Rungs (starting side, label) of the k-th resolution, bottom to top.

    The first rung leaves the side with the larger bottom label.  With
    equal labels positive crossings start on the left and negative ones
    on the right unless ``tie_first`` says otherwise.
    """
    if not 0 <= k <= min(l, r):
        raise ValueError(f"rung index {k} out of range")
    if l == r:
        first = tie_first or ("L" if sign > 0 else "R")
    else:
        first = "L" if l > r else "R"
    second = "R" if first == "L" else "L"
    return [(first, abs(l - r) + k), (second, k)]


def _build_ladder(wb: WebBuilder, bl: int, br: int, rungs, colors=None) -> dict[str, tuple[int, int]]:
    """Insert a ladder; returns the segment end at each port.

    With ``colors = (X, Y)`` (subsets on the bottom left and right) every
    segment is annotated with its subset.  The flow is then forced: the
    first rung carries the part of its starting side missing from the
    other side, the second rung the reverse difference.
    """
    if colors is not None:
        X, Y = frozenset(colors[0]), frozenset(colors[1])
        cur = {"L": X, "R": Y}
        rung_sets = {}
        if rungs:
            first = rungs[0][0]
            other = "R" if first == "L" else "L"
            rung_sets = {0: cur[first] - cur[other], 1: cur[other] - cur[first]}
    else:
        cur = {"L": None, "R": None}
    s = wb.segment(bl, cur["L"])
    t = wb.segment(br, cur["R"])
    ports = {"SW": (s, 0), "SE": (t, 0)}
    side = {"L": [(s, 1), bl], "R": [(t, 1), br]}
    for idx, (start, m) in enumerate(rungs):
        if m == 0:
            continue
        src = side[start]
        end = "R" if start == "L" else "L"
        dst = side[end]
        rc = None
        if colors is not None:
            rc = rung_sets[idx]
            if len(rc) != m:
                raise ValueError("subsets do not fit this ladder")
            cur[start] = cur[start] - rc
            cur[end] = cur[end] | rc
        r = wb.segment(m, rc)
        if m == src[1]:
            wb.join(src[0], (r, 0))
            src[0], src[1] = None, 0
        else:
            n = wb.segment(src[1] - m, cur[start])
            if start == "L":
                wb.vertex([src[0], (r, 0), (n, 0)])  # south, east rung, north
            else:
                wb.vertex([src[0], (n, 0), (r, 0)])  # south, north, west rung
            src[0], src[1] = (n, 1), src[1] - m
        if dst[1] == 0:
            dst[0], dst[1] = (r, 1), m
        else:
            n = wb.segment(dst[1] + m, cur[end])
            if start == "L":
                wb.vertex([(n, 0), (r, 1), dst[0]])  # north, west rung, south
            else:
                wb.vertex([(n, 0), dst[0], (r, 1)])  # north, south, east rung
            dst[0], dst[1] = (n, 1), dst[1] + m
    ports["NW"] = side["L"][0]
    ports["NE"] = side["R"][0]
    return ports


def ladder_web(l: int, r: int, rungs) -> Web:
    """Open ladder web; boundary counterclockwise SW, SE, NE, NW."""
    wb = WebBuilder()
    ports = _build_ladder(wb, l, r, rungs)
    for p in PORTS:
        wb.boundary(ports[p])
    return wb.build()


# --- complexes -----------------------------------------------------------------

@dataclass(frozen=True)
class GradedObject:
    """A web placed at q-shift ``q`` and homological degree ``t``."""

    web: Web
    q: int
    t: int


def _shift(sign: int, a: int, b: int, k: int, N: int) -> tuple[int, int]:
    m = min(a, b)
    x = m * (N - m)
    if sign > 0:
        return k - x, k
    return x - k, -k


def crossing_complex(sign: int, a: int, b: int, N: int, tie_first: str | None = None) -> list[GradedObject]:
    """Objects of the complex of one crossing (over label a, under label b).

    The k-th object is the k-rung ladder at q-shift k - x and homological
    degree k for positive crossings, x = min(a,b)(N - min(a,b)); negative
    crossings invert both degrees.
    """
    if a < 1 or b < 1:
        raise ValueError("labels must be positive")
    l, r = (a, b) if sign > 0 else (b, a)
    out = []
    for k in range(min(a, b) + 1):
        q, t = _shift(sign, a, b, k, N)
        out.append(GradedObject(ladder_web(l, r, ladder_rungs(l, r, k, sign, tie_first)), q, t))
    return out


@dataclass(frozen=True)
class CubeEdge:
    """A differential slot of the cube (foams are not evaluated)."""

    source: tuple[int, ...]
    target: tuple[int, ...]
    crossing: int
    sign: int
    generator: str


def koszul_sign(state_degrees: Sequence[int], i: int) -> int:
    """Sign of the i-th factor's differential in a tensor product."""
    return -1 if sum(state_degrees[:i]) % 2 else 1


def reorder_sign(state_degrees: Sequence[int], perm: Sequence[int]) -> int:
    """Sign of permuting tensor factors: -1 per swapped pair of odd degrees."""
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j] and state_degrees[perm[i]] % 2 and state_degrees[perm[j]] % 2:
                s = -s
    return s


def _states(D: ColoredDiagram) -> Iterator[tuple[int, ...]]:
    ranges = [range(min(D.labels(n)) + 1) for n in range(len(D.crossings))]
    return itertools.product(*ranges)


def state_web(D: ColoredDiagram, state: Sequence[int], tie_first: str | None = None,
              coloring: Mapping | None = None) -> Web:
    """The resolution web of one cube state.

    ``coloring`` (component -> subset) annotates the edges with the
    forced subset flow.
    """
    wb = WebBuilder()
    in_end: dict = {}
    out_end: dict = {}

    def sub(arc):
        return None if coloring is None else frozenset(coloring[D.arcs[arc]])

    for c, k in zip(D.crossings, state):
        p = c.ports()
        l, r = D.color(p["SW"]), D.color(p["SE"])
        cols = None if coloring is None else (sub(p["SW"]), sub(p["SE"]))
        ends = _build_ladder(wb, l, r, ladder_rungs(l, r, k, c.sign, tie_first), cols)
        in_end[p["SW"]] = ends["SW"]
        in_end[p["SE"]] = ends["SE"]
        out_end[p["NE"]] = ends["NE"]
        out_end[p["NW"]] = ends["NW"]
    for arc in D.arcs:
        if arc in out_end and arc in in_end:
            wb.join(out_end[arc], in_end[arc])
    bnd_arcs = {a for a, _ in D.boundary}
    for arc in D.arcs:
        if arc not in out_end and arc not in in_end and arc not in bnd_arcs:
            s = wb.segment(D.color(arc), sub(arc))
            wb.join((s, 1), (s, 0))
    through: dict = {}
    for arc, direction in D.boundary:
        if direction == "in":
            end = in_end.get(arc)
        else:
            end = out_end.get(arc)
        if end is None:
            # a strand crossing the disk without crossings
            if arc not in through:
                through[arc] = wb.segment(D.color(arc), sub(arc))
            end = (through[arc], 0 if direction == "in" else 1)
        wb.boundary(end)
    return wb.build()


def cube(D: ColoredDiagram, N: int, tie_first: str | None = None) -> dict[tuple[int, ...], GradedObject]:
    """State vector -> resolution web with total shifts."""
    out = {}
    for state in _states(D):
        q = t = 0
        for n, k in enumerate(state):
            a, b = D.labels(n)
            dq, dt = _shift(D.crossings[n].sign, a, b, k, N)
            q += dq
            t += dt
        out[state] = GradedObject(state_web(D, state, tie_first), q, t)
    return out


def cube_edges(D: ColoredDiagram) -> list[CubeEdge]:
    """Differential slots with Koszul signs.

    Positive crossings raise the rung index, negative crossings lower it,
    so every edge raises homological degree by one.
    """
    edges = []
    for state in _states(D):
        degs = []
        for n, k in enumerate(state):
            degs.append(k if D.crossings[n].sign > 0 else -k)
        for n, k in enumerate(state):
            c = D.crossings[n]
            top = min(D.labels(n))
            if c.sign > 0 and k < top:
                tgt = state[:n] + (k + 1,) + state[n + 1:]
                gen = f"d+_{k}"
            elif c.sign < 0 and k > 0:
                tgt = state[:n] + (k - 1,) + state[n + 1:]
                gen = f"d-_{k - 1}"
            else:
                continue
            edges.append(CubeEdge(tuple(state), tgt, n, koszul_sign(degs, n), gen))
    return edges


def euler_char(D: ColoredDiagram, N: int, tie_first: str | None = None) -> LaurentPoly:
    """Graded Euler characteristic of the cube.

    A state at q-shift s and homological degree t contributes
    (-1)^t q^(s - 2t) times the MOY evaluation of its web.  The extra
    q^(-2t) converts the shifts above to the balanced MOY grading; without
    it the first Reidemeister move fails.
    """
    if not D.is_closed():
        raise ValueError("euler_char needs a closed diagram")
    for cid, col in D.components.items():
        if col > N:
            raise ValueError(f"component {cid} has color {col} > N={N}")
    total = LaurentPoly()
    for state, obj in cube(D, N, tie_first).items():
        web = obj.web
        if any(lab > N for lab in web.labels) or any(c > N for c in web.circles):
            continue
        val = moy_eval(web, N).shift(obj.q - 2 * obj.t, 0)
        total = total + (-val if obj.t % 2 else val)
    return total


# --- degree bookkeeping ---------------------------------------------------------

class DegreeTable:
    """Bidegrees (k, l) of the generating foams; degree collapses to k + N*l."""

    @staticmethod
    def cup(a: int) -> tuple[int, int]:
        return a * a, -a

    cap = cup

    @staticmethod
    def saddle(a: int) -> tuple[int, int]:
        return -a * a, a

    @staticmethod
    def digon(a: int, b: int, flipped: bool = False) -> tuple[int, int]:
        return (b * (a + b), -b) if flipped else (-a * b, 0)

    @staticmethod
    def zip(a: int, b: int, flipped: bool = False) -> tuple[int, int]:
        return (-b * (a + b), b) if flipped else (a * b, 0)

    unzip = zip

    @staticmethod
    def square_vertex(a: int, b: int, second: bool = False) -> tuple[int, int]:
        return (a * b, 0) if second else (0, 0)

    @staticmethod
    def decoration(size: int) -> tuple[int, int]:
        return 2 * size, 0

    @staticmethod
    def collapse(bidegree: tuple[int, int], N: int) -> int:
        k, l = bidegree
        return k + N * l
