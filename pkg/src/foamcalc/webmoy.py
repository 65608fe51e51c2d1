"""Planar webs, subset flows and the MOY state sum.

A web is stored as a planar map.  Every edge has two ends ("darts"):
dart ``2*e`` is the tail end of edge ``e`` and dart ``2*e+1`` its head end.
Each trivalent vertex lists its incident darts in counterclockwise order;
the boundary of the disk lists the darts lying on it, counterclockwise.
Closed loops without vertices are kept aside as labelled circles.

The state sum: a flow assigns to every edge a subset of {1..N} whose
size is the edge label, additively at vertices.  Its weight is

    q^( sum_v (a_v b_v / 2 - #{(l, r) in L_v x R_v : l < r})
        + sum_i (N + 1 - 2i) rot(Gamma_i) )

where L_v, R_v are the subsets on the left and right thin edges at v
(seen along the orientation) and Gamma_i is the union of edges whose
subset contains i, a disjoint union of simple closed curves.  The two
normalisations were fixed so that circles give balanced quantum binomials
and digons give the quantum binomial factor.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from .poly import LaurentPoly
from .symcore import qbinomial

__all__ = [
    "Web",
    "WebBuilder",
    "Flow",
    "enumerate_flows",
    "moy_eval",
    "hom_dim",
    "glue",
    "closure",
    "insert_digon",
    "count_flows",
    "circle_web",
    "theta_web",
    "digon_web",
    "dumbbell_web",
    "strand_web",
]


def _popcount(x: int) -> int:
    return bin(x).count("1")


class Web:
    """Oriented trivalent planar web in a disk (possibly closed).

    Attributes
    ----------
    labels, tails, heads : per-edge label and endpoint vertex (``None`` for
        an end on the disk boundary).
    rotation : per-vertex counterclockwise tuple of darts.
    boundary : counterclockwise tuple of boundary darts.
    circles : labels of vertex-free closed loops.
    colors : optional per-edge annotation (e.g. subsets of an alphabet).
    """

    def __init__(
        self,
        labels: Sequence[int],
        tails: Sequence[int | None],
        heads: Sequence[int | None],
        rotation: Sequence[Sequence[int]],
        boundary: Sequence[int] = (),
        circles: Sequence[int] = (),
        colors: Sequence[object] | None = None,
    ):
        self.labels = tuple(int(x) for x in labels)
        self.tails = tuple(tails)
        self.heads = tuple(heads)
        self.rotation = tuple(tuple(r) for r in rotation)
        self.boundary = tuple(boundary)
        self.circles = tuple(sorted(int(c) for c in circles))
        self.colors = tuple(colors) if colors is not None else None
        self._validate()

    # --- structure ---
    @property
    def n_edges(self) -> int:
        return len(self.labels)

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    def is_closed(self) -> bool:
        return not self.boundary

    def dart_vertex(self, d: int):
        e, side = divmod(d, 2)
        return self.heads[e] if side else self.tails[e]

    def kind(self, v: int) -> str:
        incoming = sum(1 for d in self.rotation[v] if d % 2 == 1)
        return "merge" if incoming == 2 else "split"

    def thick_and_thin(self, v: int) -> tuple[int, int, int]:
        """(thick dart, left thin dart, right thin dart) at vertex v.

        Left and right are seen looking along the orientation.  For a merge
        the counterclockwise order is (thick, left, right); for a split it is
        (thick, right, left).
        """
        rot = self.rotation[v]
        merge = self.kind(v) == "merge"
        for i, d in enumerate(rot):
            is_out = d % 2 == 0
            if (merge and is_out) or (not merge and not is_out):
                nxt, prv = rot[(i + 1) % 3], rot[(i + 2) % 3]
                return (d, nxt, prv) if merge else (d, prv, nxt)
        raise ValueError(f"vertex {v} has no thick edge")

    def _validate(self):
        n = len(self.labels)
        if not (len(self.tails) == len(self.heads) == n):
            raise ValueError("edge arrays have different lengths")
        seen = set()
        for v, rot in enumerate(self.rotation):
            if len(rot) != 3:
                raise ValueError(f"vertex {v} is not trivalent")
            for d in rot:
                if self.dart_vertex(d) != v:
                    raise ValueError(f"dart {d} listed at vertex {v} does not end there")
                seen.add(d)
            ins = [d // 2 for d in rot if d % 2 == 1]
            outs = [d // 2 for d in rot if d % 2 == 0]
            lab = self.labels
            if len(ins) == 2 and len(outs) == 1:
                ok = lab[ins[0]] + lab[ins[1]] == lab[outs[0]]
            elif len(ins) == 1 and len(outs) == 2:
                ok = lab[outs[0]] + lab[outs[1]] == lab[ins[0]]
            else:
                ok = False
            if not ok:
                raise ValueError(f"flow condition fails at vertex {v}")
        for d in self.boundary:
            if self.dart_vertex(d) is not None:
                raise ValueError(f"boundary dart {d} is attached to a vertex")
            seen.add(d)
        if len(seen) != 2 * n:
            raise ValueError("every edge end must sit at a vertex or on the boundary")
        if any(x <= 0 for x in self.labels) or any(c <= 0 for c in self.circles):
            raise ValueError("labels must be positive")

    def boundary_data(self) -> tuple[tuple[int, str], ...]:
        """Label and direction ('out' leaves the disk) of each boundary point."""
        return tuple((self.labels[d // 2], "out" if d % 2 == 1 else "in") for d in self.boundary)

    # --- planar operations ---
    def dual(self) -> "Web":
        """Mirror image with all orientations reversed (the bending partner)."""
        tails, heads = self.heads, self.tails

        def flip(d: int) -> int:
            return d ^ 1

        rotation = [tuple(flip(d) for d in reversed(r)) for r in self.rotation]
        boundary = tuple(flip(d) for d in reversed(self.boundary))
        return Web(self.labels, tails, heads, rotation, boundary, self.circles, self.colors)

    def faces(self) -> list[list[int]]:
        """Faces of a closed web as lists of departing darts.

        A dart d = (e, side) departs from the ``side`` end of e.  Walking
        along it and turning clockwise-next at the far vertex keeps the face
        on the left.
        """
        if self.boundary:
            raise ValueError("faces are only computed for closed webs")
        pos = {}
        for v, rot in enumerate(self.rotation):
            for i, d in enumerate(rot):
                pos[d] = (v, i)
        seen = set()
        out = []
        for start in range(2 * self.n_edges):
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                arrive = d ^ 1
                v, i = pos[arrive]
                rot = self.rotation[v]
                d = rot[(i - 1) % len(rot)]
            out.append(face)
        return out

    def components(self) -> list[list[int]]:
        """Connected components of the vertex graph, as vertex lists."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in range(self.n_edges):
            t, h = self.tails[e], self.heads[e]
            if t is not None and h is not None:
                parent[find(t)] = find(h)
        groups: dict[int, list[int]] = {}
        for v in range(self.n_vertices):
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def subweb(self, vertices: Iterable[int]) -> "Web":
        """The closed sub-web spanned by a union of components."""
        vs = sorted(vertices)
        vmap = {v: i for i, v in enumerate(vs)}
        edges = sorted({d // 2 for v in vs for d in self.rotation[v]})
        emap = {e: i for i, e in enumerate(edges)}
        rotation = [tuple(2 * emap[d // 2] + d % 2 for d in self.rotation[v]) for v in vs]
        return Web(
            [self.labels[e] for e in edges],
            [vmap[self.tails[e]] for e in edges],
            [vmap[self.heads[e]] for e in edges],
            rotation,
            colors=[self.colors[e] for e in edges] if self.colors else None,
        )

    def euler_genus_ok(self) -> bool:
        """Every component satisfies V - E + F = 2 (a sphere)."""
        if self.boundary:
            raise ValueError("needs a closed web")
        for comp in self.components():
            sub = self.subweb(comp)
            if sub.n_vertices - sub.n_edges + len(sub.faces()) != 2:
                return False
        return True

    # --- serialisation ---
    def to_json(self) -> dict:
        vertices = []
        for v in range(self.n_vertices):
            vertices.append({"kind": self.kind(v), "order": [
                {"edge": d // 2, "end": "to" if d % 2 else "from"} for d in self.rotation[v]]})
        edges = []
        for e in range(self.n_edges):
            item = {"from": self.tails[e], "to": self.heads[e], "label": self.labels[e],
                    "boundary": self.tails[e] is None or self.heads[e] is None}
            if self.colors is not None and self.colors[e] is not None:
                c = self.colors[e]
                item["color"] = sorted(c) if isinstance(c, (set, frozenset, tuple, list)) else c
            edges.append(item)
        out = {
            "vertices": vertices,
            "edges": edges,
            "boundary_order": [{"edge": d // 2, "end": "to" if d % 2 else "from"} for d in self.boundary],
        }
        if self.circles:
            out["circles"] = list(self.circles)
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "Web":
        """Parse the web JSON format.

        Vertices may carry an ``order`` list giving the counterclockwise
        order of incident edge ends; without it the first listed thin edge
        is taken to be the left one.
        """
        edges = data.get("edges", [])
        labels = [int(e["label"]) for e in edges]
        tails = [e.get("from") for e in edges]
        heads = [e.get("to") for e in edges]
        nv = len(data.get("vertices", []))
        rotation = []
        for v, vert in enumerate(data.get("vertices", [])):
            if "order" in vert:
                rot = []
                for item in vert["order"]:
                    if isinstance(item, Mapping):
                        rot.append(2 * int(item["edge"]) + (1 if item.get("end") == "to" else 0))
                    else:
                        e = int(item)
                        rot.append(2 * e + (1 if heads[e] == v else 0))
                rotation.append(tuple(rot))
            else:
                ins = [2 * e + 1 for e in range(len(edges)) if heads[e] == v]
                outs = [2 * e for e in range(len(edges)) if tails[e] == v]
                kind = vert.get("kind")
                if kind == "merge" and len(ins) == 2 and len(outs) == 1:
                    rotation.append((outs[0], ins[0], ins[1]))
                elif kind == "split" and len(ins) == 1 and len(outs) == 2:
                    rotation.append((ins[0], outs[1], outs[0]))
                else:
                    raise ValueError(f"vertex {v}: kind {kind!r} does not match its edges")
        for e in range(len(edges)):
            for end in (tails[e], heads[e]):
                if end is not None and not 0 <= end < nv:
                    raise ValueError(f"edge {e} refers to missing vertex {end}")
        boundary = []
        for item in data.get("boundary_order", []):
            if isinstance(item, Mapping):
                boundary.append(2 * int(item["edge"]) + (1 if item.get("end") == "to" else 0))
            else:
                e = int(item)
                if heads[e] is None and tails[e] is None:
                    raise ValueError(f"edge {e} has two boundary ends; use {{edge, end}} entries")
                boundary.append(2 * e + (1 if heads[e] is None else 0))
        return cls(labels, tails, heads, rotation, boundary, data.get("circles", []))

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __repr__(self) -> str:
        return (f"Web(vertices={self.n_vertices}, edges={self.n_edges}, "
                f"boundary={len(self.boundary)}, circles={list(self.circles)})")


class WebBuilder:
    """Assemble webs from trivalent vertices and named ports.

    Segments are joined end to end; chains of segments collapse into
    single edges and vertex-free cycles become circles.
    """

    def __init__(self):
        self._segments: list[list] = []  # [label, tail_end, head_end, color]
        self._vertex_ports: list[list] = []
        self._boundary: list[tuple[int, int]] = []
        self._joins: list[tuple[tuple[int, int], tuple[int, int]]] = []

    def segment(self, label: int, color=None) -> int:
        self._segments.append([label, None, None, color])
        return len(self._segments) - 1

    def vertex(self, ends: Sequence[tuple[int, int]]) -> int:
        """Trivalent vertex at segment ends, listed counterclockwise.

        Each end is ``(segment, side)`` with side 0 = tail, 1 = head.
        """
        self._vertex_ports.append(list(ends))
        return len(self._vertex_ports) - 1

    def join(self, head_end: tuple[int, int], tail_end: tuple[int, int]):
        """Identify the head of one segment with the tail of another."""
        if head_end[1] != 1 or tail_end[1] != 0:
            raise ValueError("joins connect a head end to a tail end")
        self._joins.append((head_end, tail_end))

    def boundary(self, end: tuple[int, int]):
        self._boundary.append(end)

    def build(self) -> Web:
        nseg = len(self._segments)
        at_vertex: dict[tuple[int, int], int] = {}
        for v, ends in enumerate(self._vertex_ports):
            for end in ends:
                if end in at_vertex:
                    raise ValueError(f"segment end {end} used twice")
                at_vertex[end] = v
        nxt: dict[int, int] = {}
        prv: dict[int, int] = {}
        for (s1, _), (s2, _) in self._joins:
            if self._segments[s1][0] != self._segments[s2][0]:
                raise ValueError(f"label mismatch joining segments {s1} and {s2}")
            if s1 in nxt or s2 in prv:
                raise ValueError("segment end joined twice")
            nxt[s1] = s2
            prv[s2] = s1
        bset = set(self._boundary)
        seen = set()
        labels, tails, heads, colors = [], [], [], []
        seg_edge: dict[int, int] = {}
        circles = []
        # chains start at segments whose tail is not joined
        starts = [s for s in range(nseg) if s not in prv]
        for s in starts:
            chain = [s]
            while chain[-1] in nxt:
                chain.append(nxt[chain[-1]])
            e = len(labels)
            for c in chain:
                seg_edge[c] = e
                seen.add(c)
            labels.append(self._segments[s][0])
            colors.append(self._segments[s][3])
            tails.append((chain[0], 0))
            heads.append((chain[-1], 1))
        for s in range(nseg):
            if s in seen:
                continue
            # a cycle of joined segments
            c = s
            while c not in seen:
                seen.add(c)
                c = nxt[c]
            circles.append(self._segments[s][0])
        tail_v = []
        head_v = []
        for e in range(len(labels)):
            te, he = tails[e], heads[e]
            if te in at_vertex:
                tail_v.append(at_vertex[te])
            elif te in bset:
                tail_v.append(None)
            else:
                raise ValueError(f"dangling tail end {te}")
            if he in at_vertex:
                head_v.append(at_vertex[he])
            elif he in bset:
                head_v.append(None)
            else:
                raise ValueError(f"dangling head end {he}")

        def dart(end):
            s, side = end
            return 2 * seg_edge[s] + side

        rotation = [tuple(dart(end) for end in ends) for ends in self._vertex_ports]
        boundary = [dart(end) for end in self._boundary]
        use_colors = colors if any(c is not None for c in colors) else None
        return Web(labels, tail_v, head_v, rotation, boundary, circles, use_colors)


# --- standard small webs ---------------------------------------------------

def circle_web(a: int) -> Web:
    return Web([], [], [], [], circles=[a])


def strand_web(a: int) -> Web:
    """One upward a-strand: boundary order (bottom, top)."""
    return Web([a], [None], [None], [], boundary=[0, 1])


def digon_web(a: int, b: int) -> Web:
    """An (a+b)-strand that splits into a (left) and b (right) and merges back.

    Boundary: bottom end then top end.
    """
    wb = WebBuilder()
    low = wb.segment(a + b)
    left = wb.segment(a)
    right = wb.segment(b)
    high = wb.segment(a + b)
    wb.vertex([(low, 1), (right, 0), (left, 0)])  # split: thick, right, left
    wb.vertex([(high, 0), (left, 1), (right, 1)])  # merge: thick, left, right
    wb.boundary((low, 0))
    wb.boundary((high, 1))
    return wb.build()


def theta_web(a: int, b: int) -> Web:
    """Closed theta: digon whose thick ends are joined around the right."""
    wb = WebBuilder()
    thick = wb.segment(a + b)
    left = wb.segment(a)
    right = wb.segment(b)
    wb.vertex([(thick, 1), (right, 0), (left, 0)])
    wb.vertex([(thick, 0), (left, 1), (right, 1)])
    return wb.build()


def dumbbell_web(a: int, b: int) -> Web:
    """Upward a (left) and b (right) merge into a+b and split again.

    Boundary counterclockwise: bottom-left, bottom-right, top-right, top-left.
    """
    wb = WebBuilder()
    bl, br = wb.segment(a), wb.segment(b)
    mid = wb.segment(a + b)
    tl, tr = wb.segment(a), wb.segment(b)
    wb.vertex([(mid, 0), (bl, 1), (br, 1)])
    wb.vertex([(mid, 1), (tr, 0), (tl, 0)])
    for end in [(bl, 0), (br, 0), (tr, 1), (tl, 1)]:
        wb.boundary(end)
    return wb.build()


# --- gluing ----------------------------------------------------------------

def insert_digon(web: Web, edge: int, a: int) -> Web:
    """Replace an edge labelled c by a split into a (left) and c - a (right) and a merge."""
    c = web.labels[edge]
    if not 0 < a < c:
        raise ValueError(f"need 0 < a < {c}, got {a}")
    t, h = web.tails[edge], web.heads[edge]
    if t is None or h is None:
        raise ValueError("edge must join two vertices")
    n = web.n_edges
    x, y, z = n, n + 1, n + 2
    s, m = web.n_vertices, web.n_vertices + 1
    labels = list(web.labels) + [a, c - a, c]
    tails = list(web.tails) + [s, s, m]
    heads = list(web.heads) + [m, m, h]
    heads[edge] = s
    rotation = [tuple(2 * z + 1 if d == 2 * edge + 1 else d for d in rot) for rot in web.rotation]
    rotation.append((2 * edge + 1, 2 * y, 2 * x))
    rotation.append((2 * z, 2 * x + 1, 2 * y + 1))
    colors = None
    if web.colors is not None:
        colors = list(web.colors) + [None, None, web.colors[edge]]
    return Web(labels, tails, heads, rotation, web.boundary, web.circles, colors)


def glue(wiring: Mapping, inners: Sequence[Web]) -> Web:
    """Planar composition of webs inside a holed disk.

    ``wiring`` has keys
      ``arcs``: list of pairs of points, each point ``[disk, index]`` with
        disk -1 for the outer boundary and ``i >= 0`` for ``inners[i]``;
        an arc runs from its first point to its second point.
      ``outer``: optional list of outer boundary points, counterclockwise.
      ``labels``: optional labels for arcs joining two outer points.
    Inner boundary point ``index`` refers to ``inners[i].boundary[index]``.
    """
    wb = WebBuilder()
    point_end: dict[tuple[int, int], tuple[int, int]] = {}
    for k, w in enumerate(inners):
        seg_of_edge = [wb.segment(w.labels[e], w.colors[e] if w.colors else None) for e in range(w.n_edges)]
        vmap = []
        for v in range(w.n_vertices):
            vmap.append(wb.vertex([(seg_of_edge[d // 2], d % 2) for d in w.rotation[v]]))
        for c in w.circles:
            s = wb.segment(c)
            wb.join((s, 1), (s, 0))
        for idx, d in enumerate(w.boundary):
            point_end[(k, idx)] = (seg_of_edge[d // 2], d % 2)
    outer_pts = [tuple(p) for p in wiring.get("outer", [])]
    arc_labels = list(wiring.get("labels", []))
    used = set()
    for n_arc, (p, r) in enumerate(wiring.get("arcs", [])):
        p, r = tuple(p), tuple(r)
        for pt in (p, r):
            if pt in used:
                raise ValueError(f"point {pt} used twice")
            used.add(pt)
        ep = point_end.get(p)
        er = point_end.get(r)
        if p[0] >= 0 and ep is None or r[0] >= 0 and er is None:
            raise ValueError(f"arc {p}->{r} refers to a missing boundary point")
        if ep is not None and er is not None:
            wb.join(ep, er) if ep[1] == 1 else wb.join(er, ep)
            if ep[1] == er[1]:
                raise ValueError(f"orientation mismatch on arc {p}->{r}")
        else:
            inner_end = ep if ep is not None else er
            if inner_end is None:
                label = int(arc_labels[n_arc]) if n_arc < len(arc_labels) else None
                if label is None:
                    raise ValueError("arcs between outer points need a label")
                s = wb.segment(label)
                point_end[p] = (s, 0)
                point_end[r] = (s, 1)
                continue
            # inner point to outer point: the inner end goes on the outer boundary
            outer = p if ep is None else r
            point_end[outer] = inner_end
    for pt in point_end:
        if pt[0] >= 0 and pt not in used:
            raise ValueError(f"inner boundary point {pt} is not wired")
    for pt in outer_pts:
        if pt not in point_end:
            raise ValueError(f"outer point {pt} is not wired")
        wb.boundary(point_end[pt])
    return wb.build()


def closure(W: Web, V: Web) -> Web:
    """The closed web W glued to the dual of V along the common boundary."""
    if W.boundary_data() != V.boundary_data():
        raise ValueError("webs have different boundary data")
    Vd = V.dual()
    n = len(W.boundary)
    # dual reverses the boundary order: point i of W meets point n-1-i of Vd
    arcs = []
    for i in range(n):
        pw, pv = (0, i), (1, n - 1 - i)
        dw = W.boundary[i]
        arcs.append((pw, pv) if dw % 2 == 1 else (pv, pw))
    return glue({"arcs": arcs}, [W, Vd])


# --- flows and the state sum -------------------------------------------------

@dataclass(frozen=True)
class Flow:
    """Edge -> subset of {1..N} (as a bitmask; bit i-1 stands for i)."""

    masks: tuple[int, ...]
    N: int

    def subset(self, e: int) -> frozenset[int]:
        m = self.masks[e]
        return frozenset(i + 1 for i in range(self.N) if m >> i & 1)


def _edge_order(web: Web) -> list[int]:
    """Edges in BFS order over vertices, so constraints propagate early."""
    order = []
    seen_e = set()
    seen_v = set()
    for start in range(web.n_vertices):
        if start in seen_v:
            continue
        queue = [start]
        seen_v.add(start)
        while queue:
            v = queue.pop(0)
            for d in web.rotation[v]:
                e = d // 2
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                other = web.dart_vertex(d ^ 1)
                if other is not None and other not in seen_v:
                    seen_v.add(other)
                    queue.append(other)
    for e in range(web.n_edges):
        if e not in seen_e:
            order.append(e)
    return order


@lru_cache(maxsize=None)
def _masks(N: int, k: int) -> tuple[int, ...]:
    return tuple(sum(1 << i for i in c) for c in itertools.combinations(range(N), k))


def _vertex_constraints(web: Web):
    out = []
    for v in range(web.n_vertices):
        thick, left, right = web.thick_and_thin(v)
        out.append((thick // 2, left // 2, right // 2))
    return out


def _iter_flow_masks(web: Web, N: int):
    if any(lab > N for lab in web.labels):
        return
    order = _edge_order(web)
    cons = _vertex_constraints(web)
    at_edge: dict[int, list[tuple[int, int, int]]] = {e: [] for e in range(web.n_edges)}
    for c in cons:
        for e in set(c):
            at_edge[e].append(c)
    assign = [-1] * web.n_edges

    def candidates(e: int):
        forced = None
        allowed_sub = (1 << N) - 1
        disjoint = 0
        for thick, left, right in at_edge[e]:
            t, l, r = assign[thick], assign[left], assign[right]
            if e == thick:
                if l >= 0 and r >= 0:
                    val = l | r
                    if forced is not None and forced != val:
                        return ()
                    forced = val
            else:
                other = right if e == left else left
                o = assign[other]
                if t >= 0:
                    allowed_sub &= t
                    if o >= 0:
                        val = t & ~o
                        if forced is not None and forced != val:
                            return ()
                        forced = val
                if o >= 0:
                    disjoint |= o
        lab = web.labels[e]
        if forced is not None:
            if _popcount(forced) != lab or forced & ~allowed_sub or forced & disjoint:
                return ()
            return (forced,)
        return tuple(m for m in _masks(N, lab) if not (m & ~allowed_sub) and not (m & disjoint))

    def rec(i: int):
        if i == len(order):
            yield tuple(assign)
            return
        e = order[i]
        for m in candidates(e):
            assign[e] = m
            yield from rec(i + 1)
        assign[e] = -1

    for masks in rec(0):
        # final check of every vertex
        ok = True
        for thick, left, right in cons:
            t, l, r = masks[thick], masks[left], masks[right]
            if l & r or (l | r) != t:
                ok = False
                break
        if ok:
            yield masks


def enumerate_flows(web: Web, N: int) -> list[Flow]:
    """All admissible subset flows on a closed web (circles excluded)."""
    if not web.is_closed():
        raise ValueError("flows are enumerated on closed webs")
    return [Flow(m, N) for m in _iter_flow_masks(web, N)]


def count_flows(web: Web, N: int) -> int:
    """Flow count including the free circles."""
    n = sum(1 for _ in _iter_flow_masks(web, N)) if web.n_edges else 1
    for c in web.circles:
        n *= comb(N, c)
    return n


class _RotationOracle:
    """Rotation numbers (+1 counterclockwise) of simple cycles in a closed web."""

    def __init__(self, web: Web):
        self.web = web
        faces = web.faces()
        self.face_of = {}
        for f, darts in enumerate(faces):
            for d in darts:
                self.face_of[d] = f
        self.n_faces = len(faces)
        # the outer face: the largest face (any face works on the sphere)
        self.outer = max(range(len(faces)), key=lambda f: (len(faces[f]), -f))
        self.cache: dict[frozenset, int] = {}

    def set_outer(self, f: int):
        self.outer = f
        self.cache.clear()

    def rot(self, edges: frozenset) -> int:
        if edges in self.cache:
            return self.cache[edges]
        left = {self.face_of[2 * e] for e in edges}
        right = {self.face_of[2 * e + 1] for e in edges}
        if left & right:
            raise ValueError("flow curve is not a simple closed curve")
        # flood from the left faces without crossing the curve
        seen = set(left)
        stack = list(left)
        while stack:
            f = stack.pop()
            for d, g in self._adj(f):
                if d // 2 in edges:
                    continue
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        r = -1 if self.outer in seen else 1
        self.cache[edges] = r
        return r

    def _adj(self, f: int):
        if not hasattr(self, "_adjacency"):
            adj: dict[int, list[tuple[int, int]]] = {g: [] for g in range(self.n_faces)}
            for d, g in self.face_of.items():
                adj[g].append((d, self.face_of[d ^ 1]))
            self._adjacency = adj
        return self._adjacency[f]


def _curves(web: Web, mask_of_edge: Sequence[int], color_bit: int) -> list[frozenset]:
    """Split Gamma_i (edges containing color i) into its cycles."""
    edges = [e for e in range(web.n_edges) if mask_of_edge[e] & color_bit]
    out_at: dict[int, int] = {}
    for e in edges:
        v = web.tails[e]
        out_at[v] = e
    seen = set()
    cycles = []
    for e in edges:
        if e in seen:
            continue
        cyc = []
        cur = e
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = out_at[web.heads[cur]]
        cycles.append(frozenset(cyc))
    return cycles


def _flow_weight2(web: Web, N: int, masks: Sequence[int], cons, rot: _RotationOracle) -> int:
    """Twice the q-exponent of a flow."""
    total = 0
    for thick, left, right in cons:
        l, r = masks[left], masks[right]
        a, b = _popcount(l), _popcount(r)
        pairs = 0
        for i in range(N):
            if l >> i & 1:
                # right colours larger than i
                pairs += _popcount(r >> (i + 1))
        total += a * b - 2 * pairs
    for i in range(N):
        bit = 1 << i
        for cyc in _curves(web, masks, bit):
            total += 2 * (N + 1 - 2 * (i + 1)) * rot.rot(cyc)
    return total


def _component_moy(web: Web, N: int, outer: int | None = None) -> LaurentPoly:
    cons = _vertex_constraints(web)
    rot = _RotationOracle(web)
    if outer is not None:
        rot.set_outer(outer)
    acc: dict[tuple[int, int], int] = {}
    for masks in _iter_flow_masks(web, N):
        w2 = _flow_weight2(web, N, masks, cons, rot)
        if w2 % 2:
            raise ArithmeticError("half-integral MOY exponent; web is not closed consistently")
        key = (w2 // 2, 0)
        acc[key] = acc.get(key, 0) + 1
    return LaurentPoly(acc)


def moy_eval(web: Web, N: int, outer_faces: Mapping[int, int] | None = None) -> LaurentPoly:
    """MOY evaluation of a closed web.

    Evaluated componentwise (the value is multiplicative under disjoint
    union).  ``outer_faces`` optionally picks the unbounded face of each
    component, which is useful to test independence of that choice.
    """
    if not web.is_closed():
        raise ValueError("moy_eval needs a closed web")
    if any(lab > N for lab in web.labels) or any(c > N for c in web.circles):
        raise ValueError(f"a label exceeds N={N}")
    result = LaurentPoly.one()
    for c in web.circles:
        result = result * qbinomial(N, c)
    for k, comp in enumerate(web.components()):
        sub = web.subweb(comp)
        outer = outer_faces.get(k) if outer_faces else None
        result = result * _component_moy(sub, N, outer)
        if result.is_zero():
            break
    return result


def hom_dim(V: Web, W: Web, N: int) -> LaurentPoly:
    """Graded dimension of Hom(V, W) via the bending trick.

    The closed web W glued to the dual of V is evaluated and shifted by
    q^{sum a_i (N - a_i)} over the caps created by bending, one per pair of
    boundary points (half of the boundary sum).
    """
    closed = closure(W, V)
    total = sum(lab * (N - lab) for lab, _ in W.boundary_data())
    if total % 2:
        raise ArithmeticError("odd boundary weight")
    return moy_eval(closed, N).shift(total // 2, 0)
