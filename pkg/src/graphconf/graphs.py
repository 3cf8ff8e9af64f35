"""Finite graphs with possibly open edge ends.

A graph here is a 1-dimensional complex in which each edge end is either
attached to a vertex or open (dangling).  Open ends are first class: they
are produced by deleting valency-1 vertices, and an edge may have zero,
one, or two attached ends.  The convention throughout is that ``end_minus``
is the end at characteristic parameter -1 and ``end_plus`` the end at +1.
"""

import json
from dataclasses import dataclass
from enum import Enum

from .errors import DuplicateId, OpenEdge, UnknownEdge, UnknownVertex


class EdgeClass(Enum):
    LOOP = "loop"
    BRANCH = "branch"
    CONNECTION = "connection"


@dataclass(frozen=True)
class Edge:
    id: str
    end_minus: str | None
    end_plus: str | None

    @property
    def ends(self) -> tuple[str | None, str | None]:
        return (self.end_minus, self.end_plus)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise UnknownEdge(f"no edge {edge_id!r}")

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def has_vertex(self, v: str) -> bool:
        return v in self.vertices

    def is_closed(self) -> bool:
        """True when every edge end is attached to a vertex."""
        return all(e.end_minus is not None and e.end_plus is not None for e in self.edges)


def build_graph(vertex_ids, edge_specs) -> Graph:
    """Validate and build a graph from ids and (id, end_minus, end_plus) triples.

    Ends given as None are open.  Identifiers must be unique and referenced
    vertices must exist; nothing else is normalized.
    """
    verts = list(vertex_ids)
    if len(set(verts)) != len(verts):
        raise DuplicateId("duplicate vertex id")
    edges = []
    seen = set()
    vset = set(verts)
    for spec in edge_specs:
        eid, lo, hi = spec
        if eid in seen:
            raise DuplicateId(f"duplicate edge id {eid!r}")
        seen.add(eid)
        for end in (lo, hi):
            if end is not None and end not in vset:
                raise UnknownVertex(f"edge {eid!r} references missing vertex {end!r}")
        edges.append(Edge(eid, lo, hi))
    edges.sort(key=lambda e: e.id)
    return Graph(tuple(sorted(verts)), tuple(edges))


def classify_edge(g: Graph, edge_id: str) -> EdgeClass:
    """Loop, connection, or branch, per the closure of the edge's ends."""
    e = g.edge(edge_id)
    if e.end_minus is not None and e.end_minus == e.end_plus:
        return EdgeClass.LOOP
    if e.end_minus is not None and e.end_plus is not None:
        # Both ends attached to distinct vertices: a connection needs each
        # endpoint to meet at least one other edge.
        if all(_meets_other_edge(g, v, edge_id) for v in (e.end_minus, e.end_plus)):
            return EdgeClass.CONNECTION
    return EdgeClass.BRANCH


def _meets_other_edge(g: Graph, v: str, edge_id: str) -> bool:
    return any(f.id != edge_id and v in f.ends for f in g.edges)


def valency(g: Graph, v: str) -> int:
    """Number of attached edge ends at v, loops counting twice."""
    if v not in g.vertices:
        raise UnknownVertex(f"no vertex {v!r}")
    total = 0
    for e in g.edges:
        total += (e.end_minus == v) + (e.end_plus == v)
    return total


def loops_at(g: Graph, v: str) -> int:
    return sum(1 for e in g.edges if e.end_minus == v and e.end_plus == v)


def remove_leaves(g: Graph) -> Graph:
    """Delete every valency-1 vertex, opening the edge ends attached there.

    A single pass suffices: opening an end never changes the valency at the
    other end.  An edge that keeps exactly one attached end is re-oriented so
    the surviving attachment sits at end_minus.
    """
    leaves = {v for v in g.vertices if valency(g, v) == 1}
    new_edges = []
    for e in g.edges:
        lo = None if e.end_minus in leaves else e.end_minus
        hi = None if e.end_plus in leaves else e.end_plus
        if lo is None and hi is not None:
            lo, hi = hi, None
        new_edges.append(Edge(e.id, lo, hi))
    keep = tuple(v for v in g.vertices if v not in leaves)
    return Graph(keep, tuple(new_edges))


def reduce(g: Graph) -> Graph:
    """Merge away valency-2 vertices not contained in loops.

    Each merge replaces the vertex's two distinct incident edges by one edge
    whose id concatenates the two ids, smaller first.  Vertices are processed
    in ascending id order until the graph is reduced; the homeomorphism type
    is preserved.
    """
    verts = list(g.vertices)
    edges = {e.id: e for e in g.edges}
    changed = True
    while changed:
        changed = False
        for v in sorted(verts):
            incident = []
            for e in edges.values():
                if e.end_minus == v:
                    incident.append((e.id, "-"))
                if e.end_plus == v:
                    incident.append((e.id, "+"))
            if len(incident) != 2:
                continue
            (id_a, side_a), (id_b, side_b) = incident
            if id_a == id_b:
                continue  # a loop at v; v stays
            if id_b < id_a:
                (id_a, side_a), (id_b, side_b) = (id_b, side_b), (id_a, side_a)
            ea, eb = edges.pop(id_a), edges.pop(id_b)
            far_a = ea.end_plus if side_a == "-" else ea.end_minus
            far_b = eb.end_plus if side_b == "-" else eb.end_minus
            edges[id_a + "+" + id_b] = Edge(id_a + "+" + id_b, far_a, far_b)
            verts.remove(v)
            changed = True
            break
    order = sorted(edges)
    return Graph(tuple(sorted(verts)), tuple(edges[i] for i in order))


def subdivide(g: Graph, n: int) -> Graph:
    """Replace each edge by a path of n edges through n-1 fresh vertices.

    Requires a closed graph; n = 1 returns g unchanged.
    """
    if n < 1:
        raise ValueError("subdivision count must be >= 1")
    if n == 1:
        return g
    if not g.is_closed():
        raise OpenEdge("cannot subdivide a graph with open edge ends")
    verts = list(g.vertices)
    edges = []
    for e in g.edges:
        stops = [e.end_minus]
        for i in range(1, n):
            w = f"{e.id}.{i}"
            verts.append(w)
            stops.append(w)
        stops.append(e.end_plus)
        for j in range(n):
            edges.append((f"{e.id}.{j + 1}", stops[j], stops[j + 1]))
    return build_graph(verts, edges)


def essential_vertices(g: Graph) -> set[str]:
    """Vertices that are neither leaves nor plain through-vertices.

    A through-vertex meets exactly two distinct non-loop edges and no loop;
    everything else of valency != 1 is essential.
    """
    out = set()
    for v in g.vertices:
        val = valency(g, v)
        if val == 1:
            continue
        nonloop = sum(
            (e.end_minus == v) + (e.end_plus == v)
            for e in g.edges
            if not (e.end_minus == v and e.end_plus == v)
        )
        if loops_at(g, v) == 0 and nonloop == 2:
            continue
        out.add(v)
    return out


def component_count(g: Graph) -> int:
    """Connected components of the underlying space (open edges included)."""
    parent: dict[str, str] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v in g.vertices:
        parent["v:" + v] = "v:" + v
    for e in g.edges:
        parent["e:" + e.id] = "e:" + e.id
    for e in g.edges:
        for end in e.ends:
            if end is not None:
                union("e:" + e.id, "v:" + end)
    return len({find(x) for x in parent})


def is_connected(g: Graph) -> bool:
    if not g.vertices and not g.edges:
        return False
    return component_count(g) == 1


def graph_betti(g: Graph) -> tuple[int, int]:
    """(b0, b1) of the underlying space for a closed graph."""
    if not g.is_closed():
        raise OpenEdge("betti numbers via counts need a closed graph")
    c = component_count(g)
    return c, len(g.edges) - len(g.vertices) + c


# -- JSON interchange --------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "ends": [e.end_minus, e.end_plus]} for e in g.edges],
    }


def graph_from_json(data) -> Graph:
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    try:
        verts = data["vertices"]
        specs = [(e["id"], e["ends"][0], e["ends"][1]) for e in data["edges"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    return build_graph(verts, specs)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))


# -- shipped graph families --------------------------------------------------

def minimal_circle() -> Graph:
    return build_graph(["v"], [("a", "v", "v")])


def cycle_graph(n: int) -> Graph:
    return subdivide(minimal_circle(), n)


def y_graph() -> Graph:
    return build_graph(
        ["c", "x", "y", "z"],
        [("e1", "c", "x"), ("e2", "c", "y"), ("e3", "c", "z")],
    )


def path_graph(n: int) -> Graph:
    verts = [f"p{i}" for i in range(n + 1)]
    return build_graph(verts, [(f"e{i}", verts[i], verts[i + 1]) for i in range(n)])


def theta_graph() -> Graph:
    return build_graph(["u", "w"], [("t1", "u", "w"), ("t2", "u", "w"), ("t3", "u", "w")])


def hub_graph(branches: int, loops: int) -> Graph:
    """One hub with the given number of pendant branches and loops (closed form).

    Apply remove_leaves to get the open-branch form the models use.
    """
    verts = ["c"] + [f"t{i}" for i in range(1, branches + 1)]
    specs = [(f"b{i}", "c", f"t{i}") for i in range(1, branches + 1)]
    specs += [(f"a{i}", "c", "c") for i in range(1, loops + 1)]
    return build_graph(verts, specs)


def double_hub_graph(x: int, k: int, l: int, p: int, q: int) -> Graph:
    """Two hubs joined by x parallel edges, with (k, l) and (p, q) pendant
    branches and loops respectively.  Branches are emitted open (no leaf
    vertices), matching the leaf-removed form of the one-hub family.
    """
    verts = ["c1", "c2"]
    specs = [(f"m{i}", "c1", "c2") for i in range(1, x + 1)]
    specs += [(f"b{i}", "c1", None) for i in range(1, k + 1)]
    specs += [(f"a{i}", "c1", "c1") for i in range(1, l + 1)]
    specs += [(f"d{i}", "c2", None) for i in range(1, p + 1)]
    specs += [(f"g{i}", "c2", "c2") for i in range(1, q + 1)]
    return build_graph(verts, specs)
