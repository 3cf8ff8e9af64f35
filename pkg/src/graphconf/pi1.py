"""Fundamental group presentations from the 2-skeleton of a complex.

The edge-path group: pick a spanning tree, one generator per non-tree
1-cell, one relator per 2-cell.  For a nerve 2-chain with faces d0, d1, d2
the boundary reads d2 then d0 against the composite d1, giving the relator
g(d2) g(d0) g(d1)^-1; a glued 2-cell contributes its boundary word as-is.
Only abelianization-level consequences are certified downstream (group
isomorphism testing is out of scope), and the abelianization is
cross-checked against first homology.
"""

from collections import deque
from dataclasses import dataclass

from .errors import Disconnected, NotOneDimensional
from .homology import smith_normal_form
from .nerve import SemiSimplicialSet


@dataclass
class Presentation:
    generators: list  # edge labels of non-tree 1-cells
    relators: list  # words: lists of (generator, +-1)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [[[g, e] for g, e in word] for word in self.relators],
        }


@dataclass
class EdgeSkeleton:
    """Uniform 2-skeleton view: vertices, edges with endpoints, boundary words."""

    vertex_count: int
    edges: list  # (label, src, dst)
    words: list  # per 2-cell: list of (edge index, +-1)


def _skeleton(s) -> EdgeSkeleton:
    if isinstance(s, SemiSimplicialSet):
        edges = []
        if s.dimensions > 1:
            for i, fs in enumerate(s.faces[1]):
                edges.append((s.labels[1][i], fs[1], fs[0]))  # d1 = source, d0 = target
        words = []
        if s.dimensions > 2:
            for fs in s.faces[2]:
                words.append([(fs[2], 1), (fs[0], 1), (fs[1], -1)])
        return EdgeSkeleton(s.size(0), edges, words)
    # duck-typed glued complexes: see reduced.GluedComplex
    idx = {v: i for i, v in enumerate(s.vertices)}
    eidx = {e[0]: i for i, e in enumerate(s.edges)}
    edges = [(e[0], idx[e[1]], idx[e[2]]) for e in s.edges]
    words = [[(eidx[eid], sign) for eid, sign in word] for _, word in s.faces2]
    return EdgeSkeleton(len(s.vertices), edges, words)


def spanning_tree(s) -> set:
    """Indices of 1-cells in a breadth-first tree from the least 0-cell."""
    sk = _skeleton(s)
    if sk.vertex_count == 0:
        raise Disconnected("empty complex has no spanning tree")
    adj: dict[int, list] = {v: [] for v in range(sk.vertex_count)}
    for i, (_, a, b) in enumerate(sk.edges):
        adj[a].append((i, b))
        adj[b].append((i, a))
    seen = {0}
    tree = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for i, w in sorted(adj[v]):
            if w not in seen:
                seen.add(w)
                tree.add(i)
                queue.append(w)
    if len(seen) != sk.vertex_count:
        raise Disconnected("complex is not connected")
    return tree


def presentation(s) -> Presentation:
    """Edge-path presentation of the fundamental group of the 2-skeleton."""
    sk = _skeleton(s)
    tree = spanning_tree(s)
    gens = [sk.edges[i][0] for i in sorted(i for i in range(len(sk.edges)) if i not in tree)]
    gen_of_edge = {}
    for i in range(len(sk.edges)):
        if i not in tree:
            gen_of_edge[i] = sk.edges[i][0]
    relators = []
    for word in sk.words:
        rel = [(gen_of_edge[i], sign) for i, sign in word if i in gen_of_edge]
        relators.append(_free_reduce(rel))
    return Presentation(gens, relators)


def _free_reduce(word: list) -> list:
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    # cyclic reduction: relators are defined up to conjugation
    while len(out) > 1 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return out


def simplify(p: Presentation) -> Presentation:
    """Safe Tietze moves: drop empty relators, free reduction, and eliminate
    any generator occurring exactly once (exponent +-1) in some relator."""
    gens = list(p.generators)
    relators = [_free_reduce(list(w)) for w in p.relators]
    changed = True
    while changed:
        changed = False
        relators = [w for w in relators if w]
        for ri, word in enumerate(relators):
            counts: dict = {}
            for g, _ in word:
                counts[g] = counts.get(g, 0) + 1
            candidate = None
            for pos, (g, e) in enumerate(word):
                if counts[g] == 1:
                    candidate = (pos, g, e)
                    break
            if candidate is None:
                continue
            pos, g, e = candidate
            # word = u g^e v  =>  g^e = u^-1 v^-1, substitute everywhere
            u, v = word[:pos], word[pos + 1:]
            repl = [(h, -x) for h, x in reversed(u)] + [(h, -x) for h, x in reversed(v)]
            if e == -1:
                repl = [(h, -x) for h, x in reversed(repl)]
            new_relators = []
            for rj, other in enumerate(relators):
                if rj == ri:
                    continue
                expanded = []
                for h, x in other:
                    if h == g:
                        expanded.extend(repl if x == 1 else [(a, -b) for a, b in reversed(repl)])
                    else:
                        expanded.append((h, x))
                new_relators.append(_free_reduce(expanded))
            gens = [h for h in gens if h != g]
            relators = new_relators
            changed = True
            break
    return Presentation(gens, relators)


def abelianization(p: Presentation) -> tuple[int, list]:
    """(free rank, torsion coefficients) of the abelianized group."""
    gen_pos = {g: j for j, g in enumerate(p.generators)}
    entries = {}
    for i, word in enumerate(p.relators):
        for g, e in word:
            key = (i, gen_pos[g])
            entries[key] = entries.get(key, 0) + e
    entries = {k: v for k, v in entries.items() if v}
    factors, rank = smith_normal_form(entries)
    return len(p.generators) - rank, [f for f in factors if f > 1]


def free_rank(s) -> int:
    """Rank 1 - chi of a connected 1-dimensional complex."""
    sk = _skeleton(s)
    if sk.words:
        raise NotOneDimensional("complex has 2-cells")
    if isinstance(s, SemiSimplicialSet) and s.dimensions > 2 and any(s.labels[2:]):
        raise NotOneDimensional("complex has chains above dimension 1")
    spanning_tree(s)  # raises Disconnected if needed
    return 1 - (sk.vertex_count - len(sk.edges))
