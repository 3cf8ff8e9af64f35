"""Exact integer homology of chain complexes.

Boundary matrices are assembled from semi-simplicial sets with the sign
convention d = sum_i (-1)^i d_i, fixed once here and reused by the cubical
and glued complexes.  Smith normal forms run in two phases: a sparse sweep
that splits off unit pivots (which is almost all of a cellular boundary
matrix), then a textbook reduction of the small remaining core over Python
integers, so no intermediate value ever overflows.
"""

from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from math import gcd

from .errors import NotAComplex
from .nerve import SemiSimplicialSet


@dataclass
class ChainComplex:
    """Basis sizes per dimension and boundary matrices between them.

    ``boundaries[n]`` maps dimension n+1 to dimension n and is stored as a
    dict (row, col) -> integer of shape sizes[n] x sizes[n+1].
    """

    sizes: list
    boundaries: list
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.boundaries) != max(len(self.sizes) - 1, 0):
            raise NotAComplex("boundary count does not match dimension count")
        for n in range(len(self.boundaries) - 1):
            if not _product_is_zero(self.boundaries[n], self.boundaries[n + 1]):
                raise NotAComplex(f"boundary squared is nonzero between dims {n + 2} and {n}")

    @property
    def top_dimension(self) -> int:
        return len(self.sizes) - 1

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * c for n, c in enumerate(self.sizes))


@dataclass
class HomologyResult:
    betti: list
    torsion: list  # per dimension, invariant factors > 1 (each divides the next)

    def __iter__(self):
        return iter(zip(self.betti, self.torsion))


def _product_is_zero(a: dict, b: dict) -> bool:
    rows_of_b: dict[int, list] = {}
    for (r, c), v in b.items():
        rows_of_b.setdefault(r, []).append((c, v))
    acc: dict[tuple[int, int], int] = {}
    for (r, mid), va in a.items():
        for c, vb in rows_of_b.get(mid, ()):  # a[r,mid] * b[mid,c]
            key = (r, c)
            acc[key] = acc.get(key, 0) + va * vb
    return all(v == 0 for v in acc.values())


def chain_complex(s: SemiSimplicialSet) -> ChainComplex:
    """Cellular chain complex of a semi-simplicial set."""
    sizes = [len(level) for level in s.labels]
    boundaries = []
    for n in range(1, len(sizes)):
        mat: dict[tuple[int, int], int] = {}
        for j, fs in enumerate(s.faces[n]):
            for i, f in enumerate(fs):
                key = (f, j)
                mat[key] = mat.get(key, 0) + (-1) ** i
        boundaries.append({k: v for k, v in mat.items() if v})
    return ChainComplex(sizes, boundaries)


# -- Smith normal form -------------------------------------------------------

def _unit_pivot_sweep(entries: dict) -> tuple[int, dict]:
    """Split off as many +-1 pivots as possible.

    Returns (number of unit pivots, remaining core entries).  With a unit
    pivot the column is cleared by row operations and the row then clears
    for free, so the matrix decomposes as diag(1) (+) core at each step.
    Candidate pivots sit in a heap with lazy invalidation, keeping the
    sweep near-linear in the number of fill operations.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set] = {}
    for (r, c), v in entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)
    heap = sorted(pos for pos, v in entries.items() if v in (1, -1))
    heapify(heap)
    count = 0
    while heap:
        r, c = heappop(heap)
        row = rows.get(r)
        if row is None or row.get(c) not in (1, -1):
            continue
        piv = row[c]
        count += 1
        row_r = rows.pop(r)
        for cc in row_r:
            cols[cc].discard(r)
        for rr in list(cols.get(c, ())):
            factor = rows[rr][c] * piv  # piv in {1,-1}: multiplier of row r
            target = rows[rr]
            for cc, v in row_r.items():
                if cc == c:
                    continue
                nv = target.get(cc, 0) - factor * v
                if nv:
                    target[cc] = nv
                    cols.setdefault(cc, set()).add(rr)
                    if nv in (1, -1):
                        heappush(heap, (rr, cc))
                else:
                    target.pop(cc, None)
                    cols[cc].discard(rr)
            del target[c]
            if not target:
                del rows[rr]
        cols.pop(c, None)
    core = {(r, c): v for r, row in rows.items() for c, v in row.items()}
    return count, core


def _dense_smith(entries: dict) -> list:
    """Invariant factors of a small integer matrix, textbook reduction.

    Pivot choice is the smallest nonzero absolute value with ties broken by
    position; rows and columns are reduced until the pivot divides them,
    then cleared; a pivot is re-entered when some remaining entry is not
    divisible by it, which enforces the divisibility chain.
    """
    if not entries:
        return []
    rmap = {r: i for i, r in enumerate(sorted({r for r, _ in entries}))}
    cmap = {c: j for j, c in enumerate(sorted({c for _, c in entries}))}
    m, n = len(rmap), len(cmap)
    a = [[0] * n for _ in range(m)]
    for (r, c), v in entries.items():
        a[rmap[r]][cmap[c]] = v
    factors = []
    top = 0
    while True:
        pivot = None
        for i in range(top, m):
            for j in range(top, n):
                v = abs(a[i][j])
                if v and (pivot is None or v < pivot[0]):
                    pivot = (v, i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = a[top][top]
            done = True
            for i in range(top + 1, m):
                if a[i][top]:
                    q = a[i][top] // p
                    for j in range(top, n):
                        a[i][j] -= q * a[top][j]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        done = False
                        break
            if not done:
                continue
            for j in range(top + 1, n):
                if a[top][j]:
                    q = a[top][j] // p
                    for i in range(top, m):
                        a[i][j] -= q * a[i][top]
                    if a[top][j]:
                        for row in a:
                            row[top], row[j] = row[j], row[top]
                        done = False
                        break
            if done:
                break
        p = abs(a[top][top])
        # pull any non-multiple into the pivot row and redo this pivot
        culprit = None
        for i in range(top + 1, m):
            for j in range(top + 1, n):
                if a[i][j] % p:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            for j in range(top, n):
                a[top][j] += a[culprit][j]
            continue
        factors.append(p)
        top += 1
        if top >= m or top >= n:
            break
    return factors


def smith_normal_form(matrix) -> tuple[tuple, int]:
    """Nonzero invariant factors (divisibility chain) and rank of a matrix.

    Accepts a dense row-major sequence of sequences or a sparse dict
    (row, col) -> value.  Arithmetic is exact at arbitrary precision.
    """
    if isinstance(matrix, dict):
        entries = {k: int(v) for k, v in matrix.items() if v}
    else:
        entries = {
            (i, j): int(v)
            for i, row in enumerate(matrix)
            for j, v in enumerate(row)
            if v
        }
    units, core = _unit_pivot_sweep(entries)
    tail = _dense_smith(core)
    factors = [1] * units + tail
    # normalize the divisibility chain
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            g = gcd(factors[i], factors[j])
            factors[i], factors[j] = g, factors[i] // g * factors[j]
    return tuple(factors), len(factors)


def homology(cc: ChainComplex) -> HomologyResult:
    """Betti numbers and torsion coefficients per dimension."""
    dims = len(cc.sizes)
    ranks = [0] * (dims + 1)
    torsion_of_next = [[] for _ in range(dims + 1)]
    for n, mat in enumerate(cc.boundaries):
        factors, rank = smith_normal_form(mat)
        ranks[n + 1] = rank
        torsion_of_next[n] = [f for f in factors if f > 1]
    betti = [cc.sizes[n] - ranks[n] - ranks[n + 1] for n in range(dims)]
    if any(b < 0 for b in betti):
        raise NotAComplex("negative betti number; boundaries are inconsistent")
    return HomologyResult(betti, [torsion_of_next[n] for n in range(dims)])


def euler_characteristic(obj) -> int:
    """Alternating sum of basis sizes of a complex or chain counts of a nerve."""
    return obj.euler_characteristic()


def connected_components(s: SemiSimplicialSet) -> list:
    """Partition of the 0-chains under the 1-chain adjacency."""
    count = s.size(0)
    parent = list(range(count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for fs in s.faces[1] if len(s.faces) > 1 else []:
        ra, rb = find(fs[0]), find(fs[1])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list] = {}
    for i in range(count):
        groups.setdefault(find(i), []).append(i)
    return [groups[r] for r in sorted(groups)]
