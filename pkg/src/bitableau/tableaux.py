"""Bitableaux, their order keys, and the permutation actions on them.

A bitableau pairs an implicit left column (always the labels 1..p in
order) with a right tableau of per-vertex rows: neighbor labels for the
vertex-adjacency flavor (Vab), incident-edge labels for the incidence
flavor (Ib).  Rows are always kept sorted ascending so that tableau
equality is plain structural comparison.

The order key of a tableau is the flattened sequence of counts
``[m, n] = number of right-tableau entries <= m in the first n rows``,
laid out with n as the major index.  Comparing keys lexicographically
induces a total order on the labeled copies of a graph; the labeled copy
with the largest key is the canonical ("standard") one.

Because [m, n] is a 2-D prefix sum of the adjacency (or incidence)
matrix, comparing two keys is equivalent to comparing the tableaux row by
row from the top: the first row that differs decides, and a row beats
another if its first differing entry is smaller, or if it strictly
extends the other.  ``vab_rank``/``ib_rank`` encode each row as a tuple
of negated entries so that plain tuple comparison realizes exactly this
order; the equivalence with materialized keys is property-tested.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import EdgeLabeledGraph, Graph, Permutation


@dataclass(frozen=True)
class Vab:
    """Vertex adjacency bitableau: row j lists the neighbors of vertex j."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.p:
            raise ValueError("row count does not match p")
        for j, row in enumerate(self.rows, start=1):
            if list(row) != sorted(set(row)):
                raise ValueError(f"row {j} is not strictly increasing")
            for a in row:
                if not 1 <= a <= self.p or a == j:
                    raise ValueError(f"entry {a} invalid in row {j}")
                if j not in self.rows[a - 1]:
                    raise ValueError(f"entry {a} in row {j} lacks its mirror")

    @property
    def q(self) -> int:
        return sum(len(r) for r in self.rows) // 2


@dataclass(frozen=True)
class Ib:
    """Incidence bitableau: row j lists the labels of edges at vertex j."""

    p: int
    q: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.p:
            raise ValueError("row count does not match p")
        counts = [0] * self.q
        for j, row in enumerate(self.rows, start=1):
            if list(row) != sorted(set(row)):
                raise ValueError(f"row {j} is not strictly increasing")
            for e in row:
                if not 1 <= e <= self.q:
                    raise ValueError(f"edge label {e} invalid in row {j}")
                counts[e - 1] += 1
        if any(c != 2 for c in counts):
            raise ValueError("every edge label must appear in exactly two rows")


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class OrderKey:
    """The count sequence Seq([m,n]) used as a lexicographic order key.

    ``counts`` has length num_values * num_rows, laid out n-major:
    [1,1], [2,1], ..., [num_values,1], [1,2], ...  For a Vab the values
    range over 1..p; for an Ib over 1..q.
    """

    counts: tuple[int, ...]
    num_values: int
    num_rows: int

    def __post_init__(self):
        if len(self.counts) != self.num_values * self.num_rows:
            raise ValueError("count sequence length does not match layout")

    def at(self, m: int, n: int) -> int:
        """The count [m, n]: entries <= m within the first n rows."""
        if not (1 <= m <= self.num_values and 1 <= n <= self.num_rows):
            raise ValueError(f"[{m},{n}] outside key layout")
        return self.counts[(n - 1) * self.num_values + m - 1]


def build_vab(g: Graph) -> Vab:
    """Row j of the vertex adjacency bitableau is the sorted neighbors of j."""
    return Vab(g.p, g.neighbors)


def build_ib(elg: EdgeLabeledGraph) -> Ib:
    """Row j of the incidence bitableau is the sorted edge labels at j."""
    rows = tuple(elg.labels_at(v) for v in range(1, elg.base.p + 1))
    return Ib(elg.base.p, elg.q, rows)


def _prefix_count_key(rows, num_values: int) -> tuple[int, ...]:
    counts = []
    running = [0] * (num_values + 1)  # running[m] = entries <= m so far
    for row in rows:
        for a in row:
            for m in range(a, num_values + 1):
                running[m] += 1
        counts.extend(running[1:])
    return tuple(counts)


def order_key_vab(t: Vab) -> OrderKey:
    """Materialize the key: [m,n] counts entries <= m in rows 1..n, m,n <= p."""
    return OrderKey(_prefix_count_key(t.rows, t.p), t.p, t.p)


def order_key_ib(t: Ib) -> OrderKey:
    """Same counting for an incidence tableau, with m ranging over 1..q."""
    return OrderKey(_prefix_count_key(t.rows, t.q), t.q, t.p)


def compare_keys(a: OrderKey, b: OrderKey) -> Ordering:
    """Lexicographic comparison; GREATER means larger [m,n]-order."""
    if len(a.counts) != len(b.counts):
        raise ValueError(
            f"key length mismatch: {len(a.counts)} vs {len(b.counts)}"
        )
    if a.counts < b.counts:
        return Ordering.LESS
    if a.counts > b.counts:
        return Ordering.GREATER
    return Ordering.EQUAL


def vab_rank(t: Vab) -> tuple[tuple[int, ...], ...]:
    """A tuple whose natural ordering matches the [m,n]-order of Vab keys.

    Row-by-row negated entries: a row with a smaller entry at the first
    difference, or strictly extending the other, yields the greater rank,
    exactly as the prefix-count key does.
    """
    return tuple(tuple(-a for a in row) for row in t.rows)


def ib_rank(t: Ib) -> tuple[tuple[int, ...], ...]:
    """Rank tuple for Ib tableaux; same ordering equivalence as vab_rank."""
    return tuple(tuple(-a for a in row) for row in t.rows)


def _rewrite_sorted(row, perm: Permutation) -> tuple[int, ...]:
    return tuple(sorted(perm(a) for a in row))


def act_vab_perm(t: Vab, sigma: Permutation) -> Vab:
    """Act by an arbitrary permutation: rows moved and entries rewritten.

    Row x of the result is row sigma^(-1)(x) of the input with every entry
    e rewritten to sigma(e); this is exactly the tableau of the relabeled
    graph, so actions compose the way relabelings do.
    """
    if sigma.size != t.p:
        raise ValueError(f"permutation on 1..{sigma.size} does not fit p={t.p}")
    rows = [()] * t.p
    for x in range(1, t.p + 1):
        rows[sigma(x) - 1] = _rewrite_sorted(t.rows[x - 1], sigma)
    return Vab(t.p, tuple(rows))


def act_vab(t: Vab, i: int, j: int) -> Vab:
    """Transposition action: swap rows i and j, rewrite entries i <-> j."""
    return act_vab_perm(t, Permutation.transposition(t.p, i, j))


def act_vab_cycle(t: Vab, cycle) -> Vab:
    """Cycle action (i_1 .. i_r): equals composing (i_1 i_2), (i_1 i_3), ...

    The single-element cycle is the identity.
    """
    cycle = tuple(cycle)
    if len(set(cycle)) != len(cycle):
        raise ValueError(f"repeated index in cycle {cycle}")
    if len(cycle) <= 1:
        if cycle and not 1 <= cycle[0] <= t.p:
            raise ValueError(f"cycle element {cycle[0]} outside 1..{t.p}")
        return t
    return act_vab_perm(t, Permutation.from_cycles(t.p, [cycle]))


def act_ib_left(t: Ib, sigma: Permutation) -> Ib:
    """Vertex-side action on an incidence tableau: rows move, entries stay."""
    if sigma.size != t.p:
        raise ValueError(f"permutation on 1..{sigma.size} does not fit p={t.p}")
    rows = [()] * t.p
    for x in range(1, t.p + 1):
        rows[sigma(x) - 1] = t.rows[x - 1]
    return Ib(t.p, t.q, tuple(rows))


def act_ib_right(t: Ib, tau: Permutation) -> Ib:
    """Edge-side action: every entry e becomes tau(e); rows stay in place."""
    if tau.size != t.q:
        raise ValueError(f"permutation on 1..{tau.size} does not fit q={t.q}")
    return Ib(t.p, t.q, tuple(_rewrite_sorted(row, tau) for row in t.rows))


def render_rows(rows) -> str:
    """One line per row in the report format: ``j | a1 a2 ... ak``."""
    out = []
    for j, row in enumerate(rows, start=1):
        entries = " ".join(str(a) for a in row)
        out.append(f"{j} | {entries}".rstrip())
    return "\n".join(out)


def render_vab(t: Vab) -> str:
    return render_rows(t.rows)


def render_ib(t: Ib) -> str:
    return render_rows(t.rows)
