"""Graph, permutation, and I/O primitives consumed by every other module.

Vertices are labeled 1..p throughout; the 0-based indexing used to store
rows internally never leaks into any interface.  All types are immutable
values: every transformation returns a new object, so sharing across
threads is safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError, EdgeListParseError, Graph6ParseError

#: Largest vertex count for which exhaustive labeled-graph enumeration is
#: allowed by default (2^21 graphs at p = 7).
ENUMERATION_CAP = 7


@dataclass(frozen=True)
class Permutation:
    """A bijection of 1..n stored as an image table.

    ``mapping[i - 1]`` is the image of ``i``.  Composition follows function
    notation: ``a.compose(b)`` applies ``b`` first, then ``a``.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.mapping}")

    @property
    def size(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> "Permutation":
        if not (1 <= i <= n and 1 <= j <= n and i != j):
            raise ValueError(f"invalid transposition ({i} {j}) on 1..{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(tuple(images))

    @staticmethod
    def from_cycles(n: int, cycles) -> "Permutation":
        """Build a permutation of 1..n from disjoint cycles."""
        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            cycle = tuple(cycle)
            for x in cycle:
                if not 1 <= x <= n:
                    raise ValueError(f"cycle element {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"element {x} repeated across cycles")
                seen.add(x)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return Permutation(tuple(images))

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self after other: ``result(i) = self(other(i))``."""
        if self.size != other.size:
            raise ValueError("size mismatch in composition")
        return Permutation(tuple(self.mapping[x - 1] for x in other.mapping))

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for i, img in enumerate(self.mapping, start=1):
            images[img - 1] = i
        return Permutation(tuple(images))

    @property
    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.mapping, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint non-trivial cycles, each rotated to start at its minimum."""
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cycle))
        return tuple(out)

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..p.

    ``neighbors[v - 1]`` is the strictly increasing tuple of neighbors of
    vertex ``v``.  Symmetry and the no-self-loop rule are validated on
    construction, so any Graph in circulation satisfies them.
    """

    p: int
    neighbors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.neighbors) != self.p:
            raise ValueError("adjacency row count does not match p")
        for v, row in enumerate(self.neighbors, start=1):
            if list(row) != sorted(set(row)):
                raise ValueError(f"row {v} is not strictly increasing")
            for u in row:
                if not 1 <= u <= self.p:
                    raise ValueError(f"neighbor {u} of {v} outside 1..{self.p}")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in self.neighbors[u - 1]:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @staticmethod
    def from_edges(p: int, edges) -> "Graph":
        adj = [set() for _ in range(p)]
        for u, v in edges:
            if not (1 <= u <= p and 1 <= v <= p):
                raise ValueError(f"edge ({u},{v}) outside 1..{p}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1].add(v)
            adj[v - 1].add(u)
        return Graph(p, tuple(tuple(sorted(s)) for s in adj))

    @property
    def q(self) -> int:
        return sum(len(row) for row in self.neighbors) // 2

    def degree(self, v: int) -> int:
        return len(self.neighbors[v - 1])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u - 1]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (min, max) pairs in lexicographic order."""
        return tuple(
            (u, v)
            for u in range(1, self.p + 1)
            for v in self.neighbors[u - 1]
            if u < v
        )


@dataclass(frozen=True)
class EdgeLabeledGraph:
    """A graph whose q edges carry the labels 1..q bijectively.

    ``edge_of_label[e - 1]`` is the (min, max) endpoint pair of the edge
    labeled ``e``.
    """

    base: Graph
    edge_of_label: tuple[tuple[int, int], ...]

    def __post_init__(self):
        expected = set(self.base.edges())
        got = [tuple(sorted(e)) for e in self.edge_of_label]
        if len(got) != self.base.q or set(got) != expected or len(set(got)) != len(got):
            raise ValueError("edge labels are not a bijection onto the edge set")

    @property
    def q(self) -> int:
        return self.base.q

    def label_of(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        return self.edge_of_label.index(key) + 1

    def labels_at(self, v: int) -> tuple[int, ...]:
        """Sorted labels of the edges incident to vertex v."""
        return tuple(
            e
            for e, (a, b) in enumerate(self.edge_of_label, start=1)
            if v in (a, b)
        )


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: a "p q" header, then q "u v" lines.

    Rejects malformed lines, out-of-range vertices, self-loops, and
    duplicate edges, naming the offending line number.
    """
    lines = text.splitlines()
    if not lines:
        raise EdgeListParseError(1, "missing 'p q' header")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListParseError(1, f"expected 'p q', got {lines[0]!r}")
    try:
        p, q = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListParseError(1, f"expected integers 'p q', got {lines[0]!r}") from None
    if p < 0 or q < 0:
        raise EdgeListParseError(1, "p and q must be non-negative")

    seen: set[tuple[int, int]] = set()
    adj: list[set[int]] = [set() for _ in range(p)]
    body = lines[1:]
    for offset, raw in enumerate(body, start=2):
        if raw.strip() == "" and offset > q + 1:
            continue  # tolerate trailing blank lines only
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListParseError(offset, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(offset, f"expected integers 'u v', got {raw!r}") from None
        if not (1 <= u <= p and 1 <= v <= p):
            raise EdgeListParseError(offset, f"vertex out of range 1..{p}: {raw!r}")
        if u == v:
            raise EdgeListParseError(offset, f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(offset, f"duplicate edge {key[0]}-{key[1]}")
        seen.add(key)
        adj[u - 1].add(v)
        adj[v - 1].add(u)
    if len(seen) != q:
        raise EdgeListParseError(
            len(lines), f"header promised {q} edges, found {len(seen)}"
        )
    return Graph(p, tuple(tuple(sorted(s)) for s in adj))


def format_edge_list(g: Graph) -> str:
    """Render a graph in the edge-list format accepted by parse_edge_list."""
    lines = [f"{g.p} {g.q}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 line (n < 63).

    Layout: first byte is n + 63; the remaining bytes pack the upper
    triangle of the adjacency matrix column by column, six bits per byte,
    most significant bit first, zero-padded.  Vertices come out 1..n.
    """
    s = line.strip()
    if not s:
        raise Graph6ParseError("empty graph6 string")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) for c in s]
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6ParseError(f"invalid graph6 character {chr(c)!r}")
    n = data[0] - 63
    if n >= 63:
        raise Graph6ParseError("long-form graph6 (n >= 63) not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} data bytes for n={n}, got {len(data) - 1}"
        )
    bits = []
    for c in data[1:]:
        val = c - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6ParseError("nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph (p < 63) in short-form graph6."""
    if g.p >= 63:
        raise Graph6ParseError("short-form graph6 requires p < 63")
    bits = []
    for j in range(1, g.p):
        for i in range(j):
            bits.append(1 if g.has_edge(i + 1, j + 1) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.p + 63)]
    for at in range(0, len(bits), 6):
        val = 0
        for b in bits[at:at + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees d(v_1)..d(v_p) in vertex-label order (not sorted)."""
    return [len(row) for row in g.neighbors]


def relabel(g: Graph, sigma: Permutation) -> Graph:
    """Apply a vertex relabeling: edge {u,v} maps to {sigma(u), sigma(v)}."""
    if sigma.size != g.p:
        raise ValueError(f"permutation on 1..{sigma.size} does not fit p={g.p}")
    return Graph.from_edges(
        g.p, ((sigma(u), sigma(v)) for u, v in g.edges())
    )


def relabel_edge_labeled(elg: EdgeLabeledGraph, sigma: Permutation) -> EdgeLabeledGraph:
    """Relabel vertices; each edge keeps its label."""
    base = relabel(elg.base, sigma)
    moved = tuple(
        (min(sigma(a), sigma(b)), max(sigma(a), sigma(b)))
        for a, b in elg.edge_of_label
    )
    return EdgeLabeledGraph(base, moved)


def permute_edge_labels(elg: EdgeLabeledGraph, tau: Permutation) -> EdgeLabeledGraph:
    """Relabel edges: the edge labeled e becomes labeled tau(e)."""
    if tau.size != elg.q:
        raise ValueError(f"permutation on 1..{tau.size} does not fit q={elg.q}")
    moved = [None] * elg.q
    for e, pair in enumerate(elg.edge_of_label, start=1):
        moved[tau(e) - 1] = pair
    return EdgeLabeledGraph(elg.base, tuple(moved))


def label_edges(g: Graph) -> EdgeLabeledGraph:
    """Assign edge labels 1..q in lexicographic (min, max) endpoint order.

    The labeling rule is an arbitrary fixed bijection; the incidence
    standardization re-permutes labels anyway, so any deterministic choice
    serves.
    """
    return EdgeLabeledGraph(g, g.edges())


def enumerate_labeled_graphs(p: int, cap: int = ENUMERATION_CAP):
    """Yield all 2^(p(p-1)/2) labeled simple graphs on 1..p exactly once.

    The enumeration order is fixed: edge slots are the pairs (1,2), (1,3),
    ..., (1,p), (2,3), ... and graph number m has edge k present iff bit k
    of m is set.  Refuses p above the cap.
    """
    if p < 0:
        raise ValueError("vertex count must be non-negative")
    if p > cap:
        raise CapExceededError(
            f"enumeration of labeled graphs capped at p <= {cap}, got p = {p}"
        )
    slots = list(itertools.combinations(range(1, p + 1), 2))
    for mask in range(1 << len(slots)):
        edges = [slots[k] for k in range(len(slots)) if (mask >> k) & 1]
        yield Graph.from_edges(p, edges)
