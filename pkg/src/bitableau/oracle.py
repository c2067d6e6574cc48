"""Exhaustive ground-truth algorithms.

Everything here is deliberately naive: canonical forms by maximizing over
all p! relabelings, isomorphism by backtracking permutation search,
automorphisms and clique search by direct enumeration.  These are the
trusted references the greedy procedures are measured against, so clarity
and refusal-over-degradation outrank speed.  Caps are explicit; an
operation that would exceed its cap raises CapExceededError instead of
silently shrinking its search.

The canonical form maximizes exactly the same [m,n]-order the greedy
targets (via the rank encoding shared with the tableaux module), so any
greedy/oracle mismatch is attributable to the algorithm, not to a
different order definition.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import CapExceededError
from .graphs import Graph, Permutation
from .tableaux import OrderKey, Vab, order_key_vab

#: Largest vertex count for factorial-scale searches (8! = 40320).
DEFAULT_MAX_VERTICES = 8
#: Largest number of k-subsets clique_exhaustive will scan.
DEFAULT_MAX_SUBSETS = 2_000_000


def _check_vertex_cap(p: int, cap: int, what: str):
    if p > cap:
        raise CapExceededError(f"{what} capped at p <= {cap}, got p = {p}")


def _relabeled_rows(neighbors, perm: tuple[int, ...]):
    """Rows of the tableau after relabeling by perm (old label -> new)."""
    p = len(neighbors)
    rows = [()] * p
    for old in range(p):
        rows[perm[old] - 1] = tuple(sorted(perm[u - 1] for u in neighbors[old]))
    return tuple(rows)


@dataclass(frozen=True)
class CanonicalForm:
    """The maximum-key tableau over all relabelings, with one witness.

    The witness is the lexicographically smallest permutation achieving
    the maximum; relabeling the input by it produces ``tableau``.
    """

    tableau: Vab
    key: OrderKey
    witness: Permutation


def canonical_form_exhaustive(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> CanonicalForm:
    """Maximize the [m,n]-order over all p! relabelings of g."""
    _check_vertex_cap(g.p, max_vertices, "exhaustive canonical form")
    best_rank = None
    best_rows = None
    best_perm = None
    for perm in itertools.permutations(range(1, g.p + 1)):
        rows = _relabeled_rows(g.neighbors, perm)
        rank = tuple(tuple(-a for a in row) for row in rows)
        if best_rank is None or rank > best_rank:
            best_rank, best_rows, best_perm = rank, rows, perm
    tableau = Vab(g.p, best_rows)
    return CanonicalForm(
        tableau=tableau,
        key=order_key_vab(tableau),
        witness=Permutation(best_perm),
    )


def iso_exhaustive(
    g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Permutation | None:
    """Find some adjacency-preserving bijection g -> h, or None.

    Backtracking over images of 1, 2, ... in ascending order, pruned by
    degree compatibility and adjacency consistency with the already
    assigned prefix; the first complete assignment is therefore the
    lexicographically smallest witness.
    """
    _check_vertex_cap(max(g.p, h.p), max_vertices, "exhaustive isomorphism search")
    if g.p != h.p or g.q != h.q:
        return None
    degs_g = [len(r) for r in g.neighbors]
    degs_h = [len(r) for r in h.neighbors]
    if sorted(degs_g) != sorted(degs_h):
        return None
    p = g.p
    h_sets = [frozenset(r) for r in h.neighbors]
    image = [0] * (p + 1)
    used = [False] * (p + 1)

    def extend(v: int) -> bool:
        if v > p:
            return True
        for w in range(1, p + 1):
            if used[w] or degs_h[w - 1] != degs_g[v - 1]:
                continue
            ok = True
            for u in g.neighbors[v - 1]:
                if u < v and image[u] not in h_sets[w - 1]:
                    ok = False
                    break
            if not ok:
                continue
            # earlier non-neighbors must stay non-neighbors
            for u in range(1, v):
                if u not in g.neighbors[v - 1] and image[u] in h_sets[w - 1]:
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
            image[v] = 0
        return False

    if extend(1):
        return Permutation(tuple(image[1:]))
    return None


def automorphism_count(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Count permutations mapping g onto itself."""
    _check_vertex_cap(g.p, max_vertices, "automorphism count")
    g_sets = [frozenset(r) for r in g.neighbors]
    count = 0
    for perm in itertools.permutations(range(1, g.p + 1)):
        if all(
            perm[v - 1] in g_sets[perm[u - 1] - 1]
            for u in range(1, g.p + 1)
            for v in g.neighbors[u - 1]
            if u < v
        ):
            count += 1
    return count


def distinct_labeled_copies(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Count distinct adjacency structures among all p! relabelings.

    Equals p! / |Aut(g)| by the orbit-stabilizer theorem; that identity
    is asserted exhaustively in the tests.
    """
    _check_vertex_cap(g.p, max_vertices, "labeled copy count")
    seen = set()
    for perm in itertools.permutations(range(1, g.p + 1)):
        seen.add(_relabeled_rows(g.neighbors, perm))
    return len(seen)


def clique_exhaustive(
    g: Graph, k: int, max_subsets: int = DEFAULT_MAX_SUBSETS
) -> tuple[int, ...] | None:
    """The lexicographically smallest pairwise-adjacent k-subset, or None."""
    if not 2 <= k <= g.p:
        raise ValueError(f"clique target k={k} outside 2..p={g.p}")
    work = math.comb(g.p, k)
    if work > max_subsets:
        raise CapExceededError(
            f"clique enumeration capped at {max_subsets} subsets, needs {work}"
        )
    sets = [frozenset(r) for r in g.neighbors]
    for subset in itertools.combinations(range(1, g.p + 1), k):
        if all(
            b in sets[a - 1] for a, b in itertools.combinations(subset, 2)
        ):
            return subset
    return None
