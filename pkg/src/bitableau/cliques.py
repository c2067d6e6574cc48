"""Degree-restricted standardization for k-clique detection.

The restricted order key counts only the first k-1 entries of each of the
first k rows, so maximizing it tries to expose a clique on the labels
1..k as the leading k x (k-1) block of the tableau.  The climb may use
any transposition between vertices of degree >= k-1 (the nonincreasing
degree order is deliberately relaxed to that floor), and a found block is
always mapped back through the accumulated permutation and verified as
pairwise adjacent in the input before Found is reported.

A negative verdict is only certified when fewer than k vertices have
degree >= k-1; a clique the climb failed to surface yields Inconclusive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InternalCheckError
from .graphs import Graph, Permutation
from .standardize import TraceStep, _first_changed_row, _sort_transpositions, step_budget
from .tableaux import OrderKey, Vab, act_vab, build_vab


@dataclass(frozen=True)
class RestrictedVab:
    """A vertex adjacency bitableau with a (k-1)-column restriction marker."""

    vab: Vab
    k: int

    def __post_init__(self):
        if not 2 <= self.k <= self.vab.p:
            raise ValueError(f"clique target k={self.k} outside 2..p={self.vab.p}")

    @property
    def width(self) -> int:
        return self.k - 1

    def restriction(self) -> tuple[tuple[int, ...], ...]:
        """The first min(d(v_j), k-1) entries of every row."""
        return tuple(row[: self.width] for row in self.vab.rows)


@dataclass(frozen=True)
class RestrictedOrderKey:
    """Counts over m in 1..p and n in 1..k of restricted entries <= m.

    Only the first k-1 entries of each of the first k rows are counted;
    for n beyond k the counts are frozen at their n = k values, so the
    stored layout stops there.
    """

    counts: tuple[int, ...]
    num_values: int
    k: int

    def at(self, m: int, n: int) -> int:
        if not (1 <= m <= self.num_values and 1 <= n):
            raise ValueError(f"[{m},{n}] outside key layout")
        n = min(n, self.k)
        return self.counts[(n - 1) * self.num_values + m - 1]


def build_restricted_vab(g: Graph, k: int) -> RestrictedVab:
    """Wrap the adjacency tableau of g with restriction width k-1."""
    return RestrictedVab(build_vab(g), k)


def restricted_order_key(t: RestrictedVab) -> RestrictedOrderKey:
    p = t.vab.p
    counts = []
    running = [0] * (p + 1)
    for row in t.restriction()[: t.k]:
        for a in row:
            for m in range(a, p + 1):
                running[m] += 1
        counts.extend(running[1:])
    return RestrictedOrderKey(tuple(counts), p, t.k)


def compare_restricted_keys(a: RestrictedOrderKey, b: RestrictedOrderKey):
    from .tableaux import Ordering

    if len(a.counts) != len(b.counts):
        raise ValueError("restricted key length mismatch")
    if a.counts < b.counts:
        return Ordering.LESS
    if a.counts > b.counts:
        return Ordering.GREATER
    return Ordering.EQUAL


def restricted_rank(t: RestrictedVab) -> tuple[tuple[int, ...], ...]:
    """Rank tuple ordered identically to the restricted order key."""
    return tuple(tuple(-a for a in row) for row in t.restriction()[: t.k])


def leading_clique_check(t: RestrictedVab) -> bool:
    """True iff rows 1..k start with exactly {1..k} minus the row label.

    That leading k x (k-1) block is the standard tableau of a k-clique;
    by adjacency symmetry its presence certifies pairwise adjacency of
    the vertices labeled 1..k.
    """
    k = t.k
    for j in range(1, k + 1):
        row = t.vab.rows[j - 1]
        if len(row) < k - 1:
            return False
        want = set(range(1, k + 1)) - {j}
        if set(row[: k - 1]) != want:
            return False
    return True


@dataclass(frozen=True)
class RestrictedStandardization:
    """Outcome of the restricted climb.

    ``feasible`` is False when fewer than k vertices have degree >= k-1,
    in which case no k-clique can exist and the climb is skipped.
    """

    restricted: RestrictedVab
    vertex_perm: Permutation
    trace: tuple[TraceStep, ...]
    budget: int
    feasible: bool

    @property
    def steps(self) -> int:
        return len(self.trace)

    @property
    def budget_exceeded(self) -> bool:
        return self.steps > self.budget


def restricted_standardize(g: Graph, k: int) -> RestrictedStandardization:
    """Degree-sort, then hill-climb the restricted order key.

    Transpositions are allowed between any two positions currently holding
    vertices of degree >= k-1 (after the sort these are positions 1..t and
    stay so).  Determinism rules match standardize_vab: best strict
    improvement, lexicographically smallest pair on ties.
    """
    if not 2 <= k <= g.p:
        raise ValueError(f"clique target k={k} outside 2..p={g.p}")
    p = g.p
    tab = build_vab(g)
    sigma = Permutation.identity(p)
    trace: list[TraceStep] = []

    degrees = [len(row) for row in g.neighbors]
    for i, j in _sort_transpositions(degrees):
        tab = act_vab(tab, i, j)
        sigma = Permutation.transposition(p, i, j).compose(sigma)
        trace.append(TraceStep("degree-sort", i, j))

    eligible = sum(1 for d in degrees if d >= k - 1)
    feasible = eligible >= k
    if feasible:
        pairs = [
            (i, j)
            for i in range(1, eligible + 1)
            for j in range(i + 1, eligible + 1)
        ]
        cur = RestrictedVab(tab, k)
        cur_rank = restricted_rank(cur)
        while True:
            best_rank = cur_rank
            best = None
            for i, j in pairs:
                cand = RestrictedVab(act_vab(cur.vab, i, j), k)
                rank = restricted_rank(cand)
                if rank > best_rank:
                    best_rank, best = rank, (i, j, cand)
            if best is None:
                break
            i, j, cand = best
            row = _first_changed_row(cur.restriction(), cand.restriction())
            trace.append(TraceStep(f"row {row}", i, j))
            sigma = Permutation.transposition(p, i, j).compose(sigma)
            cur, cur_rank = cand, best_rank
        tab = cur.vab

    return RestrictedStandardization(
        restricted=RestrictedVab(tab, k),
        vertex_perm=sigma,
        trace=tuple(trace),
        budget=step_budget(p),
        feasible=feasible,
    )


def render_restricted(t: RestrictedVab) -> str:
    """Rows as ``j | a1 .. a_{k-1} | rest``; the second bar marks the cut."""
    out = []
    for j, row in enumerate(t.vab.rows, start=1):
        head = " ".join(str(a) for a in row[: t.width])
        tail = " ".join(str(a) for a in row[t.width:])
        line = f"{j} | {head}"
        if tail:
            line += f" | {tail}"
        out.append(line.rstrip())
    return "\n".join(out)


class CliqueVerdict(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CliqueResult:
    verdict: CliqueVerdict
    vertices: tuple[int, ...] | None
    reason: str
    standardization: RestrictedStandardization

    @property
    def exit_code(self) -> int:
        return {
            CliqueVerdict.FOUND: 0,
            CliqueVerdict.NOT_FOUND: 1,
            CliqueVerdict.INCONCLUSIVE: 2,
        }[self.verdict]


def find_k_clique(g: Graph, k: int) -> CliqueResult:
    """Search for a k-clique via restricted standardization.

    Found verdicts carry the clique in original vertex labels, verified
    pairwise adjacent before being returned.  NOT_FOUND is only produced
    by the degree filter (a k-clique needs k vertices of degree >= k-1),
    which is always correct; a failed leading-block check is otherwise
    Inconclusive since the climb may simply have missed the clique.
    """
    res = restricted_standardize(g, k)
    if not res.feasible:
        return CliqueResult(
            CliqueVerdict.NOT_FOUND,
            None,
            f"fewer than {k} vertices of degree >= {k - 1}",
            res,
        )
    if leading_clique_check(res.restricted):
        inv = res.vertex_perm.inverse()
        members = tuple(sorted(inv(x) for x in range(1, k + 1)))
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                if not g.has_edge(members[a], members[b]):
                    raise InternalCheckError(
                        "clique witness failed adjacency verification"
                    )
        return CliqueResult(
            CliqueVerdict.FOUND, members, "leading clique block present", res
        )
    return CliqueResult(
        CliqueVerdict.INCONCLUSIVE,
        None,
        "no leading clique block in the greedy restricted form",
        res,
    )
