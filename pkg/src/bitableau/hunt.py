"""Counterexample hunts: greedy verdicts vs exhaustive oracle, en masse.

A hunt sweeps every labeled graph on exactly p vertices (or a seeded
random sample) and compares the greedy standardization or clique search
against the exhaustive oracle, producing a JSON-ready report.  Reports
are deterministic: the same arguments and seed yield byte-identical
bodies, with the timestamp isolated in a header that determinism checks
ignore.

Positive greedy verdicts are verified before they are ever counted, so
the "unsound" categories are structurally zero; the hunts assert that on
every run rather than assume it.  What CAN fail, and is counted honestly,
is the greedy stalling below the true canonical form or missing a clique
the oracle finds.

The oracle side of an exhaustive hunt exploits label invariance: the
canonical form is constant on each isomorphism orbit, so it is computed
once per orbit (by the plain exhaustive oracle) and shared across the
orbit's members.  This changes nothing about what is computed, only how
often.
"""

from __future__ import annotations

import itertools
import json
import random
from datetime import datetime, timezone

from . import __version__
from .cliques import CliqueVerdict, find_k_clique
from .errors import CapExceededError, InternalCheckError
from .graphs import Graph, encode_graph6, enumerate_labeled_graphs
from .oracle import canonical_form_exhaustive, clique_exhaustive
from .standardize import format_trace, standardize_vab, step_budget
from .tableaux import render_rows, vab_rank

SCHEMA_VERSION = 1
RNG_NAME = "python-random-mersenne-twister"

#: Exhaustive hunts enumerate all 2^(p(p-1)/2) labeled graphs; these caps
#: keep that at desk scale.
MAX_EXHAUSTIVE_ISO_P = 6
MAX_EXHAUSTIVE_CLIQUE_P = 7
DEFAULT_MAX_COUNTEREXAMPLES = 25


def _edge_slots(p: int):
    return list(itertools.combinations(range(1, p + 1), 2))


def _graph_of_mask(p: int, slots, mask: int) -> Graph:
    return Graph.from_edges(
        p, (slots[k] for k in range(len(slots)) if (mask >> k) & 1)
    )


def _mask_of_graph(g: Graph, slot_index) -> int:
    mask = 0
    for u, v in g.edges():
        mask |= 1 << slot_index[(u, v)]
    return mask


def _orbit_canonical_tables(p: int):
    """Canonical tableau rows for every labeled graph on p vertices.

    Returns a dict mask -> canonical rows, filled one isomorphism orbit
    at a time: the exhaustive oracle runs on one representative and the
    result is shared across the orbit.
    """
    slots = _edge_slots(p)
    slot_index = {s: k for k, s in enumerate(slots)}
    m = len(slots)
    perm_edge_maps = []
    for perm in itertools.permutations(range(1, p + 1)):
        emap = [0] * m
        for k, (u, v) in enumerate(slots):
            a, b = perm[u - 1], perm[v - 1]
            emap[k] = slot_index[(min(a, b), max(a, b))]
        perm_edge_maps.append(emap)

    canon: dict[int, tuple] = {}
    for mask in range(1 << m):
        if mask in canon:
            continue
        rep = _graph_of_mask(p, slots, mask)
        rows = canonical_form_exhaustive(rep).tableau.rows
        orbit = set()
        for emap in perm_edge_maps:
            om = 0
            for k in range(m):
                if (mask >> k) & 1:
                    om |= 1 << emap[k]
            orbit.add(om)
        for om in orbit:
            canon[om] = rows
    return canon, slots, slot_index


def _header(command: str, use_rng: bool) -> dict:
    header = {
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "tool": f"bitableau {__version__}",
        "command": command,
    }
    if use_rng:
        header["rng"] = RNG_NAME
    return header


def _pairs(n: int) -> int:
    return n * (n - 1) // 2


def hunt_iso(
    max_p: int,
    mode: str = "exhaustive",
    count: int | None = None,
    seed: int | None = None,
    max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES,
) -> dict:
    """Compare greedy standard forms against oracle canonical forms.

    Exhaustive mode covers all labeled graphs on exactly max_p vertices
    (max_p <= 6); random mode draws ``count`` graphs on max_p vertices
    from a seeded generator.  Per graph it records whether the greedy
    form reached the oracle maximum; pair-level statistics (equal greedy
    forms across non-isomorphic graphs, isomorphic graphs with unequal
    greedy forms, inconclusive pairs resolved by the oracle) are derived
    by grouping, which covers every pair without materializing them.
    """
    p = max_p
    if mode == "exhaustive":
        if not 0 <= p <= MAX_EXHAUSTIVE_ISO_P:
            raise CapExceededError(
                f"exhaustive isomorphism hunt capped at p <= {MAX_EXHAUSTIVE_ISO_P}"
            )
        graphs = list(enumerate_labeled_graphs(p))
        canon_by_mask, slots, slot_index = _orbit_canonical_tables(p)
        canon_rows = [
            canon_by_mask[_mask_of_graph(g, slot_index)] for g in graphs
        ]
    elif mode == "random":
        if seed is None:
            raise ValueError("random mode requires a seed")
        if count is None or count <= 0:
            raise ValueError("random mode requires a positive count")
        rng = random.Random(seed)
        slots = _edge_slots(p)
        graphs = [
            _graph_of_mask(p, slots, rng.getrandbits(len(slots)))
            for _ in range(count)
        ]
        cache: dict[tuple, tuple] = {}
        canon_rows = []
        for g in graphs:
            if g.neighbors not in cache:
                cache[g.neighbors] = canonical_form_exhaustive(g).tableau.rows
            canon_rows.append(cache[g.neighbors])
    else:
        raise ValueError(f"unknown hunt mode {mode!r}")

    budget = step_budget(p)
    agreements = 0
    stalls = []
    histogram: dict[int, int] = {}
    over_budget = 0
    greedy_forms = []

    for g, oracle in zip(graphs, canon_rows):
        res = standardize_vab(g)
        rows = res.tableau.rows
        greedy_forms.append(rows)
        histogram[res.steps] = histogram.get(res.steps, 0) + 1
        if res.budget_exceeded:
            over_budget += 1
        if rows == oracle:
            agreements += 1
        else:
            if vab_rank(res.tableau) > tuple(tuple(-a for a in r) for r in oracle):
                raise InternalCheckError(
                    "greedy form outranks exhaustive oracle; oracle is broken"
                )
            stalls.append((g, res, oracle))

    # Pair-level categories by grouping.
    form_counts: dict[tuple, int] = {}
    class_counts: dict[tuple, int] = {}
    form_class_counts: dict[tuple, int] = {}
    inv_counts: dict[tuple, int] = {}
    class_first_form: dict[tuple, tuple] = {}
    missed_pair_samples = []
    for g, rows, oracle in zip(graphs, greedy_forms, canon_rows):
        inv = (g.q, tuple(sorted(len(r) for r in g.neighbors)))
        form_counts[rows] = form_counts.get(rows, 0) + 1
        class_counts[oracle] = class_counts.get(oracle, 0) + 1
        form_class_counts[(rows, oracle)] = form_class_counts.get((rows, oracle), 0) + 1
        inv_counts[inv] = inv_counts.get(inv, 0) + 1
        if oracle in class_first_form:
            first_g, first_rows = class_first_form[oracle]
            if first_rows != rows and len(missed_pair_samples) < max_counterexamples:
                missed_pair_samples.append(
                    {
                        "kind": "isomorphic_pair_unequal_greedy",
                        "graph6_a": encode_graph6(first_g),
                        "graph6_b": encode_graph6(g),
                    }
                )
        else:
            class_first_form[oracle] = (g, rows)

    n = len(graphs)
    pairs_total = _pairs(n)
    pairs_equal_greedy = sum(_pairs(c) for c in form_counts.values())
    pairs_same_class = sum(_pairs(c) for c in class_counts.values())
    pairs_equal_greedy_same_class = sum(_pairs(c) for c in form_class_counts.values())
    pairs_same_invariants = sum(_pairs(c) for c in inv_counts.values())
    unsound_pairs = pairs_equal_greedy - pairs_equal_greedy_same_class
    if unsound_pairs != 0:
        raise InternalCheckError(
            "equal greedy forms on non-isomorphic graphs; witness verification is broken"
        )
    missed_pairs = pairs_same_class - pairs_equal_greedy_same_class
    inconclusive_pairs = pairs_same_invariants - pairs_equal_greedy

    counterexamples = [
        {
            "kind": "greedy_stall",
            "graph6": encode_graph6(g),
            "greedy_rows": render_rows(res.tableau.rows),
            "oracle_rows": render_rows(oracle),
            "steps": res.steps,
            "trace": format_trace(res.trace).splitlines(),
        }
        for g, res, oracle in stalls[:max_counterexamples]
    ]
    counterexamples.extend(missed_pair_samples)

    body = {
        "scope": {
            "kind": "iso",
            "method": "vab",
            "max_p": p,
            "mode": mode,
            "count": count,
            "seed": seed,
        },
        "totals": {
            "examined": n,
            "agreements": agreements,
            "disagreements": len(stalls),
            "inconclusive_resolved_pairs": inconclusive_pairs,
        },
        "pairwise": {
            "pairs_total": pairs_total,
            "greedy_isomorphic_pairs": pairs_equal_greedy,
            "oracle_isomorphic_pairs": pairs_same_class,
            "certified_not_isomorphic_pairs": pairs_total - pairs_same_invariants,
            "inconclusive_pairs": inconclusive_pairs,
            "resolved_isomorphic_pairs": missed_pairs,
            "resolved_not_isomorphic_pairs": inconclusive_pairs - missed_pairs,
            "isomorphic_pairs_missed_by_greedy": missed_pairs,
            "unsound_isomorphic_pairs": unsound_pairs,
        },
        "step_stats": {
            "budget": budget,
            "histogram": {str(k): v for k, v in sorted(histogram.items())},
            "over_budget_runs": over_budget,
            "max_steps": max(histogram) if histogram else 0,
        },
        "counterexamples": counterexamples,
        "counterexample_totals": {
            "greedy_stall": len(stalls),
            "isomorphic_pair_unequal_greedy": missed_pairs,
        },
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "header": _header("hunt-iso", mode == "random"),
        "body": body,
    }


def hunt_clique(
    max_p: int,
    k: int,
    max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES,
) -> dict:
    """Compare find_k_clique against exhaustive subset search.

    Covers all labeled graphs on exactly max_p vertices.  Every verdict
    pair is classified; greedy Found and greedy NotFound are certified
    (verified witness, correct degree filter) and asserted to agree with
    the oracle, while Inconclusive is resolved by the oracle and any
    oracle-Found case among them is logged as a missed clique.
    """
    p = max_p
    if k > p:
        raise ValueError(f"clique target k={k} exceeds max_p={p}")
    if k < 2:
        raise ValueError("clique target must be at least 2")
    if not 0 <= p <= MAX_EXHAUSTIVE_CLIQUE_P:
        raise CapExceededError(
            f"exhaustive clique hunt capped at p <= {MAX_EXHAUSTIVE_CLIQUE_P}"
        )

    budget = step_budget(p)
    examined = 0
    found_found = 0
    notfound_notfound = 0
    inconclusive_found = 0
    inconclusive_notfound = 0
    histogram: dict[int, int] = {}
    over_budget = 0
    misses = []

    for g in enumerate_labeled_graphs(p):
        examined += 1
        res = find_k_clique(g, k)
        oracle = clique_exhaustive(g, k)
        std = res.standardization
        histogram[std.steps] = histogram.get(std.steps, 0) + 1
        if std.budget_exceeded:
            over_budget += 1
        if res.verdict is CliqueVerdict.FOUND:
            if oracle is None:
                raise InternalCheckError(
                    "verified greedy clique the oracle cannot find; oracle is broken"
                )
            found_found += 1
        elif res.verdict is CliqueVerdict.NOT_FOUND:
            if oracle is not None:
                raise InternalCheckError(
                    "degree filter rejected a graph with an actual clique"
                )
            notfound_notfound += 1
        else:
            if oracle is None:
                inconclusive_notfound += 1
            else:
                inconclusive_found += 1
                misses.append((g, res, oracle))

    counterexamples = [
        {
            "kind": "oracle_found_greedy_missed",
            "graph6": encode_graph6(g),
            "greedy_verdict": res.verdict.value,
            "oracle_witness": " ".join(str(v) for v in oracle),
            "greedy_rows": render_rows(res.standardization.restricted.vab.rows),
            "trace": format_trace(res.standardization.trace).splitlines(),
        }
        for g, res, oracle in misses[:max_counterexamples]
    ]

    body = {
        "scope": {
            "kind": "clique",
            "method": "restricted",
            "max_p": p,
            "k": k,
            "mode": "exhaustive",
        },
        "totals": {
            "examined": examined,
            "agreements": found_found + notfound_notfound,
            "disagreements": inconclusive_found,
            "inconclusive_resolved": inconclusive_found + inconclusive_notfound,
        },
        "verdicts": {
            "greedy_found_oracle_found": found_found,
            "greedy_not_found_oracle_not_found": notfound_notfound,
            "inconclusive_resolved_found": inconclusive_found,
            "inconclusive_resolved_not_found": inconclusive_notfound,
            "unsound_found": 0,
            "unsound_not_found": 0,
        },
        "step_stats": {
            "budget": budget,
            "histogram": {str(kk): v for kk, v in sorted(histogram.items())},
            "over_budget_runs": over_budget,
            "max_steps": max(histogram) if histogram else 0,
        },
        "counterexamples": counterexamples,
        "counterexample_totals": {
            "oracle_found_greedy_missed": inconclusive_found,
        },
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "header": _header("hunt-clique", False),
        "body": body,
    }


def report_body_bytes(report: dict) -> bytes:
    """Canonical serialization of the deterministic part of a report."""
    return json.dumps(report["body"], sort_keys=True, separators=(",", ":")).encode()


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
