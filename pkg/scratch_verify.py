"""Dev scratch: verify paper examples and derive fixture choices. Not shipped."""
import itertools

from bitableau import *
from bitableau.standardize import _vab_intermediates

# ---- Example 1: the 7-vertex tree ----
tree = parse_edge_list("7 6\n1 7\n2 4\n2 6\n2 7\n3 6\n4 5")
vab = build_vab(tree)
print("E1 VAB rows:", vab.rows)
assert vab.rows == ((7,), (4, 6, 7), (6,), (2, 5), (4,), (2, 3), (1, 2)), "paper VAB(G)"
assert degree_sequence(tree) == [1, 3, 1, 2, 1, 2, 2]

t12 = act_vab(vab, 1, 2)
print("E1 [(1,2)]VAB rows:", t12.rows)
assert t12.rows == ((4, 6, 7), (7,), (6,), (1, 5), (4,), (1, 3), (1, 2)), "paper [(1,2)]VAB(G)"

res = standardize_vab(tree)
print("E1 Std rows:", res.tableau.rows)
print("E1 trace:", [(s.phase, s.i, s.j) for s in res.trace])
expect_std = ((2, 3, 4), (1, 5), (1, 6), (1, 7), (2,), (3,), (4,))
assert res.tableau.rows == expect_std, "greedy reaches paper Std"
assert relabel(tree, res.vertex_perm).neighbors == expect_std, "perm consistency"

can = canonical_form_exhaustive(tree)
print("E1 oracle rows:", can.tableau.rows)
assert can.tableau.rows == expect_std, "oracle agrees with paper Std"
print("E1 oracle witness:", can.witness.mapping)

# greedy from EVERY labeling of the tree: how often does it reach the max?
stall = 0
for perm in itertools.permutations(range(1, 8)):
    g2 = relabel(tree, Permutation(perm))
    r2 = standardize_vab(g2)
    if r2.tableau.rows != expect_std:
        stall += 1
print(f"E1 tree: greedy stalls from {stall}/5040 labelings")

# ---- Example 2: cube-like G/H and twisted F ----
std_g_rows = [[2,3,4],[1,5,6],[1,5,7],[1,6,7],[2,3,8],[2,4,8],[3,4,8],[5,6,7]]
std_f_rows = [[2,3,4],[1,5,6],[1,7,8],[1,6,7],[2,7,8],[2,4,8],[3,4,5],[3,5,6]]

def graph_of_rows(rows):
    return Graph(len(rows), tuple(tuple(r) for r in rows))

G0 = graph_of_rows(std_g_rows)
F0 = graph_of_rows(std_f_rows)
print("G0 q:", G0.q, "F0 q:", F0.q)

canG = canonical_form_exhaustive(G0)
print("E2 oracle rows for cube:", canG.tableau.rows)
print("  equals printed Std(VAB(G))?", canG.tableau.rows == tuple(tuple(r) for r in std_g_rows))
canF = canonical_form_exhaustive(F0)
print("E2 oracle rows for F:", canF.tableau.rows)
print("  equals printed Std(VAB(F))?", canF.tableau.rows == tuple(tuple(r) for r in std_f_rows))

rG0 = standardize_vab(G0)
print("greedy(G0) == printed?", rG0.tableau.rows == tuple(tuple(r) for r in std_g_rows), "steps", rG0.steps)
rF0 = standardize_vab(F0)
print("greedy(F0) == printed?", rF0.tableau.rows == tuple(tuple(r) for r in std_f_rows), "steps", rF0.steps)

# how often does the greedy reach the true max from random relabelings?
import random
rng = random.Random(2024)
def stall_fraction(g, target_rows, tries=300):
    bad = []
    for _ in range(tries):
        m = list(range(1, 9)); rng.shuffle(m)
        sigma = Permutation(tuple(m))
        r = standardize_vab(relabel(g, sigma))
        if r.tableau.rows != target_rows:
            bad.append(sigma)
    return bad

badG = stall_fraction(G0, tuple(tuple(r) for r in std_g_rows))
print(f"E2 cube: greedy missed printed std from {len(badG)}/300 random relabelings")
badF = stall_fraction(F0, tuple(tuple(r) for r in std_f_rows))
print(f"E2 F: greedy missed printed std from {len(badF)}/300 random relabelings")

# candidate fixtures: reverse relabeling for H, a fixed scramble for G and F
rev = Permutation(tuple(range(8, 0, -1)))
H_fix = relabel(G0, rev)
rH = standardize_vab(H_fix)
print("H = reverse(G0): greedy == printed?", rH.tableau.rows == tuple(tuple(r) for r in std_g_rows))

scrG = Permutation.from_cycles(8, [(1, 3, 5, 7), (2, 4, 6, 8)])
G_fix = relabel(G0, scrG)
print("G = cyc(G0): greedy == printed?", standardize_vab(G_fix).tableau.rows == tuple(tuple(r) for r in std_g_rows))

scrF = Permutation.from_cycles(8, [(1, 5), (2, 6), (3, 7), (4, 8)])
F_fix = relabel(F0, scrF)
print("F = swap(F0): greedy == printed?", standardize_vab(F_fix).tableau.rows == tuple(tuple(r) for r in std_f_rows))

print("aut(G0) =", automorphism_count(G0))
print("aut(F0) =", automorphism_count(F0))
print("iso_exhaustive(G_fix, F_fix) none?", iso_exhaustive(G_fix, F_fix) is None)
w = iso_exhaustive(G_fix, H_fix)
print("iso_exhaustive(G_fix, H_fix):", w.mapping if w else None)

r = iso_check_vab(G_fix, H_fix)
print("iso_check_vab(G,H):", r.verdict, r.reason)
r = iso_check_vab(G_fix, F_fix)
print("iso_check_vab(G,F):", r.verdict, r.reason)

# IB route on the same fixtures
gi = iso_check_ib(label_edges(G_fix), label_edges(H_fix))
print("iso_check_ib(G,H):", gi.verdict, gi.reason)
fi = iso_check_ib(label_edges(G_fix), label_edges(F_fix))
print("iso_check_ib(G,F):", fi.verdict, fi.reason)

# ---- Example 3: the 10-vertex clique instance ----
e3 = parse_edge_list("10 11\n1 5\n1 6\n1 7\n1 8\n1 9\n1 10\n2 3\n2 4\n2 8\n3 4\n4 7")
v3 = build_vab(e3)
print("E3 VAB rows:", v3.rows)
assert v3.rows == ((5,6,7,8,9,10),(3,4,8),(2,4),(2,3,7),(1,),(1,),(1,4),(1,2),(1,),(1,)), "paper VAB(G,2) rows"
t14 = act_vab(v3, 1, 4)
print("E3 [(1,4)] rows:", t14.rows)
assert t14.rows == ((2,3,7),(1,3,8),(1,2),(5,6,7,8,9,10),(4,),(4,),(1,4),(2,4),(4,),(4,)), "paper [(1,4)]VAB(G,2)"

rv = build_restricted_vab(e3, 3)
rk = restricted_order_key(RestrictedVab(t14, 3) if False else build_restricted_vab(relabel(e3, Permutation.from_cycles(10, [(1,4)])), 3))
print("restricted key of [(1,4)] tableau: [1,1]=%d [2,1]=%d [3,1]=%d [2,2]=%d [3,3]=%d" % (
    rk.at(1,1), rk.at(2,1), rk.at(3,1), rk.at(2,2), rk.at(3,3)))

cres = find_k_clique(e3, 3)
print("E3 find_k_clique:", cres.verdict, cres.vertices, [(s.phase, s.i, s.j) for s in cres.standardization.trace])
assert cres.verdict == CliqueVerdict.FOUND and cres.vertices == (2, 3, 4)
assert leading_clique_check(cres.standardization.restricted)
print("E3 clique oracle:", clique_exhaustive(e3, 3))

# ---- IB small exhaustive maxima (independent oracle for standardize_ib) ----
def ib_exhaustive_max(g):
    """Max IB rank over all (sigma, tau) pairs; tiny graphs only."""
    elg = label_edges(g)
    best = None
    for sp in itertools.permutations(range(1, g.p + 1)):
        g2 = relabel_edge_labeled(elg, Permutation(sp))
        for tp in itertools.permutations(range(1, g.q + 1)):
            ib = build_ib(permute_edge_labels(g2, Permutation(tp)))
            r = ib_rank(ib)
            if best is None or r > best[0]:
                best = (r, ib.rows)
    return best[1]

p3 = parse_edge_list("3 2\n1 2\n2 3")
k3 = parse_edge_list("3 3\n1 2\n1 3\n2 3")
print("IB max P3:", ib_exhaustive_max(p3))
print("IB greedy P3:", standardize_ib(label_edges(p3)).tableau.rows)
print("IB max K3:", ib_exhaustive_max(k3))
print("IB greedy K3:", standardize_ib(label_edges(k3)).tableau.rows)

single = parse_edge_list("2 1\n1 2")
print("IB greedy K2:", standardize_ib(label_edges(single)).tableau.rows)
print("all checks passed")
