"""
Subgroup lattices and Moebius values
====================================

The inclusion-exclusion over generated subgroups needs the Moebius value of
each subgroup relative to the whole group.  When an automorphism is fixed,
only the subgroups it maps to themselves take part.
"""

from cayley_census import automorphism_group, build_group, invariant_subgroups, subgroup_lattice

G = build_group("Z2xZ2")
lattice = subgroup_lattice(G)
for S, mu in lattice.items():
    print([G.names[g] for g in S], "mu =", mu)

# swapping two generators leaves only one of the three order-2 subgroups in place
for alpha in automorphism_group(G):
    poset = invariant_subgroups(G, alpha, lattice)
    print(alpha.image, "->", len(poset), "invariant subgroups, mu =", poset.mu)

# direct re-summation: for every S, the values above S add to 1 at the top and 0 elsewhere
for S in lattice.subgroups:
    print(len(S), sum(mu for T, mu in lattice.items() if S <= T))
