"""
Groups from Cayley tables, and their automorphisms
==================================================

Every group is a multiplication table with the identity at index 0.
"""

from cayley_census import automorphism_group, build_group, inner_automorphism_group

# small groups are built from a name; products split on "x"
for spec in ["Z8", "Z2xZ4", "D4", "Q8", "S3", "A4"]:
    G = build_group(spec)
    aut = automorphism_group(G)
    inn = inner_automorphism_group(G)
    print(f"{spec:8s} order {G.order:2d}  |Aut| = {len(aut):3d}  |Inn| = {len(inn):2d}  abelian={G.is_abelian}")

# element names follow the presentation
D4 = build_group("D4")
print(D4.names)
print("r * s =", D4.names[D4.mul(D4.index("r"), D4.index("s"))])

# an automorphism is a permutation of element indices
alpha = next(a for a in automorphism_group(D4) if not a.is_identity())
print("sample automorphism:", {D4.names[g]: D4.names[alpha(g)] for g in D4.elements}, "order", alpha.order)
