"""
Circulant graphs on a prime number of vertices
==============================================

For prime p the weak equivalence classes of circulants are their
isomorphism classes, and the count has a closed form in p and the degree.
"""

from cayley_census import binomial_special_case, build_group, circulant_prime_weak_count, class_count

for p in [5, 7, 11, 13, 17]:
    row = [circulant_prime_weak_count(p, m) for m in range(2, p, 2)]
    print(f"p = {p:2d}: {row}")

# the closed form matches the general engine
print(circulant_prime_weak_count(13, 6), class_count(build_group("Z13"), 6).total)

# the binomial shortcut C((p-3)/2, m/2) is right at p=5 but not in general
for p, m in [(5, 2), (7, 2), (11, 4), (13, 2)]:
    c = binomial_special_case(p, m)
    print(f"p={p} m={m}: shortcut {c.claimed}, true count {c.formula}, agrees={c.agrees}")
