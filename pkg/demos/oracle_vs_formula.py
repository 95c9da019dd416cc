"""
Counting Cayley graphs two ways
===============================

``oracle_class_count`` lists every generating connection set and merges
orbits; ``class_count`` never builds a connection set and works from fixed
point counts alone.  They must agree exactly.
"""

import time

from cayley_census import build_group, class_count, oracle_class_count

for spec in ["Z12", "D6", "Q8", "A4", "Z3xZ3"]:
    G = build_group(spec)
    for mode in ("weak", "equiv"):
        t0 = time.perf_counter()
        f = [class_count(G, m, mode).total for m in range(1, 7)]
        t1 = time.perf_counter()
        o = [oracle_class_count(G, m, mode).total for m in range(1, 7)]
        t2 = time.perf_counter()
        print(f"{spec:6s} {mode:5s} formula {f} ({t1 - t0:.2f}s)  oracle {o} ({t2 - t1:.2f}s)")

# the breakdown by number of inverse pairs agrees too
G = build_group("D4")
print(class_count(G, 3).per_k, oracle_class_count(G, 3).per_k)

# the formula reaches orders where listing all connection sets is out of reach
print("Z2xZ2xZ2xZ2xZ2, degree 6:", class_count(build_group("Z2xZ2xZ2xZ2xZ2"), 6, "equiv").total)
