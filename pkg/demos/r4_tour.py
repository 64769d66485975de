"""Two planes in 4-space meeting in a point: a Buchsbaum ring of depth 1.

Run: python3 demos/r4_tour.py
"""

from math import comb

from redindex import (all_ext_duals, bound_report, deep_sop, fixture, index_of_reducibility,
                      length_quotient, multiplicity, random_sop)

R4 = fixture("R4")
print("module:", R4.name, "dimension", R4.dimension())

q = ["a+c", "b+d"]
print("q =", q)
print("  length M/qM      ", length_quotient(R4, q))
print("  multiplicity e(q)", multiplicity(q, R4))
print("  socle dim N(q)   ", index_of_reducibility(R4, q))

# Local cohomology is read off from its Matlis duals.
duals = all_ext_duals(R4)
for i, K in enumerate(duals):
    if not K.is_zero:
        length = K.length if K.length is not None else "infinite"
        print(f"  H^{i}: length {length}, socle dimension {K.min_gens}")

print("Sum of C(2,i) * socle dimensions:", sum(comb(2, i) * duals[i].min_gens for i in range(len(duals))))

# Linear parameters stay far below the bound; deep ones reach it.
rep = bound_report(R4, [random_sop(R4, [1, 1], seed=s) for s in range(20)])
print("20 linear SOPs: max N =", rep.max_index, "bound", rep.rhs_main, rep.verdict)
deep = [index_of_reducibility(R4, deep_sop(R4, 2, seed=s).ideal) for s in range(10)]
print("10 SOPs inside m^2:", deep)
