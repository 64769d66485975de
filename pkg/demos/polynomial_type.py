"""Polynomial type of a few graded modules, exact and from growth of the difference function.

Run: python3 demos/polynomial_type.py
"""

from redindex import fixture, polynomial_type_empirical, polynomial_type_exact, random_sop

for name in ("P2", "P3", "R4", "M3"):
    M = fixture(name)
    exact = polynomial_type_exact(M)
    ps = random_sop(M, [1] * M.dimension(), seed=1)
    guess = polynomial_type_empirical(M, ps.forms)
    print(f"{name}: exact {exact}, empirical estimate {guess['estimate']} ({guess['note']})")
