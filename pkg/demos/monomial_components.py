"""Irreducible components of artinian monomial ideals; their number is the socle dimension.

Run: python3 demos/monomial_components.py
"""

from redindex import Ideal, PresentedModule, RingCtx, irreducible_decomposition_monomial, socle_dimension

ring = RingCtx("x y z")
for gens in (["x^2", "y^2", "z^2"], ["x^3", "x*y", "y^3", "z"], ["x^2", "x*y*z", "y^2", "z^3", "x*z^2"]):
    I = Ideal(ring, gens)
    comps = irreducible_decomposition_monomial(I)
    print(gens)
    for C in comps:
        print("   ", [str(g) for g in C.generators])
    print("  components:", len(comps), " socle dimension:", socle_dimension(PresentedModule.cyclic(I)))
