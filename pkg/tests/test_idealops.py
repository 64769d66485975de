import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redindex import (
    FreeSubmodule,
    Ideal,
    PresentedModule,
    RingCtx,
    annihilator,
    colon,
    ext_dual,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    maximal_ideal,
    module_dimension,
    saturate,
)
from redindex.idealops import ideal_combine

P2 = RingCtx("x y")
P3 = RingCtx("x y z")
R4 = RingCtx("a b c d")
S5 = RingCtx("x1 x2 x3 x4 x5")


def test_combine_examples():
    assert ideal_sum(Ideal(P2, ["x"]), Ideal(P2, ["y"])) == Ideal(P2, ["x", "y"])
    m = maximal_ideal(P2)
    assert ideal_product(m, m) == Ideal(P2, ["x^2", "x*y", "y^2"])
    assert ideal_power(m, 2) == Ideal(P2, ["x^2", "x*y", "y^2"])
    assert ideal_combine("power", m, 0) == Ideal(P2, ["1"])
    with pytest.raises(ValueError):
        ideal_combine("quotient", m, m)


def test_colon_examples():
    assert colon(Ideal(P2, ["x^2"]), Ideal(P2, ["x"])) == Ideal(P2, ["x"])
    C = colon(Ideal(R4, ["a*c", "a*d", "b*c", "b*d"]), Ideal(R4, ["a"]))
    assert C.contains_poly("c") and C.contains_poly("d")
    C = colon(Ideal(P3, ["x*y", "x*z"]), Ideal(P3, ["z"]))
    assert C.contains_poly("x")
    with pytest.raises(ValueError):
        colon(Ideal(P2, ["x"]), Ideal(P2, []))


def test_saturate_examples():
    sat, s = saturate(Ideal(P2, ["x^2*y"]), Ideal(P2, ["y"]))
    assert sat == Ideal(P2, ["x^2"]) and s == 1
    sat, s = saturate(Ideal(P2, ["x^2", "x*y"]), maximal_ideal(P2))
    assert sat == Ideal(P2, ["x"]) and s == 1
    I = Ideal(R4, ["a*c", "a*d", "b*c", "b*d"])
    sat, s = saturate(I, maximal_ideal(R4))
    assert sat == I and s == 0


def test_intersect_examples():
    got = intersect(Ideal(S5, ["x1", "x2"]), Ideal(S5, ["x3", "x4"]))
    assert got == Ideal(S5, ["x1*x3", "x1*x4", "x2*x3", "x2*x4"])
    assert intersect(Ideal(P2, ["x"]), Ideal(P2, ["y"])) == Ideal(P2, ["x*y"])
    assert intersect(Ideal(P3, ["x"]), Ideal(P3, ["y", "z"])) == Ideal(P3, ["x*y", "x*z"])


def test_annihilator_examples():
    assert annihilator(PresentedModule.cyclic(Ideal(P2, ["x^2"]))) == Ideal(P2, ["x^2"])
    x, y = P2.gens()
    k = PresentedModule.coker(P2, [[x], [y]], [0])
    assert annihilator(k) == maximal_ideal(P2)
    zero = PresentedModule.coker(P2, [[P2.one]], [0])
    assert annihilator(zero) == Ideal(P2, ["1"])
    M3 = PresentedModule.cyclic(Ideal(P3, ["x*y", "x*z"]))
    assert module_dimension(ext_dual(M3, 1).annihilator) == 1


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_colon_saturation_monotone(seed):
    rng = random.Random(seed)
    I = Ideal(P3, [P3.random_form(2, rng) * P3.var(0), P3.random_form(3, rng)])
    J = Ideal(P3, [P3.random_form(1, rng)])
    C = colon(I, J)
    sat, _ = saturate(I, J)
    assert C.contains(I) and sat.contains(C)
    again, s = saturate(sat, J)
    assert again == sat and s == 0
    # J * (I : J) ⊆ I
    assert I.groebner().contains(ideal_product(J, C))


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_intersection_soundness(seed):
    rng = random.Random(seed)
    I = Ideal(P3, [P3.random_form(2, rng), P3.random_form(2, rng)])
    J = Ideal(P3, [P3.random_form(1, rng), P3.random_form(3, rng)])
    K = intersect(I, J).groebner()
    Ig, Jg = I.groebner(), J.groebner()
    for g in K.basis_polys:
        assert Ig.contains_poly(g) and Jg.contains_poly(g)
    f = I.generators[0] * J.generators[1]
    assert K.contains_poly(f)


def test_annihilator_soundness():
    rng = random.Random(4)
    x, y, z = P3.gens()
    cols = [[x, y], [y * y, P3.zero], [P3.zero, z * z], [P3.random_form(2, rng), P3.random_form(2, rng)]]
    M = PresentedModule.coker(P3, cols, [0, 0])
    ann = annihilator(M)
    B = M.relations.groebner()
    for f in ann.groebner().basis_polys:
        for j in range(2):
            e = {(j, m): c for m, c in f.terms.items()}
            assert not B.reduce(e)


def test_power_matches_product():
    I = Ideal(P3, ["x + y", "z^2"])
    assert ideal_power(I, 2) == ideal_product(I, I)


def test_module_colon_and_saturation():
    x, y = P2.gens()
    B = FreeSubmodule.from_vectors(P2, [[x * x, P2.zero], [P2.zero, y]], [0, 0])
    C = colon(B, Ideal(P2, ["x"]))
    assert C.contains_vec({(0, (1, 0)): 1}) and not C.contains_vec({(0, (0, 0)): 1})
    sat, s = saturate(B, Ideal(P2, ["x"]))
    assert sat.contains_vec({(0, (0, 0)): 1}) and s == 2
