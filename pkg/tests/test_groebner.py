import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redindex import (
    NEG_INF,
    BasisNotComputed,
    FreeSubmodule,
    GroebnerLimitError,
    Ideal,
    Limits,
    RingCtx,
    buchberger,
    kbasis,
    module_dimension,
    normal_form,
    quotient_length,
    staircase,
)
from redindex.groebner import applied_limits, is_groebner_basis, series_value, standard_monomials

P2 = RingCtx("x y")
R4 = RingCtx("a b c d")
S5 = RingCtx("x1 x2 x3 x4 x5")


def test_normal_form_examples():
    G = Ideal(P2, ["x^2 - y", "y^2 - 1"]).groebner()
    assert normal_form("x^4", G) == P2.one
    assert normal_form("x", G) == P2.var(0)
    assert normal_form("x^2 - y", G).is_zero()


def test_normal_form_needs_basis():
    with pytest.raises(BasisNotComputed):
        normal_form("x", Ideal(P2, ["x^2 - y"]))


def test_buchberger_examples():
    x, y = P2.gens()
    assert buchberger(Ideal(P2, ["x - y"])) == [x - y]
    lex = P2.with_order("lex")
    G = buchberger(Ideal(lex, ["x*y - 1", "y^2 - 1"]))
    assert sorted(map(str, G)) == ["x - y", "y^2 - 1"]
    G = buchberger(Ideal(P2, ["x^2 - y", "y^2 - 1"]))
    assert sorted(map(str, G)) == ["x^2 - y", "y^2 - 1"]


def test_basis_is_reduced_and_criterion_holds():
    rng = random.Random(5)
    ring = RingCtx("x y z")
    gens = [ring.random_form(3, rng) for _ in range(3)]
    G = Ideal(ring, gens).groebner()
    assert is_groebner_basis(G.basis, G.order, ring.field)
    heads = [p.lm() for p in G.basis_polys]
    for i, h in enumerate(heads):
        for j, k in enumerate(heads):
            if i != j:
                assert not all(a <= b for a, b in zip(h, k))
    for f in G.basis_polys:
        assert f.lc() == 1
    for g in gens:
        assert G.contains_poly(g)


@settings(max_examples=25)
@given(st.permutations(list(range(4))), st.integers(0, 1000))
def test_canonical_under_shuffle(perm, seed):
    rng = random.Random(seed)
    ring = RingCtx("x y z")
    gens = [ring.random_form(2, rng) for _ in range(4)]
    A = buchberger(Ideal(ring, gens))
    B = buchberger(Ideal(ring, [gens[i] for i in perm]))
    assert A == B


@settings(max_examples=25)
@given(st.integers(0, 10_000))
def test_membership_soundness(seed):
    rng = random.Random(seed)
    ring = RingCtx("x y z")
    gens = [ring.random_form(2, rng) for _ in range(2)]
    I = Ideal(ring, gens).groebner()
    f = sum((ring.random_form(1, rng) * g for g in gens), ring.zero)
    assert normal_form(f, I).is_zero()


def test_staircase_examples():
    s = staircase(Ideal(P2, ["x^2", "x*y", "y^2"]))
    assert s.dimension == 0 and s.finite_length and s.length == 3
    assert sorted(m for _, m in standard_monomials(Ideal(P2, ["x^2", "x*y", "y^2"]))) == [(0, 0), (0, 1), (1, 0)]
    assert staircase(Ideal(R4, ["a*c", "a*d", "b*c", "b*d"])).dimension == 2
    assert staircase(Ideal(S5, ["x1*x3", "x1*x4", "x2*x3", "x2*x4"])).dimension == 3


def test_degenerate_ideals():
    unit = Ideal(P2, ["1"])
    assert module_dimension(unit) == NEG_INF
    assert quotient_length(unit) == 0
    zero = Ideal(P2, [])
    assert module_dimension(zero) == 2
    assert Ideal(P2, ["x + 1"]).is_unit() is False
    assert Ideal(P2, ["x - 1", "x"]).is_unit()


def test_kbasis_examples():
    I = Ideal(P2, ["x^2", "x*y", "y^2"])
    assert sorted(m for _, m in kbasis(I, 1)) == [(0, 1), (1, 0)]
    assert kbasis(I, 2) == []
    J = Ideal(R4, ["a*c", "a*d", "b*c", "b*d"])
    names = sorted(str(R4.monomial(m)) for _, m in kbasis(J, 2))
    assert names == ["a*b", "a^2", "b^2", "c*d", "c^2", "d^2"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hilbert_function_of_polynomial_ring(n):
    ring = RingCtx([f"v{i}" for i in range(n)])
    s = staircase(Ideal(ring, []), window=(0, 6))
    assert all(s.hilbert[t] == comb(n - 1 + t, t) for t in range(7))


def test_length_is_sum_of_hilbert_function():
    rng = random.Random(1)
    ring = RingCtx("x y z")
    I = Ideal(ring, ["x^3", "y^3", "z^3"] + [ring.random_form(2, rng)])
    s = staircase(I, window=(0, 10))
    assert s.length == sum(s.hilbert.values())
    assert s.length == quotient_length(I)
    assert all(len(kbasis(I, t)) == s.hilbert[t] for t in range(10))


def test_module_basis_and_dimension():
    x, y = P2.gens()
    # coker of [[x, y], [0, x]] on S^2
    B = FreeSubmodule.from_vectors(P2, [[x, 0], [y, x]], [0, 0]).groebner()
    assert is_groebner_basis(B.basis, B.order, P2.field)
    assert module_dimension(B) == 1
    # hilbert numerator evaluated at degree 5 equals the k-basis size
    s = staircase(B, window=(0, 6))
    assert all(len(kbasis(B, t)) == s.hilbert[t] for t in range(7))
    assert series_value(s.numerator, 2, 5) == s.hilbert[5]


def test_resource_guard_is_explicit():
    ring = RingCtx("x y z")
    rng = random.Random(2)
    gens = [ring.random_form(3, rng) for _ in range(3)]
    with pytest.raises(GroebnerLimitError):
        Ideal(ring, gens).groebner(Limits(max_basis=3))
    with applied_limits(max_degree=3):
        with pytest.raises(GroebnerLimitError):
            Ideal(ring, gens).groebner()
    assert Ideal(ring, gens).groebner() is not None
