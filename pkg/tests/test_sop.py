import pytest

from redindex import (
    Ideal,
    NotASystemOfParameters,
    RearrangeError,
    deep_sop,
    filter_regular_rearrange,
    ideal_power,
    is_filter_regular,
    is_sop,
    length_quotient,
    maximal_ideal,
    random_sop,
)
from redindex.sop import certify_filter_regular


def test_is_sop_examples(P2, R4, M3):
    assert is_sop(["x", "y"], P2).certificate["length"] == 1
    with pytest.raises(NotASystemOfParameters):
        is_sop(["a", "b+d"], R4)
    ps = is_sop(["z", "x-y"], M3)
    assert ps.certificate["length"] == 2 and ps.filter_regular == [None, None]


def test_is_sop_input_errors(P2):
    with pytest.raises(NotASystemOfParameters):
        is_sop(["x"], P2)
    with pytest.raises(NotASystemOfParameters):
        is_sop(["x", "y + 1"], P2)
    with pytest.raises(NotASystemOfParameters):
        is_sop(["x^2", "x*y"], P2)


def test_filter_regular_examples(R4, M3, P3):
    assert is_filter_regular("a+c", R4)
    reg = is_filter_regular("z", M3)
    # (0 :_M z) = xM ≅ k[x], a line
    assert not reg and reg.colon_dimension == 1
    assert is_filter_regular("z", P3, ["x", "y"])


def test_rearrange_examples(M3, R4, P2):
    ps = filter_regular_rearrange(Ideal(M3.ring, ["z", "x-y"]), M3, seed=0)
    assert ps.is_filter_regular()
    assert ps.ideal == Ideal(M3.ring, ["z", "x-y"])
    assert is_filter_regular(ps.forms[0], M3)
    ps = filter_regular_rearrange(Ideal(R4.ring, ["a+c", "b+d"]), R4)
    assert ps.as_strings() == ["a + c", "b + d"]
    ps = filter_regular_rearrange(Ideal(P2.ring, ["x", "y"]), P2)
    assert ps.as_strings() == ["x", "y"]


def test_rearrange_random_combinations_are_deterministic(M3):
    q = Ideal(M3.ring, ["z", "x-y"])
    a = filter_regular_rearrange(q, M3, seed=11, prefer_given=False)
    b = filter_regular_rearrange(q, M3, seed=11, prefer_given=False)
    assert a.forms == b.forms and a.is_filter_regular()
    assert certify_filter_regular(a, M3).filter_regular == [True, True]


def test_rearrange_rejects_unequal_degrees(P2):
    with pytest.raises(ValueError):
        filter_regular_rearrange(Ideal(P2.ring, ["x^2", "y"]), P2)


def test_rearrange_budget_over_tiny_field():
    from redindex import FieldCtx, fixture

    M3 = fixture("M3", FieldCtx(2))
    try:
        ps = filter_regular_rearrange(Ideal(M3.ring, ["z", "x+y"]), M3, retries=3, prefer_given=False)
    except RearrangeError as exc:
        assert exc.failures
    else:
        assert ps.is_filter_regular()


def test_random_and_deep_sops(P2, R4):
    ps = random_sop(R4, [1, 1], seed=0)
    assert ps.degrees == [1, 1]
    assert length_quotient(R4, ps.ideal) >= 1
    ps = deep_sop(R4, 2, seed=0)
    assert min(ps.degrees) >= 2
    m2 = ideal_power(maximal_ideal(R4.ring), 2).groebner()
    assert all(m2.contains_poly(f) for f in ps.forms)
    for s in range(100):
        random_sop(P2, [1, 1], seed=s)


def test_random_sop_is_deterministic(R4):
    assert random_sop(R4, [1, 2], seed=5).forms == random_sop(R4, [1, 2], seed=5).forms


def test_sops_on_equidimensional_fixture_are_filter_regular(R4):
    for s in range(100):
        ps = certify_filter_regular(random_sop(R4, [1, 1], seed=s), R4)
        assert ps.is_filter_regular()
