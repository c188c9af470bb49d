import pytest
from hypothesis import given, strategies as st

from composihedra.poset import FacePoset, product_poset


def chain(k, name="c"):
    return FacePoset([f"{name}{i}" for i in range(k)], [(i, i + 1) for i in range(k - 1)])


def test_chain_basics():
    P = chain(4)
    assert P.bottom == 0 and P.top == 3
    assert P.rank == (0, 1, 2, 3)
    assert P.leq(0, 3) and not P.leq(3, 0)
    assert P.below_set(2) == [0, 1]
    assert P.is_graded()


def test_from_order_closes_and_reduces():
    P = FacePoset.from_order(["a", "b", "c"], [(0, 1), (1, 2), (0, 2)])
    assert P.covers == {(0, 1), (1, 2)}
    with pytest.raises(ValueError):
        FacePoset.from_order(["a", "b"], [(0, 1), (1, 0)])


def test_validation():
    with pytest.raises(ValueError):
        FacePoset(["a", "a"], [])
    with pytest.raises(ValueError):
        FacePoset(["a", "b"], [(0, 1)], rank=[1, 1])
    with pytest.raises(ValueError):
        FacePoset(["a"], [(0, 3)])


def test_with_bottom_and_ideal():
    P = FacePoset(["x", "y", "t"], [(0, 2), (1, 2)])
    Q = P.with_bottom("")
    assert Q.bottom is not None and Q.labels[Q.bottom] == ""
    assert Q.rank[Q.bottom] == -1
    assert len(P.ideal(2)) == 3
    assert len(P.ideal(0)) == 1


@given(st.integers(1, 4), st.integers(1, 4))
def test_product_of_chains(a, b):
    P = product_poset(chain(a, "a"), chain(b, "b"))
    assert len(P) == a * b
    assert len(P.covers) == (a - 1) * b + a * (b - 1)
    assert max(P.rank) == a + b - 2
    assert P.labels[P.top] == (f"a{a - 1}", f"b{b - 1}")


def test_relabel_and_equality():
    P = chain(3)
    Q = P.relabel(lambda s: s.upper())
    assert Q.labels == ("C0", "C1", "C2")
    assert P == chain(3) and hash(P) == hash(chain(3))
    assert P != Q
