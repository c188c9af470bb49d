"""Acceptance criteria, one test per criterion.

Each test prints its own PASS line (visible with ``-s``); the terminal summary
prints one line per criterion in every run.
"""
import random
import time
from fractions import Fraction

import pytest

from composihedra import golden
from composihedra.complex import (
    face_poset_composihedron, facet_product, facet_subposet, facet_trees,
    quotient_to_composihedron,
)
from composihedra.counting import (
    facet_breakdown, facet_identity, generating_function_rhs, vertex_count,
    vertex_count_closed_form, vertex_sequence,
)
from composihedra.formats import export_polymake, sort_polymake
from composihedra.hull import enumerate_vertices, face_lattice_geometric, poset_isomorphic
from composihedra.realization import (
    composihedron_hrep, composihedron_vrep, loday_point, painted_point, range_quotient_point,
)
from composihedra.report import lemma_violations
from composihedra.trees import (
    binary_shapes, canonicalize_domain, enumerate_binary_painted, forget_paint, parse,
)

SEED = 20240607


def seeded_weights(n, seed=SEED):
    rng = random.Random(seed * 100 + n)
    return tuple(rng.randint(1, 4) for _ in range(n))


def report(num, detail):
    print(f"criterion {num}: PASS  {detail}")


@pytest.mark.criterion(1, "vertex counts")
def test_vertex_counts():
    t0 = time.perf_counter()
    listed = (1, 2, 5, 15, 51, 188, 731, 2950, 12235)
    assert tuple(vertex_count(n) for n in range(1, 10)) == listed
    assert vertex_sequence(9) == list(golden.VERTEX_SEQUENCE)
    # the listing stops at a_9; a_10 comes from both formulas
    assert vertex_count(10) == vertex_count_closed_form(10) == 51822
    for n in range(31):
        assert vertex_count(n) == vertex_count_closed_form(n)
    dt = time.perf_counter() - t0
    assert dt < 1
    report(1, f"a_1..a_9 = {listed}, a_10 = 51822, closed form agrees to n=30 ({dt:.3f}s)")


@pytest.mark.criterion(2, "enumeration consistency")
def test_enumeration_consistency():
    t0 = time.perf_counter()
    assert len(enumerate_binary_painted(4)) == 21
    for n in range(1, 9):
        classes = {canonicalize_domain(t) for t in enumerate_binary_painted(n)}
        assert len(classes) == vertex_count(n), n
    dt = time.perf_counter() - t0
    assert dt < 30
    report(2, f"21 trees at n=4, classes = a_n for n<=8 ({dt:.2f}s)")


@pytest.mark.criterion(3, "coordinate goldens")
def test_coordinate_goldens():
    t0 = time.perf_counter()
    t = parse("[f((xx))[f(x)f(x)]]")
    q = Fraction(3, 7)
    assert painted_point(t, q) == (q, 4, 1)
    assert painted_point(t, 0) == (0, 4, 1)
    for w in [(2, 1, 1, 1), (1, 2, 3, 4), (5, 3, 2, 7)]:
        w0, w1, w2, w3 = w
        assert painted_point(t, 0, w) == (0, (w0 + w1) * (w2 + w3), w2 * w3)
    assert composihedron_vrep(3).point_set() == golden.CK3_POINTS
    ours = export_polymake(composihedron_vrep(4))
    assert sort_polymake(ours) == sort_polymake(golden.CK4_POLYMAKE)
    dt = time.perf_counter() - t0
    assert dt < 1
    report(3, f"(q,4,1), (0,4,1), weighted triple x3, pentagon, 15-row block ({dt:.3f}s)")


@pytest.mark.criterion(4, "H/V agreement")
@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("kind", ["unit", "seeded"])
def test_hv_agreement(n, kind):
    w = (1,) * n if kind == "unit" else seeded_weights(n)
    t0 = time.perf_counter()
    h = composihedron_hrep(n, w)
    assert len(h) == 2 ** (n - 1) + n - 2 == facet_breakdown(n).total
    got = enumerate_vertices(h).point_set()
    want = composihedron_vrep(n, w).point_set()
    assert got == want
    dt = time.perf_counter() - t0
    assert dt < (5 if n <= 4 else 120)
    report(4, f"n={n} w={w} seed={SEED}: {len(got)} vertices, {len(h)} facets ({dt:.2f}s)")


@pytest.mark.criterion(5, "lemma tightness")
def test_lemma_tightness():
    t0 = time.perf_counter()
    for n in range(2, 6):
        for w in [(1,) * n, seeded_weights(n)]:
            assert lemma_violations(n, w) == []
    dt = time.perf_counter() - t0
    assert dt < 120
    report(5, f"all tree/facet pairs n=2..5, unit and seeded weights ({dt:.2f}s)")


@pytest.mark.criterion(6, "lattice isomorphism")
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lattice_isomorphism(n):
    t0 = time.perf_counter()
    L = face_lattice_geometric(composihedron_hrep(n), composihedron_vrep(n))
    P = face_poset_composihedron(n).with_bottom("")
    assert poset_isomorphic(L, P) is not None
    f = L.f_vector()[1:-1]
    if n == 4:
        assert tuple(f) == golden.CK4_F_VECTOR
        V, E, F = f
        assert V - E + F == 2
    dt = time.perf_counter() - t0
    assert dt < 600
    report(6, f"n={n} f-vector {tuple(f)} ({dt:.2f}s)")


@pytest.mark.criterion(7, "facet structure")
def test_facet_structure():
    for n in range(2, 6):
        for f in facet_trees(n):
            assert poset_isomorphic(facet_subposet(n, f), facet_product(n, f)) is not None, (n, f)
    for n, atoms, classes in [(3, 6, 5), (4, 21, 15)]:
        binary = {str(t) for t in enumerate_binary_painted(n)}
        qmap = {k: v for k, v in quotient_to_composihedron(n).items() if k in binary}
        assert len(qmap) == atoms
        assert len(set(qmap.values())) == classes
    fibres = {}
    for k, v in quotient_to_composihedron(3).items():
        if k in {str(t) for t in enumerate_binary_painted(3)}:
            fibres.setdefault(v, []).append(k)
    assert sorted(len(x) for x in fibres.values()) == [1, 1, 1, 1, 2]
    report(7, "facet products n<=5; quotient 6->5 (one merged pair), 21->15")


@pytest.mark.criterion(8, "degenerations")
def test_degenerations():
    for n in range(2, 7):
        for t in enumerate_binary_painted(n):
            assert painted_point(t, 1) == loday_point(forget_paint(t))
    for n in range(2, 6):
        for s in binary_shapes(n):
            assert sum(loday_point(s)) == n * (n - 1) // 2
    pts = {range_quotient_point(t, Fraction(1, 2)) for t in enumerate_binary_painted(4)}
    table = {p for row in golden.K5_RANGE_QUOTIENT_TABLE for p in row}
    assert len(pts) == golden.K5_VERTEX_COUNT == 14
    assert pts == table
    assert (3, 4, 3) in pts and (Fraction(1, 2), 4, 3) in pts
    report(8, "q=1 gives Loday for n<=6, S(n-1) plane n<=5, 14 K(5) points at q=1/2")


@pytest.mark.criterion(9, "identities")
def test_identities():
    for n in range(1, 21):
        lhs, rhs = facet_identity(n)
        assert lhs == rhs == 2 * n
    assert generating_function_rhs(20) == vertex_sequence(20)
    report(9, "facet identity n<=20, A = x/(1-x) + A^2 through degree 20")
