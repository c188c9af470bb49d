import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import assume, given, settings, strategies as st

from composihedra.complex import face_poset_composihedron, face_poset_multiplihedron
from composihedra.hull import (
    EmptyPolytopeError, FacePoset, InfeasiblePointError, UnboundedPolytopeError, affine_dimension,
    backend, enumerate_vertices, extreme_points, face_lattice_geometric, feasible, is_extreme,
    poset_isomorphic, rank, tight_set,
)
from composihedra.hull import _pycore
from composihedra.polytope import HRep, Hyperplane, VRep
from composihedra.realization import composihedron_hrep, composihedron_vrep

BACKENDS = backend.available()


def gauss_solve(rows, rhs):
    """Plain Fraction Gaussian elimination; None if singular."""
    d = len(rows)
    M = [[Fraction(x) for x in r] + [Fraction(v)] for r, v in zip(rows, rhs)]
    for c in range(d):
        piv = next((r for r in range(c, d) if M[r][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        for r in range(d):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return tuple(M[i][d] / M[i][i] for i in range(d))


def oracle_vertices(A, b):
    d = len(A[0])
    out = set()
    for S in combinations(range(len(A)), d):
        p = gauss_solve([A[i] for i in S], [b[i] for i in S])
        if p is not None and all(sum(a * x for a, x in zip(row, p)) <= v for row, v in zip(A, b)):
            out.add(p)
    return out


def box_hrep(A, b, d, bound=6):
    hs = [Hyperplane(r, v) for r, v in zip(A, b) if any(r)]
    for i in range(d):
        e = [0] * d
        e[i] = 1
        hs += [Hyperplane(e, bound), Hyperplane(e, -bound, ">=")]
    return HRep(d, tuple(hs))


systems = st.integers(1, 3).flatmap(lambda d: st.tuples(
    st.just(d),
    st.lists(st.lists(st.integers(-4, 4), min_size=d, max_size=d), min_size=1, max_size=4),
    st.lists(st.integers(-8, 8), min_size=4, max_size=4)))


@settings(max_examples=60, deadline=None)
@given(systems)
def test_vertices_match_gauss_oracle(sys_):
    d, A, b = sys_
    h = box_hrep(A, b[:len(A)], d)
    rows = [list(hp.coeffs) if hp.sense == "<=" else [-x for x in hp.coeffs] for hp in h]
    rhs = [hp.rhs if hp.sense == "<=" else -hp.rhs for hp in h]
    want = oracle_vertices(rows, rhs)
    for name in BACKENDS:
        with backend.forced(name):
            if not want:
                with pytest.raises(EmptyPolytopeError):
                    enumerate_vertices(h)
            else:
                assert enumerate_vertices(h).point_set() == want


@settings(max_examples=60, deadline=None)
@given(systems, st.integers(0, 3))
def test_backends_agree(sys_, shift):
    d, A, b = sys_
    A = [[x << (20 * shift) for x in r] for r in A]
    b = [x << (20 * shift) for x in b[:len(A)]]
    ref = _pycore.basic_solutions(A, b, d)
    for name in BACKENDS:
        with backend.forced(name):
            assert backend.basic_solutions(A, b, d) == ref
            assert backend.tight_masks(A, b, ref) == _pycore.tight_masks(A, b, ref)
            if rank(A) == d:
                assert backend.has_recession_ray(A, d) == _pycore.has_recession_ray(A, d)


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_backends(M):
    g = gauss_solve(M, [0, 0, 0])
    ref = _pycore.det(M)
    assert (ref == 0) == (g is None)
    for name in BACKENDS:
        with backend.forced(name):
            assert backend.det(M) == ref


def test_backend_switching():
    assert "python" in BACKENDS
    with pytest.raises(ValueError):
        backend.use("fortran")
    before = backend.active()
    with backend.forced("python"):
        assert backend.active() == "python"
    assert backend.active() == before


def _cube(d):
    hs = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        hs += [Hyperplane(e, 1), Hyperplane(e, 0, ">=")]
    return HRep(d, tuple(hs))


@pytest.mark.parametrize("d,f", [(1, (2,)), (2, (4, 4)), (3, (8, 12, 6)), (4, (16, 32, 24, 8))])
def test_cube_lattice(d, f):
    h = _cube(d)
    v = enumerate_vertices(h)
    assert v.point_set() == set(product([0, 1], repeat=d))
    L = face_lattice_geometric(h, v)
    assert tuple(L.f_vector()[1:-1]) == f
    assert L.f_vector()[0] == L.f_vector()[-1] == 1


def test_simplex():
    h = HRep(3, (Hyperplane((1, 1, 1), 1),) + tuple(
        Hyperplane(e, 0, ">=") for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    v = enumerate_vertices(h)
    assert len(v) == 4
    assert tuple(face_lattice_geometric(h, v).f_vector()) == (1, 4, 6, 4, 1)


def test_equality_rows():
    h = HRep(2, (Hyperplane((1, 1), 1, "="), Hyperplane((1, 0), 0, ">="), Hyperplane((0, 1), 0, ">=")))
    assert enumerate_vertices(h).point_set() == {(0, 1), (1, 0)}


def test_unbounded():
    with pytest.raises(UnboundedPolytopeError):
        enumerate_vertices(HRep(2, (Hyperplane((1, 0), 0, ">="), Hyperplane((0, 1), 0, ">="))))
    with pytest.raises(UnboundedPolytopeError):
        enumerate_vertices(HRep(2, (Hyperplane((1, 0), 1), Hyperplane((1, 0), 0, ">="))))
    with pytest.raises(UnboundedPolytopeError):
        enumerate_vertices(HRep(2, ()))


def test_empty():
    with pytest.raises(EmptyPolytopeError):
        enumerate_vertices(HRep(1, (Hyperplane((1,), -1), Hyperplane((1,), 0, ">="))))
    with pytest.raises(EmptyPolytopeError):
        enumerate_vertices(HRep(2, (Hyperplane((1, 0), -1), Hyperplane((1, 0), 0, ">="))))


def test_tight_set():
    h = composihedron_hrep(3)
    assert tight_set((0, 0), h) == {3, 4}
    with pytest.raises(InfeasiblePointError):
        tight_set((5, 5), h)


def test_fm_feasible():
    assert feasible([((1,), 1), ((-1,), 0)])
    assert not feasible([((1,), -1), ((-1,), 0)])
    assert feasible([])


@pytest.mark.parametrize("n", [3, 4])
def test_fm_confirms_extremality(n):
    pts = composihedron_vrep(n).points
    assert extreme_points(pts) == list(range(len(pts)))


def test_fm_rejects_interior():
    sq = [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert not is_extreme((1, 1), sq)
    assert extreme_points(sq + [(1, 1), (0, 0)]) == [0, 1, 2, 3]


def test_affine_dimension_and_rank():
    assert affine_dimension([]) == -1
    assert affine_dimension([(1, 1)]) == 0
    assert affine_dimension([(0, 0), (1, 1), (2, 2)]) == 1
    assert rank([[1, 2], [2, 4]]) == 1


def test_lattice_rejects_bad_input():
    h = _cube(2)
    with pytest.raises(ValueError):
        face_lattice_geometric(h, VRep(2, ((Fraction(1, 2), 0), (1, 1))))
    with pytest.raises(ValueError):
        face_lattice_geometric(h, VRep(2, ((5, 5),)))


def _shuffled(P, seed):
    rng = random.Random(seed)
    perm = list(range(len(P)))
    rng.shuffle(perm)
    inv = {old: new for new, old in enumerate(perm)}
    labels = [("s", P.labels[old]) for old in perm]
    covers = [(inv[a], inv[b]) for a, b in P.covers]
    return FacePoset(labels, covers, [P.rank[old] for old in perm])


@pytest.mark.parametrize("n,seed", [(3, 1), (4, 2), (4, 3)])
def test_isomorphism_on_relabelled_copy(n, seed):
    P = face_poset_composihedron(n)
    Q = _shuffled(P, seed)
    m = poset_isomorphic(P, Q)
    assert m is not None
    for i in range(len(P)):
        for j in range(len(P)):
            assert P.leq(i, j) == Q.leq(Q.index(m[P.labels[i]]), Q.index(m[P.labels[j]]))


def test_non_isomorphic():
    assert poset_isomorphic(face_poset_composihedron(3), face_poset_multiplihedron(3)) is None
    L3 = face_lattice_geometric(_cube(2), enumerate_vertices(_cube(2)))
    assert poset_isomorphic(L3, face_poset_composihedron(3).with_bottom("")) is None


def test_fallback_without_extension():
    import subprocess
    import sys
    code = (
        "import sys; sys.modules['composihedra.hull._core'] = None\n"
        "from composihedra.hull import backend, enumerate_vertices\n"
        "from composihedra.realization import composihedron_hrep\n"
        "assert backend.available() == ['python'] and backend.active() == 'python'\n"
        "assert len(enumerate_vertices(composihedron_hrep(4))) == 15\n"
    )
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
