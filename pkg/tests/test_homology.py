import random

import pytest
from hypothesis import given, settings, strategies as st

from artinstab.complex import FiltrationComplex, SimplexRef, build_filtration
from artinstab.errors import BoundarySquareNonzero, CounterexampleFound
from artinstab.homology import (IntegerChainComplex, chain_complex, connectivity_check,
                                euler_characteristic, homology, reduced_homology,
                                smith_decomposition, smith_normal_form)
from artinstab.word import MonoidElement

from oracles import rational_betti, sympy_invariants


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).invariants == (1, 6)
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).invariants == (1, 1, 1)
    assert smith_normal_form({(0, 0): 4, (1, 1): 6}).invariants == (2, 12)


matrices = st.integers(1, 6).flatmap(lambda m: st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_sympy(M):
    assert list(smith_normal_form(M).invariants) == sympy_invariants(M)


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _det(M):
    import sympy
    return sympy.Matrix(M).det()


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_snf_transforms(M):
    U, S, V = smith_decomposition(M)
    assert _matmul(_matmul(U, M), V) == S
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    assert all(S[i][j] == 0 for i in range(len(S)) for j in range(len(S[0])) if i != j)
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert tuple(nz) == smith_normal_form(M).invariants


def _fake(n, cells, faces):
    index = {c: i for i, c in enumerate(cells)}
    return FiltrationComplex(n, 0, cells, index, faces, {}, {})


def _v(name, level=0):
    return SimplexRef(level, MonoidElement(tuple(name)))


def test_single_edge_sign_convention():
    fc = _fake(2, [_v((1,)), _v((2,)), _v((), 1)], {2: (0, 1)})
    cc = chain_complex(fc)
    assert cc.dense(1) == [[1], [-1]]


def test_tree_boundary_rank(braid_seq):
    cc = chain_complex(build_filtration(braid_seq, 2, 1))
    assert smith_normal_form(cc.boundaries[1]).rank == 3
    h = reduced_homology(cc)
    assert h.betti() == [0, 0]


def test_empty_complex():
    cc = chain_complex(_fake(2, [], {}))
    assert cc.dims == [0, 0]
    assert reduced_homology(cc).betti() == [0, 0]


def test_discrete_vertices():
    fc = _fake(1, [_v((i,)) for i in range(1, 6)], {})
    assert reduced_homology(chain_complex(fc))[0].betti == 4
    assert homology(chain_complex(fc), reduced=False)[0].betti == 5


def test_torsion_is_reported():
    cc = IntegerChainComplex([1, 1, 1], {1: {}, 2: {(0, 0): 2}})
    h = reduced_homology(cc)
    assert h[1].torsion == (2,) and h[1].betti == 0
    assert h.to_dict()[1] == {"degree": 1, "betti": 0, "torsion": [2]}
    assert h[7].betti == 0


def test_boundary_square_checked():
    # one 2-cell whose edges do not close up
    cells = [_v((1,)), _v((2,)), _v((3,)), _v((1,), 1), _v((2,), 1), _v((3,), 1), _v((), 2)]
    faces = {3: (0, 1), 4: (1, 2), 5: (0, 2), 6: (3, 4, 3)}
    with pytest.raises(BoundarySquareNonzero):
        chain_complex(_fake(3, cells, faces))


def test_disconnected_complex_fails_connectivity():
    fc = _fake(2, [_v((1,)), _v((2,))], {})
    with pytest.raises(CounterexampleFound):
        connectivity_check(fc)


@pytest.mark.parametrize("k", range(4))
def test_c3_connectivity(braid_seq, k):
    rep = connectivity_check(build_filtration(braid_seq, 3, k))
    assert rep.status == "pass"
    assert [h["betti"] for h in rep.homology[:2]] == [0, 0]
    assert rep.homology[2]["torsion"] == []


@pytest.mark.parametrize("n, k", [(2, 3), (3, 2), (4, 1)])
def test_matches_rational_oracle_and_euler(braid_seq, n, k):
    cc = chain_complex(build_filtration(braid_seq, n, k))
    h = reduced_homology(cc)
    dense = {p: cc.dense(p) for p in cc.boundaries}
    assert h.betti() == rational_betti(cc.dims, dense)
    assert euler_characteristic(cc.dims) - 1 == sum((-1) ** i * b for i, b in enumerate(h.betti()))


def test_invariant_under_cell_shuffle(braid_seq):
    fc = build_filtration(braid_seq, 3, 2)
    want = reduced_homology(chain_complex(fc)).to_dict()
    rng = random.Random(7)
    for _ in range(3):
        order = list(range(len(fc.cells)))
        rng.shuffle(order)
        new_id = {old: new for new, old in enumerate(order)}
        cells = [fc.cells[old] for old in order]
        faces = {new_id[c]: tuple(new_id[f] for f in fs) for c, fs in fc.faces.items()}
        shuffled = _fake(3, cells, faces)
        assert reduced_homology(chain_complex(shuffled)).to_dict() == want
