from fractions import Fraction

import pytest

from hahnsl2 import usl2
from hahnsl2.linalg import SparseMatrix, eigenspace
from hahnsl2.reps import evaluate
from hahnsl2.terwilliger import (
    CubeContext,
    HalvedContext,
    adjacency,
    cube_rho,
    decompose_halved,
    decompose_standard,
    dual_adjacency,
    halved_operators,
    standard_multiplicity,
    te_dimension,
    te_dimension_formula,
)

Q = Fraction


def _dense_square(m, n):
    d = m.to_dense()
    return [[sum(d[i][k] * d[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def test_adjacency_basics():
    ctx = CubeContext(D=2)
    a = adjacency(ctx)
    assert all(sum(a.row(r).values()) == 2 for r in range(4))
    # oracle: A^2 = 2I + 2P with P the antipodal swap, by direct squaring
    sq = _dense_square(a, 4)
    p = [[Q(1) if (u ^ 3) == v else Q(0) for v in range(4)] for u in range(4)]
    expected = [[2 * Q(u == v) + 2 * p[u][v] for v in range(4)] for u in range(4)]
    assert sq == expected


def test_adjacency_closed_walks_d3():
    ctx = CubeContext(D=3)
    a = adjacency(ctx)
    sq = _dense_square(a, 8)
    assert all(sq[u][u] == 3 for u in range(8))


def test_dual_adjacency():
    ctx = CubeContext(D=3)
    astar = dual_adjacency(ctx)
    assert astar.get(0, 0) == 3  # base vertex itself
    assert astar.get(7, 7) == -3  # the complement of the base
    diag = sorted(astar.get(v, v) for v in range(8))
    assert diag == [-3, -1, -1, -1, 1, 1, 1, 3]


def test_cube_rho_relations_certified():
    for D in range(2, 6):
        rep = cube_rho(CubeContext(D=D))  # SL2Rep checks the relations
        a = adjacency(CubeContext(D=D))
        assert rep.E + rep.F == a
        assert rep.H == dual_adjacency(CubeContext(D=D))


def test_cube_rho_natural_pullback_of_B():
    # the composite map sends B to (A^2 - 1)/4
    from hahnsl2.hahn import natural, presentation

    ctx = CubeContext(D=3)
    rep = cube_rho(ctx)
    a = adjacency(ctx)
    b_mat = evaluate(natural(presentation().B), rep)
    expected = (a * a - SparseMatrix.identity(8)).scale(Q(1, 4))
    assert b_mat == expected


def test_decompose_standard_examples():
    sd = decompose_standard(CubeContext(D=3))
    assert sd.multiplicities == {3: 1, 1: 2}
    assert sd.formula_ok and sd.dimension_ok
    sd = decompose_standard(CubeContext(D=4))
    assert sd.multiplicities == {4: 1, 2: 3, 0: 2}
    sd = decompose_standard(CubeContext(D=2))
    assert sd.multiplicities == {2: 1, 0: 1}


def test_standard_multiplicity_integrality():
    for D in range(2, 11):
        for k in range(D // 2 + 1):
            assert standard_multiplicity(D, k) >= 1


def test_casimir_block_scalars_match_decomposition():
    for D in (2, 3, 4, 5):
        ctx = CubeContext(D=D)
        rep = cube_rho(ctx)
        lam = evaluate(usl2.casimir(), rep)
        sd = decompose_standard(ctx)
        for n, mult in sd.multiplicities.items():
            space = eigenspace(lam, Q(n * (n + 2), 2))
            assert len(space) == mult * (n + 1)


def test_halved_operators_d2():
    h = HalvedContext(CubeContext(D=2))
    a2e, astar_e, halved = halved_operators(h)
    assert a2e == SparseMatrix.from_rows([[2, 2], [2, 2]])
    assert astar_e == SparseMatrix.from_rows([[2, 0], [0, -2]])
    assert halved == SparseMatrix.from_rows([[0, 1], [1, 0]])


def test_halved_adjacency_d3_is_complete_graph():
    h = HalvedContext(CubeContext(D=3))
    _, _, halved = halved_operators(h)
    expected = [[Q(0) if i == j else Q(1) for j in range(4)] for i in range(4)]
    assert halved.to_dense() == expected


def test_halved_base_must_be_even():
    with pytest.raises(ValueError):
        HalvedContext(CubeContext(D=3, base=1))


def test_even_split_matches_dual_eigenvalue_classes():
    ctx = CubeContext(D=4)
    h = HalvedContext(ctx)
    astar = dual_adjacency(ctx)
    by_eigenvalue = set()
    for i in range(-ctx.D, ctx.D + 1):
        val = ctx.D - 4 * i
        if abs(val) <= ctx.D:
            for v in eigenspace(astar, Q(val)):
                by_eigenvalue.update(v.keys())
    assert by_eigenvalue == set(h.evens)


def test_te_dimension_small():
    for D, expected in ((2, 4), (3, 5), (4, 11)):
        assert te_dimension_formula(D) == expected
        assert te_dimension(HalvedContext(CubeContext(D=D))) == expected


def test_decompose_halved_examples():
    hd = decompose_halved(HalvedContext(CubeContext(D=4)))
    assert hd.blocks == {(4, 0): 1, (2, 1): 3, (0, 0): 2}
    assert hd.labels_ok and hd.formula_ok and hd.dimension_ok
    assert hd.wedderburn_dimension == 11
    hd = decompose_halved(HalvedContext(CubeContext(D=3)))
    assert hd.blocks == {(3, 0): 1, (1, 1): 2}
    assert hd.wedderburn_dimension == 5
    hd = decompose_halved(HalvedContext(CubeContext(D=2)))
    assert hd.blocks == {(2, 0): 1}


def test_base_vertex_independence_small():
    # vertex transitivity: same dimensions and multiplicities at any even base
    reference = decompose_halved(HalvedContext(CubeContext(D=4)))
    ref_dim = te_dimension(HalvedContext(CubeContext(D=4)))
    for base in (0b0011, 0b1111, 0b0101):
        h = HalvedContext(CubeContext(D=4, base=base))
        assert te_dimension(h) == ref_dim
        assert decompose_halved(h).blocks == reference.blocks
