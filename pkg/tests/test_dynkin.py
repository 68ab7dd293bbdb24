import random
from fractions import Fraction

import pytest

from loopdual.dynkin import group_name, recognize_cartan_matrix
from loopdual.lattice import Lattice, identity_matrix
from loopdual.root_data import (
    CartanType,
    build_datum,
    cartan_matrix,
    fundamental_weight,
    root_lattice,
    weight_lattice,
)

# C2 and D3 are left out: their matrices are relabelings of B2 and A3 and
# come back canonicalized, which test_diagram_coincidences covers.
ALL_TYPES = (
    [CartanType("A", n) for n in range(1, 9)] + [CartanType("B", n) for n in range(2, 9)]
    + [CartanType("C", n) for n in range(3, 9)] + [CartanType("D", n) for n in range(4, 9)]
    + [CartanType("E", n) for n in (6, 7, 8)] + [CartanType("F", 4), CartanType("G", 2)]
)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_recognize_standard_matrices(t):
    got, sigma = recognize_cartan_matrix([list(r) for r in cartan_matrix(t)])
    assert got == t
    assert sigma == tuple(range(t.rank))


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_recognize_under_relabeling(t):
    std = cartan_matrix(t)
    rng = random.Random(f"relabel-{t}")
    for _ in range(6):
        perm = list(range(t.rank))
        rng.shuffle(perm)
        mat = [[std[perm[i]][perm[j]] for j in range(t.rank)] for i in range(t.rank)]
        got, sigma = recognize_cartan_matrix(mat)
        assert got == t
        for i in range(t.rank):
            for j in range(t.rank):
                assert mat[i][j] == std[sigma[i]][sigma[j]]


def test_diagram_coincidences_are_canonicalized():
    # a symplectic-shaped rank-two matrix names the same diagram as B2
    got, sigma = recognize_cartan_matrix([[2, -1], [-2, 2]])
    assert str(got) == "B2" and sigma == (1, 0)
    # the rank-three fork is an A3 chain in different labels
    fork = [[2, -1, -1], [-1, 2, 0], [-1, 0, 2]]
    got, _ = recognize_cartan_matrix(fork)
    assert str(got) == "A3"
    got, sigma = recognize_cartan_matrix([[2, -3], [-1, 2]])
    assert str(got) == "G2" and sigma == (1, 0)
    # rank three distinguishes the two-to-one directions
    got, _ = recognize_cartan_matrix([list(r) for r in cartan_matrix(CartanType("C", 3))])
    assert str(got) == "C3"


@pytest.mark.parametrize("bad", [
    [],
    [[2, -1]],
    [[3]],
    [[2, 1], [1, 2]],
    [[2, -1], [0, 2]],
    [[2, 0], [0, 2]],
    [[2, -2], [-2, 2]],
    [[2, -4], [-1, 2]],
], ids=["empty", "ragged", "diag", "positive", "zeros", "reducible", "affine", "wild"])
def test_recognize_rejects_non_cartan(bad):
    with pytest.raises(ValueError):
        recognize_cartan_matrix(bad)


def test_group_names_classical():
    a1 = CartanType("A", 1)
    assert group_name(a1, weight_lattice(a1)) == "SL2"
    assert group_name(a1, root_lattice(a1)) == "PSL2"
    a3 = CartanType("A", 3)
    middle = Lattice(identity_matrix(3) + [list(fundamental_weight(a3, 1))])
    assert group_name(a3, middle) == "SL4/mu2"
    assert group_name(a3, root_lattice(a3)) == "PGL4"
    b3 = CartanType("B", 3)
    assert group_name(b3, weight_lattice(b3)) == "Spin7"
    assert group_name(b3, root_lattice(b3)) == "SO7"
    c2 = CartanType("C", 2)
    assert group_name(c2, weight_lattice(c2)) == "Sp4"
    assert group_name(c2, root_lattice(c2)) == "PSp4"
    for name in ("E8", "F4", "G2"):
        t = CartanType.parse(name)
        assert group_name(t, weight_lattice(t)) == name
    e6 = CartanType("E", 6)
    assert group_name(e6, weight_lattice(e6)) == "E6_sc"
    assert group_name(e6, root_lattice(e6)) == "E6_ad"


def test_group_names_orthogonal_forms():
    d4 = CartanType("D", 4)
    assert group_name(d4, weight_lattice(d4)) == "Spin8"
    assert group_name(d4, root_lattice(d4)) == "PSO8"

    def with_class(t, idx):
        return Lattice(identity_matrix(t.rank) + [list(fundamental_weight(t, idx))])

    assert group_name(d4, with_class(d4, 0)) == "SO8"
    assert group_name(d4, with_class(d4, 3)) == "HSpin8+"
    assert group_name(d4, with_class(d4, 2)) == "HSpin8-"
    d5 = CartanType("D", 5)
    assert group_name(d5, with_class(d5, 0)) == "SO10"
    assert group_name(d5, build_datum("D5", "so").X) == "SO10"


def test_group_name_rejects_bad_lattices():
    a1 = CartanType("A", 1)
    with pytest.raises(ValueError):
        group_name(a1, Lattice([[Fraction(1, 3)]]))
    b2 = CartanType("B", 2)
    with pytest.raises(ValueError):
        group_name(b2, Lattice([[2, 0], [0, 1]]))
