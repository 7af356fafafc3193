"""Basis spaces, sparse multi-linear maps, exact row reduction, finite
algebras."""

import pytest
from hypothesis import given, strategies as st

from lcoalg.linalg import (
    BasisSpace,
    FiniteAlgebra,
    MultiLinearMap,
    kernel_basis,
    map_equal,
    rref,
    solve_linear,
    tensor_add,
    tensor_product,
    tensor_scale,
    unit_vector,
    vec_add,
    vec_scale,
    zero_map,
)
from lcoalg.scalars import ONE, Q, ZERO, Scalar


def test_basis_space_rejects_duplicates():
    with pytest.raises(ValueError):
        BasisSpace(["a", "a"])
    with pytest.raises(ValueError):
        BasisSpace([])


def test_basis_space_union_disjointness():
    a = BasisSpace(["a", "b"])
    b = BasisSpace(["c"])
    assert a.union(b).labels == ("a", "b", "c")
    with pytest.raises(ValueError):
        a.union(BasisSpace(["b"]))


def test_vector_ops_drop_zeros():
    v = vec_add({"a": ONE}, {"a": -ONE, "b": Q})
    assert v == {"b": Q}
    assert vec_scale(v, ZERO) == {}


def test_tensor_product_bilinearity():
    s = tensor_product({("a",): ONE, ("b",): Q}, {("c",): ONE})
    assert s == {("a", "c"): ONE, ("b", "c"): Q}


TWO = Scalar.from_rational(2)


def _sample_maps():
    space = BasisSpace(["a", "b"])
    f = MultiLinearMap(space, 2, {
        "a": {("a", "b"): ONE},
        "b": {("b", "b"): Q, ("a", "a"): TWO},
    })
    g = MultiLinearMap(space, 2, {
        "a": {("b", "a"): ONE},
        "b": {("a", "b"): ONE},
    })
    return space, f, g


def test_map_validation():
    space = BasisSpace(["a"])
    with pytest.raises(ValueError):
        MultiLinearMap(space, 2, {"a": {("a",): ONE}})  # wrong arity
    with pytest.raises(ValueError):
        MultiLinearMap(space, 2, {"a": {("a", "x"): ONE}})  # unknown label
    with pytest.raises(ValueError):
        MultiLinearMap(space, 2, {"x": {("a", "a"): ONE}})  # unknown key


def test_zero_coefficients_are_dropped():
    space = BasisSpace(["a"])
    m = MultiLinearMap(space, 2, {"a": {("a", "a"): ZERO}})
    assert m.is_zero()
    assert map_equal(m, zero_map(space, 2))


def test_at_slot_interchange():
    # Applying maps at independent slots commutes (order of application
    # at disjoint positions does not matter once slots are renumbered).
    _, f, g = _sample_maps()
    start = {("a", "b"): ONE, ("b", "a"): Q}
    # f at slot 1 makes degree 3; then g at slot 3 acts on the old slot 2.
    one_way = g.at_slot(f.at_slot(start, 1, 2), 3, 3)
    other_way = f.at_slot(g.at_slot(start, 2, 2), 1, 3)
    assert one_way == other_way


def test_at_slot_linearity():
    _, f, _ = _sample_maps()
    t1 = {("a", "a"): ONE}
    t2 = {("b", "a"): Q}
    combined = f.at_slot(tensor_add(t1, t2), 1, 2)
    split = tensor_add(f.at_slot(t1, 1, 2), f.at_slot(t2, 1, 2))
    assert combined == split


def test_tau_involution():
    _, f, _ = _sample_maps()
    assert map_equal(f.tau().tau(), f)


def test_add_sub():
    _, f, g = _sample_maps()
    assert map_equal(f.add(g).sub(g), f)


matrix_entries = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw):
    nrows = draw(st.integers(min_value=1, max_value=4))
    ncols = draw(st.integers(min_value=1, max_value=4))
    return [
        [Scalar.from_rational(draw(matrix_entries)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def _matvec(matrix, vec):
    return [
        sum((a * x for a, x in zip(row, vec)), ZERO) for row in matrix
    ]


@given(matrices())
def test_kernel_vectors_multiply_to_zero(matrix):
    ncols = len(matrix[0])
    basis = kernel_basis(matrix, ncols=ncols)
    rank = len(rref(matrix)[1])
    assert len(basis) == ncols - rank
    for vec in basis:
        assert all(v.is_zero() for v in _matvec(matrix, vec))


@given(matrices())
def test_solve_linear_solves(matrix):
    ncols = len(matrix[0])
    target = [Scalar.from_rational(1)] * len(matrix)
    solution = solve_linear(matrix, target)
    if solution is not None:
        assert _matvec(matrix, solution) == target


@given(matrices())
def test_rref_pivots_are_unit_columns(matrix):
    rows, pivots = rref(matrix)
    for r, c in enumerate(pivots):
        assert rows[r][c] == ONE
        for i in range(len(rows)):
            if i != r:
                assert rows[i][c].is_zero()


def test_finite_algebra_checks_unit_and_associativity():
    space = BasisSpace(["e", "g"])
    good = FiniteAlgebra(
        space,
        {("e", "e"): {"e": ONE}, ("e", "g"): {"g": ONE},
         ("g", "e"): {"g": ONE}, ("g", "g"): {"e": ONE}},
        {"e": ONE},
    )
    assert good.mul_labels("g", "g") == {"e": ONE}
    three = BasisSpace(["e", "a", "b"])
    unital = {
        ("e", "e"): {"e": ONE}, ("e", "a"): {"a": ONE}, ("e", "b"): {"b": ONE},
        ("a", "e"): {"a": ONE}, ("b", "e"): {"b": ONE},
    }
    with pytest.raises(ValueError):
        # (a a) b = b b = e but a (a b) = a e = a.
        FiniteAlgebra(
            three,
            {**unital,
             ("a", "a"): {"b": ONE}, ("a", "b"): {"e": ONE},
             ("b", "a"): {"a": ONE}, ("b", "b"): {"e": ONE}},
            {"e": ONE},
        )


def test_finite_algebra_rejects_broken_unit():
    space = BasisSpace(["e", "g"])
    with pytest.raises(ValueError):
        FiniteAlgebra(
            space,
            {("e", "e"): {"e": ONE}, ("e", "g"): {"e": ONE},
             ("g", "e"): {"g": ONE}, ("g", "g"): {"e": ONE}},
            {"e": ONE},
        )


def test_mul_tensors_componentwise():
    space = BasisSpace(["e", "g"])
    alg = FiniteAlgebra(
        space,
        {("e", "e"): {"e": ONE}, ("e", "g"): {"g": ONE},
         ("g", "e"): {"g": ONE}, ("g", "g"): {"e": ONE}},
        {"e": ONE},
    )
    left = {("g", "e"): ONE}
    right = {("g", "g"): Q}
    assert alg.mul_tensors(left, right) == {("e", "g"): Q}
