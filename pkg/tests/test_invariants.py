"""Graded invariant dimensions, decompositions and basis rank checks.

Two independent oracles guard the main computation: the expected
dimensions are recomputed here by a direct convolution, and the
weight-zero kernel reduction is cross-checked against the unblocked
joint kernel of all four k-generators acting on the full degree slice.
"""

import pytest

from su21_invariants import invariants as inv
from su21_invariants import lie, linalg, symext
from su21_invariants.lie import gvec

EXPECTED_DIMS = [1, 1, 6, 10, 23, 39, 64, 96, 141]


def _oracle_layer(n):
    if n == 0:
        return 1
    if n == 1:
        return 0
    if n == 2:
        return 3
    rem = n % 3
    return 8 if rem == 2 else 4


def _oracle_polynomial(n):
    # monomials a^i b^j c^k with i + 2j + 2k = n, counted directly
    count = 0
    for j in range(n // 2 + 1):
        for k in range((n - 2 * j) // 2 + 1):
            count += 1  # i is forced
    return count


def _oracle_expected(n):
    return sum(_oracle_layer(k) * _oracle_polynomial(n - k) for k in range(n + 1))


def test_expected_dimension_against_convolution_oracle():
    for n in range(16):
        assert inv.expected_dimension(n) == _oracle_expected(n)


def test_expected_dimension_frozen_values():
    assert [inv.expected_dimension(n) for n in range(9)] == EXPECTED_DIMS


def test_polynomial_layer_values():
    assert [inv.polynomial_layer_dim(n) for n in range(6)] == [1, 1, 3, 3, 6, 6]


def _unblocked_joint_kernel_dim(n):
    """Kernel of all four k-generators on the full degree-n slice, with no
    weight restriction and no signature blocking."""
    keys = inv.graded_keys(n)
    rows_by_target = {}
    for col, key in enumerate(keys):
        mono = symext.SymTensorElement({key: 1})
        for gi in lie.K_INDICES:
            image = symext.ad_action(gvec(gi), mono)
            for tkey, v in image.coeffs.items():
                rows_by_target.setdefault((gi, tkey), {})[col] = v
    rows = [rows_by_target[t] for t in sorted(rows_by_target)]
    return len(linalg.kernel_of_rows(rows, len(keys)))


@pytest.mark.parametrize("n", range(5))
def test_invariant_subspace_matches_unblocked_kernel(n):
    assert len(inv.invariant_subspace(n)) == _unblocked_joint_kernel_dim(n)


def test_low_degree_invariants():
    assert inv.invariant_subspace(0) == [symext.one()]
    deg1 = inv.invariant_subspace(1)
    assert len(deg1) == 1
    a = symext.named_invariants().a
    # the degree-1 invariant line is spanned by a
    x = deg1[0]
    assert inv.rank_of_elements([x, a]) == 1
    assert len(inv.invariant_subspace(2)) == 6
    assert len(inv.invariant_subspace(3)) == 10


def test_invariants_are_annihilated_by_k():
    for n in range(6):
        for x in inv.invariant_subspace(n):
            for gi in lie.K_INDICES:
                assert symext.ad_action(gvec(gi), x).is_zero()


def test_table_report_low_degrees():
    rep = inv.verify_table(5)
    assert rep.passed, rep.to_text()
    assert len(rep.checks) == 6


def test_sym_k_decomposition_dimension_arithmetic():
    # 2n+1 plus C(n,2) must fill C(n+2,2)
    for n, (top, lower, full) in {
        2: (5, 1, 6),
        3: (7, 3, 10),
        6: (13, 15, 28),
    }.items():
        assert 2 * n + 1 == top
        assert inv._binomial(n, 2) == lower
        assert inv._binomial(n + 2, 2) == full
        rep = inv.verify_sym_k_decomposition(n)
        assert rep.passed, rep.to_text()


def test_sym_p_decomposition_dimension_arithmetic():
    for n, (strings, lower, full) in {
        2: (9, 1, 10),
        3: (16, 4, 20),
    }.items():
        assert (n + 1) ** 2 == strings
        assert inv._binomial(n + 1, 3) == lower
        assert inv._binomial(n + 3, 3) == full
        rep = inv.verify_sym_p_decomposition(n)
        assert rep.passed, rep.to_text()


def test_sym_p_highest_weight_vectors():
    e1, f2 = symext.sym_gen(lie.E1), symext.sym_gen(lie.F2)
    v = e1 ** 2 * f2
    assert symext.ad_action(gvec(lie.E), v).is_zero()
    assert symext.key_weight(next(iter(v.coeffs))) == (2, -1)


def test_ext_decomposition_report():
    rep = inv.verify_ext_decomposition()
    assert rep.passed, rep.to_text()
    # ten module checks plus the total-dimension check
    assert len(rep.checks) == 11


def test_ext_decomposition_highest_weight_example():
    x = symext.ext_gen(lie.E1) * symext.ext_gen(lie.F2)
    assert symext.ad_action(gvec(lie.E), x).is_zero()


def test_product_members_counts():
    for n in range(7):
        members = inv.product_basis_members(n)
        assert len(members) == inv.expected_dimension(n)


def test_product_members_degree_two():
    members = dict(inv.product_basis_members(2))
    assert len(members) == 6
    labels = sorted(members)
    assert any("* e" in label for label in labels)
    assert inv.rank_of_elements(list(members.values())) == 6


def test_product_basis_report():
    rep = inv.verify_product_basis(5)
    assert rep.passed, rep.to_text()


def test_lifted_basis_slice():
    rep = inv.verify_lifted_basis_slice(3)
    assert rep.passed, rep.to_text()


def test_ideal_slice():
    for bound in (2, 3):
        rep = inv.verify_ideal_slice(bound)
        assert rep.passed, rep.to_text()
    with pytest.raises(ValueError):
        inv.verify_ideal_slice(5)


def test_graded_keys_order_is_deterministic():
    keys = inv.graded_keys(3)
    assert list(keys) == sorted(keys)
    zero = lie.Weight(0, 0)
    restricted = inv.graded_keys(3, zero)
    assert set(restricted) <= set(keys)
    assert all(symext.key_weight(k) == (0, 0) for k in restricted)
