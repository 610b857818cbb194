"""Weight polynomials of basis members, indexed by length and largest part.

Three independent computations of the same table — direct enumeration, a
two-row recurrence, and a closed form with Gaussian-binomial factors — must
agree cell by cell.
"""

from __future__ import annotations

import pytest

from sipq.basis_gf import (
    cross_check_tables,
    table_closed_form,
    table_enumerated,
    table_recurrence,
)
from sipq.partitions import PartitionClass

BG1 = PartitionClass.BASIS_G1
BG2 = PartitionClass.BASIS_G2
BP1 = PartitionClass.BASIS_P1
BP2 = PartitionClass.BASIS_P2
ALL_BASES = (BG1, BG2, BP1, BP2)

TABLES = (table_enumerated, table_recurrence, table_closed_form)


@pytest.mark.parametrize("table", TABLES, ids=("enum", "rec", "closed"))
class TestFrozenEntries:
    """Hand-computed single cells, checked against each computation."""

    def test_empty(self, table):
        assert table(BG1, 0, 0).terms == {(0, 0, 0, 0): 1}

    def test_single_row(self, table):
        assert table(BG1, 1, 1).terms == {(1, 0, 0, 0): 1}
        assert table(BG1, 1, 2).terms == {(1, 1, 0, 0): 1}
        # a single odd row is barred when odd positions must be even
        assert table(BG2, 1, 1).is_zero()
        assert table(BG2, 1, 2).terms == {(1, 1, 0, 0): 1}
        assert table(BP1, 1, 1).terms == {(1, 0, 0, 0): 1}
        assert table(BP2, 1, 1).is_zero()

    def test_g1_three_rows(self, table):
        # only (3,2,1) has length 3 and largest part 3
        assert table(BG1, 3, 3).terms == {(3, 1, 1, 1): 1}
        # only (5,4,2) has length 3 and largest part 5
        assert table(BG1, 3, 5).terms == {(4, 3, 2, 2): 1}

    def test_p_two_rows(self, table):
        # (2,2) is the only flat member; (2,1) joins it when the top row is free
        assert table(BP1, 2, 2).terms == {(1, 1, 1, 1): 1}
        assert table(BP2, 2, 2).terms == {(1, 1, 1, 1): 1, (1, 1, 1, 0): 1}

    def test_support_vanishes(self, table):
        assert table(BG1, 2, 5).is_zero()  # largest part above twice the length
        assert table(BG2, 2, 3).is_zero()  # odd largest part in an even-top class
        assert table(BP2, 4, 7).is_zero()
        assert table(BG1, 0, 1).is_zero()


class TestTableProperties:
    def test_non_basis_tag_rejected(self):
        for fn in TABLES:
            with pytest.raises(ValueError):
                fn(PartitionClass.G1, 2, 2)

    def test_all_coefficients_nonnegative(self):
        for basis in ALL_BASES:
            for n in range(7):
                for h in range(13):
                    for e, coeff in table_recurrence(basis, n, h).terms.items():
                        assert coeff > 0
                        assert all(x >= 0 for x in e)

    def test_g1_even_column_factors(self):
        """Appending one cell to the top row multiplies the table entry by b."""
        b = {(0, 1, 0, 0): 1}
        from sipq.series import FOUR_PARAM, Series

        bmono = Series(FOUR_PARAM, b, None)
        for n in range(1, 9):
            for h in range(1, 9):
                lhs = table_recurrence(BG1, n, 2 * h - 1) * bmono
                assert lhs.terms == table_recurrence(BG1, n, 2 * h).terms


@pytest.mark.parametrize("basis", ALL_BASES, ids=lambda c: c.value)
def test_cross_check(basis):
    report = cross_check_tables(basis, 10, 10)
    assert report.passed, report.failures
    assert report.name == f"basis-tables[{basis.value}]"
    assert report.checks >= 11 * 11
