import pytest

from golden_data import TABLE_ONE
from sexrecip.regular import reciprocal, verify_pair
from sexrecip.sexcore import SexNumber, divide_small, parse, scale_small
from sexrecip.tables import (
    FamilySpec,
    InvalidFamily,
    generate_family,
    standard_families,
    table_one,
)


def test_standard_families():
    specs = standard_families()
    assert len(specs) == 23
    assert len(set(specs)) == 23
    assert FamilySpec(2, 5, 3) in specs
    assert FamilySpec(3, 5, 1) in specs
    assert FamilySpec(3, 1, 0) in specs
    assert FamilySpec(2, 3, 0) in specs  # same as 2^n
    assert sum(s.generator == 2 and s.multiplier_base in (1, 3) for s in specs) == 9
    assert sum(s.generator == 2 and s.multiplier_base == 5 for s in specs) == 12
    assert all(s.n_max == 30 and s.is_standard() for s in specs)


def test_family_spec_validation():
    with pytest.raises(InvalidFamily):
        FamilySpec(5)
    with pytest.raises(InvalidFamily):
        FamilySpec(2, 7, 1)
    with pytest.raises(InvalidFamily):
        FamilySpec(2, 5, 1, 0)
    assert not FamilySpec(2, 5, 13).is_standard()
    assert not FamilySpec(3, 3, 2).is_standard()
    assert FamilySpec(2, 5, 3).family_id == "2^n*5^3"
    assert FamilySpec(3, 5, 1).family_id == "3^n*5"
    assert FamilySpec(3).family_id == "3^n"


def test_table_one_golden():
    table = table_one()
    assert len(table.rows) == 30
    for n, (head, tail) in enumerate(TABLE_ONE, 1):
        row = table.row(n)
        assert str(row.head) == head
        assert str(row.tail) == tail
        assert row.provenance == ("2^n*5^3", n)


def test_family_examples():
    t = generate_family(FamilySpec(3, 1, 0, 1))
    assert [(str(p.head), str(p.tail)) for p in t.rows] == [("3", "0;20")]
    with pytest.raises(IndexError):
        t.row(2)


@pytest.mark.parametrize("spec", standard_families(), ids=lambda s: s.family_id)
def test_chain_matches_closed_form(spec):
    table = generate_family(spec)
    previous = None
    for n, row in enumerate(table.rows, 1):
        head = SexNumber.from_int(spec.multiplier * spec.generator ** n)
        assert row.head == head
        assert row.tail == reciprocal(head)
        assert verify_pair(row)
        if previous is not None:
            assert row.head == scale_small(previous.head, spec.generator)
            assert row.tail == divide_small(previous.tail, spec.generator)
        previous = row


def test_point_adjusted_rows():
    # head 33,20 and tail 0;0,1,48 at n=4 give the pair 1;48 / 0;33,20
    row = table_one().row(4)
    assert row.tail.digits == parse("1;48").digits
    assert row.head.digits == parse("0;33,20").digits
