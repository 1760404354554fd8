import pytest

from maxcurves.catalog import (CatalogError, alternating_power_sum,
                               dickson_orders, lemmino_scan, mh_orders,
                               odd_order_subgroups_cyclic, order_excluded,
                               pgu3_order, primovalore_scan, psu3_order,
                               quattordici_scan)


def test_group_orders():
    assert pgu3_order(2) == 8 * 3 * 9
    assert psu3_order(2) == 72
    assert psu3_order(5) == 126000
    assert psu3_order(4) == pgu3_order(4)  # gcd(3, 5) = 1


def test_case_orders_spot_values():
    by_label = {}
    for e in mh_orders(5):
        by_label.setdefault(e.label, []).append(e.order)
    assert by_label["i"] == [1000]     # 125 * 24 / 3
    assert 720 in by_label["xi"] and 2520 in by_label["xii"]
    e8 = {e.label: e.order for e in mh_orders(8)}
    assert e8["iv"] == 57              # 3 (q^2 - q + 1) / 3
    assert {e.label: e.order for e in mh_orders(2)}["xv"] == 36


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 32])
def test_every_order_divides_psu3(q):
    total = psu3_order(q)
    for e in mh_orders(q):
        assert total % e.order == 0, (q, e.label, e.order)


def test_subfield_cases_present():
    labels64 = [e.label for e in mh_orders(64)]
    assert "xiii" in labels64      # PSU(3, 4) with 6/2 = 3 an odd prime
    assert "xiv" not in labels64   # 64 = 2^6 and 6/3 = 2 is even
    labels512 = {e.label for e in mh_orders(2**9)}
    assert "xiii" in labels512 and "xiv" in labels512


def test_order_excluded_survivors():
    s1 = sorted({e.label for e in order_excluded(21, 64, 1)})
    assert s1 == ["i", "ii"]
    s3 = sorted({e.label for e in order_excluded(21, 64, 3)})
    assert s3 == ["i", "ii"]
    s5 = sorted({e.label for e in order_excluded(31, 125, 1)})
    assert s5 == ["i", "ii", "v"]
    assert len(order_excluded(1, 8)) == len(mh_orders(8))  # m = 1: all survive


def test_dickson_catalog_q4():
    entries = dickson_orders(4)
    cyclic = next(e for e in entries if e.label == "i")
    assert cyclic.params["orders"] == [1, 3, 5]
    assert any(e.label == "vi" for e in entries)       # A5: 5 | q^2 - 1
    assert any(e.label == "iv" for e in entries)       # k even
    assert not any(e.label == "v" for e in entries)    # 16 does not divide 15


def test_dickson_odd_order_query():
    assert odd_order_subgroups_cyclic(4)
    assert odd_order_subgroups_cyclic(2**10)
    assert odd_order_subgroups_cyclic(125, coprime_to_char=True)
    assert not odd_order_subgroups_cyclic(125, coprime_to_char=False)


def test_lemmino_spot_values():
    assert alternating_power_sum(3, 5) == 1 - 32 + 1024 == 993
    assert 993 > 3 * 33
    assert (2**5 + 1) // 3 == 11
    assert (2**5 + 1) // 3 > 2**2 - 2 + 1 == 3


def test_lemmino_scan_clean():
    assert lemmino_scan(20) == []


def test_lemmino_rejects_small_bound():
    with pytest.raises(CatalogError):
        lemmino_scan(2)


def test_quattordici_unique_survivor():
    table = quattordici_scan(20)
    assert {m for m, s in table.items() if s} == {3}
    assert table[3] == ["iv"]
    assert all(m % 2 == 1 for m in table)
    # the survival reason: 2^m + 1 divides 9 only at m = 3
    assert [m for m in table if 9 % (2**m + 1) == 0] == [3]


def test_primovalore_scan():
    hits = primovalore_scan(2000)
    assert hits == [1, 2, 3, 10]
    assert (2128 * 10 - 1568) % 112 == 0
    assert (2128 * 4 - 1568) % 22 != 0
    assert 2128 * 10 - 1568 == 112 * 176


def test_primovalore_direct_divisibility_q10():
    q = 10
    assert (q**9 * (q**9 + 1) * (q**6 - 1)) % (q * q + q + 2) == 0


def test_catalog_rejects_non_prime_powers():
    with pytest.raises(CatalogError):
        mh_orders(6)
    with pytest.raises(CatalogError):
        dickson_orders(12)
