import json
import math
from collections import defaultdict

import pytest

from pascalrepeats.census import (
    MultiplicityRecord,
    intersect_curves,
    multiplicity,
    scan_high_multiplicity,
)
from pascalrepeats.errors import PreconditionError
from pascalrepeats.ratios import ShiftPair
from pascalrepeats.search import equality_check


def tally_census(t_max: int) -> dict[int, set[tuple[int, int]]]:
    """Oracle: every occurrence of every value up to t_max, by direct walk.

    Rows up to 2*t_max suffice: beyond that even C(n,1) exceeds t_max, and
    interior entries grow monotonically along rows and columns.
    """
    occ: dict[int, set[tuple[int, int]]] = defaultdict(set)
    n = 1
    while n <= 2 * t_max:
        row_has_small = False
        for k in range(1, n // 2 + 1):
            v = math.comb(n, k)
            if v > t_max:
                break
            row_has_small = True
            occ[v].add((n, k))
            occ[v].add((n, n - k))
        if not row_has_small and n > t_max:
            break
        n += 1
    return occ


def test_multiplicity_known_small_values():
    assert multiplicity(2).count == 1
    assert multiplicity(2).occurrences == ((2, 1),)
    assert multiplicity(6).count == 3
    assert multiplicity(6).occurrences == ((4, 2), (6, 1), (6, 5))
    assert multiplicity(10).count == 4
    assert multiplicity(210).count == 6


def test_multiplicity_of_120_names_the_three_rows():
    rec = multiplicity(120)
    assert rec.count == 6
    for pos in [(120, 1), (16, 2), (10, 3)]:
        assert pos in rec.occurrences


def test_multiplicity_of_3003_is_eight():
    rec = multiplicity(3003)
    assert rec.count == 8
    assert (15, 5) in rec.occurrences
    assert (14, 6) in rec.occurrences
    assert (78, 2) in rec.occurrences
    assert (3003, 1) in rec.occurrences


def test_multiplicity_occurrences_are_sorted_and_valid():
    for t in (6, 120, 3003, 7140):
        rec = multiplicity(t)
        assert rec.occurrences == tuple(sorted(rec.occurrences))
        assert rec.count == len(rec.occurrences)
        for n, k in rec.occurrences:
            assert math.comb(n, k) == t


def test_multiplicity_agrees_with_exhaustive_tally():
    oracle = tally_census(2000)
    for t in range(2, 301):
        rec = multiplicity(t)
        assert set(rec.occurrences) == oracle[t], t
    # and on every value that repeats beyond the edges
    for t, occ in oracle.items():
        if len(occ) >= 3 and t <= 2000:
            assert multiplicity(t).count == len(occ), t


def test_multiplicity_parity_tracks_central_coefficients():
    centrals = {math.comb(2 * k, k) for k in range(1, 8)}
    for t in range(2, 1000):
        rec = multiplicity(t)
        if t in centrals:
            assert rec.count % 2 == 1, t
        else:
            assert rec.count % 2 == 0, t


def test_multiplicity_domain():
    with pytest.raises(PreconditionError):
        multiplicity(1)
    with pytest.raises(PreconditionError):
        multiplicity(0)


def test_scan_high_multiplicity_frozen_results():
    assert [r.t for r in scan_high_multiplicity(10**4, 8)] == [3003]
    assert [r.t for r in scan_high_multiplicity(200, 6)] == [120]
    assert [r.t for r in scan_high_multiplicity(10**5, 6)] == [
        120,
        210,
        1540,
        3003,
        7140,
        11628,
        24310,
    ]


def test_scan_results_carry_consistent_records():
    for rec in scan_high_multiplicity(10**4, 6):
        assert rec.count >= 6
        assert rec.count == multiplicity(rec.t).count
        assert rec.occurrences == multiplicity(rec.t).occurrences


def test_scan_agrees_with_tally_oracle():
    oracle = tally_census(5000)
    want = sorted(t for t, occ in oracle.items() if len(occ) >= 4)
    got = [r.t for r in scan_high_multiplicity(5000, 4)]
    assert got == want


def test_scan_domain():
    with pytest.raises(PreconditionError):
        scan_high_multiplicity(1, 3)
    with pytest.raises(PreconditionError):
        scan_high_multiplicity(100, 2)


def test_multiplicity_record_json_dict_uses_strings_for_big_values():
    rec = multiplicity(3003)
    d = rec.to_json_dict()
    assert d["t"] == "3003"
    assert d["count"] == 8
    assert ["15", "5"] in d["occurrences"] or ("15", "5") in [tuple(o) for o in d["occurrences"]]
    json.dumps(d)


def test_intersect_curves_known_crossing():
    pts = intersect_curves(ShiftPair(104, 1), ShiftPair(110, 2), 200)
    assert (120, 1) in pts
    for x, y in pts:
        assert equality_check(x, y, ShiftPair(104, 1))
        assert equality_check(x, y, ShiftPair(110, 2))


def test_intersect_curves_matches_direct_double_filter():
    s1, s2 = ShiftPair(1, 1), ShiftPair(1, 3)
    got = intersect_curves(s1, s2, 300)
    want = sorted(
        (
            (x, y)
            for x in range(301)
            for y in range(x + 1)
            if equality_check(x, y, s1) and equality_check(x, y, s2)
        ),
        key=lambda p: (p[1], p[0]),
    )
    assert got == want


def test_intersect_curves_rejects_equal_shifts():
    with pytest.raises(PreconditionError):
        intersect_curves(ShiftPair(1, 1), ShiftPair(1, 1), 100)
