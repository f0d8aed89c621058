import math

import pytest

from nibble.dyck import (
    avoids,
    classify_runs,
    count_avoiding,
    dyck_paths,
    gf_system_series,
    radical_report,
    type_a_decompose,
    type_a_eeta_count,
    type_a_encode,
    type_a_label_by_decomposition,
    type_a_series,
)
from nibble.errors import NotDyck, ShapeOutOfRange, SizeLimit
from nibble.lattice import WinLabel
from nibble.posets import IdealGameSolver, count_eeta_ideals, type_a_root_poset


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_dyck_validation():
    with pytest.raises(NotDyck):
        classify_runs("UDD")
    with pytest.raises(NotDyck):
        classify_runs("UU")
    with pytest.raises(NotDyck):
        classify_runs("UX")


def test_run_classification_example():
    word = "UD" + "UU" + "D" + "U" + "DD" + "UUUU" + "DDDD"
    runs = classify_runs(word)
    texts = [r.step * r.length for r in runs]
    assert texts == ["U", "D", "UU", "D", "U", "DD", "UUUU", "DDDD"]
    assert [r.weird for r in runs] == [False, False, True, True, True, True, True, True]
    assert [r.strange for r in runs] == [
        False,
        True,
        False,
        True,
        True,
        False,
        False,
        True,
    ]


def test_run_classification_tiny():
    runs = classify_runs("UD")
    assert not any(r.weird for r in runs)
    assert not any(r.strange for r in runs)
    runs = classify_runs("UUDD")
    assert all(r.weird for r in runs)
    assert all(r.strange for r in runs)


def test_path_generation_counts():
    for n in range(7):
        assert sum(1 for _ in dyck_paths(n)) == catalan(n)


def test_count_avoiding_pins():
    assert count_avoiding(1, "odd", "odd") == 0
    assert count_avoiding(2, "odd", "odd") == 1  # only UUDD
    assert [count_avoiding(n, "weird", "weird") for n in range(4)] == [1, 1, 1, 2]


def test_count_avoiding_cap():
    with pytest.raises(SizeLimit):
        count_avoiding(17, "odd", "odd")


def test_series_match_brute_force():
    F, Fw, Fs, G, H = gf_system_series(10)
    for n in range(9):
        assert F[n] == count_avoiding(n, "odd", "odd")
        assert Fw[n] == count_avoiding(n, "weird", "weird")
        assert Fs[n] == count_avoiding(n, "strange", "strange")
        assert G[n] == count_avoiding(n, "odd", "strange")
        assert H[n] == count_avoiding(n, "strange", "odd")


def test_series_coefficient_identity():
    # second coefficient of the weird-avoider series from its equation
    F, Fw, _, _, _ = gf_system_series(6)
    assert Fw[2] == sum(F[i] * Fw[1 - i] for i in range(2)) == 1


def test_reversal_bijection():
    for n in range(9):
        assert count_avoiding(n, "odd", "strange") == count_avoiding(
            n, "strange", "odd"
        )


def test_series_bounded_by_catalan():
    _, Fw, _, _, _ = gf_system_series(12)
    for n in range(13):
        assert 0 < Fw[n] <= catalan(n) or n == 0


def test_type_a_counts_against_oracle():
    for n in range(1, 6):
        assert type_a_eeta_count(n) == count_eeta_ideals(type_a_root_poset(n))


def test_type_a_frozen_goldens():
    # oracle-derived on first run, frozen
    assert [type_a_eeta_count(n) for n in range(1, 9)] == [1, 2, 4, 10, 24, 62, 160, 428]


def test_type_a_encode_paper_example():
    lam = (11, 11, 11, 10, 10, 6, 6, 4, 3, 3, 3, 1)
    word = type_a_encode(lam, 12)
    assert word == "U" + "UDUUDD" + "DUDU" + "UD" + "DU" + "UUUDDUDD" + "DU" + "D"
    assert len(word) == 26


def test_type_a_encode_small():
    assert type_a_encode((1,), 1) == "UUDD"
    assert type_a_encode((), 1) == "UDUD"
    assert not avoids("UUDD", "weird", "weird")
    assert avoids("UDUD", "weird", "weird")


def test_type_a_encode_range_check():
    with pytest.raises(ShapeOutOfRange):
        type_a_encode((3,), 2)  # exceeds the square
    with pytest.raises(ShapeOutOfRange):
        type_a_encode((), 3)  # misses the inner staircase


def test_type_a_decompose_paper_example():
    lam = (11, 11, 11, 10, 10, 6, 6, 4, 3, 3, 3, 1)
    segments, parts, sizes = type_a_decompose(lam, 12)
    assert segments == ["ENEENN", "EN", "EEENNENN"]
    assert parts == [(3, 3, 1), (1,), (4, 4, 3, 3)]
    assert sizes == [3, 1, 4]
    assert type_a_label_by_decomposition(lam, 12) is WinLabel.ATNISS


def test_type_a_decompose_staircase_is_empty():
    segments, parts, sizes = type_a_decompose((3, 2, 1), 4)
    assert segments == [] and parts == [] and sizes == []


def test_decomposition_label_matches_oracle():
    # every ideal of the n-row root poset, via its padded partition
    from nibble.young import staircase_partition, subpartitions_in_box, contains

    for n in range(1, 5):
        poset = type_a_root_poset(n)
        solver = IdealGameSolver(poset)
        delta = staircase_partition(n - 1)
        box_index = {
            tuple(map(int, poset.labels[x].split(","))): x for x in range(poset.n)
        }
        for lam in subpartitions_in_box(n, n):
            if not contains(lam, delta):
                continue
            mask = 0
            for i, part in enumerate(lam, start=1):
                inner = delta[i - 1] if i - 1 < len(delta) else 0
                for j in range(inner + 1, part + 1):
                    mask |= 1 << box_index[(i, j)]
            assert solver.label(mask) is type_a_label_by_decomposition(lam, n), (lam, n)


def test_encode_avoidance_matches_oracle():
    from nibble.young import staircase_partition, subpartitions_in_box, contains

    for n in range(1, 5):
        poset = type_a_root_poset(n)
        solver = IdealGameSolver(poset)
        delta = staircase_partition(n - 1)
        box_index = {
            tuple(map(int, poset.labels[x].split(","))): x for x in range(poset.n)
        }
        for lam in subpartitions_in_box(n, n):
            if not contains(lam, delta):
                continue
            mask = 0
            for i, part in enumerate(lam, start=1):
                inner = delta[i - 1] if i - 1 < len(delta) else 0
                for j in range(inner + 1, part + 1):
                    mask |= 1 << box_index[(i, j)]
            eeta = solver.label(mask) is WinLabel.EETA
            assert eeta == avoids(type_a_encode(lam, n), "weird", "weird")


def test_radical_report_structure():
    rep = radical_report(30)
    assert rep["residual_is_zero"] is False
    assert rep["residual_first_nonzero"][0] == 0
    assert abs(rep["reciprocal_of_root"] - 3.13040) < 1e-3
    assert rep["series_head"][:4] == [1, 2, 4, 10]


def test_type_a_series_head():
    w = type_a_series(10)
    assert [int(w[n]) for n in range(1, 6)] == [1, 2, 4, 10, 24]
