import math
import random

import pytest

from nibble.errors import HypothesisViolated, InvalidShape
from nibble.lattice import WinLabel
from nibble.posets import (
    IdealGameSolver,
    check_deep_poset,
    count_eeta_ideals,
    explicit_ideal_lattice,
    from_covers,
    rectangle,
    shifted_staircase,
    skew_shape,
    solve_ideal_game,
    staircase,
    type_a_root_poset,
)


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_rectangle_shape():
    r = rectangle(2, 2)
    assert r.n == 4
    assert len(r.covers) == 4


def test_type_a_smallest():
    a2 = type_a_root_poset(2)
    assert a2.n == 3
    minimal = [x for x in range(3) if not a2.children[x]]
    maximal = [x for x in range(3) if not a2.parents[x]]
    assert len(minimal) == 2 and len(maximal) == 1


def test_skew_box_count():
    assert skew_shape((5, 4, 2, 2), (3, 1)).n == 9


def test_skew_requires_containment():
    with pytest.raises(InvalidShape):
        skew_shape((2, 2), (3,))


def test_disconnected_skew_still_ordered():
    # boxes (1,1) and (2,2) are comparable even though not adjacent
    p = skew_shape((2, 1), (1,))
    # shape is boxes (1,2) and (2,1): incomparable, no covers
    assert p.n == 2 and len(p.covers) == 0
    q = skew_shape((2, 2), ())
    assert (0, 3) not in q.covers  # (1,1) < (2,2) via length-2 chains only


def test_ideal_counts():
    assert len(rectangle(2, 2).all_ideals()) == 6
    for n in range(1, 9):
        assert len(type_a_root_poset(n).all_ideals()) == catalan(n + 1)
    for n in range(1, 13):
        assert len(shifted_staircase(n).all_ideals()) == 2 ** n


def test_ideal_moves():
    p = rectangle(2, 2)
    assert p.ideal_moves(0) == [0]
    single = p.ideal_of([0])  # the northwest box alone
    assert sorted(p.ideal_moves(single)) == [0, single]
    full = p.full
    assert len(p.max_elements(full)) == 1
    assert len(p.ideal_moves(full)) == 2


def test_solve_ideal_examples():
    assert solve_ideal_game(rectangle(1, 1)) is WinLabel.ATNISS
    assert solve_ideal_game(type_a_root_poset(2)) is WinLabel.EETA
    assert solve_ideal_game(type_a_root_poset(2), 0) is WinLabel.EETA


def test_count_eeta_examples():
    assert count_eeta_ideals(rectangle(2, 2)) == 4
    assert count_eeta_ideals(type_a_root_poset(2)) == 2
    assert count_eeta_ideals(rectangle(0, 0)) == 1


def test_rect_2x2_eeta_set_is_pinned():
    p = rectangle(2, 2)
    solver = IdealGameSolver(p)
    eeta_sizes = sorted(
        bin(m).count("1") for m in p.all_ideals() if solver.label(m) is WinLabel.EETA
    )
    # empty, the two 2-box ideals, and the full square
    assert eeta_sizes == [0, 2, 2, 4]


def test_agreement_with_explicit_lattice():
    for poset in [
        rectangle(3, 3),
        type_a_root_poset(4),
        staircase(4),
        skew_shape((4, 3, 2), (1,)),
        shifted_staircase(4),
    ]:
        lat, ideals = explicit_ideal_lattice(poset)
        labels = lat.solve()
        solver = IdealGameSolver(poset)
        for i, mask in enumerate(ideals):
            assert labels[i] is solver.label(mask)


def test_deep_poset_trivial_mu():
    p = staircase(4)
    delta = p.full
    assert check_deep_poset(p, delta, p.full, 0)


def test_deep_poset_staircase_instances():
    # inside a 5x5 square: delta = staircase(3) ideal, mu below its maxima
    p = rectangle(5, 5)
    box_index = {tuple(map(int, p.labels[x].split(","))): x for x in range(p.n)}

    def ideal_of_partition(parts):
        mask = 0
        for i, part in enumerate(parts, start=1):
            for j in range(1, part + 1):
                mask |= 1 << box_index[(i, j)]
        return mask

    delta = ideal_of_partition((3, 2, 1))
    lam = ideal_of_partition((5, 4, 3, 2))
    for mu_parts in [(), (1,), (2,), (2, 1)]:
        assert check_deep_poset(p, delta, lam, ideal_of_partition(mu_parts))


def test_deep_poset_hypothesis_violations():
    p = rectangle(3, 3)
    box_index = {tuple(map(int, p.labels[x].split(","))): x for x in range(p.n)}
    chain_ideal = (1 << box_index[(1, 1)]) | (1 << box_index[(1, 2)])
    # (1,1) is non-maximal and lies below only one maximal element of delta
    with pytest.raises(HypothesisViolated):
        check_deep_poset(p, chain_ideal, p.full, 0)
    with pytest.raises(HypothesisViolated):
        check_deep_poset(p, 1 << box_index[(1, 1)], p.full, 1 << box_index[(1, 1)])


def test_deep_poset_random_instances():
    from nibble.verify import _random_deep_instance, _random_poset

    rng = random.Random(5150)
    done = 0
    while done < 50:
        poset = _random_poset(rng)
        instance = _random_deep_instance(rng, poset)
        if instance is None:
            continue
        delta, lam, mu = instance
        assert check_deep_poset(poset, delta, lam, mu)
        done += 1


def test_restrict_recomputes_covers():
    p = rectangle(2, 2)
    # remove the middle boxes: restriction to {(1,1), (2,2)} has a direct cover
    keep = p.ideal_of([x for x in range(p.n)])
    corner_nw = next(x for x in range(p.n) if p.labels[x] == "1,1")
    corner_se = next(x for x in range(p.n) if p.labels[x] == "2,2")
    sub, elems = p.restrict((1 << corner_nw) | (1 << corner_se))
    assert sub.n == 2
    assert sub.covers == ((0, 1),)
    assert keep == p.full


def test_generic_from_covers_roundtrip():
    p = from_covers(3, [(0, 1), (1, 2)])
    assert p.topo == [0, 1, 2]
    assert p.all_ideals() == [0, 1, 3, 7]
