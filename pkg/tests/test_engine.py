import pytest

from nibble.engine import (
    LatticeGame,
    SkewGame,
    TamariGame,
    WeakGame,
    engine_move,
    make_game,
    verify_engine_never_loses,
    winning_moves,
)
from nibble.errors import SizeLimit
from nibble.lattice import chain, product


def test_skew_game_basics():
    game = SkewGame((2, 2))
    start = game.start()
    assert game.is_eeta(start)
    assert [mv for mv, _ in game.legal_moves(start)] == [[[2, 2]]]
    assert winning_moves(game, start) == []


def test_skew_corners_of_two_row_shape():
    game = SkewGame((2, 1))
    assert game.corners(game.start()) == [(1, 2), (2, 1)]
    moves = [mv for mv, _ in game.legal_moves(game.start())]
    assert [[1, 2], [2, 1]] in moves  # both corners at once


def test_single_box_is_first_player_win():
    game = SkewGame((1,))
    start = game.start()
    assert not game.is_eeta(start)
    assert winning_moves(game, start) == [[[1, 1]]]


def test_engine_move_prefers_eeta():
    game = TamariGame(3)
    move, state = engine_move(game, game.start())
    assert game.is_eeta(state)
    assert move == [1, 2, 3]  # canonically least winning reply


def test_hint_at_tamari_top():
    game = TamariGame(3)
    assert winning_moves(game, game.start()) == [[1, 2, 3], [2, 3, 1]]


def test_weak_game_size_guard():
    with pytest.raises(SizeLimit):
        WeakGame(9)


def test_engine_never_loses_families():
    assert verify_engine_never_loses(SkewGame((2, 2))) >= 3
    game = TamariGame(5)
    seed = max(
        (nxt for _, nxt in game.legal_moves(game.start()) if game.is_eeta(nxt)),
        key=game.canonical_key,
    )
    assert verify_engine_never_loses(game, start=seed) > 0
    lat_game = LatticeGame(product(chain(3), chain(3)))
    assert verify_engine_never_loses(lat_game) > 0


def test_make_game_dispatch():
    assert make_game("skew", {"lam": [2, 1], "mu": []}).family == "skew"
    assert make_game("tamari", {"n": 4}).family == "tamari"
    assert make_game("weak", {"n": 4}).family == "weak"
    lat = {"n": 2, "covers": [[0, 1]]}
    assert make_game("lattice", {"lattice": lat}).family == "lattice"
    with pytest.raises(ValueError):
        make_game("nope", {})


def test_render_marks_corners():
    game = SkewGame((2, 2))
    text = game.render(game.start())
    assert "[*]" in text and "[ ]" in text
