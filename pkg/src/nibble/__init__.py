"""Engine, enumerator and verification suite for last-player-loses meet
games (Nibble and friends) on finite lattices."""

from .lattice import FiniteLattice, WinLabel, append_top, build_lattice, product
from .posets import (
    FinitePoset,
    count_eeta_ideals,
    rectangle,
    shifted_staircase,
    skew_shape,
    solve_ideal_game,
    staircase,
    type_a_root_poset,
)

__all__ = [
    "FiniteLattice",
    "FinitePoset",
    "WinLabel",
    "append_top",
    "build_lattice",
    "count_eeta_ideals",
    "product",
    "rectangle",
    "shifted_staircase",
    "skew_shape",
    "solve_ideal_game",
    "staircase",
    "type_a_root_poset",
]
