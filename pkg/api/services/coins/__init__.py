"""Coin casting services - coined walks <-> graph-phased Szegedy walks."""

from .coin_set import (
    CoinSet,
    coin_set_from_dict,
    coin_set_to_dict,
    load_coin_set,
    grover_coin,
    hadamard_coin,
    line_coin_set,
    minus_identity_coin,
    ntilde_coin,
    pauli_x_coin,
)
from .cast_to_szegedy import CastResult, LemmaClass, cast_coin, cast_to_szegedy
from .szegedy_to_coins import szegedy_to_coins
from .double_castability import DoubleCastReport, check_double_castability

__all__ = [
    "CoinSet",
    "coin_set_from_dict",
    "coin_set_to_dict",
    "load_coin_set",
    "grover_coin",
    "hadamard_coin",
    "line_coin_set",
    "minus_identity_coin",
    "ntilde_coin",
    "pauli_x_coin",
    "CastResult",
    "LemmaClass",
    "cast_coin",
    "cast_to_szegedy",
    "szegedy_to_coins",
    "DoubleCastReport",
    "check_double_castability",
]
