"""Core word, language, greedy and verification modules for GrayGreed."""

from .errors import GrayGreedError
from .generators import closed_form_gen_set, brute_force_gen_set, predict_last_word
from .greedy import GreedyTrace, greedy_run, greedy_step
from .languages import Family, LanguageSpec, enumerate_lex, member
from .structure import CheckReport, is_homogeneous_gray, is_rt_partitioned
from .words import BinaryWord, MoveOrder, parse_word

__all__ = [
    "BinaryWord",
    "CheckReport",
    "Family",
    "GrayGreedError",
    "GreedyTrace",
    "LanguageSpec",
    "MoveOrder",
    "brute_force_gen_set",
    "closed_form_gen_set",
    "enumerate_lex",
    "greedy_run",
    "greedy_step",
    "is_homogeneous_gray",
    "is_rt_partitioned",
    "member",
    "parse_word",
    "predict_last_word",
]
