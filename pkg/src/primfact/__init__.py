"""Exact counting of primitive transposition factorizations of permutations.

A factorization pi = (s_1,t_1)...(s_k,t_k) into transpositions with
s_i < t_i is primitive when t_1 <= ... <= t_k.  This package counts such
factorizations three independent ways (exhaustive search, Jucys-Murphy class
algebra, character-theoretic generating functions), implements the closed
formulas that tie them together, and checks the Haar-unitary matrix-integral
identity exactly at integer dimensions.  Everything is exact arithmetic:
arbitrary-precision integers and rationals, no floating point.
"""

from .partitions import Partition, parse_partition
from .perms import Permutation, Transposition, parse_permutation

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "Permutation",
    "Transposition",
    "parse_partition",
    "parse_permutation",
    "__version__",
]
