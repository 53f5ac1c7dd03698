"""Graph states, graph codes and local complementation over GF(2)."""

from .f2linalg import BinaryMatrix, BinaryVector, mat_mul, nullspace, rank
from .graph import ExtendedGraph, SimpleGraph, local_complement, parse_graph, ring, star
from .graphcode import GraphCode, build_code, derive_b, distance, extract_stabilizers, syndrome
from .graphstate import generators, lc_operator, lc_orbit
from .pauli import PauliOperator, from_string

__version__ = "0.1.0"
