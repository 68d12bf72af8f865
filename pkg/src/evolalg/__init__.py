"""Regular evolution algebras built from finite simple graphs.

Every finite group arises as the full automorphism group of such an algebra;
this package builds the algebras, computes their automorphism groups exactly
and checks the result against the group it started from.
"""

from .errors import *  # noqa: F401,F403
from .evolution import AlgebraElement, EvolutionAlgebra, is_regular, multiply, new_algebra, square_rank
from .fields import GF, QQ, FieldDescriptor, FieldScalar, ScalarMatrix, determinant, rank, scalar_arith
from .frucht import realize_algebra, realize_graph, verify_realization
from .functor import build_algebra, map_morphism, rebase, recover_graph
from .graph import SimpleGraph, graph_automorphisms, graph_isomorphism, is_morphism, new_graph
from .groups import (FiniteGroup, cayley_digraph, group_from_permutations, group_from_table,
                     group_isomorphic, minimal_generators)
from .monomial import MonomialMap, algebra_automorphisms, algebra_isomorphism, is_automorphism
from .perm import PermGroup

__version__ = "0.1.0"
