"""Tree-codes: sets of labelled spanning trees of K_n far apart in edge-swap distance."""

from __future__ import annotations

from .bounds import (BoundValue, BoundsTable, DeltaCurvePoint, bounds_table, delta_constants,
                     explicit_upper_bounds, first_upper_bound, lower_bound_independent,
                     polynomial_regime_distance, second_upper_bound, sphere_packing_bound)
from .codes import (DecodeResult, DistanceReport, TreeCode, code_from_edge_lists,
                    decode_erasures, decode_errors, min_distance, verify)
from .constructions import (FAMILIES, affine_triple_paths, bibd_two_star_code, code_11_35_8,
                            cubic_pp_trees, furedi_family, hamiltonian_paths, paths_and_stars,
                            sigma_11, stars)
from .errors import *  # noqa: F401,F403
from .field import FieldElement, FieldSpec, gf3, is_permutation_polynomial, prime_field
from .graph import (EdgeSet, Forest, LabeledTree, enumerate_spanning_trees, is_spanning_tree,
                    prufer_decode, prufer_encode, shared_edges, tree_distance)
from .oracle import (ConflictGraph, SearchBudget, count_forests, count_rooted_forests,
                     count_trees_containing, exact_A, greedy_code)

__version__ = "0.1.0"
