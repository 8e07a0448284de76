"""Exact combinatorics and holonomy Lie algebras of central arrangements over Q."""
from .arrangements import (Arrangement, Hyperplane, Subarrangement, essential_rank,
                           parse_arrangement, rank_of, read_arrangement)
from .freelie import (HallBasis, LieElement, TruncatedSeries, exponent_polynomial, hall_basis,
                      lcs_product, normal_form, witt_dimension)
from .holonomy import (check_decomposition, check_lcs_formula, check_lemma_J, graded_ideal,
                       ideal_generators, kernel_report, phi_series, restrict_check_closed)
from .hypersolvable import (find_composition_series, hypersolvable_invariants, is_closed,
                            is_complete, is_solvable, verify_rank2_preserved, vertical_deformation)
from .lattice import (ABOVE_TRUNCATION, Flat, IntersectionLattice, build_lattice,
                      exponents_from_chain, find_modular_chain, is_modular, is_modular_pair,
                      is_supersolvable, join, meet, rank2_flats, split_by_modular_flat)

__version__ = "0.1.0"
