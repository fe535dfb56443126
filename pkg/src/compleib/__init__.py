"""Exact-arithmetic toolkit for compatible Leibniz algebras.

Structure constants over the rationals, the shuffle-based graded bracket on
multilinear maps, cochain complexes and cohomology dimensions, first-order
deformations with Nijenhuis operators, and abelian extensions -- everything
computed exactly, with a small CLI on top (``compleib --help``).
"""

from .algebra import (Bimodule, CompatibleLeibnizAlgebra, CompatibleRepresentation,
                      LeibnizAlgebra, check_bimodule, check_compatibility,
                      check_compatible_algebra, check_compatible_representation,
                      check_leibniz, compatibility_defect, is_homomorphism,
                      leibniz_defect, pencil, semidirect_product)
from .balavoine import (Shuffle, bracket, circ, circ_k, degree, is_maurer_cartan,
                        is_mc_pair, shuffles)
from .cohomology import (Bidegree, Cochain, LiftedMap, LiftSignature, SizeCapExceeded,
                         bidegree_of, coboundary_matrix, cohomology_dim, d_rep,
                         d_rep_compatible, d_self, is_coboundary, is_cocycle, lift)
from .deformation import (DeformationReport, InfinitesimalDeformation,
                          check_deformation, deform_by_nijenhuis,
                          deformations_equivalent, deformed_bracket, is_nijenhuis,
                          nijenhuis_torsion, pencil_torsion_check)
from .extension import (AbelianExtension, CocyclePair, build_extension,
                        canonical_section, equivalence_from_cohomologous,
                        extensions_equivalent, extract_cocycle,
                        induced_representation, is_2cocycle)
from .linalg import Matrix, kernel_basis, rank, solve
from .tensor import BasedSpace, MultilinearMap, basis_vector, direct_sum, zero_vector

__all__ = [
    "AbelianExtension", "BasedSpace", "Bidegree", "Bimodule", "Cochain",
    "CocyclePair", "CompatibleLeibnizAlgebra", "CompatibleRepresentation",
    "DeformationReport", "InfinitesimalDeformation", "LeibnizAlgebra",
    "LiftSignature", "LiftedMap", "Matrix", "MultilinearMap", "Shuffle",
    "SizeCapExceeded", "basis_vector", "bidegree_of", "bracket",
    "build_extension", "canonical_section", "check_bimodule",
    "check_compatibility", "check_compatible_algebra",
    "check_compatible_representation", "check_deformation", "check_leibniz",
    "circ", "circ_k", "coboundary_matrix", "cohomology_dim",
    "compatibility_defect", "d_rep", "d_rep_compatible", "d_self",
    "deform_by_nijenhuis", "deformations_equivalent", "deformed_bracket",
    "degree", "direct_sum", "equivalence_from_cohomologous",
    "extensions_equivalent", "extract_cocycle", "induced_representation",
    "is_2cocycle", "is_coboundary", "is_cocycle", "is_homomorphism",
    "is_maurer_cartan", "is_mc_pair", "is_nijenhuis", "kernel_basis",
    "leibniz_defect", "lift", "nijenhuis_torsion", "pencil",
    "pencil_torsion_check", "rank", "semidirect_product", "shuffles", "solve",
    "zero_vector",
]
