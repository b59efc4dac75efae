"""Symmetry-breaking colorings of perfect k-ary trees and k-podes."""
from .colorings import (
    SchemeId,
    almost_efficient_variants,
    frugal_coloring,
    k_distinguishing_coloring,
    kpode_equality_coloring,
    middle_coloring,
)
from .dcs_matrix import RowPermutedMatrix, cyclic_blocks, general_dcs, lemma_rows, verify_dcs
from .errors import BudgetExceeded, DomainError
from .oracle import OracleBudget, cost_number, min_colors, min_paint_cost, spectrum_oracle
from .spectrum import (
    SpectrumReport,
    cost_number_closed,
    dist_closed,
    fdist_closed,
    fix_closed,
    rho_closed,
    spectrum_closed,
)
from .symmetry import (
    AutomorphismReport,
    automorphism_count,
    fixing_number_bruteforce,
    is_distinguishing,
    is_fixing_set,
)
from .tree_core import (
    Coloring,
    KPode,
    PerfectKAry,
    Tree,
    build_kpode,
    build_perfect_tree,
    canonical_code,
    leafy_subtree_roots,
)

__version__ = "0.1.0"
