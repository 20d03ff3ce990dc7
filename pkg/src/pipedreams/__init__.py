"""
Maximal pipedreams of permutations, built by ladder moves, together with the
permutation statistics (invcode, rajcode, movecode, reg), pipedream
enumeration and double Grothendieck polynomials they are checked against.
"""

from .compositions import WeakComposition
from .diagram import Diagram, col_weight, conjugate, dark, left_justify, row_weight, shift_down
from .maximal import (
    AlgorithmTrace,
    IRSequence,
    ir_recursive,
    ir_sequence,
    k_move_weights,
    last_iteration_column_counts,
    max_pipedream,
)
from .perm import (
    Permutation,
    PermutationError,
    compose,
    decompose,
    from_invcode,
    invcode,
    inverse,
    parse_permutation,
    permutations,
)
from .pipedream import (
    LadderSite,
    Move,
    MoveKind,
    Pipedream,
    acts_initially,
    apply_ladder,
    bottom_pipedream,
    enumerate_pd,
    initial_segment,
    is_paired,
    ladder_sites,
    permutation_of,
    sweep_column,
)
from .stats import d_count, movecode, rajcode, rajcode_inv, reg, rothe

__version__ = "0.1.0"
