"""Exact calculus for twisted Yangians of types B, C and D.

The compiled core exposes the symbolic identity checks (reflection equation,
symmetry relation, trace identity, unitarity) and the highest-weight
classification calculus (association, synthesis, twists, restriction).
Rationals cross the boundary as strings like "3/4"; structured values are
plain dicts in the same shape as the CLI JSON.
"""

from tyk._tyk import (
    Pair,
    __version__,
    associate,
    classify,
    evaluate,
    g_weight,
    h_shift,
    onedim_weight,
    p_function,
    pair,
    psi_twist,
    psi_twist_weight,
    restrict,
    scr_g,
    string_set,
    synthesize,
    tensor,
    trivial_weight,
    verify,
)

__all__ = [
    "Pair",
    "__version__",
    "associate",
    "classify",
    "evaluate",
    "g_weight",
    "h_shift",
    "onedim_weight",
    "p_function",
    "pair",
    "psi_twist",
    "psi_twist_weight",
    "restrict",
    "scr_g",
    "string_set",
    "synthesize",
    "tensor",
    "trivial_weight",
    "verify",
]
