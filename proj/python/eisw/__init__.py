"""Eisenstein and winding elements of modular symbols for Gamma_0(N).

Exact computations are exposed through the compiled `_core` module; rational
values cross the boundary as exact ``"p/q"`` strings (``fractions.Fraction``
accepts them directly).
"""

from ._core import (  # noqa: F401
    __version__,
    bbar1,
    cusp_classify,
    dedekind_sum,
    dedekind_sum_fast,
    eisenstein_a0,
    eisenstein_divisor,
    eisenstein_element,
    f_values,
    genus_x0,
    p1_list,
    p1_normalize,
    period,
    presentation_rank,
    q_expansion,
    ramification_index,
    twist_map,
    verify_eisenstein,
    verify_period,
    winding_element,
    xgcd,
)

__all__ = [
    "__version__",
    "bbar1",
    "cusp_classify",
    "dedekind_sum",
    "dedekind_sum_fast",
    "eisenstein_a0",
    "eisenstein_divisor",
    "eisenstein_element",
    "f_values",
    "genus_x0",
    "p1_list",
    "p1_normalize",
    "period",
    "presentation_rank",
    "q_expansion",
    "ramification_index",
    "twist_map",
    "verify_eisenstein",
    "verify_period",
    "winding_element",
    "xgcd",
]
