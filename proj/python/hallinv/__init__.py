from ._core import (
    InfeasibleError,
    InputError,
    InvariantError,
    Presentation,
    a2_a3,
    abelianization,
    b1_cover_cyclic,
    beta,
    delta_abelian,
    delta_mpqs,
    fixture,
    hom_count,
    parse_presentation,
    run,
)

__all__ = [
    "InfeasibleError",
    "InputError",
    "InvariantError",
    "Presentation",
    "a2_a3",
    "abelianization",
    "b1_cover_cyclic",
    "beta",
    "delta_abelian",
    "delta_mpqs",
    "fixture",
    "hom_count",
    "parse_presentation",
    "run",
]
