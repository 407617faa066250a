"""Green functions and convolution potentials of -phi'' + V(phi) = source in 1D."""

from ._nlgreen import (
    ModelParams,
    NlgreenError,
    SourceDistribution,
    digamma,
    erf,
    erfc,
    green_linear,
    green_tan,
    green_tanh,
    hyp2f1,
    phi_tanh,
    point_linear,
    point_tan,
    point_tanh,
    pole_locations,
    potential,
    psi_tan,
    solve_ivp,
    step_tanh,
    tan_step,
    v1_step,
    ve_exponential,
    verify_point,
    vlin_gaussian,
)

__all__ = [
    "ModelParams",
    "NlgreenError",
    "SourceDistribution",
    "digamma",
    "erf",
    "erfc",
    "green_linear",
    "green_tan",
    "green_tanh",
    "hyp2f1",
    "phi_tanh",
    "point_linear",
    "point_tan",
    "point_tanh",
    "pole_locations",
    "potential",
    "psi_tan",
    "solve_ivp",
    "step_tanh",
    "tan_step",
    "v1_step",
    "ve_exponential",
    "verify_point",
    "vlin_gaussian",
]
