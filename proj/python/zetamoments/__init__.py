"""Weighted moments of zeta(1/2+it) and the identities behind them."""

from ._core import (
    A,
    A_continuation,
    A_integral,
    B_fourier,
    B_integral,
    CapacityError,
    DomainError,
    Error,
    GuardError,
    NonFiniteError,
    PoleError,
    Q,
    QuadSpec,
    S0,
    ToleranceNotMet,
    closed_form_poly,
    formula_k1,
    formula_k2,
    formula_k3,
    mellin_A,
    moment_direct,
    multi_integral_form,
    psi_from_A,
    psi_upper,
    scan_delta,
    t_coeff,
    verify,
    zeta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
