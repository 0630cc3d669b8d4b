"""Qubit decoherence dynamics and quantum Zeno decay rates for low- and
high-frequency baths, beyond the rotating-wave approximation."""

from ._core import (  # noqa: F401
    BathKind,
    BathSpec,
    DampedCosineFit,
    DiscreteBath,
    DynamicsSeries,
    MethodValidityError,
    OracleSolver,
    Regime,
    Renormalization,
    Scheme,
    ShiftClass,
    ZbConfigError,
    ZbNumericalError,
    ZenoCurve,
    __version__,
    classify_shift,
    coupling_weight,
    decay_width,
    default_tau_grid,
    discretize,
    eta_map,
    find_pole,
    fit_damped_cosine,
    gamma_0,
    gamma_rwa_tau,
    gamma_tau,
    interaction_f,
    kernel_F,
    level_shift,
    oracle_eta,
    oracle_gamma,
    oracle_sigma_x,
    oracle_survival,
    peak_frequency,
    pv_integral,
    sigma_x_series,
    solve_eta,
    spectral_density,
    survival_probability,
    zeno_scan,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
