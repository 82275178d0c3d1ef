"""Independent numerical checks: mode ODE integration and truncated Fock space."""
from .fock import (
    FockConfig,
    FockOperators,
    commutator_residuals,
    fock_operators,
    verify_rotation_law,
    verify_squeeze_law,
    verify_target_factorization,
)
from .ode import (
    IntegratorConfig,
    ModeRun,
    desitter_numeric_bogoliubov,
    integrate_mode,
    integrate_trajectory,
    numeric_bogoliubov,
    smooth_profile_bogoliubov,
)
