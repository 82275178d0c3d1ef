"""Nielsen-complexity upper bounds and gate depths for time-dependent oscillators."""
from .bogoliubov import (
    BogoliubovPair,
    ModeState,
    SqueezeRotationParams,
    bogoliubov_from_modes,
    bogoliubov_from_params,
    params_from_bogoliubov,
    particle_number,
    plane_wave_mode,
)
from .complexity import (
    ComplexityReport,
    c1_bound,
    c1_bound_bogoliubov,
    c2_bound,
    full_report,
    gate_depth_set1,
    gate_depth_set2,
)
from .models import (
    DeSitterPoint,
    SmoothProfile,
    SwitchedProfile,
    desitter_bogoliubov,
    desitter_curves,
    switched_bogoliubov,
    switched_complexity,
)
from .su11 import LieVector, bch_compose, bracket, rep_exponential

__version__ = "0.1.0"
