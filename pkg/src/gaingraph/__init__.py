"""Matrix theory of complex unit gain graphs, with a bound-verification engine."""

from .gains import GAIN_TOL, Gain, NEUTRAL, HALF_TURN, as_gain, turns_distance
from .graph import (
    DegreeProfile,
    Edge,
    GainGraph,
    GraphError,
    InversePairPartition,
    build_graph,
    connected_components,
    degree_profile,
    delete_edge,
    gain_of_walk,
    gain_quotient,
    inverse_pair_partition,
    is_connected,
    negate_gains,
)
from .generators import (
    all_negative,
    all_neutral,
    broom,
    complete,
    cone_triangle,
    cycle,
    generate,
    path,
    random_graph,
    star,
)
from .matrices import (
    adjacency,
    conjugate_by_switch,
    degree_matrix,
    gram_check,
    incidence,
    laplacian,
    quadratic_form,
    signless_laplacian,
    switching_matrix,
)
from .switching import (
    BalanceCertificate,
    apply_switch,
    balance_certificate,
    balanced_component_count,
    equivalent_to_all_negative,
    rank_prediction,
    switching_equivalent,
)
from .eigen import ConvergenceError, PairingError, Spectrum, eigen_hermitian
from .spectra import (
    ClosedFormMoments,
    adjacency_spectrum,
    laplacian_spectrum,
    FamilySpectra,
    char_poly_eval,
    closed_form_moments,
    cycle_spectrum,
    moment,
    path_spectrum,
    rayleigh_quotient,
    spectral_radius,
)
from .bounds import (
    BoundReport,
    ConnectivityError,
    IdentityCheck,
    VerificationResult,
    adjacency_moment_bounds,
    corollary_upper_bounds,
    delta_bound,
    interlacing_check,
    inverse_pair_bounds,
    laplacian_lower_bound,
    laplacian_moment_bounds,
    signless_comparison,
    verify_all,
)

__version__ = "0.1.0"
