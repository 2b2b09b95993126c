"""Random graph spectra and energy: sampling, exact eigensolver, limiting laws,
and Monte Carlo experiments with reproducible seeds.
"""

__version__ = "0.1.0"

from .errors import (
    ConsistencyError,
    DegenerateLawError,
    GraphEnergyError,
    InvalidPartitionError,
    NumericalError,
    ParameterError,
    RecordError,
)
from .graphs import (
    PartitionSpec,
    PartSizes,
    center,
    complete_multipartite,
    partition_sizes,
    quasi_unit,
    sample_er,
    sample_multipartite,
)
from .eigen import BACKEND
from .spectra import (
    eigenvalues_sym,
    energy,
    esd_eval,
    ks_distance,
    kyfan_gap,
    moment,
    scaled_spectrum,
    symmetry_defect,
)
from .laws import (
    MpLaw,
    balanced_multipartite_coeff,
    bipartite_coeff,
    elliptic_e,
    elliptic_k,
    er_energy_coeff,
    koolen_moulton,
    mp_density,
    mp_point_mass,
    mp_sqrt_mean,
    multipartite_variance,
    semicircle_cdf,
    semicircle_density,
    unbalanced_bounds,
    vanishing_parts_coeff,
)
from .experiments import (
    ExperimentConfig,
    RunRecord,
    TrialStat,
    convergence_study,
    derive_seed,
    kyfan_suite,
    load_record,
    reproduce_table,
    run,
    run_bipartite,
    run_er,
    run_multipartite,
    save_record,
)

__all__ = [
    "__version__",
    "BACKEND",
    "GraphEnergyError",
    "ParameterError",
    "InvalidPartitionError",
    "DegenerateLawError",
    "ConsistencyError",
    "NumericalError",
    "RecordError",
    "PartitionSpec",
    "PartSizes",
    "partition_sizes",
    "sample_er",
    "sample_multipartite",
    "quasi_unit",
    "complete_multipartite",
    "center",
    "eigenvalues_sym",
    "energy",
    "scaled_spectrum",
    "esd_eval",
    "moment",
    "ks_distance",
    "kyfan_gap",
    "symmetry_defect",
    "semicircle_density",
    "semicircle_cdf",
    "er_energy_coeff",
    "balanced_multipartite_coeff",
    "vanishing_parts_coeff",
    "multipartite_variance",
    "elliptic_k",
    "elliptic_e",
    "MpLaw",
    "mp_density",
    "mp_point_mass",
    "mp_sqrt_mean",
    "bipartite_coeff",
    "unbalanced_bounds",
    "koolen_moulton",
    "ExperimentConfig",
    "TrialStat",
    "RunRecord",
    "derive_seed",
    "run",
    "run_er",
    "run_multipartite",
    "run_bipartite",
    "convergence_study",
    "kyfan_suite",
    "reproduce_table",
    "save_record",
    "load_record",
]
