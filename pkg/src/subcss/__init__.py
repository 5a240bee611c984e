"""Exact-arithmetic toolkit for subsystem stabilizer and subsystem CSS codes."""

from .code import (
    CssSplit,
    DistanceResult,
    NoLogicalOperators,
    SubsystemCode,
    css_distances,
)
from .codefile import (
    CodeFileError,
    bacon_shor,
    builtin_code,
    emit_code_file,
    five_qubit,
    parse_code_file,
    random_code,
    trivial,
)
from .decode import (
    ClassicalCode,
    DecodeOutcome,
    DecodeStatus,
    InconsistentSyndrome,
    MonteCarloReport,
    NotWeightRespecting,
    ParDecoder,
    Syndrome,
    TrialCounts,
    exhaustive_sweep,
    monte_carlo,
    par_decoder_build,
    respects_weight,
    steane_recover,
    syndrome_of,
)
from .double import DoubledCode, delta, double_generator, double_subspace
from .gf import Subspace, kernel, rank, rref, solve
from .goursat import (
    DataCheckReport,
    GoursatData,
    StabilizerClass,
    check_complement_data,
    check_intersection_data,
    classify_stabilizer,
    goursat_of,
    reconstruct_from,
)
from .pauli import (
    PauliVector,
    flatten,
    format_pauli,
    omega,
    omega_complement,
    parse_pauli,
    psi,
    swt,
    unflatten,
    weight,
)
from .states import (
    CosetState,
    all_codewords,
    apply_pauli,
    apply_x,
    apply_z,
    codeword,
    dense_vector,
    is_fixed_by,
)

__version__ = "0.1.0"

__all__ = [
    "CssSplit",
    "DistanceResult",
    "NoLogicalOperators",
    "SubsystemCode",
    "css_distances",
    "CodeFileError",
    "bacon_shor",
    "builtin_code",
    "emit_code_file",
    "five_qubit",
    "parse_code_file",
    "random_code",
    "trivial",
    "ClassicalCode",
    "DecodeOutcome",
    "DecodeStatus",
    "InconsistentSyndrome",
    "MonteCarloReport",
    "NotWeightRespecting",
    "ParDecoder",
    "Syndrome",
    "TrialCounts",
    "exhaustive_sweep",
    "monte_carlo",
    "par_decoder_build",
    "respects_weight",
    "steane_recover",
    "syndrome_of",
    "DoubledCode",
    "delta",
    "double_generator",
    "double_subspace",
    "Subspace",
    "kernel",
    "rank",
    "rref",
    "solve",
    "DataCheckReport",
    "GoursatData",
    "StabilizerClass",
    "check_complement_data",
    "check_intersection_data",
    "classify_stabilizer",
    "goursat_of",
    "reconstruct_from",
    "PauliVector",
    "flatten",
    "format_pauli",
    "omega",
    "omega_complement",
    "parse_pauli",
    "psi",
    "swt",
    "unflatten",
    "weight",
    "CosetState",
    "all_codewords",
    "apply_pauli",
    "apply_x",
    "apply_z",
    "codeword",
    "dense_vector",
    "is_fixed_by",
]
