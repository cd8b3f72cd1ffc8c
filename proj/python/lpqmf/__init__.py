"""Linear-phase IIR quadrature mirror filter design toolkit."""

from lpqmf._core import (  # noqa: F401
    FilterReport,
    FirCascade,
    PoleError,
    PreimageSpec,
    RationalFilter,
    RealPoly,
    RealizabilityError,
    SampledGrid,
    SymmetryError,
    ValidationError,
    analyze,
    check_sym,
    design,
    extract_spec,
    filter_from_json,
    filter_to_json,
    filterbank_roundtrip,
    fir_approximate,
    flatten,
    freq_response,
    highpass,
    maxflat,
    maxflat_response,
    moment_sum,
    positivity_check,
    qmf_defect,
    qmf_residual,
    scaling_samples,
    stopband,
    transition_slope,
    vanishing_moments,
    wavelet_samples,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
