from ._core import (
    Arc,
    ArcDecomposition,
    Budget,
    ColoringResult,
    CountValue,
    DecayResult,
    Equation,
    FourierGrid,
    FourthMomentReport,
    GreedyResult,
    KWeightedValue,
    Majorant,
    MomentValue,
    QuadratureResult,
    RadoStatus,
    SelectResult,
    SpectrumReport,
    Subspace,
    SubspaceFamily,
    TransferenceReport,
    WParams,
    arcs,
    compute_W,
    config_gap,
    count_brute,
    count_dft,
    count_ktrivial,
    decay_sup,
    default_b2,
    default_w,
    diagonal_family,
    divisor_count,
    fourier_at,
    fourier_grid,
    fourth_moment_ratio,
    gauss_sum,
    gcd_ll,
    integral_I,
    is_smooth,
    isqrt64,
    ktrivial_weighted,
    large_spectrum,
    lift_set,
    major_arc_error,
    major_arc_main,
    make_equation,
    make_family,
    make_wparams,
    moment_even,
    moment_quadrature,
    pairs_equal_family,
    plain_majorant,
    primes_upto,
    rado_number,
    restriction_ratio,
    scaled_wparams,
    select_b,
    sigma_count,
    smooth_numbers_upto,
    solution_free_greedy,
    sqrt_classes,
    system_direction,
    telescope_check,
    transference_statistic,
    weyl_ratio,
    wtricked_majorant,
)

__all__ = [name for name in dir() if not name.startswith("_")]
