"""Soft-set decision making under binary, grey and neutrosophic information."""

from ._softdm import (
    DEFAULT_EPSILON,
    CellMismatchError,
    DecisionReport,
    DecisionTable,
    DomainError,
    Error,
    GradeScale,
    GreyNumber,
    Information,
    InvalidOptionsError,
    NeutrosophicTriplet,
    ParseError,
    TripletAccumulator,
    UnknownGradeError,
    ValidationError,
    alpha_cuts,
    choice_values_binary,
    choice_values_grey,
    choice_values_neutrosophic,
    classify_information,
    decide,
    default_scale,
    parse_scale,
    parse_table,
    rank_combined,
    rank_conservative,
    rank_optimistic,
    representative_value,
    run_cli,
    scale_grey,
    scale_triplet,
    tabulate,
    triplet_mean,
    validate_scale,
    write_scale,
    write_table,
)

__all__ = [name for name in dir() if not name.startswith("_")]
