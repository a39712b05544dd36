"""Balanced locally repairable codes built from partial geometries."""

from ._core import (
    BlrcError,
    Code,
    GuardExceeded,
    IncidenceStructure,
    InvalidArgument,
    IoError,
    ParseError,
    PgParams,
    RepairError,
    ValidationError,
    analyze,
    bounds_table,
    build_code,
    catalog,
    dual,
    dumps,
    elliptic_quadric_gq,
    encode,
    grid,
    hyperoval_gq,
    incidence_matrix,
    is_information_set,
    is_mds,
    load,
    loads,
    make_pg_params,
    rate_lower,
    rate_upper,
    reconstruct,
    repair_profile,
    repair_symbol,
    run_cli,
    save,
    simulate,
    symplectic_gq,
    validate_pg,
    vartheta,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
