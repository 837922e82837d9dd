//! Ground truth, the independent quadrature oracle, error sweeps and plot
//! data output.

pub mod csv;
pub mod quadrature;
pub mod sweep;

pub use self::csv::{emit_csv, to_csv_string, write_csv};
pub use quadrature::{adaptive_simpson, quadrature_perimeter, QuadratureResult, DEFAULT_TOL};
pub use sweep::{
    default_grid, endpoint_warning, ground_truth, linear_grid, match_depth, parse_grid,
    relative_error, series_relative_error, sweep, GroundTruth, MethodColumn, MethodSummary,
    SweepReport, DEFAULT_MATCH_ORDER, TRUNCATION_WARNING,
};
