//! Error metrics, scalar root finding and the benchmark table drivers.

mod metrics;
mod roots;
mod tables;

pub use metrics::{l2_error, l2_error_fn, l2_mean_error, simpson, ErrorNorm, ERROR_SAMPLES};
pub use roots::{root_find_scalar, try_root_find_scalar, RootSearch};
pub use tables::{
    reproduce_table, unsegmented_errors, ErrorRow, ErrorTable, TableId, TableOverrides, TableSetup, BRATU_REFERENCE_STEP,
    BRATU_VIM_K, EIGEN_TABLE_Q,
};
