//! Front end for `grs`: single computations, batch runs and the maximizer
//! oracle.

pub mod batch;
pub mod oracle;
pub mod record;
pub mod render;

use grs_core::Error;

/// `error [stage]: message`, the form every failure is reported in.
pub fn describe(e: &Error) -> String {
    format!("error [{}]: {e}", e.stage())
}
