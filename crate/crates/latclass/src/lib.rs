//! File formats, parallel census runs and the `latclass` command line on top
//! of `latclass-core`.

pub mod census;
pub mod construct;
mod error;
pub mod format;
pub mod output;

pub use census::Runner;
pub use error::Failure;
pub use latclass_core as geometry;
