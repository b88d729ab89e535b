//! Frame files, the invariant pipeline and result documents for the
//! `freecr` binary.

pub mod frame;
pub mod pipeline;
pub mod render;
pub mod reports;

pub use frame::{parse_frame, FieldEntry, FrameDocument, FrameError};
pub use pipeline::{run_check, run_pipeline, sha256_hex, ResultDocument, Verdict};
