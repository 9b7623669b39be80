//! Spec-file ingestion, fixture registry, check suites, and deterministic
//! reporting on top of the catcheck library.

// error values are rare-path and carry full witnesses by design
#![allow(clippy::result_large_err)]

pub mod commands;
pub mod printer;
pub mod report;
pub mod workspace;

pub use report::{Report, Status};
pub use workspace::{Workspace, WsError, WsResult};
