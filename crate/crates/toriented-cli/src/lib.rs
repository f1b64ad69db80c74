//! Library side of the `toriented` command-line tool: input schemas,
//! report types and the command implementations.

pub mod analyze;
pub mod gen;
pub mod input;
pub mod report;
pub mod verify;
