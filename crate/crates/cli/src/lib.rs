//! File formats, DOT export and the verification harness behind `sgtotal`.

pub mod dot;
pub mod formats;
pub mod number;
pub mod verify;
