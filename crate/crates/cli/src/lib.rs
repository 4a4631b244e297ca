//! Request parsing and execution behind the `pairdepth` binary.

pub mod exec;
pub mod request;
