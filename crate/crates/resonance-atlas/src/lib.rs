//! Command line front end and canonical JSON export for `resonance-core`.

pub mod cli;
pub mod json;
pub mod render;
