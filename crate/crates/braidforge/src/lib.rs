//! File formats, the command-line front end and the seeded soundness suite
//! for `braidforge-core`.

pub mod cli;
pub mod format;
pub mod soundness;
