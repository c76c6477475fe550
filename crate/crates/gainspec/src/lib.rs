//! File formats, result documents, randomized sweeps and the command-line
//! front end for `gainspec-core`.

pub mod cli;
pub mod document;
pub mod fixtures;
pub mod graph_file;
pub mod random;
pub mod report;
pub mod sweep;
