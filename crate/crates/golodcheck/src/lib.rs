//! File formats, reports, verification campaigns and the command line for
//! `golodcheck-core`.

pub mod analysis;
pub mod fields;
pub mod harness;
pub mod idealfile;
pub mod report;
pub mod witness;

pub use analysis::{analyze, Analysis, Config};
pub use fields::FieldChoice;
pub use idealfile::IdealFile;
