//! A catalog of benchmark languages over small alphabets: counting
//! languages, bracket languages, the Tomita grammars, and piecewise-testable
//! patterns. Each entry carries a ground-truth oracle, and most ship a
//! hand-written reference program; a seeded sampler draws class-balanced
//! datasets from any of them.

pub mod catalog;
pub mod oracles;
pub mod sampler;

pub use catalog::{catalog, find, CatalogError, LanguageSpec, Oracle};
pub use sampler::{sample_dataset, Sampled, SampleError, SamplerConfig};
