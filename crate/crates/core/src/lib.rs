pub mod bench;
pub mod cli;
pub mod community;
pub mod error;
pub mod graph;
pub mod metrics;
pub mod models;
pub mod randomize;
pub mod recon;
pub mod rng;

pub use error::{Error, Result};
pub use graph::Graph;
