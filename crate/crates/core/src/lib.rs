//! Growth diagrams, jeu de taquin, and bijections between column-bounded
//! Young tableaux and oscillating tableaux, with brute-force oracles and an
//! exact determinant count for cross-checking.

pub mod bijection;
pub mod cli;
pub mod counting;
pub mod error;
pub mod growth;
pub mod insertion;
pub mod jdt;
pub mod knuth;
pub mod partition;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Partition, StripType};
pub use tableau::{
    AugmentedTableau, Flavor, Letter, PartitionChain, SemistandardTableau, StandardTableau, Tableau,
};
