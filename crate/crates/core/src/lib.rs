//! Exact computations around the odd-degree characters of the symmetric
//! groups and the linear characters of their Sylow 2-subgroups.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: integer partitions, hook lengths, degrees, the dictionary
//!   order and the half-size cluster construction [`partitions::delta`].
//! - [`littlewood_richardson`]: good sequences, LR fillings and coefficients,
//!   restriction to Young subgroups.
//! - [`murnaghan_nakayama`]: character values by rim-hook removal and small
//!   character tables.
//! - [`sylow2`]: the iterated wreath products `C2 ≀ … ≀ C2` embedded in `S_n`,
//!   conjugacy classes and irreducible characters.
//! - [`mckay`]: the maps `Phi` and `Psi`, restriction reports and verifiers.

pub mod error;
pub mod littlewood_richardson;
pub mod mckay;
pub mod murnaghan_nakayama;
pub mod partitions;
mod serde_str;
pub mod sylow2;

pub use error::{Error, Result};
pub use partitions::Partition;
