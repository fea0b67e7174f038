//! Reverse Cauchy-Bunyakovsky-Schwarz (CBS) inequalities for weighted
//! n-tuples of real and complex numbers.
//!
//! The crate evaluates every bound of the family as a [`BoundReport`] that
//! carries hypothesis diagnostics, the chained left and right members, and
//! the slack between them. Hypotheses are checked by [`conditions`], the
//! tightest admissible parameters are fitted by [`fitting`], and the
//! extremal configurations that certify each sharp constant live in
//! [`witnesses`]. The [`cli`] module holds dataset ingestion and report
//! serialization used by the `rcbs` binary.
//!
//! Sums of products are bilinear: `Σ p_k a_k b_k` is never conjugated.
//! The ratio points of the disk condition are `a_k / conj(b_k)`.
//!
//! ```
//! use rcbs::bounds::disk_product_bounds;
//! use rcbs::{fit, TolerancePolicy, WeightedDataset};
//!
//! let ds = WeightedDataset::from_real(&[3.0, 1.0], &[1.0, 1.0], &[1.0, 1.0])?;
//! let policy = TolerancePolicy::default();
//! let disk = fit(&ds, &policy)?.disk.unwrap();
//! let reports = disk_product_bounds(&ds, &disk, &policy)?;
//! assert!((reports[0].rhs() - 16.0 / 3.0).abs() < 1e-14);
//! # Ok::<(), rcbs::Error>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod conditions;
pub mod data;
mod error;
pub mod fitting;
pub mod report;
pub mod witnesses;

pub use bounds::BoundId;
pub use conditions::{Band, ConditionVerdict, Disk, Interval, RealBandParams};
pub use data::{aggregates, ratio_points, CbsAggregates, ComplexScalar, WeightedDataset, Weighting};
pub use error::{Error, Result};
pub use fitting::{fit, FitResult};
pub use report::{BoundReport, TolerancePolicy};
pub use witnesses::{SweepResult, Theorem, WitnessConfig, WitnessParams};
