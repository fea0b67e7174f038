//! Evaluators for every inequality of the family.
//!
//! Each evaluator returns a [`BoundReport`](crate::BoundReport) and never
//! asserts: a failed hypothesis is recorded in the report, not raised, so
//! bounds can be evaluated outside their hypotheses. Errors are reserved
//! for inputs on which the inequality is undefined (division by a vanishing
//! quantity, non-real data for a real-only inequality).
//!
//! The classical real inequalities use raw (or unit) weights. All other
//! bounds use the normalized weights unless the policy says otherwise.

mod band;
mod classical;
mod disk;
mod offset;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use band::{band_product_bounds, band_sqrt_bound, BandProductForm};
pub use classical::{
    additive_classical_bound, product_ratio_bound, AdditiveVariant, DmReading, DmWeights, KmVariant,
    ProductRatioVariant,
};
pub use disk::{disk_linear_bound, disk_product_bounds, disk_sqrt_bound};
pub use offset::{offset_gap_bound, offset_sqrt_bound, transformed_band_product_bound, transformed_band_sqrt_bound};

use crate::conditions::ConditionVerdict;
use crate::error::Error;
use crate::report::BoundReport;

/// Report whose hypothesis status comes from a checker verdict.
pub(crate) fn evaluated(
    id: BoundId,
    verdict: &ConditionVerdict,
    lhs_chain: Vec<f64>,
    rhs_chain: Vec<f64>,
) -> BoundReport {
    let r = BoundReport::new(id, verdict.holds, verdict.worst_margin, lhs_chain, rhs_chain);
    if verdict.holds {
        r
    } else {
        r.with_note(format!("worst term at index {}", verdict.worst_index))
    }
}

/// Identifier of an evaluated inequality.
///
/// The string forms are stable and used in serialized reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundId {
    #[serde(rename = "polya_szego")]
    PolyaSzego,
    #[serde(rename = "shisha_mond")]
    ShishaMond,
    #[serde(rename = "ozeki")]
    Ozeki,
    #[serde(rename = "diaz_metcalf")]
    DiazMetcalf,
    #[serde(rename = "cassels")]
    Cassels,
    #[serde(rename = "grueb_reinboldt")]
    GruebReinboldt,
    #[serde(rename = "generalized_diaz_metcalf")]
    GeneralizedDiazMetcalf,
    #[serde(rename = "klamkin_mclenaghan")]
    KlamkinMcLenaghan,
    /// Linear bound under the disk condition.
    #[serde(rename = "thm21")]
    DiskLinear,
    /// Product bound under a disk not containing the origin.
    #[serde(rename = "thm22")]
    DiskProduct,
    /// Additive companion of [`BoundId::DiskProduct`].
    #[serde(rename = "cor23")]
    DiskAdditive,
    /// Disk whose boundary passes through the origin.
    #[serde(rename = "rem24_boundary")]
    DiskThroughOrigin,
    /// Disk containing the origin in its interior.
    #[serde(rename = "rem24_interior")]
    DiskAroundOrigin,
    /// Square-root difference bound under the disk condition.
    #[serde(rename = "thm24")]
    DiskSqrt,
    /// Cassels-type product bound under a band with `Re(Γ conj(γ)) > 0`.
    #[serde(rename = "thm31")]
    BandProduct,
    #[serde(rename = "cor32")]
    BandAdditive,
    #[serde(rename = "rem33_zero")]
    BandOrthogonal,
    #[serde(rename = "rem33_negative")]
    BandObtuse,
    /// Shisha-Mond-type square-root bound under a band.
    #[serde(rename = "thm41")]
    BandSqrt,
    /// Gap bound under the offset condition.
    #[serde(rename = "thm51")]
    OffsetGap,
    /// Product bound under the aggregate band condition.
    #[serde(rename = "thm52")]
    TransformedBandProduct,
    /// Square-root bound under the offset condition.
    #[serde(rename = "thm61")]
    OffsetSqrt,
    /// Square-root bound under the aggregate band condition.
    #[serde(rename = "thm62")]
    TransformedBandSqrt,
}

impl BoundId {
    pub const ALL: [BoundId; 23] = [
        BoundId::PolyaSzego,
        BoundId::ShishaMond,
        BoundId::Ozeki,
        BoundId::DiazMetcalf,
        BoundId::Cassels,
        BoundId::GruebReinboldt,
        BoundId::GeneralizedDiazMetcalf,
        BoundId::KlamkinMcLenaghan,
        BoundId::DiskLinear,
        BoundId::DiskProduct,
        BoundId::DiskAdditive,
        BoundId::DiskThroughOrigin,
        BoundId::DiskAroundOrigin,
        BoundId::DiskSqrt,
        BoundId::BandProduct,
        BoundId::BandAdditive,
        BoundId::BandOrthogonal,
        BoundId::BandObtuse,
        BoundId::BandSqrt,
        BoundId::OffsetGap,
        BoundId::TransformedBandProduct,
        BoundId::OffsetSqrt,
        BoundId::TransformedBandSqrt,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundId::PolyaSzego => "polya_szego",
            BoundId::ShishaMond => "shisha_mond",
            BoundId::Ozeki => "ozeki",
            BoundId::DiazMetcalf => "diaz_metcalf",
            BoundId::Cassels => "cassels",
            BoundId::GruebReinboldt => "grueb_reinboldt",
            BoundId::GeneralizedDiazMetcalf => "generalized_diaz_metcalf",
            BoundId::KlamkinMcLenaghan => "klamkin_mclenaghan",
            BoundId::DiskLinear => "thm21",
            BoundId::DiskProduct => "thm22",
            BoundId::DiskAdditive => "cor23",
            BoundId::DiskThroughOrigin => "rem24_boundary",
            BoundId::DiskAroundOrigin => "rem24_interior",
            BoundId::DiskSqrt => "thm24",
            BoundId::BandProduct => "thm31",
            BoundId::BandAdditive => "cor32",
            BoundId::BandOrthogonal => "rem33_zero",
            BoundId::BandObtuse => "rem33_negative",
            BoundId::BandSqrt => "thm41",
            BoundId::OffsetGap => "thm51",
            BoundId::TransformedBandProduct => "thm52",
            BoundId::OffsetSqrt => "thm61",
            BoundId::TransformedBandSqrt => "thm62",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown bound id '{s}'")))
    }
}
