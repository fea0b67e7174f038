//! Cassels- and Shisha-Mond-type bounds under the band condition.

use serde::{Deserialize, Serialize};

use super::{evaluated, BoundId};
use crate::conditions::{check_band, Band};
use crate::data::{aggregates_with, WeightedDataset};
use crate::error::{Error, Result};
use crate::report::{BoundReport, TolerancePolicy};

/// Constant in front of the first right side of the band product bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BandProductForm {
    /// Denominator `4·Re(Γ conj(γ))`. This is what the disk product bound
    /// gives with `α = (γ+Γ)/2`, and it reduces to Cassels on real data.
    #[default]
    CorrectedQuarter,
    /// Denominator `2·Re(Γ conj(γ))`. Weaker by a factor of two; the chain
    /// is then not monotone in general.
    LiteralHalf,
}

/// The band product bound and its additive companion when
/// `Re(Γ conj(γ)) > 0`; the linear forms when it is zero or negative.
pub fn band_product_bounds(
    ds: &WeightedDataset,
    band: &Band,
    form: BandProductForm,
    policy: &TolerancePolicy,
) -> Result<Vec<BoundReport>> {
    let verdict = check_band(ds, band, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    let sum = band.lower() + band.upper();
    let re = (sum.conj() * agg.s_ab).re;
    let abs_ab2 = agg.s_ab.norm_sqr();
    let re_gg = band.re_product();
    let threshold = policy.strict_margin * band.re_product_scale();

    if re_gg > threshold {
        let first = match form {
            BandProductForm::CorrectedQuarter => re * re / (4.0 * re_gg),
            BandProductForm::LiteralHalf => re * re / (2.0 * re_gg),
        };
        let second = sum.norm_sqr() * abs_ab2 / (4.0 * re_gg);
        let mut product = evaluated(BoundId::BandProduct, &verdict, vec![agg.s_aa * agg.s_bb], vec![first, second]);
        if form == BandProductForm::LiteralHalf {
            product = product.with_note("first right side uses denominator 2·Re(Γ conj(γ))");
        }
        let spread = (band.upper() - band.lower()).norm_sqr();
        let additive = evaluated(
            BoundId::BandAdditive,
            &verdict,
            vec![agg.gap],
            vec![spread * abs_ab2 / (4.0 * re_gg)],
        );
        return Ok(vec![product, additive]);
    }
    let modulus = sum.norm() * agg.s_ab.norm();
    if re_gg >= -threshold {
        return Ok(vec![evaluated(
            BoundId::BandOrthogonal,
            &verdict,
            vec![agg.s_aa],
            vec![re, modulus],
        )]);
    }
    let excess = -re_gg * agg.s_bb;
    Ok(vec![evaluated(
        BoundId::BandObtuse,
        &verdict,
        vec![agg.s_aa],
        vec![excess + re, excess + modulus],
    )])
}

/// `√(Σp|a|²·Σp|b|²) − Re(conj(Γ+γ)/|Γ+γ|·s_ab) ≤ ¼·|Γ−γ|²/|Γ+γ|·Σp|b|²`.
pub fn band_sqrt_bound(ds: &WeightedDataset, band: &Band, policy: &TolerancePolicy) -> Result<BoundReport> {
    let sum = band.lower() + band.upper();
    let modulus = sum.norm();
    if band.is_antipodal() || modulus <= policy.strict_margin * band.radius().max(1.0) {
        return Err(Error::InvalidParams("band endpoints must satisfy Γ ≠ −γ".into()));
    }
    let verdict = check_band(ds, band, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    let root = agg.norm_product();
    let unit = sum.conj() / modulus;
    let lhs_chain = vec![root - agg.s_ab.norm(), root - (unit * agg.s_ab).re];
    let rhs = 0.25 * (band.upper() - band.lower()).norm_sqr() / modulus * agg.s_bb;
    Ok(evaluated(BoundId::BandSqrt, &verdict, lhs_chain, vec![rhs]))
}
