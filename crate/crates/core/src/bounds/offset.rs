//! Bounds under the offset condition `Σp|b − conj(a)|² ≤ r²` and under the
//! aggregate band condition on `(x, y) := (a, b)`.

use super::{evaluated, BoundId};
use crate::conditions::{check_offset, check_transformed_band, Band};
use crate::data::{aggregates_with, WeightedDataset};
use crate::error::{Error, Result};
use crate::report::{BoundReport, TolerancePolicy};

/// `0 ≤ gap ≤ Σp|a|²·Σp|b|² − (Re s_ab)² ≤ r²·Σp|b|²`, requiring
/// `r² < Σp|a|²` in addition to the offset condition.
pub fn offset_gap_bound(ds: &WeightedDataset, r: f64, policy: &TolerancePolicy) -> Result<BoundReport> {
    let verdict = check_offset(ds, r, true, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    Ok(evaluated(
        BoundId::OffsetGap,
        &verdict,
        vec![agg.gap, agg.gap_re()],
        vec![r * r * agg.s_bb],
    ))
}

/// `√(Σp|b|²·Σp|a|²) − Σp·Re(a·b) ≤ ½r²`, preceded by the weaker forms
/// with `|s_ab|` and `|Σp·Re(a·b)|`.
pub fn offset_sqrt_bound(ds: &WeightedDataset, r: f64, policy: &TolerancePolicy) -> Result<BoundReport> {
    let verdict = check_offset(ds, r, false, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    let root = agg.norm_product();
    let lhs_chain = vec![root - agg.s_ab.norm(), root - agg.re_ab.abs(), root - agg.re_ab];
    Ok(evaluated(BoundId::OffsetSqrt, &verdict, lhs_chain, vec![0.5 * r * r]))
}

/// `Σp|x|²·Σp|y|² ≤ ¼·{Re[conj(Γ+γ)·s_xy]}²/Re(Γ conj(γ)) ≤ ¼·|Γ+γ|²·|s_xy|²/Re(Γ conj(γ))`
/// with `x := a`, `y := b`.
pub fn transformed_band_product_bound(
    ds: &WeightedDataset,
    band: &Band,
    policy: &TolerancePolicy,
) -> Result<BoundReport> {
    let re_gg = band.re_product();
    if re_gg <= policy.strict_margin * band.re_product_scale() {
        return Err(Error::InvalidParams(format!(
            "requires Re(Γ conj(γ)) > 0, got {re_gg:e}"
        )));
    }
    let verdict = check_transformed_band(ds, band, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    let sum = band.lower() + band.upper();
    let re = (sum.conj() * agg.s_ab).re;
    Ok(evaluated(
        BoundId::TransformedBandProduct,
        &verdict,
        vec![agg.s_aa * agg.s_bb],
        vec![0.25 * re * re / re_gg, 0.25 * sum.norm_sqr() * agg.s_ab.norm_sqr() / re_gg],
    ))
}

/// `√(Σp|x|²·Σp|y|²) − Re(ĉ·s_xy) ≤ ¼·|Γ−γ|²/|Γ+γ|·Σp|y|²` with
/// `ĉ = conj(Γ+γ)/|Γ+γ|`, preceded by the forms with `|s_xy|` and
/// `|Re(ĉ·s_xy)|`.
pub fn transformed_band_sqrt_bound(
    ds: &WeightedDataset,
    band: &Band,
    policy: &TolerancePolicy,
) -> Result<BoundReport> {
    let sum = band.lower() + band.upper();
    let modulus = sum.norm();
    if band.is_antipodal() || modulus <= policy.strict_margin * band.radius().max(1.0) {
        return Err(Error::InvalidParams("band endpoints must satisfy Γ ≠ −γ".into()));
    }
    let verdict = check_transformed_band(ds, band, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    let root = agg.norm_product();
    let projected = (sum.conj() / modulus * agg.s_ab).re;
    let lhs_chain = vec![root - agg.s_ab.norm(), root - projected.abs(), root - projected];
    let rhs = 0.25 * (band.upper() - band.lower()).norm_sqr() / modulus * agg.s_bb;
    Ok(evaluated(BoundId::TransformedBandSqrt, &verdict, lhs_chain, vec![rhs]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    fn real(a: &[f64], b: &[f64]) -> WeightedDataset {
        WeightedDataset::from_real(a, b, &vec![1.0; a.len()]).unwrap()
    }

    #[test]
    fn gap_bound_examples() {
        let r = offset_gap_bound(&real(&[1.0, 1.0], &[1.5, 0.5]), 0.5, &pol()).unwrap();
        assert!(r.hypothesis_ok);
        assert_eq!(r.lhs_chain, vec![0.25, 0.25]);
        assert_eq!(r.rhs(), 0.3125);

        let r = offset_gap_bound(&real(&[1.0], &[1.0]), 0.5, &pol()).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert_eq!(r.rhs(), 0.25);

        let r = offset_gap_bound(&real(&[1.0, 1.0], &[1.1, 0.9]), 0.1, &pol()).unwrap();
        assert!((r.lhs - 0.01).abs() < 1e-15);
        assert!((r.rhs() - 0.0101).abs() < 1e-15);
        assert!(r.hypothesis_ok);
        assert!(r.chains_ordered(1e-12));
    }

    #[test]
    fn sqrt_bound_examples() {
        let r = offset_sqrt_bound(&real(&[1.0, 1.0], &[1.5, 0.5]), 0.5, &pol()).unwrap();
        assert!((r.lhs - (1.25f64.sqrt() - 1.0)).abs() < 1e-15);
        assert_eq!(r.rhs(), 0.125);
        assert!(r.chains_ordered(1e-12));

        let r = offset_sqrt_bound(&real(&[1.0], &[1.0]), 1.0, &pol()).unwrap();
        assert_eq!((r.lhs, r.rhs()), (0.0, 0.5));

        let r = offset_sqrt_bound(&real(&[1.0, 1.0], &[1.1, 0.9]), 0.1, &pol()).unwrap();
        assert!((r.lhs - (1.01f64.sqrt() - 1.0)).abs() < 1e-15);
        assert!((r.rhs() - 0.005).abs() < 1e-17);
    }

    #[test]
    fn transformed_product_examples() {
        let band = Band::real(1.0, 3.0).unwrap();
        let r = transformed_band_product_bound(&real(&[3.0, 1.0], &[1.0, 1.0]), &band, &pol()).unwrap();
        assert_eq!(r.lhs, 5.0);
        for v in &r.rhs_chain {
            assert!((v - 16.0 / 3.0).abs() < 1e-14);
        }

        let r = transformed_band_product_bound(&real(&[0.0, 0.0], &[1.0, 1.0]), &band, &pol()).unwrap();
        assert_eq!((r.lhs, r.rhs()), (0.0, 0.0));

        let obtuse = Band::real(-1.0, 1.0).unwrap();
        assert!(transformed_band_product_bound(&real(&[0.0], &[1.0]), &obtuse, &pol()).is_err());
    }

    #[test]
    fn transformed_proportional_data() {
        let band = Band::real(0.9, 1.1).unwrap();
        let r = transformed_band_product_bound(&real(&[0.9, 1.8], &[1.0, 2.0]), &band, &pol()).unwrap();
        assert!(r.hypothesis_ok);
        assert!(r.holds(1e-12));
    }

    #[test]
    fn transformed_sqrt_examples() {
        let band = Band::real(1.0, 3.0).unwrap();
        let r = transformed_band_sqrt_bound(&real(&[3.0, 1.0], &[1.0, 1.0]), &band, &pol()).unwrap();
        assert!((r.lhs - (5f64.sqrt() - 2.0)).abs() < 1e-15);
        assert_eq!(r.rhs(), 0.25);

        let band = Band::real(0.5, 1.5).unwrap();
        let r = transformed_band_sqrt_bound(&real(&[1.5, 0.5], &[1.0, 1.0]), &band, &pol()).unwrap();
        assert!(r.hypothesis_ok);
        assert!((r.lhs - (1.25f64.sqrt() - 1.0)).abs() < 1e-15);
        assert_eq!(r.rhs(), 0.125);

        let band = Band::real(0.5, 2.0).unwrap();
        let r = transformed_band_sqrt_bound(&real(&[1.0, 1.0], &[1.0, 1.0]), &band, &pol()).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert!(r.rhs() > 0.0);
    }
}
