//! Bounds under the disk condition `|a_k/conj(b_k) − α| ≤ r`.

use super::{evaluated, BoundId};
use crate::conditions::{check_disk, Disk};
use crate::data::{aggregates_with, WeightedDataset};
use crate::error::{Error, Result};
use crate::report::{BoundReport, TolerancePolicy};

/// `Σp|a|² + (|α|² − r²)·Σp|b|² ≤ 2·Re(conj(α)·Σp·a·b)`.
pub fn disk_linear_bound(ds: &WeightedDataset, disk: &Disk, policy: &TolerancePolicy) -> Result<BoundReport> {
    let verdict = check_disk(ds, disk, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    let alpha = disk.alpha();
    let lhs = agg.s_aa + disk.power() * agg.s_bb;
    let rhs = 2.0 * (alpha.conj() * agg.s_ab).re;
    Ok(evaluated(BoundId::DiskLinear, &verdict, vec![lhs], vec![rhs]))
}

/// The product reverse, dispatched on where the disk sits relative to the
/// origin.
///
/// * `|α| > r`: the product bound and its additive companion.
/// * `|α| = r` (within the strict margin): `Σp|a|² ≤ 2Re(conj(α)s_ab) ≤ 2|α||s_ab|`.
/// * `|α| < r`: the same with `(r² − |α|²)·Σp|b|²` added on the right.
pub fn disk_product_bounds(ds: &WeightedDataset, disk: &Disk, policy: &TolerancePolicy) -> Result<Vec<BoundReport>> {
    let verdict = check_disk(ds, disk, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    let alpha = disk.alpha();
    let re = (alpha.conj() * agg.s_ab).re;
    let abs_ab2 = agg.s_ab.norm_sqr();
    if disk.is_regular(policy) {
        let power = disk.power();
        let product = evaluated(
            BoundId::DiskProduct,
            &verdict,
            vec![agg.s_aa * agg.s_bb],
            vec![re * re / power, alpha.norm_sqr() * abs_ab2 / power],
        );
        let r2 = disk.radius() * disk.radius();
        let additive = evaluated(BoundId::DiskAdditive, &verdict, vec![agg.gap], vec![r2 * abs_ab2 / power]);
        return Ok(vec![product, additive]);
    }
    let linear = 2.0 * re;
    let modulus = 2.0 * alpha.norm() * agg.s_ab.norm();
    if disk.passes_through_origin(policy) {
        return Ok(vec![evaluated(
            BoundId::DiskThroughOrigin,
            &verdict,
            vec![agg.s_aa],
            vec![linear, modulus],
        )]);
    }
    let excess = -disk.power() * agg.s_bb;
    Ok(vec![evaluated(
        BoundId::DiskAroundOrigin,
        &verdict,
        vec![agg.s_aa],
        vec![excess + linear, excess + modulus],
    )])
}

/// `√(Σp|a|²·Σp|b|²) − Re(conj(α)/|α|·s_ab) ≤ ½·(r²/|α|)·Σp|b|²`, preceded
/// in the chain by the weaker `√(Σp|a|²·Σp|b|²) − |s_ab|`.
pub fn disk_sqrt_bound(ds: &WeightedDataset, disk: &Disk, policy: &TolerancePolicy) -> Result<BoundReport> {
    let alpha = disk.alpha();
    let modulus = alpha.norm();
    if modulus <= policy.strict_margin * disk.radius().max(1.0) {
        return Err(Error::InvalidParams("disk center must be nonzero".into()));
    }
    let verdict = check_disk(ds, disk, policy)?;
    let agg = aggregates_with(ds, policy.weighting());
    let root = agg.norm_product();
    let unit = alpha.conj() / modulus;
    let lhs_chain = vec![root - agg.s_ab.norm(), root - (unit * agg.s_ab).re];
    let rhs = 0.5 * disk.radius() * disk.radius() / modulus * agg.s_bb;
    Ok(evaluated(BoundId::DiskSqrt, &verdict, lhs_chain, vec![rhs]))
}
