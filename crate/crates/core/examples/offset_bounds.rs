//! Bounds under the offset condition `Σp|b − conj(a)|² ≤ r²`.

use rcbs::bounds::{offset_gap_bound, offset_sqrt_bound};
use rcbs::conditions::check_offset;
use rcbs::fitting::fit_offset_radius;
use rcbs::{ComplexScalar as C, TolerancePolicy, WeightedDataset};

fn main() -> rcbs::Result<()> {
    let policy = TolerancePolicy::default();
    let a = vec![C::new(1.0, 0.5), C::new(0.8, -0.2), C::new(1.2, 0.1)];
    let b = vec![C::new(1.1, -0.4), C::new(0.7, 0.3), C::new(1.2, -0.15)];
    let ds = WeightedDataset::unweighted(a, b)?;

    let r2 = fit_offset_radius(&ds, &policy);
    let r = r2.sqrt();
    println!("smallest admissible r² = {r2:.6}");
    let strict = check_offset(&ds, r, true, &policy)?;
    println!("offset condition with r² < Σp|a|²: {} (margins {:?})", strict.holds, strict.per_term);

    for rep in [offset_gap_bound(&ds, r, &policy)?, offset_sqrt_bound(&ds, r, &policy)?] {
        println!("{}: {:?} <= {:?}", rep.bound_id, rep.lhs_chain, rep.rhs_chain);
    }
    Ok(())
}
