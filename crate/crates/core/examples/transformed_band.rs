//! The aggregate band condition on pairs `(x, y)`, checked in both of its
//! equivalent forms, and the bounds that follow from it.

use rcbs::bounds::{transformed_band_product_bound, transformed_band_sqrt_bound};
use rcbs::conditions::{check_transformed_band, transformed_disk_form, transformed_quadratic_form};
use rcbs::{Band, ComplexScalar as C, TolerancePolicy, WeightedDataset};

fn main() -> rcbs::Result<()> {
    let policy = TolerancePolicy::default();
    let (lower, upper) = (C::new(0.8, -0.1), C::new(1.4, 0.3));
    let band = Band::new(lower, upper)?;

    let y = vec![C::new(1.0, 0.2), C::new(-0.4, 0.9), C::new(0.6, -0.6)];
    let x: Vec<C> = y.iter().map(|y| band.center() * y.conj() + C::new(0.05, -0.02)).collect();
    for (x, y) in x.iter().zip(&y) {
        println!(
            "quadratic {:+.12e}  disk {:+.12e}",
            transformed_quadratic_form(*x, *y, lower, upper),
            transformed_disk_form(*x, *y, lower, upper)
        );
    }

    let ds = WeightedDataset::unweighted(x, y)?;
    let v = check_transformed_band(&ds, &band, &policy)?;
    println!("aggregate condition holds: {} (margin {:.6})", v.holds, v.worst_margin);
    for r in [
        transformed_band_product_bound(&ds, &band, &policy)?,
        transformed_band_sqrt_bound(&ds, &band, &policy)?,
    ] {
        println!("{}: {:?} <= {:?}", r.bound_id, r.lhs_chain, r.rhs_chain);
    }
    Ok(())
}
