//! Bounds under the disk condition `|a_k/conj(b_k) − α| ≤ r` on complex data.

use rcbs::bounds::{disk_linear_bound, disk_product_bounds, disk_sqrt_bound};
use rcbs::{ComplexScalar as C, Disk, TolerancePolicy, WeightedDataset};

fn main() -> rcbs::Result<()> {
    let policy = TolerancePolicy::default();
    let b = vec![C::new(1.0, 0.5), C::new(-0.3, 1.0), C::new(2.0, -1.0)];
    let alpha = C::new(1.5, 0.5);
    // a_k = (α + small offset)·conj(b_k), so every ratio lies near α.
    let offsets = [C::new(0.2, 0.0), C::new(-0.1, 0.3), C::new(0.0, -0.25)];
    let a = b.iter().zip(offsets).map(|(b, o)| (alpha + o) * b.conj()).collect();
    let ds = WeightedDataset::new(a, b, vec![1.0, 2.0, 0.5])?;

    let disk = Disk::new(alpha, 0.35)?;
    let mut reports = vec![disk_linear_bound(&ds, &disk, &policy)?];
    reports.extend(disk_product_bounds(&ds, &disk, &policy)?);
    reports.push(disk_sqrt_bound(&ds, &disk, &policy)?);
    for r in &reports {
        println!(
            "{:<8} hypothesis {:<5} lhs {:?} rhs {:?} slack {:.3e}",
            r.bound_id.as_str(),
            r.hypothesis_ok,
            r.lhs_chain,
            r.rhs_chain,
            r.slack
        );
    }

    // A disk through the origin switches the product bound to its linear form.
    let through = Disk::new(C::new(1.0, 0.0), 1.0)?;
    let ds = WeightedDataset::from_real(&[0.0, 2.0], &[1.0, 1.0], &[1.0, 1.0])?;
    for r in disk_product_bounds(&ds, &through, &policy)? {
        println!("{}: {} <= {:?}", r.bound_id, r.lhs, r.rhs_chain);
    }
    Ok(())
}
