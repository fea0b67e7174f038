//! Weighted aggregates near the CBS equality case.

use rcbs::data::{aggregates_with, compensated_sum, lagrange_gap};
use rcbs::{ComplexScalar as C, WeightedDataset, Weighting};

fn main() -> rcbs::Result<()> {
    let naive: f64 = std::iter::once(1e16).chain(std::iter::repeat_n(1.0, 1000)).chain([-1e16]).sum();
    let compensated = compensated_sum(std::iter::once(1e16).chain(std::iter::repeat_n(1.0, 1000)).chain([-1e16]));
    println!("naive {naive}, compensated {compensated}");

    // a nearly proportional to conj(b): the gap is tiny.
    let b: Vec<C> = (0..6).map(|k| C::new(1.0 + k as f64, 0.5 - k as f64 * 0.1)).collect();
    let a: Vec<C> = b.iter().enumerate().map(|(k, b)| C::new(2.0, 1.0) * (1.0 + 1e-9 * k as f64) * b.conj()).collect();
    let ds = WeightedDataset::unweighted(a, b)?;
    let agg = aggregates_with(&ds, Weighting::Normalized);
    println!("s_aa·s_bb − |s_ab|² = {:e}", agg.gap);
    println!("pairwise (Lagrange) = {:e}", lagrange_gap(&ds, Weighting::Normalized));
    Ok(())
}
