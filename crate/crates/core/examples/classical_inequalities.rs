//! The classical reverses on positive real data.
//!
//! Run with `cargo run --example classical_inequalities`.

use rcbs::bounds::{additive_classical_bound, product_ratio_bound, AdditiveVariant, ProductRatioVariant};
use rcbs::conditions::check_real_band;
use rcbs::{TolerancePolicy, WeightedDataset};

fn main() -> rcbs::Result<()> {
    let policy = TolerancePolicy::default();
    let ds = WeightedDataset::from_real(&[1.0, 2.0, 1.5], &[2.0, 1.0, 1.2], &[1.0, 1.0, 1.0])?;
    // Ratio band m ≤ a/b ≤ M and the component boxes, read off the data.
    let params = check_real_band(&ds).expect("positive data");
    println!("a/b in [{}, {}]", params.ratio.lo, params.ratio.hi);

    for v in [ProductRatioVariant::PolyaSzego, ProductRatioVariant::Cassels, ProductRatioVariant::GruebReinboldt] {
        let r = product_ratio_bound(&ds, &params, v, &policy)?;
        println!("{:<26} {:.6} <= {:.6}", r.bound_id.as_str(), r.lhs, r.rhs());
    }
    for v in [
        AdditiveVariant::ShishaMond,
        AdditiveVariant::Ozeki,
        AdditiveVariant::DiazMetcalf,
        AdditiveVariant::GeneralizedDiazMetcalf { weights: Default::default(), reading: Default::default() },
        AdditiveVariant::KlamkinMcLenaghan(Default::default()),
    ] {
        let r = additive_classical_bound(&ds, &params, v, &policy)?;
        println!("{:<26} {:.6} <= {:.6}", r.bound_id.as_str(), r.lhs, r.rhs());
    }
    Ok(())
}
