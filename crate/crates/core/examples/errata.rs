//! Two classical statements that fail as usually printed, next to the
//! corrected forms evaluated by default.

use rcbs::bounds::{additive_classical_bound, AdditiveVariant, DmReading, DmWeights, KmVariant};
use rcbs::conditions::check_real_band;
use rcbs::{TolerancePolicy, WeightedDataset};

fn main() -> rcbs::Result<()> {
    let policy = TolerancePolicy::default();

    let ds = WeightedDataset::from_real(&[0.4, 0.1], &[1.0, 1.0], &[1.0, 2.0])?;
    let params = check_real_band(&ds).unwrap();
    for v in [KmVariant::Literal, KmVariant::BSquaredCorrected] {
        let r = additive_classical_bound(&ds, &params, AdditiveVariant::KlamkinMcLenaghan(v), &policy)?;
        println!("Klamkin-McLenaghan {v:?}: {:.6} <= {:.6}? {}", r.lhs, r.rhs(), r.holds(policy.verify_tol));
    }

    let ds = WeightedDataset::from_real(&[1.0, 2.0], &[1.0, 1.0], &[1.0, 1.0])?;
    let params = check_real_band(&ds).unwrap();
    for reading in [DmReading::AOverB, DmReading::BOverA] {
        let v = AdditiveVariant::GeneralizedDiazMetcalf { weights: DmWeights::new(0.5, 0.5)?, reading };
        let r = additive_classical_bound(&ds, &params, v, &policy)?;
        println!("generalized Diaz-Metcalf {reading:?}: {} <= {}? {}", r.lhs, r.rhs(), r.holds(policy.verify_tol));
        for n in &r.notes {
            println!("  {n}");
        }
    }
    Ok(())
}
