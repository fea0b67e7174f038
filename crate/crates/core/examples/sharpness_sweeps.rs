//! Extremal configurations driven toward each sharp constant.

use rcbs::witnesses::{default_schedule, make_witness, sharpness_sweep};
use rcbs::{Theorem, TolerancePolicy, WitnessParams};

fn main() -> rcbs::Result<()> {
    let w = make_witness(Theorem::Thm51, WitnessParams::Epsilon(0.25))?;
    println!("thm51 witness at ε = 0.25: a = {:?}, b = {:?}", w.dataset.a(), w.dataset.b());
    println!("hypothesis: {:?}", w.check(&TolerancePolicy::default())?.holds);

    for t in Theorem::ALL {
        let s = sharpness_sweep(t, &default_schedule())?;
        let estimates: Vec<String> = s.estimates.iter().map(|e| format!("{e:.9}")).collect();
        println!("{t}: constant {} | {} | gap {:.2e}", s.expected_constant, estimates.join(" "), s.limit_gap);
    }
    Ok(())
}
