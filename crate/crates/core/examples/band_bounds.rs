//! Band-condition bounds, and how they reduce to Cassels on real data.

use rcbs::bounds::{band_product_bounds, band_sqrt_bound, BandProductForm};
use rcbs::{Band, ComplexScalar as C, TolerancePolicy, WeightedDataset};

fn main() -> rcbs::Result<()> {
    let policy = TolerancePolicy::default();
    let ds = WeightedDataset::from_real(&[3.0, 1.0], &[1.0, 1.0], &[1.0, 1.0])?;
    let band = Band::real(1.0, 3.0)?;

    for form in [BandProductForm::CorrectedQuarter, BandProductForm::LiteralHalf] {
        for r in band_product_bounds(&ds, &band, form, &policy)? {
            println!("{form:?} {}: {} <= {:?}", r.bound_id, r.lhs, r.rhs_chain);
        }
    }
    let r = band_sqrt_bound(&ds, &band, &policy)?;
    println!("{}: {:.6} <= {:.6}", r.bound_id, r.lhs, r.rhs());

    // Orthogonal endpoints: Re(Γ conj(γ)) = 0.
    let ds = WeightedDataset::unweighted(vec![C::new(0.5, 0.5)], vec![C::new(1.0, 0.0)])?;
    let band = Band::new(C::new(1.0, 0.0), C::new(0.0, 1.0))?;
    for r in band_product_bounds(&ds, &band, BandProductForm::default(), &policy)? {
        println!("{}: {} <= {:?}", r.bound_id, r.lhs, r.rhs_chain);
    }
    Ok(())
}
