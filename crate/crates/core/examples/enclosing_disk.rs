//! Fitting the tightest disk and band to a dataset.

use rcbs::fitting::{fit_band, min_enclosing_disk};
use rcbs::{fit, ratio_points, ComplexScalar as C, TolerancePolicy, WeightedDataset};

fn main() -> rcbs::Result<()> {
    let pts = [C::new(1.0, 0.0), C::new(-1.0, 0.0), C::new(0.0, 1.0), C::new(0.2, 0.3)];
    let d = min_enclosing_disk(&pts)?;
    println!("enclosing disk of {} points: α = {}, r = {}", pts.len(), d.alpha(), d.radius());

    let a = vec![C::new(2.0, 1.0), C::new(1.0, -0.5), C::new(3.0, 0.0)];
    let b = vec![C::new(1.0, 0.0), C::new(0.5, 0.5), C::new(1.5, -0.2)];
    let ds = WeightedDataset::unweighted(a, b)?;
    println!("ratio points: {:?}", ratio_points(&ds)?);

    let f = fit(&ds, &TolerancePolicy::default())?;
    let disk = f.disk.expect("b nonzero");
    let band = fit_band(&disk)?;
    println!("disk: α = {}, r = {}", disk.alpha(), disk.radius());
    println!("band: γ = {}, Γ = {}, Re(Γ conj(γ)) = {}", band.lower(), band.upper(), band.re_product());
    println!("offset r² = {}", f.offset_r2);
    println!("{}", serde_json::to_string_pretty(&f.applicability).unwrap());
    Ok(())
}
