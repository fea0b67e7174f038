//! Tightest hypothesis parameters for a dataset.
//!
//! The disk is the minimal enclosing disk of the ratio points
//! `a_k / conj(b_k)`. It is a canonical choice, not a joint optimum of any
//! particular right-hand side: every product bound is increasing in `r` at
//! fixed `α`, but moving `α` can still pay off in principle.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::conditions::{check_real_band, offset_sum, Band, Disk, RealBandParams};
use crate::data::{aggregates_with, ratio_points, ComplexScalar, WeightedDataset};
use crate::error::{Error, Result};
use crate::report::TolerancePolicy;

const SHUFFLE_SEED: u64 = 0x5eed_cb5;
const CONTAINS_SLACK: f64 = 1e-14;

/// Smallest closed disk containing every point.
///
/// Randomized incremental construction with a constant seed, so the output
/// is reproducible bit for bit. The returned radius is the largest distance
/// from the center to a point, which makes containment exact.
pub fn min_enclosing_disk(points: &[ComplexScalar]) -> Result<Disk> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(k) = points.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(Error::InvalidParams(format!("point {k} is not finite")));
    }
    let mut shuffled = points.to_vec();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));

    let mut circle: Option<Circle> = None;
    for (i, &p) in shuffled.iter().enumerate() {
        if circle.is_none_or(|c| !c.contains(p)) {
            circle = Some(circle_with_one(&shuffled[..i], p));
        }
    }
    let center = circle.expect("nonempty input").center;
    let radius = points.iter().map(|z| (z - center).norm()).fold(0.0, f64::max);
    Disk::new(center, radius)
}

#[derive(Debug, Clone, Copy)]
struct Circle {
    center: ComplexScalar,
    radius: f64,
}

impl Circle {
    fn contains(&self, p: ComplexScalar) -> bool {
        (p - self.center).norm() <= self.radius * (1.0 + CONTAINS_SLACK)
    }

    fn diameter(p: ComplexScalar, q: ComplexScalar) -> Circle {
        let center = (p + q) * 0.5;
        Circle {
            center,
            radius: (p - center).norm().max((q - center).norm()),
        }
    }

    fn circumscribed(p: ComplexScalar, q: ComplexScalar, r: ComplexScalar) -> Option<Circle> {
        // Translate to the bounding-box center to limit cancellation.
        let ox = (p.re.min(q.re).min(r.re) + p.re.max(q.re).max(r.re)) * 0.5;
        let oy = (p.im.min(q.im).min(r.im) + p.im.max(q.im).max(r.im)) * 0.5;
        let o = ComplexScalar::new(ox, oy);
        let (a, b, c) = (p - o, q - o, r - o);
        let d = 2.0 * (a.re * (b.im - c.im) + b.re * (c.im - a.im) + c.re * (a.im - b.im));
        if d == 0.0 {
            return None;
        }
        let (na, nb, nc) = (a.norm_sqr(), b.norm_sqr(), c.norm_sqr());
        let x = (na * (b.im - c.im) + nb * (c.im - a.im) + nc * (a.im - b.im)) / d;
        let y = (na * (c.re - b.re) + nb * (a.re - c.re) + nc * (b.re - a.re)) / d;
        let center = o + ComplexScalar::new(x, y);
        let radius = [p, q, r].iter().map(|z| (z - center).norm()).fold(0.0, f64::max);
        Some(Circle { center, radius })
    }
}

fn cross(p: ComplexScalar, q: ComplexScalar, r: ComplexScalar) -> f64 {
    (q.re - p.re) * (r.im - p.im) - (q.im - p.im) * (r.re - p.re)
}

/// Smallest circle containing `points` with `p` on its boundary.
fn circle_with_one(points: &[ComplexScalar], p: ComplexScalar) -> Circle {
    let mut c = Circle { center: p, radius: 0.0 };
    for (i, &q) in points.iter().enumerate() {
        if !c.contains(q) {
            c = if c.radius == 0.0 {
                Circle::diameter(p, q)
            } else {
                circle_with_two(&points[..i], p, q)
            };
        }
    }
    c
}

/// Smallest circle containing `points` with `p` and `q` on its boundary.
fn circle_with_two(points: &[ComplexScalar], p: ComplexScalar, q: ComplexScalar) -> Circle {
    let base = Circle::diameter(p, q);
    let mut left: Option<Circle> = None;
    let mut right: Option<Circle> = None;
    for &r in points {
        if base.contains(r) {
            continue;
        }
        let side = cross(p, q, r);
        let Some(c) = Circle::circumscribed(p, q, r) else {
            continue;
        };
        let offset = cross(p, q, c.center);
        if side > 0.0 && left.is_none_or(|l| offset > cross(p, q, l.center)) {
            left = Some(c);
        } else if side < 0.0 && right.is_none_or(|l| offset < cross(p, q, l.center)) {
            right = Some(c);
        }
    }
    match (left, right) {
        (None, None) => base,
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (Some(l), Some(r)) => {
            if l.radius <= r.radius {
                l
            } else {
                r
            }
        }
    }
}

/// Band endpoints `γ = α − r·u`, `Γ = α + r·u` with `u = α/|α|` (or 1 at
/// the origin). Any unit `u` gives the same bounds; this one is fixed for
/// determinism.
pub fn fit_band(disk: &Disk) -> Result<Band> {
    if disk.radius() == 0.0 {
        return Err(Error::InvalidParams("a band needs a disk of positive radius".into()));
    }
    let alpha = disk.alpha();
    let modulus = alpha.norm();
    let u = if modulus == 0.0 {
        ComplexScalar::new(1.0, 0.0)
    } else {
        alpha / modulus
    };
    Band::new(alpha - u * disk.radius(), alpha + u * disk.radius())
}

/// Minimal admissible `r²` of the offset condition: `Σ p|b − conj(a)|²`.
pub fn fit_offset_radius(ds: &WeightedDataset, policy: &TolerancePolicy) -> f64 {
    offset_sum(ds, policy)
}

/// Whether a family of bounds applies to the fitted parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Applicable {
    pub applicable: bool,
    pub reason: String,
}

impl Applicable {
    fn yes(reason: impl Into<String>) -> Self {
        Self {
            applicable: true,
            reason: reason.into(),
        }
    }

    fn no(reason: impl Into<String>) -> Self {
        Self {
            applicable: false,
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Applicability {
    pub thm21: Applicable,
    pub thm22: Applicable,
    pub thm31: Applicable,
    pub thm41: Applicable,
    pub thm51: Applicable,
    pub thm61: Applicable,
    pub classical: Applicable,
}

/// Everything fitted from one dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    /// Absent when some `b_k` is zero.
    pub disk: Option<Disk>,
    /// Absent without a disk or when the disk has radius zero.
    pub band: Option<Band>,
    /// Present only for real positive data.
    pub real_band: Option<RealBandParams>,
    pub offset_r2: f64,
    pub applicability: Applicability,
}

/// Fit every hypothesis family.
pub fn fit(ds: &WeightedDataset, policy: &TolerancePolicy) -> Result<FitResult> {
    if ds.is_empty() {
        return Err(Error::EmptyInput);
    }
    let disk = match ratio_points(ds) {
        Ok(points) => Some(min_enclosing_disk(&points)?),
        Err(Error::ZeroDenominator(_)) => None,
        Err(e) => return Err(e),
    };
    let band = match &disk {
        Some(d) if d.radius() > 0.0 => Some(fit_band(d)?),
        _ => None,
    };
    let real_band = check_real_band(ds);
    let offset_r2 = fit_offset_radius(ds, policy);
    let s_aa = aggregates_with(ds, policy.weighting()).s_aa;

    let zero_b = || match ds.first_zero_b() {
        Some(k) => format!("b_{k} = 0"),
        None => "no disk".to_string(),
    };
    let thm21 = match &disk {
        Some(_) => Applicable::yes("all b_k nonzero"),
        None => Applicable::no(zero_b()),
    };
    let thm22 = match &disk {
        Some(d) if d.is_regular(policy) => Applicable::yes("|α| > r"),
        Some(_) => Applicable::no("|α| ≤ r: the linear forms are evaluated instead"),
        None => Applicable::no(zero_b()),
    };
    let thm31 = match &band {
        Some(b) if b.re_product() > policy.strict_margin * b.re_product_scale() => {
            Applicable::yes("Re(Γ conj(γ)) > 0")
        }
        Some(_) => Applicable::no("Re(Γ conj(γ)) ≤ 0: the linear forms are evaluated instead"),
        None if disk.is_some() => Applicable::no("fitted disk has radius zero"),
        None => Applicable::no(zero_b()),
    };
    let thm41 = match &band {
        Some(b) if !b.is_antipodal() => Applicable::yes("Γ ≠ −γ"),
        Some(_) => Applicable::no("Γ = −γ"),
        None if disk.is_some() => Applicable::no("fitted disk has radius zero"),
        None => Applicable::no(zero_b()),
    };
    let thm51 = if offset_r2 == 0.0 {
        Applicable::no("r² = 0: b = conj(a)")
    } else if offset_r2 < s_aa * (1.0 - policy.strict_margin) {
        Applicable::yes("0 < r² < Σp|a|²")
    } else {
        Applicable::no("r² ≥ Σp|a|²")
    };
    let thm61 = if offset_r2 > 0.0 {
        Applicable::yes("r² > 0")
    } else {
        Applicable::no("r² = 0: b = conj(a)")
    };
    let classical = if real_band.is_some() {
        Applicable::yes("real positive data")
    } else {
        Applicable::no("data not real positive")
    };

    Ok(FitResult {
        disk,
        band,
        real_band,
        offset_r2,
        applicability: Applicability {
            thm21,
            thm22,
            thm31,
            thm41,
            thm51,
            thm61,
            classical,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{check_band, check_disk};
    use rand::Rng;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    /// Exhaustive pair/triple search.
    fn oracle(points: &[ComplexScalar]) -> (ComplexScalar, f64) {
        let covers = |center: ComplexScalar, r: f64| points.iter().all(|z| (z - center).norm() <= r * (1.0 + 1e-10) + 1e-12);
        let mut best = (points[0], f64::INFINITY);
        let mut consider = |center: ComplexScalar| {
            let r = points.iter().map(|z| (z - center).norm()).fold(0.0, f64::max);
            if r < best.1 && covers(center, r) {
                best = (center, r);
            }
        };
        if points.len() == 1 {
            return (points[0], 0.0);
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                consider((points[i] + points[j]) * 0.5);
                for k in j + 1..points.len() {
                    if let Some(circ) = Circle::circumscribed(points[i], points[j], points[k]) {
                        consider(circ.center);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn spec_examples() {
        let d = min_enclosing_disk(&[c(3.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!((d.alpha(), d.radius()), (c(2.0, 0.0), 1.0));

        let d = min_enclosing_disk(&[c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert!(d.alpha().norm() < 1e-15);
        assert!((d.radius() - 1.0).abs() < 1e-15);

        let z = c(0.3, -2.0);
        let d = min_enclosing_disk(&[z]).unwrap();
        assert_eq!((d.alpha(), d.radius()), (z, 0.0));

        assert!(matches!(min_enclosing_disk(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn matches_oracle_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.random_range(1..=10);
            let pts: Vec<_> = (0..n)
                .map(|_| c(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)))
                .collect();
            let d = min_enclosing_disk(&pts).unwrap();
            let (center, r) = oracle(&pts);
            assert!((d.radius() - r).abs() < 1e-9, "{pts:?}");
            assert!((d.alpha() - center).norm() < 1e-7);
            let shrunk = d.radius() - 1e-6 * (1.0 + d.radius());
            if d.radius() > 0.0 {
                assert!(pts.iter().any(|z| (z - d.alpha()).norm() > shrunk));
            }
        }
    }

    #[test]
    fn duplicate_and_collinear_points() {
        let pts = [c(1.0, 1.0), c(1.0, 1.0), c(2.0, 2.0), c(3.0, 3.0), c(2.0, 2.0)];
        let d = min_enclosing_disk(&pts).unwrap();
        assert!((d.alpha() - c(2.0, 2.0)).norm() < 1e-15);
        assert!((d.radius() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn deterministic() {
        let pts: Vec<_> = (0..50).map(|k| c((k as f64 * 0.7).sin(), (k as f64 * 1.3).cos())).collect();
        assert_eq!(min_enclosing_disk(&pts).unwrap(), min_enclosing_disk(&pts).unwrap());
    }

    #[test]
    fn band_fit_examples() {
        let b = fit_band(&Disk::new(c(2.0, 0.0), 1.0).unwrap()).unwrap();
        assert_eq!((b.lower(), b.upper()), (c(1.0, 0.0), c(3.0, 0.0)));

        let b = fit_band(&Disk::new(c(0.0, 0.0), 1.0).unwrap()).unwrap();
        assert_eq!((b.lower(), b.upper()), (c(-1.0, 0.0), c(1.0, 0.0)));

        let b = fit_band(&Disk::new(c(0.0, 2.0), 1.0).unwrap()).unwrap();
        assert_eq!((b.lower(), b.upper()), (c(0.0, 1.0), c(0.0, 3.0)));
        assert_eq!(b.re_product(), 3.0);

        assert!(fit_band(&Disk::new(c(1.0, 0.0), 0.0).unwrap()).is_err());
    }

    #[test]
    fn offset_fit_examples() {
        let pol = TolerancePolicy::default();
        let ds = WeightedDataset::from_real(&[1.0, 1.0], &[1.5, 0.5], &[1.0, 1.0]).unwrap();
        assert_eq!(fit_offset_radius(&ds, &pol), 0.25);
        let ds = WeightedDataset::unweighted(vec![c(1.0, 2.0)], vec![c(1.0, -2.0)]).unwrap();
        assert_eq!(fit_offset_radius(&ds, &pol), 0.0);
        let ds = WeightedDataset::unweighted(vec![c(0.0, 1.0)], vec![c(0.0, -1.0)]).unwrap();
        assert_eq!(fit_offset_radius(&ds, &pol), 0.0);
    }

    #[test]
    fn fit_then_check() {
        let pol = TolerancePolicy::default();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.random_range(1..=8);
            let mut gen = || c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
            let a: Vec<_> = (0..n).map(|_| gen()).collect();
            let b: Vec<_> = (0..n).map(|_| gen()).collect();
            let ds = WeightedDataset::unweighted(a, b).unwrap();
            let f = fit(&ds, &pol).unwrap();
            let disk = f.disk.unwrap();
            assert!(check_disk(&ds, &disk, &pol).unwrap().holds);
            if let Some(band) = f.band {
                assert!((band.center() - disk.alpha()).norm() <= 1e-12 * disk.scale());
                assert!((band.radius() - disk.radius()).abs() <= 1e-12 * disk.scale());
                assert!(check_band(&ds, &band, &pol).unwrap().holds);
            }
        }
    }

    #[test]
    fn fit_reports_applicability() {
        let pol = TolerancePolicy::default();
        let ds = WeightedDataset::from_real(&[3.0, 1.0], &[1.0, 1.0], &[1.0, 1.0]).unwrap();
        let f = fit(&ds, &pol).unwrap();
        assert_eq!(f.disk.unwrap().alpha(), c(2.0, 0.0));
        assert!(f.applicability.thm22.applicable);
        assert!(f.applicability.classical.applicable);

        let ds = WeightedDataset::unweighted(vec![c(1.0, 0.0)], vec![c(0.0, 0.0)]).unwrap();
        let f = fit(&ds, &pol).unwrap();
        assert!(f.disk.is_none());
        assert!(!f.applicability.thm21.applicable);
        assert!(f.applicability.thm21.reason.contains("b_0"));
    }
}
