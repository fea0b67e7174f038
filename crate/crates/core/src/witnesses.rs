//! Extremal configurations and sharpness sweeps.
//!
//! Each witness is a two-point dataset with `p = (½, ½)` sitting exactly on
//! the hypothesis boundary. The estimate of a witness is the constant it
//! forces: left side divided by the right side without its constant. As the
//! parameter goes to zero the estimates increase to the sharp constant.
//!
//! Differences of nearly equal quantities are formed without cancellation:
//! `√P − R = (P − R²)/(√P + R)` with `P − R²` built from the pairwise gap.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::conditions::{check_disk, check_offset, check_transformed_band, offset_sum, Band, ConditionVerdict, Disk};
use crate::data::{aggregates, lagrange_gap, ComplexScalar, WeightedDataset, Weighting};
use crate::error::{Error, Result};
use crate::report::TolerancePolicy;

/// Theorems with an extremal construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Thm21,
    Thm22,
    Thm24,
    Thm51,
    Thm61,
    Thm62,
    Thm52,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::Thm21,
        Theorem::Thm22,
        Theorem::Thm24,
        Theorem::Thm51,
        Theorem::Thm61,
        Theorem::Thm62,
        Theorem::Thm52,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::Thm21 => "thm21",
            Theorem::Thm22 => "thm22",
            Theorem::Thm24 => "thm24",
            Theorem::Thm51 => "thm51",
            Theorem::Thm61 => "thm61",
            Theorem::Thm62 => "thm62",
            Theorem::Thm52 => "thm52",
        }
    }

    /// The best possible constant.
    pub fn expected_constant(&self) -> f64 {
        match self {
            Theorem::Thm21 => 2.0,
            Theorem::Thm22 | Theorem::Thm51 => 1.0,
            Theorem::Thm24 | Theorem::Thm61 => 0.5,
            Theorem::Thm62 | Theorem::Thm52 => 0.25,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Witness parameters.
///
/// `Epsilon(ε)` is accepted by every theorem: for the disk theorems it means
/// `α = 1, r = ε` (and `α = r = ε` for thm21), for the others the band
/// `Γ = 1+ε, γ = 1−ε` or the offset `√ε`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessParams {
    Disk { alpha: f64, radius: f64 },
    Epsilon(f64),
}

/// One extremal configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessConfig {
    pub theorem: Theorem,
    pub params: WitnessParams,
    pub dataset: WeightedDataset,
    pub expected_constant: f64,
    /// Disk for thm21, thm22, thm24.
    pub disk: Option<Disk>,
    /// Band for thm52, thm62.
    pub band: Option<Band>,
    /// Offset radius `r` for thm51, thm61.
    pub offset_radius: Option<f64>,
}

fn c(re: f64) -> ComplexScalar {
    ComplexScalar::new(re, 0.0)
}

fn pair(a: [f64; 2], b: [f64; 2]) -> Result<WeightedDataset> {
    WeightedDataset::from_real(&a, &b, &[1.0, 1.0])
}

fn epsilon(theorem: Theorem, params: WitnessParams) -> Result<f64> {
    match params {
        WitnessParams::Epsilon(e) if e > 0.0 && e < 1.0 => Ok(e),
        WitnessParams::Epsilon(e) => Err(Error::InvalidParams(format!("{theorem} needs ε in (0, 1), got {e}"))),
        WitnessParams::Disk { .. } => Err(Error::InvalidParams(format!("{theorem} takes ε, not a disk"))),
    }
}

/// Build the extremal configuration of a theorem.
pub fn make_witness(theorem: Theorem, params: WitnessParams) -> Result<WitnessConfig> {
    let mut config = WitnessConfig {
        theorem,
        params,
        dataset: pair([1.0, 1.0], [1.0, 1.0])?,
        expected_constant: theorem.expected_constant(),
        disk: None,
        band: None,
        offset_radius: None,
    };
    match theorem {
        Theorem::Thm21 => {
            let r = match params {
                WitnessParams::Disk { alpha, radius } if alpha == radius && radius > 0.0 => radius,
                WitnessParams::Disk { alpha, radius } => {
                    return Err(Error::InvalidParams(format!(
                        "thm21 needs α = r > 0, got α = {alpha}, r = {radius}"
                    )))
                }
                WitnessParams::Epsilon(e) if e > 0.0 && e.is_finite() => e,
                WitnessParams::Epsilon(e) => return Err(Error::InvalidParams(format!("thm21 needs r > 0, got {e}"))),
            };
            config.dataset = pair([0.0, 2.0 * r], [1.0, 1.0])?;
            config.disk = Some(Disk::new(c(r), r)?);
        }
        Theorem::Thm22 | Theorem::Thm24 => {
            let (alpha, r) = match params {
                WitnessParams::Disk { alpha, radius } => (alpha, radius),
                WitnessParams::Epsilon(e) => (1.0, e),
            };
            if !(alpha > r && r > 0.0 && alpha.is_finite()) {
                return Err(Error::InvalidParams(format!(
                    "{theorem} needs α > r > 0, got α = {alpha}, r = {r}"
                )));
            }
            // Center and radius re-read from the stored entries so the data
            // sit on the disk boundary to the last bit.
            let (hi, lo) = (alpha + r, alpha - r);
            config.dataset = pair([hi, lo], [1.0, 1.0])?;
            config.disk = Some(Disk::new(c(0.5 * (hi + lo)), 0.5 * (hi - lo))?);
        }
        Theorem::Thm51 | Theorem::Thm61 => {
            let e = epsilon(theorem, params)?;
            let s = e.sqrt();
            config.dataset = pair([1.0, 1.0], [1.0 + s, 1.0 - s])?;
            config.offset_radius = Some(offset_sum(&config.dataset, &TolerancePolicy::default()).sqrt());
        }
        Theorem::Thm62 => {
            let e = epsilon(theorem, params)?;
            config.dataset = pair([1.0 + e, 1.0 - e], [1.0, 1.0])?;
            config.band = Some(Band::real(1.0 - e, 1.0 + e)?);
        }
        Theorem::Thm52 => {
            let e = epsilon(theorem, params)?;
            config.dataset = pair([1.0 - e, 1.0 - e], [1.0, 1.0])?;
            config.band = Some(Band::real(1.0 - e, 1.0 + e)?);
        }
    }
    Ok(config)
}

impl WitnessConfig {
    /// The theorem's hypothesis checked on the witness.
    pub fn check(&self, policy: &TolerancePolicy) -> Result<ConditionVerdict> {
        match self.theorem {
            Theorem::Thm21 | Theorem::Thm22 | Theorem::Thm24 => {
                check_disk(&self.dataset, self.disk.as_ref().expect("disk witness"), policy)
            }
            Theorem::Thm51 | Theorem::Thm61 => check_offset(
                &self.dataset,
                self.offset_radius.expect("offset witness"),
                self.theorem == Theorem::Thm51,
                policy,
            ),
            Theorem::Thm62 | Theorem::Thm52 => {
                check_transformed_band(&self.dataset, self.band.as_ref().expect("band witness"), policy)
            }
        }
    }

    /// The constant this configuration forces.
    pub fn estimate(&self) -> f64 {
        let ds = &self.dataset;
        let agg = aggregates(ds);
        let gap = lagrange_gap(ds, Weighting::Normalized);
        let root = agg.norm_product();
        // √(s_aa·s_bb) − Re(u·s_ab) for a unit u, without cancellation.
        let sqrt_excess = |u: ComplexScalar| {
            let projected = u * agg.s_ab;
            (gap + projected.im * projected.im) / (root + projected.re)
        };
        match self.theorem {
            Theorem::Thm21 => {
                let disk = self.disk.expect("disk witness");
                let lhs = agg.s_aa + disk.power() * agg.s_bb;
                lhs / (disk.alpha().conj() * agg.s_ab).re
            }
            Theorem::Thm22 => {
                // 1 − (Re² − s_aa·s_bb·power)/Re², the deficit expanded through
                // s_aa·s_bb = |s_ab|² + gap and Re² = |α|²|s_ab|² − Im².
                let disk = self.disk.expect("disk witness");
                let projected = disk.alpha().conj() * agg.s_ab;
                let r2 = disk.radius() * disk.radius();
                let deficit = r2 * agg.s_ab.norm_sqr() - projected.im * projected.im - gap * disk.power();
                1.0 - deficit / (projected.re * projected.re)
            }
            Theorem::Thm24 => {
                let disk = self.disk.expect("disk witness");
                let alpha = disk.alpha();
                let structure = disk.radius() * disk.radius() / alpha.norm() * agg.s_bb;
                sqrt_excess(alpha.conj() / alpha.norm()) / structure
            }
            Theorem::Thm51 => {
                let r2 = offset_sum(ds, &TolerancePolicy::default());
                (gap + agg.s_ab.im * agg.s_ab.im) / (r2 * agg.s_bb)
            }
            Theorem::Thm61 => sqrt_excess(c(1.0)) / offset_sum(ds, &TolerancePolicy::default()),
            Theorem::Thm62 => {
                let band = self.band.expect("band witness");
                let sum = band.lower() + band.upper();
                let structure = (band.upper() - band.lower()).norm_sqr() / sum.norm() * agg.s_bb;
                sqrt_excess(sum.conj() / sum.norm()) / structure
            }
            Theorem::Thm52 => {
                let band = self.band.expect("band witness");
                let re = ((band.lower() + band.upper()).conj() * agg.s_ab).re;
                agg.s_aa * agg.s_bb * band.re_product() / (re * re)
            }
        }
    }
}

/// Estimates along a schedule of parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub theorem: Theorem,
    pub expected_constant: f64,
    pub schedule: Vec<f64>,
    pub estimates: Vec<f64>,
    /// `|last estimate − expected constant|`.
    pub limit_gap: f64,
}

/// `ε = 10⁻¹, …, 10⁻⁶`.
pub fn default_schedule() -> Vec<f64> {
    (1..=6).map(|k| 10f64.powi(-k)).collect()
}

/// `points` values from `hi` down to `lo`, geometrically spaced.
pub fn geometric_schedule(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo && hi.is_finite()) || points < 2 {
        return Err(Error::InvalidParams(format!(
            "schedule needs 0 < lo < hi and at least two points, got {lo}, {hi}, {points}"
        )));
    }
    let ratio = (lo / hi).powf(1.0 / (points - 1) as f64);
    let mut schedule: Vec<f64> = (0..points).map(|k| hi * ratio.powi(k as i32)).collect();
    schedule[points - 1] = lo;
    Ok(schedule)
}

/// Build the witness at every schedule point and extract its constant.
/// thm21 attains its constant exactly, so only the first point is used.
pub fn sharpness_sweep(theorem: Theorem, schedule: &[f64]) -> Result<SweepResult> {
    if schedule.is_empty() {
        return Err(Error::InvalidParams("empty schedule".into()));
    }
    if schedule.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::InvalidParams("schedule must be strictly decreasing".into()));
    }
    let schedule = if theorem == Theorem::Thm21 {
        schedule[..1].to_vec()
    } else {
        schedule.to_vec()
    };
    let estimates = schedule
        .iter()
        .map(|&e| make_witness(theorem, WitnessParams::Epsilon(e)).map(|w| w.estimate()))
        .collect::<Result<Vec<_>>>()?;
    let expected = theorem.expected_constant();
    let limit_gap = (estimates[estimates.len() - 1] - expected).abs();
    Ok(SweepResult {
        theorem,
        expected_constant: expected,
        schedule,
        estimates,
        limit_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::disk_linear_bound;
    use crate::data::aggregates;

    #[test]
    fn ids_roundtrip() {
        for t in Theorem::ALL {
            assert_eq!(t.as_str().parse::<Theorem>().unwrap(), t);
        }
        assert!(matches!("nosuch".parse::<Theorem>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn thm21_witness_is_an_equality() {
        let w = make_witness(Theorem::Thm21, WitnessParams::Disk { alpha: 1.0, radius: 1.0 }).unwrap();
        assert_eq!(w.dataset.a(), &[c(0.0), c(2.0)]);
        let r = disk_linear_bound(&w.dataset, &w.disk.unwrap(), &TolerancePolicy::default()).unwrap();
        assert_eq!(r.slack, 0.0);
        assert_eq!(w.estimate(), 2.0);
    }

    #[test]
    fn thm51_witness() {
        let w = make_witness(Theorem::Thm51, WitnessParams::Epsilon(0.25)).unwrap();
        assert_eq!(w.dataset.b(), &[c(1.5), c(0.5)]);
        assert_eq!(aggregates(&w.dataset).gap_re(), 0.25);
        assert!(w.check(&TolerancePolicy::default()).unwrap().holds);
    }

    #[test]
    fn thm62_witness_on_boundary() {
        let w = make_witness(Theorem::Thm62, WitnessParams::Epsilon(0.5)).unwrap();
        assert_eq!(w.dataset.a(), &[c(1.5), c(0.5)]);
        let v = w.check(&TolerancePolicy::default()).unwrap();
        assert!(v.holds);
        assert!(v.worst_margin.abs() < 1e-15);
    }

    #[test]
    fn every_witness_satisfies_its_hypothesis() {
        let pol = TolerancePolicy::default();
        for t in Theorem::ALL {
            for e in default_schedule() {
                let w = make_witness(t, WitnessParams::Epsilon(e)).unwrap();
                let v = w.check(&pol).unwrap();
                assert!(v.holds, "{t} at {e}");
                assert!(v.worst_margin >= -1e-12, "{t} at {e}");
            }
        }
    }

    #[test]
    fn closed_forms() {
        let s = sharpness_sweep(Theorem::Thm61, &default_schedule()).unwrap();
        for (e, est) in s.schedule.iter().zip(&s.estimates) {
            // the stored 1 ± √ε are rounded, hence not 1e-15
            assert!((est - 1.0 / (1.0 + (1.0 + e).sqrt())).abs() < 1e-12);
        }
        let s = sharpness_sweep(Theorem::Thm51, &default_schedule()).unwrap();
        for (e, est) in s.schedule.iter().zip(&s.estimates) {
            assert!((est - 1.0 / (1.0 + e)).abs() < 1e-12);
        }
        let s = sharpness_sweep(Theorem::Thm52, &default_schedule()).unwrap();
        for (e, est) in s.schedule.iter().zip(&s.estimates) {
            assert!((est - (1.0 - e * e) / 4.0).abs() < 1e-14);
        }
    }

    #[test]
    fn sweeps_converge_from_below() {
        for t in Theorem::ALL {
            let s = sharpness_sweep(t, &default_schedule()).unwrap();
            assert!(s.limit_gap < 1e-3, "{t}: {s:?}");
            assert!(s.estimates.windows(2).all(|w| w[1] >= w[0]), "{t}: {s:?}");
            assert!(s.estimates.iter().all(|e| *e <= s.expected_constant + 1e-9), "{t}: {s:?}");
        }
        let s = sharpness_sweep(Theorem::Thm21, &[0.3, 0.1]).unwrap();
        assert_eq!(s.estimates, vec![2.0]);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(make_witness(Theorem::Thm51, WitnessParams::Epsilon(1.0)).is_err());
        assert!(make_witness(Theorem::Thm22, WitnessParams::Disk { alpha: 1.0, radius: 2.0 }).is_err());
        assert!(sharpness_sweep(Theorem::Thm61, &[0.1, 0.2]).is_err());
        assert!(geometric_schedule(1e-6, 1e-1, 6).unwrap().len() == 6);
    }
}
