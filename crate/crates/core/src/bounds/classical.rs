//! The classical reverses for positive real n-tuples.

use serde::{Deserialize, Serialize};

use super::BoundId;
use crate::conditions::{ConditionVerdict, Interval, RealBandParams};
use crate::data::{aggregates_with, WeightedDataset, Weighting};
use crate::error::{Error, Result};
use crate::report::{BoundReport, TolerancePolicy};

/// Ratio-form reverses `Σa²·Σb² / (Σab)² ≤ K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductRatioVariant {
    /// Unweighted, under component boxes.
    PolyaSzego,
    /// Weighted, under the ratio band `m ≤ a/b ≤ M`.
    Cassels,
    /// Weighted, under component boxes.
    GruebReinboldt,
}

/// Convex weights `u + v = 1`, `v ≤ u`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DmWeights {
    u: f64,
    v: f64,
}

impl DmWeights {
    pub fn new(u: f64, v: f64) -> Result<Self> {
        let unit = |x: f64| (0.0..=1.0).contains(&x);
        if !(unit(u) && unit(v) && (u + v - 1.0).abs() <= 1e-12 && v <= u) {
            return Err(Error::InvalidParams(format!(
                "weights need u, v in [0, 1], u + v = 1 and v <= u; got u = {u}, v = {v}"
            )));
        }
        Ok(Self { u, v })
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }
}

impl Default for DmWeights {
    fn default() -> Self {
        Self { u: 0.5, v: 0.5 }
    }
}

/// Which ratio the generalized Diaz-Metcalf band constrains.
///
/// The inequality `u·Σwb² + v·mM·Σwa² ≤ (vm + uM)·Σwab` follows termwise
/// from `u t² − (vm + uM) t + vmM ≤ 0` at `t = b_k/a_k`, whose roots are
/// `t = M` and `t = vm/u ≤ m`. Reading the band as a bound on `a/b` does not
/// give a valid inequality; that reading is kept for reproducing the
/// counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DmReading {
    /// `m ≤ b_k/a_k ≤ M`, derived from the `a/b` band as `[1/M, 1/m]`.
    #[default]
    BOverA,
    /// `m ≤ a_k/b_k ≤ M` as printed in the classical statement.
    AOverB,
}

/// Right side of the Klamkin-McLenaghan inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KmVariant {
    /// `(√M − √m)²·Σwab·Σwa²`, as commonly printed. Not homogeneous and
    /// violated by simple data.
    Literal,
    /// `(√M − √m)²·Σwab·Σwb²`, the sharp form.
    #[default]
    BSquaredCorrected,
}

/// Difference-form and linear reverses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdditiveVariant {
    ShishaMond,
    Ozeki,
    DiazMetcalf,
    GeneralizedDiazMetcalf { weights: DmWeights, reading: DmReading },
    KlamkinMcLenaghan(KmVariant),
}

/// Real sums of a positive dataset.
struct RealSums {
    aa: f64,
    bb: f64,
    ab: f64,
}

fn real_sums(ds: &WeightedDataset, weighting: Weighting) -> Result<RealSums> {
    if !ds.is_real_positive() {
        return Err(Error::Inapplicable("requires real, strictly positive a and b".into()));
    }
    let agg = aggregates_with(ds, weighting);
    if agg.s_ab.re == 0.0 {
        return Err(Error::ZeroDenominator(0));
    }
    Ok(RealSums {
        aa: agg.s_aa,
        bb: agg.s_bb,
        ab: agg.s_ab.re,
    })
}

fn boxes(params: &RealBandParams) -> Result<(Interval, Interval)> {
    match (params.a_box, params.b_box) {
        (Some(a), Some(b)) => {
            a.validate()?;
            b.validate()?;
            Ok((a, b))
        }
        _ => Err(Error::InvalidParams("component bounds m1, M1, m2, M2 are required".into())),
    }
}

fn box_verdict(ds: &WeightedDataset, a_box: &Interval, b_box: &Interval, policy: &TolerancePolicy) -> ConditionVerdict {
    let margins = ds
        .a()
        .iter()
        .zip(ds.b())
        .map(|(a, b)| a_box.margin(a.re).min(b_box.margin(b.re)))
        .collect();
    ConditionVerdict::closed(margins, policy.strict_margin, a_box.hi.max(b_box.hi).max(1.0))
}

fn ratio_verdict(
    ds: &WeightedDataset,
    band: &Interval,
    ratio: impl Fn(f64, f64) -> f64,
    policy: &TolerancePolicy,
) -> ConditionVerdict {
    let margins = ds
        .a()
        .iter()
        .zip(ds.b())
        .map(|(a, b)| band.margin(ratio(a.re, b.re)))
        .collect();
    ConditionVerdict::closed(margins, policy.strict_margin, band.hi.max(1.0))
}

fn report(id: BoundId, verdict: &ConditionVerdict, lhs: f64, rhs: f64) -> BoundReport {
    super::evaluated(id, verdict, vec![lhs], vec![rhs])
}

const UNIT_WEIGHT_NOTE: &str = "evaluated with unit weights; stored weights ignored";

/// `Σa²·Σb² / (Σab)²` against the variant's constant.
pub fn product_ratio_bound(
    ds: &WeightedDataset,
    params: &RealBandParams,
    variant: ProductRatioVariant,
    policy: &TolerancePolicy,
) -> Result<BoundReport> {
    params.ratio.validate()?;
    let weighting = match variant {
        ProductRatioVariant::PolyaSzego => Weighting::Unit,
        _ => Weighting::Raw,
    };
    let s = real_sums(ds, weighting)?;
    let lhs = s.aa * s.bb / (s.ab * s.ab);
    let r = match variant {
        ProductRatioVariant::PolyaSzego => {
            let (ab, bb) = boxes(params)?;
            let q = (ab.hi * bb.hi / (ab.lo * bb.lo)).sqrt();
            let rhs = 0.25 * (q + 1.0 / q).powi(2);
            let r = report(BoundId::PolyaSzego, &box_verdict(ds, &ab, &bb, policy), lhs, rhs);
            if ds.has_unit_weights() {
                r
            } else {
                r.with_note(UNIT_WEIGHT_NOTE)
            }
        }
        ProductRatioVariant::Cassels => {
            let Interval { lo: m, hi: mm } = params.ratio;
            let rhs = (mm + m).powi(2) / (4.0 * m * mm);
            report(
                BoundId::Cassels,
                &ratio_verdict(ds, &params.ratio, |a, b| a / b, policy),
                lhs,
                rhs,
            )
        }
        ProductRatioVariant::GruebReinboldt => {
            let (ab, bb) = boxes(params)?;
            let (lo, hi) = (ab.lo * bb.lo, ab.hi * bb.hi);
            let rhs = (hi + lo).powi(2) / (4.0 * lo * hi);
            report(BoundId::GruebReinboldt, &box_verdict(ds, &ab, &bb, policy), lhs, rhs)
        }
    };
    Ok(r)
}

/// Difference-form and linear classical reverses.
pub fn additive_classical_bound(
    ds: &WeightedDataset,
    params: &RealBandParams,
    variant: AdditiveVariant,
    policy: &TolerancePolicy,
) -> Result<BoundReport> {
    params.ratio.validate()?;
    let unit_note = |r: BoundReport| {
        if ds.has_unit_weights() {
            r
        } else {
            r.with_note(UNIT_WEIGHT_NOTE)
        }
    };
    let r = match variant {
        AdditiveVariant::ShishaMond => {
            let (ab, bb) = boxes(params)?;
            let s = real_sums(ds, Weighting::Unit)?;
            let lhs = s.aa / s.ab - s.ab / s.bb;
            let rhs = ((ab.hi / bb.lo).sqrt() - (ab.lo / bb.hi).sqrt()).powi(2);
            unit_note(report(BoundId::ShishaMond, &box_verdict(ds, &ab, &bb, policy), lhs, rhs))
        }
        AdditiveVariant::Ozeki => {
            let (ab, bb) = boxes(params)?;
            let s = real_sums(ds, Weighting::Unit)?;
            let n = ds.len() as f64;
            let lhs = s.aa * s.bb - s.ab * s.ab;
            let rhs = 0.25 * n * n * (ab.hi * bb.hi - ab.lo * bb.lo).powi(2);
            unit_note(report(BoundId::Ozeki, &box_verdict(ds, &ab, &bb, policy), lhs, rhs))
        }
        AdditiveVariant::DiazMetcalf => {
            let (ab, bb) = boxes(params)?;
            let s = real_sums(ds, Weighting::Unit)?;
            let lhs = s.bb + (bb.lo * bb.hi) / (ab.lo * ab.hi) * s.aa;
            let rhs = (bb.hi / ab.lo + bb.lo / ab.hi) * s.ab;
            unit_note(report(BoundId::DiazMetcalf, &box_verdict(ds, &ab, &bb, policy), lhs, rhs))
        }
        AdditiveVariant::GeneralizedDiazMetcalf { weights, reading } => {
            let weights = DmWeights::new(weights.u, weights.v)?;
            let s = real_sums(ds, Weighting::Raw)?;
            let (band, verdict) = match reading {
                DmReading::BOverA => {
                    let band = Interval::new(1.0 / params.ratio.hi, 1.0 / params.ratio.lo)?;
                    let verdict = ratio_verdict(ds, &band, |a, b| b / a, policy);
                    (band, verdict)
                }
                DmReading::AOverB => (params.ratio, ratio_verdict(ds, &params.ratio, |a, b| a / b, policy)),
            };
            let (u, v) = (weights.u, weights.v);
            let (m, mm) = (band.lo, band.hi);
            let lhs = u * s.bb + v * m * mm * s.aa;
            let rhs = (v * m + u * mm) * s.ab;
            let r = report(BoundId::GeneralizedDiazMetcalf, &verdict, lhs, rhs);
            match reading {
                DmReading::BOverA => r.with_note(format!("band read on b/a: [{m:e}, {mm:e}]")),
                DmReading::AOverB => r.with_note("band read on a/b as printed; not a valid inequality"),
            }
        }
        AdditiveVariant::KlamkinMcLenaghan(km) => {
            let s = real_sums(ds, Weighting::Raw)?;
            let Interval { lo: m, hi: mm } = params.ratio;
            let lhs = s.aa * s.bb - s.ab * s.ab;
            let factor = (mm.sqrt() - m.sqrt()).powi(2) * s.ab;
            let rhs = match km {
                KmVariant::BSquaredCorrected => factor * s.bb,
                KmVariant::Literal => factor * s.aa,
            };
            let r = report(
                BoundId::KlamkinMcLenaghan,
                &ratio_verdict(ds, &params.ratio, |a, b| a / b, policy),
                lhs,
                rhs,
            );
            match km {
                KmVariant::BSquaredCorrected => r.with_note("right side uses Σw·b²"),
                KmVariant::Literal => r.with_note("right side uses Σw·a² as printed; not a valid inequality"),
            }
        }
    };
    Ok(r)
}
