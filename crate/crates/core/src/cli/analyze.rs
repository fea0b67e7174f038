//! Fit, check and evaluate everything that applies to one dataset.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    additive_classical_bound, band_product_bounds, band_sqrt_bound, disk_linear_bound, disk_product_bounds,
    disk_sqrt_bound, offset_gap_bound, offset_sqrt_bound, product_ratio_bound, transformed_band_product_bound,
    transformed_band_sqrt_bound, AdditiveVariant, BandProductForm, BoundId, DmReading, DmWeights, KmVariant,
    ProductRatioVariant,
};
use crate::conditions::{check_band, check_disk, check_offset, check_transformed_band, Band, ConditionVerdict, Disk};
use crate::data::WeightedDataset;
use crate::error::{Error, Result};
use crate::fitting::{fit, fit_band, FitResult};
use crate::report::{BoundReport, TolerancePolicy};

/// Choices that change what is evaluated.
#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub policy: TolerancePolicy,
    /// Replaces the fitted disk.
    pub disk: Option<Disk>,
    /// Replaces the fitted band.
    pub band: Option<Band>,
    pub km_variant: KmVariant,
    pub band_product_form: BandProductForm,
    pub dm_reading: DmReading,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSummary {
    pub n: usize,
    pub real_only: bool,
    pub weight_sum: f64,
}

/// Hypothesis status of one condition with the parameters in use.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionSummary {
    pub condition: String,
    pub holds: bool,
    pub worst_margin: f64,
    pub worst_index: usize,
}

impl ConditionSummary {
    fn new(condition: &str, v: &ConditionVerdict) -> Self {
        Self {
            condition: condition.to_string(),
            holds: v.holds,
            worst_margin: v.worst_margin,
            worst_index: v.worst_index,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub bound_id: BoundId,
    pub reason: String,
}

/// Parameters actually used, fitted or overridden.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub disk: Option<Disk>,
    pub disk_source: String,
    pub band: Option<Band>,
    pub band_source: String,
    pub offset_r2: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub dataset: DatasetSummary,
    pub fit: FitResult,
    pub parameters: Parameters,
    pub conditions: Vec<ConditionSummary>,
    pub bounds: Vec<BoundReport>,
    pub skipped: Vec<Skipped>,
    pub errata_notes: Vec<String>,
    pub verify_tol: f64,
}

impl AnalysisReport {
    /// Bounds whose hypothesis passed but which fail beyond tolerance.
    pub fn violations(&self) -> Vec<&BoundReport> {
        self.bounds.iter().filter(|b| b.is_violation(self.verify_tol)).collect()
    }

    pub fn bound(&self, id: BoundId) -> Option<&BoundReport> {
        self.bounds.iter().find(|b| b.bound_id == id)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::InvalidParams(format!("serialization failed: {e}")))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))
    }

    /// Human-readable rendering; every number printed with 17 significant
    /// digits.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let d = &self.dataset;
        let _ = writeln!(s, "dataset: n = {}, real = {}, weight sum = {}", d.n, d.real_only, num(d.weight_sum));
        let p = &self.parameters;
        match &p.disk {
            Some(disk) => {
                let _ = writeln!(
                    s,
                    "disk ({}): alpha = {} {:+.16e}i, r = {}",
                    p.disk_source,
                    num(disk.alpha().re),
                    disk.alpha().im,
                    num(disk.radius())
                );
            }
            None => {
                let _ = writeln!(s, "disk: none ({})", p.disk_source);
            }
        }
        match &p.band {
            Some(band) => {
                let _ = writeln!(
                    s,
                    "band ({}): gamma = {} {:+.16e}i, Gamma = {} {:+.16e}i",
                    p.band_source,
                    num(band.lower().re),
                    band.lower().im,
                    num(band.upper().re),
                    band.upper().im
                );
            }
            None => {
                let _ = writeln!(s, "band: none ({})", p.band_source);
            }
        }
        let _ = writeln!(s, "offset r^2 = {}", num(p.offset_r2));
        if let Some(rb) = &self.fit.real_band {
            let _ = writeln!(s, "ratio band: [{}, {}]", num(rb.ratio.lo), num(rb.ratio.hi));
        }

        let _ = writeln!(s, "\nconditions:");
        for c in &self.conditions {
            let _ = writeln!(
                s,
                "  {:<18} {:<5} worst margin {} at index {}",
                c.condition,
                if c.holds { "holds" } else { "FAILS" },
                num(c.worst_margin),
                c.worst_index
            );
        }

        let _ = writeln!(s, "\nbounds:");
        for b in &self.bounds {
            let status = if !b.hypothesis_ok {
                "hypothesis fails"
            } else if b.holds(self.verify_tol) {
                "holds"
            } else {
                "VIOLATED"
            };
            let _ = writeln!(s, "  {} [{}]", b.bound_id, status);
            let _ = writeln!(s, "    lhs   {}", list(&b.lhs_chain));
            let _ = writeln!(s, "    rhs   {}", list(&b.rhs_chain));
            let _ = writeln!(s, "    slack {}  tightness {}", num(b.slack), num(b.tightness));
            let _ = writeln!(s, "    hypothesis margin {}", num(b.hypothesis_margin));
            for note in &b.notes {
                let _ = writeln!(s, "    note: {note}");
            }
        }
        if !self.skipped.is_empty() {
            let _ = writeln!(s, "\nskipped:");
            for k in &self.skipped {
                let _ = writeln!(s, "  {}: {}", k.bound_id, k.reason);
            }
        }
        let _ = writeln!(s, "\nerrata:");
        for e in &self.errata_notes {
            let _ = writeln!(s, "  {e}");
        }
        s
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn list(xs: &[f64]) -> String {
    xs.iter().map(|x| num(*x)).collect::<Vec<_>>().join(" <= ")
}

fn errata_notes(opts: &AnalyzeOptions) -> Vec<String> {
    let km = match opts.km_variant {
        KmVariant::BSquaredCorrected => "klamkin_mclenaghan: right side uses Σw·b² (corrected; the printed Σw·a² form fails)",
        KmVariant::Literal => "klamkin_mclenaghan: right side uses Σw·a² as printed (known to fail)",
    };
    let dm = match opts.dm_reading {
        DmReading::BOverA => "generalized_diaz_metcalf: band read on b/a, i.e. 1/M ≤ b/a ≤ 1/m (corrected)",
        DmReading::AOverB => "generalized_diaz_metcalf: band read on a/b as printed (known to fail)",
    };
    let band = match opts.band_product_form {
        BandProductForm::CorrectedQuarter => "thm31: first right side has denominator 4·Re(Γ conj(γ)) (corrected)",
        BandProductForm::LiteralHalf => "thm31: first right side has denominator 2·Re(Γ conj(γ)) as printed (weaker)",
    };
    vec![
        km.to_string(),
        dm.to_string(),
        band.to_string(),
        "thm62: r is computed from |Γ−γ|".to_string(),
    ]
}

/// Pushes evaluated reports, and turns inapplicability into a skip.
struct Collector {
    bounds: Vec<BoundReport>,
    skipped: Vec<Skipped>,
}

impl Collector {
    fn one(&mut self, id: BoundId, r: Result<BoundReport>) -> Result<()> {
        self.many(id, r.map(|r| vec![r]))
    }

    fn many(&mut self, id: BoundId, r: Result<Vec<BoundReport>>) -> Result<()> {
        match r {
            Ok(reports) => self.bounds.extend(reports),
            Err(e @ (Error::InvalidParams(_) | Error::Inapplicable(_) | Error::ZeroDenominator(_))) => {
                self.skip(id, e.to_string())
            }
            Err(e) => return Err(e),
        }
        Ok(())
    }

    fn skip(&mut self, id: BoundId, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            bound_id: id,
            reason: reason.into(),
        });
    }
}

pub fn analyze(ds: &WeightedDataset, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let policy = &opts.policy;
    let fitted = fit(ds, policy)?;

    let (disk, disk_source) = match (opts.disk, opts.band) {
        (Some(d), _) => (Some(d), "override"),
        (None, Some(b)) => (Some(b.to_disk()), "from band override"),
        (None, None) => (fitted.disk, "fitted"),
    };
    let (band, band_source) = match (opts.band, opts.disk) {
        (Some(b), _) => (Some(b), "override"),
        (None, Some(d)) if d.radius() > 0.0 => (Some(fit_band(&d)?), "from disk override"),
        (None, Some(_)) => (None, "disk override has radius zero"),
        (None, None) => (fitted.band, "fitted"),
    };
    let offset_r2 = fitted.offset_r2;

    let mut conditions = Vec::new();
    let mut out = Collector {
        bounds: Vec::new(),
        skipped: Vec::new(),
    };
    let zero_b = ds.first_zero_b();

    match (&disk, zero_b) {
        (Some(d), None) => {
            conditions.push(ConditionSummary::new("disk", &check_disk(ds, d, policy)?));
            out.one(BoundId::DiskLinear, disk_linear_bound(ds, d, policy))?;
            out.many(BoundId::DiskProduct, disk_product_bounds(ds, d, policy))?;
            out.one(BoundId::DiskSqrt, disk_sqrt_bound(ds, d, policy))?;
        }
        _ => {
            let reason = match zero_b {
                Some(k) => format!("b_{k} = 0"),
                None => "no disk".to_string(),
            };
            for id in [BoundId::DiskLinear, BoundId::DiskProduct, BoundId::DiskSqrt] {
                out.skip(id, reason.clone());
            }
        }
    }

    match (&band, zero_b) {
        (Some(b), None) => {
            conditions.push(ConditionSummary::new("band", &check_band(ds, b, policy)?));
            out.many(BoundId::BandProduct, band_product_bounds(ds, b, opts.band_product_form, policy))?;
            out.one(BoundId::BandSqrt, band_sqrt_bound(ds, b, policy))?;
        }
        _ => {
            let reason = match zero_b {
                Some(k) => format!("b_{k} = 0"),
                None => format!("no band: {band_source}"),
            };
            out.skip(BoundId::BandProduct, reason.clone());
            out.skip(BoundId::BandSqrt, reason);
        }
    }

    if offset_r2 > 0.0 {
        let r = offset_r2.sqrt();
        conditions.push(ConditionSummary::new("offset_strict", &check_offset(ds, r, true, policy)?));
        conditions.push(ConditionSummary::new("offset", &check_offset(ds, r, false, policy)?));
        out.one(BoundId::OffsetGap, offset_gap_bound(ds, r, policy))?;
        out.one(BoundId::OffsetSqrt, offset_sqrt_bound(ds, r, policy))?;
    } else {
        out.skip(BoundId::OffsetGap, "fitted r² = 0 (b = conj(a))");
        out.skip(BoundId::OffsetSqrt, "fitted r² = 0 (b = conj(a))");
    }

    match &band {
        Some(b) => {
            conditions.push(ConditionSummary::new("transformed_band", &check_transformed_band(ds, b, policy)?));
            out.one(BoundId::TransformedBandProduct, transformed_band_product_bound(ds, b, policy))?;
            out.one(BoundId::TransformedBandSqrt, transformed_band_sqrt_bound(ds, b, policy))?;
        }
        None => {
            out.skip(BoundId::TransformedBandProduct, format!("no band: {band_source}"));
            out.skip(BoundId::TransformedBandSqrt, format!("no band: {band_source}"));
        }
    }

    let classical_ids = [
        (BoundId::PolyaSzego, None, Some(ProductRatioVariant::PolyaSzego)),
        (BoundId::Cassels, None, Some(ProductRatioVariant::Cassels)),
        (BoundId::GruebReinboldt, None, Some(ProductRatioVariant::GruebReinboldt)),
        (BoundId::ShishaMond, Some(AdditiveVariant::ShishaMond), None),
        (BoundId::Ozeki, Some(AdditiveVariant::Ozeki), None),
        (BoundId::DiazMetcalf, Some(AdditiveVariant::DiazMetcalf), None),
        (
            BoundId::GeneralizedDiazMetcalf,
            Some(AdditiveVariant::GeneralizedDiazMetcalf {
                weights: DmWeights::default(),
                reading: opts.dm_reading,
            }),
            None,
        ),
        (
            BoundId::KlamkinMcLenaghan,
            Some(AdditiveVariant::KlamkinMcLenaghan(opts.km_variant)),
            None,
        ),
    ];
    match &fitted.real_band {
        Some(params) => {
            for (id, additive, ratio) in classical_ids {
                if let Some(v) = ratio {
                    out.one(id, product_ratio_bound(ds, params, v, policy))?;
                }
                if let Some(v) = additive {
                    out.one(id, additive_classical_bound(ds, params, v, policy))?;
                }
            }
        }
        None => {
            for (id, _, _) in classical_ids {
                out.skip(id, "data not real positive");
            }
        }
    }

    Ok(AnalysisReport {
        dataset: DatasetSummary {
            n: ds.len(),
            real_only: ds.is_real(),
            weight_sum: ds.weight_sum(),
        },
        fit: fitted,
        parameters: Parameters {
            disk,
            disk_source: disk_source.to_string(),
            band,
            band_source: band_source.to_string(),
            offset_r2,
        },
        conditions,
        bounds: out.bounds,
        skipped: out.skipped,
        errata_notes: errata_notes(opts),
        verify_tol: policy.verify_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::ComplexScalar;

    fn cassels_data() -> WeightedDataset {
        WeightedDataset::from_real(&[3.0, 1.0], &[1.0, 1.0], &[1.0, 1.0]).unwrap()
    }

    #[test]
    fn fitted_analysis() {
        let report = analyze(&cassels_data(), &AnalyzeOptions::default()).unwrap();
        let thm22 = report.bound(BoundId::DiskProduct).unwrap();
        assert!((thm22.rhs() - 16.0 / 3.0).abs() < 1e-14);
        let cassels = report.bound(BoundId::Cassels).unwrap();
        assert!((cassels.rhs() - 4.0 / 3.0).abs() < 1e-15);
        assert!(report.violations().is_empty());
        let mut ids: Vec<_> = report.bounds.iter().map(|b| b.bound_id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), report.bounds.len());
    }

    #[test]
    fn override_failing_hypothesis() {
        let opts = AnalyzeOptions {
            disk: Some(Disk::new(ComplexScalar::new(2.0, 0.0), 0.5).unwrap()),
            ..Default::default()
        };
        let report = analyze(&cassels_data(), &opts).unwrap();
        for id in [BoundId::DiskLinear, BoundId::DiskProduct] {
            let b = report.bound(id).unwrap();
            assert!(!b.hypothesis_ok);
            assert!(b.notes.iter().any(|n| n.contains("index 0")));
        }
    }

    #[test]
    fn json_roundtrip_is_byte_identical() {
        let report = analyze(&cassels_data(), &AnalyzeOptions::default()).unwrap();
        let json = report.to_json().unwrap();
        let back = AnalysisReport::from_json(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json().unwrap(), json);
    }

    #[test]
    fn literal_forms_surface_violations() {
        let ds = WeightedDataset::from_real(&[0.4, 0.1], &[1.0, 1.0], &[1.0, 2.0]).unwrap();
        let opts = AnalyzeOptions {
            km_variant: KmVariant::Literal,
            ..Default::default()
        };
        let report = analyze(&ds, &opts).unwrap();
        assert!(report.violations().iter().any(|b| b.bound_id == BoundId::KlamkinMcLenaghan));
        assert!(analyze(&ds, &AnalyzeOptions::default()).unwrap().violations().is_empty());
    }

    #[test]
    fn complex_data_skips_classical() {
        let ds = WeightedDataset::unweighted(
            vec![ComplexScalar::new(1.0, 1.0), ComplexScalar::new(0.5, -0.2)],
            vec![ComplexScalar::new(1.0, 0.0), ComplexScalar::new(0.3, 0.4)],
        )
        .unwrap();
        let report = analyze(&ds, &AnalyzeOptions::default()).unwrap();
        assert!(report.skipped.iter().any(|s| s.bound_id == BoundId::Cassels));
        assert!(report.violations().is_empty());
        assert!(report.to_text().contains("thm21"));
    }
}
