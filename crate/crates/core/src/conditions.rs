//! Hypothesis checkers for the containment and positivity conditions.
//!
//! Every checker reports per-term signed margins (nonnegative means the
//! term satisfies the condition) so a caller can see which index breaks a
//! hypothesis. Margins are compared against `strict_margin` scaled by the
//! magnitude of the quantities involved.

use serde::{Deserialize, Serialize};

use crate::data::{aggregates_with, compensated_sum, ratio_points, ComplexScalar, WeightedDataset};
use crate::error::{Error, Result};
use crate::report::TolerancePolicy;

/// Relative tolerance for the agreement of two algebraically identical
/// forms of the same condition.
const EQUIVALENCE_TOL: f64 = 1e-9;

/// The closed disk `{z : |z − alpha| ≤ radius}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DiskFields", into = "DiskFields")]
pub struct Disk {
    alpha: ComplexScalar,
    radius: f64,
}

#[derive(Serialize, Deserialize)]
struct DiskFields {
    alpha: ComplexScalar,
    radius: f64,
}

impl TryFrom<DiskFields> for Disk {
    type Error = Error;
    fn try_from(f: DiskFields) -> Result<Self> {
        Disk::new(f.alpha, f.radius)
    }
}

impl From<Disk> for DiskFields {
    fn from(d: Disk) -> Self {
        DiskFields {
            alpha: d.alpha,
            radius: d.radius,
        }
    }
}

impl Disk {
    pub fn new(alpha: ComplexScalar, radius: f64) -> Result<Self> {
        if !(alpha.re.is_finite() && alpha.im.is_finite()) {
            return Err(Error::InvalidParams("disk center must be finite".into()));
        }
        if !(radius >= 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParams(format!("disk radius must be finite and nonnegative, got {radius}")));
        }
        Ok(Self { alpha, radius })
    }

    pub fn alpha(&self) -> ComplexScalar {
        self.alpha
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// `|α|² − r²`, factored to limit cancellation.
    pub fn power(&self) -> f64 {
        let m = self.alpha.norm();
        (m - self.radius) * (m + self.radius)
    }

    /// `|α| > r` with room to divide by `|α|² − r²`.
    pub fn is_regular(&self, policy: &TolerancePolicy) -> bool {
        self.power() > policy.strict_margin * self.alpha.norm_sqr().max(1.0)
    }

    /// `|α| = r` within the strict margin.
    pub fn passes_through_origin(&self, policy: &TolerancePolicy) -> bool {
        self.power().abs() <= policy.strict_margin * self.alpha.norm_sqr().max(1.0)
    }

    pub(crate) fn scale(&self) -> f64 {
        (self.alpha.norm() + self.radius).max(1.0)
    }
}

/// Endpoints `lower` (γ) and `upper` (Γ) of a band condition. The
/// associated disk has center `(γ+Γ)/2` and radius `|Γ−γ|/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BandFields", into = "BandFields")]
pub struct Band {
    lower: ComplexScalar,
    upper: ComplexScalar,
}

#[derive(Serialize, Deserialize)]
struct BandFields {
    lower: ComplexScalar,
    upper: ComplexScalar,
}

impl TryFrom<BandFields> for Band {
    type Error = Error;
    fn try_from(f: BandFields) -> Result<Self> {
        Band::new(f.lower, f.upper)
    }
}

impl From<Band> for BandFields {
    fn from(b: Band) -> Self {
        BandFields {
            lower: b.lower,
            upper: b.upper,
        }
    }
}

impl Band {
    pub fn new(lower: ComplexScalar, upper: ComplexScalar) -> Result<Self> {
        let finite = |z: ComplexScalar| z.re.is_finite() && z.im.is_finite();
        if !finite(lower) || !finite(upper) {
            return Err(Error::InvalidParams("band endpoints must be finite".into()));
        }
        if lower == upper {
            return Err(Error::InvalidParams("band endpoints must differ".into()));
        }
        Ok(Self { lower, upper })
    }

    pub fn real(lower: f64, upper: f64) -> Result<Self> {
        Self::new(ComplexScalar::new(lower, 0.0), ComplexScalar::new(upper, 0.0))
    }

    pub fn lower(&self) -> ComplexScalar {
        self.lower
    }

    pub fn upper(&self) -> ComplexScalar {
        self.upper
    }

    pub fn center(&self) -> ComplexScalar {
        (self.lower + self.upper) / 2.0
    }

    pub fn radius(&self) -> f64 {
        (self.upper - self.lower).norm() / 2.0
    }

    /// `Re(Γ · conj(γ))`
    pub fn re_product(&self) -> f64 {
        (self.upper * self.lower.conj()).re
    }

    /// `Γ = −γ`, where the square-root forms are undefined.
    pub fn is_antipodal(&self) -> bool {
        self.upper == -self.lower
    }

    pub fn to_disk(&self) -> Disk {
        Disk {
            alpha: self.center(),
            radius: self.radius(),
        }
    }

    pub(crate) fn re_product_scale(&self) -> f64 {
        (self.upper.norm() * self.lower.norm()).max(1.0)
    }
}

/// A positive closed interval `0 < lo ≤ hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        let iv = Self { lo, hi };
        iv.validate()?;
        Ok(iv)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.lo > 0.0 && self.lo <= self.hi && self.hi.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "interval must satisfy 0 < lo <= hi < inf, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        Ok(())
    }

    /// Signed distance of `x` to the outside of the interval.
    pub fn margin(&self, x: f64) -> f64 {
        (x - self.lo).min(self.hi - x)
    }
}

/// Bounds for real positive data: the ratio band `m ≤ a_k/b_k ≤ M` and the
/// component boxes `m1 ≤ a_k ≤ M1`, `m2 ≤ b_k ≤ M2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealBandParams {
    pub ratio: Interval,
    pub a_box: Option<Interval>,
    pub b_box: Option<Interval>,
}

impl RealBandParams {
    pub fn from_ratio(lo: f64, hi: f64) -> Result<Self> {
        Ok(Self {
            ratio: Interval::new(lo, hi)?,
            a_box: None,
            b_box: None,
        })
    }

    pub fn with_boxes(ratio: Interval, a_box: Interval, b_box: Interval) -> Result<Self> {
        ratio.validate()?;
        a_box.validate()?;
        b_box.validate()?;
        Ok(Self {
            ratio,
            a_box: Some(a_box),
            b_box: Some(b_box),
        })
    }
}

/// Outcome of a hypothesis check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub holds: bool,
    /// Minimum of `per_term`.
    pub worst_margin: f64,
    pub worst_index: usize,
    pub per_term: Vec<f64>,
}

impl ConditionVerdict {
    /// Verdict for closed conditions: holds when every margin is at least
    /// `−strict_margin · scale`.
    pub(crate) fn closed(per_term: Vec<f64>, strict_margin: f64, scale: f64) -> Self {
        let (worst_index, worst_margin) = worst(&per_term);
        Self {
            holds: worst_margin >= -strict_margin * scale,
            worst_margin,
            worst_index,
            per_term,
        }
    }
}

fn worst(margins: &[f64]) -> (usize, f64) {
    margins
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, m)| if m < acc.1 { (i, m) } else { acc })
}

/// `Re[(Γ − z)(conj(z) − conj(γ))]`, nonnegative iff `z` lies in the band's disk.
pub fn band_quadratic_form(z: ComplexScalar, lower: ComplexScalar, upper: ComplexScalar) -> f64 {
    ((upper - z) * (z.conj() - lower.conj())).re
}

/// `¼|Γ − γ|² − |z − (γ+Γ)/2|²`, identical to [`band_quadratic_form`].
pub fn band_disk_form(z: ComplexScalar, lower: ComplexScalar, upper: ComplexScalar) -> f64 {
    0.25 * (upper - lower).norm_sqr() - (z - (lower + upper) / 2.0).norm_sqr()
}

/// `Re[(Γ·conj(y) − x)(conj(x) − conj(γ)·y)]` for one pair.
pub fn transformed_quadratic_form(
    x: ComplexScalar,
    y: ComplexScalar,
    lower: ComplexScalar,
    upper: ComplexScalar,
) -> f64 {
    ((upper * y.conj() - x) * (x.conj() - lower.conj() * y)).re
}

/// `¼|Γ − γ|²|y|² − |x − ((γ+Γ)/2)·conj(y)|²`, identical to
/// [`transformed_quadratic_form`].
pub fn transformed_disk_form(x: ComplexScalar, y: ComplexScalar, lower: ComplexScalar, upper: ComplexScalar) -> f64 {
    0.25 * (upper - lower).norm_sqr() * y.norm_sqr() - (x - (lower + upper) / 2.0 * y.conj()).norm_sqr()
}

/// Every ratio point `a_k / conj(b_k)` lies in `disk`.
pub fn check_disk(ds: &WeightedDataset, disk: &Disk, policy: &TolerancePolicy) -> Result<ConditionVerdict> {
    let points = ratio_points(ds)?;
    let margins = points.iter().map(|z| disk.radius - (z - disk.alpha).norm()).collect();
    Ok(ConditionVerdict::closed(margins, policy.strict_margin, disk.scale()))
}

/// The band condition in both its disk form and its quadratic form.
///
/// The verdict and margins are those of the disk form, bit-for-bit equal to
/// [`check_disk`] on the band's disk. The quadratic form is evaluated per
/// term and must agree with the disk form.
pub fn check_band(ds: &WeightedDataset, band: &Band, policy: &TolerancePolicy) -> Result<ConditionVerdict> {
    let disk = band.to_disk();
    let verdict = check_disk(ds, &disk, policy)?;
    let points = ratio_points(ds)?;
    let (lower, upper, radius) = (band.lower, band.upper, disk.radius);
    for (k, (z, margin)) in points.iter().zip(&verdict.per_term).enumerate() {
        let quadratic = band_quadratic_form(*z, lower, upper);
        // R² − d² = (R − d)(R + d) with d = R − margin.
        let distance = radius - margin;
        let from_disk = margin * (radius + distance);
        let scale = (upper.norm() + z.norm()) * (z.norm() + lower.norm()) + radius * radius + 1.0;
        if (quadratic - from_disk).abs() > EQUIVALENCE_TOL * scale {
            return Err(Error::EquivalenceMismatch {
                index: Some(k),
                quadratic,
                disk: from_disk,
            });
        }
    }
    Ok(verdict)
}

/// Componentwise and ratio extrema of real positive data, or `None` when
/// some entry is non-real or nonpositive.
pub fn check_real_band(ds: &WeightedDataset) -> Option<RealBandParams> {
    if !ds.is_real_positive() {
        return None;
    }
    let extent = |values: &mut dyn Iterator<Item = f64>| {
        values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)))
    };
    let (rlo, rhi) = extent(&mut ds.a().iter().zip(ds.b()).map(|(a, b)| a.re / b.re));
    let (alo, ahi) = extent(&mut ds.a().iter().map(|a| a.re));
    let (blo, bhi) = extent(&mut ds.b().iter().map(|b| b.re));
    Some(RealBandParams {
        ratio: Interval { lo: rlo, hi: rhi },
        a_box: Some(Interval { lo: alo, hi: ahi }),
        b_box: Some(Interval { lo: blo, hi: bhi }),
    })
}

/// `Σ p_k |b_k − conj(a_k)|²` under the policy's weighting.
pub fn offset_sum(ds: &WeightedDataset, policy: &TolerancePolicy) -> f64 {
    let p = ds.weights(policy.weighting());
    compensated_sum(
        ds.a()
            .iter()
            .zip(ds.b())
            .zip(&p)
            .map(|((a, b), p)| p * (b - a.conj()).norm_sqr()),
    )
}

/// The offset condition `Σ p|b − conj(a)|² ≤ r²`, and with `require_strict`
/// also `r² < Σ p|a|²`.
///
/// `per_term[0] = r² − Σ p|b − conj(a)|²`; in strict mode
/// `per_term[1] = Σ p|a|² − r²`, which must exceed the strict margin.
pub fn check_offset(
    ds: &WeightedDataset,
    r: f64,
    require_strict: bool,
    policy: &TolerancePolicy,
) -> Result<ConditionVerdict> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidParams(format!("offset radius must be positive, got {r}")));
    }
    let r2 = r * r;
    let offset = offset_sum(ds, policy);
    let containment = r2 - offset;
    let mut holds = containment >= -policy.strict_margin * r2.max(offset).max(1.0);
    let mut per_term = vec![containment];
    if require_strict {
        let s_aa = aggregates_with(ds, policy.weighting()).s_aa;
        let separation = s_aa - r2;
        holds &= separation > policy.strict_margin * s_aa.max(1.0);
        per_term.push(separation);
    }
    let (worst_index, worst_margin) = worst(&per_term);
    Ok(ConditionVerdict {
        holds,
        worst_margin,
        worst_index,
        per_term,
    })
}

/// The aggregate band condition on `(x, y) := (a, b)`, evaluated in its
/// quadratic form and its disk form, which must agree.
pub fn check_transformed_band(ds: &WeightedDataset, band: &Band, policy: &TolerancePolicy) -> Result<ConditionVerdict> {
    let p = ds.weights(policy.weighting());
    let (lower, upper) = (band.lower, band.upper);
    let center = band.center();
    let terms = || ds.a().iter().zip(ds.b()).zip(&p);
    let quadratic = compensated_sum(terms().map(|((x, y), p)| p * transformed_quadratic_form(*x, *y, lower, upper)));
    let s_yy = compensated_sum(terms().map(|((_, y), p)| p * y.norm_sqr()));
    let spread = compensated_sum(terms().map(|((x, y), p)| p * (x - center * y.conj()).norm_sqr()));
    let capacity = 0.25 * (upper - lower).norm_sqr() * s_yy;
    let disk = capacity - spread;
    let cross = compensated_sum(
        terms().map(|((x, y), p)| p * (upper.norm() * y.norm() + x.norm()) * (x.norm() + lower.norm() * y.norm())),
    );
    if (quadratic - disk).abs() > EQUIVALENCE_TOL * (cross + capacity + spread).max(1.0) {
        return Err(Error::EquivalenceMismatch {
            index: None,
            quadratic,
            disk,
        });
    }
    Ok(ConditionVerdict::closed(
        vec![disk],
        policy.strict_margin,
        capacity.max(spread).max(1.0),
    ))
}
