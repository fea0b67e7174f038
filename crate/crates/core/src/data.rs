//! Dataset representation and the weighted sums every bound is built from.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real or complex scalar. Real data is stored with a zero imaginary part.
pub type ComplexScalar = Complex64;

/// Tolerance on `Σ p_k = 1` for the normalized weight view.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Neumaier's variant of compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Compensated sum of an iterator of reals.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().collect::<CompensatedSum>().value()
}

/// Compensated sum of an iterator of complex numbers, component-wise.
pub fn compensated_complex_sum<I: IntoIterator<Item = Complex64>>(values: I) -> Complex64 {
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for z in values {
        re.add(z.re);
        im.add(z.im);
    }
    Complex64::new(re.value(), im.value())
}

/// Paired sequences `(a_k, b_k)` with nonnegative raw weights `w_k`.
///
/// Raw weights are stored as given. The normalized view `p_k = w_k / Σ w_j`
/// is derived on demand.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDataset", into = "RawDataset")]
pub struct WeightedDataset {
    a: Vec<ComplexScalar>,
    b: Vec<ComplexScalar>,
    w: Vec<f64>,
    weight_sum: f64,
}

#[derive(Serialize, Deserialize)]
struct RawDataset {
    a: Vec<ComplexScalar>,
    b: Vec<ComplexScalar>,
    w: Vec<f64>,
}

impl TryFrom<RawDataset> for WeightedDataset {
    type Error = Error;

    fn try_from(raw: RawDataset) -> Result<Self> {
        WeightedDataset::new(raw.a, raw.b, raw.w)
    }
}

impl From<WeightedDataset> for RawDataset {
    fn from(ds: WeightedDataset) -> Self {
        RawDataset {
            a: ds.a,
            b: ds.b,
            w: ds.w,
        }
    }
}

impl WeightedDataset {
    pub fn new(a: Vec<ComplexScalar>, b: Vec<ComplexScalar>, w: Vec<f64>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::InvariantViolation("dataset must contain at least one entry".into()));
        }
        if b.len() != n || w.len() != n {
            return Err(Error::InvariantViolation(format!(
                "length mismatch: a has {n}, b has {}, w has {}",
                b.len(),
                w.len()
            )));
        }
        for (k, (x, y)) in a.iter().zip(&b).enumerate() {
            if !(x.re.is_finite() && x.im.is_finite()) {
                return Err(Error::InvariantViolation(format!("a[{k}] is not finite")));
            }
            if !(y.re.is_finite() && y.im.is_finite()) {
                return Err(Error::InvariantViolation(format!("b[{k}] is not finite")));
            }
        }
        for (k, &wk) in w.iter().enumerate() {
            if !wk.is_finite() || wk < 0.0 {
                return Err(Error::InvariantViolation(format!("weight w[{k}] = {wk} must be finite and nonnegative")));
            }
        }
        let weight_sum = compensated_sum(w.iter().copied());
        if weight_sum <= 0.0 || !weight_sum.is_finite() {
            return Err(Error::InvariantViolation("weights must have a positive finite sum".into()));
        }
        Ok(Self { a, b, w, weight_sum })
    }

    /// Dataset with every weight equal to one.
    pub fn unweighted(a: Vec<ComplexScalar>, b: Vec<ComplexScalar>) -> Result<Self> {
        let w = vec![1.0; a.len()];
        Self::new(a, b, w)
    }

    /// Dataset from real sequences.
    pub fn from_real(a: &[f64], b: &[f64], w: &[f64]) -> Result<Self> {
        Self::new(to_complex(a), to_complex(b), w.to_vec())
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn a(&self) -> &[ComplexScalar] {
        &self.a
    }

    pub fn b(&self) -> &[ComplexScalar] {
        &self.b
    }

    pub fn raw_weights(&self) -> &[f64] {
        &self.w
    }

    pub fn weight_sum(&self) -> f64 {
        self.weight_sum
    }

    pub fn normalized_weights(&self) -> Vec<f64> {
        self.w.iter().map(|w| w / self.weight_sum).collect()
    }

    /// Weights under the requested convention.
    pub fn weights(&self, weighting: Weighting) -> Vec<f64> {
        match weighting {
            Weighting::Normalized => self.normalized_weights(),
            Weighting::Raw => self.w.clone(),
            Weighting::Unit => vec![1.0; self.len()],
        }
    }

    /// True when every `b_k` is nonzero.
    pub fn b_nonzero(&self) -> bool {
        self.first_zero_b().is_none()
    }

    pub(crate) fn first_zero_b(&self) -> Option<usize> {
        self.b.iter().position(|z| z.re == 0.0 && z.im == 0.0)
    }

    pub fn is_real(&self) -> bool {
        self.a.iter().chain(&self.b).all(|z| z.im == 0.0)
    }

    pub fn is_real_positive(&self) -> bool {
        self.a.iter().chain(&self.b).all(|z| z.im == 0.0 && z.re > 0.0)
    }

    pub fn has_unit_weights(&self) -> bool {
        self.w.iter().all(|&w| w == 1.0)
    }

    /// The same data with the roles of the sequences unchanged and every
    /// entry permuted by `order`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.len() {
            return Err(Error::InvalidParams("permutation length mismatch".into()));
        }
        let pick_c = |v: &[ComplexScalar]| order.iter().map(|&i| v[i]).collect::<Vec<_>>();
        Self::new(
            pick_c(&self.a),
            pick_c(&self.b),
            order.iter().map(|&i| self.w[i]).collect(),
        )
    }
}

fn to_complex(values: &[f64]) -> Vec<ComplexScalar> {
    values.iter().map(|&x| ComplexScalar::new(x, 0.0)).collect()
}

/// Which weights a weighted sum uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Weighting {
    /// `p_k = w_k / Σ w_j`.
    Normalized,
    /// The stored `w_k`.
    Raw,
    /// `1` for every entry, ignoring the stored weights.
    Unit,
}

/// The three recurring weighted sums and the quantities derived from them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CbsAggregates {
    /// `Σ p_k |a_k|²`
    pub s_aa: f64,
    /// `Σ p_k |b_k|²`
    pub s_bb: f64,
    /// `Σ p_k a_k b_k`, the literal product without conjugation.
    pub s_ab: ComplexScalar,
    /// `s_aa · s_bb − |s_ab|²`
    pub gap: f64,
    /// `Σ p_k Re(a_k b_k)`
    pub re_ab: f64,
}

impl CbsAggregates {
    /// `sqrt(s_aa · s_bb)`
    pub fn norm_product(&self) -> f64 {
        (self.s_aa * self.s_bb).sqrt()
    }

    /// `s_aa · s_bb − re_ab²`
    pub fn gap_re(&self) -> f64 {
        self.s_aa * self.s_bb - self.re_ab * self.re_ab
    }
}

/// Aggregates over the normalized weights.
pub fn aggregates(ds: &WeightedDataset) -> CbsAggregates {
    aggregates_with(ds, Weighting::Normalized)
}

pub fn aggregates_with(ds: &WeightedDataset, weighting: Weighting) -> CbsAggregates {
    let (weights, divisor) = match weighting {
        Weighting::Normalized => (ds.raw_weights().to_vec(), ds.weight_sum()),
        Weighting::Raw => (ds.raw_weights().to_vec(), 1.0),
        Weighting::Unit => (vec![1.0; ds.len()], 1.0),
    };
    let triples = || ds.a().iter().zip(ds.b()).zip(&weights);
    let s_aa = compensated_sum(triples().map(|((a, _), w)| w * a.norm_sqr())) / divisor;
    let s_bb = compensated_sum(triples().map(|((_, b), w)| w * b.norm_sqr())) / divisor;
    let s_ab = compensated_complex_sum(triples().map(|((a, b), w)| a * b * w)) / divisor;
    let re_ab = compensated_sum(triples().map(|((a, b), w)| w * (a * b).re)) / divisor;
    let gap = s_aa * s_bb - s_ab.norm_sqr();
    CbsAggregates {
        s_aa,
        s_bb,
        s_ab,
        gap,
        re_ab,
    }
}

/// The CBS gap through Lagrange's identity,
/// `Σ_{i<j} p_i p_j |a_i conj(b_j) − a_j conj(b_i)|²`.
///
/// Free of the cancellation in `s_aa · s_bb − |s_ab|²` near equality, at
/// quadratic cost in `n`.
pub fn lagrange_gap(ds: &WeightedDataset, weighting: Weighting) -> f64 {
    let p = ds.weights(weighting);
    let (a, b) = (ds.a(), ds.b());
    let mut acc = CompensatedSum::new();
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let cross = a[i] * b[j].conj() - a[j] * b[i].conj();
            acc.add(p[i] * p[j] * cross.norm_sqr());
        }
    }
    acc.value()
}

/// The ratio points `z_k = a_k / conj(b_k)` of the disk condition.
pub fn ratio_points(ds: &WeightedDataset) -> Result<Vec<ComplexScalar>> {
    if let Some(k) = ds.first_zero_b() {
        return Err(Error::ZeroDenominator(k));
    }
    Ok(ds.a().iter().zip(ds.b()).map(|(a, b)| a / b.conj()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn identity_case_has_zero_gap() {
        let ds = WeightedDataset::from_real(&[1.0, 1.0], &[1.0, 1.0], &[1.0, 1.0]).unwrap();
        let agg = aggregates(&ds);
        assert_eq!(agg.s_aa, 1.0);
        assert_eq!(agg.s_bb, 1.0);
        assert_eq!(agg.s_ab, c(1.0, 0.0));
        assert_eq!(agg.gap, 0.0);
    }

    #[test]
    fn hand_evaluated_sums() {
        let ds = WeightedDataset::from_real(&[3.0, 1.0], &[1.0, 1.0], &[1.0, 1.0]).unwrap();
        let agg = aggregates(&ds);
        assert_eq!((agg.s_aa, agg.s_bb, agg.s_ab, agg.gap), (5.0, 1.0, c(2.0, 0.0), 1.0));
        assert_eq!(agg.re_ab, 2.0);
    }

    #[test]
    fn product_is_not_conjugated() {
        let ds = WeightedDataset::unweighted(vec![c(0.0, 1.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        let agg = aggregates(&ds);
        assert_eq!(agg.s_aa, 1.0);
        assert_eq!(agg.s_bb, 1.0);
        assert_eq!(agg.s_ab, c(0.0, 1.0));
        assert_eq!(agg.gap, 0.0);
        assert_eq!(agg.re_ab, 0.0);
    }

    #[test]
    fn raw_and_unit_weightings() {
        let ds = WeightedDataset::from_real(&[3.0, 1.0], &[1.0, 1.0], &[1.0, 3.0]).unwrap();
        let raw = aggregates_with(&ds, Weighting::Raw);
        assert_eq!((raw.s_aa, raw.s_bb, raw.s_ab.re), (12.0, 4.0, 6.0));
        let unit = aggregates_with(&ds, Weighting::Unit);
        assert_eq!((unit.s_aa, unit.s_bb, unit.s_ab.re), (10.0, 2.0, 4.0));
        let norm = aggregates(&ds);
        assert_eq!((norm.s_aa, norm.s_bb, norm.s_ab.re), (3.0, 1.0, 1.5));
    }

    #[test]
    fn ratio_points_conjugate_the_denominator() {
        let ds = WeightedDataset::from_real(&[3.0, 1.0], &[1.0, 1.0], &[1.0, 1.0]).unwrap();
        assert_eq!(ratio_points(&ds).unwrap(), vec![c(3.0, 0.0), c(1.0, 0.0)]);

        let ds = WeightedDataset::unweighted(vec![c(0.0, 1.0)], vec![c(0.0, 1.0)]).unwrap();
        assert_eq!(ratio_points(&ds).unwrap(), vec![c(-1.0, 0.0)]);

        let ds = WeightedDataset::from_real(&[2.0], &[0.0], &[1.0]).unwrap();
        assert!(matches!(ratio_points(&ds), Err(Error::ZeroDenominator(0))));
        assert!(!ds.b_nonzero());
    }

    #[test]
    fn rejects_invalid_datasets() {
        assert!(WeightedDataset::from_real(&[], &[], &[]).is_err());
        assert!(WeightedDataset::from_real(&[1.0], &[1.0, 2.0], &[1.0]).is_err());
        assert!(WeightedDataset::from_real(&[1.0], &[1.0], &[-1.0]).is_err());
        assert!(WeightedDataset::from_real(&[1.0], &[1.0], &[0.0]).is_err());
        assert!(WeightedDataset::from_real(&[f64::NAN], &[1.0], &[1.0]).is_err());
        assert!(WeightedDataset::from_real(&[1.0], &[f64::INFINITY], &[1.0]).is_err());
    }

    #[test]
    fn normalized_weights_sum_to_one() {
        let ds = WeightedDataset::from_real(&[1.0; 7], &[1.0; 7], &[0.1, 0.2, 0.3, 3.0, 1e-3, 7.0, 0.0]).unwrap();
        let total: f64 = compensated_sum(ds.normalized_weights());
        assert!((total - 1.0).abs() <= NORMALIZATION_TOL);
    }

    #[test]
    fn single_entry_is_legal() {
        let ds = WeightedDataset::unweighted(vec![c(2.0, -1.0)], vec![c(0.5, 0.5)]).unwrap();
        let agg = aggregates(&ds);
        assert!(agg.gap.abs() < 1e-15);
        assert_eq!(lagrange_gap(&ds, Weighting::Normalized), 0.0);
    }

    #[test]
    fn lagrange_gap_matches_direct_gap() {
        let ds = WeightedDataset::new(
            vec![c(1.0, 2.0), c(-0.5, 0.3), c(4.0, -1.0)],
            vec![c(0.2, -1.0), c(2.0, 2.0), c(-1.0, 0.1)],
            vec![1.0, 2.0, 0.5],
        )
        .unwrap();
        let agg = aggregates(&ds);
        let lg = lagrange_gap(&ds, Weighting::Normalized);
        assert!((agg.gap - lg).abs() < 1e-12 * agg.s_aa * agg.s_bb);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::new();
        acc.add(1e16);
        acc.add(1.0);
        acc.add(-1e16);
        assert_eq!(acc.value(), 1.0);
    }

    #[test]
    fn million_unit_entries_match_single_entry() {
        let n = 1_000_000;
        let a = vec![c(0.6, 0.8); n];
        let b = vec![c(1.0, -1.0); n];
        let ds = WeightedDataset::unweighted(a, b).unwrap();
        let agg = aggregates(&ds);
        let one = aggregates(&WeightedDataset::unweighted(vec![c(0.6, 0.8)], vec![c(1.0, -1.0)]).unwrap());
        assert!((agg.s_aa - one.s_aa).abs() <= 1e-12);
        assert!((agg.s_bb - one.s_bb).abs() <= 1e-12);
        assert!((agg.s_ab - one.s_ab).norm() <= 1e-12);
        assert!((agg.gap - one.gap).abs() <= 1e-12);
    }

    #[test]
    fn json_roundtrip_revalidates() {
        let bad = r#"{"a":[[1.0,0.0]],"b":[[1.0,0.0]],"w":[-1.0]}"#;
        assert!(serde_json::from_str::<WeightedDataset>(bad).is_err());
        let ds = WeightedDataset::from_real(&[1.0, 2.0], &[3.0, 4.0], &[1.0, 0.5]).unwrap();
        let back: WeightedDataset = serde_json::from_str(&serde_json::to_string(&ds).unwrap()).unwrap();
        assert_eq!(ds, back);
    }
}
