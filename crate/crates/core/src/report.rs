use serde::{Deserialize, Serialize};

use crate::bounds::BoundId;
use crate::error::{Error, Result};

/// Numerical tolerances shared by checkers and evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TolerancePolicy {
    /// Relative tolerance for "the bound holds".
    pub verify_tol: f64,
    /// Relative margin for hypotheses, both the strict ones (`|α| > r`,
    /// `r² < s_aa`, `Re(Γ conj(γ)) > 0`) and the closed containment ones.
    pub strict_margin: f64,
    /// Evaluate the normalized-weight bounds over `p_k = w_k / Σ w`. When
    /// false they run on the raw weights.
    pub normalize_weights: bool,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self {
            verify_tol: 1e-9,
            strict_margin: 1e-12,
            normalize_weights: true,
        }
    }
}

impl TolerancePolicy {
    pub fn new(verify_tol: f64, strict_margin: f64, normalize_weights: bool) -> Result<Self> {
        if !(verify_tol > 0.0 && verify_tol.is_finite()) {
            return Err(Error::InvalidParams(format!("verify_tol must be positive, got {verify_tol}")));
        }
        if !(strict_margin >= 0.0 && strict_margin.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "strict_margin must be nonnegative, got {strict_margin}"
            )));
        }
        Ok(Self {
            verify_tol,
            strict_margin,
            normalize_weights,
        })
    }

    pub fn with_verify_tol(self, verify_tol: f64) -> Result<Self> {
        Self::new(verify_tol, self.strict_margin, self.normalize_weights)
    }

    pub(crate) fn weighting(&self) -> crate::data::Weighting {
        if self.normalize_weights {
            crate::data::Weighting::Normalized
        } else {
            crate::data::Weighting::Raw
        }
    }
}

/// One evaluated inequality.
///
/// `lhs_chain` lists the left members of a chained statement in increasing
/// order, ending with `lhs`, the member compared against the first right
/// side. `rhs_chain` lists the right sides, also in increasing order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub hypothesis_ok: bool,
    /// Worst signed margin of the hypothesis; negative means violated.
    pub hypothesis_margin: f64,
    pub lhs: f64,
    pub lhs_chain: Vec<f64>,
    pub rhs_chain: Vec<f64>,
    /// `rhs_chain[0] − lhs`
    pub slack: f64,
    /// `lhs / rhs_chain[0]` when that is positive, else 0.
    pub tightness: f64,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub(crate) fn new(
        bound_id: BoundId,
        hypothesis_ok: bool,
        hypothesis_margin: f64,
        lhs_chain: Vec<f64>,
        rhs_chain: Vec<f64>,
    ) -> Self {
        assert!(!lhs_chain.is_empty() && !rhs_chain.is_empty());
        let lhs = *lhs_chain.last().unwrap();
        let rhs = rhs_chain[0];
        let slack = rhs - lhs;
        let tightness = if rhs > 0.0 { lhs / rhs } else { 0.0 };
        let mut notes = Vec::new();
        if !hypothesis_ok {
            notes.push(format!("hypothesis violated (margin {hypothesis_margin:.6e})"));
        }
        Self {
            bound_id,
            hypothesis_ok,
            hypothesis_margin,
            lhs,
            lhs_chain,
            rhs_chain,
            slack,
            tightness,
            notes,
        }
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn rhs(&self) -> f64 {
        self.rhs_chain[0]
    }

    /// `max(|lhs|, |rhs|, 1)`
    pub fn scale(&self) -> f64 {
        self.lhs.abs().max(self.rhs().abs()).max(1.0)
    }

    /// The bound holds within the relative tolerance.
    pub fn holds(&self, tol: f64) -> bool {
        self.slack >= -tol * self.scale()
    }

    /// Hypothesis satisfied but the bound fails: the one outcome that must
    /// never happen for a correct inequality.
    pub fn is_violation(&self, tol: f64) -> bool {
        self.hypothesis_ok && !self.holds(tol)
    }

    /// Both chains are nondecreasing within the relative tolerance.
    pub fn chains_ordered(&self, tol: f64) -> bool {
        ordered(&self.lhs_chain, tol) && ordered(&self.rhs_chain, tol)
    }
}

fn ordered(chain: &[f64], tol: f64) -> bool {
    chain.windows(2).all(|w| {
        let scale = w[0].abs().max(w[1].abs()).max(1.0);
        w[1] - w[0] >= -tol * scale
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slack_and_tightness() {
        let r = BoundReport::new(BoundId::Cassels, true, 0.0, vec![1.25], vec![4.0 / 3.0]);
        assert!((r.slack - (4.0 / 3.0 - 1.25)).abs() < 1e-15);
        assert!((r.tightness - 0.9375).abs() < 1e-15);
        assert!(r.holds(1e-9));
        assert!(!r.is_violation(1e-9));

        let z = BoundReport::new(BoundId::OffsetSqrt, true, 0.0, vec![0.0], vec![0.0]);
        assert_eq!(z.tightness, 0.0);
        assert!(z.holds(1e-9));
    }

    #[test]
    fn violation_requires_hypothesis() {
        let r = BoundReport::new(BoundId::Cassels, false, -0.5, vec![2.0], vec![1.0]);
        assert!(!r.holds(1e-9));
        assert!(!r.is_violation(1e-9));
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn chain_ordering() {
        let r = BoundReport::new(BoundId::OffsetSqrt, true, 0.0, vec![0.1, 0.2, 0.3], vec![0.5]);
        assert!(r.chains_ordered(1e-12));
        let r = BoundReport::new(BoundId::DiskProduct, true, 0.0, vec![1.0], vec![2.0, 1.5]);
        assert!(!r.chains_ordered(1e-12));
    }

    #[test]
    fn policy_validation() {
        assert!(TolerancePolicy::new(0.0, 0.0, true).is_err());
        assert!(TolerancePolicy::new(1e-9, -1.0, true).is_err());
        let p = TolerancePolicy::default();
        assert_eq!((p.verify_tol, p.strict_margin, p.normalize_weights), (1e-9, 1e-12, true));
    }
}
