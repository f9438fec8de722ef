use super::ScalarizeError;
use crate::core::ObjectiveVector;

/// Positive weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(w: Vec<f64>) -> Result<Self, ScalarizeError> {
        if w.is_empty() {
            return Err(ScalarizeError::InvalidMethod("empty weight vector".into()));
        }
        if let Some(bad) = w.iter().find(|v| v.is_nan() || **v <= 0.0) {
            return Err(ScalarizeError::InvalidMethod(format!(
                "weights must be strictly positive, found {bad}"
            )));
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(ScalarizeError::InvalidMethod(format!(
                "weights must sum to 1, found {sum}"
            )));
        }
        Ok(WeightVector(w))
    }

    /// Equal preference for all `m` objectives.
    pub fn uniform(m: usize) -> Self {
        assert!(m > 0);
        WeightVector(vec![1.0 / m as f64; m])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The scalarization formulas on offer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodKind {
    /// `sum_i w_i f_i(x)`
    WeightedSum,
    /// `sum_i w_i f_i(x)^p`
    WeightedExpSum,
    /// `(sum_i w_i^p |f_i(x) - f*_i|^p)^(1/p)`
    WeightedMetric,
    /// `max_i w_i |f_i(x) - f*_i|`
    Chebyshev,
    /// `sum_i (e^(p w_i) - 1) e^(p f_i(x))`
    ExpWeightedCriterion,
    /// `prod_i |f_i(x)|^(w_i)`
    WeightedProduct,
}

impl MethodKind {
    pub fn name(&self) -> &'static str {
        match self {
            MethodKind::WeightedSum => "weighted-sum",
            MethodKind::WeightedExpSum => "weighted-exp-sum",
            MethodKind::WeightedMetric => "weighted-metric",
            MethodKind::Chebyshev => "chebyshev",
            MethodKind::ExpWeightedCriterion => "exp-weighted-criterion",
            MethodKind::WeightedProduct => "weighted-product",
        }
    }

    /// Whether the formula measures distance to an ideal point.
    pub fn needs_ideal(&self) -> bool {
        matches!(self, MethodKind::WeightedMetric | MethodKind::Chebyshev)
    }

    pub(crate) fn uses_exponent(&self) -> bool {
        matches!(
            self,
            MethodKind::WeightedExpSum
                | MethodKind::WeightedMetric
                | MethodKind::ExpWeightedCriterion
        )
    }

    pub(crate) fn can_overflow(&self) -> bool {
        matches!(
            self,
            MethodKind::ExpWeightedCriterion | MethodKind::WeightedProduct
        )
    }
}

/// Where the ideal point `F*` comes from for distance-based methods.
#[derive(Debug, Clone, PartialEq)]
pub enum IdealMode {
    /// Componentwise objective minima. `None` until supplied or precomputed.
    Utopia(Option<ObjectiveVector>),
    /// Ideal values chosen by the decision maker.
    Goal(ObjectiveVector),
    /// The origin.
    Origin,
}

/// A fully configured scalarization: formula kind, weights, exponent, and
/// ideal-point mode.
#[derive(Debug, Clone)]
pub struct ScalarizationMethod {
    pub kind: MethodKind,
    pub weights: WeightVector,
    pub p: f64,
    pub ideal: IdealMode,
}

impl ScalarizationMethod {
    pub fn new(kind: MethodKind, weights: WeightVector) -> Self {
        ScalarizationMethod {
            kind,
            weights,
            p: 2.0,
            ideal: IdealMode::Utopia(None),
        }
    }

    pub fn with_p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }

    pub fn with_ideal(mut self, ideal: IdealMode) -> Self {
        self.ideal = ideal;
        self
    }

    /// Same formula with different weights; used by sweeps.
    pub fn with_weights(&self, weights: WeightVector) -> Self {
        ScalarizationMethod {
            kind: self.kind,
            weights,
            p: self.p,
            ideal: self.ideal.clone(),
        }
    }

    pub fn validate(&self, num_objectives: usize) -> Result<(), ScalarizeError> {
        if self.weights.len() != num_objectives {
            return Err(ScalarizeError::InvalidMethod(format!(
                "{} weights for {} objectives",
                self.weights.len(),
                num_objectives
            )));
        }
        if self.kind.uses_exponent() && self.p < 1.0 {
            return Err(ScalarizeError::InvalidMethod(format!(
                "exponent p must be >= 1, found {}",
                self.p
            )));
        }
        if let IdealMode::Goal(g) = &self.ideal {
            if g.len() != num_objectives {
                return Err(ScalarizeError::InvalidMethod(format!(
                    "goal vector has length {}, expected {}",
                    g.len(),
                    num_objectives
                )));
            }
        }
        Ok(())
    }

    /// The ideal point to measure distances from, if the kind needs one.
    pub(crate) fn ideal_point(&self, m: usize) -> Result<Vec<f64>, ScalarizeError> {
        match &self.ideal {
            IdealMode::Utopia(Some(v)) => Ok(v.as_slice().to_vec()),
            IdealMode::Utopia(None) => Err(ScalarizeError::MissingIdeal),
            IdealMode::Goal(v) => Ok(v.as_slice().to_vec()),
            IdealMode::Origin => Ok(vec![0.0; m]),
        }
    }
}
