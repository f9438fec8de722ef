use super::{normalize_front, SelectError};
use crate::core::ObjectiveVector;
use crate::scalarize::WeightVector;

/// How pairwise objective differences translate to preference in
/// PROMETHEE.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PreferenceFunction {
    /// Step function: any strict improvement counts fully.
    Usual,
    /// `clamp(d / delta, 0, 1)` on normalized positive differences.
    Linear(f64),
}

impl Default for PreferenceFunction {
    fn default() -> Self {
        // Differences are range-normalized to [0, 1], so delta = 1 makes the
        // preference exactly the normalized improvement.
        PreferenceFunction::Linear(1.0)
    }
}

impl PreferenceFunction {
    fn apply(&self, d: f64) -> f64 {
        if d <= 0.0 {
            return 0.0;
        }
        match self {
            PreferenceFunction::Usual => 1.0,
            PreferenceFunction::Linear(delta) => (d / delta).clamp(0.0, 1.0),
        }
    }
}

/// Weights and preference function for the MCDM selectors. Without decision
/// maker input, equal preference for all objectives is the default.
#[derive(Debug, Clone)]
pub struct McdmConfig {
    pub weights: WeightVector,
    pub preference: PreferenceFunction,
}

impl McdmConfig {
    pub fn uniform(m: usize) -> Self {
        McdmConfig {
            weights: WeightVector::uniform(m),
            preference: PreferenceFunction::default(),
        }
    }

    pub fn with_weights(mut self, weights: WeightVector) -> Self {
        self.weights = weights;
        self
    }

    pub fn with_preference(mut self, preference: PreferenceFunction) -> Self {
        self.preference = preference;
        self
    }
}

/// TOPSIS outcome: the selected index, per-candidate closeness
/// coefficients, and any constant objectives that were dropped from the
/// distance computation.
#[derive(Debug, Clone)]
pub struct TopsisOutcome {
    pub index: usize,
    pub closeness: Vec<f64>,
    pub dropped_objectives: Vec<usize>,
}

/// Select by closeness to the normalized utopia point and distance from the
/// normalized nadir: `C = d- / (d+ + d-)`, largest wins, ties to the lowest
/// index. Constant objectives are dropped and reported.
pub fn topsis_select(
    front: &[ObjectiveVector],
    config: &McdmConfig,
) -> Result<TopsisOutcome, SelectError> {
    if front.is_empty() {
        return Err(SelectError::EmptyInput);
    }
    let m = front[0].len();
    assert_eq!(
        config.weights.len(),
        m,
        "weights must match objective count"
    );
    let raw: Vec<Vec<f64>> = front.iter().map(|v| v.as_slice().to_vec()).collect();
    let (normalized, dropped) = normalize_front(&raw);
    let w = config.weights.as_slice();

    // In normalized space the utopia point is all zeros and the nadir all
    // ones; distances are Euclidean over weighted coordinates.
    let closeness: Vec<f64> = normalized
        .iter()
        .map(|v| {
            let mut d_plus = 0.0;
            let mut d_minus = 0.0;
            for k in 0..m {
                if dropped.contains(&k) {
                    continue;
                }
                let coord = w[k] * v[k];
                d_plus += coord * coord;
                let gap = w[k] * (1.0 - v[k]);
                d_minus += gap * gap;
            }
            let (d_plus, d_minus) = (d_plus.sqrt(), d_minus.sqrt());
            if d_plus + d_minus == 0.0 {
                0.5
            } else {
                d_minus / (d_plus + d_minus)
            }
        })
        .collect();

    Ok(TopsisOutcome {
        index: argmax_lowest(&closeness),
        closeness,
        dropped_objectives: dropped,
    })
}

/// PROMETHEE outcome: the selected index and per-candidate net preference
/// flows, which always sum to zero.
#[derive(Debug, Clone)]
pub struct PrometheeOutcome {
    pub index: usize,
    pub net_flows: Vec<f64>,
}

/// Pairwise outranking: per-objective differences are range-normalized to
/// `[0, 1]`, turned into preferences `pi(a, x)`, averaged into positive and
/// negative flows, and combined as `phi = phi+ - phi-`. Largest net flow
/// wins, ties to the lowest index.
pub fn promethee_select(
    front: &[ObjectiveVector],
    config: &McdmConfig,
) -> Result<PrometheeOutcome, SelectError> {
    if front.len() < 2 {
        return Err(SelectError::TooFewPoints {
            needed: 2,
            got: front.len(),
        });
    }
    let m = front[0].len();
    assert_eq!(
        config.weights.len(),
        m,
        "weights must match objective count"
    );
    let raw: Vec<Vec<f64>> = front.iter().map(|v| v.as_slice().to_vec()).collect();
    let (normalized, _) = normalize_front(&raw);
    let w = config.weights.as_slice();
    let n = front.len();

    // pi[a][b]: how much a is preferred over b.
    let pi = |a: usize, b: usize| -> f64 {
        (0..m)
            .map(|k| {
                // Minimization: a is better when its value is smaller.
                let diff = normalized[b][k] - normalized[a][k];
                w[k] * config.preference.apply(diff)
            })
            .sum()
    };

    let mut net_flows = vec![0.0; n];
    for (a, flow) in net_flows.iter_mut().enumerate() {
        let mut plus = 0.0;
        let mut minus = 0.0;
        for b in 0..n {
            if a == b {
                continue;
            }
            plus += pi(a, b);
            minus += pi(b, a);
        }
        *flow = (plus - minus) / (n as f64 - 1.0);
    }

    Ok(PrometheeOutcome {
        index: argmax_lowest(&net_flows),
        net_flows,
    })
}

fn argmax_lowest(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ov(values: &[f64]) -> ObjectiveVector {
        ObjectiveVector::new(values.to_vec())
    }

    #[test]
    fn topsis_prefers_the_balanced_point() {
        let front = vec![ov(&[0.0, 1.0]), ov(&[0.2, 0.2]), ov(&[1.0, 0.0])];
        let out = topsis_select(&front, &McdmConfig::uniform(2)).unwrap();
        assert_eq!(out.index, 1);
        assert!(
            (out.closeness[1] - 0.8).abs() < 1e-12,
            "{:?}",
            out.closeness
        );
        assert!((out.closeness[0] - 0.5).abs() < 1e-12);
        assert!((out.closeness[2] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn topsis_symmetric_front_ties_to_lowest_index() {
        let front = vec![ov(&[0.0, 1.0]), ov(&[0.5, 0.5]), ov(&[1.0, 0.0])];
        let out = topsis_select(&front, &McdmConfig::uniform(2)).unwrap();
        for c in &out.closeness {
            assert!((c - 0.5).abs() < 1e-12);
        }
        assert_eq!(out.index, 0);
    }

    #[test]
    fn topsis_singleton_and_degenerate_objective() {
        let out = topsis_select(&[ov(&[3.0, 4.0])], &McdmConfig::uniform(2)).unwrap();
        assert_eq!(out.index, 0);
        assert_eq!(out.dropped_objectives, vec![0, 1]);

        // Second objective constant: dropped, selection driven by the first.
        let front = vec![ov(&[2.0, 7.0]), ov(&[1.0, 7.0]), ov(&[3.0, 7.0])];
        let out = topsis_select(&front, &McdmConfig::uniform(2)).unwrap();
        assert_eq!(out.dropped_objectives, vec![1]);
        assert_eq!(out.index, 1);
    }

    #[test]
    fn promethee_symmetric_pair_ties_to_lowest_index() {
        let front = vec![ov(&[0.0, 1.0]), ov(&[1.0, 0.0])];
        let cfg = McdmConfig::uniform(2).with_preference(PreferenceFunction::Usual);
        let out = promethee_select(&front, &cfg).unwrap();
        assert!(out.net_flows.iter().all(|phi| phi.abs() < 1e-15));
        assert_eq!(out.index, 0);
    }

    #[test]
    fn promethee_dominator_wins() {
        let front = vec![ov(&[0.0, 0.0]), ov(&[1.0, 1.0])];
        let cfg = McdmConfig::uniform(2).with_preference(PreferenceFunction::Usual);
        let out = promethee_select(&front, &cfg).unwrap();
        assert_eq!(out.index, 0);
        assert!(
            (out.net_flows[0] - 1.0).abs() < 1e-15,
            "{:?}",
            out.net_flows
        );
        assert!((out.net_flows[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn promethee_net_flows_sum_to_zero() {
        let front = vec![
            ov(&[0.1, 0.9]),
            ov(&[0.4, 0.3]),
            ov(&[0.2, 0.6]),
            ov(&[0.9, 0.05]),
        ];
        for pref in [PreferenceFunction::Usual, PreferenceFunction::default()] {
            let cfg = McdmConfig::uniform(2).with_preference(pref);
            let out = promethee_select(&front, &cfg).unwrap();
            let sum: f64 = out.net_flows.iter().sum();
            assert!(sum.abs() < 1e-12, "sum {sum}");
        }
    }

    #[test]
    fn promethee_rejects_singleton() {
        let err = promethee_select(&[ov(&[1.0, 2.0])], &McdmConfig::uniform(2)).unwrap_err();
        assert_eq!(err, SelectError::TooFewPoints { needed: 2, got: 1 });
    }
}
