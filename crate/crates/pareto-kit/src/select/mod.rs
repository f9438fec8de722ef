//! Pick a single "best" solution from a Pareto set when no decision maker
//! is available: angle-based knee point, hypervolume, TOPSIS, and
//! PROMETHEE. Also scores whole fronts for quality comparison.
//!
//! Knee angles, TOPSIS distances, and PROMETHEE differences are all
//! scale-sensitive, so objectives are min-max normalized over the candidate
//! front before any of them are computed.

mod hypervolume;
mod knee;
mod mcdm;
mod quality;

pub use hypervolume::{
    hypervolume_point, hypervolume_set, hypervolume_set_monte_carlo, HvOrientation, HypervolumeRef,
    MonteCarloEstimate,
};
pub use knee::knee_by_angle;
pub use mcdm::{
    promethee_select, topsis_select, McdmConfig, PreferenceFunction, PrometheeOutcome,
    TopsisOutcome,
};
pub use quality::{coverage_gap, max_spacing, FrontScale};

use crate::core::ObjectiveVector;
use std::fmt;

/// The selection methods the toolkit can apply to a front.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionMethod {
    Knee,
    Hypervolume,
    Topsis,
    Promethee,
}

impl SelectionMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SelectionMethod::Knee => "knee",
            SelectionMethod::Hypervolume => "hypervolume",
            SelectionMethod::Topsis => "topsis",
            SelectionMethod::Promethee => "promethee",
        }
    }

    pub fn from_name(name: &str) -> Option<SelectionMethod> {
        [
            SelectionMethod::Knee,
            SelectionMethod::Hypervolume,
            SelectionMethod::Topsis,
            SelectionMethod::Promethee,
        ]
        .into_iter()
        .find(|m| m.name() == name)
    }
}

/// Uniform result shape for all selectors: the winning index, its score,
/// and the per-candidate scores (reflex angle, box volume, closeness, or
/// net flow depending on the method).
#[derive(Debug, Clone)]
pub struct SelectionOutcome {
    pub index: usize,
    pub score: f64,
    pub per_candidate: Vec<f64>,
    /// Human-readable remark, e.g. dropped degenerate objectives.
    pub note: Option<String>,
}

/// Apply one selection method to a front of objective vectors. The
/// returned index always points into the input.
pub fn select_best(
    front: &[ObjectiveVector],
    method: SelectionMethod,
    config: &McdmConfig,
) -> Result<SelectionOutcome, SelectError> {
    if front.is_empty() {
        return Err(SelectError::EmptyInput);
    }
    match method {
        SelectionMethod::Knee => {
            let index = knee_by_angle(front)?;
            // Score candidates by their reflex angles for the report;
            // endpoints are ineligible and score zero.
            let per_candidate = knee::reflex_angles(front)?;
            Ok(SelectionOutcome {
                index,
                score: per_candidate[index],
                per_candidate,
                note: None,
            })
        }
        SelectionMethod::Hypervolume => {
            let r = HypervolumeRef::origin(front[0].len());
            let per_candidate: Vec<f64> = front
                .iter()
                .map(|f| hypervolume_point(f, &r))
                .collect::<Result<_, _>>()?;
            let mut index = 0;
            for (i, v) in per_candidate.iter().enumerate().skip(1) {
                if *v > per_candidate[index] {
                    index = i;
                }
            }
            Ok(SelectionOutcome {
                index,
                score: per_candidate[index],
                per_candidate,
                note: None,
            })
        }
        SelectionMethod::Topsis => {
            let out = topsis_select(front, config)?;
            let note = if out.dropped_objectives.is_empty() {
                None
            } else {
                Some(format!(
                    "dropped constant objectives: {:?}",
                    out.dropped_objectives
                ))
            };
            Ok(SelectionOutcome {
                index: out.index,
                score: out.closeness[out.index],
                per_candidate: out.closeness,
                note,
            })
        }
        SelectionMethod::Promethee => {
            let out = promethee_select(front, config)?;
            Ok(SelectionOutcome {
                index: out.index,
                score: out.net_flows[out.index],
                per_candidate: out.net_flows,
                note: None,
            })
        }
    }
}

/// Errors from the selection methods.
#[derive(Debug, Clone, PartialEq)]
pub enum SelectError {
    /// The method is not defined for this many objectives.
    Unsupported(String),
    /// The front is too small for the method.
    TooFewPoints {
        needed: usize,
        got: usize,
    },
    /// The origin-anchored hypervolume convention breaks on negative
    /// objective values.
    NegativeObjective {
        index: usize,
        value: f64,
    },
    EmptyInput,
}

impl fmt::Display for SelectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectError::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            SelectError::TooFewPoints { needed, got } => {
                write!(f, "front has {got} points, method needs at least {needed}")
            }
            SelectError::NegativeObjective { index, value } => write!(
                f,
                "objective {index} is negative ({value}); origin-anchored hypervolume undefined"
            ),
            SelectError::EmptyInput => write!(f, "empty front"),
        }
    }
}

impl std::error::Error for SelectError {}

/// Min-max normalize each objective over the front. Constant objectives
/// (zero range) map to 0 and their indices are reported.
pub(crate) fn normalize_front(vectors: &[Vec<f64>]) -> (Vec<Vec<f64>>, Vec<usize>) {
    let m = vectors.first().map_or(0, |v| v.len());
    let mut lo = vec![f64::INFINITY; m];
    let mut hi = vec![f64::NEG_INFINITY; m];
    for v in vectors {
        for (k, &val) in v.iter().enumerate() {
            lo[k] = lo[k].min(val);
            hi[k] = hi[k].max(val);
        }
    }
    let mut degenerate = Vec::new();
    for k in 0..m {
        if hi[k] - lo[k] == 0.0 {
            degenerate.push(k);
        }
    }
    let normalized = vectors
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .map(|(k, &val)| {
                    let range = hi[k] - lo[k];
                    if range == 0.0 {
                        0.0
                    } else {
                        (val - lo[k]) / range
                    }
                })
                .collect()
        })
        .collect();
    (normalized, degenerate)
}
