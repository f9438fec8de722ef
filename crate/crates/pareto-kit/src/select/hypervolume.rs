use super::SelectError;
use crate::core::ObjectiveVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// How hypervolume boxes are anchored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HvOrientation {
    /// Boxes span from the origin to each point, so bigger objective values
    /// mean bigger boxes. Undefined for negative objectives.
    OriginAnchored,
    /// The usual indicator: boxes span from each point up to a reference
    /// point that should weakly dominate nothing (e.g. the nadir).
    NadirReferenced,
}

/// Reference configuration for hypervolume computations.
#[derive(Debug, Clone)]
pub struct HypervolumeRef {
    pub orientation: HvOrientation,
    /// Reference point; ignored under [`HvOrientation::OriginAnchored`], where
    /// the origin is the anchor.
    pub reference: ObjectiveVector,
}

impl HypervolumeRef {
    pub fn origin(m: usize) -> Self {
        HypervolumeRef {
            orientation: HvOrientation::OriginAnchored,
            reference: ObjectiveVector::new(vec![0.0; m]),
        }
    }

    pub fn nadir(reference: ObjectiveVector) -> Self {
        assert!(
            reference.as_slice().iter().all(|v| v.is_finite()),
            "reference point must be finite"
        );
        HypervolumeRef {
            orientation: HvOrientation::NadirReferenced,
            reference,
        }
    }

    /// Box edge lengths for one point, or `None` when the point contributes
    /// nothing (outside the reference box).
    fn edges(&self, f: &[f64]) -> Result<Option<Vec<f64>>, SelectError> {
        match self.orientation {
            HvOrientation::OriginAnchored => {
                for (i, &v) in f.iter().enumerate() {
                    if v < 0.0 {
                        return Err(SelectError::NegativeObjective { index: i, value: v });
                    }
                }
                Ok(Some(f.to_vec()))
            }
            HvOrientation::NadirReferenced => {
                let g: Vec<f64> = f
                    .iter()
                    .zip(self.reference.as_slice())
                    .map(|(v, r)| r - v)
                    .collect();
                if g.iter().any(|e| *e <= 0.0) {
                    Ok(None)
                } else {
                    Ok(Some(g))
                }
            }
        }
    }
}

/// Volume of the single axis-aligned box between `f` and the reference
/// anchor. Under [`HvOrientation::NadirReferenced`] dimensions where `f`
/// exceeds the reference clamp to zero.
pub fn hypervolume_point(f: &ObjectiveVector, r: &HypervolumeRef) -> Result<f64, SelectError> {
    match r.edges(f.as_slice())? {
        Some(edges) => Ok(edges.iter().product()),
        None => Ok(0.0),
    }
}

/// Exact area of the union of per-point boxes for a bi-objective front,
/// computed by a sweep over the first coordinate.
pub fn hypervolume_set(front: &[ObjectiveVector], r: &HypervolumeRef) -> Result<f64, SelectError> {
    if front.is_empty() {
        return Err(SelectError::EmptyInput);
    }
    let m = front[0].len();
    if m != 2 {
        return Err(SelectError::Unsupported(format!(
            "exact hypervolume sweep is bi-objective; got M = {m} (use the Monte-Carlo fallback)"
        )));
    }
    let mut boxes: Vec<Vec<f64>> = Vec::new();
    for f in front {
        if let Some(edges) = r.edges(f.as_slice())? {
            boxes.push(edges);
        }
    }
    if boxes.is_empty() {
        return Ok(0.0);
    }
    // Union of origin-anchored boxes [0,a] x [0,b]: sweep a ascending, the
    // covered height over (a_(i-1), a_i] is the suffix maximum of b.
    boxes.sort_by(|p, q| p[0].partial_cmp(&q[0]).expect("finite objectives"));
    let mut suffix_max = vec![0.0_f64; boxes.len() + 1];
    for i in (0..boxes.len()).rev() {
        suffix_max[i] = suffix_max[i + 1].max(boxes[i][1]);
    }
    let mut area = 0.0;
    let mut prev_a = 0.0;
    for (i, b) in boxes.iter().enumerate() {
        area += (b[0] - prev_a) * suffix_max[i];
        prev_a = b[0];
    }
    Ok(area)
}

/// Monte-Carlo estimate of the union volume with its standard error; works
/// for any number of objectives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: usize,
}

pub fn hypervolume_set_monte_carlo(
    front: &[ObjectiveVector],
    r: &HypervolumeRef,
    samples: usize,
    seed: u64,
) -> Result<MonteCarloEstimate, SelectError> {
    if front.is_empty() {
        return Err(SelectError::EmptyInput);
    }
    assert!(samples > 0, "need at least one sample");
    let mut boxes: Vec<Vec<f64>> = Vec::new();
    for f in front {
        if let Some(edges) = r.edges(f.as_slice())? {
            boxes.push(edges);
        }
    }
    if boxes.is_empty() {
        return Ok(MonteCarloEstimate {
            value: 0.0,
            std_error: 0.0,
            samples,
        });
    }
    let m = boxes[0].len();
    // The union lives inside the box spanned by the componentwise maxima.
    let hull: Vec<f64> = (0..m)
        .map(|k| boxes.iter().map(|b| b[k]).fold(0.0_f64, f64::max))
        .collect();
    let hull_volume: f64 = hull.iter().product();
    if hull_volume == 0.0 {
        return Ok(MonteCarloEstimate {
            value: 0.0,
            std_error: 0.0,
            samples,
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    let mut u = vec![0.0_f64; m];
    for _ in 0..samples {
        for (k, h) in hull.iter().enumerate() {
            u[k] = rng.gen_range(0.0..*h);
        }
        if boxes
            .iter()
            .any(|b| u.iter().zip(b).all(|(uv, bv)| uv <= bv))
        {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    Ok(MonteCarloEstimate {
        value: hull_volume * p,
        std_error: hull_volume * (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
    })
}
