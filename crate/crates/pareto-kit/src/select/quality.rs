use super::SelectError;
use crate::core::ObjectiveVector;

/// Min-max scaling factors of a reference front, used to compare fronts in
/// a unit-free space.
#[derive(Debug, Clone)]
pub struct FrontScale {
    lo: Vec<f64>,
    range: Vec<f64>,
}

impl FrontScale {
    pub fn from_reference(reference: &[ObjectiveVector]) -> Result<Self, SelectError> {
        if reference.is_empty() {
            return Err(SelectError::EmptyInput);
        }
        let m = reference[0].len();
        let mut lo = vec![f64::INFINITY; m];
        let mut hi = vec![f64::NEG_INFINITY; m];
        for v in reference {
            for (k, &val) in v.as_slice().iter().enumerate() {
                lo[k] = lo[k].min(val);
                hi[k] = hi[k].max(val);
            }
        }
        let range = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| if h - l > 0.0 { h - l } else { 1.0 })
            .collect();
        Ok(FrontScale { lo, range })
    }

    pub fn apply(&self, v: &ObjectiveVector) -> Vec<f64> {
        v.as_slice()
            .iter()
            .enumerate()
            .map(|(k, &val)| (val - self.lo[k]) / self.range[k])
            .collect()
    }
}

/// How far the worst-covered reference point sits from the candidate
/// front: the maximum over reference points of the distance to the nearest
/// candidate point, measured in the reference front's normalized space.
/// Large values mean the candidate front misses whole segments.
pub fn coverage_gap(
    reference: &[ObjectiveVector],
    candidate: &[ObjectiveVector],
) -> Result<f64, SelectError> {
    if candidate.is_empty() {
        return Err(SelectError::EmptyInput);
    }
    let scale = FrontScale::from_reference(reference)?;
    let scaled_candidate: Vec<Vec<f64>> = candidate.iter().map(|v| scale.apply(v)).collect();
    let mut worst = 0.0_f64;
    for r in reference {
        let rs = scale.apply(r);
        let nearest = scaled_candidate
            .iter()
            .map(|c| distance(&rs, c))
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(nearest);
    }
    Ok(worst)
}

/// The reference front's own granularity: the largest gap between
/// consecutive points after sorting by the first objective, in its own
/// normalized space. A candidate front with a coverage gap well above this
/// is missing segments rather than just sampling coarsely.
pub fn max_spacing(reference: &[ObjectiveVector]) -> Result<f64, SelectError> {
    if reference.len() < 2 {
        return Err(SelectError::TooFewPoints {
            needed: 2,
            got: reference.len(),
        });
    }
    let scale = FrontScale::from_reference(reference)?;
    let mut scaled: Vec<Vec<f64>> = reference.iter().map(|v| scale.apply(v)).collect();
    scaled.sort_by(|a, b| a.partial_cmp(b).expect("finite objectives"));
    Ok(scaled
        .windows(2)
        .map(|w| distance(&w[0], &w[1]))
        .fold(0.0, f64::max))
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ov(a: f64, b: f64) -> ObjectiveVector {
        ObjectiveVector::new(vec![a, b])
    }

    #[test]
    fn perfect_coverage_has_zero_gap() {
        let front = vec![ov(0.0, 1.0), ov(0.5, 0.5), ov(1.0, 0.0)];
        assert_eq!(coverage_gap(&front, &front).unwrap(), 0.0);
    }

    #[test]
    fn missing_segment_shows_up_as_a_gap() {
        let reference: Vec<ObjectiveVector> = (0..=10)
            .map(|i| ov(i as f64 / 10.0, 1.0 - i as f64 / 10.0))
            .collect();
        // Candidate covers only the endpoints: worst reference point is the
        // middle, sqrt(0.5^2 + 0.5^2) from either endpoint.
        let candidate = vec![ov(0.0, 1.0), ov(1.0, 0.0)];
        let gap = coverage_gap(&reference, &candidate).unwrap();
        assert!((gap - (0.5_f64 * 2.0f64.sqrt())).abs() < 1e-12, "gap {gap}");
        let spacing = max_spacing(&reference).unwrap();
        assert!((spacing - (0.1 * 2.0f64.sqrt())).abs() < 1e-12);
        assert!(gap > 3.0 * spacing);
    }

    #[test]
    fn normalization_makes_scale_irrelevant() {
        let reference: Vec<ObjectiveVector> = (0..=10)
            .map(|i| ov(1000.0 * i as f64 / 10.0, 1.0 - i as f64 / 10.0))
            .collect();
        let candidate = vec![ov(0.0, 1.0), ov(1000.0, 0.0)];
        let gap = coverage_gap(&reference, &candidate).unwrap();
        assert!((gap - (0.5_f64 * 2.0f64.sqrt())).abs() < 1e-12, "gap {gap}");
    }
}
