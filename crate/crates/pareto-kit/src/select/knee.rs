use super::{normalize_front, SelectError};
use crate::core::ObjectiveVector;

/// Angle-based knee detection for bi-objective fronts.
///
/// After min-max normalization and sorting by `f_1`, the reflex angle at
/// each interior point `A_i` is `2 pi` minus the interior angle of the
/// polyline `A_(i-1) A_i A_(i+1)`; the point with the maximum reflex angle
/// is the knee. Endpoints are ineligible and ties go to the lowest index.
///
/// Returns an index into the input slice.
pub fn knee_by_angle(front: &[ObjectiveVector]) -> Result<usize, SelectError> {
    if front.is_empty() {
        return Err(SelectError::EmptyInput);
    }
    if front[0].len() != 2 {
        return Err(SelectError::Unsupported(format!(
            "angle-based knee detection is bi-objective; got M = {}",
            front[0].len()
        )));
    }
    if front.len() < 3 {
        return Err(SelectError::TooFewPoints {
            needed: 3,
            got: front.len(),
        });
    }

    let raw: Vec<Vec<f64>> = front.iter().map(|v| v.as_slice().to_vec()).collect();
    let (normalized, _) = normalize_front(&raw);

    // Sort positions by (f1, f2), remembering original indices.
    let mut order: Vec<usize> = (0..normalized.len()).collect();
    order.sort_by(|&a, &b| {
        normalized[a]
            .partial_cmp(&normalized[b])
            .expect("objective values are finite")
    });

    let mut best: Option<(f64, usize)> = None;
    for w in 1..order.len() - 1 {
        let prev = &normalized[order[w - 1]];
        let here = &normalized[order[w]];
        let next = &normalized[order[w + 1]];
        let reflex = 2.0 * std::f64::consts::PI - interior_angle(prev, here, next);
        let original = order[w];
        let better = match best {
            None => true,
            Some((r, i)) => reflex > r || (reflex == r && original < i),
        };
        if better {
            best = Some((reflex, original));
        }
    }
    Ok(best.expect("at least one interior point").1)
}

/// Reflex angle per point in input order; endpoints (after sorting by
/// `f_1`) score zero since they are ineligible.
pub(crate) fn reflex_angles(front: &[ObjectiveVector]) -> Result<Vec<f64>, SelectError> {
    if front.is_empty() {
        return Err(SelectError::EmptyInput);
    }
    if front[0].len() != 2 {
        return Err(SelectError::Unsupported(format!(
            "angle-based knee detection is bi-objective; got M = {}",
            front[0].len()
        )));
    }
    if front.len() < 3 {
        return Err(SelectError::TooFewPoints {
            needed: 3,
            got: front.len(),
        });
    }
    let raw: Vec<Vec<f64>> = front.iter().map(|v| v.as_slice().to_vec()).collect();
    let (normalized, _) = normalize_front(&raw);
    let mut order: Vec<usize> = (0..normalized.len()).collect();
    order.sort_by(|&a, &b| {
        normalized[a]
            .partial_cmp(&normalized[b])
            .expect("objective values are finite")
    });
    let mut angles = vec![0.0; front.len()];
    for w in 1..order.len() - 1 {
        let theta = interior_angle(
            &normalized[order[w - 1]],
            &normalized[order[w]],
            &normalized[order[w + 1]],
        );
        angles[order[w]] = 2.0 * std::f64::consts::PI - theta;
    }
    Ok(angles)
}

fn interior_angle(prev: &[f64], here: &[f64], next: &[f64]) -> f64 {
    let u = [prev[0] - here[0], prev[1] - here[1]];
    let v = [next[0] - here[0], next[1] - here[1]];
    let nu = (u[0] * u[0] + u[1] * u[1]).sqrt();
    let nv = (v[0] * v[0] + v[1] * v[1]).sqrt();
    if nu == 0.0 || nv == 0.0 {
        // Coincident neighbors carry no angle information; treat as flat.
        return std::f64::consts::PI;
    }
    let cos = ((u[0] * v[0] + u[1] * v[1]) / (nu * nv)).clamp(-1.0, 1.0);
    cos.acos()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ov(a: f64, b: f64) -> ObjectiveVector {
        ObjectiveVector::new(vec![a, b])
    }

    #[test]
    fn sharp_corner_is_the_knee() {
        // Interior angles: ~177 deg at (0.1, 0.5), ~111 deg at (0.2, 0.1).
        let front = vec![ov(0.0, 1.0), ov(0.1, 0.5), ov(0.2, 0.1), ov(1.0, 0.0)];
        assert_eq!(knee_by_angle(&front).unwrap(), 2);
    }

    #[test]
    fn collinear_front_returns_single_interior_point() {
        let front = vec![ov(0.0, 1.0), ov(0.5, 0.5), ov(1.0, 0.0)];
        assert_eq!(knee_by_angle(&front).unwrap(), 1);
    }

    #[test]
    fn maximum_reflex_angle_among_eight_points() {
        // A convex staircase with one pronounced corner at index 4.
        let front = vec![
            ov(0.00, 1.00),
            ov(0.05, 0.80),
            ov(0.10, 0.60),
            ov(0.15, 0.40),
            ov(0.20, 0.10),
            ov(0.45, 0.07),
            ov(0.70, 0.04),
            ov(1.00, 0.00),
        ];
        assert_eq!(knee_by_angle(&front).unwrap(), 4);
    }

    #[test]
    fn input_order_does_not_matter() {
        let mut front = vec![ov(0.0, 1.0), ov(0.1, 0.5), ov(0.2, 0.1), ov(1.0, 0.0)];
        front.swap(0, 2);
        assert_eq!(knee_by_angle(&front).unwrap(), 0, "knee follows its point");
    }

    #[test]
    fn error_cases() {
        assert_eq!(knee_by_angle(&[]).unwrap_err(), SelectError::EmptyInput);
        let two = vec![ov(0.0, 1.0), ov(1.0, 0.0)];
        assert_eq!(
            knee_by_angle(&two).unwrap_err(),
            SelectError::TooFewPoints { needed: 3, got: 2 }
        );
        let tri = vec![
            ObjectiveVector::new(vec![0.0, 1.0, 2.0]),
            ObjectiveVector::new(vec![1.0, 0.0, 2.0]),
            ObjectiveVector::new(vec![2.0, 2.0, 0.0]),
        ];
        assert!(matches!(
            knee_by_angle(&tri).unwrap_err(),
            SelectError::Unsupported(_)
        ));
    }
}
